"""Command-line interface.

Four subcommands: enumerate (all level-one self-dual representations
over ranges of q and n, with both sign routes per row), verify-flip
(mechanical check of the even-degree sign flip under one or both
twisting recipes), sign (full report for a single datum), and
product-check (product of signs must be +1).

Output is CSV (default) or JSON, written to stdout, and is byte-for-byte
deterministic: rows are canonically ordered, no timestamps or machine
data appear, and --jobs only parallelizes independent (q, n) cells
before a canonical merge. Schema details live in SCHEMA.md next to this
package; every payload carries schema_version and the generator
convention for character exponents.

Exit codes: 0 success (including reported SZ inconsistencies and failed
product checks); 1 usage error; 2 internal consistency failure; 3 flip
falsification under recipe PR.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cyclotomic import factorize
from .division import (
    division_model,
    enumerate_level1_selfdual,
    is_regular,
    is_selfdual_division,
    make_tame_character,
    sign_division_closed_form,
)
from .errors import InternalConsistencyError, UsageError
from .metacyclic import det_exponents, fs_indicator
from .rationality import character_field
from .signs import verify_flip
from .weil import sign_weil_closed_form, weil_model

SCHEMA_VERSION = 1
GENERATOR_CONVENTION = "abstract-unramified-generator"

ENUMERATE_COLUMNS = (
    "q", "n", "f", "e", "a", "w",
    "regular", "selfdual", "sign_closed", "sign_oracle", "agree",
)
FLIP_COLUMNS = (
    "q", "n", "recipe", "f", "e", "a", "w",
    "sign_closed", "sign_oracle", "param_w", "param_sign",
    "predicted", "consistent",
)
SIGN_COLUMNS = (
    "side", "q", "n", "f", "a", "w", "regular", "selfdual",
    "sign_closed", "sign_oracle", "det_x", "det_t", "scalar_tf",
    "field_conductor", "field_degree",
)
PRODUCT_COLUMNS = ("count", "product", "verdict")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one subcommand plus its arguments."""

    command: str
    q_values: tuple[int, ...] = ()
    n_values: tuple[int, ...] = ()
    recipe: str = "PR"
    fmt: str = "csv"
    jobs: int = 1
    side: str = ""
    q: int = 0
    n: int = 0
    f: int = 0
    a: int = 0
    w: int = 0
    signs: tuple[int, ...] = ()


# ---------------------------------------------------------------------------
# parsing helpers


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorize(q)) == 1


def parse_range(text: str, name: str) -> tuple[int, ...]:
    """Parse "k" or "lo..hi" (inclusive) into a tuple of ints."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise UsageError(f"empty range for {name}: {text}")
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise UsageError(f"cannot parse {name} range {text!r}; use k or lo..hi")


def expand_q_range(text: str) -> tuple[int, ...]:
    """Prime powers in the range; a single non-prime-power is an error."""
    values = parse_range(text, "q")
    if len(values) == 1:
        q = values[0]
        if not _is_prime_power(q):
            pretty = " * ".join(
                f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(q)
            ) if q >= 2 else str(q)
            raise UsageError(f"q must be a prime power, got {q} = {pretty}")
        return values
    kept = tuple(q for q in values if _is_prime_power(q))
    if not kept:
        raise UsageError(f"no prime powers in q range {text!r}")
    return kept


def expand_n_range(text: str) -> tuple[int, ...]:
    values = parse_range(text, "n")
    if any(n < 1 for n in values):
        raise UsageError(f"n must be >= 1, got range {text!r}")
    return values


def parse_sign(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise UsageError(f"signs must be +1 or -1, got {text!r}")


# ---------------------------------------------------------------------------
# formatting helpers


def fmt_sign(v: int) -> str:
    return "+1" if v == 1 else "-1"


def fmt_bool(v: bool) -> str:
    return "true" if v else "false"


def fmt_root(conductor: int, exponent: int) -> str:
    """A root of unity as +1, -1, or zeta{M}^{k}."""
    k = exponent % conductor
    if k == 0:
        return "+1"
    if 2 * k == conductor:
        return "-1"
    return f"zeta{conductor}^{k}"


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return fmt_bool(value)
    if value is None:
        return ""
    return str(value)


def render(fmt: str, command: str, columns: tuple[str, ...], rows: list[dict]) -> str:
    """Render rows deterministically as CSV or JSON."""
    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "generator_convention": GENERATOR_CONVENTION,
            "command": command,
            "rows": [{col: row[col] for col in columns} for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    lines = [
        f"# schema_version={SCHEMA_VERSION}",
        f"# generator_convention={GENERATOR_CONVENTION}",
        ",".join(columns),
    ]
    for row in rows:
        lines.append(",".join(_csv_cell(row[col]) for col in columns))
    return "\n".join(lines) + "\n"


def _csvify_signs(row: dict, keys: tuple[str, ...]) -> dict:
    out = dict(row)
    for key in keys:
        if isinstance(out.get(key), int):
            out[key] = fmt_sign(out[key])
    return out


# ---------------------------------------------------------------------------
# subcommands


def _enumerate_cell(args: tuple[int, int]) -> list[dict]:
    q, n = args
    rows = []
    for entry in enumerate_level1_selfdual(q, n):
        chi = entry.chi
        regular = is_regular(chi)
        selfdual = regular and is_selfdual_division(chi)
        if not (regular and selfdual):
            raise InternalConsistencyError(
                f"enumeration emitted an invalid datum: {chi}"
            )
        rows.append(
            {
                "q": q,
                "n": n,
                "f": chi.f,
                "e": n // chi.f,
                "a": chi.a,
                "w": chi.w,
                "regular": regular,
                "selfdual": selfdual,
                "sign_closed": entry.sign_closed,
                "sign_oracle": entry.sign_oracle,
                "agree": entry.sign_closed == entry.sign_oracle,
            }
        )
    return rows


def _map_cells(tasks: list, worker, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def cmd_enumerate(config: RunConfig) -> tuple[int, str]:
    tasks = [(q, n) for q in sorted(config.q_values) for n in sorted(config.n_values)]
    cell_rows = _map_cells(tasks, _enumerate_cell, config.jobs)
    rows = [row for cell in cell_rows for row in cell]
    if config.fmt == "csv":
        rows = [
            _csvify_signs(row, ("w", "sign_closed", "sign_oracle"))
            for row in rows
        ]
    return 0, render(config.fmt, "enumerate", ENUMERATE_COLUMNS, rows)


def _flip_cell(args: tuple[int, int, str]) -> list[dict]:
    q, n, recipe = args
    report = verify_flip(q, n, recipe)
    return [
        {
            "q": row.q,
            "n": row.n,
            "recipe": row.recipe,
            "f": row.f,
            "e": row.e,
            "a": row.a,
            "w": row.w,
            "sign_closed": row.sign_closed,
            "sign_oracle": row.sign_oracle,
            "param_w": row.param_w,
            "param_sign": row.param_sign,
            "predicted": row.predicted,
            "consistent": row.consistent,
        }
        for row in report.rows
    ]


def cmd_verify_flip(config: RunConfig) -> tuple[int, str]:
    recipes = ("PR", "SZ") if config.recipe == "both" else (config.recipe,)
    tasks = [
        (q, n, recipe)
        for q in sorted(config.q_values)
        for n in sorted(config.n_values)
        for recipe in recipes
    ]
    cell_rows = _map_cells(tasks, _flip_cell, config.jobs)
    rows = [row for cell in cell_rows for row in cell]
    code = 0
    if any(row["recipe"] == "PR" and not row["consistent"] for row in rows):
        code = 3
    if config.fmt == "csv":
        rows = [
            _csvify_signs(
                row,
                ("w", "sign_closed", "sign_oracle", "param_w", "param_sign", "predicted"),
            )
            for row in rows
        ]
    return code, render(config.fmt, "verify-flip", FLIP_COLUMNS, rows)


def cmd_sign(config: RunConfig) -> tuple[int, str]:
    chi = make_tame_character(config.q, config.f, config.a, config.w)
    if not is_regular(chi):
        raise UsageError(f"character is not regular: {chi}")
    selfdual = is_selfdual_division(chi)
    if config.side == "division":
        n = config.n
        G, psi = division_model(n, chi)
        closed = sign_division_closed_form(chi) if selfdual else None
    else:
        n = None
        G, psi = weil_model(chi)
        closed = sign_weil_closed_form(chi) if selfdual else None
    oracle = fs_indicator(G, psi)
    (Mx, kx), (Mt, kt) = det_exponents(G, psi)
    field_info = character_field(G, psi)
    row = {
        "side": config.side,
        "q": config.q,
        "n": n,
        "f": config.f,
        "a": config.a,
        "w": config.w,
        "regular": True,
        "selfdual": selfdual,
        "sign_closed": closed,
        "sign_oracle": oracle,
        "det_x": fmt_root(Mx, kx),
        "det_t": fmt_root(Mt, kt),
        "scalar_tf": fmt_root(G.N // psi.f, psi.c),
        "field_conductor": field_info.conductor,
        "field_degree": field_info.degree,
    }
    if config.fmt == "csv":
        row = _csvify_signs(row, ("w", "sign_closed"))
        row["sign_oracle"] = "0" if oracle == 0 else fmt_sign(oracle)
    return 0, render(config.fmt, "sign", SIGN_COLUMNS, [row])


def cmd_product_check(config: RunConfig) -> tuple[int, str]:
    from .signs import product_check

    ok = product_check(config.signs)
    product = 1
    for s in config.signs:
        product *= s
    row = {
        "count": len(config.signs),
        "product": fmt_sign(product) if config.fmt == "csv" else product,
        "verdict": "ok" if ok else "violated",
    }
    return 0, render(config.fmt, "product-check", PRODUCT_COLUMNS, [row])


# ---------------------------------------------------------------------------
# argument parsing and dispatch


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 1, not argparse's 2
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tamesigns",
        description=(
            "Exact orthogonal/symplectic sign calculus for level-one "
            "self-dual representations of tame division algebras and "
            "their Weil parameters."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, jobs=True):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if jobs:
            p.add_argument("--jobs", type=int, default=1)

    p_enum = sub.add_parser(
        "enumerate", help="all level-one self-dual representations over ranges"
    )
    p_enum.add_argument("--q", required=True, help="prime power or range lo..hi")
    p_enum.add_argument("--n", required=True, help="degree or range lo..hi")
    add_common(p_enum)

    p_flip = sub.add_parser(
        "verify-flip", help="verify the even-degree sign flip over ranges"
    )
    p_flip.add_argument("--q", required=True, help="prime power or range lo..hi")
    p_flip.add_argument("--n", required=True, help="degree or range lo..hi")
    p_flip.add_argument("--recipe", choices=("PR", "SZ", "both"), default="PR")
    add_common(p_flip)

    p_sign = sub.add_parser("sign", help="full sign report for one datum")
    p_sign.add_argument("--side", choices=("division", "weil"), required=True)
    p_sign.add_argument("--q", type=int, required=True)
    p_sign.add_argument("--n", type=int, default=None)
    p_sign.add_argument("--f", type=int, required=True)
    p_sign.add_argument("--a", type=int, required=True)
    p_sign.add_argument("--w", required=True, help="+1 or -1")
    add_common(p_sign, jobs=False)

    p_prod = sub.add_parser("product-check", help="check a product of signs is +1")
    p_prod.add_argument("signs", nargs="+", help="signs, each +1 or -1")
    add_common(p_prod, jobs=False)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command in ("enumerate", "verify-flip"):
        jobs = args.jobs
        if jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {jobs}")
        return RunConfig(
            command=args.command,
            q_values=expand_q_range(args.q),
            n_values=expand_n_range(args.n),
            recipe=getattr(args, "recipe", "PR"),
            fmt=args.format,
            jobs=jobs,
        )
    if args.command == "sign":
        if args.side == "division":
            if args.n is None:
                raise UsageError("sign --side division requires --n")
            n = args.n
        else:
            if args.n is not None:
                raise UsageError("sign --side weil takes no --n")
            n = 0
        return RunConfig(
            command="sign",
            side=args.side,
            q=args.q,
            n=n,
            f=args.f,
            a=args.a,
            w=parse_sign(args.w),
            fmt=args.format,
        )
    return RunConfig(
        command="product-check",
        signs=tuple(parse_sign(s) for s in args.signs),
        fmt=args.format,
    )


DISPATCH = {
    "enumerate": cmd_enumerate,
    "verify-flip": cmd_verify_flip,
    "sign": cmd_sign,
    "product-check": cmd_product_check,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = config_from_args(args)
        code, text = DISPATCH[config.command](config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
