"""Level-one self-dual representations of tame division algebras.

A level-one (depth-zero) irreducible representation of the unit group of
a central division algebra of degree n over a p-adic field with residue
size q is parametrized, after restriction to the tame quotient, by a
pair (chi, w): chi a character of the unramified torus F_{q^f}^x for
some f | n that is regular (its Galois orbit under x -> x^q has size
exactly f), and w = +-1 a scalar at a uniformizer slot. The character
exponent a is recorded relative to a fixed abstract generator of the
cyclic group F_{q^f}^x, so only its orbit data matters.

The finite model is the metacyclic group C_{q^n-1} x| C_{2n} with the
torus generator x, conjugation by s = q (Frobenius), and t a normalizer
with t^n central. The representation is induced from (f, a', c) where
a' rescales a into Z/(q^n-1) and c encodes w as the scalar at t^f.

Self-duality (contragredient-invariance) of the induced representation
forces f = 2d even together with (q^d - 1) | a; for these characters the
orthogonal/symplectic sign has the closed form w, and an independent
oracle recomputes it as the Frobenius-Schur indicator of the finite
model. Both routes are exposed and never merged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import divisors, factorize
from .errors import InternalConsistencyError, UsageError
from .metacyclic import (
    MetacyclicGroup,
    SubgroupCharacter,
    fs_indicator,
    make_group,
    make_subgroup_character,
)

__all__ = [
    "TameCharacter",
    "SelfdualEntry",
    "prime_power_base",
    "make_tame_character",
    "is_regular",
    "is_selfdual_division",
    "sign_division_closed_form",
    "division_model",
    "sign_division_oracle",
    "enumerate_level1_selfdual",
    "construct_selfdual_of_dim",
]


def prime_power_base(q: int) -> tuple[int, int]:
    """(p, k) with q = p^k, p prime; UsageError if q is not a prime power."""
    if q < 2:
        raise UsageError(f"q must be a prime power >= 2, got {q}")
    fac = factorize(q)
    if len(fac) != 1:
        pretty = " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in fac
        )
        raise UsageError(f"q must be a prime power, got {q} = {pretty}")
    return fac[0]


@dataclass(frozen=True)
class TameCharacter:
    """A level-one character datum (q, f, a, w).

    q: residue field size (prime power). f: degree of the unramified
    torus F_{q^f}^x carrying the character. a: exponent of the character
    against a fixed generator, taken mod q^f - 1. w: the sign +-1 at the
    uniformizer slot.
    """

    q: int
    f: int
    a: int
    w: int

    @property
    def torus_order(self) -> int:
        return self.q**self.f - 1


def make_tame_character(q: int, f: int, a: int, w: int) -> TameCharacter:
    """Validated character datum; see TameCharacter for field meanings."""
    prime_power_base(q)
    if f < 1:
        raise UsageError(f"f must be >= 1, got {f}")
    order = q**f - 1
    if not 0 <= a < max(order, 1):
        raise UsageError(f"need 0 <= a < q^f - 1 = {order}, got a={a}")
    if w not in (1, -1):
        raise UsageError(f"w must be +1 or -1, got {w}")
    return TameCharacter(q, f, a, w)


def _orbit(a: int, q: int, order: int) -> list[int]:
    # orbit of a under multiplication by q mod order (order >= 1)
    if order == 1:
        return [0]
    a %= order
    out = [a]
    cur = (a * q) % order
    while cur != a:
        out.append(cur)
        cur = (cur * q) % order
    return out


def is_regular(chi: TameCharacter) -> bool:
    """Whether the Galois orbit of the character has full size f."""
    return len(_orbit(chi.a, chi.q, chi.torus_order)) == chi.f


def is_selfdual_division(chi: TameCharacter) -> bool:
    """Whether the associated representation is self-dual.

    Requires chi regular. The condition is f even, f = 2d, together with
    a * (q^d + 1) = 0 (mod q^f - 1), equivalently (q^d - 1) | a.
    """
    if not is_regular(chi):
        raise UsageError(f"self-duality needs a regular character, got {chi}")
    if chi.f % 2 != 0:
        return False
    d = chi.f // 2
    return (chi.a * (chi.q**d + 1)) % chi.torus_order == 0


def sign_division_closed_form(chi: TameCharacter) -> int:
    """Closed-form orthogonal/symplectic sign of the self-dual datum: w.

    A self-dual datum automatically has (q - 1) | a; that divisibility is
    verified here and a failure raises InternalConsistencyError, since it
    would falsify the closed form's derivation.
    """
    if not is_selfdual_division(chi):
        raise UsageError(f"closed-form sign needs a self-dual datum, got {chi}")
    if chi.torus_order > 1 and chi.a % (chi.q - 1) != 0:
        raise InternalConsistencyError(
            f"self-dual datum with a not divisible by q-1: {chi}"
        )
    return chi.w


def division_model(
    n: int, chi: TameCharacter
) -> tuple[MetacyclicGroup, SubgroupCharacter]:
    """The finite model of the degree-n division algebra representation.

    Returns (G, psi) with G = C_{q^n-1} x| C_{2n}, s = q, and psi the
    inducing datum (f, a * (q^n-1)/(q^f-1), c) where c = 0 encodes
    w = +1 and c = n/f encodes w = -1 (the scalar at t^f).
    Requires chi regular and f | n.
    """
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if n % chi.f != 0:
        raise UsageError(f"f = {chi.f} must divide n = {n}")
    if not is_regular(chi):
        raise UsageError(f"division model needs a regular character, got {chi}")
    m = chi.q**n - 1
    G = make_group(m, 2 * n, chi.q)
    a_big = (chi.a * (m // chi.torus_order)) % m if m > 1 else 0
    c = 0 if chi.w == 1 else n // chi.f
    return G, make_subgroup_character(G, chi.f, a_big, c)


def sign_division_oracle(n: int, chi: TameCharacter) -> int:
    """Oracle sign: the Frobenius-Schur indicator of the finite model.

    Independent of the closed form; a vanishing indicator for a self-dual
    datum raises InternalConsistencyError.
    """
    if not is_selfdual_division(chi):
        raise UsageError(f"oracle sign needs a self-dual datum, got {chi}")
    G, psi = division_model(n, chi)
    ind = fs_indicator(G, psi)
    if ind == 0:
        raise InternalConsistencyError(
            f"model of self-dual datum {chi} has vanishing indicator"
        )
    return ind


@dataclass(frozen=True)
class SelfdualEntry:
    """One enumerated self-dual representation with both sign routes."""

    chi: TameCharacter
    dim: int
    sign_closed: int
    sign_oracle: int


def enumerate_level1_selfdual(q: int, n: int) -> list[SelfdualEntry]:
    """All level-one self-dual representations for degree n over size q.

    One entry per (Galois orbit, w), ordered by (f ascending, minimal
    orbit exponent a ascending, w = +1 before w = -1). Every self-dual
    datum has f = 2d even and a a multiple of q^d - 1, so only the
    q^d + 1 multiples are scanned. Both sign routes are computed for
    every entry.
    """
    prime_power_base(q)
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    entries: list[SelfdualEntry] = []
    for f in divisors(n):
        if f % 2 != 0:
            continue
        d = f // 2
        order = q**f - 1
        step = q**d - 1
        for k in range(q**d + 1):
            a = step * k
            if a == 0:
                continue
            orbit = _orbit(a, q, order)
            if len(orbit) != f or min(orbit) < a:
                continue
            for w in (1, -1):
                chi = TameCharacter(q, f, a, w)
                entries.append(
                    SelfdualEntry(
                        chi=chi,
                        dim=f,
                        sign_closed=sign_division_closed_form(chi),
                        sign_oracle=sign_division_oracle(n, chi),
                    )
                )
    return entries


def construct_selfdual_of_dim(q: int, n: int, f: int) -> TameCharacter:
    """A canonical self-dual datum of torus degree f: a = q^(f/2) - 1, w = +1.

    Requires f even and f | n. The choice is always regular and
    self-dual; both are re-verified and a failure raises
    InternalConsistencyError.
    """
    prime_power_base(q)
    if f < 2 or f % 2 != 0:
        raise UsageError(f"f must be even and >= 2, got {f}")
    if n % f != 0:
        raise UsageError(f"f = {f} must divide n = {n}")
    chi = make_tame_character(q, f, q ** (f // 2) - 1, 1)
    if not is_regular(chi) or not is_selfdual_division(chi):
        raise InternalConsistencyError(
            f"canonical construction failed regularity or self-duality: {chi}"
        )
    return chi
