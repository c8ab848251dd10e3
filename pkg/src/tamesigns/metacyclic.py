"""Metacyclic groups and their induced characters, exactly.

The groups handled here are split metacyclic:

    G = C_m x| C_N = < x, t | x^m = 1, t^N = 1, t x t^-1 = x^s >

with s^N = 1 (mod m). Elements are written x^i t^j with 0 <= i < m and
0 <= j < N, multiplied by (i1, j1)(i2, j2) = (i1 + s^j1 * i2, j1 + j2).

Every irreducible representation is induced: pick an orbit O of
multiplication by s on Z/m, let f = |O| and a = min(O), pick c with
0 <= c < N/f, and induce the character psi of S = < x, t^f > given by
psi(x) = zeta_m^a, psi(t^f) = zeta_{N/f}^c up to G. This enumerates the
irreducibles exactly once each, and sum of (dim)^2 = m*N.

Character sums over G (Frobenius-Schur, norms, twisted pairings) are
evaluated by collapsing the sum over the normal subgroup <x> with the
complete-sum identity sum_i zeta_m^(K*i) = m*[K == 0 mod m]. The
collapse is an exact integer identity, not an approximation; the test
suite re-derives the same quantities by literal sums over all group
elements on small groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterator, NamedTuple

from .cyclotomic import CycInt, cyc_root, cyc_zero, root_sum, try_as_integer
from .errors import InternalConsistencyError, UsageError

__all__ = [
    "MetacyclicGroup",
    "GroupElem",
    "SubgroupCharacter",
    "InvolutionSpec",
    "make_group",
    "elements",
    "elem_mul",
    "elem_inv",
    "orbit_of",
    "make_subgroup_character",
    "enumerate_irreps",
    "induced_character",
    "is_irreducible_induced",
    "fs_indicator",
    "fs_indicator_raw",
    "involution_count",
    "det_at_generators",
    "det_exponents",
    "scalar_at_torus_power",
    "matrix_model",
    "matrix_of",
    "make_involution",
    "identity_involution",
    "apply_involution",
    "theta_sign",
]


@dataclass(frozen=True)
class MetacyclicGroup:
    """The group C_m x| C_N with conjugation exponent s."""

    m: int
    N: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.N < 1:
            raise UsageError(f"need m >= 1 and N >= 1, got m={self.m}, N={self.N}")
        object.__setattr__(self, "s", self.s % self.m)
        if pow(self.s, self.N, self.m) != 1 % self.m:
            raise UsageError(
                f"s^N must be 1 mod m: s={self.s}, N={self.N}, m={self.m}"
            )

    @property
    def order(self) -> int:
        return self.m * self.N

    def s_pow(self, k: int) -> int:
        """s^k mod m for any integer k (negatives use s^-1 = s^(N-1))."""
        k %= self.N
        return pow(self.s, k, self.m)


class GroupElem(NamedTuple):
    """The element x^i t^j, with 0 <= i < m and 0 <= j < N."""

    i: int
    j: int


def make_group(m: int, N: int, s: int) -> MetacyclicGroup:
    """Construct C_m x| C_N with t x t^-1 = x^s; requires s^N = 1 mod m."""
    return MetacyclicGroup(m, N, s)


def elements(G: MetacyclicGroup) -> Iterator[GroupElem]:
    """All m*N elements in lexicographic (i, j) order."""
    for i in range(G.m):
        for j in range(G.N):
            yield GroupElem(i, j)


def elem_mul(G: MetacyclicGroup, g: GroupElem, h: GroupElem) -> GroupElem:
    """Group product: (i1, j1)(i2, j2) = (i1 + s^j1 * i2, j1 + j2)."""
    return GroupElem(
        (g.i + G.s_pow(g.j) * h.i) % G.m,
        (g.j + h.j) % G.N,
    )


def elem_inv(G: MetacyclicGroup, g: GroupElem) -> GroupElem:
    """Group inverse: (i, j)^-1 = (-s^-j * i, -j)."""
    return GroupElem((-G.s_pow(-g.j) * g.i) % G.m, (-g.j) % G.N)


def orbit_of(G: MetacyclicGroup, a: int) -> list[int]:
    """Orbit of a mod m under multiplication by s, starting at a."""
    a %= G.m
    out = [a]
    cur = (a * G.s) % G.m
    while cur != a:
        out.append(cur)
        cur = (cur * G.s) % G.m
    return out


class SubgroupCharacter(NamedTuple):
    """Inducing data (f, a, c) for an induced representation of G.

    The subgroup is S = < x, t^f > with f | N; the character sends
    x -> zeta_m^a and t^f -> zeta_{N/f}^c. Well-definedness requires
    a * (s^f - 1) = 0 (mod m), i.e. the orbit size of a divides f.
    The induced representation has dimension f and is irreducible
    exactly when the orbit size of a equals f.
    """

    f: int
    a: int
    c: int


def make_subgroup_character(
    G: MetacyclicGroup, f: int, a: int, c: int
) -> SubgroupCharacter:
    """Validated inducing data; see SubgroupCharacter for the conditions."""
    if f < 1 or G.N % f != 0:
        raise UsageError(f"f must divide N={G.N}, got f={f}")
    a %= G.m
    if not 0 <= c < G.N // f:
        raise UsageError(f"need 0 <= c < N/f = {G.N // f}, got c={c}")
    if (a * (pow(G.s, f, G.m) - 1)) % G.m != 0:
        raise UsageError(
            f"a={a} is not fixed by t^f: a*(s^f - 1) != 0 mod {G.m}"
        )
    return SubgroupCharacter(f, a, c)


def enumerate_irreps(G: MetacyclicGroup) -> list[SubgroupCharacter]:
    """All irreducible representations of G, one descriptor each.

    Descriptors are sorted by (f, a, c), with a the minimum of its orbit.
    The list has sum of f^2 equal to |G|.
    """
    seen = bytearray(G.m)
    orbits: list[tuple[int, int]] = []
    for a in range(G.m):
        if seen[a]:
            continue
        size = 0
        cur = a
        while not seen[cur]:
            seen[cur] = 1
            size += 1
            cur = (cur * G.s) % G.m
        orbits.append((size, a))
    out = [
        SubgroupCharacter(f, a, c)
        for f, a in orbits
        for c in range(G.N // f)
    ]
    out.sort()
    return out


def _char_conductor(G: MetacyclicGroup, psi: SubgroupCharacter) -> int:
    return lcm(G.m, G.N // psi.f)


def induced_character(
    G: MetacyclicGroup, psi: SubgroupCharacter, g: GroupElem
) -> CycInt:
    """Value of the induced character at x^i t^j.

    Zero unless f | j; otherwise
    zeta_{N/f}^(c*j/f) * sum_rho zeta_m^(a * s^rho * i), rho over [0, f).
    The result lives at conductor lcm(m, N/f).
    """
    f, a, c = psi
    Nf = G.N // f
    M0 = _char_conductor(G, psi)
    j = g.j % G.N
    if j % f != 0:
        return cyc_zero(M0)
    t_exp = ((c * (j // f)) % Nf) * (M0 // Nf)
    counts: dict[int, int] = {}
    cur = a % G.m
    step_m = M0 // G.m
    for _ in range(f):
        e = ((cur * g.i) % G.m) * step_m + t_exp
        e %= M0
        counts[e] = counts.get(e, 0) + 1
        cur = (cur * G.s) % G.m
    return root_sum(M0, counts)


def is_irreducible_induced(G: MetacyclicGroup, psi: SubgroupCharacter) -> bool:
    """Whether the induced representation is irreducible.

    Two routes, checked against each other on every call: the norm-square
    sum over G, collapsed to m * (N/f) * #{(rho, rho') : a s^rho = a s^rho'},
    must equal |G| exactly when the orbit of a has size f.
    """
    f, a, _ = psi
    orbit = orbit_of(G, a)
    pow_list = [(a * G.s_pow(r)) % G.m for r in range(f)]
    pairs = sum(1 for p in pow_list for q in pow_list if p == q)
    norm_raw = G.m * (G.N // f) * pairs
    by_norm = norm_raw == G.order
    by_orbit = len(orbit) == f
    if by_norm != by_orbit:
        raise InternalConsistencyError(
            f"norm route and orbit route disagree for psi={psi} on {G}"
        )
    return by_orbit


def _require_irreducible(G: MetacyclicGroup, psi: SubgroupCharacter) -> None:
    if not is_irreducible_induced(G, psi):
        raise UsageError(f"psi={psi} does not induce irreducibly on {G}")


def _fs_root_counts(
    G: MetacyclicGroup, psi: SubgroupCharacter
) -> dict[int, int]:
    # Collapsed Frobenius-Schur sum: (x^i t^j)^2 = x^(i(1+s^j)) t^(2j).
    # Summing over i kills every j with a*(1+s^j) != 0 (mod m) and
    # contributes m*f * psi(t^(2j mod N)) otherwise. Returned counts are
    # exponents of zeta_{N/f} for the surviving j, NOT yet scaled by m*f.
    f, a, c = psi
    Nf = G.N // f
    counts: dict[int, int] = {}
    sj = 1 % G.m
    for j in range(G.N):
        J = (2 * j) % G.N
        if J % f == 0 and (a * (1 + sj)) % G.m == 0:
            e = (c * (J // f)) % Nf
            counts[e] = counts.get(e, 0) + 1
        sj = (sj * G.s) % G.m
    return counts


def fs_indicator(G: MetacyclicGroup, psi: SubgroupCharacter) -> int:
    """Frobenius-Schur indicator of the induced irreducible: -1, 0 or +1.

    The exact sum of character values at squares must equal |G| * c with
    c in {-1, 0, +1}; any other value raises InternalConsistencyError
    rather than being rounded.
    """
    _require_irreducible(G, psi)
    f = psi.f
    Nf = G.N // f
    partial = try_as_integer(root_sum(Nf, _fs_root_counts(G, psi)))
    if partial is None:
        raise InternalConsistencyError(
            f"FS sum for psi={psi} on {G} is not a rational integer"
        )
    # full sum = m * f * partial; indicator = full / (m * N)
    num = partial * f
    if num % G.N != 0:
        raise InternalConsistencyError(
            f"FS sum for psi={psi} on {G} is not |G| * c: partial={partial}"
        )
    ind = num // G.N
    if ind not in (-1, 0, 1):
        raise InternalConsistencyError(
            f"FS indicator for psi={psi} on {G} out of range: {ind}"
        )
    return ind


def fs_indicator_raw(G: MetacyclicGroup, psi: SubgroupCharacter) -> CycInt:
    """The unnormalized Frobenius-Schur sum, a CycInt at conductor N/f.

    Equals |G| times the indicator; exposed so tests can compare the raw
    exact sum against literal element-by-element evaluation.
    """
    _require_irreducible(G, psi)
    counts = _fs_root_counts(G, psi)
    scale = G.m * psi.f
    return root_sum(G.N // psi.f, {e: scale * c for e, c in counts.items()})


def involution_count(G: MetacyclicGroup) -> int:
    """Number of solutions of g^2 = identity, by exact closed form.

    g = x^i t^j squares to x^(i(1+s^j)) t^(2j); j must satisfy 2j = 0
    (mod N) and then i ranges over the gcd(1 + s^j, m) solutions of
    (1 + s^j) i = 0 (mod m).
    """
    total = 0
    js = [0] + ([G.N // 2] if G.N % 2 == 0 else [])
    for j in js:
        K = (1 + G.s_pow(j)) % G.m
        total += gcd(K, G.m) if K else G.m
    return total


def _orbit_sum(G: MetacyclicGroup, psi: SubgroupCharacter) -> int:
    # sum over rho in [0, f) of a * s^rho, mod m; equals the det exponent
    # of pi(x) since the diagonal of pi(x) carries the orbit of a.
    f, a, _ = psi
    total = 0
    cur = a % G.m
    for _ in range(f):
        total += cur
        cur = (cur * G.s) % G.m
    return total % G.m


def det_exponents(
    G: MetacyclicGroup, psi: SubgroupCharacter
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Determinants of pi(x) and pi(t) as (conductor, exponent) pairs.

    det pi(x) = zeta_m^(sum of the orbit of a); det pi(t) =
    (-1)^(f-1) * zeta_{N/f}^c, returned at conductor lcm(2, N/f).
    """
    f, _, c = psi
    Nf = G.N // f
    M1 = lcm(2, Nf)
    kx = _orbit_sum(G, psi)
    kt = (((f - 1) % 2) * (M1 // 2) + (c % Nf) * (M1 // Nf)) % M1
    return (G.m, kx), (M1, kt)


def det_at_generators(
    G: MetacyclicGroup, psi: SubgroupCharacter
) -> tuple[CycInt, CycInt]:
    """Determinants of pi(x) and pi(t) as canonical values."""
    (Mx, kx), (Mt, kt) = det_exponents(G, psi)
    return cyc_root(Mx, kx), cyc_root(Mt, kt)


def scalar_at_torus_power(
    G: MetacyclicGroup, psi: SubgroupCharacter, k: int
) -> CycInt:
    """The scalar by which pi(t^k) acts; requires f | k.

    pi(t^f) is the scalar psi(t^f) = zeta_{N/f}^c, so pi(t^k) is the
    scalar zeta_{N/f}^(c * k/f) whenever f divides k.
    """
    f, _, c = psi
    K = k % G.N
    if K % f != 0:
        raise UsageError(f"pi(t^{k}) is not scalar: f={f} does not divide {k}")
    Nf = G.N // f
    return cyc_root(Nf, (c * (K // f)) % Nf)


# ---------------------------------------------------------------------------
# explicit monomial matrices


def matrix_of(
    G: MetacyclicGroup, psi: SubgroupCharacter, g: GroupElem
) -> list[list[CycInt]]:
    """The monomial matrix of x^i t^j on the basis e_0 .. e_{f-1}.

    The model: pi(x) e_rho = zeta_m^(a * s^-rho) e_rho, pi(t) e_rho =
    e_{rho+1} for rho < f-1 and pi(t) e_{f-1} = psi(t^f) e_0. Entries
    live at conductor lcm(m, N/f).
    """
    f, a, c = psi
    Nf = G.N // f
    M0 = _char_conductor(G, psi)
    step_m = M0 // G.m
    step_t = M0 // Nf
    i, j = g.i % G.m, g.j % G.N
    sinv = G.s_pow(-1)
    sinv_pows = [pow(sinv, r, G.m) for r in range(f)]
    rows = [[cyc_zero(M0) for _ in range(f)] for _ in range(f)]
    for alpha in range(f):
        mu = (alpha + j) % f
        k = (alpha + j) // f
        e = (((i * a * sinv_pows[mu]) % G.m) * step_m + ((c * k) % Nf) * step_t) % M0
        rows[mu][alpha] = cyc_root(M0, e)
    return rows


def matrix_model(
    G: MetacyclicGroup, psi: SubgroupCharacter
) -> dict[str, list[list[CycInt]]]:
    """Matrices of the two generators x and t for the induced model."""
    return {
        "x": matrix_of(G, psi, GroupElem(1 % G.m, 0)),
        "t": matrix_of(G, psi, GroupElem(0, 1 % G.N)),
    }


# ---------------------------------------------------------------------------
# involutions of G and twisted orthogonality


@dataclass(frozen=True)
class InvolutionSpec:
    """An order-<=2 automorphism theta(x) = x^u, theta(t) = x^v t^w."""

    u: int
    v: int
    w: int


def _twisted_geo(G: MetacyclicGroup, w: int, j: int) -> int:
    # sum over l in [0, j) of s^(w*l), mod m.
    total = 0
    for l in range(j):
        total += G.s_pow(w * l)
    return total % G.m


def make_involution(G: MetacyclicGroup, u: int, v: int, w: int) -> InvolutionSpec:
    """Validated involution data; raises UsageError unless theta is an
    automorphism with theta^2 = identity.

    Conditions, with all congruences mod m unless noted:
    u^2 = 1; w^2 = 1 (mod N); u*s^w = u*s (theta respects t x t^-1 = x^s);
    v * sum_{l<N} s^(w l) = 0 (theta(t)^N = 1);
    u*v + v * sum_{l<w} s^(w l) = 0 (theta^2(t) = t).
    """
    u %= G.m
    v %= G.m
    w %= G.N
    if (u * u - 1) % G.m != 0:
        raise UsageError(f"u^2 != 1 mod m: u={u}, m={G.m}")
    if (w * w - 1) % G.N != 0:
        raise UsageError(f"w^2 != 1 mod N: w={w}, N={G.N}")
    if (u * (G.s_pow(w) - G.s)) % G.m != 0:
        raise UsageError(f"theta breaks the conjugation relation: u={u}, w={w}")
    if (v * _twisted_geo(G, w, G.N)) % G.m != 0:
        raise UsageError(f"theta(t)^N != 1: v={v}, w={w}")
    if (u * v + v * _twisted_geo(G, w, w)) % G.m != 0:
        raise UsageError(f"theta^2(t) != t: u={u}, v={v}, w={w}")
    return InvolutionSpec(u, v, w)


def identity_involution(G: MetacyclicGroup) -> InvolutionSpec:
    """The identity automorphism as an InvolutionSpec."""
    return make_involution(G, 1 % G.m, 0, 1 % G.N)


def apply_involution(
    G: MetacyclicGroup, theta: InvolutionSpec, g: GroupElem
) -> GroupElem:
    """theta(x^i t^j) = x^(u i + v * sum_{l<j} s^(w l)) t^(w j)."""
    i, j = g.i % G.m, g.j % G.N
    return GroupElem(
        (theta.u * i + theta.v * _twisted_geo(G, theta.w, j)) % G.m,
        (theta.w * j) % G.N,
    )


def theta_sign(
    G: MetacyclicGroup, theta: InvolutionSpec, psi: SubgroupCharacter
) -> int:
    """Sign of the theta-twisted invariant bilinear form: -1, 0 or +1.

    Projects elementary-matrix seeds E_{mu,nu} (row-major order) by the
    exact average B = sum_g pi(g)^T E pi(theta(g)). The space of
    invariant forms is at most one-dimensional, so the first seed with a
    nonzero projection decides: B symmetric gives +1, antisymmetric -1;
    all projections zero gives 0. A nonzero B that is neither raises
    InternalConsistencyError. With theta the identity this computes the
    Frobenius-Schur indicator by an independent route.

    The sum over the normal subgroup <x> is collapsed exactly: the seed
    survives only if a*(s^-mu + u*s^-nu) = 0 (mod m), and the remaining
    sum over j in [0, N) is accumulated at exponent level.
    """
    _require_irreducible(G, psi)
    f, a, c = psi
    Nf = G.N // f
    u, v, w = theta.u, theta.v, theta.w
    sinv = G.s_pow(-1)
    sinv_pows = [pow(sinv, r, G.m) for r in range(f)]
    spow = [G.s_pow(k) for k in range(G.N)]
    T = [0] * (G.N + 1)
    for j in range(G.N):
        T[j + 1] = (T[j] + spow[(w * j) % G.N]) % G.m
    M0 = lcm(G.m, Nf)
    step_m = M0 // G.m
    step_t = M0 // Nf

    for mu in range(f):
        for nu in range(f):
            if (a * (sinv_pows[mu] + u * sinv_pows[nu])) % G.m != 0:
                continue
            cells: dict[tuple[int, int], dict[int, int]] = {}
            for j in range(G.N):
                alpha = (mu - j) % f
                k1 = (alpha + j) // f
                jp = (w * j) % G.N
                beta = (nu - jp) % f
                k2 = (beta + jp) // f
                em = (v * T[j] % G.m) * a % G.m * sinv_pows[nu] % G.m
                et = (c * (k1 + k2)) % Nf
                e = (em * step_m + et * step_t) % M0
                ctr = cells.setdefault((alpha, beta), {})
                ctr[e] = ctr.get(e, 0) + 1
            # shrink to the smallest conductor the exponents actually need
            g_all = 0
            for ctr in cells.values():
                for e in ctr:
                    g_all = gcd(g_all, e)
            g_all = gcd(g_all, M0) or M0
            Meff = M0 // g_all
            vals = {
                key: root_sum(Meff, {e // g_all: n for e, n in ctr.items()})
                for key, ctr in cells.items()
            }
            if not any(bool(val) for val in vals.values()):
                continue
            zero = cyc_zero(Meff)
            sym = all(
                vals.get((b_, a_), zero) == vals.get((a_, b_), zero)
                for a_ in range(f)
                for b_ in range(f)
            )
            if sym:
                return 1
            anti = all(
                vals.get((b_, a_), zero) == -vals.get((a_, b_), zero)
                for a_ in range(f)
                for b_ in range(f)
            )
            if anti:
                return -1
            raise InternalConsistencyError(
                f"twisted form for psi={psi}, theta={theta} on {G} is "
                f"neither symmetric nor antisymmetric"
            )
    return 0
