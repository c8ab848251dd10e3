"""Tame Weil parameters and their orthogonal/symplectic signs.

A tame discrete parameter of degree n = e * f is sigma = mu (x) sp(e):
mu an irreducible f-dimensional representation of the Weil group induced
from a regular character of the unramified degree-f extension, and sp(e)
the e-dimensional special (twisted Steinberg) block. mu is recorded by
the same (q, f, a, w) datum as on the division side, with w now the
Frobenius-slot sign of mu.

The finite model of mu is C_{q^f-1} x| C_{2f} with s = q; here s^f = 1
(mod q^f - 1) holds on the nose and t^f is the scalar w. For self-dual
mu the sign has closed form w, and an equivalent characterization via
the determinant (det mu nontrivial iff mu orthogonal, for f even) is
re-verified on every call. sp(e) is orthogonal for e odd and symplectic
for e even, and signs multiply across the tensor factor.

attach_parameter builds the parameter a division-side datum predicts
under a chosen twisting recipe: recipe "PR" twists w by (-1)^(e(f-1)),
recipe "SZ" by (-1)^(f-1). The two recipes disagree exactly when e and
f are both even; the flip verification in the sign calculus is the
arbiter between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .division import (
    TameCharacter,
    is_regular,
    is_selfdual_division,
    make_tame_character,
)
from .errors import InternalConsistencyError, UsageError
from .metacyclic import (
    MetacyclicGroup,
    SubgroupCharacter,
    det_exponents,
    fs_indicator,
    make_group,
    make_subgroup_character,
)

__all__ = [
    "WeilParameter",
    "RECIPES",
    "weil_model",
    "sign_weil_closed_form",
    "sign_weil_oracle",
    "sp_sign",
    "full_parameter_sign",
    "attach_parameter",
]

RECIPES = ("PR", "SZ")


@dataclass(frozen=True)
class WeilParameter:
    """A tame parameter mu (x) sp(e) of degree char.f * e."""

    char: TameCharacter
    e: int

    @property
    def degree(self) -> int:
        return self.char.f * self.e


def weil_model(mu: TameCharacter) -> tuple[MetacyclicGroup, SubgroupCharacter]:
    """Finite model of the induced Weil representation of mu.

    Returns (G, psi) with G = C_{q^f-1} x| C_{2f}, s = q, and psi =
    (f, a, c) where c in {0, 1} encodes w = +-1 as the scalar at t^f.
    Requires mu regular.
    """
    if not is_regular(mu):
        raise UsageError(f"weil model needs a regular character, got {mu}")
    m = mu.torus_order
    G = make_group(m, 2 * mu.f, mu.q)
    c = 0 if mu.w == 1 else 1
    return G, make_subgroup_character(G, mu.f, mu.a % m if m > 1 else 0, c)


def sign_weil_closed_form(mu: TameCharacter) -> int:
    """Closed-form sign of a self-dual mu: w.

    Cross-checks the determinant characterization before returning: for
    f even and self-dual mu, det mu is trivial on the torus and equals
    -w at t, so det mu is nontrivial exactly when mu is orthogonal.
    Any mismatch raises InternalConsistencyError.
    """
    if not is_selfdual_division(mu):
        raise UsageError(f"closed-form sign needs a self-dual datum, got {mu}")
    if mu.a % (mu.q - 1) != 0:
        raise InternalConsistencyError(
            f"self-dual datum with a not divisible by q-1: {mu}"
        )
    G, psi = weil_model(mu)
    (Mx, kx), (Mt, kt) = det_exponents(G, psi)
    if kx % Mx != 0:
        raise InternalConsistencyError(
            f"det of self-dual {mu} is nontrivial on the torus: "
            f"zeta_{Mx}^{kx}"
        )
    # det at t is a sign since f is even: kt = 0 means +1, Mt/2 means -1
    if kt == 0:
        det_t = 1
    elif 2 * kt == Mt:
        det_t = -1
    else:
        raise InternalConsistencyError(
            f"det at t for self-dual {mu} is not a sign: zeta_{Mt}^{kt}"
        )
    if det_t != -mu.w:
        raise InternalConsistencyError(
            f"det route disagrees with w for {mu}: det_t={det_t}, w={mu.w}"
        )
    det_nontrivial = det_t != 1
    if det_nontrivial != (mu.w == 1):
        raise InternalConsistencyError(
            f"determinant characterization failed for {mu}"
        )
    return mu.w


def sign_weil_oracle(mu: TameCharacter) -> int:
    """Oracle sign of self-dual mu: Frobenius-Schur indicator of the model."""
    if not is_selfdual_division(mu):
        raise UsageError(f"oracle sign needs a self-dual datum, got {mu}")
    G, psi = weil_model(mu)
    ind = fs_indicator(G, psi)
    if ind == 0:
        raise InternalConsistencyError(
            f"weil model of self-dual datum {mu} has vanishing indicator"
        )
    return ind


def sp_sign(e: int) -> int:
    """Sign of the special block sp(e): +1 for e odd, -1 for e even."""
    if e < 1:
        raise UsageError(f"e must be >= 1, got {e}")
    return 1 if e % 2 else -1


def full_parameter_sign(param: WeilParameter) -> int:
    """Sign of mu (x) sp(e): the signs of the factors multiply."""
    return sign_weil_closed_form(param.char) * sp_sign(param.e)


def attach_parameter(n: int, chi: TameCharacter, recipe: str) -> WeilParameter:
    """The parameter a division-side datum predicts under a recipe.

    The parameter shares (q, f, a) with chi and has e = n/f; the
    Frobenius-slot sign is chi.w twisted by the recipe's power of the
    unramified quadratic character: exponent e*(f-1) for "PR", f-1 for
    "SZ". Requires chi self-dual and f | n.
    """
    if recipe not in RECIPES:
        raise UsageError(f"recipe must be one of {RECIPES}, got {recipe!r}")
    if n < 1 or n % chi.f != 0:
        raise UsageError(f"f = {chi.f} must divide n = {n}")
    if not is_selfdual_division(chi):
        raise UsageError(f"attach_parameter needs a self-dual datum, got {chi}")
    e = n // chi.f
    exponent = e * (chi.f - 1) if recipe == "PR" else chi.f - 1
    w_param = chi.w * (-1 if exponent % 2 else 1)
    mu = make_tame_character(chi.q, chi.f, chi.a, w_param)
    return WeilParameter(char=mu, e=e)
