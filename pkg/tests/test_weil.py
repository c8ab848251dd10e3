"""Oracles for the Weil-parameter side.

Frozen values: the model of mu = (q=2, f=2, a=1, w=-1) is C_3 x| C_4
with inducing datum (2, 1, 1); for e = 1 the parameter model coincides
with the degree-f division model exactly. The closed-form sign is
cross-checked against the model Frobenius-Schur oracle, and the
determinant characterization runs implicitly on every closed-form call.
"""

from __future__ import annotations

import pytest

from tamesigns.division import (
    construct_selfdual_of_dim,
    division_model,
    enumerate_level1_selfdual,
    make_tame_character,
)
from tamesigns.errors import UsageError
from tamesigns.metacyclic import SubgroupCharacter
from tamesigns.weil import (
    WeilParameter,
    attach_parameter,
    full_parameter_sign,
    sign_weil_closed_form,
    sign_weil_oracle,
    sp_sign,
    weil_model,
)


def test_weil_model_frozen_example():
    mu = make_tame_character(2, 2, 1, -1)
    G, psi = weil_model(mu)
    assert (G.m, G.N, G.s) == (3, 4, 2)
    assert psi == SubgroupCharacter(2, 1, 1)
    mu_plus = make_tame_character(2, 2, 1, 1)
    _, psi_plus = weil_model(mu_plus)
    assert psi_plus == SubgroupCharacter(2, 1, 0)


def test_weil_model_equals_division_model_at_e_one():
    for q in (2, 3, 4, 5):
        for f in (2, 4):
            chi = construct_selfdual_of_dim(q, f, f)
            for w in (1, -1):
                mu = make_tame_character(q, f, chi.a, w)
                assert weil_model(mu) == division_model(f, mu)


def test_weil_model_rejects_non_regular():
    with pytest.raises(UsageError):
        weil_model(make_tame_character(2, 2, 0, 1))


def test_sp_sign():
    assert [sp_sign(e) for e in (1, 2, 3, 4, 5)] == [1, -1, 1, -1, 1]
    with pytest.raises(UsageError):
        sp_sign(0)


def test_closed_form_sign_and_det_characterization():
    # the det cross-check runs inside sign_weil_closed_form
    assert sign_weil_closed_form(make_tame_character(2, 2, 1, 1)) == 1
    assert sign_weil_closed_form(make_tame_character(2, 2, 1, -1)) == -1
    with pytest.raises(UsageError):
        sign_weil_closed_form(make_tame_character(2, 4, 1, 1))  # not self-dual


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("f", [2, 4])
def test_closed_form_matches_oracle(q, f):
    for entry in enumerate_level1_selfdual(q, f):
        if entry.chi.f != f:
            continue
        assert sign_weil_closed_form(entry.chi) == entry.chi.w
        assert sign_weil_oracle(entry.chi) == entry.chi.w


def test_full_parameter_sign_table():
    mu_p = make_tame_character(2, 2, 1, 1)
    mu_m = make_tame_character(2, 2, 1, -1)
    assert full_parameter_sign(WeilParameter(mu_p, 1)) == 1
    assert full_parameter_sign(WeilParameter(mu_p, 2)) == -1
    assert full_parameter_sign(WeilParameter(mu_m, 1)) == -1
    assert full_parameter_sign(WeilParameter(mu_m, 2)) == 1
    assert WeilParameter(mu_p, 3).degree == 6


def test_attach_parameter_recipes():
    chi = make_tame_character(2, 2, 1, 1)
    # n = 4, f = 2, e = 2: PR exponent e(f-1) = 2 keeps w, SZ exponent 1 flips
    pr = attach_parameter(4, chi, "PR")
    sz = attach_parameter(4, chi, "SZ")
    assert pr == WeilParameter(make_tame_character(2, 2, 1, 1), 2)
    assert sz == WeilParameter(make_tame_character(2, 2, 1, -1), 2)
    # n = 4, f = 4, e = 1: both recipes use exponent 3 and flip
    chi4 = make_tame_character(2, 4, 3, 1)
    assert attach_parameter(4, chi4, "PR").char.w == -1
    assert attach_parameter(4, chi4, "SZ").char.w == -1
    # n = 2, f = 2, e = 1: exponent 1 for both, flip
    assert attach_parameter(2, chi, "PR").char.w == -1
    assert attach_parameter(2, chi, "SZ").char.w == -1


def test_attach_parameter_validation():
    chi = make_tame_character(2, 2, 1, 1)
    with pytest.raises(UsageError):
        attach_parameter(4, chi, "XX")
    with pytest.raises(UsageError):
        attach_parameter(3, chi, "PR")
    with pytest.raises(UsageError):
        attach_parameter(8, make_tame_character(2, 4, 1, 1), "PR")  # not self-dual
