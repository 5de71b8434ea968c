import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hsbranch.branching import (
    BranchingResult,
    HCParameter,
    _varpi,
    branch_closed_form,
    branch_weyl_sum,
    k_to_kz_branch,
    lowest_k_type,
    make_parameter,
    parse_lambda,
    weyl_sum_series,
)
from hsbranch.errors import DomainError, UnsupportedError, UsageError
from hsbranch.hermitian import build_pair, centralizer_subsystem
from hsbranch.kstriple import ks_data
from hsbranch.oracle import branch_oracle
from hsbranch.rootsys import inner, weight_multiplicities, weyl_dimension


def fw_param(text, *coeffs):
    pair = build_pair(text)
    lam = pair.rho
    for c, w in zip(coeffs, pair.system.fundamental_weights):
        lam = lam + w * c
    return make_parameter(pair, lam)


@pytest.mark.parametrize("a", [1, 2, 5])
def test_sp1_is_tautological(a):
    p = make_parameter("CI:n=1", [a])
    for f in (branch_closed_form, branch_weyl_sum, branch_oracle):
        assert f(p, a + 20).entries == {a: 1}


def test_sp2_closed_form():
    r = branch_closed_form(make_parameter("CI:n=2", [2, 1]), 11)
    assert r.entries == {5: 1, 7: 2, 9: 3, 11: 4}


def test_su22_rho():
    r = branch_closed_form(make_parameter("AIII:p=2,q=2"), 11)
    assert r.entries == {7: 1, 9: 3, 11: 6}


def test_su12_rho_hand_value():
    r = branch_closed_form(make_parameter("AIII:p=1,q=2"), 12)
    assert r.entries == {m: 1 for m in range(2, 13)}


@pytest.mark.parametrize("text", ["CI:n=2", "AIII:p=1,q=2", "AIII:p=2,q=3", "BDI:even,p=3", "DIII:p=5"])
def test_weyl_equals_closed(text):
    p = make_parameter(text)
    cap = math.floor(p.value_on_z0) + 15
    assert branch_weyl_sum(p, cap).entries == branch_closed_form(p, cap).entries


def test_weyl_sum_as_printed_has_wrong_sign_for_odd_a():
    p = make_parameter("AIII:p=1,q=2")
    raw = weyl_sum_series(p, 10, sign_correction=False)
    assert ks_data(p.pair).a == 1
    assert all(c == -1 for e, c in raw.items() if e <= 10)


@pytest.mark.parametrize("text", ["CI:n=3", "AIII:p=3,q=3", "DIII:p=4", "BDI:odd,p=2"])
def test_tube_general_path_matches(text):
    p = make_parameter(text)
    cap = math.floor(p.value_on_z0) + 12
    assert branch_closed_form(p, cap, force_general=True).same_map(branch_closed_form(p, cap))


@pytest.mark.parametrize("text", ["CI:n=3", "AIII:p=2,q=2", "DIII:p=6", "BDI:odd,p=3"])
def test_tube_parity_and_offset(text):
    p = fw_param(text, 1)
    data = ks_data(p.pair)
    lz = p.value_on_z0
    r = branch_closed_form(p, math.floor(lz) + data.d + 8)
    assert all((m - lz - data.d) % 2 == 0 for m in r.entries)
    assert min(r.entries) == lz + data.d
    assert inner(p.pair.rho_n, data.Z0) == data.d + 1


@pytest.mark.parametrize("text", ["AIII:p=2,q=3", "DIII:p=5", "EIII", "AIII:p=1,q=3"])
def test_varpi_invariant_under_rho_n(text):
    p = make_parameter(text)
    pair = p.pair
    kz = centralizer_subsystem(pair, ks_data(pair).Z0).system
    for x in pair.compact_system.weyl_orbit(p.lam)[:200]:
        assert _varpi(kz.positive_roots, kz.rho, x) == _varpi(kz.positive_roots, kz.rho, x + pair.rho_n)


def test_k_to_kz_tube_single_entry():
    p = fw_param("CI:n=3", 1, 0, 0)
    dec = k_to_kz_branch(p.pair, ks_data(p.pair), lowest_k_type(p))
    assert len(dec.entries) == 1
    mu, mult, dim = dec.entries[0]
    assert mult == 1 and mu + dec.rho_z == p.lam + p.pair.rho_n


def test_k_to_kz_torus():
    p = fw_param("AIII:p=1,q=2", 0, 2)
    w = lowest_k_type(p)
    dec = k_to_kz_branch(p.pair, ks_data(p.pair), w)
    assert sorted(mu for mu, _, _ in dec.entries) == sorted(weight_multiplicities(w))
    assert all(d == 1 for _, _, d in dec.entries)


def test_k_to_kz_eiii_vector():
    p = fw_param("EIII", 1)
    w = lowest_k_type(p)
    assert weyl_dimension(w) == 10
    dec = k_to_kz_branch(p.pair, ks_data(p.pair), w)
    dims = sorted(m * d for _, m, d in dec.entries)
    # Z0 is central in k_z, so grouping the weights of W by Z0-value is an independent oracle
    z0 = ks_data(p.pair).Z0
    groups: dict = {}
    for nu, m in weight_multiplicities(w).items():
        groups[inner(nu, z0)] = groups.get(inner(nu, z0), 0) + m
    assert dims == sorted(groups.values()) == [1, 1, 8]


def test_dimension_factor_is_needed():
    p = fw_param("EIII", 1)
    good = branch_closed_form(p, 26)
    bad = branch_closed_form(p, 26, weight_by_dimension=False)
    oracle = branch_oracle(p, 26)
    assert good.same_map(oracle) and not bad.same_map(oracle)


@pytest.mark.parametrize("lam,condition", [
    ([1, 2], "dominance"),
    ([1, -1], "holomorphy"),
    ([Fraction(1, 2), Fraction(1, 3)], "integrality"),
])
def test_parameter_validation(lam, condition):
    with pytest.raises(DomainError) as info:
        make_parameter("CI:n=2", lam)
    assert info.value.condition == condition and info.value.root is not None


def test_fundamental_weight_input():
    pair = build_pair("CI:n=2")
    p = HCParameter.from_fundamental(pair, [1, 1])
    assert p.lam == pair.rho
    with pytest.raises(UsageError):
        HCParameter.from_fundamental(pair, [1])


def test_parse_lambda():
    assert parse_lambda("3/2, 1/2,-1/2,-3/2") == [Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2)]
    with pytest.raises(UsageError):
        parse_lambda("1,x")


def test_cap_below_first_parameter():
    r = branch_closed_form(make_parameter("CI:n=2", [2, 1]), 3)
    assert r.entries == {} and r.note


def test_weyl_guard():
    p = make_parameter("EVII")
    with pytest.raises(UnsupportedError):
        branch_weyl_sum(p, 60, limit=2000)


def test_result_json_round_trip():
    r = branch_closed_form(make_parameter("AIII:p=2,q=2"), 15)
    again = BranchingResult.from_json(r.to_json())
    assert again == r
    assert r.to_json()["lambda"] == ["3/2", "1/2", "-1/2", "-3/2"]
    with pytest.raises(UsageError):
        r.multiplicity(16)


SMALL = ["CI:n=2", "CI:n=3", "AIII:p=1,q=2", "AIII:p=2,q=2", "AIII:p=1,q=3", "BDI:odd,p=2", "BDI:even,p=2", "DIII:p=4"]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_three_paths_agree_on_random_parameters(text, ks):
    pair = build_pair(text)
    p = fw_param(text, *ks[: len(pair.system.simple_roots)])
    cap = math.floor(p.value_on_z0) + 8
    closed = branch_closed_form(p, cap)
    assert closed.same_map(branch_oracle(p, cap))
    assert closed.same_map(branch_weyl_sum(p, cap))
    assert all(v > 0 for v in closed.entries.values())
