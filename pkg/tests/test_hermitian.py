import pytest

from hsbranch.errors import ConfigurationError, UsageError
from hsbranch.hermitian import (
    PairSpec,
    build_pair,
    catalog,
    centralizer_subsystem,
    expected_psi_n_size,
    holomorphy_violations,
    parse_pair,
    psi_n_stable_under_compact_reflections,
    sweep,
)
from hsbranch.kstriple import ks_data
from hsbranch.rootsys import Vec

PAIRS = [str(s) for s in sweep(5)]


def test_catalog_shape():
    families = [t.family for t in catalog()]
    assert len(families) == 6
    assert families.count("EIII") == families.count("EVII") == 1


@pytest.mark.parametrize("template", catalog(), ids=lambda t: t.family)
def test_catalog_round_trips(template):
    assert parse_pair(str(template.example)) == template.example


@pytest.mark.parametrize("text", ["AIII:p=2,q=3", "BDI:odd,p=3", "BDI:even,p=4", "CI:n=2", "DIII:p=5", "EIII", "EVII"])
def test_grammar_examples(text):
    assert str(parse_pair(text)) == text


@pytest.mark.parametrize("text", ["", "AIII", "AIII:p=3,q=2", "BDI:p=3", "BDI:even,p=1", "CI:n=0", "DIII:p=1",
                                  "EIII:p=1", "FII", "CI:m=2", "CI:n=x"])
def test_grammar_rejects(text):
    with pytest.raises(UsageError):
        parse_pair(text)


def test_invalid_spec_is_configuration_error():
    with pytest.raises(ConfigurationError):
        build_pair(PairSpec("CI", n=0))


@pytest.mark.parametrize("text", PAIRS)
def test_pair_invariants(text):
    pair = build_pair(text)
    assert sum(1 for s in pair.system.simple_roots if s in pair.noncompact_roots) == 1
    assert holomorphy_violations(pair) == []
    assert len(pair.psi_n) == expected_psi_n_size(pair.spec)
    assert pair.rho == pair.rho_c + pair.rho_n
    assert psi_n_stable_under_compact_reflections(pair)
    i = pair.noncompact_simple_index
    for a in pair.psi:
        k = pair.system.simple_coefficients(a)[i]
        assert k in (0, 1) and (k == 1) == (a in pair.noncompact_roots)


def test_aiii_2_3():
    pair = build_pair("AIII:p=2,q=3")
    assert len(pair.psi_n) == 6
    assert pair.format_root(pair.noncompact_simple_root) == "ε2−δ1"


def test_ci_3():
    pair = build_pair("CI:n=3")
    expected = {Vec([int(i == k) + int(i == r) for i in range(3)]) for k in range(3) for r in range(k, 3)}
    assert set(pair.psi_n) == expected
    assert pair.noncompact_simple_root == Vec([0, 0, 2])


def test_eiii_noncompact_node():
    assert build_pair("EIII").noncompact_simple_index == 5


def test_centralizer_tube_is_all_of_k():
    pair = build_pair("CI:n=3")
    kz = centralizer_subsystem(pair, ks_data(pair).Z0)
    assert kz.phi_z == pair.compact_system.roots


def test_centralizer_su12_is_torus():
    pair = build_pair("AIII:p=1,q=2")
    kz = centralizer_subsystem(pair, ks_data(pair).Z0)
    assert kz.phi_z == frozenset() and kz.rho_z.is_zero()


def test_centralizer_eiii_is_d4():
    pair = build_pair("EIII")
    assert centralizer_subsystem(pair, ks_data(pair).Z0).semisimple_type == "D4"


def test_aiii_normalisation_projects_trace():
    pair = build_pair("AIII:p=1,q=2")
    assert pair.normalize([2, 1, 0]) == Vec([1, 0, -1])
    with pytest.raises(UsageError):
        pair.normalize([1, 2])
