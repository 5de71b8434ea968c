import pytest

from hsbranch.hermitian import build_pair, sweep
from hsbranch.kstriple import ks_data
from hsbranch.verify import adjoint_census, run, sl2_isotypic, true_decomposition


def test_verify_all_rank_five_passes():
    checks = run(max_rank=5)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed[:3]


def test_sl2_isotypic():
    assert sl2_isotypic({2: 1, 0: 1, -2: 1}) == {2: 1}
    assert sl2_isotypic({1: 2, -1: 2, 0: 1}) == {1: 2, 0: 1}


@pytest.mark.parametrize("spec", sweep(5), ids=str)
def test_adjoint_census_corrected(spec):
    pair = build_pair(spec)
    data = ks_data(pair)
    census = adjoint_census(pair)
    assert census.get(2, 0) == census.get(-2, 0) == data.d_plus_1
    assert census.get(1, 0) == census.get(-1, 0) == data.c + data.a
    assert sum(census.values()) == len(pair.system.roots) + pair.system.rank
    dim_k = len(pair.compact_roots) + pair.system.rank
    iso = true_decomposition(pair)
    assert iso.get(0, 0) == dim_k - data.d_plus_1 - 2 * data.a


@pytest.mark.parametrize("spec", [s for s in sweep(6) if not ks_data(build_pair(s)).tube], ids=str)
def test_a_equals_c_on_non_tube(spec):
    data = ks_data(build_pair(spec))
    assert data.a == data.c > 0
