from itertools import combinations

import pytest

from hsbranch.errors import UnsupportedError, UsageError
from hsbranch.hermitian import build_pair, sweep
from hsbranch.kstriple import (
    KSData,
    harish_chandra_set,
    is_admissible_characteristic,
    ks_data,
    render_signed_young_diagram,
    render_vogan_diagram,
    signed_young_diagram,
    strongly_orthogonal,
    vogan_diagram,
)
from hsbranch.rootsys import Vec, inner

PAIRS = [str(s) for s in sweep(6)]


def roots(pair, data):
    return [pair.format_root(g) for g in data.S]


def test_aiii_s():
    pair = build_pair("AIII:p=2,q=3")
    assert roots(pair, ks_data(pair)) == ["ε1−δ3", "ε2−δ2"]


def test_ci_s():
    pair = build_pair("CI:n=3")
    assert harish_chandra_set(pair) == [Vec([2, 0, 0]), Vec([0, 2, 0]), Vec([0, 0, 2])]


def test_bdi_odd_s():
    pair = build_pair("BDI:odd,p=2")
    assert roots(pair, ks_data(pair)) == ["ε1+δ1", "−ε1+δ1"]


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_aiii_square_z0(p):
    pair = build_pair(f"AIII:p={p},q={p}")
    assert ks_data(pair).Z0 == Vec([1] * p + [-1] * p)


@pytest.mark.parametrize("text", ["BDI:odd,p=3", "BDI:even,p=3"])
def test_bdi_z0(text):
    pair = build_pair(text)
    z = pair.diagonal_form(ks_data(pair).Z0)
    assert z[-2:] == (2, -2) and not any(z[:-2])


@pytest.mark.parametrize("k", [1, 2])
def test_diii_odd_z0(k):
    pair = build_pair(f"DIII:p={2 * k + 1}")
    assert ks_data(pair).Z0 == Vec([1] * (2 * k) + [0])


@pytest.mark.parametrize("text,c,d1", [("AIII:p=2,q=3", 2, 4), ("DIII:p=5", 4, 6), ("EIII", 8, 8)])
def test_constants(text, c, d1):
    data = ks_data(build_pair(text))
    assert (data.c, data.d_plus_1) == (c, d1)


@pytest.mark.parametrize("text", PAIRS)
def test_strong_orthogonality_and_census(text):
    pair = build_pair(text)
    data = ks_data(pair)
    assert all(strongly_orthogonal(pair, a, b) for a, b in combinations(data.S, 2))
    assert not [g for g in pair.noncompact_roots if all(inner(g, s) == 0 for s in data.S)]
    assert {inner(g, data.Z0) for g in pair.psi_n} <= {1, 2}
    assert {inner(a, data.Z0) for a in pair.psi_c} <= {0, 1}
    assert data.c + data.d_plus_1 == len(pair.psi_n)
    assert data.tube == (data.c == 0)


def test_evii_s():
    pair = build_pair("EVII")
    data = ks_data(pair)
    assert data.S[0] == pair.system.highest_root
    assert roots(pair, data) == ["2234321", "0112221", "0000001"]
    assert data.S[-1] == pair.noncompact_simple_root


def test_eiii_anchor():
    pair = build_pair("EIII")
    assert roots(pair, ks_data(pair)) == ["122321", "101111"]


def test_admissibility():
    pair = build_pair("AIII:p=2,q=3")
    assert is_admissible_characteristic(pair, list(ks_data(pair).simple_weights))
    assert not is_admissible_characteristic(pair, [0, 0, 0, 0])
    w = [0, 0, 0, 0]
    w[pair.noncompact_simple_index] = -2
    assert is_admissible_characteristic(pair, w)
    with pytest.raises(UsageError):
        is_admissible_characteristic(pair, [0, 1])


def test_vogan_weights():
    assert vogan_diagram(build_pair("CI:n=4")).weights == (0, 0, 0, 2)
    d = vogan_diagram(build_pair("AIII:p=2,q=5"))
    # nonzero at beta_p and beta_q = delta_{q-p} - delta_{q-p+1}
    assert d.weights == (0, 1, 0, 0, 1, 0) and [n for n, _ in d.nodes].index(True) == 1
    diii = vogan_diagram(build_pair("DIII:p=5"))
    assert diii.weights == (0, 0, 0, 1, 1)
    assert sum(n for n, _ in diii.nodes) == 1


def test_vogan_render_marks_one_node():
    text = render_vogan_diagram(vogan_diagram(build_pair("EIII")))
    assert text.count("●") == 1 and text.count("○") == 5


@pytest.mark.parametrize("text,rows", [
    ("CI:n=3", ["+-"] * 3),
    ("AIII:p=2,q=4", ["+-", "+-", "-", "-"]),
    ("AIII:p=3,q=3", ["+-"] * 3),
    ("BDI:even,p=3", ["-+-"] + ["+"] * 5),
    ("BDI:odd,p=2", ["-+-"] + ["+"] * 4),
    ("DIII:p=5", ["+-"] * 4 + ["+", "-"]),
])
def test_signed_young(text, rows):
    syd = signed_young_diagram(build_pair(text))
    assert list(syd.rows) == rows and syd.valid()
    assert render_signed_young_diagram(syd).count("[") == sum(map(len, rows))


def test_signed_young_exceptional_unsupported():
    with pytest.raises(UnsupportedError):
        signed_young_diagram(build_pair("EVII"))


@pytest.mark.parametrize("text", ["AIII:p=2,q=3", "EIII", "CI:n=2"])
def test_ksdata_json_round_trip(text):
    data = ks_data(build_pair(text))
    assert KSData.from_json(data.to_json()) == data
