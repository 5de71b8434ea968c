"""Invariant suites behind ``hsbranch verify``.

Each check yields a :class:`Check` record.  A failing record carries a witness
that pinpoints the violation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .branching import branch_closed_form, branch_weyl_sum, make_parameter, lowest_k_type
from .errors import HSBranchError
from .hermitian import (
    HermitianPair,
    build_pair,
    centralizer_subsystem,
    expected_psi_n_size,
    holomorphy_violations,
    psi_n_stable_under_compact_reflections,
    sweep,
)
from .kstriple import is_admissible_characteristic, ks_data, strongly_orthogonal
from .oracle import branch_oracle, hds_u_character, resum, w_u_distribution
from .rootsys import (
    Irrep,
    Vec,
    build_root_system,
    coroot_pairing,
    inner,
    kostant_multiplicities,
    reflection_closure,
    weight_multiplicities,
    weyl_dimension,
)

__all__ = [
    "Check",
    "rootsys_checks",
    "pair_checks",
    "ks_checks",
    "branching_checks",
    "adjoint_census",
    "sl2_isotypic",
    "remark_decomposition",
    "true_decomposition",
    "run",
    "WEYL_SUM_VERIFY_LIMIT",
]

# verification skips the alternating sum above this |W_K| (only EVII, |W(E6)| = 51840)
WEYL_SUM_VERIFY_LIMIT = 2000


@dataclass(frozen=True)
class Check:
    id: str
    passed: bool
    witness: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "passed": self.passed, "witness": self.witness}


def _check(cid, ok, witness=""):
    return Check(cid, bool(ok), "" if ok else str(witness))


def expected_root_count(kind: str, n: int) -> int:
    return {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1), "E": {6: 72, 7: 126}.get(n, 0)}[kind]


ROOTSYS_SAMPLE = [("A", 2), ("A", 3), ("A", 5), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("D", 5), ("E", 6), ("E", 7)]


def dominant_weights(system, bound) -> list:
    """Dominant integral weights sum k_i w_i with |lambda + rho|^2 below ``bound``."""
    fw = system.fundamental_weights
    out = []
    for ks in itertools.product(range(0, 8), repeat=len(fw)):
        lam = Vec.zero(system.ambient_dim)
        for k, w in zip(ks, fw):
            lam = lam + w * k
        x = lam + system.rho
        if inner(x, x) < bound:
            out.append(lam)
    return out


def rootsys_checks(sample=ROOTSYS_SAMPLE, kostant_bound=30) -> list:
    out = []
    for kind, n in sample:
        label = f"{kind}{n}"
        rs = build_root_system(label)
        out.append(_check(f"rootsys.count[{label}]", len(rs.roots) == expected_root_count(kind, n), len(rs.roots)))
        out.append(_check(f"rootsys.closure[{label}]", reflection_closure(rs.simple_roots) == rs.roots))
        bad = [(a, b) for a in rs.simple_roots for b in rs.roots if coroot_pairing(b, a).denominator != 1]
        out.append(_check(f"rootsys.integral_pairings[{label}]", not bad, bad[:1]))
        hr = rs.highest_root
        bad = [a for a in rs.roots if any(c < 0 for c in rs.simple_coefficients(hr - a))]
        out.append(_check(f"rootsys.highest_root[{label}]", not bad, bad[:1]))
        if rs.rank <= 5:
            for w in rs.fundamental_weights[:3]:
                rep = Irrep(rs, w + rs.rho)
                total = sum(weight_multiplicities(rep).values())
                dim = weyl_dimension(rep)
                out.append(_check(f"rootsys.dim_vs_weights[{label},{w}]", total == dim, f"{total} != {dim}"))
    for label in ("A2", "B2", "C2"):
        rs = build_root_system(label)
        for lam in dominant_weights(rs, kostant_bound):
            rep = Irrep(rs, lam + rs.rho)
            fr = weight_multiplicities(rep)
            dom = [mu for mu in fr if rs.is_dominant(mu)]
            ko = kostant_multiplicities(rep, dom)
            bad = [mu for mu in dom if fr[mu] != ko[mu]]
            out.append(_check(f"rootsys.freudenthal_vs_kostant[{label},{lam}]", not bad, bad[:1]))
    return out


def pair_checks(pair: HermitianPair) -> list:
    tag = str(pair.spec)
    sys_ = pair.system
    simple_n = [s for s in sys_.simple_roots if s in pair.noncompact_roots]
    out = [_check(f"hermitian.one_noncompact_simple[{tag}]", len(simple_n) == 1, len(simple_n))]
    v = holomorphy_violations(pair)
    out.append(_check(f"hermitian.holomorphy[{tag}]", not v, v[:1]))
    i = pair.noncompact_simple_index
    top = pair.highest_noncompact_root
    out.append(_check(f"hermitian.highest_root_coefficient[{tag}]", sys_.simple_coefficients(top)[i] == 1))
    bad = [a for a in pair.psi if sys_.simple_coefficients(a)[i] not in (0, 1)
           or ((sys_.simple_coefficients(a)[i] == 1) != (a in pair.noncompact_roots))]
    out.append(_check(f"hermitian.split_by_coefficient[{tag}]", not bad, bad[:1]))
    n = len(pair.psi_n)
    out.append(_check(f"hermitian.psi_n_size[{tag}]", n == expected_psi_n_size(pair.spec), n))
    out.append(_check(f"hermitian.rho_split[{tag}]", pair.rho == pair.rho_c + pair.rho_n))
    out.append(_check(f"hermitian.psi_n_stable[{tag}]", psi_n_stable_under_compact_reflections(pair)))
    return out


def adjoint_census(pair: HermitianPair) -> dict:
    """Multiplicity of each ad(Z0)-eigenvalue on g_C (the Cartan counted at 0)."""
    z0 = ks_data(pair).Z0
    out = {0: pair.system.rank}
    for a in pair.system.roots:
        v = int(inner(a, z0))
        out[v] = out.get(v, 0) + 1
    return out


def sl2_isotypic(census: dict) -> dict:
    """Number of copies of C^(n+1) in an sl2-module with the given eigenvalue census."""
    return {n: census.get(n, 0) - census.get(n + 2, 0) for n in sorted(k for k in census if k >= 0)
            if census.get(n, 0) - census.get(n + 2, 0)}


def remark_decomposition(pair: HermitianPair) -> dict:
    """h0-isotypic counts of g_C as stated in the adjoint-decomposition remark: {2: d+1, 1: c, 0: dim k - d - 1}."""
    data = ks_data(pair)
    dim_k = len(pair.compact_roots) + pair.system.rank
    out = {2: data.d_plus_1, 0: dim_k - data.d_plus_1}
    if not data.tube:
        out[1] = data.c
    return {k: v for k, v in out.items() if v}


def true_decomposition(pair: HermitianPair) -> dict:
    """h0-isotypic counts of g_C computed from the eigenvalue census: {2: d+1, 1: c+a, 0: dim k - d - 1 - 2a}."""
    return sl2_isotypic(adjoint_census(pair))


def ks_checks(pair: HermitianPair) -> list:
    tag = str(pair.spec)
    data = ks_data(pair)
    S, z0 = data.S, data.Z0
    out = []
    bad = [(a, b) for a, b in itertools.combinations(S, 2) if not strongly_orthogonal(pair, a, b)]
    out.append(_check(f"kstriple.strongly_orthogonal[{tag}]", not bad, bad[:1]))
    perp = [g for g in pair.noncompact_roots if all(inner(g, s) == 0 for s in S)]
    out.append(_check(f"kstriple.no_noncompact_perp[{tag}]", not perp, perp[:1]))
    vals = {inner(g, z0) for g in pair.psi_n}
    out.append(_check(f"kstriple.noncompact_values[{tag}]", vals <= {1, 2}, vals))
    cvals = {inner(a, z0) for a in pair.psi_c}
    out.append(_check(f"kstriple.compact_values[{tag}]", cvals <= {0, 1}, cvals))
    out.append(_check(f"kstriple.census_sum[{tag}]", data.c + data.d_plus_1 == len(pair.psi_n)))
    rn = inner(pair.rho_n, z0)
    out.append(_check(f"kstriple.rho_n_value[{tag}]", rn == Fraction(data.c, 2) + data.d_plus_1, rn))
    kz = centralizer_subsystem(pair, z0)
    out.append(_check(f"kstriple.rho_z_value[{tag}]", inner(kz.rho_z, z0) == 0))
    out.append(_check(f"kstriple.phi_z_closed[{tag}]", kz.system.is_closed_under_reflections()))
    w = data.simple_weights
    i = data.noncompact_index
    compact_w = [x for j, x in enumerate(w) if j != i]
    tube_shape = w[i] == 2 and not any(compact_w)
    out.append(_check(f"kstriple.tube_weights[{tag}]", data.tube == tube_shape == (data.c == 0), w))
    if not data.tube:
        ones = [j for j, x in enumerate(w) if j != i and x == 1]
        ok = w[i] == 1 and len(ones) == 1 and compact_w.count(0) == len(compact_w) - 1
        if ok:
            ok = pair.system.simple_coefficients(pair.highest_noncompact_root)[ones[0]] == 1
        out.append(_check(f"kstriple.nontube_weights[{tag}]", ok, w))
    out.append(_check(f"kstriple.admissible[{tag}]", is_admissible_characteristic(pair, list(w))))
    out.append(_check(f"kstriple.real_rank[{tag}]", data.real_rank == expected_real_rank(pair.spec), data.real_rank))
    census = adjoint_census(pair)
    expect = {2: data.d_plus_1, -2: data.d_plus_1, 1: data.c + data.a, -1: data.c + data.a}
    bad = {k: census.get(k, 0) for k, v in expect.items() if census.get(k, 0) != v}
    bad.update({k: v for k, v in census.items() if k not in expect and k != 0})
    out.append(_check(f"kstriple.adjoint_eigenvalues[{tag}]", not bad, bad))
    dim_k = len(pair.compact_roots) + pair.system.rank
    expect_iso = {2: data.d_plus_1, 1: data.c + data.a, 0: dim_k - data.d_plus_1 - 2 * data.a}
    iso = true_decomposition(pair)
    out.append(_check(f"kstriple.adjoint_isotypic[{tag}]", iso == {k: v for k, v in expect_iso.items() if v}, iso))
    if pair.spec.family == "EVII":
        coeffs = tuple(int(x) for x in pair.system.simple_coefficients(S[0]))
        out.append(_check(f"kstriple.evii_gamma1[{tag}]", S[0] == pair.system.highest_root
                          and coeffs == (2, 2, 3, 4, 3, 2, 1), coeffs))
        out.append(_check(f"kstriple.evii_gamma3[{tag}]", S[-1] == pair.noncompact_simple_root))
    if pair.spec.family == "EIII":
        coeffs = tuple(int(x) for x in pair.system.simple_coefficients(S[1]))
        out.append(_check(f"kstriple.eiii_gamma2[{tag}]", coeffs == (1, 0, 1, 1, 1, 1), coeffs))
    return out


def expected_real_rank(spec) -> int:
    f = spec.family
    if f == "AIII":
        return spec.p
    if f == "BDI":
        return 2
    if f == "CI":
        return spec.n
    if f == "DIII":
        return spec.p // 2
    return {"EIII": 2, "EVII": 3}[f]


def branching_checks(pair: HermitianPair, extra: int = 12) -> list:
    tag = str(pair.spec)
    data = ks_data(pair)
    out = []
    param = make_parameter(pair)
    try:
        cap = int(min(w_u_distribution(param)) // 1) + extra
        closed = branch_closed_form(param, cap)
        oracle = branch_oracle(param, cap)
        out.append(_check(f"branching.oracle_equals_closed[{tag}]", closed.same_map(oracle),
                          f"{closed.format_entries()} vs {oracle.format_entries()}"))
        if pair.compact_system.weyl_group_order <= WEYL_SUM_VERIFY_LIMIT:
            weyl = branch_weyl_sum(param, cap)
            out.append(_check(f"branching.weyl_equals_closed[{tag}]", closed.same_map(weyl),
                              f"{closed.format_entries()} vs {weyl.format_entries()}"))
        if data.tube:
            general = branch_closed_form(param, cap, force_general=True)
            out.append(_check(f"branching.general_path_on_tube[{tag}]", closed.same_map(general)))
            parity = {(m - int(param.value_on_z0) - data.d) % 2 for m in closed.entries}
            out.append(_check(f"branching.tube_parity[{tag}]", parity <= {0}, parity))
            out.append(_check(f"branching.tube_offset_identity[{tag}]",
                              inner(pair.rho_n, data.Z0) == data.d + 1))
        u = hds_u_character(param, cap + 1)
        back = resum(oracle, cap + 1)
        same = all(u.coefficient(e) == back.coefficient(e) for e in range(int(u.offset), cap + 2))
        out.append(_check(f"oracle.resum_roundtrip[{tag}]", same))
        dist = w_u_distribution(param)
        out.append(_check(f"oracle.lowest_degree[{tag}]", u.coefficient(min(dist)) == dist[min(dist)]))
        out.append(_check(f"branching.w_dimension[{tag}]",
                          sum(dist.values()) == weyl_dimension(lowest_k_type(param))))
    except HSBranchError as exc:
        out.append(Check(f"branching.exception[{tag}]", False, f"{type(exc).__name__}: {exc}"))
    return out


def run(pairs=None, max_rank: int = 5, include_rootsys: bool = True) -> list:
    """Run every suite; ``pairs=None`` means the full catalog up to ``max_rank`` plus EIII and EVII."""
    if pairs is None:
        pairs = sweep(max_rank, exceptional=True)
    checks = rootsys_checks() if include_rootsys else []
    for spec in pairs:
        pair = build_pair(spec)
        checks += pair_checks(pair)
        checks += ks_checks(pair)
        checks += branching_checks(pair)
    return checks
