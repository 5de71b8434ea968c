"""Brute-force branching oracle built from the module model S(p+) (x) W.

Only the Z0-grading is used: p+ contributes c generators of degree 1 and d+1 of
degree 2, and W contributes the Z0-values of its weights.  A holomorphic
H0-constituent with parameter m fills degrees m+1, m+3, ..., so multiplicities
are recovered as coefficient differences.  Nothing here uses the closed
formulas of :mod:`hsbranch.branching`.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InvariantViolation, UsageError
from .kstriple import KSData, ks_data
from .rootsys import inner, weight_multiplicities
from .series import DiracSeries

__all__ = [
    "symmetric_algebra_u_character",
    "w_u_distribution",
    "hds_u_character",
    "extract_h0_multiplicities",
    "resum",
    "branch_oracle",
]


def _poly_symmetric(c: int, d1: int, top: int) -> list:
    # coefficients of 1/((1-q)^c (1-q^2)^d1) for degrees 0..top
    coeffs = [1] + [0] * top
    for step, count in ((1, c), (2, d1)):
        for _ in range(count):
            for k in range(step, top + 1):
                coeffs[k] += coeffs[k - step]
    return coeffs


def symmetric_algebra_u_character(ksdata: KSData, cap: int) -> DiracSeries:
    """Z0-graded character of S(p+), exact through degree ``cap``."""
    if cap < 0:
        raise UsageError("cap must be nonnegative")
    coeffs = _poly_symmetric(ksdata.c, ksdata.d_plus_1, int(cap))
    return DiracSeries(0, {2 * k: v for k, v in enumerate(coeffs)}, 2 * int(cap))


def w_u_distribution(param) -> dict:
    """Z0-value -> number of weight vectors of the lowest K-type W."""
    pair = param.pair
    z0 = ks_data(pair).Z0
    from .branching import lowest_k_type

    out: dict = {}
    for nu, m in weight_multiplicities(lowest_k_type(param)).items():
        v = inner(nu, z0)
        out[v] = out.get(v, 0) + m
    return out


def hds_u_character(param, cap) -> DiracSeries:
    """Z0-graded character of S(p+) (x) W, exact through degree ``cap``."""
    data = ks_data(param.pair)
    cap = Fraction(cap)
    dist = w_u_distribution(param)
    low = min(dist)
    span = int((cap - low) // 1) if cap >= low else -1
    if span < 0:
        return DiracSeries(low, {}, 0)
    sym = _poly_symmetric(data.c, data.d_plus_1, span)
    out: dict = {}
    for v, count in dist.items():
        base = v - low
        if base.denominator != 1:
            raise InvariantViolation("weights of W do not differ by integers on Z0")
        base = int(base)
        for k in range(0, span - base + 1):
            out[2 * (base + k)] = out.get(2 * (base + k), 0) + count * sym[k]
    return DiracSeries(low, out, 2 * span)


def extract_h0_multiplicities(u_char: DiracSeries, cap: int, *, pair: str = "", lam=()):
    """Multiplicities m -> coeff(m+1) - coeff(m-1) for m <= cap.

    Raises on a negative difference, on a constituent at m <= 0, and on a
    nonzero multiplicity at a non-integral m.
    """
    from .branching import BranchingResult

    cap = int(cap)
    if u_char.upto < cap + 1:
        raise UsageError(f"u-character exact only to degree {u_char.upto}, extraction to m = {cap} needs {cap + 1}")
    entries = {}
    m = u_char.offset - 1
    while m <= cap:
        v = u_char.coefficient(m + 1) - u_char.coefficient(m - 1)
        if v < 0:
            raise InvariantViolation(f"negative extracted multiplicity {v} at m = {m}: non-holomorphic constituent")
        if v:
            if Fraction(m).denominator != 1:
                raise DomainError(f"constituent at non-integral parameter m = {m}", condition="integrality")
            if m <= 0:
                raise InvariantViolation(f"constituent at nonpositive parameter m = {m}")
            entries[int(m)] = int(v)
        m += 1
    note = None if entries else f"no constituent with m <= {cap}"
    return BranchingResult(pair, tuple(lam), cap, entries, "oracle", note)


def resum(result, upto) -> DiracSeries:
    """Re-expand multiplicities into Z0-degrees: each m fills m+1, m+3, ..."""
    upto = int(upto)
    if upto > result.cap + 1:
        raise UsageError(f"resummation beyond degree {result.cap + 1} needs entries past the cap")
    if not result.entries:
        return DiracSeries(0, {}, 2 * max(upto, 0))
    low = min(result.entries) + 1
    out: dict = {}
    for m, v in result.entries.items():
        e = m + 1
        while e <= upto:
            out[2 * (e - low)] = out.get(2 * (e - low), 0) + v
            e += 2
    return DiracSeries(low, out, 2 * max(upto - low, 0))


def branch_oracle(param, cap: int):
    """Oracle branching law for an :class:`~hsbranch.branching.HCParameter`."""
    u = hds_u_character(param, int(cap) + 1)
    return extract_h0_multiplicities(u, cap, pair=str(param.pair.spec), lam=param.lam)
