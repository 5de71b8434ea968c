"""Branching laws of holomorphic discrete series restricted to H0.

Two closed paths are provided.  ``branch_closed_form`` pushes the K_z
decomposition of the lowest K-type through the convolution
``delta_{(mu+rho_z)(Z0)-1} * z_{1}^{c} * z_{2}^{d}``; ``branch_weyl_sum`` evaluates
the alternating sum over W_K.  Both produce a :class:`BranchingResult` whose
entries map ``m`` to the multiplicity of the holomorphic H0-constituent with
parameter ``m phi``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InvariantViolation, UnsupportedError, UsageError
from .hermitian import HermitianPair, build_pair, centralizer_subsystem, format_vector
from .kstriple import KSData, ks_data
from .rootsys import (
    WEYL_GROUP_LIMIT,
    common_scaling,
    Irrep,
    RootSystem,
    Vec,
    coroot_pairing,
    inner,
    weight_multiplicities,
    weyl_dimension,
)
from .series import DiracSeries, y_series, z_series

__all__ = [
    "HCParameter",
    "KTypeDecomposition",
    "BranchingResult",
    "PATHS",
    "lowest_k_type",
    "k_to_kz_branch",
    "branch_closed_form",
    "branch_weyl_sum",
    "weyl_sum_series",
    "parse_lambda",
    "make_parameter",
]

PATHS = ("closed_form", "weyl_sum", "oracle")


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_lambda(text: str) -> list:
    """Comma-separated exact rationals, e.g. ``"3/2,1/2,-1/2,-3/2"``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        return [Fraction(p) for p in parts if p]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse lambda {text!r}: {exc}") from None


@dataclass(frozen=True, eq=False)
class HCParameter:
    """A Harish-Chandra parameter of a holomorphic discrete series.

    Construction checks strict dominance on the compact positive roots,
    positivity on the noncompact positive roots, and coroot-integrality of
    lambda + rho.  For su(p,q) the trace direction is projected out first.
    """

    pair: HermitianPair
    lam: Vec

    def __post_init__(self):
        object.__setattr__(self, "lam", self.pair.normalize(self.lam))
        self.validate()

    @classmethod
    def from_fundamental(cls, pair: HermitianPair, coeffs: Sequence) -> "HCParameter":
        fw = pair.system.fundamental_weights
        if len(coeffs) != len(fw):
            raise UsageError(f"{pair.spec} has {len(fw)} fundamental weights, got {len(coeffs)} coefficients")
        lam = Vec.zero(pair.ambient_dim)
        for c, w in zip(coeffs, fw):
            lam = lam + w * Fraction(c)
        return cls(pair, lam)

    def validate(self):
        pair, lam = self.pair, self.lam
        for a in pair.psi_c:
            if inner(lam, a) <= 0:
                raise DomainError(
                    f"lambda is not strictly dominant: (lambda, {pair.format_root(a)}) = {inner(lam, a)}",
                    root=a, condition="dominance")
        for a in pair.psi_n:
            if inner(lam, a) <= 0:
                raise DomainError(
                    f"lambda is not holomorphic: (lambda, {pair.format_root(a)}) = {inner(lam, a)}",
                    root=a, condition="holomorphy")
        shifted = lam + pair.rho
        for a in pair.psi:
            k = coroot_pairing(shifted, a)
            if k.denominator != 1:
                raise DomainError(
                    f"lambda + rho is not integral on the coroot of {pair.format_root(a)} (value {k})",
                    root=a, condition="integrality")

    @property
    def value_on_z0(self) -> Fraction:
        return inner(self.lam, ks_data(self.pair).Z0)

    def __str__(self):
        return format_vector(self.lam, self.pair.coordinate_names)


def lowest_k_type(param: HCParameter) -> Irrep:
    """The K-type with infinitesimal character lambda + rho_n."""
    return Irrep(param.pair.compact_system, param.lam + param.pair.rho_n)


@dataclass(frozen=True)
class KTypeDecomposition:
    """Restriction of a K-irrep to K_z; entries are ``(mu, multiplicity, dim)``.

    ``mu`` is a K_z highest weight; the K_z infinitesimal character is mu + rho_z.
    """

    entries: tuple
    rho_z: Vec
    total_dim: int

    def check(self):
        s = sum(m * d for _, m, d in self.entries)
        if s != self.total_dim:
            raise InvariantViolation(f"K_z constituents have total dimension {s}, expected {self.total_dim}")
        return self


def _character(system: RootSystem, hw: Vec) -> dict:
    if not system.positive_roots:
        return {hw: 1}
    return weight_multiplicities(Irrep(system, hw + system.rho))


def k_to_kz_branch(pair: HermitianPair, data: KSData, rep: Irrep) -> KTypeDecomposition:
    """Decompose ``rep`` under K_z by repeated subtraction of K_z characters."""
    kz = centralizer_subsystem(pair, data.Z0).system
    rho_z = kz.rho
    remaining = dict(weight_multiplicities(rep))
    entries = []
    while remaining:
        top = max(remaining, key=lambda nu: (inner(nu, rho_z), nu))
        if not kz.is_dominant(top):
            raise InvariantViolation(f"maximal remaining weight {top} is not K_z-dominant")
        k = remaining[top]
        for nu, m in _character(kz, top).items():
            left = remaining.get(nu, 0) - k * m
            if left < 0:
                raise InvariantViolation(f"negative remainder {left} at weight {nu} while subtracting {top}")
            if left:
                remaining[nu] = left
            else:
                remaining.pop(nu, None)
        dim = weyl_dimension(Irrep(kz, top + rho_z)) if kz.positive_roots else 1
        entries.append((top, k, dim))
    entries.sort(key=lambda e: (inner(e[0], data.Z0), e[0]))
    return KTypeDecomposition(tuple(entries), rho_z, weyl_dimension(rep)).check()


@dataclass(frozen=True)
class BranchingResult:
    """Multiplicities ``m -> mult`` of the H0-constituents with parameter ``m phi``, complete for m <= cap."""

    pair: str
    lam: Vec
    cap: int
    entries: dict = field(default_factory=dict)
    path: str = "closed_form"
    note: str | None = None

    def __post_init__(self):
        if self.path not in PATHS:
            raise UsageError(f"unknown path {self.path!r}")
        clean = {int(m): int(v) for m, v in sorted(self.entries.items()) if v}
        object.__setattr__(self, "entries", clean)
        object.__setattr__(self, "lam", Vec(self.lam))

    def multiplicity(self, m: int) -> int:
        if m > self.cap:
            raise UsageError(f"m = {m} lies beyond cap {self.cap}")
        return self.entries.get(m, 0)

    def same_map(self, other: "BranchingResult") -> bool:
        """Equality of the multiplicity maps on the common window."""
        cap = min(self.cap, other.cap)
        a = {m: v for m, v in self.entries.items() if m <= cap}
        b = {m: v for m, v in other.entries.items() if m <= cap}
        return a == b

    def to_json(self) -> dict:
        out = {
            "pair": self.pair,
            "lambda": [_fmt(x) for x in self.lam],
            "cap": self.cap,
            "entries": [{"m": m, "mult": v} for m, v in self.entries.items()],
            "path": self.path,
        }
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj) -> "BranchingResult":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            pair=obj["pair"],
            lam=Vec(Fraction(x) for x in obj["lambda"]),
            cap=int(obj["cap"]),
            entries={int(e["m"]): int(e["mult"]) for e in obj["entries"]},
            path=obj["path"],
            note=obj.get("note"),
        )

    def format_entries(self) -> str:
        return ", ".join(f"{m}:{v}" for m, v in self.entries.items())


def _window(offset, cap) -> int | None:
    """Half-steps needed for a series starting at ``offset`` to be exact up to ``cap``; None if empty."""
    span = 2 * (Fraction(cap) - Fraction(offset))
    if span < 0:
        return None
    return math.ceil(span)


def _collect(series: DiracSeries | None, cap: int, label: str) -> dict:
    """Integer-exponent entries of ``series`` up to ``cap``, checked to be nonnegative integers."""
    if series is None:
        return {}
    if series.upto < cap:
        raise InvariantViolation(f"{label}: series exact only up to {series.upto}, cap {cap}")
    out = {}
    for e, v in series.items():
        if e > cap:
            continue
        v = Fraction(v)
        if e.denominator != 1:
            raise DomainError(f"{label}: constituent at non-integral parameter {e}", condition="integrality")
        if v.denominator != 1 or v < 0:
            raise InvariantViolation(f"{label}: multiplicity {v} at m = {e} is not a nonnegative integer")
        if e <= 0:
            raise InvariantViolation(f"{label}: constituent at nonpositive parameter m = {e}")
        out[int(e)] = int(v)
    return out


def _accumulate(total, term):
    return term if total is None else total + term


def _empty_note(entries, cap):
    return None if entries else f"no constituent with m <= {cap}"


def branch_closed_form(param: HCParameter, cap: int, *, force_general: bool = False,
                       convention: str = "series", weight_by_dimension: bool = True) -> BranchingResult:
    """Branching law from the closed formula.

    Tube pairs use ``dim W * delta_{lambda(Z0)+d} * z_2^d`` unless ``force_general``.
    The general path sums ``mult_j dim_j delta_{(mu_j+rho_z)(Z0)-1} * z_1^c * z_2^d``.
    ``convention="literal"`` places constituents at ``mu_j(Z0) + n`` instead, which is
    one step too high; it exists only to document the disagreement with the oracle.
    ``weight_by_dimension=False`` drops the ``dim_j`` factor, likewise kept only for comparison.
    """
    if convention not in ("series", "literal"):
        raise UsageError(f"unknown convention {convention!r}")
    pair = param.pair
    data = ks_data(pair)
    z0 = data.Z0
    cap = int(cap)
    total = None
    if data.tube and not force_general:
        dim_w = weyl_dimension(lowest_k_type(param))
        offset = param.value_on_z0 + data.d
        if convention == "literal":
            offset += 1
        w = _window(offset, cap)
        if w is not None:
            total = z_series(2, data.d, w).shift(offset) * dim_w
    else:
        decomposition = k_to_kz_branch(pair, data, lowest_k_type(param))
        for mu, mult, dim in decomposition.entries:
            offset = inner(mu + decomposition.rho_z, z0) - 1
            if convention == "literal":
                offset += 1
            w = _window(offset, cap)
            if w is None:
                continue
            term = (z_series(1, data.c, w) * z_series(2, data.d, w)).shift(offset) * (mult * (dim if weight_by_dimension else 1))
            total = _accumulate(total, term)
    entries = _collect(total, cap, "closed form")
    return BranchingResult(str(pair.spec), param.lam, cap, entries, "closed_form", _empty_note(entries, cap))


def _dot(x, y) -> int:
    return sum(p * q for p, q in zip(x, y))


def _varpi(positive_z: Sequence, rho_z, xi) -> Fraction:
    num, den = 1, 1
    for a in positive_z:
        num *= _dot(xi, a)
        den *= _dot(rho_z, a)
    return Fraction(num, den)


def weyl_sum_series(param: HCParameter, cap: int, *, sign_correction: bool = True,
                    limit: int = WEYL_GROUP_LIMIT) -> DiracSeries | None:
    """The alternating W_K sum as a rational Dirac series exact up to ``cap``.

    With ``sign_correction=False`` the global factor (-1)^a is dropped, which
    negates the result whenever a is odd.
    """
    pair = param.pair
    data = ks_data(pair)
    compact = pair.compact_system
    if compact.weyl_group_order > limit:
        raise UnsupportedError(
            f"|W_K| = {compact.weyl_group_order} exceeds the materialisation limit {limit}; use branch_closed_form")
    kz = centralizer_subsystem(pair, data.Z0).system
    orbit = compact.weyl_orbit(param.lam, limit=limit)
    if len(orbit) != compact.weyl_group_order:
        raise InvariantViolation(f"orbit of lambda has {len(orbit)} points, |W_K| = {compact.weyl_group_order}")
    wz = kz.weyl_group_order
    # all pairings below are ratios or signs, so a common integer scaling is harmless
    den, scaled = common_scaling([*orbit, pair.rho_n, kz.rho, *kz.positive_roots, *compact.positive_roots])
    n = len(orbit)
    pts, (rn, rho_z) = scaled[:n], scaled[n:n + 2]
    pos_z = scaled[n + 2:n + 2 + len(kz.positive_roots)]
    pos_c = scaled[n + 2 + len(kz.positive_roots):]
    cosets = sum(1 for x in pts if all(_dot(x, a) > 0 for a in pos_z))
    if n % wz or n // wz != cosets:
        raise InvariantViolation(f"|W_K|/|W_z| = {n}/{wz} does not match {cosets} coset representatives")
    weights: dict = {}
    for x, xv in zip(orbit, pts):
        v_lam = _varpi(pos_z, rho_z, xv)
        if v_lam != _varpi(pos_z, rho_z, [p + q for p, q in zip(xv, rn)]):
            raise InvariantViolation(f"varpi_z changes under the rho_n shift at {x}")
        sign = -1 if sum(1 for a in pos_c if _dot(xv, a) < 0) % 2 else 1
        key = inner(x, data.Z0)
        weights[key] = weights.get(key, 0) + sign * v_lam
    scale = Fraction(1, wz)
    if sign_correction and data.a % 2:
        scale = -scale
    shift = Fraction(data.a + data.c, 2) + data.d
    total = None
    for value, coef in sorted(weights.items()):
        if coef == 0:
            continue
        offset = value + shift
        w = _window(offset, cap)
        if w is None:
            continue
        term = y_series(1, w, data.a + data.c) * y_series(2, w, data.d)
        total = _accumulate(total, term.shift(value) * (coef * scale))
    return total


def branch_weyl_sum(param: HCParameter, cap: int, *, limit: int = WEYL_GROUP_LIMIT) -> BranchingResult:
    """Branching law from the alternating sum over the compact Weyl group."""
    cap = int(cap)
    entries = _collect(weyl_sum_series(param, cap, limit=limit), cap, "Weyl sum")
    return BranchingResult(str(param.pair.spec), param.lam, cap, entries, "weyl_sum", _empty_note(entries, cap))


def make_parameter(pair, lam=None, *, fundamental=None) -> HCParameter:
    """Convenience constructor; ``lam=None`` and ``fundamental=None`` gives lambda = rho."""
    if isinstance(pair, str):
        pair = build_pair(pair)
    if fundamental is not None:
        return HCParameter.from_fundamental(pair, fundamental)
    if lam is None:
        lam = pair.rho
    return HCParameter(pair, Vec(lam))
