"""Truncated sums of Dirac deltas on the line spanned by phi.

A series is supported on ``offset + s/2`` for integer steps ``0 <= s <= cap``
and is exact on that whole window.  Products keep the smaller window, sums the
window where both summands are exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import UsageError

__all__ = ["DiracSeries", "delta", "z_series", "y_series", "convolve_all"]


def _norm(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class DiracSeries:
    offset: Fraction
    coeffs: dict = field(default_factory=dict)
    cap: int = 0

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.cap < 0:
            raise UsageError("negative truncation window")
        clean = {s: _norm(c) for s, c in self.coeffs.items() if c != 0 and 0 <= s <= self.cap}
        if any(not isinstance(s, int) for s in clean):
            raise UsageError("series steps must be integers")
        object.__setattr__(self, "coeffs", clean)

    @property
    def upto(self) -> Fraction:
        """Largest exponent on which the series is exact."""
        return self.offset + Fraction(self.cap, 2)

    def exponent(self, step: int) -> Fraction:
        return self.offset + Fraction(step, 2)

    def _step(self, exponent) -> int | None:
        s = 2 * (Fraction(exponent) - self.offset)
        return int(s) if s.denominator == 1 else None

    def coefficient(self, exponent):
        """Coefficient at ``exponent``; zero off the support, error beyond the window."""
        exponent = Fraction(exponent)
        if exponent > self.upto:
            raise UsageError(f"exponent {exponent} lies beyond the exact window ending at {self.upto}")
        s = self._step(exponent)
        if s is None or s < 0:
            return 0
        return self.coeffs.get(s, 0)

    def items(self):
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        return [(self.exponent(s), self.coeffs[s]) for s in sorted(self.coeffs)]

    def __mul__(self, other):
        if isinstance(other, DiracSeries):
            cap = min(self.cap, other.cap)
            out: dict = {}
            for s, a in self.coeffs.items():
                for t, b in other.coeffs.items():
                    u = s + t
                    if u <= cap:
                        out[u] = out.get(u, 0) + a * b
            return DiracSeries(self.offset + other.offset, out, cap)
        k = Fraction(other)
        return DiracSeries(self.offset, {s: c * k for s, c in self.coeffs.items()}, self.cap)

    __rmul__ = __mul__

    def __add__(self, other: "DiracSeries") -> "DiracSeries":
        lo = min(self.offset, other.offset)
        hi = min(self.upto, other.upto)
        cap2 = 2 * (hi - lo)
        if cap2.denominator != 1:
            raise UsageError("series live on incompatible half-integer grids")
        out: dict = {}
        for ser in (self, other):
            shift = 2 * (ser.offset - lo)
            if shift.denominator != 1:
                raise UsageError("series live on incompatible half-integer grids")
            for s, c in ser.coeffs.items():
                u = s + int(shift)
                out[u] = out.get(u, 0) + c
        return DiracSeries(lo, out, int(cap2))

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def shift(self, amount) -> "DiracSeries":
        """Convolution with the delta at ``amount``."""
        return DiracSeries(self.offset + Fraction(amount), self.coeffs, self.cap)

    def truncate(self, upto) -> "DiracSeries":
        upto = min(Fraction(upto), self.upto)
        cap2 = 2 * (upto - self.offset)
        cap = max(int(cap2 // 1), 0)
        return DiracSeries(self.offset, self.coeffs, cap)

    def __repr__(self):
        terms = ", ".join(f"{e}:{c}" for e, c in self.items()[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"DiracSeries([{terms}{more}] exact to {self.upto})"


def delta(exponent, cap: int = 0) -> DiracSeries:
    """Single delta at ``exponent``, declared exact on a window of ``cap`` half-steps."""
    return DiracSeries(Fraction(exponent), {0: 1}, cap)


def _geometric(step_half: int, cap: int) -> DiracSeries:
    return DiracSeries(0, {s: 1 for s in range(0, cap + 1, step_half)}, cap)


@lru_cache(maxsize=None)
def z_series(r, s: int, cap: int) -> DiracSeries:
    """The ``s``-fold convolution power of ``sum_n delta_{n r}``; the empty power is delta_0.

    ``cap`` is the window in half-steps.
    """
    r = Fraction(r)
    if r <= 0:
        raise UsageError("z_series needs a positive step")
    if s < 0:
        raise UsageError("negative convolution power")
    step = 2 * r
    if step.denominator != 1:
        raise UsageError("z_series step must lie on the half-integer grid")
    out = delta(0, cap)
    geo = _geometric(int(step), cap)
    for _ in range(s):
        out = out * geo
    return out


def y_series(nu, cap: int, power: int = 1) -> DiracSeries:
    """``power``-fold convolution power of ``sum_n delta_{n nu + nu/2}``, window ``cap`` half-steps."""
    nu = Fraction(nu)
    if nu == 0:
        raise UsageError("y_series is undefined at nu = 0")
    if nu < 0:
        raise UsageError("only positive steps are supported")
    return z_series(nu, power, cap).shift(power * nu / 2)


def convolve_all(*series: DiracSeries) -> DiracSeries:
    out = series[0]
    for s in series[1:]:
        out = out * s
    return out
