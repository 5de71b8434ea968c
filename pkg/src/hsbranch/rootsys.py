"""Exact root systems, Weyl group actions and compact-group characters.

Every coordinate is a :class:`fractions.Fraction`.  Roots are identified with
vectors through the Euclidean pairing of the ambient coordinates, so a root
evaluated on a vector ``Z`` is just ``inner(root, Z)``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import ConfigurationError, DomainError, InvariantViolation, UnsupportedError, UsageError

__all__ = [
    "Vec",
    "inner",
    "coroot_pairing",
    "reflect",
    "common_scaling",
    "RootSystem",
    "Irrep",
    "build_root_system",
    "reflection_closure",
    "weyl_dimension",
    "weight_multiplicities",
    "kostant_multiplicities",
    "solve_rational",
    "WEYL_GROUP_LIMIT",
]

# Weyl groups are only enumerated below this order.
WEYL_GROUP_LIMIT = math.factorial(10)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise UsageError("floating point coordinates are not accepted; use Fraction or str")
    return Fraction(x)


class Vec(tuple):
    """Immutable exact vector.  Arithmetic is componentwise; ``*`` is scaling."""

    def __new__(cls, coords: Iterable = ()):
        return super().__new__(cls, (_frac(c) for c in coords))

    @classmethod
    def zero(cls, dim: int) -> "Vec":
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, i: int, value=1) -> "Vec":
        c = [0] * dim
        c[i] = value
        return cls(c)

    def _check(self, other):
        if not isinstance(other, tuple) or len(other) != len(self):
            raise UsageError(f"dimension mismatch: {len(self)} vs {len(other) if isinstance(other, tuple) else '?'}")

    def __add__(self, other):
        self._check(other)
        return Vec(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return Vec(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Vec(-a for a in self)

    def __mul__(self, k):
        k = _frac(k)
        return Vec(a * k for a in self)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = _frac(k)
        return Vec(a / k for a in self)

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        return "Vec(" + ", ".join(str(c) for c in self) + ")"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"


def inner(a: Sequence, b: Sequence) -> Fraction:
    """Euclidean inner product of two vectors of the same ambient dimension."""
    if len(a) != len(b):
        raise UsageError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def coroot_pairing(lam: Sequence, gamma: Sequence) -> Fraction:
    """Return ``2 (lam, gamma) / (gamma, gamma)``, i.e. ``lam`` on the coroot of ``gamma``."""
    gg = inner(gamma, gamma)
    if gg == 0:
        raise UsageError("coroot of the zero vector is undefined")
    return 2 * inner(lam, gamma) / gg


def common_scaling(vectors: Iterable[Sequence]) -> tuple:
    """Common denominator ``D`` and the integer tuples ``D * v``."""
    vectors = [tuple(_frac(c) for c in v) for v in vectors]
    den = math.lcm(*(c.denominator for v in vectors for c in v)) if vectors else 1
    return den, [tuple(int(c * den) for c in v) for v in vectors]


def reflect(v: Vec, alpha: Vec) -> Vec:
    """Weyl reflection of ``v`` in the hyperplane orthogonal to ``alpha``."""
    return v - alpha * coroot_pairing(v, alpha)


def solve_rational(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular linear system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [[_frac(x) for x in row] + [_frac(r)] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise UsageError("singular linear system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


_WEYL_ORDER = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2**n * math.factorial(n),
    "C": lambda n: 2**n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def _bond(a: Vec, b: Vec) -> int:
    return int(coroot_pairing(a, b) * coroot_pairing(b, a))


def classify_simple_roots(simple: Sequence[Vec]) -> list[str]:
    """Cartan labels of the irreducible components spanned by ``simple``.

    Components are returned in decreasing rank, e.g. ``["D4"]`` or ``["A2", "A1"]``.
    """
    n = len(simple)
    adj = {i: [j for j in range(n) if j != i and inner(simple[i], simple[j]) != 0] for i in range(n)}
    seen: set[int] = set()
    labels = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        labels.append(_component_label([simple[i] for i in comp]))
    labels.sort(key=lambda s: (-int(s[1:]), s))
    return labels


def _component_label(simple: list[Vec]) -> str:
    k = len(simple)
    bonds = [_bond(a, b) for a, b in combinations(simple, 2)]
    if 3 in bonds:
        return "G2"
    if 2 in bonds:
        if k == 2:
            return "B2"
        norms = [inner(a, a) for a in simple]
        if k == 4 and norms.count(min(norms)) == 2:
            return "F4"
        return "B%d" % k if norms.count(min(norms)) == 1 else "C%d" % k
    degree = [sum(1 for b in simple if b is not a and inner(a, b) != 0) for a in simple]
    if max(degree, default=0) <= 2:
        return "A%d" % k
    # one trivalent node: D_k or E_k
    arms = sorted(_arm_lengths(simple, degree.index(3)))
    if arms[0] == 1 and arms[1] == 1:
        return "D%d" % k
    return "E%d" % k


def _arm_lengths(simple: list[Vec], centre: int) -> list[int]:
    lengths = []
    for nb in (j for j in range(len(simple)) if j != centre and inner(simple[j], simple[centre]) != 0):
        prev, cur, length = centre, nb, 1
        while True:
            nxt = [j for j in range(len(simple)) if j not in (prev, cur) and inner(simple[j], simple[cur]) != 0]
            if not nxt:
                break
            prev, cur, length = cur, nxt[0], length + 1
        lengths.append(length)
    return lengths


def weyl_group_order_from_labels(labels: Iterable[str]) -> int:
    order = 1
    for lab in labels:
        order *= _WEYL_ORDER[lab[0]](int(lab[1:]))
    return order


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A finite reduced root system in a fixed ambient Euclidean space.

    ``cartan_type`` is a label such as ``"C3"``, ``"E6"`` or ``"A1+A1"``; the
    empty string denotes the empty system (a torus).  Positive roots are the
    roots that are nonnegative combinations of ``simple_roots``.
    """

    cartan_type: str
    ambient_dim: int
    roots: frozenset
    simple_roots: tuple

    def __post_init__(self):
        for r in self.roots:
            if len(r) != self.ambient_dim:
                raise ConfigurationError("root of wrong ambient dimension")

    @classmethod
    def from_positive_roots(cls, positive: Iterable[Vec], ambient_dim: int, label: str | None = None) -> "RootSystem":
        """Subsystem determined by a set of positive roots; simple roots are the indecomposables."""
        pos = set(Vec(p) for p in positive)
        simple = [a for a in pos if not any((a - b) in pos for b in pos if b != a)]
        simple.sort(key=lambda v: tuple(-c for c in v))
        roots = frozenset(pos | {-a for a in pos})
        if label is None:
            label = "+".join(classify_simple_roots(simple))
        return cls(label, ambient_dim, roots, tuple(simple))

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def with_simple_roots(self, simple: Sequence[Vec], label: str | None = None) -> "RootSystem":
        """Same root set with another base (used for the pair-specific orderings)."""
        simple = tuple(Vec(s) for s in simple)
        if not all(s in self.roots for s in simple):
            raise ConfigurationError("proposed simple root is not a root")
        rs = RootSystem(label or self.cartan_type, self.ambient_dim, self.roots, simple)
        rs.positive_roots  # validates sign coherence
        return rs

    @cached_property
    def _gram_inverse_rows(self):
        g = [[inner(a, b) for b in self.simple_roots] for a in self.simple_roots]
        n = len(g)
        cols = [solve_rational(g, [int(i == j) for i in range(n)]) for j in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def simple_coefficients(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the simple-root basis; ``v`` must lie in their span."""
        rhs = [inner(v, s) for s in self.simple_roots]
        coeffs = tuple(sum((gi * r for gi, r in zip(row, rhs)), Fraction(0)) for row in self._gram_inverse_rows)
        back = Vec.zero(self.ambient_dim)
        for c, s in zip(coeffs, self.simple_roots):
            back = back + s * c
        if back != tuple(v):
            raise UsageError(f"{v} is not in the span of the simple roots")
        return coeffs

    @cached_property
    def positive_roots(self) -> tuple:
        pos = []
        for r in self.roots:
            c = self.simple_coefficients(r)
            if any(x != int(x) for x in c):
                raise ConfigurationError(f"root {r} is not an integral combination of simple roots")
            if all(x >= 0 for x in c):
                pos.append((sum(c), tuple(-x for x in c), r))
            elif not all(x <= 0 for x in c):
                raise ConfigurationError(f"root {r} has mixed-sign simple coefficients")
        pos.sort()
        return tuple(r for _, _, r in pos)

    @cached_property
    def _positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    def is_positive(self, v) -> bool:
        return v in self._positive_set

    def height(self, v) -> Fraction:
        return sum(self.simple_coefficients(v))

    @cached_property
    def rho(self) -> Vec:
        total = Vec.zero(self.ambient_dim)
        for r in self.positive_roots:
            total = total + r
        return total / 2

    @cached_property
    def highest_root(self) -> Vec | None:
        """The unique root dominating every root, or ``None`` for reducible systems."""
        if not self.positive_roots:
            return None
        top = self.positive_roots[-1]
        for r in self.positive_roots:
            if any(c < 0 for c in self.simple_coefficients(top - r)):
                return None
        return top

    def precedes(self, a, b) -> bool:
        """Root order: ``b - a`` is a nonnegative combination of simple roots."""
        return all(c >= 0 for c in self.simple_coefficients(b - a))

    @cached_property
    def cartan_matrix(self) -> tuple:
        return tuple(
            tuple(int(coroot_pairing(a, b)) for b in self.simple_roots) for a in self.simple_roots
        )

    @cached_property
    def component_labels(self) -> tuple:
        return tuple(classify_simple_roots(self.simple_roots))

    @cached_property
    def weyl_group_order(self) -> int:
        return weyl_group_order_from_labels(self.component_labels)

    @cached_property
    def fundamental_weights(self) -> tuple:
        """Weights in the span of the roots dual to the simple coroots."""
        n = self.rank
        g = [[coroot_pairing(a, b) for a in self.simple_roots] for b in self.simple_roots]
        out = []
        for i in range(n):
            x = solve_rational(g, [int(i == j) for j in range(n)])
            w = Vec.zero(self.ambient_dim)
            for c, s in zip(x, self.simple_roots):
                w = w + s * c
            out.append(w)
        return tuple(out)

    @cached_property
    def _height_functional(self) -> Vec:
        """Vector ``h`` in the root span with ``(h, alpha_i) = 1`` for all simple roots."""
        n = self.rank
        if n == 0:
            return Vec.zero(self.ambient_dim)
        g = [[inner(a, b) for a in self.simple_roots] for b in self.simple_roots]
        x = solve_rational(g, [1] * n)
        h = Vec.zero(self.ambient_dim)
        for c, s in zip(x, self.simple_roots):
            h = h + s * c
        return h

    def is_dominant(self, v, strict: bool = False) -> bool:
        if strict:
            return all(inner(v, a) > 0 for a in self.simple_roots)
        return all(inner(v, a) >= 0 for a in self.simple_roots)

    def dominant_conjugate(self, v: Vec) -> Vec:
        v = Vec(v)
        changed = True
        while changed:
            changed = False
            for a in self.simple_roots:
                if inner(v, a) < 0:
                    v = reflect(v, a)
                    changed = True
        return v

    def weyl_orbit(self, v: Vec, limit: int = WEYL_GROUP_LIMIT) -> list:
        """Orbit of ``v`` under the Weyl group, by breadth-first search over simple reflections."""
        if self.weyl_group_order > limit:
            raise UnsupportedError(f"Weyl group of order {self.weyl_group_order} exceeds {limit}")
        v = Vec(v)
        den, (iv, *simple) = common_scaling([v, *self.simple_roots])
        norms = [sum(c * c for c in a) for a in simple]
        if any(2 * sum(x * y for x, y in zip(iv, a)) % g for a, g in zip(simple, norms)):
            return self._weyl_orbit_exact(v)
        # integer coordinates: the orbit stays on the same lattice
        seen = {iv}
        order = [iv]
        queue = deque([iv])
        while queue:
            x = queue.popleft()
            for a, g in zip(simple, norms):
                k = 2 * sum(p * q for p, q in zip(x, a)) // g
                if not k:
                    continue
                y = tuple(p - k * q for p, q in zip(x, a))
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return [Vec(Fraction(c, den) for c in x) for x in order]

    def _weyl_orbit_exact(self, v: Vec) -> list:
        seen = {v}
        order = [v]
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for a in self.simple_roots:
                y = reflect(x, a)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return order

    def sign_of(self, w_lam: Vec) -> int:
        """Sign of the Weyl element carrying a strictly dominant vector to ``w_lam``."""
        neg = sum(1 for a in self.positive_roots if inner(w_lam, a) < 0)
        return -1 if neg % 2 else 1

    def is_closed_under_reflections(self) -> bool:
        return all(reflect(b, a) in self.roots for a in self.roots for b in self.roots)

    def __repr__(self):
        return f"RootSystem({self.cartan_type!r}, rank={self.rank}, |roots|={len(self.roots)})"


def _pm_pairs(dim: int, i: int, j: int):
    for si, sj in product((1, -1), repeat=2):
        c = [0] * dim
        c[i], c[j] = si, sj
        yield Vec(c)


def _roots_a(n):
    dim = n + 1
    roots = [Vec.unit(dim, i) - Vec.unit(dim, j) for i in range(dim) for j in range(dim) if i != j]
    simple = [Vec.unit(dim, i) - Vec.unit(dim, i + 1) for i in range(n)]
    return dim, roots, simple


def _roots_bcd(kind, n):
    dim = n
    roots = [v for i, j in combinations(range(n), 2) for v in _pm_pairs(dim, i, j)]
    simple = [Vec.unit(dim, i) - Vec.unit(dim, i + 1) for i in range(n - 1)]
    if kind == "B":
        roots += [Vec.unit(dim, i, s) for i in range(n) for s in (1, -1)]
        simple.append(Vec.unit(dim, n - 1))
    elif kind == "C":
        roots += [Vec.unit(dim, i, 2 * s) for i in range(n) for s in (1, -1)]
        simple.append(Vec.unit(dim, n - 1, 2))
    else:
        simple.append(Vec.unit(dim, n - 2) + Vec.unit(dim, n - 1))
    return dim, roots, simple


_H = Fraction(1, 2)


def _e_simple(n):
    # Bourbaki: alpha_1 = (e1 + e8 - e2 - ... - e7)/2, alpha_2 = e1 + e2, alpha_k = e_{k-1} - e_{k-2}
    a1 = Vec([_H, -_H, -_H, -_H, -_H, -_H, -_H, _H])
    simple = [a1, Vec.unit(8, 0) + Vec.unit(8, 1)]
    simple += [Vec.unit(8, k - 2) - Vec.unit(8, k - 3) for k in range(3, n + 1)]
    return simple


def _roots_e6():
    roots = [v for i, j in combinations(range(5), 2) for v in _pm_pairs(8, i, j)]
    for signs in product((1, -1), repeat=5):
        if signs.count(-1) % 2 == 0:
            for eps in (1, -1):
                roots.append(Vec([eps * _H * s for s in signs] + [-eps * _H, -eps * _H, eps * _H]))
    return 8, roots, _e_simple(6)


def _roots_e7():
    roots = [v for i, j in combinations(range(6), 2) for v in _pm_pairs(8, i, j)]
    roots += [Vec.unit(8, 6) - Vec.unit(8, 7), Vec.unit(8, 7) - Vec.unit(8, 6)]
    for signs in product((1, -1), repeat=6):
        if signs.count(-1) % 2 == 1:
            for eps in (1, -1):
                roots.append(Vec([eps * _H * s for s in signs] + [eps * _H, -eps * _H]))
    return 8, roots, _e_simple(7)


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system of type A_n, B_n, C_n, D_n, E6 or E7.

    ``type_label`` may carry the rank (``"C3"``, ``"E6"``) or the rank can be
    given separately.  Simple roots follow Bourbaki's ordering.
    """
    label = type_label.strip().upper()
    if label[1:].isdigit():
        label, rank = label[0], int(label[1:])
    if rank is None:
        raise ConfigurationError(f"missing rank for type {type_label!r}")
    rank = int(rank)
    if label == "A" and rank >= 1:
        dim, roots, simple = _roots_a(rank)
    elif label in ("B", "C") and rank >= 1:
        dim, roots, simple = _roots_bcd(label, rank)
    elif label == "D" and rank >= 2:
        dim, roots, simple = _roots_bcd("D", rank)
    elif label == "E" and rank == 6:
        dim, roots, simple = _roots_e6()
    elif label == "E" and rank == 7:
        dim, roots, simple = _roots_e7()
    else:
        raise ConfigurationError(f"unsupported root system {type_label!r} rank {rank}")
    rs = RootSystem(f"{label}{rank}", dim, frozenset(roots), tuple(simple))
    rs.positive_roots
    return rs


def reflection_closure(simple: Sequence[Vec]) -> frozenset:
    """All roots generated from ``simple`` by repeated simple reflections."""
    simple = [Vec(s) for s in simple]
    found = set(simple)
    queue = deque(simple)
    while queue:
        x = queue.popleft()
        for a in simple:
            y = reflect(x, a)
            if y not in found:
                found.add(y)
                queue.append(y)
    return frozenset(found)


@dataclass(frozen=True)
class Irrep:
    """Irreducible representation of the compact group with root system ``system``.

    Parametrised by its infinitesimal character (highest weight plus the
    half-sum of the positive roots of ``system``).
    """

    system: RootSystem
    infinitesimal_character: Vec

    @property
    def highest_weight(self) -> Vec:
        return Vec(self.infinitesimal_character) - self.system.rho

    def check_dominant(self):
        lam = Vec(self.infinitesimal_character)
        for a in self.system.positive_roots:
            if inner(lam, a) <= 0:
                raise DomainError(f"infinitesimal character {lam} is not strictly dominant", root=a)


def weyl_dimension(rep: Irrep) -> int:
    """Dimension by the Weyl product formula."""
    rep.check_dominant()
    lam = Vec(rep.infinitesimal_character)
    rho = rep.system.rho
    num, den = Fraction(1), Fraction(1)
    for a in rep.system.positive_roots:
        num *= inner(lam, a)
        den *= inner(rho, a)
    dim = num / den
    if dim.denominator != 1 or dim <= 0:
        raise DomainError(f"Weyl product {dim} is not a positive integer; {lam} is not integral")
    return int(dim)


def _check_integral_highest_weight(system: RootSystem, hw: Vec):
    for a in system.simple_roots:
        k = coroot_pairing(hw, a)
        if k < 0 or k.denominator != 1:
            raise DomainError(f"highest weight {hw} is not dominant integral", root=a)


def weight_multiplicities(rep: Irrep) -> dict:
    """Weight multiplicities of ``rep`` by Freudenthal's recursion.

    Weights are generated layer by layer below the highest weight; the recursion
    is only evaluated on dominant weights and extended by Weyl invariance.
    """
    system = rep.system
    rep.check_dominant()
    hw = rep.highest_weight
    _check_integral_highest_weight(system, hw)
    rho = system.rho
    h = system._height_functional
    top = inner(hw, h)
    lam_rho = hw + rho
    norm_top = inner(lam_rho, lam_rho)
    pos = system.positive_roots
    simple = system.simple_roots
    mult = {hw: 1}
    layer = [hw]
    while layer:
        candidates = []
        seen = set()
        for nu in layer:
            for a in simple:
                mu = nu - a
                if mu not in mult and mu not in seen:
                    seen.add(mu)
                    candidates.append(mu)
        # dominant candidates first so that non-dominant ones can look up their conjugate
        dominant = [mu for mu in candidates if system.is_dominant(mu)]
        for mu in dominant:
            total = Fraction(0)
            for a in pos:
                k = 1
                x = mu + a
                while inner(x, h) <= top:
                    m = mult.get(x)
                    if m:
                        total += inner(x, a) * m
                    k += 1
                    x = x + a
            mr = mu + rho
            denom = norm_top - inner(mr, mr)
            if denom <= 0:
                if total != 0:
                    raise InvariantViolation(f"Freudenthal denominator vanished at {mu}")
                continue
            m = 2 * total / denom
            if m.denominator != 1 or m < 0:
                raise InvariantViolation(f"Freudenthal produced non-integral multiplicity {m} at {mu}")
            if m:
                mult[mu] = int(m)
        next_layer = [mu for mu in dominant if mu in mult]
        for mu in candidates:
            if mu in mult or system.is_dominant(mu):
                continue
            m = mult.get(system.dominant_conjugate(mu))
            if m:
                mult[mu] = m
                next_layer.append(mu)
        layer = next_layer
    return mult


class _PartitionCounter:
    """Kostant partition function on simple-root coordinates."""

    def __init__(self, system: RootSystem):
        self.coeffs = [tuple(int(c) for c in system.simple_coefficients(a)) for a in system.positive_roots]
        self.memo: dict = {}

    def __call__(self, target: tuple, start: int = 0) -> int:
        if any(t < 0 for t in target):
            return 0
        if start == len(self.coeffs):
            return int(not any(target))
        key = (target, start)
        if key in self.memo:
            return self.memo[key]
        a = self.coeffs[start]
        total = 0
        cur = target
        while all(t >= 0 for t in cur):
            total += self(cur, start + 1)
            cur = tuple(t - c for t, c in zip(cur, a))
        self.memo[key] = total
        return total


def kostant_multiplicities(rep: Irrep, weights: Iterable[Vec]) -> dict:
    """Weight multiplicities from Kostant's alternating sum over partition counts."""
    system = rep.system
    rep.check_dominant()
    lam = Vec(rep.infinitesimal_character)
    rho = system.rho
    orbit = [(system.sign_of(x), x) for x in system.weyl_orbit(lam)]
    count = _PartitionCounter(system)
    out = {}
    for mu in weights:
        total = 0
        for sgn, wl in orbit:
            diff = wl - (Vec(mu) + rho)
            try:
                c = system.simple_coefficients(diff)
            except UsageError:
                continue
            if any(x.denominator != 1 for x in c):
                continue
            total += sgn * count(tuple(int(x) for x in c))
        out[Vec(mu)] = total
    return out
