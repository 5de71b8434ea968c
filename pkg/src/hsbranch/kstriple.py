"""Harish-Chandra's strongly orthogonal set, the characteristic vector Z0 and its diagrams."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantViolation, UnsupportedError, UsageError
from .hermitian import HermitianPair, centralizer_subsystem
from .rootsys import Vec, coroot_pairing, inner

__all__ = [
    "KSData",
    "WeightedVoganDiagram",
    "SignedYoungDiagram",
    "harish_chandra_set",
    "characteristic_vector",
    "ks_data",
    "is_admissible_characteristic",
    "vogan_diagram",
    "render_vogan_diagram",
    "signed_young_diagram",
    "render_signed_young_diagram",
    "strongly_orthogonal",
]


def strongly_orthogonal(pair: HermitianPair, a: Vec, b: Vec) -> bool:
    roots = pair.system.roots
    return inner(a, b) == 0 and (a + b) not in roots and (a - b) not in roots


def _greatest(pair: HermitianPair, candidates: list) -> Vec:
    sys = pair.system
    maximal = [g for g in candidates if not any(h != g and sys.precedes(g, h) for h in candidates)]
    if len(maximal) != 1:
        raise InvariantViolation(
            f"{pair.spec}: greedy step has {len(maximal)} maximal candidates: "
            + ", ".join(pair.format_root(m) for m in maximal)
        )
    top = maximal[0]
    if not all(sys.precedes(g, top) for g in candidates):
        raise InvariantViolation(f"{pair.spec}: maximal candidate {pair.format_root(top)} is not greatest")
    return top


def harish_chandra_set(pair: HermitianPair) -> list:
    """Greedy maximal mutually orthogonal roots of ``psi_n``, starting from the highest root."""
    chosen: list = []
    candidates = list(pair.psi_n)
    while candidates:
        g = _greatest(pair, candidates)
        chosen.append(g)
        candidates = [c for c in candidates if inner(c, g) == 0]
    if chosen[0] != pair.highest_noncompact_root:
        raise InvariantViolation(f"{pair.spec}: first element is not the highest root")
    return chosen


def characteristic_vector(pair: HermitianPair, S: Sequence[Vec]) -> Vec:
    """Sum of the coroots of ``S`` as a coordinate vector."""
    z = Vec.zero(pair.ambient_dim)
    for g in S:
        z = z + g * (Fraction(2) / inner(g, g))
    return z


@dataclass(frozen=True)
class KSData:
    """Characteristic data of the distinguished KS-triple of a pair.

    ``c`` and ``d_plus_1`` count positive noncompact roots taking the value 1
    and 2 on ``Z0``; ``a`` counts positive compact roots taking the value 1.
    """

    pair: str
    S: tuple
    Z0: Vec
    simple_weights: tuple
    noncompact_index: int
    a: int
    c: int
    d_plus_1: int
    tube: bool
    kz_type: str

    @property
    def real_rank(self) -> int:
        return len(self.S)

    @property
    def d(self) -> int:
        return self.d_plus_1 - 1

    def to_json(self) -> dict:
        return {
            "pair": self.pair,
            "S": [[_fmt(x) for x in g] for g in self.S],
            "Z0": [_fmt(x) for x in self.Z0],
            "simple_weights": list(self.simple_weights),
            "noncompact_index": self.noncompact_index,
            "a": self.a,
            "c": self.c,
            "d_plus_1": self.d_plus_1,
            "tube": self.tube,
            "real_rank": self.real_rank,
            "kz_type": self.kz_type,
        }

    @classmethod
    def from_json(cls, obj) -> "KSData":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            pair=obj["pair"],
            S=tuple(Vec(Fraction(x) for x in g) for g in obj["S"]),
            Z0=Vec(Fraction(x) for x in obj["Z0"]),
            simple_weights=tuple(int(w) for w in obj["simple_weights"]),
            noncompact_index=int(obj["noncompact_index"]),
            a=int(obj["a"]),
            c=int(obj["c"]),
            d_plus_1=int(obj["d_plus_1"]),
            tube=bool(obj["tube"]),
            kz_type=obj["kz_type"],
        )


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_KS_CACHE: dict = {}


def ks_data(pair: HermitianPair) -> KSData:
    key = str(pair.spec)
    if key in _KS_CACHE:
        return _KS_CACHE[key]
    S = harish_chandra_set(pair)
    z = characteristic_vector(pair, S)
    weights = []
    for s in pair.system.simple_roots:
        w = inner(s, z)
        if w.denominator != 1:
            raise InvariantViolation(f"non-integral weight {w} on simple root")
        weights.append(int(w))
    values = [inner(g, z) for g in pair.psi_n]
    if any(v not in (1, 2) for v in values):
        raise InvariantViolation(f"{pair.spec}: noncompact root values outside {{1,2}}: {set(values)}")
    c = values.count(1)
    d1 = values.count(2)
    a = sum(1 for al in pair.psi_c if inner(al, z) == 1)
    kz = centralizer_subsystem(pair, z)
    data = KSData(
        pair=key,
        S=tuple(S),
        Z0=z,
        simple_weights=tuple(weights),
        noncompact_index=pair.noncompact_simple_index,
        a=a,
        c=c,
        d_plus_1=d1,
        tube=(c == 0),
        kz_type=kz.semisimple_type,
    )
    _KS_CACHE[key] = data
    return data


def is_admissible_characteristic(pair: HermitianPair, weights: Sequence[int]) -> bool:
    """Whether a characteristic vector with these simple-root values restricts admissibly.

    True when the noncompact value is positive, or when it is negative and all
    compact values vanish.
    """
    weights = list(weights)
    if len(weights) != pair.system.rank:
        raise UsageError(f"expected {pair.system.rank} weights, got {len(weights)}")
    wl = weights[pair.noncompact_simple_index]
    compact = [w for i, w in enumerate(weights) if i != pair.noncompact_simple_index]
    if any(w < 0 for w in compact):
        raise UsageError("compact simple-root values must be nonnegative")
    return wl > 0 or (wl < 0 and all(w == 0 for w in compact))


@dataclass(frozen=True)
class WeightedVoganDiagram:
    """Dynkin diagram painted by compactness and labelled with ``beta_j(Z0)``.

    ``nodes`` holds ``(noncompact, weight)`` in simple-root order; ``edges``
    holds ``(i, j, bonds)`` with an arrow towards ``j`` when ``j`` is shorter.
    """

    nodes: tuple
    edges: tuple
    arrows: tuple

    @property
    def weights(self) -> tuple:
        return tuple(w for _, w in self.nodes)


def vogan_diagram(pair: HermitianPair, data: KSData | None = None) -> WeightedVoganDiagram:
    data = data or ks_data(pair)
    simple = pair.system.simple_roots
    nodes = tuple((i == pair.noncompact_simple_index, w) for i, w in enumerate(data.simple_weights))
    edges, arrows = [], []
    for i in range(len(simple)):
        for j in range(i + 1, len(simple)):
            b = int(coroot_pairing(simple[i], simple[j]) * coroot_pairing(simple[j], simple[i]))
            if b:
                edges.append((i, j, b))
                ni, nj = inner(simple[i], simple[i]), inner(simple[j], simple[j])
                if ni != nj:
                    arrows.append((i, j) if ni > nj else (j, i))
    return WeightedVoganDiagram(nodes, tuple(edges), tuple(arrows))


def _main_path(n: int, adj: dict) -> list:
    def farthest(start):
        best, prev, stack = (0, start), {start: None}, [(start, 0)]
        while stack:
            v, dist = stack.pop()
            if dist > best[0]:
                best = (dist, v)
            for u in adj[v]:
                if u not in prev:
                    prev[u] = v
                    stack.append((u, dist + 1))
        return best[1], prev

    a, _ = farthest(min(adj))
    b, prev = farthest(a)
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    # keep low-index end on the left
    return path if path[0] < path[-1] else path[::-1]


def render_vogan_diagram(diagram: WeightedVoganDiagram) -> str:
    """UTF-8 drawing: ● marks the noncompact node, weights are printed below."""
    n = len(diagram.nodes)
    adj = {i: [] for i in range(n)}
    bonds = {}
    for i, j, b in diagram.edges:
        adj[i].append(j)
        adj[j].append(i)
        bonds[frozenset((i, j))] = b
    arrows = set(diagram.arrows)
    seen: set = set()
    blocks = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = set(), [start]
        while stack:
            v = stack.pop()
            if v not in comp:
                comp.add(v)
                stack.extend(adj[v])
        seen |= comp
        sub = {v: [u for u in adj[v] if u in comp] for v in comp}
        blocks.append(_render_component(diagram, sub, bonds, arrows))
    return "\n\n".join(blocks)


def _render_component(diagram, adj, bonds, arrows) -> str:
    path = _main_path(len(adj), adj)
    line, marks, labels = [], [], []
    branch = [v for v in adj if v not in path]
    for k, v in enumerate(path):
        noncompact, w = diagram.nodes[v]
        glyph = "●" if noncompact else "○"
        if k:
            u = path[k - 1]
            b = bonds[frozenset((u, v))]
            link = {1: "───", 2: "═══", 3: "≡≡≡"}[b]
            if (u, v) in arrows:
                link = link[0] + ">" + link[2]
            elif (v, u) in arrows:
                link = link[0] + "<" + link[2]
            line.append(link)
        line.append(glyph)
        labels.append(f"{v + 1}")
        marks.append(str(w))
    text_line = ""
    positions = []
    for piece in line:
        if piece in ("●", "○"):
            positions.append(len(text_line))
        text_line += piece
    rows = []
    for b in branch:
        anchor = next(u for u in adj[b] if u in path)
        col = positions[path.index(anchor)]
        noncompact, w = diagram.nodes[b]
        glyph = "●" if noncompact else "○"
        rows.append(" " * col + glyph + f" {b + 1}:{w}")
        rows.append(" " * col + "│")
    wrow, irow = [" "] * (len(text_line) + 4), [" "] * (len(text_line) + 4)
    for col, v, w in zip(positions, path, marks):
        for i, ch in enumerate(w):
            wrow[col + i] = ch
        for i, ch in enumerate(str(v + 1)):
            irow[col + i] = ch
    rows.append(text_line)
    rows.append("".join(wrow).rstrip())
    rows.append("".join(irow).rstrip())
    return "\n".join(rows)


@dataclass(frozen=True)
class SignedYoungDiagram:
    rows: tuple

    def valid(self) -> bool:
        lengths = [len(r) for r in self.rows]
        decreasing = all(a >= b for a, b in zip(lengths, lengths[1:]))
        alternating = all(r[i] != r[i + 1] for r in self.rows for i in range(len(r) - 1))
        return decreasing and alternating and all(set(r) <= {"+", "-"} for r in self.rows)

    def signature(self) -> tuple:
        return sum(r.count("+") for r in self.rows), sum(r.count("-") for r in self.rows)


def signed_young_diagram(pair: HermitianPair) -> SignedYoungDiagram:
    """Table of the signed Young diagrams of the orbit of E0 for the classical families."""
    spec = pair.spec
    f = spec.family
    if f == "AIII":
        rows = ["+-"] * spec.p + ["-"] * (spec.q - spec.p)
    elif f == "BDI":
        singles = 2 * spec.p if spec.parity == "odd" else 2 * spec.p - 1
        rows = ["-+-"] + ["+"] * singles
    elif f == "CI":
        rows = ["+-"] * spec.n
    elif f == "DIII":
        k = spec.p // 2
        rows = ["+-"] * (2 * k)
        if spec.p % 2:
            rows += ["+", "-"]
    else:
        raise UnsupportedError(f"no signed Young diagram is tabulated for {f}")
    return SignedYoungDiagram(tuple(rows))


def render_signed_young_diagram(diagram: SignedYoungDiagram) -> str:
    return "\n".join("".join(f"[{'+' if s == '+' else '−'}]" for s in row) for row in diagram.rows)
