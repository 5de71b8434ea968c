"""The six families of Hermitian symmetric pairs with a holomorphic positive system.

Coordinates are the diagonal ones of the classical matrix realisations
(``eps_i`` then ``delta_j``) and Bourbaki's eight-dimensional space for E6/E7.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import ConfigurationError, UsageError
from .rootsys import RootSystem, Vec, build_root_system, coroot_pairing, inner, reflect

__all__ = [
    "FAMILIES",
    "PairSpec",
    "FamilyTemplate",
    "HermitianPair",
    "CentralizerSubsystem",
    "catalog",
    "parse_pair",
    "build_pair",
    "centralizer_subsystem",
    "sweep",
]

FAMILIES = ("AIII", "BDI", "CI", "DIII", "EIII", "EVII")


@dataclass(frozen=True)
class PairSpec:
    """A member of one of the six families.

    AIII uses ``p <= q``; BDI uses ``parity`` (``"odd"`` for so(2p+1,2),
    ``"even"`` for so(2p,2)) and ``p``; CI uses ``n``; DIII uses ``p``.
    """

    family: str
    p: int | None = None
    q: int | None = None
    n: int | None = None
    parity: str | None = None

    def validate(self) -> "PairSpec":
        f = self.family
        if f not in FAMILIES:
            raise ConfigurationError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        ok = {
            "AIII": lambda: self.p is not None and self.q is not None and 1 <= self.p <= self.q and self.p + self.q >= 2,
            "BDI": lambda: self.parity in ("odd", "even") and self.p is not None
            and self.p >= (1 if self.parity == "odd" else 2),
            "CI": lambda: self.n is not None and self.n >= 1,
            "DIII": lambda: self.p is not None and self.p >= 2,
            "EIII": lambda: True,
            "EVII": lambda: True,
        }[f]()
        if not ok:
            raise ConfigurationError(f"invalid parameters for {f}: {self}")
        return self

    def __str__(self):
        f = self.family
        if f == "AIII":
            return f"AIII:p={self.p},q={self.q}"
        if f == "BDI":
            return f"BDI:{self.parity},p={self.p}"
        if f == "CI":
            return f"CI:n={self.n}"
        if f == "DIII":
            return f"DIII:p={self.p}"
        return f

    @property
    def rank(self) -> int:
        f = self.family
        return {
            "AIII": lambda: self.p + self.q - 1,
            "BDI": lambda: self.p + 1,
            "CI": lambda: self.n,
            "DIII": lambda: self.p,
            "EIII": lambda: 6,
            "EVII": lambda: 7,
        }[f]()

    @property
    def algebra_name(self) -> str:
        f = self.family
        if f == "AIII":
            return f"su({self.p},{self.q})"
        if f == "BDI":
            return f"so({2 * self.p + (1 if self.parity == 'odd' else 0)},2)"
        if f == "CI":
            return f"sp({self.n},R)"
        if f == "DIII":
            return f"so*({2 * self.p})"
        return {"EIII": "e6(-14)", "EVII": "e7(-25)"}[f]


GRAMMAR_HINT = 'pair grammar: "AIII:p=2,q=3", "BDI:odd,p=3", "BDI:even,p=4", "CI:n=2", "DIII:p=5", "EIII", "EVII"'

_PAIR_RE = re.compile(r"^\s*([A-Z]+)\s*(?::\s*(.*))?$")


def parse_pair(text: str) -> PairSpec:
    """Parse the textual pair grammar into a validated :class:`PairSpec`."""
    m = _PAIR_RE.match(text or "")
    if not m:
        raise UsageError(f"cannot parse pair {text!r}; {GRAMMAR_HINT}")
    family, rest = m.group(1), m.group(2)
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; {GRAMMAR_HINT}")
    kwargs: dict = {}
    if rest:
        for item in rest.split(","):
            item = item.strip()
            if item in ("odd", "even"):
                kwargs["parity"] = item
                continue
            key, sep, val = item.partition("=")
            key = key.strip()
            if not sep or key not in ("p", "q", "n") or not val.strip().lstrip("-").isdigit():
                raise UsageError(f"bad parameter {item!r} in {text!r}; {GRAMMAR_HINT}")
            kwargs[key] = int(val)
    expected = {"AIII": {"p", "q"}, "BDI": {"parity", "p"}, "CI": {"n"}, "DIII": {"p"}, "EIII": set(), "EVII": set()}
    if set(kwargs) != expected[family]:
        raise UsageError(f"{family} expects parameters {sorted(expected[family])}; {GRAMMAR_HINT}")
    try:
        return PairSpec(family, **kwargs).validate()
    except ConfigurationError as exc:
        raise UsageError(f"{exc}; {GRAMMAR_HINT}") from exc


@dataclass(frozen=True)
class FamilyTemplate:
    family: str
    grammar: str
    constraint: str
    real_form: str
    compact: str
    example: PairSpec


def catalog() -> list:
    """The six Hermitian families in a fixed order."""
    return [
        FamilyTemplate("AIII", "AIII:p=P,q=Q", "1 <= p <= q, p+q >= 2", "su(p,q)",
                       "s(u(p)+u(q))", PairSpec("AIII", p=2, q=3)),
        FamilyTemplate("BDI", "BDI:odd,p=P | BDI:even,p=P", "odd: p >= 1; even: p >= 2", "so(m,2)",
                       "so(m)+so(2)", PairSpec("BDI", p=3, parity="odd")),
        FamilyTemplate("CI", "CI:n=N", "n >= 1", "sp(n,R)", "u(n)", PairSpec("CI", n=3)),
        FamilyTemplate("DIII", "DIII:p=P", "p >= 2", "so*(2p)", "u(p)", PairSpec("DIII", p=5)),
        FamilyTemplate("EIII", "EIII", "none", "e6(-14)", "so(10)+so(2)", PairSpec("EIII")),
        FamilyTemplate("EVII", "EVII", "none", "e7(-25)", "e6+so(2)", PairSpec("EVII")),
    ]


def sweep(max_rank: int, exceptional: bool = True) -> list:
    """Every valid classical pair of rank at most ``max_rank``, plus EIII/EVII if requested."""
    out = []
    for p in range(1, max_rank + 1):
        for q in range(p, max_rank + 2 - p):
            if p + q >= 2 and p + q - 1 <= max_rank:
                out.append(PairSpec("AIII", p=p, q=q))
    for p in range(1, max_rank):
        out.append(PairSpec("BDI", p=p, parity="odd"))
    for p in range(2, max_rank):
        out.append(PairSpec("BDI", p=p, parity="even"))
    out += [PairSpec("CI", n=n) for n in range(1, max_rank + 1)]
    out += [PairSpec("DIII", p=p) for p in range(2, max_rank + 1)]
    if exceptional:
        out += [PairSpec("EIII"), PairSpec("EVII")]
    return out


def _classical_data(spec: PairSpec):
    """Root system, simple roots in diagram order, noncompact index, coordinate names."""
    f = spec.family
    if f == "AIII":
        p, q = spec.p, spec.q
        rs = build_root_system("A", p + q - 1)
        names = [f"ε{i}" for i in range(1, p + 1)] + [f"δ{j}" for j in range(1, q + 1)]
        return rs, list(rs.simple_roots), p - 1, names
    if f == "BDI":
        p = spec.p
        dim = p + 1
        e = [Vec.unit(dim, i) for i in range(p)]
        delta = Vec.unit(dim, p)
        simple = [delta - e[0]] + [e[i] - e[i + 1] for i in range(p - 1)]
        if spec.parity == "odd":
            rs = build_root_system("B", p + 1)
            simple.append(e[p - 1])
        else:
            rs = build_root_system("D", p + 1)
            simple.append(e[p - 2] + e[p - 1])
        names = [f"ε{i}" for i in range(1, p + 1)] + ["δ1"]
        return rs.with_simple_roots(simple), simple, 0, names
    if f == "CI":
        rs = build_root_system("C", spec.n)
        return rs, list(rs.simple_roots), spec.n - 1, [f"ε{i}" for i in range(1, spec.n + 1)]
    if f == "DIII":
        rs = build_root_system("D", spec.p)
        return rs, list(rs.simple_roots), spec.p - 1, [f"ε{i}" for i in range(1, spec.p + 1)]
    if f == "EIII":
        rs = build_root_system("E6")
        return rs, list(rs.simple_roots), 5, [f"e{i}" for i in range(1, 9)]
    rs = build_root_system("E7")
    return rs, list(rs.simple_roots), 6, [f"e{i}" for i in range(1, 9)]


@dataclass(frozen=True, eq=False)
class HermitianPair:
    """A Hermitian symmetric pair with its holomorphic positive system ``psi``.

    ``psi_n`` holds the positive roots whose coefficient on the noncompact
    simple root is one, ``psi_c`` those where it is zero.
    """

    spec: PairSpec
    system: RootSystem
    noncompact_simple_index: int
    coordinate_names: tuple

    @property
    def psi(self) -> tuple:
        return self.system.positive_roots

    @cached_property
    def _split(self):
        comp, nonc = [], []
        for r in self.psi:
            c = self.system.simple_coefficients(r)[self.noncompact_simple_index]
            if c == 0:
                comp.append(r)
            elif c == 1:
                nonc.append(r)
            else:
                raise ConfigurationError(f"positive system for {self.spec} is not holomorphic at {r}")
        return tuple(comp), tuple(nonc)

    @property
    def psi_c(self) -> tuple:
        return self._split[0]

    @property
    def psi_n(self) -> tuple:
        return self._split[1]

    @cached_property
    def compact_roots(self) -> frozenset:
        return frozenset(self.psi_c) | frozenset(-a for a in self.psi_c)

    @cached_property
    def noncompact_roots(self) -> frozenset:
        return frozenset(self.psi_n) | frozenset(-a for a in self.psi_n)

    @property
    def noncompact_simple_root(self) -> Vec:
        return self.system.simple_roots[self.noncompact_simple_index]

    @property
    def compact_simple_indices(self) -> list:
        return [i for i in range(self.system.rank) if i != self.noncompact_simple_index]

    @cached_property
    def compact_system(self) -> RootSystem:
        """Root system of K with the induced positive system ``psi_c``."""
        return RootSystem.from_positive_roots(self.psi_c, self.system.ambient_dim)

    @cached_property
    def rho(self) -> Vec:
        return self.system.rho

    @cached_property
    def rho_n(self) -> Vec:
        total = Vec.zero(self.system.ambient_dim)
        for r in self.psi_n:
            total = total + r
        return total / 2

    @cached_property
    def rho_c(self) -> Vec:
        return self.rho - self.rho_n

    @property
    def ambient_dim(self) -> int:
        return self.system.ambient_dim

    @cached_property
    def trace_direction(self) -> Vec | None:
        """For su(p,q) the all-ones vector annihilated by every root; otherwise None."""
        if self.spec.family != "AIII":
            return None
        return Vec([1] * self.ambient_dim)

    def normalize(self, lam: Sequence) -> Vec:
        """Project away the trace direction (su(p,q) only); identity elsewhere."""
        lam = Vec(lam)
        if len(lam) != self.ambient_dim:
            raise UsageError(f"{self.spec} expects {self.ambient_dim} coordinates, got {len(lam)}")
        t = self.trace_direction
        if t is None:
            return lam
        return lam - t * (inner(lam, t) / inner(t, t))

    @cached_property
    def highest_noncompact_root(self) -> Vec:
        return self.system.highest_root if self.system.highest_root is not None else self.psi_n[-1]

    def format_root(self, v: Sequence) -> str:
        """Human-readable root: coordinate combination, or simple-root digits for E6/E7."""
        if self.spec.family in ("EIII", "EVII"):
            return "".join(str(int(c)) for c in self.system.simple_coefficients(v))
        return format_vector(v, self.coordinate_names)

    def diagonal_form(self, v: Sequence) -> tuple:
        """Diagonal entries of the matrix realisation for the classical families."""
        v = tuple(Vec(v))
        f = self.spec.family
        if f == "AIII":
            return v
        if f == "BDI":
            h, x = v[:-1], v[-1]
            mid = (Fraction(0),) if self.spec.parity == "odd" else ()
            return h + tuple(-c for c in reversed(h)) + mid + (x, -x)
        if f in ("CI", "DIII"):
            return v + tuple(-c for c in reversed(v))
        raise UsageError("no matrix realisation is used for the exceptional families")

    def __repr__(self):
        return f"HermitianPair({self.spec})"


def format_vector(v: Sequence, names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(v, names):
        c = Fraction(c)
        if c == 0:
            continue
        sign = "−" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}"
        parts.append((sign, f"{coef}{name}"))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("−" if head_sign == "−" else "") + head
    for sign, term in parts[1:]:
        out += sign + term
    return out


_PAIR_CACHE: dict = {}


def build_pair(spec: PairSpec | str) -> HermitianPair:
    """Construct the pair; results are cached since pairs are immutable."""
    if isinstance(spec, str):
        spec = parse_pair(spec)
    spec.validate()
    key = str(spec)
    if key not in _PAIR_CACHE:
        rs, simple, idx, names = _classical_data(spec)
        pair = HermitianPair(spec, rs, idx, tuple(names))
        pair.psi_n  # raises if not holomorphic
        _PAIR_CACHE[key] = pair
    return _PAIR_CACHE[key]


@dataclass(frozen=True, eq=False)
class CentralizerSubsystem:
    """Compact roots vanishing on ``vector``, with their positive system."""

    vector: Vec
    system: RootSystem

    @property
    def phi_z(self) -> frozenset:
        return self.system.roots

    @property
    def positive(self) -> tuple:
        return self.system.positive_roots

    @property
    def rho_z(self) -> Vec:
        return self.system.rho

    @property
    def semisimple_type(self) -> str:
        return self.system.cartan_type


def centralizer_subsystem(pair: HermitianPair, z: Sequence) -> CentralizerSubsystem:
    z = Vec(z)
    if len(z) != pair.ambient_dim:
        raise UsageError("vector has the wrong ambient dimension")
    pos = [a for a in pair.psi_c if inner(a, z) == 0]
    return CentralizerSubsystem(z, RootSystem.from_positive_roots(pos, pair.ambient_dim))


def holomorphy_violations(pair: HermitianPair) -> list:
    """Pairs of positive noncompact roots whose sum is a root (empty for a holomorphic system)."""
    roots = pair.system.roots
    n = pair.psi_n
    return [(a, b) for i, a in enumerate(n) for b in n[i:] if (a + b) in roots]


def psi_n_stable_under_compact_reflections(pair: HermitianPair) -> bool:
    target = frozenset(pair.psi_n)
    for i in pair.compact_simple_indices:
        a = pair.system.simple_roots[i]
        if frozenset(reflect(g, a) for g in pair.psi_n) != target:
            return False
    return True


def expected_psi_n_size(spec: PairSpec) -> int:
    f = spec.family
    if f == "AIII":
        return spec.p * spec.q
    if f == "BDI":
        return 2 * spec.p + 1 if spec.parity == "odd" else 2 * spec.p
    if f == "CI":
        return spec.n * (spec.n + 1) // 2
    if f == "DIII":
        return spec.p * (spec.p - 1) // 2
    return {"EIII": 16, "EVII": 27}[f]


def compact_integrality_check(pair: HermitianPair, lam: Vec) -> list:
    """Roots on whose coroot ``lam`` is not integral."""
    return [a for a in pair.psi if coroot_pairing(lam, a).denominator != 1]
