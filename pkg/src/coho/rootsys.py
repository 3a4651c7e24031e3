"""Complex semisimple root systems in exact integer coordinates.

Roots are integer vectors in the simple-root basis.  Functionals (weights)
are rational vectors in the fundamental-weight basis, so that coordinate
``i`` of a functional equals its pairing with the ``i``-th simple coroot.

The Cartan matrix convention is ``A[i][j] = <alpha_j, alpha_i^vee>``.
Simple indices are 1-based in every public signature.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

Root = Tuple[int, ...]
Weight = Tuple[Fraction, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s not in "ABCDEFG" or len(s) != 1:
            raise RootSystemError(f"unknown series {s!r}")
        if s in _MIN_RANK and n < _MIN_RANK[s]:
            raise RootSystemError(f"type {s} needs rank >= {_MIN_RANK[s]}, got {n}")
        if s == "E" and n not in (6, 7, 8):
            raise RootSystemError(f"type E needs rank in {{6,7,8}}, got {n}")
        if s == "F" and n != 4:
            raise RootSystemError(f"type F needs rank 4, got {n}")
        if s == "G" and n != 2:
            raise RootSystemError(f"type G needs rank 2, got {n}")

    @classmethod
    def parse(cls, label: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _edges(t: CartanType) -> List[Tuple[int, int]]:
    n = t.rank
    if t.series in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if t.series == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E, Bourbaki labels 1-3-4-5-...-n with 2 attached to 4
    chain = [0] + list(range(2, n))
    return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]


def _half_lengths(t: CartanType) -> List[Fraction]:
    """(alpha_i, alpha_i) / 2 with long roots normalised to squared length 2."""
    n, one, half = t.rank, Fraction(1), Fraction(1, 2)
    if t.series == "B":
        return [one] * (n - 1) + [half]
    if t.series == "C":
        return [half] * (n - 1) + [one]
    if t.series == "F":
        return [one, one, half, half]
    if t.series == "G":
        return [Fraction(1, 3), one]
    return [one] * n


def cartan_matrix(t: CartanType) -> Tuple[Tuple[int, ...], ...]:
    d = _half_lengths(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        # (alpha_i, alpha_j) = -max(d_i, d_j) for a single or multiple bond
        ip = -max(d[i], d[j])
        a[i][j] = int(ip / d[i])
        a[j][i] = int(ip / d[j])
    return tuple(tuple(r) for r in a)


@dataclass(frozen=True)
class RootSystem:
    """A (semi)simple root system; `components` lists its simple factors.

    Products only arise for complex algebras viewed as real and for Levi
    subsystems; `cartan_type` is defined for the simple case.
    """

    components: Tuple[CartanType, ...]
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    roots: Tuple[Root, ...] = field(repr=False)

    @property
    def cartan_type(self) -> CartanType:
        if len(self.components) != 1:
            raise RootSystemError("root system is not simple")
        return self.components[0]

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def simple_indices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    @cached_property
    def root_index(self) -> Dict[Root, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Gram matrix (alpha_i, alpha_j) of the simple roots."""
        d, a = self.symmetrizer, self.cartan_matrix
        return tuple(tuple(d[i] * a[i][j] for j in range(self.rank)) for i in range(self.rank))

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """Invariant form on vectors given in simple-root coordinates."""
        f = self.form
        return sum((Fraction(u[i]) * f[i][j] * v[j] for i in range(self.rank) for j in range(self.rank)
                    if u[i] and v[j]), Fraction(0))

    def half_length(self, alpha: Sequence[int]) -> Fraction:
        return self.inner(alpha, alpha) / 2

    @cached_property
    def coroots(self) -> Dict[Root, Root]:
        """alpha -> alpha^vee in simple-coroot coordinates (always integral)."""
        out = {}
        for r in self.roots:
            da = self.half_length(r)
            cv = []
            for c, d in zip(r, self.symmetrizer):
                x = c * d / da
                if x.denominator != 1:
                    raise RootSystemError(f"non-integral coroot for {r}")
                cv.append(int(x))
            out[r] = tuple(cv)
        return out

    def contains(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self.root_index

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        """Simple reflection s_i (0-based i) applied to a root-coordinate vector."""
        p = sum(c * self.cartan_matrix[i][j] for j, c in enumerate(beta))
        return tuple(c - p if j == i else c for j, c in enumerate(beta))

    def to_weight(self, v: Sequence) -> Weight:
        """Root coordinates -> fundamental-weight coordinates."""
        a = self.cartan_matrix
        return tuple(sum((a[i][j] * Fraction(v[j]) for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    @cached_property
    def _weight_to_root(self):
        from .linalg import inverse
        return inverse(self.cartan_matrix)

    def to_root_coords(self, w: Sequence) -> Weight:
        """Fundamental-weight coordinates -> root coordinates."""
        m = self._weight_to_root
        return tuple(sum((m[i][j] * Fraction(w[j]) for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))


def _closure(a: Tuple[Tuple[int, ...], ...]) -> List[Root]:
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                p = sum(c * a[i][j] for j, c in enumerate(beta))
                if p == 0:
                    continue
                gamma = tuple(c - p if j == i else c for j, c in enumerate(beta))
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), r))


def _block_diag(blocks: Sequence[Sequence[Sequence[int]]]) -> Tuple[Tuple[int, ...], ...]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


def build_root_system(t: CartanType) -> RootSystem:
    a = cartan_matrix(t)
    return RootSystem((t,), a, tuple(_half_lengths(t)), tuple(_closure(a)))


def product(*systems: RootSystem) -> RootSystem:
    """Orthogonal direct sum; roots of the factors are padded with zeros."""
    a = _block_diag([s.cartan_matrix for s in systems])
    d = tuple(x for s in systems for x in s.symmetrizer)
    roots = []
    off, n = 0, len(a)
    for s in systems:
        for r in s.roots:
            roots.append(tuple([0] * off + list(r) + [0] * (n - off - s.rank)))
        off += s.rank
    roots.sort(key=lambda r: (sum(r), r))
    comps = tuple(c for s in systems for c in s.components)
    return RootSystem(comps, a, d, tuple(roots))


def pairing(lam: Sequence, alpha: Sequence[int], r: RootSystem) -> Fraction:
    """<lam, alpha^vee> for lam in fundamental-weight coordinates."""
    alpha = tuple(alpha)
    if alpha not in r.root_index:
        raise RootSystemError(f"{alpha} is not a root of {r.components}")
    return sum((c * Fraction(x) for c, x in zip(r.coroots[alpha], lam)), Fraction(0))


def rho_and_rho_check(r: RootSystem) -> Tuple[Weight, Weight]:
    """rho in weight coordinates and rho^vee in simple-coroot coordinates."""
    rho = tuple(Fraction(1) for _ in r.simple_indices)
    acc = [Fraction(0)] * r.rank
    for a in r.positive_roots:
        half = tuple(x // 2 if x % 2 == 0 else None for x in a)
        if None not in half and half in r.root_index:
            continue
        for i, c in enumerate(r.coroots[a]):
            acc[i] += Fraction(c, 2)
    return rho, tuple(acc)


@dataclass(frozen=True)
class ParabolicSubset:
    """Standard parabolic given by its Levi simple roots (1-based)."""

    levi_indices: FrozenSet[int]

    def __init__(self, levi_indices: Iterable[int] = ()):
        object.__setattr__(self, "levi_indices", frozenset(int(i) for i in levi_indices))

    def is_proper(self, rank: int) -> bool:
        return len(self.levi_indices & set(range(1, rank + 1))) < rank

    def validate(self, rank: int) -> None:
        bad = [i for i in self.levi_indices if not 1 <= i <= rank]
        if bad:
            raise RootSystemError(f"parabolic indices {sorted(bad)} outside 1..{rank}")

    def zero_based(self) -> FrozenSet[int]:
        return frozenset(i - 1 for i in self.levi_indices)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.levi_indices))) + "}"


def parabolic_split(r: RootSystem, s: ParabolicSubset) -> Tuple[List[Root], List[Root]]:
    """(Delta(l), Delta(n)) for the standard parabolic with Levi simple roots s."""
    s.validate(r.rank)
    inside = s.zero_based()
    levi, nil = [], []
    for a in r.roots:
        outside = any(c for i, c in enumerate(a) if i not in inside)
        if not outside:
            levi.append(a)
        elif sum(a) > 0:
            nil.append(a)
    return levi, nil


def all_parabolics(rank: int, proper_only: bool = True) -> List[ParabolicSubset]:
    from itertools import combinations
    out = []
    top = rank if not proper_only else rank - 1
    for k in range(top + 1):
        for c in combinations(range(1, rank + 1), k):
            out.append(ParabolicSubset(c))
    return out


def levi_components(r: RootSystem, s: ParabolicSubset) -> List[CartanType]:
    """Simple types of the Levi sub-diagram on s (connected components)."""
    idx = sorted(s.zero_based())
    comps: List[List[int]] = []
    seen = set()
    for i in idx:
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in idx:
                if v not in seen and r.cartan_matrix[u][v] != 0:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return [classify_diagram([[r.cartan_matrix[i][j] for j in c] for i in c]) for c in comps]


def classify_diagram(a: Sequence[Sequence[int]]) -> CartanType:
    """Identify a connected Cartan matrix by its root count and shape."""
    a = tuple(tuple(row) for row in a)
    n = len(a)
    roots = _closure(a)
    count = len(roots)
    laced = all(x in (0, -1) for i, row in enumerate(a) for j, x in enumerate(row) if i != j)
    branch = any(sum(1 for j in range(n) if j != i and a[i][j]) >= 3 for i in range(n))
    if laced:
        if not branch:
            return CartanType("A", n)
        if count == 2 * n * (n - 1):
            return CartanType("D", n)
        return CartanType("E", n)
    if n == 2 and count == 12:
        return CartanType("G", 2)
    if n == 4 and count == 48:
        return CartanType("F", 4)
    # B or C: count the long roots.  C has 2n long roots, B has 2n(n-1).
    d = _symmetrize(a)
    long = max(d)
    nlong = sum(1 for rt in roots if _sq(rt, a, d) == 2 * long)
    if n == 2:
        return CartanType("B", 2)
    return CartanType("C", n) if nlong == 2 * n else CartanType("B", n)


def _symmetrize(a) -> List[Fraction]:
    n = len(a)
    d: List = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    return d


def _sq(rt, a, d) -> Fraction:
    n = len(a)
    return sum((rt[i] * d[i] * a[i][j] * rt[j] for i in range(n) for j in range(n)), Fraction(0))


def classical_root_count(t: CartanType) -> int:
    """Closed-form |roots|, used only as a test oracle."""
    n = t.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[t.series]
