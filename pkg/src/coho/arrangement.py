"""Root systems obtained by projecting roots onto a subspace.

Restricting the roots of a Cartan subalgebra to its compact part (or to its
split part) gives a possibly non-reduced root system.  Its reflection
arrangement is what the vanishing-degree minimisations run over: every face
of the arrangement is a Weyl translate of a face of the closed dominant
chamber, and a cost that only grows with the set of positive roots is
minimised on a ray, i.e. on a Weyl translate of a fundamental coweight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .linalg import solve, transpose

Vec = Tuple[Fraction, ...]


class ArrangementError(RuntimeError):
    pass


def _bilinear(form, u, v) -> Fraction:
    n = len(form)
    return sum((u[i] * form[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j]),
               Fraction(0))


@dataclass
class ProjectedSystem:
    """Distinct nonzero projections of a list of vectors, with a base.

    `coords[k]` is the integer coordinate vector, in the simple basis, of
    the projection of `vectors[k]` (all zeros when the projection vanishes).
    """

    simple: List[Vec]
    cartan: List[List[int]]
    coords: List[Tuple[int, ...]]
    components: List[List[int]]
    norms: List[Fraction]

    @property
    def rank(self) -> int:
        return len(self.simple)


def project_roots(vectors: Sequence[Vec], form, generic: Optional[Vec] = None) -> ProjectedSystem:
    """Build the projected system from already-projected vectors.

    `generic` must pair nonzero with every nonzero vector; when omitted one
    is searched for deterministically.
    """
    distinct = sorted({v for v in vectors if any(v)})
    if not distinct:
        return ProjectedSystem([], [], [tuple() for _ in vectors], [], [])
    if generic is None:
        generic = _find_generic(distinct, form)
    sign = {v: _bilinear(form, v, generic) for v in distinct}
    if any(s == 0 for s in sign.values()):
        raise ArrangementError("supplied vector is not generic")
    pos = [v for v in distinct if sign[v] > 0]
    posset = set(pos)
    sums = set()
    for i, u in enumerate(pos):
        for w in pos[i:]:
            sums.add(tuple(a + b for a, b in zip(u, w)))
    simple = sorted((v for v in pos if v not in sums), key=lambda v: (sign[v], v))
    k = len(simple)
    mat = transpose(simple)
    coords_of: Dict[Vec, Tuple[int, ...]] = {}
    for v in distinct:
        sol = solve(mat, v)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ArrangementError(f"projection {v} not an integral combination of the base")
        c = tuple(int(x) for x in sol)
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise ArrangementError("base does not separate positive and negative projections")
        coords_of[v] = c
    if len(posset) * 2 != len(distinct):
        raise ArrangementError("projected set is not symmetric")
    norms = [_bilinear(form, s, s) for s in simple]
    cartan = [[int(2 * _bilinear(form, simple[j], simple[i]) / norms[i]) for j in range(k)]
              for i in range(k)]
    for i in range(k):
        for j in range(k):
            if Fraction(2) * _bilinear(form, simple[j], simple[i]) / norms[i] != cartan[i][j]:
                raise ArrangementError("non-integral Cartan entry in projected system")
    comps: List[List[int]] = []
    seen = set()
    for i in range(k):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in range(k):
                if w not in seen and cartan[u][w] != 0:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    zero = tuple(0 for _ in range(k))
    coords = [coords_of.get(v, zero) if any(v) else zero for v in vectors]
    return ProjectedSystem(simple, cartan, coords, comps, norms)


def _find_generic(vectors: Sequence[Vec], form) -> Vec:
    """A vector in the span of `vectors` pairing nonzero with each of them."""
    from .linalg import column_space_basis
    basis = column_space_basis(vectors)
    for base in range(2, 200):
        g = [Fraction(0)] * len(vectors[0])
        for p, b in enumerate(basis):
            w = Fraction(base) ** p
            for i, x in enumerate(b):
                g[i] += w * x
        gv = tuple(g)
        if all(_bilinear(form, v, gv) != 0 for v in vectors):
            return gv
    raise ArrangementError("no generic vector found")


def coweight_orbit(cartan: Sequence[Sequence[int]], j: int, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Weyl orbit of the j-th fundamental coweight in value coordinates.

    An element x is recorded by the values (gamma_1(x), ..., gamma_k(x)) on
    the simple roots.  The orbit is generated from the dominant element by
    reflecting only in coordinates that are positive.
    """
    k = len(cartan)
    start = tuple(int(i == j) for i in range(k))
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(k):
                vi = v[i]
                if vi <= 0:
                    continue
                row = cartan[i]
                w = tuple(v[l] - vi * row[l] for l in range(k))
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
                    if limit is not None and len(seen) > limit:
                        raise ArrangementError("orbit exceeds limit")
        frontier = nxt
    return order


def minimize_over_rays(ps: ProjectedSystem, weights: Sequence[int],
                       skip_components: Sequence[int] = (), chunk: int = 20000):
    """Minimise sum(weights[a] for a with coords[a](x) > 0) over rays x.

    Returns (value, simple index j, ray) or None if every component is
    skipped.  Ties keep the first ray in (j, orbit order).
    """
    if ps.rank == 0:
        return None
    coeff = np.array(ps.coords, dtype=np.int64)  # M x k
    w = np.array(weights, dtype=np.int64)
    best = None
    skip = {i for c in skip_components for i in ps.components[c]}
    for j in range(ps.rank):
        if j in skip:
            continue
        orbit = coweight_orbit(ps.cartan, j)
        for start in range(0, len(orbit), chunk):
            block = np.array(orbit[start:start + chunk], dtype=np.int64)
            vals = block @ coeff.T
            cost = (vals > 0).astype(np.int64) @ w
            idx = int(np.argmin(cost))
            c = int(cost[idx])
            if best is None or c < best[0]:
                best = (c, j, orbit[start + idx])
    return best


def component_weights(ps: ProjectedSystem, weights: Sequence[int]) -> List[int]:
    """Total weight of the vectors living in each component."""
    out = [0] * len(ps.components)
    where = {i: n for n, comp in enumerate(ps.components) for i in comp}
    for c, w in zip(ps.coords, weights):
        nz = [i for i, x in enumerate(c) if x]
        if nz:
            out[where[nz[0]]] += w
    return out
