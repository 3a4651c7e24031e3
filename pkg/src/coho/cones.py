"""Exact membership in finitely generated convex cones.

`cone_membership(x, gens)` decides whether x = sum c_i g_i with c_i >= 0.
Inside, it returns the coefficients; outside, a Farkas certificate y with
y . g_i >= 0 for every generator and y . x < 0.

Independent generators are handled by a direct solve.  Otherwise the
equality part is solved exactly and the sign constraints on the remaining
free parameters go through Fourier-Motzkin elimination, carrying for every
derived inequality the nonnegative multipliers that produced it, so that an
infeasible system yields the certificate for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg

Vec = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Membership:
    inside: bool
    coefficients: Optional[Vec] = None
    certificate: Optional[Vec] = None


def _fr(v) -> Vec:
    return tuple(Fraction(x) for x in v)


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _outside_span(gens: Sequence[Vec], x: Vec) -> Membership:
    # any y orthogonal to the span with y.x != 0 separates
    for y in linalg.nullspace(gens, len(x)):
        t = _dot(y, x)
        if t != 0:
            return Membership(False, certificate=tuple(-v if t > 0 else v for v in y))
    raise AssertionError("x outside span but no separating functional")


def _independent(gens: Sequence[Vec], x: Vec) -> Membership:
    d = len(x)
    cols = linalg.transpose(gens)
    sol = linalg.solve(cols, x)
    if sol is None:
        return _outside_span(gens, x)
    if all(c >= 0 for c in sol):
        return Membership(True, coefficients=tuple(sol))
    i = next(k for k, c in enumerate(sol) if c < 0)
    # y with y.g_j = delta_ij; it exists because the generators are independent
    rhs_rows = list(gens)
    target = [Fraction(int(j == i)) for j in range(len(gens))]
    y = linalg.solve(rhs_rows, target)
    return Membership(False, certificate=y)


def _fme(gens: Sequence[Vec], x: Vec) -> Membership:
    k = len(gens)
    cols = linalg.transpose(gens)
    c0 = linalg.solve(cols, x)
    if c0 is None:
        return _outside_span(gens, x)
    null = linalg.nullspace(cols, k)  # c = c0 + sum t_j null_j
    m = len(null)
    # c_i >= 0  <=>  -sum_j null_j[i] t_j <= c0[i]; multipliers over the k sign constraints
    rows = [(tuple(-n[i] for n in null), c0[i], _unit(k, i)) for i in range(k)]
    stages = []
    for var in reversed(range(m)):
        stages.append((var, rows))
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        new = [r for r in rows if r[0][var] == 0]
        seen = {(r[0], r[1]) for r in new}
        for p in pos:
            for n in neg:
                sp, sn = p[0][var], -n[0][var]
                a = tuple(sn * u + sp * v for u, v in zip(p[0], n[0]))
                b = sn * p[1] + sp * n[1]
                scale = _normaliser(a, b)
                a = tuple(v / scale for v in a)
                b = b / scale
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                new.append((a, b, tuple((sn * s + sp * t) / scale for s, t in zip(p[2], n[2]))))
        rows = new
    for a, b, u in rows:
        if b < 0:
            # u lies in the row space of G, so G^T y = u is solvable
            y = linalg.solve(gens, u)
            return Membership(False, certificate=y)
    t = [Fraction(0)] * m
    for var, st in reversed(stages):
        lo = hi = None
        for a, b, _ in st:
            if a[var] == 0:
                continue
            val = (b - sum(a[l] * t[l] for l in range(var))) / a[var]
            if a[var] > 0:
                hi = val if hi is None else min(hi, val)
            else:
                lo = val if lo is None else max(lo, val)
        t[var] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    c = tuple(c0[i] + sum(t[j] * null[j][i] for j in range(m)) for i in range(k))
    return Membership(True, coefficients=c)


def _unit(n: int, i: int) -> Vec:
    return tuple(Fraction(int(j == i)) for j in range(n))


def _normaliser(a, b) -> Fraction:
    m = max((abs(v) for v in tuple(a) + (b,)), default=Fraction(0))
    return m if m else Fraction(1)


def cone_membership(x: Sequence, generators: Sequence[Sequence]) -> Membership:
    x = _fr(x)
    gens = [_fr(g) for g in generators]
    if not gens:
        if all(v == 0 for v in x):
            return Membership(True, coefficients=())
        return Membership(False, certificate=tuple(-v for v in x))
    if linalg.rank(gens) == len(gens):
        return _independent(gens, x)
    return _fme(gens, x)


def verify_membership(m: Membership, x: Sequence, generators: Sequence[Sequence]) -> bool:
    """Replay a decision: check coefficients or the certificate exactly."""
    x = _fr(x)
    gens = [_fr(g) for g in generators]
    if m.inside:
        if any(c < 0 for c in m.coefficients):
            return False
        combo = [sum((c * g[i] for c, g in zip(m.coefficients, gens)), Fraction(0)) for i in range(len(x))]
        return tuple(combo) == x
    y = m.certificate
    return all(_dot(y, g) >= 0 for g in gens) and _dot(y, x) < 0
