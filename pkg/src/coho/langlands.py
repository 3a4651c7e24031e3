"""Cells of the Langlands decomposition of the restricted dual space.

Functionals nu are written in the fundamental-weight basis of the restricted
root system: nu_i = <nu, beta_i^vee> for the simple restricted roots.  For
a standard parabolic S the space splits as

    nu = nu_plus + nu^P,   nu^P = sum_{k in S} x_k beta_k,

with nu_plus killing every coroot of S.  nu sits in the cell of S when
nu_plus is strictly positive on the simple coroots outside S and
-nu^P lies in the closed cone spanned by the beta_k, k in S.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .cones import cone_membership
from .realform import RealForm, RestrictedRootSystem, restricted_root_system
from .rootsys import ParabolicSubset, all_parabolics

Vec = Tuple[Fraction, ...]


class LanglandsError(RuntimeError):
    """Zero or several cells contain nu: an internal invariant is broken."""


@dataclass(frozen=True)
class ConeDecomposition:
    parabolic: ParabolicSubset
    nu_plus: Vec
    cone_part: Vec  # nu = nu_plus - cone_part
    coefficients: Vec  # cone_part = sum coefficients[k] * beta_k over sorted S

    def describe(self, rank: int) -> str:
        s = self.parabolic.levi_indices
        if not s:
            name = "P0"
        elif len(s) == rank:
            name = "G"
        else:
            name = "P" + str(self.parabolic)
        return name


def _split(rs: RestrictedRootSystem, nu: Vec, s: ParabolicSubset) -> Tuple[Vec, Vec, Vec]:
    a = rs.base.cartan_matrix
    idx = sorted(s.zero_based())
    if not idx:
        return nu, tuple(Fraction(0) for _ in nu), ()
    sub = [[a[i][k] for k in idx] for i in idx]
    x = linalg.solve(sub, [nu[i] for i in idx])
    n = len(nu)
    # beta_k in weight coordinates is column k of the Cartan matrix
    nup = tuple(sum((x[m] * a[i][k] for m, k in enumerate(idx)), Fraction(0)) for i in range(n))
    return tuple(v - w for v, w in zip(nu, nup)), tuple(-w for w in nup), tuple(-v for v in x)


def in_cell(rs: RestrictedRootSystem, nu: Sequence, s: ParabolicSubset) -> Optional[ConeDecomposition]:
    nu = tuple(Fraction(v) for v in nu)
    inside = s.zero_based()
    plus, cone, _ = _split(rs, nu, s)
    if any(plus[j] <= 0 for j in range(len(nu)) if j not in inside):
        return None
    idx = sorted(inside)
    a = rs.base.cartan_matrix
    gens = [tuple(a[i][k] for i in range(len(nu))) for k in idx]
    m = cone_membership(cone, gens)
    if not m.inside:
        return None
    return ConeDecomposition(s, plus, cone, m.coefficients)


def langlands_decompose(rs: RestrictedRootSystem, nu: Sequence) -> ConeDecomposition:
    nu = tuple(Fraction(v) for v in nu)
    if len(nu) != rs.rank:
        raise ValueError(f"nu needs {rs.rank} coordinates, got {len(nu)}")
    hits = [d for d in (in_cell(rs, nu, s) for s in all_parabolics(rs.rank, proper_only=False)) if d]
    if len(hits) != 1:
        raise LanglandsError(f"{len(hits)} cells contain nu = {[str(v) for v in nu]}")
    return hits[0]


def decompose_int(cartan: Sequence[Sequence[int]], inverses, nu: Sequence[int]) -> List[int]:
    """Indices (as bitmasks) of every cell containing an integer nu.

    Integer-only twin of `langlands_decompose` for large property sweeps;
    `inverses[mask]` holds (det, adjugate) of the Cartan submatrix on mask.
    """
    n = len(nu)
    out = []
    for mask, (det, adj, idx) in inverses.items():
        # x * det = adj . nu_S ; nu^P * det = sum x_k beta_k * det
        xd = [sum(adj[r][c] * nu[idx[c]] for c in range(len(idx))) for r in range(len(idx))]
        sgn = 1 if det > 0 else -1
        if any(v * sgn > 0 for v in xd):
            continue
        ok = True
        for j in range(n):
            if mask >> j & 1:
                continue
            val = nu[j] * det - sum(xd[m] * cartan[j][k] for m, k in enumerate(idx))
            if val * sgn <= 0:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def integer_inverses(cartan: Sequence[Sequence[int]]):
    n = len(cartan)
    out = {}
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if not idx:
            out[mask] = (1, [], idx)
            continue
        sub = [[cartan[i][k] for k in idx] for i in idx]
        inv = linalg.inverse(sub)
        det = _det(sub)
        adj = [[int(v * det) for v in row] for row in inv]
        out[mask] = (det, adj, idx)
    return out


def _det(m) -> int:
    m = [[Fraction(v) for v in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return int(det)


def is_dominant(form: RealForm, s: ParabolicSubset, nu: Sequence) -> bool:
    """nu on the split centre a of the Levi, given by its values on the
    simple coroots outside S (in increasing index order)."""
    rs = restricted_root_system(form)
    s.validate(rs.rank)
    inside = s.zero_based()
    outside = [j for j in range(rs.rank) if j not in inside]
    if len(nu) != len(outside):
        raise ValueError(f"nu needs {len(outside)} coordinates, got {len(nu)}")
    val = dict(zip(outside, (Fraction(v) for v in nu)))
    d = rs.base.symmetrizer
    for b, _ in rs.positive:
        if not any(b[j] > 0 for j in outside):
            continue
        # (nu, beta) up to a positive factor
        if sum((b[j] * d[j] * val[j] for j in outside), Fraction(0)) < 0:
            return False
    return True
