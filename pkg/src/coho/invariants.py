"""Vanishing-degree invariants of a real form.

r_g is a minimum of dim(n_q ∩ s) over proper theta-stable parabolics.  Such
a parabolic is cut out by a point x of the compact part t of the fundamental
Cartan: n_q is spanned by the root spaces with alpha|_t(x) > 0.  The cost
only grows with the set of positive restricted t-weights, so the minimum is
taken on rays of the t-weight arrangement (see `arrangement`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .arrangement import component_weights, minimize_over_rays, project_roots
from .cartans import (COMPACT, COMPLEX, NONCOMPACT, REAL, AdaptedCartan, ThetaCartan,
                      fundamental_cartan)
from .realform import CompactFormError, RealForm, restricted_root_system
from .rootsys import ParabolicSubset, Root, RootSystem, pairing, parabolic_split

INF = math.inf
DEFAULT_EXHAUSTIVE_LIMIT = 6

Value = Union[int, float]


class PreconditionError(ValueError):
    """A functional fails regularity, integrality or purity."""

    def __init__(self, message: str, coroot: Optional[Root] = None):
        super().__init__(message)
        self.coroot = coroot


class LimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class InvariantValue:
    value: Value
    method: str
    witness: Optional[dict] = field(default=None, compare=False)

    def render(self) -> str:
        return "infinity" if self.value == INF else str(self.value)


# -- r' ----------------------------------------------------------------------

def r_prime(form: RealForm) -> InvariantValue:
    """Smallest real nilradical: drop one simple restricted root."""
    if form.is_compact:
        raise CompactFormError(f"r' is undefined for the compact form {form.id}")
    rs = restricted_root_system(form)
    best = None
    for i in range(rs.rank):
        dim = sum(m for b, m in rs.positive if b[i] > 0)
        if best is None or dim < best[0]:
            best = (dim, i)
    return InvariantValue(best[0], "exhaustive", {"dropped_simple_root": best[1] + 1})


def nilradical_dim(form: RealForm, s: ParabolicSubset) -> int:
    rs = restricted_root_system(form)
    s.validate(rs.rank)
    inside = s.zero_based()
    return sum(m for b, m in rs.positive if any(b[i] > 0 for i in range(rs.rank) if i not in inside))


# -- s-dimension counting ----------------------------------------------------

def _weight(kind: str) -> int:
    # twice the contribution of one root to dim(n ∩ s)
    return {NONCOMPACT: 2, COMPLEX: 1, COMPACT: 0, REAL: 1}[kind]


def s_dimension(state: ThetaCartan, roots: Iterable[Root]) -> int:
    """dim(n ∩ s_C) for a theta-stable set of roots spanning n."""
    twice = sum(_weight(state.classify(a)) for a in roots)
    if twice % 2:
        raise AssertionError("root set is not theta-stable")
    return twice // 2


# -- r_g ---------------------------------------------------------------------

def _t_arrangement(state: ThetaCartan, roots: Sequence[Root]):
    r = state.system
    vecs = []
    for a in roots:
        t = state.act(a)
        vecs.append(tuple(Fraction(x + y, 2) for x, y in zip(a, t)))
    ps = project_roots(vecs, r.form)
    weights = [_weight(state.classify(a)) for a in roots]
    return ps, weights


def _min_over_t(state: ThetaCartan, roots: Sequence[Root], limit: Optional[int]):
    ps, weights = _t_arrangement(state, roots)
    if limit is not None and ps.rank > limit:
        raise LimitError(f"rank of t is {ps.rank}, above the exhaustive limit {limit}; rerun with --deep")
    cw = component_weights(ps, weights)
    skip = [i for i, w in enumerate(cw) if w == 0]
    best = minimize_over_rays(ps, weights, skip)
    if best is None:
        return None
    value, j, ray = best
    if value % 2:
        raise AssertionError("odd doubled cost on a ray")
    positive = [a for a, c in zip(roots, ps.coords) if sum(x * y for x, y in zip(c, ray)) > 0]
    return value // 2, {"t_rank": ps.rank, "coweight": j + 1, "ray_values": list(ray),
                        "nilradical_roots": len(positive)}


def complex_fast_path(form: RealForm) -> InvariantValue:
    """Complex g viewed as real: smallest nilradical of a proper parabolic of g_C."""
    base = form.complex_system
    best = None
    for i in range(base.rank):
        dim = sum(1 for a in base.positive_roots if a[i] > 0)
        if best is None or dim < best[0]:
            best = (dim, i)
    return InvariantValue(best[0], "complex_fast_path", {"dropped_simple_root": best[1] + 1})


def r_g(form: RealForm, deep: bool = False, limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
        use_fast_path: bool = True) -> InvariantValue:
    if form.is_compact:
        return InvariantValue(INF, "compact_rule")
    if form.is_complex and use_fast_path:
        return complex_fast_path(form)
    state = fundamental_cartan(form)
    res = _min_over_t(state, state.system.roots, None if deep else limit)
    if res is None:
        return InvariantValue(INF, "compact_rule")
    return InvariantValue(res[0], "exhaustive", res[1])


def r_m(ac: AdaptedCartan) -> InvariantValue:
    """r of the Levi's semisimple part on its fundamental Cartan c' + a'.

    Minimum over the noncompact simple ideals; +infinity when there is none.
    """
    res = _min_over_t(ac.base, ac.levi_roots, None)
    if res is None:
        return InvariantValue(INF, "ideal_min_rule")
    return InvariantValue(res[0], "ideal_min_rule", res[1])


# -- parameters --------------------------------------------------------------

def check_regular_integral(r: RootSystem, lam: Sequence) -> None:
    for a in r.positive_roots:
        v = pairing(lam, a, r)
        if v == 0 or v.denominator != 1:
            raise PreconditionError(f"<mu, coroot of {a}> = {v} is not a nonzero integer", a)


def is_pure(state: ThetaCartan, lam: Sequence) -> bool:
    r = state.system
    return all(pairing(lam, state.act(a), r) == pairing(lam, a, r)
               for a in (tuple(int(i == j) for j in range(r.rank)) for i in range(r.rank)))


def nil_of_parameter(r: RootSystem, roots: Sequence[Root], values: Dict[Root, Fraction]) -> List[Root]:
    """n(mu) = {alpha : <mu - rho_mu, alpha^vee> > 0} inside `roots`."""
    pos = [a for a in roots if values[a] > 0]
    rho2 = [0] * r.rank  # 2 rho_mu in simple-root coordinates
    for a in pos:
        for i, x in enumerate(a):
            rho2[i] += x
    out = []
    for a in roots:
        # <2 rho_mu, alpha^vee> = 2 (2rho_mu, alpha) / (alpha, alpha)
        shift = r.inner(rho2, a) / r.inner(a, a)
        if values[a] - shift > 0:
            out.append(a)
    return out


def r_mu_on(state: ThetaCartan, roots: Sequence[Root], values: Dict[Root, Fraction]) -> int:
    return s_dimension(state, nil_of_parameter(state.system, roots, values))


def r_g_mu(form: RealForm, mu: Sequence) -> InvariantValue:
    r = form.ambient
    mu = tuple(Fraction(x) for x in mu)
    if len(mu) != r.rank:
        raise PreconditionError(f"mu needs {r.rank} coordinates, got {len(mu)}")
    check_regular_integral(r, mu)
    state = fundamental_cartan(form)
    if not is_pure(state, mu):
        raise PreconditionError("mu is not supported on t (not theta-invariant)")
    values = {a: pairing(mu, a, r) for a in r.roots}
    nil = nil_of_parameter(r, r.roots, values)
    return InvariantValue(s_dimension(state, nil), "exhaustive", {"nilradical_roots": len(nil)})


def weyl_orbit(r: RootSystem, lam: Sequence, limit: int = 200000) -> List[Tuple[Fraction, ...]]:
    start = tuple(Fraction(x) for x in lam)
    seen = {start}
    order = [start]
    frontier = [start]
    a = r.cartan_matrix
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(r.rank):
                if v[i] == 0:
                    continue
                w = tuple(v[j] - v[i] * a[j][i] for j in range(r.rank))
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
        if len(seen) > limit:
            raise LimitError(f"Weyl orbit exceeds {limit} elements")
        frontier = nxt
    return order


def r_min_over_parameter(form: RealForm, lam0: Sequence) -> InvariantValue:
    r = form.ambient
    check_regular_integral(r, lam0)
    state = fundamental_cartan(form)
    best = None
    pure = 0
    for w in weyl_orbit(r, lam0):
        if not is_pure(state, w):
            continue
        pure += 1
        v = r_g_mu(form, w).value
        if best is None or v < best[0]:
            best = (v, w)
    if best is None:
        return InvariantValue(INF, "exhaustive", {"pure_orbit_points": 0})
    return InvariantValue(best[0], "exhaustive",
                          {"pure_orbit_points": pure, "minimiser": [str(x) for x in best[1]]})


def kostant_degree(r: RootSystem, s: ParabolicSubset, lam: Sequence) -> int:
    check_regular_integral(r, lam)
    _, nil = parabolic_split(r, s)
    return sum(1 for a in nil if pairing(lam, a, r) > 0)
