"""theta-stable Cartan subalgebras as root-classification states.

A state is the action of the Cartan involution on h* (an integer matrix in
simple-root coordinates) together with the compact/noncompact grading of the
imaginary roots.  No matrix realisation of g is ever built.

Cayley transforms along a noncompact imaginary root beta replace theta by
s_beta * theta.  Imaginary roots of the new state are the old imaginary
roots orthogonal to beta; such a root changes type exactly when alpha + beta
is a root.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .arrangement import ProjectedSystem, project_roots
from .realform import (CompactFormError, RealForm, compactness_grading, restricted_root_system,
                       theta_on_root)
from .rootsys import ParabolicSubset, Root, RootSystem

COMPLEX, REAL, COMPACT, NONCOMPACT = "complex", "real", "imaginary_compact", "imaginary_noncompact"

Mat = Tuple[Tuple[int, ...], ...]


class CayleyError(ValueError):
    pass


class UnsupportedError(RuntimeError):
    """The Cayley-closure search found no Cartan with the required shape."""


def _apply(m: Mat, v: Sequence[int]) -> Root:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


_IMAGES: Dict[tuple, Dict[Root, Root]] = {}


def _root_images(m: Mat, r: RootSystem) -> Dict[Root, Root]:
    """m applied to every root of r in one integer matrix product."""
    # keyed on the Cartan matrix: hashing the RootSystem rehashes every root
    key = (m, r.cartan_matrix)
    hit = _IMAGES.get(key)
    if hit is None:
        if len(_IMAGES) >= 4096:
            _IMAGES.clear()
        imgs = np.array(r.roots, dtype=np.int64) @ np.array(m, dtype=np.int64).T
        hit = _IMAGES[key] = dict(zip(r.roots, map(tuple, imgs.tolist())))
    return hit


def _compose(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def reflection_matrix(r: RootSystem, beta: Root) -> Mat:
    """s_beta acting on simple-root coordinates (columns)."""
    cb = r.coroots[beta]
    n = r.rank
    # <alpha_j, beta^vee> = sum_i cb_i A[i][j]
    p = [sum(cb[i] * r.cartan_matrix[i][j] for i in range(n)) for j in range(n)]
    return tuple(tuple(int(i == j) - beta[i] * p[j] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class ThetaCartan:
    form: RealForm = field(repr=False, compare=False)
    theta: Mat
    grading: Tuple[Tuple[Root, int], ...]  # imaginary roots -> 1 if noncompact
    provenance: Tuple[Root, ...] = ()

    @property
    def system(self) -> RootSystem:
        return self.form.ambient

    def act(self, v: Sequence[int]) -> Root:
        img = _root_images(self.theta, self.system).get(tuple(v))
        return img if img is not None else _apply(self.theta, v)

    @property
    def eps(self) -> Dict[Root, int]:
        return dict(self.grading)

    def classify(self, alpha: Root) -> str:
        t = self.act(alpha)
        if t == alpha:
            return NONCOMPACT if self.eps[alpha] else COMPACT
        if t == tuple(-x for x in alpha):
            return REAL
        return COMPLEX

    @property
    def classification(self) -> Dict[Root, str]:
        return {a: self.classify(a) for a in self.system.roots}

    @property
    def dims(self) -> Tuple[int, int]:
        plus = len(linalg.eigenspace(self.theta, 1))
        return plus, self.system.rank - plus

    def roots_of(self, kind: str) -> List[Root]:
        return [a for a in self.system.roots if self.classify(a) == kind]

    def signature(self) -> tuple:
        r = self.system
        cnt = Counter((self.classify(a), r.half_length(a)) for a in r.roots)
        return self.dims + (tuple(sorted(cnt.items())),)

    def dim_k(self) -> int:
        cls = self.classification.values()
        return (self.dims[0] + sum(1 for c in cls if c == COMPACT)
                + sum(1 for c in cls if c in (COMPLEX, REAL)) // 2)


def fundamental_cartan(form: RealForm) -> ThetaCartan:
    n = form.ambient.rank
    s = form.vogan.sigma()
    theta = tuple(tuple(int(s[j] == i) for j in range(n)) for i in range(n))
    eps = compactness_grading(form)
    return ThetaCartan(form, theta, tuple(sorted(eps.items())))


def _forward_grading(r: RootSystem, eps: Dict[Root, int], beta: Root) -> Dict[Root, int]:
    out = {}
    for a, e in eps.items():
        if a == beta or a == tuple(-x for x in beta) or r.inner(a, beta) != 0:
            continue
        plus = tuple(x + y for x, y in zip(a, beta))
        out[a] = (e + (1 if r.contains(plus) else 0)) % 2
    return out


def cayley_transform(c: ThetaCartan, beta: Sequence[int]) -> ThetaCartan:
    beta = tuple(beta)
    r = c.system
    if not r.contains(beta) or c.act(beta) != beta or not c.eps.get(beta):
        raise CayleyError(f"{beta} is not a noncompact imaginary root of this Cartan")
    theta = _compose(reflection_matrix(r, beta), c.theta)
    eps = _forward_grading(r, c.eps, beta)
    new = ThetaCartan(c.form, theta, tuple(sorted(eps.items())), c.provenance + (beta,))
    # imaginary roots of the new state are exactly the graded ones
    imag = {a for a in r.roots if new.act(a) == a}
    if imag != set(eps):
        raise AssertionError("Cayley reclassification lost track of imaginary roots")
    return new


def enumerate_cartans(form: RealForm) -> List[ThetaCartan]:
    """One representative per signature of the Cayley closure of the fundamental Cartan."""
    start = fundamental_cartan(form)
    reps = {start.signature(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for beta in c.system.positive_roots:
                if c.act(beta) == beta and c.eps[beta]:
                    d = cayley_transform(c, beta)
                    sig = d.signature()
                    if sig not in reps:
                        reps[sig] = d
                        nxt.append(d)
        frontier = nxt
    return sorted(reps.values(), key=lambda c: (c.dims[1], repr(c.signature())))


def maximally_split(form: RealForm) -> ThetaCartan:
    """Greedy Cayley chain from the fundamental Cartan until no noncompact imaginary root is left."""
    c = fundamental_cartan(form)
    while True:
        beta = next((b for b in c.system.positive_roots if c.act(b) == b and c.eps[b]), None)
        if beta is None:
            return c
        c = cayley_transform(c, beta)


# -- restricted roots from a split Cartan --------------------------------------

@dataclass(frozen=True)
class SplitData:
    """Restricted roots read off the maximally split Cartan, matched to Satake data.

    `restricted[alpha]` is the restricted root of alpha in the Satake simple
    basis (all zeros for imaginary roots).
    """

    state: ThetaCartan
    projected: ProjectedSystem = field(repr=False)
    perm: Tuple[int, ...]  # derived simple index -> Satake simple index (0-based)
    restricted: Dict[Root, Tuple[int, ...]] = field(repr=False)
    multiplicities: Dict[Tuple[int, ...], int] = field(repr=False)
    dim_m0: int

    @property
    def dim_a0(self) -> int:
        return self.state.dims[1]


def _split_projection(state: ThetaCartan):
    r = state.system
    vecs = []
    for a in r.roots:
        t = state.act(a)
        vecs.append(tuple(Fraction(x - y, 2) for x, y in zip(a, t)))
    return vecs


def _match_diagram(derived: Sequence[Sequence[int]], target: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    n = len(derived)
    if len(target) != n:
        return []
    out = []

    def rec(assign):
        k = len(assign)
        if k == n:
            out.append(tuple(assign))
            return
        for cand in range(n):
            if cand in assign:
                continue
            if target[cand][cand] != derived[k][k]:
                continue
            if all(derived[k][j] == target[cand][assign[j]] and derived[j][k] == target[assign[j]][cand]
                   for j in range(k)):
                rec(assign + [cand])

    rec([])
    return out


@lru_cache(maxsize=None)
def split_data(form: RealForm) -> SplitData:
    if form.is_compact:
        raise CompactFormError(f"{form.id} is compact")
    state = maximally_split(form)
    r = state.system
    vecs = _split_projection(state)
    ps = project_roots(vecs, r.form)
    rs = restricted_root_system(form)
    mult_derived = Counter(c for c in ps.coords if any(c))
    for perm in _match_diagram(ps.cartan, rs.base.cartan_matrix):
        mapped = {}
        for c, m in mult_derived.items():
            v = [0] * len(c)
            for k, x in enumerate(c):
                v[perm[k]] = x
            mapped[tuple(v)] = m
        if mapped == rs.mult:
            restricted = {}
            for a, c in zip(r.roots, ps.coords):
                v = [0] * len(c)
                for k, x in enumerate(c):
                    v[perm[k]] = x
                restricted[a] = tuple(v)
            imag = sum(1 for a in r.roots if state.act(a) == a)
            return SplitData(state, ps, perm, restricted, mapped, state.dims[0] + imag)
    raise UnsupportedError(
        f"{form.id}: restricted roots of the maximally split Cartan do not match the Satake record "
        f"{form.satake.restricted_type} {list(form.satake.simple_mults)}")


# -- adapted Cartan for a standard parabolic ----------------------------------

@dataclass(frozen=True)
class AdaptedCartan:
    """h = c + a + c' + a' adapted to a standard real parabolic.

    Subspaces are given by bases of their annihilator-free duals inside h*
    (simple-root coordinates); `projectors` holds the form-orthogonal
    projections onto them.
    """

    base: ThetaCartan
    parabolic: ParabolicSubset
    levi_roots: Tuple[Root, ...]
    nil_roots: Tuple[Root, ...]
    split: Dict[str, List[Tuple[Fraction, ...]]] = field(repr=False)
    projectors: Dict[str, linalg.Matrix] = field(repr=False)
    grading_solutions: int = 1

    @property
    def dims(self) -> Dict[str, int]:
        return {k: len(v) for k, v in self.split.items()}


def _imaginary_simple(r: RootSystem, imag: Sequence[Root]) -> Tuple[List[Root], Dict[Root, Tuple[int, ...]]]:
    pos = [a for a in imag if sum(a) > 0]
    pset = set(pos)
    sums = {tuple(x + y for x, y in zip(a, b)) for a in pos for b in pos}
    simple = [a for a in pos if a not in sums]
    coords = {}
    if simple:
        mat = linalg.transpose(simple)
        for a in imag:
            sol = linalg.solve(mat, a)
            coords[a] = tuple(int(x) for x in sol)
    return simple, coords


def _solve_grading(state_theta: Mat, form: RealForm, chain: Sequence[Root], target: ThetaCartan):
    """All gradings at `state_theta` whose forward Cayley chain lands on `target`."""
    r = form.ambient
    images = _root_images(state_theta, r)
    imag = [a for a in r.roots if images[a] == a]
    simple, coords = _imaginary_simple(r, imag)
    goal = target.eps
    sols = []
    for bits in iproduct((0, 1), repeat=len(simple)):
        eps = {a: sum(c * b for c, b in zip(coords[a], bits)) % 2 for a in imag}
        cur = ThetaCartan(form, state_theta, tuple(sorted(eps.items())))
        ok = True
        for beta in reversed(chain):
            if not cur.eps.get(beta):
                ok = False
                break
            cur = cayley_transform(cur, beta)
        if ok and cur.theta == target.theta and cur.eps == goal:
            sols.append(eps)
    return sols


def _orth_complement(basis: Sequence[Sequence], form) -> List[Tuple[Fraction, ...]]:
    n = len(form)
    if not basis:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    rows = [linalg.matvec(form, b) for b in basis]  # (b, x) = b^T B x
    return linalg.nullspace(rows, n)


def adapted_cartan(form: RealForm, s: ParabolicSubset) -> AdaptedCartan:
    sd = split_data(form)
    r = form.ambient
    rank_res = len(sd.perm)
    s.validate(rank_res)
    inside = s.zero_based()
    levi, nil = [], []
    for a in r.roots:
        c = sd.restricted[a]
        if all(x == 0 for i, x in enumerate(c) if i not in inside):
            levi.append(a)
        elif any(x > 0 for i, x in enumerate(c) if i not in inside):
            nil.append(a)

    theta = sd.state.theta
    chain: List[Root] = []
    while True:
        images = _root_images(theta, r)
        beta = next((b for b in levi if sum(b) > 0 and images[b] == tuple(-x for x in b)), None)
        if beta is None:
            break
        theta = _compose(reflection_matrix(r, beta), theta)
        chain.append(beta)

    sols = _solve_grading(theta, form, chain, sd.state)
    if not sols:
        raise UnsupportedError(f"{form.id}, S={s}: no grading of the adapted Cartan is consistent with the Cayley chain")
    eps = sols[0]
    state = ThetaCartan(form, theta, tuple(sorted(eps.items())), tuple(chain))
    if state.dim_k() != form.expected["dim_k"]:
        raise UnsupportedError(f"{form.id}, S={s}: adapted Cartan gives dim k = {state.dim_k()}")

    plus = linalg.eigenspace(theta, 1)
    minus = linalg.eigenspace(theta, -1)
    lspan = linalg.column_space_basis(levi)
    lperp = _orth_complement(lspan, r.form)
    n = r.rank
    split = {
        "c": linalg.intersect(plus, lperp, n),
        "a": linalg.intersect(minus, lperp, n),
        "c_prime": linalg.intersect(plus, lspan, n),
        "a_prime": linalg.intersect(minus, lspan, n),
    }
    if sum(len(v) for v in split.values()) != n:
        raise UnsupportedError(f"{form.id}, S={s}: four-way split has the wrong total dimension")
    if any(state.classify(a) == REAL for a in levi):
        raise UnsupportedError(f"{form.id}, S={s}: Levi still has real roots")
    if len(split["a"]) != rank_res - len(inside):
        raise UnsupportedError(f"{form.id}, S={s}: central split part has dimension {len(split['a'])}")
    projectors = {k: linalg.orthogonal_projector(v, r.form) for k, v in split.items()}
    return AdaptedCartan(state, s, tuple(levi), tuple(nil), split, projectors, len(sols))
