"""Catalog of real forms: Vogan data, Satake data and derived invariants.

Each form ships both a Vogan diagram (which fixes the Cartan involution on a
fundamental Cartan subalgebra) and Satake data (restricted roots with
multiplicities).  Loading validates both against the expected dimensions so
that a bad descriptor fails loudly instead of producing wrong invariants.

Descriptor files are JSON documents; see ``docs/descriptor-format.md``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .rootsys import CartanType, Root, RootSystem, build_root_system, product

SCHEMA_VERSION = 1
DEFAULT_DATA_DIR = Path(__file__).with_name("data") / "forms"


class CatalogError(ValueError):
    """Raised for malformed or inconsistent descriptors."""


class ParseError(CatalogError):
    pass


class ValidationError(CatalogError):
    pass


class CompactFormError(ValueError):
    pass


@dataclass(frozen=True)
class VoganDiagram:
    automorphism: Tuple[int, ...]  # 1-based image of each simple index
    painted: frozenset

    def sigma(self) -> Tuple[int, ...]:
        """0-based permutation."""
        return tuple(i - 1 for i in self.automorphism)


@dataclass(frozen=True)
class SatakeRecord:
    restricted_type: str  # "none" for compact forms, e.g. "BC2", "F4"
    simple_mults: Tuple[int, ...]
    double_mult: int
    dim_a0: int
    dim_m0: int


@dataclass(frozen=True)
class Literature:
    r_prime: Optional[int]
    r_g: Optional[int]
    source: str


@dataclass(frozen=True)
class RealForm:
    id: str
    complex_system: RootSystem
    vogan: VoganDiagram
    satake: SatakeRecord
    expected: Dict[str, int]
    literature: Literature
    is_complex: bool = False
    aliases: Tuple[str, ...] = ()
    path: Optional[str] = None

    @cached_property
    def ambient(self) -> RootSystem:
        """Root system of g_C; two copies of the simple system for complex forms."""
        if self.is_complex:
            return product(self.complex_system, self.complex_system)
        return self.complex_system

    @property
    def is_compact(self) -> bool:
        return self.satake.restricted_type == "none"

    @property
    def dim_g(self) -> int:
        return self.expected["dim_g"]

    def __hash__(self):
        return hash(self.id)

    def __eq__(self, other):
        return isinstance(other, RealForm) and other.id == self.id


@dataclass(frozen=True)
class RestrictedRootSystem:
    """Restricted roots in simple-restricted-root coordinates.

    `base` is the reduced system carrying coroots and the form; for BC_n it
    is B_n (A_1 when n = 1) and the doubled short roots are added.
    """

    label: str
    base: RootSystem
    elements: Tuple[Tuple[Root, int], ...]
    non_reduced: bool

    @property
    def rank(self) -> int:
        return self.base.rank

    @property
    def simple_restricted(self) -> Tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def mult(self) -> Dict[Root, int]:
        return dict(self.elements)

    @property
    def positive(self) -> List[Tuple[Root, int]]:
        return [(b, m) for b, m in self.elements if sum(b) > 0]

    def reduced_positive(self) -> List[Root]:
        """Positive roots beta with beta/2 not a restricted root."""
        out = []
        for b, _ in self.positive:
            if all(x % 2 == 0 for x in b) and tuple(x // 2 for x in b) in self.mult:
                continue
            out.append(b)
        return out


# -- descriptor loading ------------------------------------------------------

_REQUIRED = ("schema_version", "id", "complex_type", "automorphism", "painted", "expected", "satake")


def parse_descriptor(doc: dict, path: Optional[str] = None) -> RealForm:
    where = path or doc.get("id", "<descriptor>")
    missing = [k for k in _REQUIRED if k not in doc]
    if missing:
        raise ParseError(f"{where}: missing fields {missing}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ParseError(f"{where}: unsupported schema_version {doc['schema_version']}")
    try:
        ctype = CartanType.parse(doc["complex_type"])
        system = build_root_system(ctype)
        sat = doc["satake"]
        satake = SatakeRecord(
            restricted_type=str(sat["restricted_type"]),
            simple_mults=tuple(int(x) for x in sat.get("simple_mults", [])),
            double_mult=int(sat.get("double_mult", 0)),
            dim_a0=int(sat["dim_a0"]),
            dim_m0=int(sat["dim_m0"]),
        )
        exp = {k: int(doc["expected"][k]) for k in ("dim_g", "dim_k", "rank_kC")}
        lit = doc.get("literature") or {}
        literature = Literature(lit.get("r_prime"), lit.get("r_g"), str(lit.get("source", "")))
        vogan = VoganDiagram(tuple(int(i) for i in doc["automorphism"]),
                             frozenset(int(i) for i in doc["painted"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CatalogError):
            raise
        raise ParseError(f"{where}: {exc}") from exc
    form = RealForm(
        id=str(doc["id"]),
        complex_system=system,
        vogan=vogan,
        satake=satake,
        expected=exp,
        literature=literature,
        is_complex=bool(doc.get("complex", False)),
        aliases=tuple(doc.get("aliases", [])),
        path=path,
    )
    validate_form(form)
    return form


def load_catalog(path=None) -> List[RealForm]:
    """Parse and validate every ``*.json`` descriptor in a directory."""
    if path is None:
        path = os.environ.get("COHO_DATA_DIR") or DEFAULT_DATA_DIR
    directory = Path(path)
    if not directory.is_dir():
        raise ParseError(f"catalog directory {directory} does not exist")
    forms = []
    for p in sorted(directory.glob("*.json")):
        try:
            doc = json.loads(p.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{p.name}: {exc}") from exc
        forms.append(parse_descriptor(doc, p.name))
    ids = [f.id for f in forms]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise ValidationError(f"duplicate form ids {sorted(dup)}")
    return sorted(forms, key=lambda f: f.id)


def find_form(catalog: Sequence[RealForm], name: str) -> RealForm:
    for f in catalog:
        if f.id == name or name in f.aliases:
            return f
    raise KeyError(name)


# -- Vogan side --------------------------------------------------------------

def _check_vogan(form: RealForm) -> None:
    r = form.ambient
    n = r.rank
    sig = form.vogan.automorphism
    if sorted(sig) != list(range(1, n + 1)):
        raise ValidationError(f"{form.id}: automorphism {list(sig)} is not a permutation of 1..{n}")
    s = form.vogan.sigma()
    if any(s[s[i]] != i for i in range(n)):
        raise ValidationError(f"{form.id}: automorphism is not an involution")
    a = r.cartan_matrix
    if any(a[s[i]][s[j]] != a[i][j] for i in range(n) for j in range(n)):
        raise ValidationError(f"{form.id}: automorphism does not preserve the Cartan matrix")
    bad = [i for i in form.vogan.painted if not 1 <= i <= n or s[i - 1] != i - 1]
    if bad:
        raise ValidationError(f"{form.id}: painted nodes {sorted(bad)} are not automorphism-fixed")


def theta_on_root(form: RealForm, alpha: Sequence[int]) -> Root:
    s = form.vogan.sigma()
    out = [0] * len(alpha)
    for i, c in enumerate(alpha):
        out[s[i]] = c
    return tuple(out)


def compactness_grading(form: RealForm) -> Dict[Root, int]:
    """Z/2 grading on automorphism-fixed roots; 1 means noncompact.

    Painted simple roots are odd.  When the automorphism swaps two adjacent
    nodes i, s(i), every fixed root containing them is shifted by one: the
    bracket of the two swapped root vectors is odd under the involution.
    """
    r = form.ambient
    s = form.vogan.sigma()
    painted = [i - 1 for i in form.vogan.painted]
    adjacent = [i for i in range(r.rank) if i < s[i] and r.cartan_matrix[i][s[i]] != 0]
    out = {}
    for a in r.roots:
        if theta_on_root(form, a) != a:
            continue
        out[a] = (sum(a[i] for i in painted) + sum(a[i] for i in adjacent)) % 2
    return out


def fundamental_t_rank(form: RealForm) -> int:
    s = form.vogan.sigma()
    return sum(1 for i in range(len(s)) if s[i] >= i)


def cartan_decomp_dims(form: RealForm) -> Tuple[int, int]:
    eps = compactness_grading(form)
    compact = sum(1 for v in eps.values() if v == 0)
    complex_pairs = (len(form.ambient.roots) - len(eps)) // 2
    dim_k = fundamental_t_rank(form) + compact + complex_pairs
    return dim_k, form.dim_g - dim_k


def q0(form: RealForm) -> int:
    _, dim_s = cartan_decomp_dims(form)
    num = dim_s - (form.ambient.rank - form.expected["rank_kC"])
    if num < 0 or num % 2:
        raise ValidationError(f"{form.id}: q0 numerator {num} is not a nonnegative even integer")
    return num // 2


# -- Satake side -------------------------------------------------------------

_RESTRICTED_RE = re.compile(r"(BC|[A-G])(\d+)")


def build_restricted(label: str, simple_mults: Sequence[int], double_mult: int) -> RestrictedRootSystem:
    m = _RESTRICTED_RE.fullmatch(label)
    if not m:
        raise ValidationError(f"cannot parse restricted type {label!r}")
    series, n = m.group(1), int(m.group(2))
    if series == "BC":
        base = build_root_system(CartanType("B", n) if n >= 2 else CartanType("A", 1))
    else:
        base = build_root_system(CartanType(series, n))
    if len(simple_mults) != n:
        raise ValidationError(f"{label}: expected {n} simple multiplicities, got {len(simple_mults)}")
    by_len: Dict[Fraction, int] = {}
    for i, mu in enumerate(simple_mults):
        d = base.symmetrizer[i]
        if by_len.setdefault(d, mu) != mu:
            raise ValidationError(f"{label}: simple roots of equal length carry different multiplicities")
    elements = []
    short = min(base.symmetrizer)
    for r in base.roots:
        elements.append((r, by_len[base.half_length(r)]))
    if series == "BC":
        if double_mult <= 0:
            raise ValidationError(f"{label}: non-reduced type needs a positive double_mult")
        for r in base.roots:
            if base.half_length(r) == short:
                elements.append((tuple(2 * x for x in r), double_mult))
    elif double_mult:
        raise ValidationError(f"{label}: double_mult given for a reduced type")
    elements.sort(key=lambda e: (sum(e[0]), e[0]))
    return RestrictedRootSystem(label, base, tuple(elements), series == "BC")


def restricted_root_system(form: RealForm) -> RestrictedRootSystem:
    if form.is_compact:
        raise CompactFormError(f"{form.id} is compact: no restricted roots")
    s = form.satake
    return build_restricted(s.restricted_type, s.simple_mults, s.double_mult)


def _check_satake(form: RealForm) -> None:
    s = form.satake
    if form.is_compact:
        if s.dim_a0 != 0 or s.dim_m0 != form.dim_g:
            raise ValidationError(f"{form.id}: compact form needs dim_a0 = 0 and dim_m0 = dim_g")
        return
    rs = restricted_root_system(form)
    if rs.rank != s.dim_a0:
        raise ValidationError(f"{form.id}: restricted rank {rs.rank} != dim_a0 {s.dim_a0}")
    total = sum(m for _, m in rs.elements) + s.dim_m0 + s.dim_a0
    if total != form.dim_g:
        raise ValidationError(
            f"{form.id}: Satake dimension identity fails: sum(mult) + dim_m0 + dim_a0 = {total} != dim_g {form.dim_g}")


def validate_form(form: RealForm) -> None:
    r = form.ambient
    dim_gc = len(r.roots) + r.rank
    if form.dim_g != dim_gc:
        raise ValidationError(f"{form.id}: dim_g {form.dim_g} != dim of complex type {dim_gc}")
    _check_vogan(form)
    dim_k, _ = cartan_decomp_dims(form)
    if dim_k != form.expected["dim_k"]:
        raise ValidationError(
            f"{form.id}: dim_k from Vogan grading is {dim_k}, descriptor says {form.expected['dim_k']}")
    if fundamental_t_rank(form) != form.expected["rank_kC"]:
        raise ValidationError(
            f"{form.id}: rank of k from the automorphism is {fundamental_t_rank(form)}, "
            f"descriptor says {form.expected['rank_kC']}")
    _check_satake(form)
    q0(form)


def descriptor_dict(form: RealForm) -> dict:
    s = form.satake
    doc = {
        "schema_version": SCHEMA_VERSION,
        "id": form.id,
        "complex_type": str(form.complex_system.cartan_type),
        "automorphism": list(form.vogan.automorphism),
        "painted": sorted(form.vogan.painted),
        "expected": dict(form.expected),
        "satake": {
            "restricted_type": s.restricted_type,
            "simple_mults": list(s.simple_mults),
            "double_mult": s.double_mult,
            "dim_a0": s.dim_a0,
            "dim_m0": s.dim_m0,
        },
        "literature": {k: v for k, v in (("r_prime", form.literature.r_prime), ("r_g", form.literature.r_g),
                                         ("source", form.literature.source)) if v is not None},
    }
    if form.is_complex:
        doc["complex"] = True
    if form.aliases:
        doc["aliases"] = list(form.aliases)
    return doc
