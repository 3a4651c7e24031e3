import pytest

from coho.cartans import (COMPACT, NONCOMPACT, REAL, CayleyError, adapted_cartan, cayley_transform,
                          enumerate_cartans, fundamental_cartan, maximally_split, split_data)
from coho.rootsys import ParabolicSubset


# classical counts of conjugacy classes of Cartan subalgebras
@pytest.mark.parametrize("name,count", [("sl(2,R)", 2), ("sl(3,R)", 2), ("sl(4,R)", 3), ("sl(5,R)", 3),
                                        ("sl(6,R)", 4), ("su(2,1)", 2), ("su(2,2)", 3), ("su(3,2)", 3),
                                        ("so(3,2)", 4), ("G", 4)])
def test_cartan_class_count(form, name, count):
    assert len(enumerate_cartans(form(name))) == count


def test_sl2_cayley(form):
    c = fundamental_cartan(form("sl(2,R)"))
    assert c.classify((1,)) == NONCOMPACT
    d = cayley_transform(c, (1,))
    assert d.classify((1,)) == REAL
    assert d.dims == (0, 1)


def test_cayley_needs_noncompact_imaginary(form):
    c = fundamental_cartan(form("su(2,1)"))
    compact = [a for a in c.system.roots if c.classify(a) == COMPACT]
    assert compact
    with pytest.raises(CayleyError):
        cayley_transform(c, compact[0])


def test_dim_k_constant_along_cayley_closure(catalog):
    for f in catalog:
        if f.satake.dim_a0 > 2 or f.is_compact:
            continue
        for c in enumerate_cartans(f):
            assert c.dim_k() == f.expected["dim_k"], (f.id, c.provenance)


def test_split_data_matches_satake(catalog):
    # the whole catalog runs in the acceptance suite
    for f in catalog:
        if f.is_compact or f.satake.dim_a0 > 3:
            continue
        sd = split_data(f)
        assert sd.dim_a0 == f.satake.dim_a0
        assert sd.dim_m0 == f.satake.dim_m0


@pytest.mark.parametrize("name,s,dims", [
    ("sl(3,R)", [], {"c": 0, "a": 2, "c_prime": 0, "a_prime": 0}),
    ("sl(3,R)", [1], {"c": 0, "a": 1, "c_prime": 1, "a_prime": 0}),
    ("su(2,1)", [], {"c": 1, "a": 1, "c_prime": 0, "a_prime": 0}),
])
def test_adapted_cartan_shapes(form, name, s, dims):
    ac = adapted_cartan(form(name), ParabolicSubset(s))
    assert {k: len(v) for k, v in ac.split.items()} == dims


def test_adapted_nilradical_is_theta_opposite(form):
    ac = adapted_cartan(form("sl(4,R)"), ParabolicSubset([1, 3]))
    nil = set(ac.nil_roots)
    assert {tuple(-x for x in ac.base.act(a)) for a in nil} == nil


def test_maximally_split_has_no_noncompact_imaginary(catalog):
    for f in catalog:
        if f.satake.dim_a0 > 3:
            continue
        c = maximally_split(f)
        assert not c.roots_of(NONCOMPACT)
