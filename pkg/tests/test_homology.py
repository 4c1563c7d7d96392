"""Projective resolutions, Ext, extensions."""

import pytest

from stratakit import homology, reps
from stratakit.errors import NothingToExtend
from stratakit.homology import (LowerBound, ext1_classes, ext_dim, global_dim,
                                inj_dim, injective_hull, min_proj_resolution,
                                proj_dim, projective_cover, universal_extension)
from stratakit.reps import (injective, is_isomorphic, projective,
                            regular_module, simple)

from conftest import algebra


def test_global_dimensions_of_corpus():
    assert global_dim(algebra("point")) == 0
    assert global_dim(algebra("semisimple2")) == 0
    assert global_dim(algebra("a2")) == 1
    assert global_dim(algebra("a3line")) == 1
    assert global_dim(algebra("borelB")) == 2
    assert global_dim(algebra("borelA")) == 4


def test_loop2_has_infinite_global_dimension():
    gl = global_dim(algebra("loop2"), cap=12)
    assert isinstance(gl, LowerBound)
    assert gl >= 12


def test_projective_cover_is_minimal_surjection():
    a = algebra("borelA")
    for i in range(a.n):
        m = simple(a, i)
        cover = projective_cover(m)
        assert cover.is_surjective()
        assert is_isomorphic(cover.source, projective(a, i))


def test_resolution_is_a_complex_and_minimal():
    a = algebra("borelA")
    res = min_proj_resolution(simple(a, 0), cap=10)
    assert res.composes_to_zero()
    assert res.is_minimal()


def test_proj_dim_of_projective_is_zero():
    a = algebra("borelA")
    for i in range(a.n):
        assert proj_dim(projective(a, i)) == 0
        assert inj_dim(injective(a, i)) == 0


def test_loop2_ext_is_periodic():
    a = algebra("loop2")
    e = simple(a, 0)
    for i in range(6):
        assert ext_dim(i, e, e, cap=10) == 1


def test_ext_zero_is_hom():
    a = algebra("a3line")
    for i in range(a.n):
        for j in range(a.n):
            assert (ext_dim(0, projective(a, i), projective(a, j))
                    == reps.hom_dim(projective(a, i), projective(a, j)))


def test_ext_one_counts_arrows_between_simples():
    # dim Ext^1(E(i), E(j)) = number of arrows i -> j for any bound quiver
    for name in ("a3line", "borelA", "loop2"):
        a = algebra(name)
        counts = {}
        for (_, s, t) in a.arrows:
            counts[(s, t)] = counts.get((s, t), 0) + 1
        for i in range(a.n):
            for j in range(a.n):
                assert (ext_dim(1, simple(a, i), simple(a, j))
                        == counts.get((i, j), 0)), (name, i, j)


def test_ext1_classes_are_nonsplit_extensions():
    a = algebra("a2")                   # one arrow 1 -> 2
    e1, e2 = simple(a, 0), simple(a, 1)
    classes = ext1_classes(e1, e2)
    assert len(classes) == 1
    ext = classes[0]
    assert ext.is_exact()
    assert not ext.splits()
    assert ext.incl.target.dims == (1, 1)


def test_injective_hull_of_simple():
    a = algebra("a3line")
    for i in range(a.n):
        m = simple(a, i)
        emb = injective_hull(m)
        assert emb.is_injective()
        assert is_isomorphic(emb.target, injective(a, i))


def test_universal_extension_kills_ext1():
    a = algebra("a3line")
    e1, e2 = simple(a, 0), simple(a, 1)
    assert ext_dim(1, e2, e1) == 1
    middle, incl, _ = universal_extension(e2, e1)
    assert incl.is_injective()
    assert ext_dim(1, middle, e1) == 0


def test_universal_extension_requires_ext():
    a = algebra("a3line")
    with pytest.raises(NothingToExtend):
        universal_extension(simple(a, 0), simple(a, 1))


def test_resolution_cache_is_shared():
    a = algebra("borelA")
    m = simple(a, 2)
    r1 = min_proj_resolution(m, cap=6)
    r2 = min_proj_resolution(m, cap=6)
    assert r1 is r2
