"""Subalgebra embeddings, induction, exact Borel checks, dualities."""

import pytest

from stratakit import homology, reps, strat, tilting
from stratakit.borel import (Embedding, check_embedding, duality_check,
                             find_duality, induce, is_exact_borel,
                             right_module_structure, twisted_dual,
                             verify_gldim_doubling,
                             verify_lemma_induction_bounds)
from stratakit.errors import (IdempotentMismatch, NotAntiAutomorphism,
                              NotInjective, NotMultiplicative)
from stratakit.fields import QQ
from stratakit.quiver import QuiverSpec, build_algebra

from conftest import algebra, algebra_file


def _borel_embedding():
    b, a = algebra("borelB"), algebra("borelA")
    images = {name: [(c, tuple(p)) for (c, p) in terms]
              for name, terms in algebra_file("borelB").embedding.items()}
    return check_embedding(Embedding(b, a, images))


def test_embedding_verifies():
    e = _borel_embedding()
    # the composite arrow image: dbeta lands on the basis path "delta then beta"
    a = e.a
    img = e.arrow_imgs[e.b.arrow_index("dbeta")]
    nonzero = [i for i, c in enumerate(img) if not a.field.is_zero(c)]
    assert len(nonzero) == 1
    d, bt = a.arrow_index("delta"), a.arrow_index("beta")
    assert a.basis[nonzero[0]].arrs == (d, bt)


def test_right_module_is_projective_over_b():
    e = _borel_embedding()
    right = right_module_structure(e)
    assert right.total_dim == e.a.dim
    bop = e.b.opposite()
    projs = [reps.projective(bop, i) for i in range(bop.n)]
    for part, _ in reps.decompose(right):
        assert any(reps.is_isomorphic(part, p) for p in projs)


def test_induce_simples_to_standards():
    e = _borel_embedding()
    b, a = e.b, e.a
    # the standard B-modules are simple here, and induce to the standard
    # A-modules
    for i in range(b.n):
        assert reps.is_isomorphic(strat.standard(b, i), reps.simple(b, i))
        ind = induce(e, reps.simple(b, i))
        assert reps.is_isomorphic(ind, strat.standard(a, i))


def test_induce_projective_is_projective():
    e = _borel_embedding()
    for i in range(e.b.n):
        ind = induce(e, reps.projective(e.b, i))
        assert reps.is_isomorphic(ind, reps.projective(e.a, i))


def test_is_exact_borel():
    e = _borel_embedding()
    report = is_exact_borel(e)
    assert report.verdict
    assert [name for name, ok, _ in report.clauses] == \
        ["same_simples", "right_projective", "standards_induce"]
    assert all(ok for _, ok, _ in report.clauses)


def test_induction_does_not_raise_proj_dim():
    e = _borel_embedding()
    ok, entries = verify_lemma_induction_bounds(e)
    assert ok
    assert all(flag for _, _, _, flag in entries)


def test_gldim_doubling_with_equality():
    e = _borel_embedding()
    bound_ok, equality, ga, gb = verify_gldim_doubling(e)
    assert bound_ok and equality
    assert (ga, gb) == (4, 2)


def test_directed_algebra_filtration_dimension_equals_gldim():
    # all standard modules of borelB are simple, so every module is
    # Delta-filtered and the filtration dimensions collapse to gl.dim
    b = algebra("borelB")
    g = tilting.gfd_algebra(b)
    assert g.pd_t == int(homology.global_dim(b)) == 2
    assert g.probe_sup_attained


def test_vertex_count_mismatch_rejected():
    with pytest.raises(IdempotentMismatch):
        Embedding(algebra("a2"), algebra("a3line"), {"a": [(1, ("a",))]})


def test_non_multiplicative_embedding_rejected():
    # x^2 = 0 cannot map to y with y^2 != 0
    b = build_algebra(QuiverSpec(["1"], [("x", "1", "1")],
                                 [[(1, ("x", "x"))]], QQ))
    a = build_algebra(QuiverSpec(["1"], [("y", "1", "1")],
                                 [[(1, ("y", "y", "y"))]], QQ))
    with pytest.raises(NotMultiplicative):
        check_embedding(Embedding(b, a, {"x": [(1, ("y",))]}))


def test_non_injective_embedding_rejected():
    b = algebra("a2")
    a = algebra("semisimple2")
    with pytest.raises(NotInjective):
        check_embedding(Embedding(b, a, {"a": []}))


def test_borelA_duality():
    a = algebra("borelA")
    sigma = algebra_file("borelA").duality
    sigma_idx, clauses = duality_check(a, sigma)
    names = [n for n, _ in clauses]
    assert names == ["fixes_simples", "delta_to_nabla", "fixes_tilting"]
    assert all(flag for _, flag in clauses)
    # the duality swaps projectives and injectives
    for i in range(a.n):
        assert reps.is_isomorphic(
            twisted_dual(a, sigma_idx, reps.projective(a, i)),
            reps.injective(a, i))


def test_loop2_duality():
    a = algebra("loop2")
    _, clauses = duality_check(a, algebra_file("loop2").duality)
    assert all(flag for _, flag in clauses)


def test_bad_involution_rejected():
    a = algebra("borelA")
    with pytest.raises(NotAntiAutomorphism):
        duality_check(a, {"alpha": "beta", "beta": "alpha",
                          "gamma": "gamma", "delta": "delta"})


def test_a3line_has_no_duality():
    # both arrows point away from/to distinct vertices; no involution reverses
    # the quiver
    assert find_duality(algebra("a3line")) is None


def test_find_duality_recovers_borelA():
    found = find_duality(algebra("borelA"))
    assert found is not None
    sigma, clauses = found
    assert sigma["alpha"] == "beta" and sigma["gamma"] == "delta"
    assert all(flag for _, flag in clauses)
