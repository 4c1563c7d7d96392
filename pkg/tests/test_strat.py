"""Standard-module families, filtration certificates, classification."""

import pytest

from stratakit import reps, strat
from stratakit.reps import is_isomorphic, projective, regular_module, simple
from stratakit.strat import (classify, costandard, filtration_certificate,
                             in_F_delta_by_ext, in_F_nabla_bar_by_ext,
                             in_filtration_class, proper_costandard,
                             proper_standard, standard, standard_family)

from conftest import algebra

CORPUS = ["point", "semisimple2", "a2", "a3line", "loop2", "borelA", "borelB"]


def test_a3line_standard_dims():
    a = algebra("a3line")
    assert [standard(a, i).dims for i in range(3)] == \
        [(1, 0, 0), (1, 1, 0), (0, 0, 1)]
    # quasi-hereditary: proper standard modules coincide with standard ones
    for i in range(3):
        assert is_isomorphic(standard(a, i), proper_standard(a, i))


@pytest.mark.parametrize("name", CORPUS)
def test_top_standard_module_is_projective(name):
    a = algebra(name)
    top = a.n - 1
    assert is_isomorphic(standard(a, top), projective(a, top))


@pytest.mark.parametrize("name", CORPUS)
def test_standard_has_simple_top(name):
    a = algebra(name)
    for i in range(a.n):
        assert is_isomorphic(reps.top(standard(a, i)), simple(a, i))
        assert is_isomorphic(reps.top(proper_standard(a, i)), simple(a, i))


@pytest.mark.parametrize("name", CORPUS)
def test_costandard_has_simple_socle(name):
    a = algebra(name)
    for i in range(a.n):
        soc, _ = reps.socle_submodule(costandard(a, i)).as_rep()
        assert is_isomorphic(soc, simple(a, i))
        soc, _ = reps.socle_submodule(proper_costandard(a, i)).as_rep()
        assert is_isomorphic(soc, simple(a, i))


def test_loop2_standard_is_projective_proper_is_simple():
    a = algebra("loop2")
    assert is_isomorphic(standard(a, 0), projective(a, 0))
    assert is_isomorphic(proper_standard(a, 0), simple(a, 0))


@pytest.mark.parametrize("name,kind", [
    ("point", "quasi-hereditary"),
    ("semisimple2", "quasi-hereditary"),
    ("a2", "quasi-hereditary"),
    ("a3line", "quasi-hereditary"),
    ("borelA", "quasi-hereditary"),
    ("borelB", "quasi-hereditary"),
    ("loop2", "properly stratified"),
])
def test_classification(name, kind):
    cls = classify(algebra(name))
    assert cls.kind() == kind


def test_loop2_not_quasi_hereditary():
    cls = classify(algebra("loop2"))
    assert cls.properly_stratified
    assert not cls.quasi_hereditary


@pytest.mark.parametrize("name", CORPUS)
def test_regular_module_delta_certificate_verifies(name):
    a = algebra(name)
    family = standard_family(a)
    cert = filtration_certificate(regular_module(a), family)
    assert cert is not None
    assert cert.verify(family)
    # total dimension is conserved by the filtration factors
    assert sum(family[i].total_dim for i in cert.factor_indices) == a.dim


def test_infeasible_dimension_vector_has_no_certificate():
    a = algebra("a3line")
    assert filtration_certificate(simple(a, 1), standard_family(a)) is None
    assert not in_filtration_class(simple(a, 1), standard_family(a))


def test_standard_modules_are_trivially_filtered():
    a = algebra("borelA")
    family = standard_family(a)
    for i in range(a.n):
        cert = filtration_certificate(family[i], family)
        assert cert is not None and cert.factor_indices == [i]


def test_certificate_matches_ext_criterion_spot_checks():
    a = algebra("a3line")
    for m in (regular_module(a), simple(a, 0), simple(a, 1), simple(a, 2),
              projective(a, 1)):
        assert in_filtration_class(m, standard_family(a)) == \
            in_F_delta_by_ext(m)
        assert in_filtration_class(m, strat.proper_costandard_family(a)) == \
            in_F_nabla_bar_by_ext(m)


def test_certificate_layers_are_a_chain():
    a = algebra("borelA")
    family = standard_family(a)
    cert = filtration_certificate(regular_module(a), family)
    dims = [sum(b.cols for b in layer) for layer in cert.layers]
    assert dims[0] == 0 and dims[-1] == a.dim
    assert all(x < y for x, y in zip(dims, dims[1:]))
