from knotslope import (
    is_alternating,
    primality_check,
    reduced_check,
    validate_ga,
)

from conftest import corpus_diagram


def test_trefoil_is_generalised_alternating():
    v = validate_ga(corpus_diagram("trefoil-planar"))
    assert v.alternating and v.cellular and v.prime and v.reduced
    assert v.overall


def test_connected_sum_fails_primality():
    d = corpus_diagram("granny-planar")
    assert not primality_check(d)
    v = validate_ga(d)
    assert v.alternating and not v.prime and not v.overall


def test_kinked_trefoil_fails_reduced_check():
    d = corpus_diagram("trefoil-kinked")
    assert not reduced_check(d)
    assert not validate_ga(d).reduced


def test_non_alternating_diagram_fails_overall():
    d = corpus_diagram("10_161-planar")
    assert not is_alternating(d)
    v = validate_ga(d)
    assert not v.alternating
    assert v.prime and v.reduced  # fails for exactly one reason
    assert not v.overall


def test_alternating_planar_fixtures_validate():
    for fid in ("figure8-planar", "8_17-planar", "12a603-planar"):
        assert validate_ga(corpus_diagram(fid)).overall
