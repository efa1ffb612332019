import pytest

from knotslope import fixture_corpus, load_fixture

_BY_ID = {e.id: e for e in fixture_corpus()}

#: Smallest colorable positive-genus diagram found by exhaustive search over
#: random arc matchings; used to exercise genus-1 code paths without relying
#: on the transcribed figure fixtures.
TINY_TORUS = """\
surface-diagram v1
knot tiny-torus
genus 1
crossings 3
arc 0 0.0 1.1
arc 1 0.1 1.2
arc 2 0.2 2.3
arc 3 0.3 2.0
arc 4 1.0 2.1
arc 5 1.3 2.2
basepoint 0.0
black-corner 0.0
"""


def corpus_entry(fixture_id):
    return _BY_ID[fixture_id]


def corpus_diagram(fixture_id):
    return load_fixture(_BY_ID[fixture_id])


def planar_entries():
    return [e for e in fixture_corpus() if e.kind == "planar-pd"]


@pytest.fixture
def tiny_torus_text():
    return TINY_TORUS
