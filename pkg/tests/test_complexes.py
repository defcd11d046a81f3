"""Simplicial complexes, independence complexes, links, and deletions."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from circshell.complexes import (
    Complex,
    alpha,
    deletion,
    independence_complex,
    link,
)
from circshell.graphs import Graph, complete, cycle, edgeless


def _p4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def graphs_strategy(nmax=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, nmax))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        picked = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph.from_edges(n, picked)

    return build()


# --- construction ----------------------------------------------------------


def test_from_facets_sorts_canonically():
    d = Complex.from_facets(4, [(3, 1), (2, 0)])
    assert d.facets == ((0, 2), (1, 3))
    assert d.dim == 1 and d.is_pure()


def test_from_facets_rejects_containment_unless_maximalize():
    with pytest.raises(ValueError):
        Complex.from_facets(3, [(0,), (0, 1)])
    d = Complex.from_facets(3, [(0,), (0, 1)], maximalize=True)
    assert d.facets == ((0, 1),)


def test_from_facets_validates():
    with pytest.raises(ValueError):
        Complex.from_facets(2, [(0, 2)])
    with pytest.raises(ValueError):
        Complex.from_facets(2, [(0, 0)])


def test_void_and_empty_distinction():
    void = Complex.from_facets(3, [])
    irrelevant = Complex.from_facets(3, [()])
    assert void.is_void and void.dim is None and void.facets == ()
    assert not irrelevant.is_void and irrelevant.dim == -1
    assert irrelevant.facets == ((),)
    assert void.is_pure() and irrelevant.is_pure()
    assert void != irrelevant


def test_f_vector_and_faces():
    d = Complex.from_facets(4, [(0, 1), (1, 2), (3,)])
    # faces: {}, 0, 1, 2, 3, 01, 12
    assert d.f_vector() == {-1: 1, 0: 4, 1: 2}
    assert d.has_face((0, 1)) and d.has_face(()) and not d.has_face((0, 2))
    assert d.vertices() == (0, 1, 2, 3)


def test_json_round_trip():
    d = Complex.from_facets(4, [(1, 3), (0, 2)])
    obj = json.loads(d.to_json())
    assert obj == {"n": 4, "facets": [[0, 2], [1, 3]]}
    assert Complex.from_json(d.to_json()) == d


# --- independence complexes --------------------------------------------------


def test_ind_p4_facets():
    assert independence_complex(_p4()).facets == ((0, 2), (0, 3), (1, 3))


def test_ind_c5_facets():
    d = independence_complex(cycle(5))
    assert d.facets == ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def test_ind_edge_cases():
    # no vertices: the complex whose only face is the empty set
    assert independence_complex(Graph.from_edges(0, [])).facets == ((),)
    # complete graph: vertices only
    assert independence_complex(complete(3)).facets == ((0,), (1,), (2,))
    # edgeless graph: one big simplex
    assert independence_complex(edgeless(3)).facets == ((0, 1, 2),)


@settings(max_examples=200, deadline=None)
@given(graphs_strategy(5))
def test_ind_matches_subset_oracle(g):
    got = {frozenset(f) for f in independence_complex(g).facets}
    assert got == oracles.maximal_independent_sets(g)


def test_ind_matches_subset_oracle_larger():
    # a couple of fixed larger instances past the property-test sizes
    import random
    rng = random.Random(7)
    for n in (8, 10, 12):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        g = Graph.from_edges(n, rng.sample(pairs, len(pairs) // 3))
        got = {frozenset(f) for f in independence_complex(g).facets}
        assert got == oracles.maximal_independent_sets(g)


@settings(max_examples=150, deadline=None)
@given(graphs_strategy(5))
def test_alpha_matches_dim(g):
    d = independence_complex(g)
    assert alpha(g) == oracles.alpha_naive(g)
    assert alpha(g) == (d.dim if d.dim is not None else -1) + 1


# --- purity ------------------------------------------------------------------


def _well_covered_naive(g):
    sets = oracles.maximal_independent_sets(g)
    return len({len(s) for s in sets}) <= 1


def test_purity_equivalence_exhaustive_n4():
    for n in range(0, 5):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for bits in range(1 << len(pairs)):
            g = Graph.from_edges(
                n, [pairs[t] for t in range(len(pairs)) if (bits >> t) & 1])
            assert independence_complex(g).is_pure() == _well_covered_naive(g)


@settings(max_examples=100, deadline=None)
@given(graphs_strategy(5))
def test_purity_equivalence_sampled(g):
    assert independence_complex(g).is_pure() == _well_covered_naive(g)


# --- links and deletions -----------------------------------------------------


def test_link_examples():
    d = independence_complex(cycle(5))
    assert link(d, (0,)).facets == ((2,), (3,))
    assert link(d, ()) == d
    assert link(d, (0, 2)).facets == ((),)


def test_link_rejects_non_face():
    d = independence_complex(cycle(5))
    with pytest.raises(ValueError):
        link(d, (0, 1))


def test_deletion_examples():
    d = independence_complex(cycle(5))
    assert deletion(d, 0).facets == ((1, 3), (1, 4), (2, 4))
    # deleting the only vertex of a point leaves the empty-face complex
    point = Complex.from_facets(1, [(0,)])
    assert deletion(point, 0).facets == ((),)
    with pytest.raises(ValueError):
        deletion(d, 5)


def test_deletion_remaximalizes():
    d = Complex.from_facets(3, [(0, 1), (1, 2)])
    # dropping 2 trims (1,2) to (1,), swallowed by (0,1)
    assert deletion(d, 2).facets == ((0, 1),)
