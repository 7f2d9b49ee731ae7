from fractions import Fraction

import pytest
from hypothesis import given, settings

from beisym.corpus import connected_graphs
from beisym.graphs import make_family, parse_family
from beisym.ideals import edge_ideal
from beisym.invariants import KINDS, primes_of, sp_of
from beisym.lp import UnboundedLP, maximize, min_coord_sum_lp
from beisym.polyhedron import (
    HPolyhedron,
    PolyhedronError,
    build_sp,
    contains,
    denominator_scaling,
    enumerate_vertices,
    format_qvector,
    full_vertices,
    is_vertex,
    lp_min_sum,
    max_vertex_coord_sum,
    min_coord_sum,
    parse_qvector,
    tight_constraint_count,
    vertices_by_tight_sets,
)
from beisym.primes import brute_force_primes

from reference_values import (
    FULL,
    I1234,
    I1234_VERTICES,
    P4_VERTICES,
    PAW_EDGE,
    PAW_GIN_LISTED,
    PAW_GIN_MIRROR,
    q,
)
from strategies import graphs_with_edges, squarefree_ideals


SP_I1234 = build_sp(brute_force_primes(I1234))


def test_build_sp_examples():
    assert build_sp(primes_of(make_family("complete", 2), "edge"), 4).one_facets == ((1,), (2,))
    assert len(SP_I1234.one_facets) == 5
    for n in range(2, 6):
        p = sp_of(make_family("complete", n), "gin")
        full = set(range(1, n + 1))
        assert {f for f in p.one_facets} == {tuple(sorted(full - {u})) for u in full}


def test_hpolyhedron_validation():
    with pytest.raises(PolyhedronError):
        HPolyhedron(2, ((),))
    with pytest.raises(PolyhedronError):
        HPolyhedron(2, ((3,),))
    with pytest.raises(PolyhedronError):
        HPolyhedron(3, ((1,), (1, 2)))
    with pytest.raises(PolyhedronError):
        build_sp([])


def test_contains_examples():
    p = sp_of(make_family("complete", 3), "edge")
    assert contains(p, q(2, 1, 1, 1, 0, 0, 0))
    assert not contains(p, q(2, 1, 1, 0, 0, 0, 0))
    assert contains(p, (1,) * 6)
    assert not contains(p, (2, 2, -1, 0, 0, 0))
    with pytest.raises(PolyhedronError):
        contains(p, (1, 1))


def test_vertices_of_the_small_example():
    assert set(enumerate_vertices(SP_I1234)) == I1234_VERTICES
    assert min_coord_sum(SP_I1234) == 2
    assert max_vertex_coord_sum(SP_I1234) == 3


def test_vertices_of_p4():
    p = sp_of(make_family("path", 4), "gin")
    vs = enumerate_vertices(p)
    assert len(vs) == 11 and set(vs) == P4_VERTICES
    assert max_vertex_coord_sum(p) == 4
    # every vertex sum is at least 2, so the minimum is 2
    assert min_coord_sum(p) == 2 == lp_min_sum(p)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_full_vertices_of_paths(n):
    p = sp_of(make_family("path", n), "gin")
    assert set(full_vertices(p, n)) == FULL[n]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_full_vertices_of_complete_graphs(n):
    p = sp_of(make_family("complete", n), "gin")
    expected = tuple(Fraction(1, n - 1) for _ in range(n)) + (Fraction(0),) * n
    assert full_vertices(p, n) == [expected]
    assert min_coord_sum(p) == Fraction(n, n - 1) == lp_min_sum(p)


def test_vertices_of_the_paw():
    g = make_family("paw")
    assert set(enumerate_vertices(sp_of(g, "edge"))) == PAW_EDGE
    gin = set(enumerate_vertices(sp_of(g, "gin")))
    assert PAW_GIN_LISTED < gin
    assert gin - PAW_GIN_LISTED == {PAW_GIN_MIRROR}
    assert is_vertex(sp_of(g, "gin"), PAW_GIN_MIRROR)


def test_paw_vertex_set_is_closed_under_its_automorphism():
    swap = (0, 2, 1, 3, 4, 6, 5, 7)
    vs = set(enumerate_vertices(sp_of(make_family("paw"), "gin")))
    assert {tuple(a[k] for k in swap) for a in vs} == vs


def test_vertex_sets_of_small_kn():
    assert enumerate_vertices(sp_of(make_family("complete", 2), "gin")) == [q(1, 1, 1, 0, 0)]


def test_tight_constraint_counts():
    p = sp_of(make_family("path", 3), "gin")
    assert tight_constraint_count(p, q(1, 1, 0, 1, 0, 1, 0)) == (6, 6)
    assert tight_constraint_count(p, (2,) * 6) == (0, 0)
    for a in enumerate_vertices(p):
        assert tight_constraint_count(p, a)[1] == p.dim
    with pytest.raises(PolyhedronError):
        tight_constraint_count(p, (0,) * 6)


def check_against_tight_sets(p):
    vs = enumerate_vertices(p)
    assert vs == vertices_by_tight_sets(p)
    assert all(is_vertex(p, a) for a in vs)


@settings(max_examples=40, deadline=None)
@given(squarefree_ideals(max_dim=6))
def test_double_description_matches_tight_sets(ideal):
    check_against_tight_sets(build_sp(brute_force_primes(ideal)))


@pytest.mark.parametrize("kind", KINDS)
def test_double_description_matches_tight_sets_on_graphs(kind):
    for g in connected_graphs(3):
        check_against_tight_sets(sp_of(g, kind))
    for name in ("path:4", "paw"):
        check_against_tight_sets(sp_of(parse_family(name), kind))


def check_lp(p):
    value, point = min_coord_sum_lp(p)
    assert value == min_coord_sum(p)
    assert contains(p, point) and sum(point) == value


@settings(max_examples=60, deadline=None)
@given(squarefree_ideals(max_dim=8))
def test_lp_matches_vertex_minimum(ideal):
    check_lp(build_sp(brute_force_primes(ideal)))


@settings(max_examples=40, deadline=None)
@given(graphs_with_edges(max_n=6))
def test_lp_matches_vertex_minimum_on_graphs(g):
    for kind in KINDS:
        check_lp(sp_of(g, kind))


def test_lp_examples():
    assert lp_min_sum(sp_of(make_family("complete", 3), "gin")) == Fraction(3, 2)
    assert lp_min_sum(sp_of(make_family("complete", 2), "edge")) == 2
    assert lp_min_sum(sp_of(make_family("path", 4), "gin")) == 2


def test_simplex_small_cases():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6
    opt, x, duals = maximize([1, 1], [[1, 2], [3, 1]], [4, 6])
    assert opt == Fraction(14, 5) and x == [Fraction(8, 5), Fraction(6, 5)]
    assert duals == [Fraction(2, 5), Fraction(1, 5)]
    with pytest.raises(UnboundedLP):
        maximize([1, 0], [[0, 1]], [1])
    with pytest.raises(ValueError):
        maximize([1], [[1]], [-1])


def test_qvector_formatting():
    a = q(3, 1, 1, 1, 1, 0, 1, 1, 0)
    assert denominator_scaling(a) == (3, (1, 1, 1, 1, 0, 1, 1, 0))
    assert format_qvector(a) == "1/3*(1,1,1,1,0,1,1,0)"
    assert format_qvector(q(1, 1, 0)) == "(1,0)"
    assert parse_qvector(["1/3", "0", "2"]) == (Fraction(1, 3), Fraction(0), Fraction(2))


@settings(max_examples=30, deadline=None)
@given(graphs_with_edges(max_n=5))
def test_vertex_sums_bracket_the_invariants(g):
    for kind in KINDS:
        p = sp_of(g, kind)
        vs = enumerate_vertices(p)
        assert min_coord_sum(p, vs) <= max_vertex_coord_sum(p, vs)
        assert all(x >= 0 for a in vs for x in a)
        assert set(full_vertices(p, g.n, vs)) <= set(vs)


def test_edge_ideal_polyhedron_lives_in_x_coordinates():
    g = make_family("cycle", 5)
    for a in enumerate_vertices(build_sp(brute_force_primes(edge_ideal(g)), 10)):
        assert all(x == 0 for x in a[5:])
