"""Symbolic polyhedra, Waldschmidt constants and asymptotic regularity for
monomial ideals attached to graphs: the edge ideal, and the generic and lex
initial ideals of the binomial edge ideal."""

from .graphs import Graph, make_family, parse_edge_list, parse_family, parse_graph6, to_graph6
from .ideals import Monomial, MonomialIdeal, PrimeSupport, edge_ideal, gin_ideal, inid_ideal, minimalize, symbolic_power
from .invariants import areg, invariant_report, verify_theorem, waldschmidt
from .polyhedron import HPolyhedron, build_sp, enumerate_vertices, full_vertices
from .primes import brute_force_primes, edge_ideal_primes, gin_primes, inid_primes, minimal_primes

__all__ = [
    "Graph",
    "HPolyhedron",
    "Monomial",
    "MonomialIdeal",
    "PrimeSupport",
    "areg",
    "brute_force_primes",
    "build_sp",
    "edge_ideal",
    "edge_ideal_primes",
    "enumerate_vertices",
    "full_vertices",
    "gin_ideal",
    "gin_primes",
    "inid_ideal",
    "inid_primes",
    "invariant_report",
    "make_family",
    "minimal_primes",
    "minimalize",
    "parse_edge_list",
    "parse_family",
    "parse_graph6",
    "symbolic_power",
    "to_graph6",
    "verify_theorem",
    "waldschmidt",
]
