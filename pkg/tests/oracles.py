"""Independent reference computations used by the tests.

None of these reuse the package's own normal forms or search pruning: lattice
indices come from sympy's Smith form, coset counts from brute-force integer
point classification, lift counts from flood fill on a finite patch of the
infinite graph, and extremal signatures from an unpruned scan.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement, product

import networkx as nx
import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form


def relation_matrix(sub, sup) -> sympy.Matrix:
    """Columns: generators of ``sub`` in coordinates of the basis of ``sup``."""
    Bsup = sympy.Matrix(3, 3, lambda i, j: sympy.Rational(str(sup.basis.rows[i][j])))
    cols = []
    for g in sub.generators:
        v = Bsup.solve(sympy.Matrix([sympy.Rational(str(c)) for c in g]))
        cols.append(v)
    M = sympy.Matrix.hstack(*cols)
    assert all(x.is_integer for x in M), "not a sublattice"
    return M


def snf_index(sub, sup) -> int:
    D = smith_normal_form(relation_matrix(sub, sup), domain=sympy.ZZ)
    return abs(int(math.prod(D[i, i] for i in range(3))))


def brute_force_coset_count(sub, sup) -> int:
    """Classify every integer point of ``[0, d)^3`` (sup coordinates) modulo ``sub``.

    ``d = det`` of the relation matrix ``M``, so ``d Z^3`` lies in ``sub`` and the
    box meets every coset; two points are congruent iff ``adj(M) (p - q)`` is
    divisible by ``d``.
    """
    M = relation_matrix(sub, sup)
    d = abs(int(M.det()))
    adj = np.array(M.adjugate().tolist(), dtype=np.int64)
    pts = np.array(list(product(range(d), repeat=3)), dtype=np.int64)
    keys = (pts @ adj.T) % d
    return len({tuple(k) for k in keys})


def lift_count_by_flood_fill(graph, radius: int = 2) -> float:
    """Number of connected components of the infinite periodic graph.

    The motif is laid out over the ``(2r+1)^3`` block of base cells; for each
    vertex in the central cell, differences between copies of one motif vertex
    lying in the same patch component generate the component's stabiliser.  Components related
    by base translations are grouped, and each group contributes
    ``[base : stabiliser]`` (infinite when the stabiliser has rank < 3).
    """
    cells = list(product(range(-radius, radius + 1), repeat=3))
    G = nx.Graph()
    for k in cells:
        for i in range(len(graph.vertices)):
            G.add_node((i, k))
    for i, j, s in graph.edges:
        for k in cells:
            k2 = tuple(a + b for a, b in zip(k, s))
            if all(-radius <= c <= radius for c in k2):
                G.add_edge((i, k), (j, k2))
    comp = {}
    for c, nodes in enumerate(nx.connected_components(G)):
        for v in nodes:
            comp[v] = c
    origin = (0, 0, 0)
    seen_groups: list[set[int]] = []  # base-orbits of components already counted
    total = 0
    for i in range(len(graph.vertices)):
        x = (i, origin)
        if any(comp[x] in grp for grp in seen_groups):
            continue
        stab = []
        for j in range(len(graph.vertices)):
            hits = [k for k in cells if comp[(j, k)] == comp[x]]
            stab.extend(tuple(a - b for a, b in zip(k, hits[0])) for k in hits[1:])
        # every other central vertex whose component is a translate of x's
        related = set()
        for j in range(len(graph.vertices)):
            for k in cells:
                if comp[(j, k)] == comp[x]:
                    related.add(comp[(j, origin)])
        seen_groups.append(related | {comp[x]})
        rank = sympy.Matrix(stab).rank() if stab else 0
        if rank < 3:
            return math.inf
        H = sympy.Matrix(stab).T
        D = smith_normal_form(H, domain=sympy.ZZ)
        total += abs(int(math.prod(D[r, r] for r in range(3))))
    return total


# --- Riemann-Hurwitz brute force ------------------------------------------------

def _suffix_table(length: int, lo: int, qmax: int):
    tuples = np.array(list(combinations_with_replacement(range(lo, qmax + 1), length)), dtype=np.int64)
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64), np.zeros(1)
    return tuples, (1.0 / tuples).sum(axis=1)


def brute_force_extremal(admissible, gmax: int = 2, kmax: int = 6, qmax: int = 50):
    """Unpruned scan of all ``(g'; q_1 <= ... <= q_k)`` in the box; exact maximiser set.

    ``admissible(g', k)`` is the mode's side condition (``chi < 0`` is imposed
    here).  Floats locate the near-optimal candidates, which are then compared
    in exact arithmetic.
    """
    best_float = -math.inf  # maximum of chi over chi < 0, i.e. minimum |chi|
    candidates = []
    tables = {}
    for gp in range(gmax + 1):
        for k in range(kmax + 1):
            if not admissible(gp, k):
                continue
            pre_len = max(0, k - 4)
            suf_len = k - pre_len
            prefixes = combinations_with_replacement(range(2, qmax + 1), pre_len)
            for pre in prefixes:
                lo = pre[-1] if pre else 2
                key = (suf_len, lo)
                if key not in tables:
                    tables[key] = _suffix_table(suf_len, lo, qmax)
                tuples, inv = tables[key]
                chi = 2 - 2 * gp - k + sum(1.0 / q for q in pre) + inv
                neg = chi < -1e-12
                if not neg.any():
                    continue
                top = chi[neg].max()
                if top > best_float + 1e-9:
                    best_float = top
                    candidates = []
                if top >= best_float - 1e-9:
                    idx = np.nonzero(neg & (chi >= best_float - 1e-9))[0]
                    candidates.extend((gp, pre + tuple(int(q) for q in tuples[r])) for r in idx)
    exact = [(2 - 2 * gp - sum(1 - Fraction(1, q) for q in qs), gp, qs) for gp, qs in candidates]
    exact = [e for e in exact if e[0] < 0]
    chi_best = max(e[0] for e in exact)
    winners = sorted({(gp, qs) for chi, gp, qs in exact if chi == chi_best})
    return -1 / chi_best, winners
