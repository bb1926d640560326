"""Riemann-Hurwitz arithmetic and the search for extremal branching signatures.

A signature ``(g'; q_1, ..., q_k)`` describes a regular branched cover
``Sigma_g -> Sigma_g'`` with ``k`` branch points of indices ``q_i``.  Its
orbifold Euler characteristic ``chi = 2 - 2g' - sum(1 - 1/q_i)`` fixes the
group order through ``2 - 2g = |G| * chi``, so the largest possible
``|G| / (2g - 2)`` is ``max(-1/chi)`` over the admissible signatures.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from math import floor

from .errors import GenusOutOfRange


@dataclass(frozen=True, order=True)
class Signature:
    g_prime: int
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.g_prime < 0:
            raise ValueError("quotient genus must be nonnegative")
        if any(q < 1 for q in self.indices):
            raise ValueError("branch indices must be positive")
        # index-1 points are unbranched and contribute nothing
        object.__setattr__(self, "indices", tuple(sorted(q for q in self.indices if q != 1)))

    @property
    def k(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return f"({self.g_prime}; {','.join(map(str, self.indices)) or '-'})"


def orbifold_euler(s: Signature) -> Fraction:
    return 2 - 2 * s.g_prime - sum((1 - Fraction(1, q) for q in s.indices), Fraction(0))


def rh_genus(order: int, s: Signature) -> Fraction:
    """Genus of the covering surface; integrality is left to the caller."""
    return 1 - order * orbifold_euler(s) / 2


class Mode(str, Enum):
    EXCLUDE_SMALL_SPHERICAL = "exclude-small-spherical"  # g' >= 1, or g' = 0 with k >= 4
    GENUS_ONE_ONLY = "genus-one"  # g' = 1, k >= 1
    UNRESTRICTED_HYPERBOLIC = "hyperbolic"  # every signature with chi < 0 (self-test)


def admissible(s: Signature, mode: Mode) -> bool:
    if orbifold_euler(s) >= 0:
        return False
    if mode is Mode.EXCLUDE_SMALL_SPHERICAL:
        return s.g_prime >= 1 or s.k >= 4
    if mode is Mode.GENUS_ONE_ONLY:
        return s.g_prime == 1 and s.k >= 1
    return True


def _min_k(g_prime: int, mode: Mode) -> int:
    if mode is Mode.EXCLUDE_SMALL_SPHERICAL and g_prime == 0:
        return 4
    if mode is Mode.GENUS_ONE_ONLY:
        return 1
    return 0


@dataclass(frozen=True)
class BoundResult:
    mode: Mode
    multiplier: Fraction
    extremal_signatures: tuple[Signature, ...]

    def __str__(self) -> str:
        sigs = ", ".join(map(str, self.extremal_signatures))
        return f"multiplier {self.multiplier}, {sigs}"


class _Incumbent:
    def __init__(self):
        self.best = Fraction(0)
        self.sigs: list[Signature] = []

    def offer(self, s: Signature) -> None:
        value = -1 / orbifold_euler(s)
        if value > self.best:
            self.best, self.sigs = value, [s]
        elif value == self.best and s not in self.sigs:
            self.sigs.append(s)


def _seed(mode: Mode, inc: _Incumbent) -> None:
    # a small bounded scan gives an incumbent good enough for the pruning to terminate
    genera = (1,) if mode is Mode.GENUS_ONE_ONLY else (0, 1, 2)
    for gp in genera:
        for k in range(0, 6):
            for qs in combinations_with_replacement(range(2, 9), k):
                s = Signature(gp, qs)
                if admissible(s, mode):
                    inc.offer(s)


def enumerate_extremal(mode: Mode | str = Mode.EXCLUDE_SMALL_SPHERICAL) -> BoundResult:
    """Exact maximum of ``-1/chi`` over admissible signatures, with every maximiser.

    Branch indices are generated in ascending order.  Once a prefix is itself
    admissible, any longer signature or larger last index has strictly smaller
    ``chi`` and is skipped; otherwise an index ``q`` is abandoned as soon as
    every completion (further indices are ``>= q``, each costing at least
    ``1 - 1/q``) falls below the incumbent.
    """
    mode = Mode(mode)
    inc = _Incumbent()
    _seed(mode, inc)
    if inc.best <= 1:
        raise RuntimeError("seed incumbent too weak for pruning")

    def dfs(gp: int, prefix: list[int], P: Fraction, k_min: int) -> None:
        c = 2 - 2 * gp
        q = prefix[-1] if prefix else 2
        while True:
            slack = c - P - 1  # completion value as the next index grows without bound
            extra = max(k_min - len(prefix) - 1, floor(slack) + 1 if slack >= 0 else 0)
            if c - P - (1 + extra) * (1 - Fraction(1, q)) < -1 / inc.best:
                return
            newP = P + 1 - Fraction(1, q)
            s = Signature(gp, (*prefix, q))
            if len(prefix) + 1 >= k_min and c - newP < 0:
                inc.offer(s)
                return
            dfs(gp, prefix + [q], newP, k_min)
            q += 1

    def run(gp: int) -> None:
        k_min = _min_k(gp, mode)
        empty = Signature(gp)
        if k_min == 0 and admissible(empty, mode):
            inc.offer(empty)
        else:
            dfs(gp, [], Fraction(0), k_min)

    if mode is Mode.GENUS_ONE_ONLY:
        run(1)
    else:
        gp = 0
        # k = 0 already gives chi = 2 - 2g', which bounds the useful g'
        while gp <= 1 + 1 / (2 * inc.best):
            run(gp)
            gp += 1
    return BoundResult(mode, inc.best, tuple(sorted(inc.sigs)))


class Surface(str, Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"


@dataclass(frozen=True)
class BoundTable:
    g: int
    surface: Surface
    rows: tuple[tuple[str, int], ...]

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.rows)


def bound_table(g: int, surface: Surface | str = Surface.ORIENTABLE) -> BoundTable:
    """Upper bounds on extendable group orders for a genus-``g`` surface in the 3-torus.

    Superscript ``+`` restricts to maps preserving the orientation of the torus,
    subscript ``+`` to those preserving the orientation of the surface.
    """
    surface = Surface(surface)
    if surface is Surface.ORIENTABLE:
        if g < 2:
            raise GenusOutOfRange(f"orientable bounds need g ≥ 2, got {g}")
        h = g - 1
        rows = (("E^+_+", 12 * h), ("E_+", 24 * h), ("E^+", 24 * h), ("E", 48 * h))
    else:
        if g < 3:
            raise GenusOutOfRange(f"non-orientable bounds need g ≥ 3, got {g}")
        h = g - 2
        rows = (("E^+", 12 * h), ("E", 24 * h))
    return BoundTable(g, surface, rows)
