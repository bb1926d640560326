"""Exact rational 3-vectors, 3x3 matrices and rank-3 lattices.

Every coordinate is a :class:`fractions.Fraction` expressed in the basis of a
declared ambient lattice (the cubic integer lattice, or the hexagonal lattice
spanned by ``t_x, t_omega, t_z``).  Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from math import floor, gcd
from typing import Iterable, Sequence

from .errors import NotASublattice

Rat = Fraction

__all__ = [
    "Rat",
    "Vec3",
    "Mat3",
    "Lattice",
    "ZERO",
    "IDENTITY",
    "lattice_contains",
    "is_sublattice",
    "lattice_index",
    "coset_representatives",
    "reduce_mod",
    "integer_row_echelon",
    "lcm",
]


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Vec3(tuple):
    """Immutable exact 3-vector."""

    __slots__ = ()

    def __new__(cls, coords: Iterable = (0, 0, 0)):
        vals = tuple(_rat(c) for c in coords)
        if len(vals) != 3:
            raise ValueError(f"Vec3 needs 3 coordinates, got {len(vals)}")
        return super().__new__(cls, vals)

    @classmethod
    def of(cls, x, y, z) -> "Vec3":
        return cls((x, y, z))

    def __add__(self, other) -> "Vec3":
        return Vec3((self[0] + other[0], self[1] + other[1], self[2] + other[2]))

    def __sub__(self, other) -> "Vec3":
        return Vec3((self[0] - other[0], self[1] - other[1], self[2] - other[2]))

    def __neg__(self) -> "Vec3":
        return Vec3((-self[0], -self[1], -self[2]))

    def __mul__(self, k) -> "Vec3":
        return Vec3((self[0] * k, self[1] * k, self[2] * k))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def to_ints(self) -> tuple[int, int, int]:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return tuple(int(c) for c in self)

    def floor(self) -> "Vec3":
        return Vec3(floor(c) for c in self)

    def __repr__(self) -> str:
        return "Vec3(" + ", ".join(str(c) for c in self) + ")"


ZERO = Vec3()


class Mat3:
    """Exact 3x3 matrix.

    Stored row-wise, but the *meaning* is column-major: column ``k`` is the
    image of the ``k``-th basis vector.
    """

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_rat(a) for a in r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs a 3x3 array")
        self.rows = rows
        self._hash = None

    @classmethod
    def from_columns(cls, *cols: Sequence) -> "Mat3":
        return cls([[cols[j][i] for j in range(3)] for i in range(3)])

    @classmethod
    def diag(cls, a, b, c) -> "Mat3":
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def identity(cls) -> "Mat3":
        return cls.diag(1, 1, 1)

    def col(self, k: int) -> Vec3:
        return Vec3(r[k] for r in self.rows)

    @property
    def columns(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.col(0), self.col(1), self.col(2))

    def transpose(self) -> "Mat3":
        return Mat3(list(zip(*self.rows)))

    def __matmul__(self, other):
        if isinstance(other, Mat3):
            cols = list(zip(*other.rows))
            return Mat3([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        return Vec3(sum(a * b for a, b in zip(r, other)) for r in self.rows)

    def __mul__(self, k) -> "Mat3":
        return Mat3([[a * k for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __neg__(self) -> "Mat3":
        return self * -1

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat3) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def det(self) -> Fraction:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def inverse(self) -> "Mat3":
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        adj = [
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ]
        return Mat3([[x / det for x in r] for r in adj])

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self.rows for a in r)

    def to_ints(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_integral():
            raise ValueError("matrix is not integral")
        return tuple(tuple(int(a) for a in r) for r in self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Mat3[{body}]"


IDENTITY = Mat3.identity()


def integer_row_echelon(rows: Iterable[Sequence[int]]) -> list[tuple[int, int, int]]:
    """Lower-triangular Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero basis rows ordered by pivot column from the *last*
    coordinate backwards, so a full-rank result looks like::

        (d1, 0, 0)
        (a, d2, 0)
        (b, c, d3)

    with ``d_k > 0`` and off-diagonal entries reduced into ``[0, d)`` of the
    pivot to their left.  The number of rows returned is the rank.
    """
    work = [list(r) for r in rows if any(r)]
    basis: dict[int, list[int]] = {}
    for col in (2, 1, 0):
        active = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            pivot = active[0]
            nxt = [pivot]
            for r in active[1:]:
                q = r[col] // pivot[col]
                r = [x - q * y for x, y in zip(r, pivot)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        if active:
            p = active[0]
            if p[col] < 0:
                p = [-x for x in p]
            basis[col] = p
        work = rest
    # reduce entries left of each pivot by the pivots already placed
    for col in (1, 2):
        if col not in basis:
            continue
        row = basis[col]
        for left in range(col - 1, -1, -1):
            if left in basis:
                q = row[left] // basis[left][left]
                row = [x - q * y for x, y in zip(row, basis[left])]
        basis[col] = row
    return [tuple(basis[c]) for c in sorted(basis)]


class Lattice:
    """Rank-3 translation lattice.

    The basis is normalised on construction (lower-triangular Hermite form of
    the generators, scaled back to rationals), so two ``Lattice`` objects are
    equal exactly when they describe the same set of translations, and
    ``reduce_mod`` is canonical per lattice.
    """

    __slots__ = ("basis", "_inv", "_rows", "_hash")

    def __init__(self, generators: Iterable[Sequence] | Mat3):
        if isinstance(generators, Mat3):
            gens = list(generators.columns)
        else:
            gens = [Vec3(g) for g in generators]
        if not gens:
            raise ValueError("a lattice needs generators")
        den = lcm(*(c.denominator for g in gens for c in g))
        rows = integer_row_echelon([int(c * den) for c in g] for g in gens)
        if len(rows) != 3:
            raise ValueError("generators do not span a rank-3 lattice")
        cols = [Vec3(Fraction(x, den) for x in r) for r in rows]
        self.basis = Mat3.from_columns(*cols)
        self._inv = self.basis.inverse()
        self._rows = tuple(cols)
        self._hash = hash(self.basis)

    @classmethod
    def from_basis(cls, *cols: Sequence) -> "Lattice":
        return cls(cols)

    @property
    def generators(self) -> tuple[Vec3, Vec3, Vec3]:
        return self._rows

    def coords(self, v: Sequence) -> Vec3:
        """Fractional coordinates of ``v`` with respect to this lattice's basis."""
        return self._inv @ v

    def point(self, coords: Sequence) -> Vec3:
        return self.basis @ coords

    def det(self) -> Fraction:
        return abs(self.basis.det())

    def __contains__(self, v) -> bool:
        return lattice_contains(self, Vec3(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: "Lattice") -> bool:
        return is_sublattice(self, other)

    def scaled(self, k) -> "Lattice":
        return Lattice(g * k for g in self._rows)

    def __repr__(self) -> str:
        cols = ", ".join(repr(tuple(str(c) for c in g)) for g in self._rows)
        return f"Lattice({cols})"


def lattice_contains(L: Lattice, v: Sequence) -> bool:
    return L.coords(v).is_integral()


def is_sublattice(L1: Lattice, L2: Lattice) -> bool:
    return all(lattice_contains(L2, g) for g in L1.generators)


def _relative_basis(L_sub: Lattice, L_sup: Lattice) -> list[tuple[int, int, int]]:
    if not is_sublattice(L_sub, L_sup):
        raise NotASublattice(f"{L_sub} is not contained in {L_sup}")
    return [L_sup.coords(g).to_ints() for g in L_sub.generators]


def lattice_index(L_sub: Lattice, L_sup: Lattice) -> int:
    """``[L_sup : L_sub]`` as ``|det(B_sup^-1 B_sub)|``."""
    rel = Mat3.from_columns(*_relative_basis(L_sub, L_sup))
    return int(abs(rel.det()))


def reduce_mod(L: Lattice, v: Sequence) -> Vec3:
    """Canonical representative of ``v`` in the half-open cell of ``L``."""
    f = L.coords(v)
    return L.point(Vec3(c - floor(c) for c in f))


def coset_representatives(L_sub: Lattice, L_sup: Lattice) -> list[Vec3]:
    """Transversal of ``L_sup / L_sub``, reduced into the cell of ``L_sub``.

    The relation matrix (sub-basis in sup coordinates) is brought to
    lower-triangular Hermite form; the box ``[0,d1) x [0,d2) x [0,d3)`` of
    integer sup-coordinates is then a fundamental domain.
    """
    hnf = integer_row_echelon(_relative_basis(L_sub, L_sup))
    d = [hnf[k][k] for k in range(3)]
    reps = {
        reduce_mod(L_sub, L_sup.point(c))
        for c in product(range(d[0]), range(d[1]), range(d[2]))
    }
    return sorted(reps)
