"""Affine isometries in fractional coordinates and finite quotients of space groups."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import ClosureCapExceeded, NotNormal
from .exact import IDENTITY, ZERO, Lattice, Mat3, Vec3, lattice_contains, lcm

DEFAULT_CAP = 10000


@dataclass(frozen=True)
class AffineIsometry:
    """The map ``v -> linear @ v + trans`` on ambient fractional coordinates."""

    linear: Mat3 = IDENTITY
    trans: Vec3 = ZERO

    def __post_init__(self):
        if not isinstance(self.trans, Vec3):
            object.__setattr__(self, "trans", Vec3(self.trans))
        if abs(self.linear.det()) != 1:
            raise ValueError(f"linear part {self.linear} is not unimodular")

    def __call__(self, p: Sequence) -> Vec3:
        return self.linear @ p + self.trans

    def __matmul__(self, other: "AffineIsometry") -> "AffineIsometry":
        # self after other
        return AffineIsometry(self.linear @ other.linear, self.linear @ other.trans + self.trans)

    def inverse(self) -> "AffineIsometry":
        inv = self.linear.inverse()
        return AffineIsometry(inv, -(inv @ self.trans))

    def is_translation(self) -> bool:
        return self.linear == IDENTITY

    @classmethod
    def translation(cls, v: Sequence) -> "AffineIsometry":
        return cls(IDENTITY, Vec3(v))

    @classmethod
    def point_inversion(cls, center: Sequence) -> "AffineIsometry":
        return cls(-IDENTITY, Vec3(center) * 2)


IDENTITY_MAP = AffineIsometry()


def apply(iso: AffineIsometry, p: Sequence) -> Vec3:
    return iso(p)


def _lin(*cols) -> Mat3:
    return Mat3.from_columns(*cols)


h = Fraction(1, 2)

# cubic isometries, coordinates in the basis (t_x, t_y, t_z)
R_Y = AffineIsometry(Mat3.diag(-1, 1, -1))
R_Z = AffineIsometry(Mat3.diag(-1, -1, 1))
R_X = AffineIsometry(Mat3.diag(1, -1, -1))
R_XY = AffineIsometry(_lin((0, 1, 0), (1, 0, 0), (0, 0, -1)))
R_XYZ = AffineIsometry(_lin((0, 1, 0), (0, 0, 1), (1, 0, 0)))
T_X = AffineIsometry.translation((1, 0, 0))
T_Y = AffineIsometry.translation((0, 1, 0))
T_Z = AffineIsometry.translation((0, 0, 1))
T_HALF = AffineIsometry.translation((h, h, h))

# hexagonal isometries, coordinates in the basis (t_x, t_omega, t_z) with
# t_omega = (-1/2, sqrt(3)/2, 0); every entry is an integer in this basis
R_OMEGA = AffineIsometry(_lin((0, 1, 0), (-1, -1, 0), (0, 0, 1)))
R_X_HEX = AffineIsometry(_lin((1, 0, 0), (-1, -1, 0), (0, 0, -1)))
R_Y_HEX = AffineIsometry(_lin((-1, 0, 0), (1, 1, 0), (0, 0, -1)))
T_OMEGA = AffineIsometry.translation((0, 1, 0))


@dataclass(frozen=True)
class SpaceGroupSpec:
    """``<translations, generators>`` with ``translations`` the designated normal lattice."""

    ambient: Lattice
    translations: Lattice
    generators: tuple[AffineIsometry, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def with_translations(self, T: Lattice) -> "SpaceGroupSpec":
        return replace(self, translations=T)

    def extended(self, *isos: AffineIsometry, name: str | None = None) -> "SpaceGroupSpec":
        return replace(self, generators=self.generators + tuple(isos), name=name or self.name)


@dataclass(frozen=True)
class CosetElement:
    """Coset ``g T`` stored as (linear part, translation reduced mod T)."""

    linear: Mat3
    trans: Vec3

    def as_isometry(self) -> AffineIsometry:
        return AffineIsometry(self.linear, self.trans)

    def __call__(self, p: Sequence) -> Vec3:
        return self.linear @ p + self.trans


def check_normal(spec: SpaceGroupSpec) -> bool:
    """Whether every generator's linear part maps the translation lattice into itself."""
    T = spec.translations
    return all(
        lattice_contains(T, g.linear @ t) for g in spec.generators for t in T.generators
    )


def check_normal_by_conjugation(spec: SpaceGroupSpec) -> bool:
    """Same question as :func:`check_normal`, answered by forming ``g t g^-1`` in full."""
    T = spec.translations
    for g in spec.generators:
        g_inv = g.inverse()
        for t in T.generators:
            conj = g @ AffineIsometry.translation(t) @ g_inv
            if not conj.is_translation() or not lattice_contains(T, conj.trans):
                return False
    return True


def orientation_character(e: CosetElement | AffineIsometry) -> int:
    return 1 if e.linear.det() > 0 else -1


def _int_matrix(m: Mat3) -> tuple[int, ...]:
    return tuple(int(a) for r in m.rows for a in r)


def _mul_key(a, b, den):
    (l1, u1), (l2, u2) = a, b
    lin = (
        l1[0] * l2[0] + l1[1] * l2[3] + l1[2] * l2[6],
        l1[0] * l2[1] + l1[1] * l2[4] + l1[2] * l2[7],
        l1[0] * l2[2] + l1[1] * l2[5] + l1[2] * l2[8],
        l1[3] * l2[0] + l1[4] * l2[3] + l1[5] * l2[6],
        l1[3] * l2[1] + l1[4] * l2[4] + l1[5] * l2[7],
        l1[3] * l2[2] + l1[4] * l2[5] + l1[5] * l2[8],
        l1[6] * l2[0] + l1[7] * l2[3] + l1[8] * l2[6],
        l1[6] * l2[1] + l1[7] * l2[4] + l1[8] * l2[7],
        l1[6] * l2[2] + l1[7] * l2[5] + l1[8] * l2[8],
    )
    u = (
        (l1[0] * u2[0] + l1[1] * u2[1] + l1[2] * u2[2] + u1[0]) % den,
        (l1[3] * u2[0] + l1[4] * u2[1] + l1[5] * u2[2] + u1[1]) % den,
        (l1[6] * u2[0] + l1[7] * u2[1] + l1[8] * u2[2] + u1[2]) % den,
    )
    return lin, u


_ID_KEY = ((1, 0, 0, 0, 1, 0, 0, 0, 1), (0, 0, 0))


@dataclass
class FiniteGroup:
    """The finite group ``G = spec / T`` acting on ``E^3 / T``.

    Elements are held internally in the coordinates of ``T``: the linear part
    becomes an integer matrix and the translation a vector in ``(Z/den)^3``.
    ``elements`` exposes them as ambient :class:`CosetElement` values.
    """

    spec: SpaceGroupSpec
    den: int
    keys: list
    generator_indices: list[int]
    _index: dict = field(repr=False, default_factory=dict)
    _elements: list | None = field(repr=False, default=None)

    def __post_init__(self):
        if not self._index:
            self._index = {k: i for i, k in enumerate(self.keys)}

    @property
    def translations(self) -> Lattice:
        return self.spec.translations

    @property
    def order(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def elements(self) -> list[CosetElement]:
        if self._elements is None:
            self._elements = [self._to_element(k) for k in self.keys]
        return self._elements

    def element(self, i: int) -> CosetElement:
        return self.elements[i] if self._elements is not None else self._to_element(self.keys[i])

    @property
    def generators(self) -> list[CosetElement]:
        return [self.element(i) for i in self.generator_indices]

    def _to_element(self, key) -> CosetElement:
        lin, u = key
        B = self.translations.basis
        L = Mat3([lin[0:3], lin[3:6], lin[6:9]])
        return CosetElement(B @ L @ B.inverse(), B @ Vec3(Fraction(c, self.den) for c in u))

    def key_of(self, e: CosetElement | AffineIsometry):
        """Internal key for an ambient element, or ``None`` if it cannot belong to the group."""
        T = self.translations
        B = T.basis
        L = B.inverse() @ e.linear @ B
        if not L.is_integral():
            return None
        t = T.coords(e.trans)
        scaled = [c * self.den for c in t]
        if any(c.denominator != 1 for c in scaled):
            return None
        return _int_matrix(L), tuple(int(c) % self.den for c in scaled)

    def index_of(self, e: CosetElement | AffineIsometry) -> int | None:
        key = self.key_of(e)
        return None if key is None else self._index.get(key)

    def __contains__(self, e) -> bool:
        return self.index_of(e) is not None

    def identity(self) -> int:
        return self._index[_ID_KEY]

    def mul(self, i: int, j: int) -> int:
        return self._index[_mul_key(self.keys[i], self.keys[j], self.den)]

    def inverse(self, i: int) -> int:
        # finite order: walk powers until identity
        ident = self.identity()
        prev, cur = ident, i
        while cur != ident:
            prev, cur = cur, self.mul(cur, i)
        return prev

    def character(self, i: int) -> int:
        lin = self.keys[i][0]
        det = (
            lin[0] * (lin[4] * lin[8] - lin[5] * lin[7])
            - lin[1] * (lin[3] * lin[8] - lin[5] * lin[6])
            + lin[2] * (lin[3] * lin[7] - lin[4] * lin[6])
        )
        return 1 if det > 0 else -1

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return all(other.index_of(e) is not None for e in self.elements)

    def check_axioms(self, samples: int = 200, seed: int = 0) -> bool:
        """Identity present, inverses present, associativity on random triples."""
        if _ID_KEY not in self._index:
            return False
        n = len(self.keys)
        for i in range(n):
            if self.mul(i, self.inverse(i)) != self.identity():
                return False
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
        return True


def quotient_group(spec: SpaceGroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Enumerate ``<translations, generators> / translations`` by breadth-first closure."""
    if not check_normal(spec):
        raise NotNormal(f"{spec.translations} is not normalised by the generators of {spec.name!r}")
    T = spec.translations
    B, B_inv = T.basis, T.basis.inverse()
    mats, shifts = [], []
    for g in spec.generators:
        mats.append(B_inv @ g.linear @ B)
        shifts.append(T.coords(g.trans))
    den = lcm(*(c.denominator for s in shifts for c in s))
    gen_keys = []
    for L, s in zip(mats, shifts):
        gen_keys.append((_int_matrix(L), tuple(int(c * den) % den for c in s)))

    keys = [_ID_KEY]
    index = {_ID_KEY: 0}
    queue = deque([_ID_KEY])
    while queue:
        a = queue.popleft()
        for g in gen_keys:
            k = _mul_key(a, g, den)
            if k not in index:
                index[k] = len(keys)
                keys.append(k)
                if len(keys) > cap:
                    raise ClosureCapExceeded(f"closure of {spec.name!r} exceeded {cap} elements")
                queue.append(k)
    gen_idx = [index[k] for k in gen_keys]
    return FiniteGroup(spec, den, keys, gen_idx, index)


def is_index_two_subgroup(sub: SpaceGroupSpec, sup: SpaceGroupSpec, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``sub / T`` is an index-two subgroup of ``sup / T`` for a shared ``T``."""
    if sub.translations != sup.translations:
        raise ValueError("comparison needs a common translation lattice")
    G_sub = quotient_group(sub, cap)
    G_sup = quotient_group(sup, cap)
    return G_sup.order == 2 * G_sub.order and G_sub.is_subgroup_of(G_sup)


def extend_by_inversion(spec: SpaceGroupSpec, center: Sequence, name: str | None = None) -> SpaceGroupSpec:
    return spec.extended(AffineIsometry.point_inversion(center), name=name)


def candidate_centers(denom_bound: int) -> list[Vec3]:
    """Rational points of ``[0,1)^3`` with denominators up to ``denom_bound``.

    Ordered by common denominator, then lexicographically.
    """
    seen = set()
    out = []
    for d in range(1, denom_bound + 1):
        layer = []
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    v = Vec3((Fraction(a, d), Fraction(b, d), Fraction(c, d)))
                    if v not in seen:
                        seen.add(v)
                        layer.append(v)
        out.extend(sorted(layer))
    return out
