"""The nine maximally symmetric graph families and their verification pipeline.

Each family builds a periodic graph, a space group given by explicit
generators, and a translation lattice ``T_m``.  :func:`verify` recomputes
genus, group order and the knottedness certificate exactly and compares them
with the closed forms (genus ``2m+1`` / order ``24m`` for the cubic families,
genus ``m+1`` / order ``12m`` for the hexagonal one).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import ConstraintViolated, SupergroupNotFound
from .exact import Lattice, Vec3
from .isometry import (
    DEFAULT_CAP,
    IDENTITY_MAP,
    R_OMEGA,
    R_XY,
    R_XYZ,
    R_X_HEX,
    R_Y,
    R_Y_HEX,
    R_Z,
    T_HALF,
    T_OMEGA,
    T_X,
    T_Y,
    T_Z,
    AffineIsometry,
    SpaceGroupSpec,
    check_normal,
    check_normal_by_conjugation,
    extend_by_inversion,
    is_index_two_subgroup,
    orientation_character,
    quotient_group,
)
from .pgraph import (
    INFINITE,
    Certificate,
    PeriodicGraph,
    euler_characteristic,
    find_inversion_center,
    genus,
    group_preserves,
    image_graph,
    induced_automorphism,
    is_connected,
    knottedness_certificate,
    lift_components,
    orbit_closure,
    quotient,
    rebase,
    suppress_bivalent,
    swaps_sides,
    union_graph,
)

q4, h2, t4 = Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)
tr = AffineIsometry.translation


# --- lattices ---------------------------------------------------------------

def _cube_root(m: int) -> int | None:
    n = round(m ** (1 / 3)) if m > 0 else 0
    for k in (n - 1, n, n + 1):
        if k > 0 and k ** 3 == m:
            return k
    return None


def cubic_T(m: int) -> Lattice:
    """``T_m`` for ``m`` of the form ``n^3``, ``2n^3`` or ``4n^3`` (a unique choice)."""
    for coef, gens in (
        (1, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
        (2, [(0, 1, 1), (1, 0, 1), (1, 1, 0)]),
        (4, [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]),
    ):
        if m % coef == 0 and (n := _cube_root(m // coef)) is not None:
            return Lattice([tuple(n * x for x in g) for g in gens])
    raise ValueError(f"{m} is not of the form n^3, 2n^3 or 4n^3")


def half_T(n: int) -> Lattice:
    """``T_{n^3/2} = { v/2 : v in T_{4n^3} }``; ``n = 1`` gives ``<T_1, t_1/2>``."""
    return cubic_T(4 * n ** 3).scaled(h2)


def hex_T(m: int) -> Lattice:
    """``T^omega_m`` for ``m = n^2`` or ``3n^2`` in the basis ``(t_x, t_omega, t_z)``."""
    n = round(m ** 0.5)
    if n * n == m:
        return Lattice([(0, n, 0), (n, 0, 0), (0, 0, 1)])
    n = round((m / 3) ** 0.5)
    if 3 * n * n == m:
        return Lattice([(n, 2 * n, 0), (2 * n, n, 0), (0, 0, 1)])
    raise ValueError(f"{m} is not of the form n^2 or 3n^2")


T1 = cubic_T(1)
T2 = cubic_T(2)
T4 = cubic_T(4)
T_HALF_LATTICE = half_T(1)
HEX_AMBIENT = hex_T(1)


def hex_to_cartesian(v) -> tuple[Fraction, Fraction, Fraction]:
    """Cartesian ``(x, y / sqrt(3), z)`` of a point given in the hexagonal basis."""
    a, b, c = v
    return a - b / 2, b / 2, c


# --- groups -----------------------------------------------------------------

def _translations(L: Lattice) -> list[AffineIsometry]:
    return [tr(g) for g in L.generators]


def group_P432(T: Lattice = T1) -> SpaceGroupSpec:
    return SpaceGroupSpec(T1, T, (R_Y, R_Z, R_XY, R_XYZ, T_X, T_Y, T_Z), "P432")


def group_I432(T: Lattice = T1) -> SpaceGroupSpec:
    return group_P432(T).extended(T_HALF, name="I432")


def group_F4132(T: Lattice = T2) -> SpaceGroupSpec:
    gens = [R_Y, R_Z, R_XYZ, T_HALF @ R_XY] + _translations(T2)
    return SpaceGroupSpec(T1, T, gens, "F4_132")


def group_P4232(T: Lattice = T1) -> SpaceGroupSpec:
    return group_F4132(T).extended(T_X, name="P4_232")


def group_I4132(T: Lattice = T4) -> SpaceGroupSpec:
    gens = [T_X @ T_Z @ R_Z, T_Y @ T_Z @ R_Y, R_XYZ, T_X @ T_HALF @ R_XY] + _translations(T4)
    return SpaceGroupSpec(T1, T, gens, "I4_132")


def group_P622(T: Lattice = HEX_AMBIENT) -> SpaceGroupSpec:
    return SpaceGroupSpec(HEX_AMBIENT, T, (R_OMEGA, R_X_HEX, R_Y_HEX, T_X, T_OMEGA, T_Z), "P622")


# --- graphs -----------------------------------------------------------------
# Each builder returns the straight-segment geometry; vertices of degree two
# are smoothed afterwards where a family's motif is given by half-edges.

@lru_cache(maxsize=None)
def gamma_pcu() -> PeriodicGraph:
    """One-skeleton of the unit cube, periodised by integer translations."""
    corners = [Vec3((a, b, c)) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    segs = [
        (p, q) for p in corners for q in corners
        if p < q and sum(abs(x - y) for x, y in zip(p, q)) == 1
    ]
    return PeriodicGraph.from_segments(T1, segs)


@lru_cache(maxsize=None)
def gamma_dia() -> PeriodicGraph:
    """Four edges from the cube centre to alternate corners, periodised by ``T_2``."""
    c = (h2, h2, h2)
    ends = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]
    return PeriodicGraph.from_segments(T2, [(c, e) for e in ends])


SRS_MAPS = (
    IDENTITY_MAP,
    tr((0, 2, 1)) @ R_Y @ R_Z,
    tr((2, 1, 1)) @ R_Y,
    tr((2, 1, 0)) @ R_Z,
)


@lru_cache(maxsize=None)
def gamma_srs_raw() -> PeriodicGraph:
    """Three half-edges from ``(1/4,1/4,1/4)`` and their three images; midpoints kept."""
    c = (q4, q4, q4)
    star = PeriodicGraph.from_segments(T4, [(c, (0, h2, q4)), (c, (q4, 0, h2)), (c, (h2, q4, 0))])
    return orbit_closure(star, SRS_MAPS)


@lru_cache(maxsize=None)
def gamma_srs27_raw() -> PeriodicGraph:
    c = (q4, q4, q4)
    segs = [
        (c, (0, q4, h2)), (c, (h2, 0, q4)), (c, (q4, h2, 0)),
        ((0, t4, h2), (h2, t4, 1)), ((h2, 0, t4), (1, h2, t4)), ((t4, h2, 0), (t4, 1, h2)),
    ]
    return orbit_closure(PeriodicGraph.from_segments(T4, segs), SRS_MAPS)


@lru_cache(maxsize=None)
def gamma_pcu_c_raw() -> PeriodicGraph:
    g = gamma_pcu()
    return rebase(union_graph([g, image_graph(T_HALF, g)]), T_HALF_LATTICE)


@lru_cache(maxsize=None)
def gamma_dia_c_raw() -> PeriodicGraph:
    g = gamma_dia()
    return rebase(union_graph([g, image_graph(T_X, g)]), T1)


@lru_cache(maxsize=None)
def gamma_srs4_raw() -> PeriodicGraph:
    g = gamma_srs_raw()
    return rebase(union_graph([g] + [image_graph(t, g) for t in (T_X, T_Y, T_Z)]), T1)


@lru_cache(maxsize=None)
def gamma_srs8_raw() -> PeriodicGraph:
    g = gamma_srs4_raw()
    return rebase(union_graph([g, image_graph(T_HALF, g)]), T_HALF_LATTICE)


@lru_cache(maxsize=None)
def gamma_hex() -> PeriodicGraph:
    """Boundary of the regular hexagon centred at the origin with vertex ``(1/2, sqrt3/6, 0)``.

    In the basis ``(t_x, t_omega, t_z)`` that vertex is ``(2/3, 1/3, 0)``; the
    others follow by 60-degree rotation ``-r_omega^2``.
    """
    v0 = Vec3((Fraction(2, 3), Fraction(1, 3), 0))
    rot60 = -(R_OMEGA.linear @ R_OMEGA.linear)
    ring = [v0]
    for _ in range(5):
        ring.append(rot60 @ ring[-1])
    segs = [(ring[k], ring[(k + 1) % 6]) for k in range(6)]
    return PeriodicGraph.from_segments(HEX_AMBIENT, segs)


# --- families ---------------------------------------------------------------

class Tag(str, Enum):
    PCU = "PCU"
    DIA = "DIA"
    SRS = "SRS"
    PCU_C = "PCU_C"
    DIA_C = "DIA_C"
    SRS4 = "SRS4"
    SRS8 = "SRS8"
    SRS27 = "SRS27"
    HEX = "HEX"


FORM_COEF = {"n3": (1, 3), "2n3": (2, 3), "4n3": (4, 3), "16n3": (16, 3), "n2": (1, 2), "3n2": (3, 2)}
FORM_LABEL = {"n3": "n³", "2n3": "2n³", "4n3": "4n³", "16n3": "16n³", "n2": "n²", "3n2": "3n²"}


@dataclass(frozen=True)
class Family:
    tag: Tag
    net: str
    knotted: bool
    m_forms: tuple[str, ...]
    constraint: str  # "none" | "odd" | "not3"
    raw_graph: Callable[[], PeriodicGraph]
    smooth: bool
    group: Callable[[Lattice], SpaceGroupSpec]
    sub_lattice: Callable[[int, int], Lattice]  # (m, n) -> T
    lift_count: float
    hexagonal: bool = False

    def m_value(self, n: int, form: str) -> int:
        coef, power = FORM_COEF[form]
        return coef * n ** power

    def admissible(self, n: int) -> bool:
        if n < 1:
            return False
        if self.constraint == "odd":
            return n % 2 == 1
        if self.constraint == "not3":
            return n % 3 != 0
        return True

    @property
    def constraint_text(self) -> str:
        return {"none": "n ≥ 1", "odd": "2∤n", "not3": "3∤n"}[self.constraint]

    @property
    def genus_formula(self) -> str:
        return "genus m+1, order 12m" if self.hexagonal else "genus 2m+1, order 24m"

    def graph(self) -> PeriodicGraph:
        return _smoothed(self.tag) if self.smooth else self.raw_graph()


FAMILIES: dict[Tag, Family] = {
    f.tag: f
    for f in (
        Family(Tag.PCU, "pcu", False, ("n3", "2n3", "4n3"), "none", gamma_pcu, False,
               group_P432, lambda m, n: cubic_T(m), 1),
        Family(Tag.DIA, "dia", False, ("n3", "4n3", "16n3"), "none", gamma_dia, False,
               group_F4132, lambda m, n: cubic_T(2 * m), 1),
        Family(Tag.SRS, "srs", False, ("n3", "2n3", "4n3"), "none", gamma_srs_raw, True,
               group_I4132, lambda m, n: cubic_T(4 * m), 1),
        Family(Tag.PCU_C, "pcu-c", True, ("n3",), "odd", gamma_pcu_c_raw, False,
               group_I432, lambda m, n: half_T(n), 2),
        Family(Tag.DIA_C, "dia-c", True, ("n3", "4n3"), "odd", gamma_dia_c_raw, False,
               group_P4232, lambda m, n: cubic_T(m), 2),
        Family(Tag.SRS4, "srs×4", True, ("n3", "2n3"), "odd", gamma_srs4_raw, True,
               group_P4232, lambda m, n: cubic_T(m), 4),
        Family(Tag.SRS8, "srs×8", True, ("n3",), "odd", gamma_srs8_raw, True,
               group_I432, lambda m, n: half_T(n), 8),
        Family(Tag.SRS27, "srs′ (27 components)", True, ("n3", "2n3", "4n3"), "not3", gamma_srs27_raw, True,
               group_I4132, lambda m, n: cubic_T(4 * m), 27),
        Family(Tag.HEX, "stacked hcb", True, ("n2", "3n2"), "none", gamma_hex, False,
               group_P622, lambda m, n: hex_T(m), INFINITE, hexagonal=True),
    )
}

# vertex and edge counts of each graph over its own base lattice
BASE_COUNTS = {
    Tag.PCU: (1, 3), Tag.DIA: (2, 4), Tag.SRS: (4, 6), Tag.PCU_C: (1, 3), Tag.DIA_C: (2, 4),
    Tag.SRS4: (4, 6), Tag.SRS8: (4, 6), Tag.SRS27: (4, 6), Tag.HEX: (2, 3),
}


@lru_cache(maxsize=None)
def _smoothed(tag: Tag) -> PeriodicGraph:
    g = suppress_bivalent(FAMILIES[tag].raw_graph())
    want = BASE_COUNTS[tag]
    got = (len(g.vertices), len(g.edges))
    if got != want or any(d != 3 for d in g.degrees()):
        raise RuntimeError(f"{tag.value} motif smooths to {got} vertices/edges, expected {want}")
    return g


def family(tag: str | Tag) -> Family:
    try:
        return FAMILIES[Tag(tag.upper() if isinstance(tag, str) else tag)]
    except ValueError:
        raise KeyError(f"unknown family {tag!r}; choose from {', '.join(t.value for t in Tag)}") from None


@dataclass(frozen=True)
class Expected:
    genus: int
    order: int
    knotted: bool
    lift_count: float
    vertices: int
    edges: int
    chi: int
    certificate: str


@dataclass(frozen=True)
class ExampleInstance:
    family: Family
    n: int
    form: str
    m: int
    graph: PeriodicGraph
    geometry: PeriodicGraph
    sub: Lattice
    group: SpaceGroupSpec
    expected: Expected


def build(tag: str | Tag, n: int, form: str | None = None) -> ExampleInstance:
    fam = family(tag)
    form = form or fam.m_forms[0]
    if form not in fam.m_forms:
        raise ValueError(f"{fam.tag.value} accepts forms {', '.join(fam.m_forms)}, got {form!r}")
    if not fam.admissible(n):
        need = "odd n (2∤n)" if fam.constraint == "odd" else fam.constraint_text
        raise ConstraintViolated(f"{fam.tag.value} requires {need}, got n={n}")
    m = fam.m_value(n, form)
    sub = fam.sub_lattice(m, n)
    g = fam.graph()
    bv, be = BASE_COUNTS[fam.tag]
    if fam.hexagonal:
        gen, order, chi = m + 1, 12 * m, -m
    else:
        gen, order, chi = 2 * m + 1, 24 * m, -2 * m
    exp = Expected(
        genus=gen, order=order, knotted=fam.knotted, lift_count=fam.lift_count,
        vertices=bv * m, edges=be * m, chi=chi,
        certificate=(Certificate.KNOTTED if fam.knotted else Certificate.INCONCLUSIVE).value,
    )
    return ExampleInstance(fam, n, form, m, g, fam.raw_graph(), sub, fam.group(sub), exp)


# --- reports ----------------------------------------------------------------

UNKNOTTED_NOTE = "unknotted: regular neighbourhood is isotopic to a classical minimal surface (cited, not computed)"


@dataclass
class Report:
    tag: str
    n: int
    form: str
    m: int
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    skipped: bool = False
    supergroups: dict | None = None

    @property
    def passed(self) -> bool:
        ok = not self.skipped and all(self.checks.values())
        if self.supergroups is not None:
            ok = ok and self.supergroups.get("passed", False)
        return ok


def _expected_dict(e: Expected) -> dict:
    return {
        "genus": e.genus, "order": e.order, "knotted": e.knotted, "lift_components": e.lift_count,
        "vertices": e.vertices, "edges": e.edges, "chi": e.chi, "connected": True,
        "certificate": e.certificate, "normal": True, "preserves": True,
    }


def _group_cap(inst: ExampleInstance) -> int:
    return max(DEFAULT_CAP, 4 * inst.expected.order)


def verify(inst: ExampleInstance) -> Report:
    """Run the full pipeline on one instance; failures are recorded, never raised."""
    r = Report(inst.family.tag.value, inst.n, inst.form, inst.m, expected=_expected_dict(inst.expected))
    c = r.computed

    def step(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        except Exception as exc:  # recorded, not raised
            r.notes.append(f"{name}: {type(exc).__name__}: {exc}")
            return None
        finally:
            r.timings[name] = time.perf_counter() - t0

    c["normal"] = step("check_normal", lambda: check_normal(inst.group) and check_normal_by_conjugation(inst.group))
    G = step("quotient_group", lambda: quotient_group(inst.group, cap=_group_cap(inst)))
    c["order"] = G.order if G is not None else None
    q = step("quotient", lambda: quotient(inst.graph, inst.sub))
    if q is not None:
        c["vertices"], c["edges"] = q.num_vertices, q.num_edges
        c["connected"] = step("is_connected", lambda: is_connected(q))
        c["chi"] = step("euler_characteristic", lambda: euler_characteristic(q))
        c["genus"] = step("genus", lambda: genus(q))
        c["preserves"] = step("group_preserves", lambda: G is not None and group_preserves(q, G))
        lc = step("lift_components", lambda: lift_components(q))
        c["lift_components"] = lc.count if lc is not None else None
        cert = step("knottedness_certificate", lambda: knottedness_certificate(q))
        c["certificate"] = cert.value if cert is not None else None
        c["knotted"] = cert == Certificate.KNOTTED if cert is not None else None
    for key, want in r.expected.items():
        r.checks[key] = c.get(key) == want
    if c.get("order") is not None and c.get("genus") is not None:
        r.checks["bound_saturated"] = c["order"] == 12 * (c["genus"] - 1)
    if not inst.family.knotted:
        r.notes.append(UNKNOTTED_NOTE)
    return r


def admissible_instances(tag: str | Tag, n_max: int):
    fam = family(tag)
    for n in range(1, n_max + 1):
        for form in fam.m_forms:
            yield fam, n, form


def verify_family_sweep(tag: str | Tag, n_max: int, supergroups: bool = False) -> list[Report]:
    out = []
    for fam, n, form in admissible_instances(tag, n_max):
        if not fam.admissible(n):
            r = Report(fam.tag.value, n, form, fam.m_value(n, form), skipped=True)
            r.notes.append(f"skipped: requires {fam.constraint_text}")
            out.append(r)
            continue
        inst = build(fam.tag, n, form)
        r = verify(inst)
        if supergroups and fam.tag in SUPERGROUP_FAMILIES:
            r.supergroups = supergroup_checks(inst)
        out.append(r)
    return out


# --- index-two supergroups ---------------------------------------------------

SUPERGROUP_FAMILIES = (Tag.PCU, Tag.DIA, Tag.SRS, Tag.PCU_C, Tag.DIA_C)


def _order(spec: SpaceGroupSpec, cap: int) -> int:
    return quotient_group(spec, cap=cap).order


def _preserves(spec_elem: AffineIsometry, g: PeriodicGraph, sub: Lattice) -> bool:
    from .errors import NotPreserved

    try:
        induced_automorphism(quotient(g, sub), spec_elem)
    except NotPreserved:
        return False
    return True


def supergroup_checks(inst: ExampleInstance, denom_bound: int = 8) -> dict:
    """Index-two extensions of the instance's group, with orientation bookkeeping.

    Each step records the group order over the instance lattice, whether the
    added generator preserves the graph or carries it to its dual, and its
    orientation character on the torus.
    """
    fam, m, sub = inst.family, inst.m, inst.sub
    if fam.tag not in SUPERGROUP_FAMILIES:
        raise ValueError(f"no supergroup chain for {fam.tag.value}")
    cap = max(DEFAULT_CAP, 8 * inst.expected.order)
    g = inst.geometry
    genus_ = inst.expected.genus
    chain, generators, arithmetic = [], [], {}

    def link(spec, expected_order, parent=None):
        order = _order(spec, cap)
        entry = {"group": spec.name, "order": order, "expected": expected_order, "ok": order == expected_order}
        if parent is not None:
            entry["index_two"] = is_index_two_subgroup(parent, spec, cap)
            entry["ok"] = entry["ok"] and entry["index_two"]
        chain.append(entry)
        return spec

    def record(name, iso, dual=None):
        info = {"generator": name, "character": orientation_character(iso),
                "preserves_graph": _preserves(iso, g, sub)}
        if dual is not None:
            info["swaps_sides"] = swaps_sides(iso, g, dual, sub)
        generators.append(info)
        return info

    base = link(inst.group, 24 * m)
    if fam.tag is Tag.PCU:
        dual = image_graph(T_HALF, g)
        mid = link(base.extended(T_HALF, name="I432"), 48 * m, base)
        record("t_1/2", T_HALF, dual)
        center = find_inversion_center(g, mid, 4, cap=cap)
        if center is None:
            raise SupergroupNotFound("no inversion centre normalising I432 preserves the graph")
        top = link(extend_by_inversion(mid, center, name="Im-3m"), 96 * m, mid)
        link(extend_by_inversion(base, center, name="P432+inversion"), 48 * m, base)
        record("inversion", AffineIsometry.point_inversion(center), dual)
        arithmetic["E(Σ_g)=48(g-1)"] = 96 * m == 48 * (genus_ - 1)
        arithmetic["E+(Σ_g)=24(g-1)"] = 48 * m == 24 * (genus_ - 1)
    elif fam.tag is Tag.DIA:
        dual = image_graph(T_X, g)
        mid = link(base.extended(T_X, name="P4_232"), 48 * m, base)
        record("t_x", T_X, dual)
        center = find_inversion_center(g, mid, 4, cap=cap)
        if center is None:
            raise SupergroupNotFound("no inversion centre normalising P4_232 preserves the graph")
        top = link(extend_by_inversion(mid, center, name="Pn-3m"), 96 * m, mid)
        link(extend_by_inversion(base, center, name="F4_132+inversion"), 48 * m, base)
        record("inversion", AffineIsometry.point_inversion(center), dual)
        arithmetic["E(Σ_g)=48(g-1)"] = 96 * m == 48 * (genus_ - 1)
        if inst.n % 2 == 1 and inst.form in ("n3", "4n3"):
            T_m = cubic_T(m)
            g_pi = 2 * m + 2
            over_Tm = _order(top.with_translations(T_m), cap)
            half = _order(mid.with_translations(T_m), cap)
            arithmetic["non-orientable genus"] = g_pi
            arithmetic["E(Π_g) order over T_m"] = over_Tm
            arithmetic["E(Π_g)=24(g-2)"] = over_Tm == 48 * m == 24 * (g_pi - 2)
            arithmetic["E+(Π_g)=12(g-2)"] = half == 24 * m == 12 * (g_pi - 2)
    elif fam.tag is Tag.SRS:
        center = find_inversion_center(g, base, denom_bound, partner="disjoint", cap=cap)
        if center is None:
            raise SupergroupNotFound("no inversion centre maps srs onto a disjoint partner")
        inv = AffineIsometry.point_inversion(center)
        link(extend_by_inversion(base, center, name="Ia-3d"), 48 * m, base)
        record("inversion", inv, image_graph(inv, g))
    else:  # PCU_C, DIA_C: the knotted complements of the non-orientable examples
        center = find_inversion_center(g, base, 4, cap=cap)
        if center is None:
            raise SupergroupNotFound(f"no inversion centre preserves {fam.net}")
        top_name = "Im-3m" if fam.tag is Tag.PCU_C else "Pn-3m"
        link(extend_by_inversion(base, center, name=top_name), 48 * m, base)
        record("inversion", AffineIsometry.point_inversion(center))
        g_pi = 2 * m + 2
        arithmetic["non-orientable genus"] = g_pi
        arithmetic["E(Π_g)=24(g-2)"] = 48 * m == 24 * (g_pi - 2)
        arithmetic["E+(Π_g)=12(g-2)"] = 24 * m == 12 * (g_pi - 2)

    checks = [e["ok"] for e in chain] + [v for v in arithmetic.values() if isinstance(v, bool)]
    return {
        "center": list(center),
        "chain": chain,
        "generators": generators,
        "arithmetic": arithmetic,
        "passed": all(checks),
    }
