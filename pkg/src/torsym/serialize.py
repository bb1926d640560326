"""JSON reports and patch exports.

Rationals are written as ``"p/q"`` strings and an infinite lift count as
``"INFINITE"``, so every document parses back to exactly the values it came
from.  OBJ output is the one place decimals appear; it is for viewers only.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import asdict, dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import product
from math import ceil, floor

from . import __version__
from .catalog import ExampleInstance, Report, hex_to_cartesian
from .exact import Vec3

_RAT = re.compile(r"^-?\d+/\d+$")
OBJ_DIGITS = 12


def encode(value):
    """Replace rationals and infinities by their string forms, recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return "INFINITE" if math.isinf(value) else value
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode(value):
    if isinstance(value, str):
        if _RAT.match(value):
            p, q = value.split("/")
            return Fraction(int(p), int(q))
        if value == "INFINITE":
            return math.inf
        return value
    if isinstance(value, dict):
        return {k: decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [decode(v) for v in value]
    return value


def dumps(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass
class ReportDocument:
    family: str
    n: int
    form: str
    m: int
    passed: bool
    duration: float
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    skipped: bool = False
    supergroups: dict | None = None
    version: str = __version__

    @classmethod
    def from_report(cls, r: Report) -> "ReportDocument":
        return cls(
            family=r.tag, n=r.n, form=r.form, m=r.m, passed=r.passed,
            duration=sum(r.timings.values()), computed=dict(r.computed),
            expected=dict(r.expected), checks=dict(r.checks), notes=list(r.notes),
            skipped=r.skipped, supergroups=r.supergroups,
        )

    def to_dict(self) -> dict:
        return encode(asdict(self))

    def to_json(self) -> str:
        return dumps(asdict(self))

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        return cls(**decode(d))

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


# --- patch export -------------------------------------------------------------

@dataclass(frozen=True)
class PatchExport:
    family: str
    hexagonal: bool
    box: tuple[int, int, int]
    vertices: tuple[Vec3, ...]  # ambient lattice coordinates
    segments: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "basis": "hexagonal (t_x, t_omega, t_z)" if self.hexagonal else "cubic (t_x, t_y, t_z)",
            "box": list(self.box),
            "vertices": [list(v) for v in self.vertices],
            "segments": [list(s) for s in self.segments],
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def cartesian(self) -> list[tuple[Decimal, Decimal, Decimal]]:
        """Decimal Cartesian coordinates rounded to ``OBJ_DIGITS`` places."""
        quantum = Decimal(1).scaleb(-OBJ_DIGITS)
        out = []
        with localcontext() as ctx:
            ctx.prec = 50
            root3 = Decimal(3).sqrt()
            for v in self.vertices:
                if self.hexagonal:
                    x, y3, z = hex_to_cartesian(v)
                    xyz = (_dec(x), _dec(y3) * root3, _dec(z))
                else:
                    xyz = tuple(_dec(c) for c in v)
                out.append(tuple((c.quantize(quantum) + 0) for c in xyz))
        return out

    def to_obj(self) -> str:
        lines = [
            f"# {self.family} patch over box {self.box[0]} {self.box[1]} {self.box[2]}",
            f"# display-only: coordinates rounded to {OBJ_DIGITS} decimals; use the JSON export for exact values",
        ]
        for x, y, z in self.cartesian():
            lines.append(f"v {x:f} {y:f} {z:f}")
        for i, j in self.segments:
            lines.append(f"l {i + 1} {j + 1}")
        return "\n".join(lines) + "\n"


def _dec(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def _in_box(p, box) -> bool:
    return all(0 <= c <= b for c, b in zip(p, box))


def patch_export(inst: ExampleInstance, box: tuple[int, int, int]) -> PatchExport:
    """All translates of the motif segments with both endpoints in ``[0,a]x[0,b]x[0,c]``.

    The box is measured in cells of the ambient lattice (unit cubes, or
    hexagonal prisms for the hexagonal family).
    """
    if any(b <= 0 for b in box):
        raise ValueError("box dimensions must be positive")
    g = inst.geometry
    B = g.base
    corners = [Vec3(c) for c in product(*[(0, b) for b in box])]
    found: set[tuple[Vec3, Vec3]] = set()
    for p, q in g.segments():
        coords = [B.coords(c - p) for c in corners]
        ranges = [range(floor(min(k[i] for k in coords)), ceil(max(k[i] for k in coords)) + 1) for i in range(3)]
        for k in product(*ranges):
            t = B.point(k)
            a, b = p + t, q + t
            if _in_box(a, box) and _in_box(b, box):
                found.add((min(a, b), max(a, b)))
    verts = sorted({v for seg in found for v in seg})
    index = {v: i for i, v in enumerate(verts)}
    segs = sorted((index[a], index[b]) for a, b in found)
    return PatchExport(inst.family.tag.value, inst.family.hexagonal, tuple(box), tuple(verts), tuple(segs))
