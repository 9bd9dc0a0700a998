"""Output records and their CSV / JSON-lines encodings.

Exact quantities are written as ``"p/q"`` strings.  Approximate angles are
only present when requested and are rounded to three decimals.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .bisector import family_bisector
from .exactmath import fraction_str
from .family import FamilyMember, is_primitive
from .triangle import approx_angles_deg, classify, cosines

FORMATS = ("csv", "jsonl")
APPROX_COLUMNS = ("approx_a_deg", "approx_b_deg", "approx_c_deg")


@dataclass(frozen=True)
class OutputRecord:
    a: int
    b: int
    c: int
    k: int
    m: int
    perimeter: int
    primitive: bool
    angle_class: str
    branch: str
    cos_a: str
    cos_b: str
    cos_c: str
    l: int | None = None  # noqa: E741
    d: int | None = None
    r: int | None = None
    dc: int | None = None
    approx_angles_deg: tuple[float, float, float] | None = None


def columns(scale: str, approx: bool) -> list[str]:
    """Fixed column order; ``scale`` is ``"l"`` or ``"d"``."""
    cols = ["a", "b", "c", scale, "k", "m", "perimeter", "primitive", "angle_class",
            "branch", "r", "dc", "cos_a", "cos_b", "cos_c"]
    if approx:
        cols.extend(APPROX_COLUMNS)
    return cols


def record_from_member(fm: FamilyMember, scale: str = "l", approx: bool = False) -> OutputRecord:
    t = fm.triangle
    cos = cosines(t)
    bis = fm.bisector if fm.bisector is not None else family_bisector(t)
    r = dc = None
    if bis.r.denominator == 1:
        r, dc = int(bis.r), int(bis.dc)
    angles = None
    if approx:
        angles = tuple(round(x, 3) for x in approx_angles_deg(t))
    scale_value = {"l": fm.params.l}
    if scale == "d":
        scale_value = {"d": fm.bisector_params.d}
    return OutputRecord(
        a=t.a, b=t.b, c=t.c, k=fm.params.k, m=fm.params.m,
        perimeter=t.perimeter,
        primitive=is_primitive(t),
        angle_class=classify(t).value,
        branch=fm.branch.value,
        cos_a=fraction_str(cos.cos_a),
        cos_b=fraction_str(cos.cos_b),
        cos_c=fraction_str(cos.cos_c),
        r=r, dc=dc,
        approx_angles_deg=angles,
        **scale_value,
    )


def _field_values(rec, cols):
    values = {}
    for col in cols:
        if col in APPROX_COLUMNS:
            values[col] = rec.approx_angles_deg[APPROX_COLUMNS.index(col)]
        else:
            values[col] = getattr(rec, col)
    return values


def write_csv(records, out, scale="l", approx=False):
    cols = columns(scale, approx)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(cols)
    for rec in records:
        row = []
        for col, v in _field_values(rec, cols).items():
            if v is None:
                row.append("")
            elif isinstance(v, bool):
                row.append("true" if v else "false")
            elif isinstance(v, float):
                row.append(f"{v:.3f}")
            else:
                row.append(str(v))
        w.writerow(row)


def write_jsonl(records, out, scale="l", approx=False):
    cols = columns(scale, False)
    for rec in records:
        obj = _field_values(rec, cols)
        if approx:
            obj["approx_angles_deg"] = [f"{x:.3f}" for x in rec.approx_angles_deg]
        out.write(json.dumps(obj) + "\n")


def write_records(records, out, fmt="csv", scale="l", approx=False):
    if fmt == "csv":
        write_csv(records, out, scale, approx)
    elif fmt == "jsonl":
        write_jsonl(records, out, scale, approx)
    else:
        raise ValueError(f"unknown format {fmt!r}")


_INT_FIELDS = ("a", "b", "c", "k", "m", "perimeter", "l", "d", "r", "dc")
_STR_FIELDS = ("angle_class", "branch", "cos_a", "cos_b", "cos_c")


def _from_mapping(obj):
    kw = {}
    for name in _INT_FIELDS:
        v = obj.get(name)
        kw[name] = None if v in (None, "") else int(v)
    for name in _STR_FIELDS:
        kw[name] = obj[name]
    p = obj["primitive"]
    kw["primitive"] = p if isinstance(p, bool) else p == "true"
    if "approx_angles_deg" in obj:
        kw["approx_angles_deg"] = tuple(float(x) for x in obj["approx_angles_deg"])
    elif APPROX_COLUMNS[0] in obj:
        kw["approx_angles_deg"] = tuple(float(obj[c]) for c in APPROX_COLUMNS)
    return OutputRecord(**kw)


def parse_records(text: str, fmt: str = "csv") -> list[OutputRecord]:
    """Inverse of :func:`write_records`."""
    if fmt == "csv":
        return [_from_mapping(row) for row in csv.DictReader(io.StringIO(text))]
    if fmt == "jsonl":
        return [_from_mapping(json.loads(line)) for line in text.splitlines() if line.strip()]
    raise ValueError(f"unknown format {fmt!r}")

