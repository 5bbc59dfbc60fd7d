"""Family file format.

A family file is a JSON object ``{"curves": [{"id": ..., "vertices": ...}]}``
where each vertex is a pair ``[x, y]`` and each coordinate is an integer, a
decimal string such as ``"2.5"``, or a fraction string ``"p/q"``.  Decimal
strings convert exactly; JSON floats are rejected because they cannot be
trusted to mean what they say.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .curves import CurveFamily, GroundedCurve
from .validate import validate_family


def _coord_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise ValueError(f"invalid coordinate: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise ValueError(
        f"invalid coordinate {v!r}: use an integer, a decimal string, or 'p/q'")


def _coord_to_json(v: Fraction):
    if v.denominator == 1:
        return int(v)
    return f"{v.numerator}/{v.denominator}"


def family_from_dict(data) -> CurveFamily:
    curves = []
    for entry in data["curves"]:
        verts = tuple((_coord_from_json(x), _coord_from_json(y))
                      for x, y in entry["vertices"])
        curves.append(GroundedCurve(entry["id"], verts))
    return validate_family(curves)


def family_to_dict(fam: CurveFamily) -> dict:
    return {"curves": [
        {"id": c.id,
         "vertices": [[_coord_to_json(x), _coord_to_json(y)] for x, y in c.vertices]}
        for c in fam.curves]}


def load_family(path) -> CurveFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return family_from_dict(json.load(fh))


def loads_family(text: str) -> CurveFamily:
    return family_from_dict(json.loads(text))


def dump_family(fam: CurveFamily, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(family_to_dict(fam), fh, indent=1)
        fh.write("\n")


def dumps_family(fam: CurveFamily) -> str:
    return json.dumps(family_to_dict(fam), indent=1) + "\n"
