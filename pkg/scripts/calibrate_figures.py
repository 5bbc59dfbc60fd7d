#!/usr/bin/env python3
"""One-time calibration of the figure fixtures.

The drawings behind the fixtures use smooth curves; this script holds their
polyline transcriptions (control points, minimally adjusted to keep general
position), recomputes every captioned relation with the library, and freezes
family + relation JSON files into src/outerstring/fixtures/ only if every
relation holds.  Run from the repository root:

    python scripts/calibrate_figures.py [--check-only]

A transcription that fails any relation is reported and NOT frozen.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from outerstring.geom import (curve, curves_intersect, exterior_membership,
                              family_to_dict, pt, validate_family)
from outerstring.structures import (Skeleton, build_bracket, crosses_system,
                                    is_supported, side_for_clique, signature,
                                    supported_subfamily,
                                    validate_clique_system)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "src" / "outerstring" / "fixtures"


def fig1():
    """Seven curves externally supported by two others."""
    fam = validate_family([
        curve("s1", (0, 0), (1, "4.5"), ("3.5", 2), (4, "5.5")),
        curve("p1", (1, 0), ("2.5", 4), ("6.5", "4.5"), (8, 5)),
        curve("p2", (2, 0), ("2.5", "2.5"), (3, "3.5")),
        curve("p3", (4, 0), (3, 1), ("0.5", "2.5"), ("-0.5", 4)),
        curve("p4", (5, 0), ("5.5", 2), ("8.5", "1.5")),
        curve("p5", (6, 0), (6, 3), ("4.5", 4)),
        curve("s2", (7, 0), ("7.5", "2.5"), (9, 4), ("8.5", "5.5"), (6, "5.5"), (5, 3)),
        curve("p6", (8, 0), ("7.65", "2.3"), ("6.5", "3.5")),
        curve("p7", (9, 0), (9, 3), ("5.5", 6)),
    ])
    members = ["p1", "p2", "p3", "p4", "p5", "p6", "p7"]
    G = fam.subfamily(members)
    supported_by = {}
    for p in members:
        supporters = []
        for s in ("s1", "s2"):
            if curves_intersect(fam[p], fam[s]) and exterior_membership(G, fam[s]):
                supporters.append(s)
        if not supporters:
            raise SystemExit(f"fig1: {p} has no external support; transcription wrong")
        supported_by[p] = supporters
    relations = {"supported_family": members, "supported_by": supported_by}
    return fam, relations


def fig2():
    """A skeleton (u, v, {s1, s2}); p2 and p4 supported, p1 and p3 not."""
    fam = validate_family([
        curve("u", (0, 0), ("0.5", 3), (3, 5), (7, 5), (7, 3), (9, 3)),
        curve("p1", (1, 0), (1, 2), (2, 3)),
        curve("p2", (2, 0), (3, "2.5"), (4, 3)),
        curve("s1", (3, 0), (2, 5), ("0.5", 4), (2, "2.5")),
        curve("p3", (4, 0), (5, "1.9"), (5, "3.5")),
        curve("s2", (6, 0), (6, 3), (5, 6)),
        curve("p4", (7, 0), ("6.05", 2), (4, 2), (3, "3.5")),
        curve("v", (9, 0), (8, 2), (8, 4), (4, 4)),
    ])
    sk = Skeleton("u", "v", ("s1", "s2")).validate(fam)
    supported = supported_subfamily(fam, sk).ids()
    expected_supported = ("p2", "p4")
    expected_unsupported = ("p1", "p3")
    if tuple(supported) != expected_supported:
        raise SystemExit(f"fig2: supported set is {supported}, wanted {expected_supported}")
    for p in expected_unsupported:
        if is_supported(p, sk, fam):
            raise SystemExit(f"fig2: {p} unexpectedly supported")
    relations = {
        "skeleton": {"u": "u", "v": "v", "supports": ["s1", "s2"]},
        "supported": list(expected_supported),
        "unsupported": list(expected_unsupported),
    }
    return fam, relations


def fig3():
    """A bracket ({p1..p4}, {s1,s2,s3}) with s(p1)=s(p3)=s1, s(p2)=s2, s(p4)=s3."""
    fam = validate_family([
        curve("s1", ("0.5", 0), (2, "4.5"), ("5.4", "2.5"), ("7.5", "2.4")),
        curve("s2", (2, 0), ("2.5", 5), (7, 5), ("9.5", "5.5")),
        curve("s3", (3, 0), (3, 4), (8, 4)),
        curve("p1", ("5.5", 0), ("5.5", "2.6"), ("7.5", "3.5"), (10, 3)),
        curve("p2", ("6.5", 0), (7, "1.5"), ("9.5", 3), ("7.5", 6)),
        curve("p3", ("7.5", 0), ("6.5", "3.5"), ("3.1", 3), ("0.5", "4.5")),
        curve("p4", (9, 0), (8, 3), (6, "5.5")),
    ])
    br = build_bracket(["p1", "p2", "p3", "p4"], ["s1", "s2", "s3"], fam)
    expected = {"p1": "s1", "p2": "s2", "p3": "s1", "p4": "s3"}
    if br.s_of != expected:
        raise SystemExit(f"fig3: s(p) map is {br.s_of}, wanted {expected}")
    inside = [["4", "2"], ["7/2", "1"]]
    outside = [["1", "1"], ["9", "1"], ["5", "9/2"]]
    for x, y in inside:
        if not br.interior_contains(pt(x, y)):
            raise SystemExit(f"fig3: sample ({x},{y}) should be inside I")
    for x, y in outside:
        if br.interior_contains(pt(x, y)):
            raise SystemExit(f"fig3: sample ({x},{y}) should be outside I")
    relations = {
        "P": list(br.P), "S": list(br.S), "s_of": expected,
        "interior_samples": {"inside": inside, "outside": outside},
    }
    return fam, relations


def fig4():
    """A (3,2)-clique system crossed by a curve s with signature (right, right)."""
    fam = validate_family([
        curve("p1", (1, 0), (2, "3.5"), ("5.5", 4), (7, 2), ("8.5", "1.5")),
        curve("q1", ("2.5", 0), (2, "1.5"), ("-0.5", "3.5"), (1, 5)),
        curve("s", ("3.5", 0), (4, 2), (5, "4.5"), ("3.5", "5.5"), ("2.5", "4.5"), (3, 3)),
        curve("q2", ("4.5", 0), (4, "1.5"), (1, "3.5"), ("-0.5", "5.5")),
        curve("p2", (6, 0), ("7.5", 2), (8, 4), ("6.5", "5.5"), ("4.5", 5), (4, "3.5")),
        curve("p3", (8, 0), (6, 2), (7, "3.5")),
    ])
    K1, K2 = ["p1", "p2", "p3"], ["q1", "q2"]
    cs = validate_clique_system([K1, K2], fam)
    a1, a2 = cs.anchors
    if (a1.ell, a1.r) != ("p1", "p2"):
        raise SystemExit(f"fig4: K1 anchors are {(a1.ell, a1.r)}, wanted (p1, p2)")
    if (a2.ell, a2.r) != ("q1", "q2"):
        raise SystemExit(f"fig4: K2 anchors are {(a2.ell, a2.r)}, wanted (q1, q2)")
    if cs.sides[(0, 1)] != "left":
        raise SystemExit(f"fig4: K2 side for K1 is {cs.sides[(0, 1)]}, wanted left")
    for q in K2:
        if side_for_clique(q, a1, fam) != "left":
            raise SystemExit(f"fig4: {q} not left for K1")
    if not crosses_system("s", cs, fam):
        raise SystemExit("fig4: s does not cross the system")
    sig = signature("s", cs, fam)
    if sig.bits != (1, 1):
        raise SystemExit(f"fig4: signature of s is {sig.bits}, wanted (1, 1)")
    relations = {
        "K1": K1, "K2": K2,
        "anchors": {"ell1": "p1", "r1": "p2", "ell2": "q1", "r2": "q2"},
        "left_for_K1": K2,
        "crossing_curve": "s",
        "sigma_s": [1, 1],
    }
    return fam, relations


def main():
    check_only = "--check-only" in sys.argv
    builders = {1: fig1, 2: fig2, 3: fig3, 4: fig4}
    for which, builder in builders.items():
        fam, relations = builder()
        print(f"figure {which}: all captioned relations hold "
              f"({len(fam)} curves)")
        if not check_only:
            FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
            fam_path = FIXTURE_DIR / f"figure{which}.json"
            rel_path = FIXTURE_DIR / f"figure{which}.relations.json"
            fam_path.write_text(json.dumps(family_to_dict(fam), indent=1) + "\n",
                                encoding="utf-8")
            rel_path.write_text(json.dumps(relations, indent=1) + "\n",
                                encoding="utf-8")
            print(f"  frozen -> {fam_path.name}, {rel_path.name}")


if __name__ == "__main__":
    main()
