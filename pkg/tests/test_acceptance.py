"""Acceptance suite: one test per criterion, each printing a PASS line with
the counts it verified.  Run with -s (or rely on the summary) to see them.

Tolerances are exact equality everywhere; the randomized suites allow zero
failures.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

from instances import bracket_with_probe, signature_triple, two_bracket_system
from oracles import brute_chi, brute_omega

from outerstring.bounds import explicit_chi_bound, f_bound, g2_bound
from outerstring.extract import bfs_supported, mcguinness
from outerstring.gen import (GenSpec, figure_fixture, random_grounded_polylines,
                             random_grounded_segments)
from outerstring.geom import curves_intersect, exterior_membership, pt
from outerstring.graph import (chromatic_number, clique_number,
                               intersection_graph)
from outerstring.structures import (Skeleton, build_bracket,
                                    check_signature_betweenness,
                                    crosses_system, extract_clique, is_supported,
                                    meets_exterior, meets_interior,
                                    side_for_clique, signature,
                                    supported_subfamily, validate_bracket_system,
                                    validate_clique_system,
                                    verify_bracket_crossing)

GOLDEN = Path(__file__).parent / "golden"


def report(line):
    print(f"\nACCEPTANCE {line}")


def family_for(seed, n_max):
    kind = "segments" if seed % 2 else "polylines"
    spec = GenSpec(kind=kind, n=2 + seed % (n_max - 1), seed=seed, grid=11)
    return (random_grounded_segments if kind == "segments"
            else random_grounded_polylines)(spec)


def test_criterion_1_solver_oracle_equivalence():
    """chi and omega match exhaustive brute force on 200 random families."""
    start = time.monotonic()
    checked = 0
    for seed in range(200):
        fam = family_for(seed, 8)
        g = intersection_graph(fam)
        w, clique = clique_number(g)
        chi, coloring = chromatic_number(g)
        assert w == brute_omega(g.ids, g.adj), f"omega mismatch at seed {seed}"
        assert chi == brute_chi(g.ids, g.adj), f"chi mismatch at seed {seed}"
        assert all(v in g.adj[u] for u in clique for v in clique if u != v)
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 60, f"criterion allows 60 s, took {elapsed:.1f} s"
    report(f"1: PASS solver oracle equivalence on {checked} families "
           f"({elapsed:.1f} s)")


def test_criterion_2_mcguinness_suite():
    """Block-partition lemma postconditions hold whenever the precondition
    does, for 100 families and all (alpha, beta) in {0,1}^2."""
    runs = 0
    for seed in range(100):
        fam = family_for(seed, 12)
        g = intersection_graph(fam)
        chi_F = chromatic_number(g)[0]

        def chi_of(ids):
            return chromatic_number(g.subgraph(ids))[0]

        for alpha in (0, 1):
            for beta in (0, 1):
                if not chi_F > 2 * alpha * (beta + 1):
                    continue
                H, _ = mcguinness(fam, alpha, beta)
                assert chi_of(H.ids()) > alpha, (seed, alpha, beta)
                ids = list(H.ids())
                for i, u in enumerate(ids):
                    for v in ids[i + 1:]:
                        if curves_intersect(fam[u], fam[v]):
                            gap = chi_of(fam.between(u, v).ids())
                            assert gap > beta, (seed, alpha, beta, u, v)
                runs += 1
    report(f"2: PASS mcguinness postconditions on {runs} qualifying runs, "
           f"0 failures")


def test_criterion_3_bfs_suite():
    """BFS layer lemma: chi(G) >= chi(F)/2 exactly, and external support
    verified curve by curve, whenever omega(F) >= 2."""
    runs = 0
    for seed in range(100):
        fam = family_for(seed, 12)
        g = intersection_graph(fam)
        if clique_number(g)[0] < 2:
            continue
        chi_F = chromatic_number(g)[0]
        G, d, _ = bfs_supported(fam)
        chi_G = chromatic_number(g.subgraph(G.ids()))[0]
        assert Fraction(chi_G, 1) >= Fraction(chi_F, 2), seed
        assert d >= 1
        inside = set(G.ids())
        for p in G.ids():
            supported = any(
                s not in inside and curves_intersect(fam[s], fam[p])
                and exterior_membership(G, fam[s])
                for s in fam.ids())
            assert supported, (seed, p)
        runs += 1
    assert runs >= 50, "corpus should produce many qualifying families"
    report(f"3: PASS bfs lemma on {runs} qualifying families, 0 failures")


def test_criterion_4_bracket_crossing():
    """Crossing lemma verified on 500 bracket+probe instances whose probe
    meets both the interior and the exterior."""
    verified = 0
    seed = 0
    while verified < 500:
        fam, bracket, probe = bracket_with_probe(seed)
        seed += 1
        probe_curve = fam[probe]
        if not (meets_interior(bracket, probe_curve)
                and meets_exterior(bracket, probe_curve)):
            continue
        assert verify_bracket_crossing(bracket, probe_curve) is True, seed - 1
        verified += 1
    report(f"4: PASS bracket crossing lemma on {verified} instances "
           f"(from {seed} seeds), 0 failures")


def test_criterion_5_signature_betweenness():
    """Signature betweenness verified on 200 qualifying triples."""
    for seed in range(200):
        fam, system, (s1, s2, s3) = signature_triple(seed)
        assert signature(s1, system, fam) == signature(s3, system, fam)
        assert check_signature_betweenness(system, s1, s2, s3, fam) is True, seed
    report("5: PASS signature betweenness on 200 triples, 0 failures")


def test_criterion_6_figure_fixtures():
    """Every captioned relation of the four figure fixtures reproduces
    exactly through the classifiers."""
    # Figure 1: external support of {p1..p7} by s1/s2.
    fam, rel = figure_fixture(1)
    G = fam.subfamily(rel["supported_family"])
    for p, supporters in rel["supported_by"].items():
        assert supporters, p
        recomputed = [s for s in ("s1", "s2")
                      if curves_intersect(fam[p], fam[s])
                      and exterior_membership(G, fam[s])]
        assert recomputed == supporters, p

    # Figure 2: supported and unsupported sets for the skeleton.
    fam, rel = figure_fixture(2)
    sk = Skeleton(rel["skeleton"]["u"], rel["skeleton"]["v"],
                  tuple(rel["skeleton"]["supports"])).validate(fam)
    assert list(supported_subfamily(fam, sk).ids()) == rel["supported"]
    for p in rel["unsupported"]:
        assert not is_supported(p, sk, fam)

    # Figure 3: first-hit assignments and interior samples.
    fam, rel = figure_fixture(3)
    bracket = build_bracket(rel["P"], rel["S"], fam)
    assert bracket.s_of == rel["s_of"]
    for x, y in rel["interior_samples"]["inside"]:
        assert bracket.interior_contains(pt(x, y))
    for x, y in rel["interior_samples"]["outside"]:
        assert not bracket.interior_contains(pt(x, y))

    # Figure 4: anchors, sides, crossing, signature.
    fam, rel = figure_fixture(4)
    system = validate_clique_system([rel["K1"], rel["K2"]], fam)
    a1 = system.anchors[0]
    assert (a1.ell, a1.r) == (rel["anchors"]["ell1"], rel["anchors"]["r1"])
    assert (system.anchors[1].ell, system.anchors[1].r) == \
        (rel["anchors"]["ell2"], rel["anchors"]["r2"])
    for q in rel["left_for_K1"]:
        assert side_for_clique(q, a1, fam) == "left"
    assert crosses_system(rel["crossing_curve"], system, fam) is True
    assert signature(rel["crossing_curve"], system, fam).bits == \
        tuple(rel["sigma_s"])
    report("6: PASS all captioned figure relations reproduced exactly")


def test_criterion_7_extract_clique_on_systems():
    """extract_clique returns two intersecting supports on 50 valid
    2-bracket systems."""
    for seed in range(50):
        fam, system = two_bracket_system(seed)
        validate_bracket_system(system, fam)
        chosen = extract_clique(system, 1, validate=False)
        assert len(chosen) == 2, seed
        assert curves_intersect(fam[chosen[0]], fam[chosen[1]]), seed
        assert chosen[0] in system[0].S and chosen[1] in system[1].S, seed
    report("7: PASS extract_clique on 50 two-bracket systems, 0 failures")


def test_criterion_8_bound_recurrences():
    """Frozen hand-derived recurrence values.

    By hand: beta steps for k=2, xi=1, alpha=0 are 14, 42, 98, so
    f = 16 * (98+3) = 1616; then g2 at m=2 is f(f(0)) + 1 where
    f(x) = 224x + 1616 in closed form, giving 224*1616 + 1616 + 1 = 363601.
    """
    assert f_bound(0, 2, 1) == 1616
    assert g2_bound(0, 0, 2, 1) == 363601
    assert explicit_chi_bound(1) == 1
    report("8: PASS bound recurrences (1616, 363601, 1) exact")


def _run_cli(*args):
    return subprocess.run([sys.executable, "-m", "outerstring.cli", *args],
                          capture_output=True)


def test_criterion_9_cli_determinism(tmp_path):
    """Every subcommand run twice on identical input yields byte-identical
    stdout and output files."""
    fam_path = tmp_path / "nest.json"
    fam_path.write_text(json.dumps({"curves": [
        {"id": "u", "vertices": [[0, 0], [0, 4], [6, 4]]},
        {"id": "s", "vertices": [[3, 0], [3, 5]]},
        {"id": "v", "vertices": [[6, 0], [6, 3], [-1, 3]]},
        {"id": "p", "vertices": [[2, 0], [2, 2], ["7/2", 2]]},
    ]}))
    fp = str(fam_path)
    invocations = [
        ("validate", fp),
        ("stats", fp),
        ("extract", "mcguinness", fp, "--alpha", "0", "--beta", "0"),
        ("extract", "bfs", fp),
        ("extract", "bracket-system", fp, "--k", "2", "--xi", "1"),
        ("extract", "clique-system", fp, "--t", "2", "--n", "0"),
        ("skeleton", fp, "--alpha", "0"),
        ("bounds", "--k", "2"),
        ("generate", "--kind", "segments", "--n", "6", "--seed", "5"),
    ]
    for args in invocations:
        first, second = _run_cli(*args), _run_cli(*args)
        assert first.stdout == second.stdout, args
        assert first.returncode == second.returncode, args

    out1, out2 = tmp_path / "r1.svg", tmp_path / "r2.svg"
    _run_cli("render", fp, "--out", str(out1), "--highlight", "s")
    _run_cli("render", fp, "--out", str(out2), "--highlight", "s")
    assert out1.read_bytes() == out2.read_bytes()

    # Rendering the frozen fixture still matches the golden file.
    from outerstring.gen import figure_fixture
    from outerstring.svg import render_family
    fam, _ = figure_fixture(3)
    assert render_family(fam).encode() == (GOLDEN / "figure3.svg").read_bytes()
    report("9: PASS CLI determinism, byte-identical reruns + golden render")
