"""The clique-system pipeline: extending a clique system by one clique.

``find_system(F, shape, params)`` builds a clique system whose clique sizes
match ``shape`` by the constructions that establish their existence:

* appending a 2-clique runs the full skeleton-chain machinery (m nested
  skeleton-supported subfamilies, the block-partition lemma, the prefix
  system found in the resulting subfamily, the signature pigeonhole over
  support sequences, and the window narrowing that ends in an intersecting
  support pair with equal signatures);
* appending a t-clique (t >= 3) finds m = 2^n + 1 trailing (t-1)-cliques,
  pigeonholes their prefix signatures, and merges two of them around a
  shared anchor curve.

Entry thresholds use the surrogate values in BoundParams; structural needs
(a nonempty choice set, a crossing support) are checked exactly and end the
run with a named step-failure.  Chromatic measurements are logged at every
step so a failure report states what was available.
"""

from __future__ import annotations

from ..errors import InternalContradiction, PreconditionFailure
from ..geom import CurveFamily, curve_intersections, curves_intersect
from ..graph import ChiCache
from ..structures import (CliqueSystem, clique_system_to_dict, crosses_system,
                          signature, support_window, validate_clique_system)
from .core import find_skeleton_supported, mcguinness
from .report import BoundParams, ExtractionReport, StepFailure, StepRecord


def attempt_clique_system(F: CurveFamily, t: int, n: int,
                          params: BoundParams) -> ExtractionReport:
    """Try to build a ([2]*n, t)-clique system in F, reporting every step.

    The hypothesis system of length n is instantiated with 2-cliques, the
    smallest cliques the definitions admit.
    """
    if t < 2:
        raise PreconditionFailure("t >= 2", measured=t, threshold=2)
    shape = [2] * n + [t]
    report = ExtractionReport("structure-found")
    try:
        system = find_system(F, shape, params, report, label="")
        report.result = {"shape": shape, "system": clique_system_to_dict(system)}
    except StepFailure as fail:
        report.outcome = "step-failure"
        report.failure = fail.as_failure_dict()
        report.result = None
    return report


def find_system(F: CurveFamily, shape, params: BoundParams,
                report: ExtractionReport, label: str) -> CliqueSystem:
    """Build a clique system with the given clique sizes inside F."""
    shape = list(shape)
    if not shape:
        return CliqueSystem(())
    prefix, t = shape[:-1], shape[-1]
    if t == 2:
        return _extend_by_two(F, prefix, params, report, label)
    return _extend_by_merge(F, prefix, t, params, report, label)


def _extend_by_merge(F, prefix, t, params, report, label) -> CliqueSystem:
    """t >= 3: find (prefix, (t-1) x m) and merge two trailing cliques whose
    prefix signatures agree around a shared anchor."""
    n = len(prefix)
    m = 2 ** n + 1
    full = find_system(F, prefix + [t - 1] * m, params, report,
                       label=f"{label}[t={t}]")
    trailing = list(range(n, n + m))

    # Prefix signature of each trailing clique, read off the validated side
    # labels (every member of a clique shares them).
    def prefix_bits(j):
        return tuple(0 if full.sides[(i, j)] == "left" else 1 for i in range(n))

    pair = None
    for a in range(len(trailing)):
        for b in range(a + 1, len(trailing)):
            if prefix_bits(trailing[a]) == prefix_bits(trailing[b]):
                pair = (trailing[a], trailing[b])
                break
        if pair:
            break
    if pair is None:
        raise InternalContradiction(
            f"no two of {m} signatures over {n} bits coincide")
    ia, ib = pair
    side = full.sides[(ia, ib)]
    anchor = full.anchors[ia].ell if side == "left" else full.anchors[ia].r
    merged = sorted(full.anchors[ib].K | {anchor})
    for x in merged:
        for y in merged:
            if x < y and not curves_intersect(F[x], F[y]):
                raise InternalContradiction(
                    f"merged clique not a clique: {x!r},{y!r} disjoint")
    cliques = [sorted(full.anchors[i].K) for i in range(n)] + [merged]
    system = validate_clique_system(cliques, F)
    report.steps.append(StepRecord(
        f"{label}merge t={t}",
        {"merged_from": [ia, ib], "side": side},
        {"clique": merged, "anchor": [anchor]}))
    return system


def _extend_by_two(F, prefix, params, report, label) -> CliqueSystem:
    n = len(prefix)
    cache = ChiCache(F)
    if n == 0:
        # A (2)-clique system is just an intersecting pair with anchors.
        ids = F.ids()
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                if curves_intersect(F[ids[i]], F[ids[j]]):
                    system = validate_clique_system([[ids[i], ids[j]]], F)
                    report.steps.append(StepRecord(
                        f"{label}intersecting pair",
                        {"chi(F)": cache.chi(ids)},
                        {"clique": [ids[i], ids[j]]}))
                    return system
        raise StepFailure(f"{label}two intersecting curves exist (chi(F) > 1)",
                          measured=cache.chi(ids), threshold=1)

    m = 2 ** n + 1

    # Chain of m skeleton-supported subfamilies.
    chain = [F]
    skeletons = []
    for i in range(1, m + 1):
        found = find_skeleton_supported(chain[-1], params.alpha)
        if found is None:
            raise StepFailure(
                f"{label}skeleton chain step {i}: supported subfamily with chi > alpha",
                measured=0, threshold=params.alpha)
        sk, sup = found
        skeletons.append(sk)
        chain.append(sup)
        report.steps.append(StepRecord(
            f"{label}skeleton {i}",
            {"chi(F_i)": cache.chi(sup.ids())},
            {"u": [sk.u], "v": [sk.v], "supports": list(sk.supports),
             "F_i": list(sup.ids())}))
    F_m = chain[m]

    # Heavy-gap subfamily H inside F_m, then the prefix system found in H.
    try:
        H, _ = mcguinness(F_m, params.alpha, params.beta)
    except PreconditionFailure as exc:
        raise StepFailure(f"{label}mcguinness: chi(F_m) > 2*alpha*(beta+1)",
                          measured=exc.measured, threshold=exc.threshold)
    report.steps.append(StepRecord(
        f"{label}mcguinness", {"chi(H)": cache.chi(H.ids())}, {"H": list(H.ids())}))
    prefix_sys = find_system(H, prefix, params, report, label=f"{label}prefix/")

    last = prefix_sys.anchors[-1]
    ell, r = last.ell, last.r
    lo, hi = F[ell].base_x, F[r].base_x

    # Deterministic support map: s_i(p) is the support of skeleton i whose
    # usable initial part p meets earliest along p.
    def support_of(p_curve, sk):
        best = None
        for s in sk.supports:
            sc = F[s]
            window = support_window(sc, F[sk.u], F[sk.v])
            for on_p, on_s in curve_intersections(p_curve, sc):
                if not window.contains_param(on_s):
                    continue
                key = (on_p.segment, on_p.t, sc.base_x)
                if best is None or key < best[0]:
                    best = (key, s)
                break
        return None if best is None else best[1]

    window_ids = [c.id for c in F_m.between(ell, r)]
    chi_window = cache.chi(window_ids)
    report.steps.append(StepRecord(
        f"{label}window", {"chi(F_m(ell,r))": chi_window},
        {"ell": [ell], "r": [r]}))

    smap = {}
    for p in window_ids:
        sequence = []
        for sk in skeletons:
            s = support_of(F[p], sk)
            if s is None:
                raise InternalContradiction(
                    f"{p!r} is in F_m but not supported by an earlier skeleton")
            sequence.append(s)
        smap[p] = sequence

    G = [p for p in window_ids
         if all(lo < F[s].base_x < hi for s in smap[p])]
    report.steps.append(StepRecord(
        f"{label}supports inside window", {"chi(G)": cache.chi(G)}, {"G": G}))
    if not G:
        raise StepFailure(f"{label}chi(G) > 0 (supports inside the window)",
                          measured=0, threshold=0)

    # Signature sequences over the prefix system; pigeonhole the heaviest class.
    def sig_of(s):
        if not crosses_system(s, prefix_sys, F):
            raise StepFailure(
                f"{label}support {s!r} crosses the prefix system",
                measured=0, threshold=0)
        return tuple(signature(s, prefix_sys, F).bits)

    classes: dict = {}
    for p in G:
        seq = tuple(sig_of(s) for s in smap[p])
        classes.setdefault(seq, []).append(p)
    # Heaviest class; lexicographically first sequence breaks ties.
    seq, P = min(classes.items(), key=lambda kv: (-cache.chi(kv[1]), kv[0]))
    report.steps.append(StepRecord(
        f"{label}signature classes",
        {"classes": len(classes), "chi(P)": cache.chi(P),
         "nominal_threshold": 4 * params.xi},
        {"P": P, "sequence": [list(b) for b in seq]}))

    idx = None
    for a in range(m):
        for b in range(a + 1, m):
            if seq[a] == seq[b]:
                idx = (a, b)
                break
        if idx:
            break
    if idx is None:
        raise InternalContradiction(f"no repeat among {m} signatures of {n} bits")
    i_idx, j_idx = idx
    sigma = seq[i_idx]

    s_i_vals = sorted({smap[p][i_idx] for p in P}, key=lambda s: F[s].base_x)
    s_iL, s_iR = s_i_vals[0], s_i_vals[-1]
    report.steps.append(StepRecord(
        f"{label}pigeonhole", {"i": i_idx + 1, "j": j_idx + 1},
        {"s_i^L": [s_iL], "s_i^R": [s_iR], "sigma": [list(sigma)]}))
    if s_iL == s_iR:
        raise StepFailure(f"{label}window (s_i^L, s_i^R) is nonempty",
                          measured=0, threshold=0)

    inner_lo, inner_hi = F[s_iL].base_x, F[s_iR].base_x
    picked = None
    for p in sorted(P, key=lambda q: F[q].base_x):
        if not (inner_lo < F[p].base_x < inner_hi):
            continue
        sj = smap[p][j_idx]
        if inner_lo < F[sj].base_x < inner_hi:
            picked = p
            break
    if picked is None:
        raise StepFailure(
            f"{label}curve p in P(s_i^L,s_i^R) with s_j(p) inside the window",
            measured=0, threshold=0)
    s_star = smap[picked][j_idx]

    # s_j(p) lies in F_{j-1}, hence inside the skeleton-i supported family,
    # so it meets some support of skeleton i; take the first along s_j(p).
    s = support_of(F[s_star], skeletons[i_idx])
    if s is None:
        raise InternalContradiction(
            f"{s_star!r} not supported by skeleton {i_idx + 1} despite nesting")
    if s not in (s_iL, s_iR) and not (inner_lo < F[s].base_x < inner_hi):
        raise InternalContradiction(
            "the support met by s_j(p) escapes the (s_i^L, s_i^R) window")
    if tuple(signature(s, prefix_sys, F).bits) != sigma:
        raise InternalContradiction(
            "signature of the final support differs from the pigeonholed one")
    if tuple(signature(s_star, prefix_sys, F).bits) != sigma:
        raise InternalContradiction(
            "signature of s_j(p) differs from the pigeonholed one")
    if not curves_intersect(F[s], F[s_star]):
        raise InternalContradiction("final supports do not intersect")

    cliques = [sorted(a.K) for a in prefix_sys.anchors] + [sorted((s, s_star))]
    system = validate_clique_system(cliques, F)
    report.steps.append(StepRecord(
        f"{label}final pair", {}, {"clique": sorted((s, s_star)), "p": [picked]}))
    return system
