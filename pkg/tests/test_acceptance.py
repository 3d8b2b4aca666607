"""Acceptance gate: every stated criterion at its stated size and tolerance.

The n = 10 universe is generated once and streamed through all the sweeps
that need it in a single fused pass (module fixture ``mega10``); orders up
to 9 likewise share one pass each.  Every criterion prints one PASS line on
success (run with ``pytest -s`` to see them live).
"""

import os
import time

import pytest

from oracles import all_forests_up_to
from linforest.enumeration import EnumFilter, all_graphs_adj, enumerate_graphs
from linforest.families import FamilySpec, family_size_formulas, generate_family
from linforest.forests import LinearForest
from linforest.graphs import Graph, degree_profile
from linforest.recognizers import (
    family_template,
    recognize_exception,
    validate_match,
)
from linforest.subgraphs import (
    contains_linear_forest,
    contains_linear_forest_naive,
    monomorphism_exists,
    validate_certificate,
)
from linforest.verifier import classify, run_tasks, sharpness_demo, two_odd_threshold

pytestmark = pytest.mark.acceptance

JOBS = min(2, os.cpu_count() or 1)

EVEN_FORESTS = [(2, 2), (4, 2), (2, 2, 2), (4, 4), (6, 2), (4, 2, 2)]
ONE_ODD_FORESTS = [(3, 2), (4, 3), (5, 2), (3, 2, 2), (6, 3), (5, 4), (7, 2)]
CUT_FORESTS = [(3, 3), (5, 3), (3, 3, 2)]
TWO_CONN_H2_FORESTS = [(5, 3), (3, 3, 2)]

CONNECTED_CENSUS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]
ALL_GRAPH_CENSUS = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
CONNECTED_N10 = 11716571  # published census of connected graphs on 10 vertices


def _h(orders):
    return sum(t // 2 for t in orders) - 1


def _cfgs_for(n):
    cfgs = [("eg",), ("count", "connected", 0), ("lemma", "DIRAC", ()),
            ("lemma", "EG_PATH", ())]
    cfgs += [("sweep", "EVEN", o, _h(o)) for o in EVEN_FORESTS]
    cfgs += [("sweep", "ONE_ODD", o, _h(o)) for o in ONE_ODD_FORESTS]
    cfgs += [("sweep", "TWO_ODD_CUT", o, _h(o)) for o in CUT_FORESTS]
    cfgs += [("sweep", "TWO_ODD_2CONN", o, _h(o)) for o in TWO_CONN_H2_FORESTS]
    cfgs += [("lemma", "SMALL_P5P3", ()), ("lemma", "SMALL_P2_2P3", ())]
    return cfgs


MEGA_CFGS = (
    [("count", "connected", 0), ("lemma", "DIRAC", ())]
    + [("sweep", "EVEN", o, _h(o)) for o in EVEN_FORESTS]
    + [("sweep", "ONE_ODD", o, _h(o)) for o in ONE_ODD_FORESTS]
    + [("sweep", "TWO_ODD_CUT", o, _h(o)) for o in CUT_FORESTS]
    + [("sweep", "TWO_ODD_2CONN", o, _h(o)) for o in TWO_CONN_H2_FORESTS]
    + [("lemma", "SMALL_P5P3", ()), ("lemma", "SMALL_P2_2P3", ()),
       ("lemma", "LC_RANGE", (3,)), ("lemma", "NO_P3_OUT", (3,))]
)


@pytest.fixture(scope="module")
def small_passes():
    out = {}
    for n in range(1, 10):
        t0 = time.monotonic()
        cfgs = _cfgs_for(n)
        states = run_tasks(n, cfgs, jobs=JOBS if n >= 8 else 1)
        out[n] = dict(zip(cfgs, states))
        print(f"[acceptance] order {n} pass: {time.monotonic() - t0:.1f}s")
    return out


@pytest.fixture(scope="module")
def mega10():
    t0 = time.monotonic()
    states = run_tasks(10, MEGA_CFGS, jobs=JOBS, min_degree=1)
    print(f"[acceptance] order 10 fused pass: {(time.monotonic() - t0) / 60:.1f} min")
    return dict(zip(MEGA_CFGS, states))


def _sweep_state(passes, mega, theorem, orders, n):
    if n == 10:
        return mega[("sweep", theorem, orders, _h(orders))]
    return passes[n][("sweep", theorem, orders, _h(orders))]


def _accounted(st):
    return st["checked"] == (
        st["contains"] + sum(st["exceptions"].values())
        + st["violations"] + st["anomalies"]
    )


def test_criterion_1_eg_edge_bound(small_passes):
    total = 0
    for n in range(1, 10):
        st = small_passes[n][("eg",)]
        assert st["violations"] == 0, f"EG bound violated at n={n}: {st['viol_certs']}"
        assert st["checked"] == ALL_GRAPH_CENSUS[n - 1]
        total += st["checked"]
    print(f"criterion 1 (EG edge bound, all graphs n<=9, {total} graphs): PASS")


def test_criterion_2_dirac(small_passes, mega10):
    checked = 0
    for n in range(3, 10):
        st = small_passes[n][("lemma", "DIRAC", ())]
        assert st["violations"] == 0, st["viol_certs"]
        checked += st["checked"]
    st = mega10[("lemma", "DIRAC", ())]
    assert st["violations"] == 0, st["viol_certs"]
    checked += st["checked"]
    print(f"criterion 2 (Dirac circumference sweep n<=10, {checked} instances): PASS")


def test_criterion_3_even_theorem(small_passes, mega10):
    for orders in EVEN_FORESTS:
        h = _h(orders)
        for n in range(2 * h + 2, 11):
            st = _sweep_state(small_passes, mega10, "EVEN", orders, n)
            assert _accounted(st)
            assert st["violations"] == 0, (orders, n, st["viol_certs"])
    st = _sweep_state(small_passes, mega10, "EVEN", (2, 2), 6)
    assert st["checked"] == 112 and st["contains"] == 111
    assert st["exceptions"] == {"S": 1}
    print("criterion 3 (even-forest theorem sweeps to n=10; 2P2@6 = 112/111/S:1): PASS")


def test_criterion_4_one_odd_theorem(small_passes, mega10):
    for orders in ONE_ODD_FORESTS:
        h = _h(orders)
        for n in range(2 * h + 3, 11):
            st = _sweep_state(small_passes, mega10, "ONE_ODD", orders, n)
            assert _accounted(st)
            assert st["violations"] == 0, (orders, n, st["viol_certs"])
    st = _sweep_state(small_passes, mega10, "ONE_ODD", (6, 3), 10)
    assert st["exceptions"].get("K2MATCH", 0) >= 1
    # certify one such exception end to end
    g = generate_family(FamilySpec("K2MATCH", {"n": 10}))
    v = classify(LinearForest((6, 3)), g)
    assert v.kind == "exception" and v.match.kind == "K2MATCH"
    assert validate_match(g, v.match)
    print("criterion 4 (one-odd theorem sweeps to n=10; K2MATCH exception certified): PASS")


def test_criterion_5_two_odd_cut_vertex(small_passes, mega10):
    for orders in CUT_FORESTS:
        h = _h(orders)
        for n in range(2 * h + 4, 11):
            st = _sweep_state(small_passes, mega10, "TWO_ODD_CUT", orders, n)
            assert _accounted(st)
            assert st["violations"] == 0, (orders, n, st["viol_certs"])
    # exception witnesses re-validate (classify re-checks internally and raises
    # otherwise; exercise a sample across the hypothesis universe directly)
    seen = 0
    for g in enumerate_graphs(EnumFilter(n=7, min_degree=1, connectivity="has_cut_vertex")):
        v = classify(LinearForest((3, 3)), g)
        if v.kind == "exception":
            assert validate_match(g, v.match)
            seen += 1
    assert seen > 0
    print(f"criterion 5 (two-odd cut-vertex sweeps to n=10; {seen} witnesses re-validated at n=7): PASS")


def test_criterion_6_two_odd_2conn_substitute(small_passes, mega10):
    for n in (8, 9):
        for lemma in ("SMALL_P5P3", "SMALL_P2_2P3"):
            st = small_passes[n][("lemma", lemma, ())]
            assert st["checked"] > 0 and st["violations"] == 0, (lemma, n)
    for lemma in ("SMALL_P5P3", "SMALL_P2_2P3"):
        st = mega10[("lemma", lemma, ())]
        assert st["checked"] > 0 and st["violations"] == 0, lemma
    st = mega10[("lemma", "LC_RANGE", (3,))]
    assert st["violations"] == 0, st["viol_certs"]
    assert st["checked"] > 0
    st = mega10[("lemma", "NO_P3_OUT", (3,))]
    assert st["violations"] == 0, st["viol_certs"]

    # anomaly accounting: below the reachable small-order threshold the
    # 2-connected statement has honest anomalies, never violations...
    st7 = small_passes[7][("sweep", "TWO_ODD_2CONN", (5, 3), 2)]
    assert st7["violations"] == 0 and st7["anomalies"] > 0
    assert _accounted(st7)
    assert 7 < two_odd_threshold(2)
    # ...and from n = 8 (where the small-order lemma bites) they vanish
    for n in (8, 9, 10):
        for orders in TWO_CONN_H2_FORESTS:
            st = _sweep_state(small_passes, mega10, "TWO_ODD_2CONN", orders, n)
            assert st["violations"] == 0 and st["anomalies"] == 0, (orders, n)
    print(
        "criterion 6 (two-odd 2-connected substitute: lemma sweeps 0 violations; "
        f"{st7['anomalies']} below-threshold anomalies at n=7 kept apart from violations): PASS"
    )


def test_criterion_7_oracle_equivalences():
    t0 = time.monotonic()
    pairs = 0
    for n in range(1, 8):
        forests = [LinearForest(o) for o in all_forests_up_to(n)]
        for adj in all_graphs_adj(n):
            g = Graph.from_adj(adj)
            for f in forests:
                cert = contains_linear_forest(g, f)
                assert (cert is not None) == contains_linear_forest_naive(g, f), (g, f)
                if cert is not None:
                    assert validate_certificate(g, f, cert)
                pairs += 1
    recog = 0
    for n in range(1, 8):
        for adj in all_graphs_adj(n):
            g = Graph.from_adj(adj)
            for h in range(0, n + 1):
                want = monomorphism_exists(g, family_template(FamilySpec("S", {"n": n, "h": min(h, n)})))
                assert (recognize_exception(g, "S", h) is not None) == want
                recog += 1
                if h <= n - 2:
                    want = monomorphism_exists(g, family_template(FamilySpec("SPLUS", {"n": n, "h": h})))
                    assert (recognize_exception(g, "SPLUS", h) is not None) == want
                    recog += 1
            if n >= 4 and n % 2 == 0:
                want = monomorphism_exists(g, family_template(FamilySpec("K2MATCH", {"n": n})))
                assert (recognize_exception(g, "K2MATCH", None) is not None) == want
                recog += 1
            if n >= 5 and n % 2 == 1:
                want = monomorphism_exists(g, family_template(FamilySpec("K3MATCH", {"n": n})))
                assert (recognize_exception(g, "K3MATCH", None) is not None) == want
                recog += 1
            for h in (1, 2, 3):
                mono = any(
                    monomorphism_exists(
                        g, family_template(FamilySpec("LGEN", {"t1": t1, "t2": t2, "h": h}))
                    )
                    for t2 in range((n - 1) // (h + 1) + 1)
                    for t1 in [(n - 1 - t2 * (h + 1)) // h]
                    if n - 1 - t2 * (h + 1) >= 0 and (n - 1 - t2 * (h + 1)) % h == 0
                )
                assert (recognize_exception(g, "LGEN", h) is not None) == mono
                recog += 1
    print(
        f"criterion 7 (oracle equivalences n<=7: {pairs} containment pairs, "
        f"{recog} recognizer pairs, 100% agreement, {time.monotonic() - t0:.0f}s): PASS"
    )


def test_criterion_8_census(small_passes, mega10):
    for n in range(1, 10):
        got = small_passes[n][("count", "connected", 0)]["checked"]
        assert got == CONNECTED_CENSUS[n - 1], (n, got)
    got10 = mega10[("count", "connected", 0)]["checked"]
    assert got10 == CONNECTED_N10, got10
    print(f"criterion 8 (connected census n=1..9 exact; n=10 = {got10} matches too): PASS")


def test_criterion_9_family_formulas():
    from test_families import _grid_specs

    specs = _grid_specs()
    for spec in specs:
        g = generate_family(spec)
        order, edges = family_size_formulas(spec)
        assert (g.n, g.edge_count()) == (order, edges), spec
    fixed = [
        (FamilySpec("S", {"n": 7, "h": 2}), 7, 11),
        (FamilySpec("SPLUS", {"n": 7, "h": 2}), 7, 12),
        (FamilySpec("U3", {"h": 1}), 6, 6),
        (FamilySpec("HNLA", {"n": 7, "l": 6, "a": 2}), 7, 12),
        (FamilySpec("TGLUE", {"t1": 1, "t2": 1, "h": 2}), 12, 17),
    ]
    for spec, order, edges in fixed:
        assert family_size_formulas(spec) == (order, edges)
        g = generate_family(spec)
        _, delta, measured = degree_profile(g)
        assert (g.n, measured) == (order, edges)
    print(f"criterion 9 (family closed forms over {len(specs)} grid specs): PASS")


def test_criterion_10_sharpness():
    for case in ("remark1a", "remark1b", "remark2a", "remark2b"):
        rep = sharpness_demo(case)
        assert rep["passed"], rep
        assert rep["delta"] == rep["delta_expected"]
        assert not rep["forest_embeds"]
        assert not any(f["matched"] for f in rep["exception_families"])
    print("criterion 10 (all four sharpness constructions certified): PASS")
