import pytest

from linforest.canon import are_isomorphic
from linforest.families import (
    BadParams,
    FamilySpec,
    UnknownFamily,
    family_size_formulas,
    generate_family,
    parse_family_params,
)
from linforest.forests import LinearForest
from linforest.graphs import Graph, complete, degree_profile, empty_graph, join
from linforest.subgraphs import contains_linear_forest, longest_cycle, longest_path


def test_generate_examples():
    s72 = generate_family(FamilySpec("S", {"n": 7, "h": 2}))
    assert (s72.n, s72.edge_count()) == (7, 11)
    splus = generate_family(FamilySpec("SPLUS", {"n": 7, "h": 2}))
    assert splus.edge_count() == 12
    u31 = generate_family(FamilySpec("U3", {"h": 1}))
    assert (u31.n, u31.edge_count()) == (6, 6)
    t = generate_family(FamilySpec("TGLUE", {"t1": 1, "t2": 1, "h": 2}))
    assert (t.n, t.edge_count()) == (12, 17)
    hnla = generate_family(FamilySpec("HNLA", {"n": 7, "l": 6, "a": 2}))
    assert hnla.edge_count() == 12


def test_formula_examples():
    assert family_size_formulas(FamilySpec("HNLA", {"n": 7, "l": 6, "a": 2})) == (7, 12)
    assert family_size_formulas(FamilySpec("L", {"t": 3, "h": 2})) == (7, 9)
    # degenerate: S with n == h is a bare clique
    assert family_size_formulas(FamilySpec("S", {"n": 5, "h": 5})) == (5, 10)
    assert generate_family(FamilySpec("S", {"n": 5, "h": 5})) == complete(5)


def _grid_specs():
    specs = []
    for h in range(1, 5):
        for n in range(1, 21):
            if h <= n:
                specs.append(FamilySpec("S", {"n": n, "h": h}))
            if h <= n - 2:
                specs.append(FamilySpec("SPLUS", {"n": n, "h": h}))
            if (n - 1) % h == 0 and (n - 1) // h >= 1:
                specs.append(FamilySpec("L", {"t": (n - 1) // h, "h": h}))
            for t2 in range((n - 1) // (h + 1) + 1):
                rest = n - 1 - t2 * (h + 1)
                if rest >= 0 and rest % h == 0:
                    specs.append(FamilySpec("LGEN", {"t1": rest // h, "t2": t2, "h": h}))
                    if h >= 2 and t2 >= 1:
                        specs.append(FamilySpec("FGLUE", {"t1": rest // h, "t2": t2 - 1, "h": h}))
                    if h >= 2 and t2 >= 2:
                        specs.append(FamilySpec("TGLUE", {"t1": rest // h, "t2": t2 - 2, "h": h}))
            if n == 3 * h + 3:
                specs.append(FamilySpec("U3", {"h": h}))
        if h == 1:
            for n in range(7, 21):
                specs.append(FamilySpec("H1", {"n": n}))
            for n in range(9, 21):
                specs.append(FamilySpec("H2", {"n": n}))
            for n in range(4, 21, 2):
                specs.append(FamilySpec("K2MATCH", {"n": n}))
            for n in range(5, 21, 2):
                specs.append(FamilySpec("K3MATCH", {"n": n}))
            for l in range(2, 10):
                for a in range(0, l // 2 + 1):
                    for n in range(max(l - a, 1), 21, 3):
                        specs.append(FamilySpec("HNLA", {"n": n, "l": l, "a": a}))
    return specs


def test_closed_forms_match_generated_grid():
    specs = _grid_specs()
    assert len(specs) > 300
    for spec in specs:
        g = generate_family(spec)
        order, edges = family_size_formulas(spec)
        assert (g.n, g.edge_count()) == (order, edges), spec


def test_minimum_degrees():
    for h in range(1, 5):
        for n in range(2 * h, 21):
            assert generate_family(FamilySpec("S", {"n": n, "h": h})).min_degree() == h
        for t in range(1, (20 - 1) // h + 1):
            assert generate_family(FamilySpec("L", {"t": t, "h": h})).min_degree() == h
        assert generate_family(FamilySpec("U3", {"h": h})).min_degree() == h
    for n in range(6, 21, 2):
        assert generate_family(FamilySpec("K2MATCH", {"n": n})).min_degree() == 3
    for n in range(7, 21, 2):
        assert generate_family(FamilySpec("K3MATCH", {"n": n})).min_degree() == 4


def test_circumference_and_path_values():
    # the circumference claim needs h >= 2 (a star has no cycle at all)
    for h in (2, 3):
        for n in range(2 * h, 13):
            s = generate_family(FamilySpec("S", {"n": n, "h": h}))
            assert longest_cycle(s) == 2 * h
    for h in (1, 2, 3):
        for t in (2, 3, 4):
            if t * h + 1 <= 13:
                l = generate_family(FamilySpec("L", {"t": t, "h": h}))
                assert longest_path(l)[0] == 2 * h + 1


def test_exception_families_are_forest_free():
    # each family listed as a theorem exception avoids its forest (h <= 3 instances)
    cases = [
        (LinearForest((4, 4)), FamilySpec("S", {"n": 10, "h": 3})),
        (LinearForest((4, 4)), FamilySpec("L", {"t": 3, "h": 3})),
        (LinearForest((6, 3)), FamilySpec("K2MATCH", {"n": 10})),
        (LinearForest((4, 3)), FamilySpec("L", {"t": 4, "h": 2})),
        (LinearForest((7, 3)), FamilySpec("K2MATCH", {"n": 10})),
        (LinearForest((9, 3)), FamilySpec("K3MATCH", {"n": 11})),
        (LinearForest((5, 3)), FamilySpec("H1", {"n": 9})),
        (LinearForest((5, 3)), FamilySpec("H2", {"n": 9})),
        (LinearForest((5, 3)), FamilySpec("SPLUS", {"n": 9, "h": 2})),
        (LinearForest((3, 3)), FamilySpec("U3", {"h": 1})),
        (LinearForest((3, 3)), FamilySpec("LGEN", {"t1": 2, "t2": 2, "h": 1})),
        (LinearForest((5, 5)), FamilySpec("U3", {"h": 3})),
        (LinearForest((5, 5)), FamilySpec("LGEN", {"t1": 1, "t2": 1, "h": 3})),
        (LinearForest((5, 5)), FamilySpec("FGLUE", {"t1": 1, "t2": 0, "h": 3})),
        (LinearForest((5, 5)), FamilySpec("TGLUE", {"t1": 1, "t2": 0, "h": 3})),
        (LinearForest((3, 3, 2)), FamilySpec("L", {"t": 4, "h": 2})),
        (LinearForest((5, 4)), FamilySpec("L", {"t": 4, "h": 3})),
    ]
    for forest, spec in cases:
        g = generate_family(spec)
        assert contains_linear_forest(g, forest) is None, (forest, spec)


def test_bad_params():
    with pytest.raises(BadParams):
        generate_family(FamilySpec("U3", {"h": 0}))
    with pytest.raises(BadParams):
        generate_family(FamilySpec("H1", {"n": 6}))
    with pytest.raises(BadParams):
        generate_family(FamilySpec("K2MATCH", {"n": 7}))
    with pytest.raises(BadParams):
        generate_family(FamilySpec("FGLUE", {"t1": 1, "t2": 0, "h": 1}))
    with pytest.raises(BadParams):
        generate_family(FamilySpec("HNLA", {"n": 7, "l": 4, "a": 3}))
    with pytest.raises(BadParams):
        family_size_formulas(FamilySpec("S", {"n": 3, "h": 4}))
    with pytest.raises(UnknownFamily):
        FamilySpec("NOPE", {})
    with pytest.raises(BadParams):
        generate_family(FamilySpec("S", {"n": 5}))


def test_param_parsing():
    assert parse_family_params("n=7,h=2") == {"n": 7, "h": 2}
    assert parse_family_params("") == {}
    with pytest.raises(BadParams):
        parse_family_params("n=x")
    with pytest.raises(BadParams):
        parse_family_params("7")


def test_s_is_join_definition():
    for n, h in ((6, 2), (9, 3), (7, 1)):
        assert are_isomorphic(
            generate_family(FamilySpec("S", {"n": n, "h": h})),
            join(complete(h), empty_graph(n - h)),
        )
