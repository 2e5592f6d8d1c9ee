"""Random graph generator, the truncation family, and the property runner."""

import pytest

from graphkt.catalog import CATALOG, load, verify_catalog
from graphkt.graphs import INF, singular_vertices
from graphkt.harness import (
    RandomGraphParams,
    derive_seed,
    ea_family,
    ea_table,
    random_graph,
    run_properties,
)
from graphkt.intlinalg import AbelianGroup, IntMatrix
from graphkt.ktheory import k_groups


class TestEaFamily:
    def test_structure_at_five(self):
        g = ea_family(5)
        assert g.vertices == ("1", "2", "3", "4", "5")
        assert g.declared_singular == frozenset({"1", "2"})
        expected = {
            ("1", "1"), ("2", "2"),
            ("1", "3"), ("1", "4"), ("1", "5"),
            ("2", "3"), ("2", "4"), ("2", "5"),
            ("3", "3"), ("3", "1"),
            ("4", "4"), ("4", "2"),
            ("5", "5"), ("5", "3"),
        }
        assert set(g.edges) == expected
        assert all(m == 1 for m in g.edges.values())

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            ea_family(4)

    def test_hand_checked_stacked_matrix_at_six(self):
        # derived by hand from the edge rule: column for regular vertex j
        # carries a single 1, in the row of vertex j-2
        expected = IntMatrix.from_rows(
            [
                [0, 0, 1, 0],
                [0, 0, 0, 1],
                [0, 0, 0, 0],
                [0, 0, 0, 0],
                [1, 0, 0, 0],
                [0, 1, 0, 0],
            ]
        )
        r = k_groups(ea_family(6))
        assert r.stacked_matrix == expected
        assert r.k0 == AbelianGroup(2)
        assert r.k1 == AbelianGroup(0)

    def test_invariants_for_all_truncations(self):
        for n, k0, k1 in ea_table(40):
            assert k0 == AbelianGroup(2), n
            assert k1 == AbelianGroup(0), n

    def test_one_one_per_column(self):
        for n in (5, 9, 17):
            m = k_groups(ea_family(n)).stacked_matrix
            for j in range(m.cols):
                col = [m[i, j] for i in range(m.rows)]
                assert sorted(col) == [0] * (m.rows - 1) + [1]


class TestRandomGraph:
    def test_zero_density_gives_sinks(self):
        g = random_graph(RandomGraphParams(seed=3, density=0.0))
        assert singular_vertices(g) == list(g.vertices)
        assert not g.edges

    def test_everything_infinite_is_corollary_regime(self):
        g = random_graph(
            RandomGraphParams(seed=5, density=1.0, infinite_probability=1.0,
                              sink_probability=0.0, min_vertices=3)
        )
        assert singular_vertices(g) == list(g.vertices)
        assert all(m is INF for m in g.edges.values())

    def test_deterministic_in_seed(self):
        p = RandomGraphParams(seed=424242)
        assert random_graph(p) == random_graph(p)
        assert random_graph(p) != random_graph(RandomGraphParams(seed=424243))

    def test_at_least_one_vertex(self):
        for s in range(30):
            assert len(random_graph(RandomGraphParams(seed=s)).vertices) >= 1

    def test_validates_params(self):
        with pytest.raises(ValueError):
            random_graph(RandomGraphParams(min_vertices=0))
        with pytest.raises(ValueError):
            random_graph(RandomGraphParams(density=1.5))

    def test_derive_seed_is_stable(self):
        assert derive_seed(1, 0) == derive_seed(1, 0)
        assert derive_seed(1, 0) != derive_seed(1, 1)
        assert derive_seed(1, 0) != derive_seed(2, 0)


class TestRunProperties:
    def test_small_run_is_clean(self):
        report = run_properties(RandomGraphParams(seed=7), 40)
        assert report.ok
        for name in ("P1", "P2", "P3", "P4", "P5", "P6"):
            assert report.properties[name].failed == 0
        assert report.properties["P1"].passed == 40
        assert report.properties["P2"].passed == 40
        # stabilization must actually be exercised
        assert report.properties["P5"].passed > 20

    def test_failures_carry_reproduction_seeds(self):
        report = run_properties(RandomGraphParams(seed=11), 25)
        for st in report.properties.values():
            for f in st.failures:
                assert "seed" in f and "graph" in f

    def test_loop_only_graph_skips_p5(self):
        # a graph with no singular vertices has nothing to desingularize
        report = run_properties(
            RandomGraphParams(seed=13, min_vertices=1, max_vertices=1,
                              density=1.0, infinite_probability=0.0,
                              sink_probability=0.0),
            5,
        )
        assert report.properties["P5"].skipped == 5
        assert report.properties["P4"].passed == 5


class TestCatalog:
    def test_verify_catalog_is_clean(self):
        assert verify_catalog() == []

    def test_catalog_covers_the_expected_families(self):
        names = {e.name for e in CATALOG}
        assert {"o2", "o3", "o4", "o5", "oinf", "sink1", "sink2", "sink3",
                "inf_to_loop"} <= names
        assert {f"ea{n}" for n in range(5, 11)} <= names

    def test_loading_a_catalog_graph(self):
        g = load("oinf")
        assert g.multiplicity("v", "v") is INF
