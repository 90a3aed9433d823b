import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tilegraphs import (
    InconsistentInput,
    OutOfRange,
    Path,
    SizeLimit,
    SourceRangeMismatch,
    all_paths,
    build_skeleton,
    compose,
    enumerate_paths,
    factorize,
    fill_corner_br,
    fill_corner_ul,
    parse_tile,
    path_count,
    to_dot,
    translate_union,
    validate_basic_data,
)
from tilegraphs.checks import (
    check_associativity,
    check_commuting_squares,
    check_unique_factorisation,
)
from tilegraphs.lattice import box
from tilegraphs.limits import Limits

TRIPOD = parse_tile([(0, 0), (1, 0), (0, 1)])
LEDRAPPIER_TABLE = {"0": ["0", "1"], "1": ["1", "0"]}


def ledrappier_data():
    return validate_basic_data(TRIPOD, ["0", "1"], LEDRAPPIER_TABLE)


def staircase_data():
    # Five-cell staircase with parity bijections: the widest worked tile.
    tile = parse_tile([(0, 0), (1, 0), (2, 0), (1, 1), (0, 1)])
    table = {
        ",".join(p): (["0", "1"] if p.count("1") % 2 == 0 else ["1", "0"])
        for p in itertools.product("01", repeat=3)
    }
    return validate_basic_data(tile, ["0", "1"], table)


def tall_staircase_data():
    # Transposed staircase: exercises the upper-left fills on a tall tile.
    tile = parse_tile([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)])
    table = {
        ",".join(p): (["0", "1"] if p.count("1") % 2 == 0 else ["1", "0"])
        for p in itertools.product("01", repeat=3)
    }
    return validate_basic_data(tile, ["0", "1"], table)


@st.composite
def small_data(draw):
    """Random two-symbol data on a random tile of at most four cells."""
    pts = draw(
        st.sampled_from(
            [
                [(0, 0), (1, 0)],
                [(0, 0), (0, 1)],
                [(0, 0), (1, 0), (0, 1)],
                [(0, 0), (1, 0), (2, 0), (0, 1)],
                [(0, 0), (1, 0), (0, 1), (1, 1)],
            ]
        )
    )
    tile = parse_tile(pts)
    table = {}
    for pat in itertools.product("01", repeat=len(tile.reduced)):
        table[",".join(pat)] = list(draw(st.permutations(("0", "1"))))
    return validate_basic_data(tile, ["0", "1"], table)


class TestSkeleton:
    def test_ledrappier_degrees(self, ledrappier, ledrappier_sk):
        sk = ledrappier_sk
        assert len(sk.vertices) == 4
        for i in range(4):
            assert len(sk.out_neighbours("blue", i)) == 2
            assert len(sk.out_neighbours("red", i)) == 2

    def test_ledrappier_blue_out_neighbours_of_zero(self, ledrappier_sk):
        # The all-zero vertex reads 0 at e1, forcing u(0) = 0: exactly the
        # two vertices with pattern value 0.
        sk = ledrappier_sk
        targets = {
            tuple(sorted(sk.vertices[u].as_dict().items()))
            for u in sk.out_neighbours("blue", 0)
        }
        assert targets == {
            tuple(sorted({(0, 0): "0", (1, 0): "0", (0, 1): "0"}.items())),
            tuple(sorted({(0, 0): "0", (1, 0): "1", (0, 1): "1"}.items())),
        }

    def test_single_symbol_graph_is_two_loops(self):
        bd = validate_basic_data(TRIPOD, ["a"], {"a": ["a"]})
        sk = build_skeleton(bd)
        assert len(sk.vertices) == 1
        assert sk.blue == ((0, 0),)
        assert sk.red == ((0, 0),)

    def test_degenerate_graph_is_two_loops(self):
        dot_tile = parse_tile([(0, 0)])
        bd = validate_basic_data(dot_tile, ["0", "1"], None, distinguished="0")
        sk = build_skeleton(bd)
        assert len(sk.vertices) == 1
        assert sk.blue == ((0, 0),) and sk.red == ((0, 0),)

    @given(small_data())
    @settings(max_examples=25, deadline=None)
    def test_degree_counts_hold_generally(self, bd):
        sk = build_skeleton(bd)  # raises InvariantViolation on a bad count
        a = len(bd.alphabet)
        assert len(sk.blue) == len(sk.vertices) * a**bd.tile.c2
        assert len(sk.red) == len(sk.vertices) * a**bd.tile.c1

    def test_dot_export(self, ledrappier_sk):
        dot = to_dot(ledrappier_sk)
        assert dot.startswith("digraph skeleton {")
        assert dot.count("->") == 16
        assert dot.count("style=solid") == 8
        assert dot.count("style=dashed") == 8
        assert 'v0 [label="0|0"];' in dot


class TestFillCorners:
    def make_labels(self):
        # Valid windows at (0,0) and (1,1); the window at (1,0) misses its
        # bottom-right corner (2,0).
        return {
            (0, 0): "0",
            (1, 0): "1",
            (0, 1): "1",
            (1, 1): "0",
            (2, 1): "0",
            (1, 2): "0",
        }

    def test_fill_br_forced_value(self):
        bd = ledrappier_data()
        point, symbol = fill_corner_br(bd, self.make_labels(), (0, 1))
        # Window at (1,0): pattern reads 1, top reads 0, flip gives 1.
        assert point == (2, 0)
        assert symbol == "1"

    def test_fill_br_idempotent(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        labels[(2, 0)] = "1"
        assert fill_corner_br(bd, labels, (0, 1)) == ((2, 0), "1")

    def test_fill_br_inconsistent_window(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        labels[(0, 1)] = "0"  # breaks the window at (0,0)
        with pytest.raises(InconsistentInput):
            fill_corner_br(bd, labels, (0, 1))

    def test_fill_ul_forced_value(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        # Window at (0,1) misses its top corner (0,2); pattern reads 1,
        # corner reads 0, so the top must be the preimage of 0 under flip.
        point, symbol = fill_corner_ul(bd, labels, (0, 1))
        assert point == (0, 2)
        assert symbol == "1"

    def test_fill_ul_idempotent(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        labels[(0, 2)] = "1"
        assert fill_corner_ul(bd, labels, (0, 1)) == ((0, 2), "1")

    def test_fill_ul_inconsistent(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        labels[(1, 2)] = "1"  # breaks the window at (1,1)
        with pytest.raises(InconsistentInput):
            fill_corner_ul(bd, labels, (0, 1))

    def test_missing_support_is_an_error(self):
        bd = ledrappier_data()
        labels = self.make_labels()
        del labels[(2, 1)]
        with pytest.raises(ValueError):
            fill_corner_br(bd, labels, (0, 1))


class TestCompose:
    def test_degree_zero_identity(self, ledrappier, ledrappier_sk):
        v = ledrappier_sk.vertices[2]
        p = Path.from_vertex(ledrappier.tile, v)
        assert compose(ledrappier, p, p).labels == p.labels

    def test_blue_then_red_square(self, ledrappier, ledrappier_sk):
        sk = ledrappier_sk
        mu = sk.edge_path("blue", 0, 1)
        nu = sk.edge_path("red", 1, 3)
        lam = compose(ledrappier, mu, nu)
        assert lam.degree == (1, 1)
        assert lam.range_vertex == sk.vertices[0]
        assert lam.source_vertex == sk.vertices[3]
        assert factorize(lam, (0, 0), (1, 0)).labels == mu.labels
        assert factorize(lam, (1, 0), (1, 1)).labels == nu.labels

    def test_mismatched_windows_rejected(self, ledrappier, ledrappier_sk):
        sk = ledrappier_sk
        mu = sk.edge_path("blue", 0, 1)  # source vertex 1
        nu = sk.edge_path("red", 0, 1)   # range vertex 0
        with pytest.raises(SourceRangeMismatch):
            compose(ledrappier, mu, nu)

    def test_every_blue_red_pair_is_a_distinct_square(self, ledrappier, ledrappier_sk):
        sk = ledrappier_sk
        seen = {}
        for bv, bu in sk.blue:
            for rv, ru in sk.red:
                if rv != bu:
                    continue
                lam = compose(
                    ledrappier, sk.edge_path("blue", bv, bu), sk.edge_path("red", rv, ru)
                )
                seen[lam.labels] = (bv, bu, ru)
        assert len(seen) == 16

    def test_determinism(self, ledrappier, ledrappier_sk):
        sk = ledrappier_sk
        mu = sk.edge_path("blue", 2, 3)
        nu = sk.edge_path("red", 3, 2)
        assert compose(ledrappier, mu, nu).labels == compose(ledrappier, mu, nu).labels

    def test_staircase_tile_composition(self):
        # Five-cell staircase: the fill regions are non-rectangular unions;
        # every window of the composite must be a vertex.
        bd = staircase_data()
        sk = build_skeleton(bd)
        v = sk.vertices[0]
        for lam in enumerate_paths(bd, v, (1, 1), skeleton=sk):
            for m in box((0, 0), (1, 1)):
                assert bd.is_vertex(lam.window(m))

    def test_degenerate_composition(self):
        dot_tile = parse_tile([(0, 0)])
        bd = validate_basic_data(dot_tile, ["0", "1"], None, distinguished="1")
        p = enumerate_paths(bd, build_skeleton(bd).vertices[0], (2, 1))[0]
        lam = compose(bd, p, p)
        assert lam.degree == (4, 2)
        assert set(lam.as_dict().values()) == {"1"}


class TestFactorize:
    def test_full_slice_is_identity(self, ledrappier, ledrappier_sk):
        lam = all_paths(ledrappier, (2, 1), skeleton=ledrappier_sk)[7]
        assert factorize(lam, (0, 0), (2, 1)).labels == lam.labels

    def test_window_slice_is_vertex(self, ledrappier, ledrappier_sk):
        lam = all_paths(ledrappier, (1, 1), skeleton=ledrappier_sk)[3]
        v = factorize(lam, (1, 0), (1, 0))
        assert v.degree == (0, 0)
        assert v.labels == lam.window((1, 0)).labels

    def test_out_of_range(self, ledrappier, ledrappier_sk):
        lam = all_paths(ledrappier, (1, 0), skeleton=ledrappier_sk)[0]
        with pytest.raises(OutOfRange):
            factorize(lam, (0, 0), (2, 0))
        with pytest.raises(OutOfRange):
            factorize(lam, (1, 0), (0, 0))

    def test_unique_factorisation_degree_one_one(self, ledrappier, ledrappier_sk):
        # For every degree-(1,1) path and every split, exactly one
        # composable pair multiplies back to it.
        sk = ledrappier_sk
        paths = all_paths(ledrappier, (1, 1), skeleton=sk)
        for lam in paths:
            for m in ((1, 0), (0, 1)):
                n = (1 - m[0], 1 - m[1])
                hits = []
                for mu in all_paths(ledrappier, m, skeleton=sk):
                    for nu in all_paths(ledrappier, n, skeleton=sk):
                        if mu.source_vertex != nu.range_vertex:
                            continue
                        if compose(ledrappier, mu, nu).labels == lam.labels:
                            hits.append((mu, nu))
                assert len(hits) == 1
                assert hits[0][0].labels == factorize(lam, (0, 0), m).labels
                assert hits[0][1].labels == factorize(lam, m, (1, 1)).labels


class TestEnumeratePaths:
    def test_counts(self, ledrappier, ledrappier_sk):
        v = ledrappier_sk.vertices[1]
        assert len(enumerate_paths(ledrappier, v, (1, 0), skeleton=ledrappier_sk)) == 2
        assert len(enumerate_paths(ledrappier, v, (1, 1), skeleton=ledrappier_sk)) == 4
        assert enumerate_paths(ledrappier, v, (0, 0), skeleton=ledrappier_sk) == [
            Path.from_vertex(ledrappier.tile, v)
        ]

    def test_all_windows_are_vertices(self, ledrappier, ledrappier_sk):
        for v in ledrappier_sk.vertices:
            for lam in enumerate_paths(ledrappier, v, (2, 2), skeleton=ledrappier_sk):
                for m in box((0, 0), (2, 2)):
                    assert ledrappier.is_vertex(lam.window(m))

    def test_range_is_fixed(self, ledrappier, ledrappier_sk):
        v = ledrappier_sk.vertices[3]
        for lam in enumerate_paths(ledrappier, v, (2, 1), skeleton=ledrappier_sk):
            assert lam.range_vertex == v

    def test_cap(self, ledrappier, ledrappier_sk):
        v = ledrappier_sk.vertices[0]
        with pytest.raises(SizeLimit):
            enumerate_paths(
                ledrappier, v, (3, 3), skeleton=ledrappier_sk, limits=Limits(max_paths=63)
            )

    def test_path_count_formula(self, ledrappier):
        assert path_count(ledrappier, (3, 2)) == 2 ** (3 * 1 + 2 * 1)

    @given(small_data(), st.tuples(st.integers(0, 2), st.integers(0, 2)))
    @settings(max_examples=15, deadline=None)
    def test_enumeration_matches_counting(self, bd, n):
        sk = build_skeleton(bd)
        v = sk.vertices[0]
        assert len(enumerate_paths(bd, v, n, skeleton=sk)) == path_count(bd, n)

    @given(small_data(), st.tuples(st.integers(0, 2), st.integers(0, 1)))
    @settings(max_examples=15, deadline=None)
    def test_chain_enumeration_is_definitional(self, bd, n):
        # Edge-chain composition and window-filter backtracking must agree
        # on the full path set.
        from tilegraphs.checks import brute_force_paths

        sk = build_skeleton(bd)
        chained = {p.labels for p in all_paths(bd, n, skeleton=sk)}
        brute = {p.labels for p in brute_force_paths(bd, n)}
        assert chained == brute


class TestAxiomSuites:
    def test_commuting_squares_ledrappier(self, ledrappier, ledrappier_sk):
        assert check_commuting_squares(ledrappier, ledrappier_sk).ok

    def test_associativity_ledrappier(self, ledrappier, ledrappier_sk):
        result = check_associativity(ledrappier, sk=ledrappier_sk)
        assert result.ok
        assert "256" in result.detail

    def test_unique_factorisation_suite(self, ledrappier, ledrappier_sk):
        assert check_unique_factorisation(
            ledrappier, (1, 1), sk=ledrappier_sk
        ).ok

    def test_corrupted_table_fails_factorisation(self):
        # Bypass validation with a non-bijective row: the checker must
        # catch the breakage rather than report success.
        bd = ledrappier_data()
        bd.bijections[("1",)] = ("0", "0")
        bd.inverses[("1",)] = ("0", "0")
        result = check_unique_factorisation(bd, (1, 1))
        assert not result.ok
        assert result.counterexample is not None

    def test_corrupted_table_fails_the_suite(self):
        from tilegraphs.checks import run_axiom_suite

        bd = ledrappier_data()
        bd.bijections[("1",)] = ("0", "0")
        bd.inverses[("1",)] = ("0", "0")
        results = run_axiom_suite(bd, degree=(1, 1))
        failed = {r.name for r in results if not r.ok}
        assert "degree-counts" in failed
        assert "unique-factorisation" in failed

    def test_square_pairs_meet_four_partners(self, square, square_sk):
        # The square tile shares a diagonal cell between the two extreme
        # windows of a degree-(1,1) path, so only compatible pairs are
        # joined; the chain-count identity still holds.
        result = check_commuting_squares(square, square_sk)
        assert result.ok
        assert "4 of 8 partners" in result.detail

    @given(small_data())
    @settings(max_examples=15, deadline=None)
    def test_commuting_squares_hold_generally(self, bd):
        assert check_commuting_squares(bd, build_skeleton(bd)).ok

    @pytest.mark.parametrize("factory", [staircase_data, tall_staircase_data])
    def test_staircase_axiom_suites(self, factory):
        # Wide and tall staircases stress the non-rectangular fill regions
        # in both sweep directions.
        bd = factory()
        sk = build_skeleton(bd)
        assert check_commuting_squares(bd, sk).ok
        assert check_unique_factorisation(bd, (1, 1), sk=sk).ok
        assert check_associativity(bd, sk=sk).ok

    @given(small_data(), st.tuples(st.integers(0, 2), st.integers(0, 2)))
    @settings(max_examples=15, deadline=None)
    def test_slice_recompose_round_trip(self, bd, d):
        # Every split of every path recomposes to itself.
        sk = build_skeleton(bd)
        for lam in enumerate_paths(bd, sk.vertices[-1], d, skeleton=sk):
            for m in box((0, 0), d):
                mu = factorize(lam, (0, 0), m)
                nu = factorize(lam, m, d)
                assert compose(bd, mu, nu).labels == lam.labels


def test_translate_union_matches_path_domain(ledrappier, ledrappier_sk):
    lam = all_paths(ledrappier, (2, 2), skeleton=ledrappier_sk)[0]
    assert frozenset(lam.as_dict()) == translate_union(ledrappier.tile, (2, 2)).points
