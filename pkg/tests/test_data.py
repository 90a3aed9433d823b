import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tilegraphs import (
    Alphabet,
    MissingPattern,
    NotBijective,
    NotInvertible,
    SizeLimit,
    UnknownSymbol,
    ValidationError,
    enumerate_vertices,
    import_prw,
    make_vertex,
    parse_tile,
    prw_vertex_labellings,
    validate_basic_data,
    validate_prw,
)
from tilegraphs.limits import Limits

TRIPOD = parse_tile([(0, 0), (1, 0), (0, 1)])
SQUARE = parse_tile([(0, 0), (1, 0), (0, 1), (1, 1)])

LEDRAPPIER_TABLE = {"0": ["0", "1"], "1": ["1", "0"]}
SQUARE_TABLE = {
    "0,0": ["0", "1"],
    "0,1": ["1", "0"],
    "1,0": ["1", "0"],
    "1,1": ["1", "0"],
}


def two_symbol_data(tile, table):
    return validate_basic_data(tile, ["0", "1"], table)


@st.composite
def permutation_tables(draw, tile, symbols=("0", "1")):
    table = {}
    for pat in itertools.product(symbols, repeat=len(tile.reduced)):
        table[",".join(pat)] = list(draw(st.permutations(symbols)))
    return table


class TestAlphabet:
    def test_rejects_duplicates(self):
        with pytest.raises(ValidationError):
            Alphabet(("a", "a"))

    def test_rejects_comma_symbols(self):
        with pytest.raises(ValidationError):
            Alphabet(("a,b",))

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbol):
            Alphabet(("a", "b")).index("c")


class TestValidateBasicData:
    def test_ledrappier_is_valid(self):
        bd = two_symbol_data(TRIPOD, LEDRAPPIER_TABLE)
        assert bd.f(("0",), "1") == "1"
        assert bd.f(("1",), "0") == "1"
        assert bd.f_inv(("1",), "1") == "0"

    def test_constant_row_is_not_bijective(self):
        with pytest.raises(NotBijective) as err:
            two_symbol_data(TRIPOD, {"0": ["0", "1"], "1": ["0", "0"]})
        assert "'0'" in str(err.value)

    def test_square_data_is_valid(self):
        bd = two_symbol_data(SQUARE, SQUARE_TABLE)
        assert bd.f(("0", "0"), "0") == "0"
        assert bd.f(("1", "1"), "0") == "1"

    def test_missing_pattern(self):
        with pytest.raises(MissingPattern):
            two_symbol_data(TRIPOD, {"0": ["0", "1"]})

    def test_unknown_symbol_in_image(self):
        with pytest.raises(UnknownSymbol):
            two_symbol_data(TRIPOD, {"0": ["0", "2"], "1": ["1", "0"]})

    def test_unknown_symbol_in_key(self):
        with pytest.raises(UnknownSymbol):
            two_symbol_data(TRIPOD, {"0": ["0", "1"], "2": ["1", "0"]})

    def test_vertex_cap(self):
        with pytest.raises(SizeLimit):
            validate_basic_data(
                TRIPOD, ["0", "1"], LEDRAPPIER_TABLE, limits=Limits(max_vertices=3)
            )

    def test_degenerate_wants_distinguished_symbol(self):
        dot = parse_tile([(0, 0)])
        with pytest.raises(ValidationError):
            validate_basic_data(dot, ["0", "1"], None)
        bd = validate_basic_data(dot, ["0", "1"], None, distinguished="1")
        assert bd.degenerate and bd.distinguished == "1"

    @given(permutation_tables(TRIPOD))
    def test_bijection_round_trip(self, table):
        bd = two_symbol_data(TRIPOD, table)
        for pat in bd.patterns():
            for a in bd.alphabet.symbols:
                assert bd.f_inv(pat, bd.f(pat, a)) == a
                assert bd.f(pat, bd.f_inv(pat, a)) == a


class TestMakeVertex:
    def test_ledrappier_flip_pattern(self):
        bd = two_symbol_data(TRIPOD, LEDRAPPIER_TABLE)
        v = make_vertex(bd, ("1",), "0")
        assert v.as_dict() == {(0, 0): "1", (0, 1): "0", (1, 0): "1"}

    def test_ledrappier_all_zero(self):
        bd = two_symbol_data(TRIPOD, LEDRAPPIER_TABLE)
        v = make_vertex(bd, ("0",), "0")
        assert set(v.as_dict().values()) == {"0"}

    def test_square_pattern_zero_one_top_one(self):
        # pattern (0, 1), top symbol 1: the flip bijection sends 1 to 0 at
        # the bottom-right corner.
        bd = two_symbol_data(SQUARE, SQUARE_TABLE)
        v = make_vertex(bd, ("0", "1"), "1")
        assert v.as_dict() == {
            (0, 0): "0",
            (1, 1): "1",
            (0, 1): "1",
            (1, 0): "0",
        }
        assert (v.top, v.corner) == ("1", "0")

    def test_flat_tile_corners(self):
        # Two-cell tile: the upper-left extreme corner is the origin.
        domino = parse_tile([(0, 0), (1, 0)])
        bd = validate_basic_data(domino, ["0", "1"], {"": ["1", "0"]})
        v = make_vertex(bd, (), "0")
        assert v.as_dict() == {(0, 0): "0", (1, 0): "1"}

    def test_distinct_inputs_distinct_vertices(self):
        bd = two_symbol_data(SQUARE, SQUARE_TABLE)
        seen = {make_vertex(bd, p, a).labels for p in bd.patterns() for a in "01"}
        assert len(seen) == 8


class TestEnumerateVertices:
    def test_ledrappier_count(self):
        assert len(enumerate_vertices(two_symbol_data(TRIPOD, LEDRAPPIER_TABLE))) == 4

    def test_square_count(self):
        assert len(enumerate_vertices(two_symbol_data(SQUARE, SQUARE_TABLE))) == 8

    def test_single_symbol_alphabet(self):
        bd = validate_basic_data(TRIPOD, ["a"], {"a": ["a"]})
        assert len(enumerate_vertices(bd)) == 1

    def test_cap(self):
        bd = two_symbol_data(SQUARE, SQUARE_TABLE)
        with pytest.raises(SizeLimit):
            enumerate_vertices(bd, limits=Limits(max_vertices=7))

    @given(permutation_tables(SQUARE))
    @settings(max_examples=20)
    def test_count_identity(self, table):
        bd = two_symbol_data(SQUARE, table)
        assert len(enumerate_vertices(bd)) == 2 ** (len(SQUARE.reduced) + 1)


class TestPrwImport:
    def test_ledrappier_rule(self):
        # Weight 1 everywhere, trace 0, modulus 2 forces
        # f_p(a) = p(0) + a mod 2: identity and flip.
        params = validate_prw(TRIPOD, 2, 0, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
        bd = import_prw(params)
        assert bd.bijections == {
            ("0",): ("0", "1"),
            ("1",): ("1", "0"),
        }

    def test_wide_tile_rule(self):
        # Weight zero at the origin: the bijection ignores the first
        # pattern slot, f_p(a) = p(e1) + a mod 2.
        tile = parse_tile([(0, 0), (1, 0), (2, 0), (0, 1)])
        params = validate_prw(
            tile, 2, 0, {(0, 0): 0, (1, 0): 1, (2, 0): 1, (0, 1): 1}
        )
        bd = import_prw(params)
        assert bd.bijections == {
            ("0", "0"): ("0", "1"),
            ("0", "1"): ("1", "0"),
            ("1", "0"): ("0", "1"),
            ("1", "1"): ("1", "0"),
        }

    def test_zero_divisor_corner_rejected(self):
        with pytest.raises(NotInvertible):
            validate_prw(TRIPOD, 4, 0, {(0, 0): 1, (1, 0): 2, (0, 1): 1})

    def test_degenerate_import(self):
        dot = parse_tile([(0, 0)])
        params = validate_prw(dot, 5, 3, {(0, 0): 2})
        bd = import_prw(params)
        # 2 * 4 = 8 = 3 mod 5
        assert bd.distinguished == "4"

    @pytest.mark.parametrize(
        "tile,q,t,w",
        [
            (TRIPOD, 2, 0, {(0, 0): 1, (1, 0): 1, (0, 1): 1}),
            (TRIPOD, 3, 2, {(0, 0): 2, (1, 0): 1, (0, 1): 2}),
            (SQUARE, 2, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 0}),
            (SQUARE, 4, 3, {(0, 0): 2, (1, 0): 3, (0, 1): 1, (1, 1): 2}),
        ],
    )
    def test_trace_identity_over_all_vertices(self, tile, q, t, w):
        params = validate_prw(tile, q, t, w)
        bd = import_prw(params)
        for v in enumerate_vertices(bd):
            total = sum(int(s) * params.w[p] for p, s in v.labels)
            assert total % q == t % q

    @pytest.mark.parametrize(
        "tile,q,t,w",
        [
            (TRIPOD, 2, 0, {(0, 0): 1, (1, 0): 1, (0, 1): 1}),
            (TRIPOD, 3, 1, {(0, 0): 0, (1, 0): 2, (0, 1): 1}),
            (SQUARE, 2, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 0}),
        ],
    )
    def test_import_matches_brute_force_filter(self, tile, q, t, w):
        params = validate_prw(tile, q, t, w)
        ours = {v.labels for v in enumerate_vertices(import_prw(params))}
        oracle = {
            tuple(sorted(d.items())) for d in prw_vertex_labellings(params)
        }
        assert ours == oracle

    @pytest.mark.parametrize(
        "tile,q,t,w",
        [
            (TRIPOD, 2, 0, {(0, 0): 1, (1, 0): 1, (0, 1): 1}),
            (parse_tile([(0, 0), (1, 0), (2, 0), (0, 1)]), 2, 0,
             {(0, 0): 0, (1, 0): 1, (2, 0): 1, (0, 1): 1}),
        ],
    )
    def test_import_skeleton_matches_brute_force_edge_for_edge(self, tile, q, t, w):
        # Build the skeleton twice: once through the imported bijections and
        # once directly from the trace-filtered labellings, then compare
        # vertex labellings and both edge sets.
        from tilegraphs import build_skeleton, edge_condition, vertex_from_labels

        params = validate_prw(tile, q, t, w)
        bd = import_prw(params)
        sk = build_skeleton(bd)
        oracle = [
            vertex_from_labels(tile, d) for d in prw_vertex_labellings(params)
        ]
        assert {v.labels for v in oracle} == {v.labels for v in sk.vertices}
        pos = {v.labels: i for i, v in enumerate(oracle)}
        for colour, axis in (("blue", 1), ("red", 2)):
            want = {
                (pos[v.labels], pos[u.labels])
                for v in oracle
                for u in oracle
                if edge_condition(tile, v, u, axis)
            }
            have = {
                (pos[sk.vertices[i].labels], pos[sk.vertices[j].labels])
                for i, j in sk.edges(colour)
            }
            assert want == have
