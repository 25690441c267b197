"""Address parsing, canonical forms, and the junction-point ambiguity."""

import pytest
from hypothesis import given

from gasket.codes import (
    Code,
    MalformedCode,
    NotAJunction,
    canonicalize,
    is_junction,
    parse_code,
    prepend,
    same_point,
    shift,
    twin,
)
from strategies import codes, junction_codes


class TestParse:
    def test_preperiod_and_period(self):
        assert parse_code("000(2)") == Code((0, 0, 0), (2,))

    def test_pure_periodic(self):
        assert parse_code("(1)") == Code((), (1,))

    def test_keeps_written_form(self):
        # parsing does not canonicalize
        assert parse_code("0(11)") == Code((0,), (1, 1))

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("01(3)", 3),   # symbol outside alphabet
            ("(3)", 1),
            ("", 0),        # no opening parenthesis at all
            ("012", 3),
            ("01()", 3),    # empty period
            ("01(2", 4),    # missing close
            ("01(2)x", 5),  # trailing garbage
            ("0 1(2)", 1),
        ],
    )
    def test_malformed_offsets(self, text, offset):
        with pytest.raises(MalformedCode) as exc:
            parse_code(text)
        assert exc.value.offset == offset

    def test_constructor_rejects_foreign_symbols(self):
        with pytest.raises(ValueError):
            Code((3,), (1,))
        with pytest.raises(ValueError):
            Code((), ())


class TestCanonicalize:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("0(11)", "0(1)"),      # period collapses to its primitive root
            ("012(02)", "01(20)"),  # rotation absorption shortens the preperiod
            ("(012)", "(012)"),
            ("00(0)", "(0)"),
            ("(001001)", "(001)"),
        ],
    )
    def test_examples(self, text, expected):
        assert str(canonicalize(parse_code(text))) == expected

    @given(codes())
    def test_idempotent(self, c):
        assert canonicalize(canonicalize(c)) == canonicalize(c)

    @given(codes())
    def test_expansion_fidelity(self, c):
        cc = canonicalize(c)
        for i in range(1, len(c.preperiod) + 3 * len(c.period) + 1):
            assert c.symbol_at(i) == cc.symbol_at(i)

    @given(codes())
    def test_emission_round_trips(self, c):
        assert parse_code(str(c)) == canonicalize(c)


class TestSymbolAt:
    @pytest.mark.parametrize(
        "text,i,symbol",
        [("000(2)", 3, 0), ("000(2)", 5, 2), ("(012)", 7, 0), ("(012)", 2, 1)],
    )
    def test_examples(self, text, i, symbol):
        assert parse_code(text).symbol_at(i) == symbol

    def test_one_based(self):
        with pytest.raises(ValueError):
            parse_code("(0)").symbol_at(0)

    @given(codes())
    def test_shift_drops_symbols(self, c):
        for n in range(0, len(c.preperiod) + 2 * len(c.period)):
            shifted = shift(c, n)
            for i in range(1, 8):
                assert shifted.symbol_at(i) == c.symbol_at(n + i)

    @given(codes())
    def test_prepend_inverts_shift(self, c):
        for t in (0, 1, 2):
            grown = prepend(t, c)
            assert grown.symbol_at(1) == t
            assert shift(grown, 1) == Code(c.preperiod, c.period)


class TestJunctions:
    @pytest.mark.parametrize(
        "text,expected",
        [("0(1)", True), ("(0)", False), ("(012)", False), ("01(2)", True), ("0(11)", True)],
    )
    def test_is_junction(self, text, expected):
        assert is_junction(parse_code(text)) is expected

    @pytest.mark.parametrize("text,expected", [("0(1)", "1(0)"), ("01(2)", "02(1)")])
    def test_twin_examples(self, text, expected):
        assert str(twin(parse_code(text))) == expected

    def test_twin_rejects_corners(self):
        with pytest.raises(NotAJunction):
            twin(parse_code("(0)"))

    @given(junction_codes())
    def test_twin_involution(self, c):
        assert twin(twin(c)) == canonicalize(c)

    @given(junction_codes())
    def test_at_most_two_representations(self, c):
        reps = {canonicalize(c), twin(c)}
        assert len(reps) == 2  # twin is always distinct from the canonical form


class TestSamePoint:
    @pytest.mark.parametrize(
        "a,b,expected",
        [
            ("0(1)", "1(0)", True),
            ("000(2)", "002(0)", True),
            ("(0)", "(1)", False),
            ("(01)", "(10)", False),  # distinct points despite rotated periods
        ],
    )
    def test_examples(self, a, b, expected):
        assert same_point(parse_code(a), parse_code(b)) is expected

    @given(codes())
    def test_reflexive(self, c):
        assert same_point(c, canonicalize(c))

    @given(codes(), codes())
    def test_symmetric(self, a, b):
        assert same_point(a, b) == same_point(b, a)

    @given(junction_codes(), junction_codes())
    def test_transitive_through_twins(self, a, b):
        # triples built from twin pairs exercise the nontrivial branch
        for x, y, z in [(a, twin(a), a), (twin(a), a, twin(a)), (a, twin(a), b)]:
            if same_point(x, y) and same_point(y, z):
                assert same_point(x, z)
