import pytest
from hypothesis import given
from hypothesis import strategies as st

from golden import TABLE_FIXED_N7_K3, TABLE_GUC_N8_K3, TABLE_INCREASING_N4
from unarycodes import analysis
from unarycodes.bitword import rotate_left, weight, word_from_text, word_to_text
from unarycodes.codecs import (
    CodeParams,
    CyclePosition,
    InvalidCodeword,
    InvalidParams,
    Scheme,
    ValueOutOfRange,
    base_pattern,
    decode,
    encode,
    max_value,
    position_to_value,
    validate_params,
    value_to_position,
)

GUC, FIXED, INC = Scheme.GUC, Scheme.FIXED_K, Scheme.INCREASING_K


def enc(scheme, n, k, v):
    return word_to_text(encode(scheme, CodeParams(n, k), v))


def dec(scheme, n, k, text):
    return decode(scheme, CodeParams(n, k), word_from_text(text))


@st.composite
def fixed_params(draw, max_n=16):
    n = draw(st.integers(4, max_n))
    k = draw(st.integers(2, n - 2))
    return CodeParams(n, k)


class TestValidateParams:
    def test_accepts_table_params(self):
        validate_params(GUC, CodeParams(8, 3))
        validate_params(FIXED, CodeParams(7, 3))
        validate_params(INC, CodeParams(4))
        validate_params(INC, CodeParams(1))

    @pytest.mark.parametrize(
        "scheme, n, k",
        [
            (GUC, 4, 3),
            (GUC, 8, 1),
            (FIXED, 8, 1),
            (GUC, 8, None),
            (GUC, 8, 7),
            (FIXED, 3, 1),
            (INC, 0, None),
            (GUC, 0, 0),
        ],
    )
    def test_rejects(self, scheme, n, k):
        with pytest.raises(InvalidParams):
            validate_params(scheme, CodeParams(n, k))

    def test_scheme_accepts_flag_strings(self):
        assert Scheme("guc") is GUC
        assert max_value("fixed", CodeParams(7, 3)) == 15

    def test_k1_would_collide(self):
        # lift the k >= 2 restriction and build the GUC words directly
        n, k = 6, 1
        words = {}
        collisions = []
        for j in range(n - k - 1):
            for r in range(n):
                pos = CyclePosition(j, r)
                w = analysis._candidate_word(GUC, CodeParams(n, k), pos)
                if w in words:
                    collisions.append((words[w], pos))
                words[w] = pos
        assert collisions


class TestMaxValue:
    def test_table_values(self):
        assert max_value(INC, CodeParams(4)) == 10
        assert max_value(FIXED, CodeParams(7, 3)) == 15
        assert max_value(GUC, CodeParams(8, 3)) == 33

    def test_guc_10_4_against_enumeration(self):
        params = CodeParams(10, 4)
        enumerated = analysis._search_table(GUC, params)
        assert len(enumerated) - 1 == 51
        assert max_value(GUC, params) == 51

    @given(fixed_params())
    def test_guc_dominates_fixed(self, params):
        n, k = params.n, params.k
        gap = max_value(GUC, params) - max_value(FIXED, params)
        assert gap == n * (k - 1) - k * k + 2
        assert gap > 0


class TestBasePattern:
    def test_examples(self):
        p83 = CodeParams(8, 3)
        assert word_to_text(base_pattern(GUC, p83, CyclePosition(1, 0))) == "00010111"
        assert word_to_text(base_pattern(GUC, p83, CyclePosition(4, 0, True))) == "10000111"
        assert word_to_text(base_pattern(FIXED, CodeParams(7, 3), CyclePosition(2, 0))) == "0100111"
        assert word_to_text(base_pattern(INC, CodeParams(4), CyclePosition(2, 0))) == "0011"

    @pytest.mark.parametrize(
        "pos",
        [CyclePosition(1, 3), CyclePosition(4, 0), CyclePosition(3, 0, True), CyclePosition(-1, 0)],
    )
    def test_rejects_bad_position(self, pos):
        with pytest.raises(ValueOutOfRange):
            base_pattern(GUC, CodeParams(8, 3), pos)

    def test_terminal_only_for_guc(self):
        with pytest.raises(ValueOutOfRange):
            base_pattern(FIXED, CodeParams(7, 3), CyclePosition(3, 0, True))


class TestValueToPosition:
    def test_worked_example(self):
        assert value_to_position(GUC, CodeParams(8, 4), 13) == CyclePosition(1, 4)

    def test_examples(self):
        assert value_to_position(GUC, CodeParams(8, 3), 1) == CyclePosition(0, 0)
        assert value_to_position(GUC, CodeParams(8, 3), 33) == CyclePosition(4, 0, True)
        assert value_to_position(FIXED, CodeParams(7, 3), 9) == CyclePosition(1, 3)
        assert value_to_position(INC, CodeParams(4), 7) == CyclePosition(2, 2)
        assert value_to_position(INC, CodeParams(4), 10) == CyclePosition(4, 0)

    def test_fixed_9_is_rotation_of_cycle_start(self):
        assert word_to_text(rotate_left(word_from_text(TABLE_FIXED_N7_K3[6]), 3)) == TABLE_FIXED_N7_K3[9]

    @pytest.mark.parametrize("v", [0, -1, 34])
    def test_out_of_range(self, v):
        with pytest.raises(ValueOutOfRange):
            value_to_position(GUC, CodeParams(8, 3), v)

    @pytest.mark.parametrize("scheme", [GUC, FIXED, INC])
    def test_inverse_of_position_to_value(self, scheme):
        params = CodeParams(9, None if scheme is INC else 3)
        for v in range(1, max_value(scheme, params) + 1):
            assert position_to_value(scheme, params, value_to_position(scheme, params, v)) == v


class TestEncode:
    @pytest.mark.parametrize(
        "scheme, n, k, v, expected",
        [
            (GUC, 8, 3, 13, "01110001"),
            (GUC, 8, 3, 17, "00100111"),
            (GUC, 8, 3, 0, "00000000"),
            (FIXED, 7, 3, 9, "0111001"),
            (INC, 4, None, 7, "1100"),
            (GUC, 10, 4, 1, "0000001111"),
        ],
    )
    def test_examples(self, scheme, n, k, v, expected):
        assert enc(scheme, n, k, v) == expected

    @pytest.mark.parametrize("v", [-1, 34])
    def test_out_of_range(self, v):
        with pytest.raises(ValueOutOfRange):
            encode(GUC, CodeParams(8, 3), v)

    def test_invalid_params(self):
        with pytest.raises(InvalidParams):
            encode(GUC, CodeParams(8, 1), 1)

    def test_golden_tables(self):
        assert [enc(INC, 4, None, v) for v in range(11)] == TABLE_INCREASING_N4
        assert [enc(FIXED, 7, 3, v) for v in range(16)] == TABLE_FIXED_N7_K3
        assert [enc(GUC, 8, 3, v) for v in range(34)] == TABLE_GUC_N8_K3

    @given(fixed_params())
    def test_guc_weight_law(self, params):
        n, k = params.n, params.k
        for v in range(max_value(GUC, params) + 1):
            w = weight(encode(GUC, params, v))
            assert w == (0 if v == 0 else k if v <= n else k + 1)

    @given(fixed_params())
    def test_guc_rotation_law(self, params):
        n, top = params.n, max_value(GUC, params)
        for j in range(n - params.k - 1):
            start = j * n + 1
            first = encode(GUC, params, start)
            for r in range(n):
                if start + r <= top - 1:
                    assert encode(GUC, params, start + r) == rotate_left(first, r)

    @given(fixed_params())
    def test_guc_cycle_count_law(self, params):
        n, k = params.n, params.k
        positions = [value_to_position(GUC, params, v) for v in range(1, max_value(GUC, params) + 1)]
        full = [p for p in positions if not p.terminal]
        assert len(full) == n * (n - k - 1)
        assert {p.cycle for p in full} == set(range(n - k - 1))
        assert sum(p.terminal for p in positions) == 1


class TestDecode:
    @pytest.mark.parametrize(
        "scheme, n, k, text, expected",
        [
            (GUC, 8, 3, "10001011", 16),
            (GUC, 8, 3, "00000000", 0),
            (GUC, 8, 3, "10000111", 33),
            (FIXED, 7, 3, "0011101", 13),
            (INC, 4, None, "1111", 10),
            (INC, 4, None, "0000", 0),
        ],
    )
    def test_examples(self, scheme, n, k, text, expected):
        assert dec(scheme, n, k, text) == expected

    @pytest.mark.parametrize(
        "scheme, n, k, text",
        [
            (GUC, 8, 3, "00001111"),  # rotated terminal
            (GUC, 8, 3, "00000011"),  # wrong weight
            (GUC, 8, 3, "01010101"),
            (GUC, 8, 3, "00110011"),  # two blocks of 2
            (GUC, 8, 3, "11111111"),
            (FIXED, 7, 3, "0001111"),  # terminal does not exist in fixed-k
            (FIXED, 7, 3, "1100001"),  # cycle 0 rotation 5 is past the cycle end
            (INC, 4, None, "1001"),  # block wraps
            (INC, 4, None, "0101"),
        ],
    )
    def test_invalid(self, scheme, n, k, text):
        with pytest.raises(InvalidCodeword):
            dec(scheme, n, k, text)

    def test_width_mismatch(self):
        with pytest.raises(InvalidCodeword):
            dec(GUC, 8, 3, "0000111")

    def test_golden_tables(self):
        assert [dec(INC, 4, None, t) for t in TABLE_INCREASING_N4] == list(range(11))
        assert [dec(FIXED, 7, 3, t) for t in TABLE_FIXED_N7_K3] == list(range(16))
        assert [dec(GUC, 8, 3, t) for t in TABLE_GUC_N8_K3] == list(range(34))

    @pytest.mark.parametrize("scheme", [GUC, FIXED])
    @given(params=fixed_params(), data=st.data())
    def test_roundtrip(self, scheme, params, data):
        v = data.draw(st.integers(0, max_value(scheme, params)))
        assert decode(scheme, params, encode(scheme, params, v)) == v

    @given(n=st.integers(1, 16), data=st.data())
    def test_roundtrip_increasing(self, n, data):
        params = CodeParams(n)
        v = data.draw(st.integers(0, max_value(INC, params)))
        assert decode(INC, params, encode(INC, params, v)) == v
