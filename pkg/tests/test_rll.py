import math

import numpy as np
import pytest

from rmrll.gf2 import BitWord
from rmrll.rll import (
    RllCountTable,
    RllSpec,
    count_constrained,
    enumerative_decode,
    enumerative_encode,
    is_constrained,
    noiseless_capacity,
    payload_bits,
)

from oracles import brute_constrained_words, gap_ok, transfer_matrix_capacity


class TestSpec:
    def test_anchor_count(self):
        assert [RllSpec(d).anchor_count for d in range(9)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
        # defining property: smallest e with 2**e >= d + 1
        for d in range(40):
            e = RllSpec(d).anchor_count
            assert (1 << e) >= d + 1
            assert e == 0 or (1 << (e - 1)) < d + 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            RllSpec(-1)


class TestIsConstrained:
    def test_matches_direct_definition(self):
        rng = np.random.default_rng(21)
        for _ in range(300):
            n = int(rng.integers(0, 16))
            d = int(rng.integers(0, 5))
            bits = [int(b) for b in rng.integers(0, 2, size=n)]
            assert is_constrained(BitWord.from_bits(bits), RllSpec(d)) == gap_ok(bits, d)

    def test_examples(self):
        s = RllSpec(1)
        assert is_constrained(BitWord.from_string("10101"), s)
        assert not is_constrained(BitWord.from_string("1101"), s)
        assert is_constrained(BitWord.from_string("1001"), RllSpec(2))
        assert not is_constrained(BitWord.from_string("1001"), RllSpec(3))
        assert is_constrained(BitWord.from_string("1111"), RllSpec(0))
        assert is_constrained(BitWord.zeros(7), RllSpec(4))


class TestCounts:
    def test_matches_brute_force(self):
        for d in range(4):
            spec = RllSpec(d)
            for n in range(17):
                assert count_constrained(n, spec) == len(brute_constrained_words(n, d))

    def test_frozen_values(self):
        assert count_constrained(4, RllSpec(1)) == 8
        assert count_constrained(6, RllSpec(2)) == 13
        assert count_constrained(22, RllSpec(1)) == 46368
        assert count_constrained(0, RllSpec(3)) == 1
        assert count_constrained(64, RllSpec(0)) == 1 << 64

    def test_table_growth_is_consistent(self):
        tab = RllCountTable(RllSpec(2))
        assert tab.count(30) == tab.count(29) + tab.count(27)
        with pytest.raises(ValueError):
            tab.count(-1)

    def test_payload_bits(self):
        assert payload_bits(22, RllSpec(1)) == 15
        assert payload_bits(4, RllSpec(1)) == 3
        assert payload_bits(1, RllSpec(5)) == 1
        for n in range(1, 20):
            p = payload_bits(n, RllSpec(2))
            a = count_constrained(n, RllSpec(2))
            assert (1 << p) <= a < (1 << (p + 1))


class TestCapacity:
    def test_frozen_values(self):
        assert noiseless_capacity(RllSpec(0)) == 1.0
        assert abs(noiseless_capacity(RllSpec(1)) - 0.6942) < 1e-3
        assert abs(noiseless_capacity(RllSpec(2)) - 0.5515) < 1e-3

    def test_matches_spectral_radius(self):
        for d in range(6):
            assert abs(noiseless_capacity(RllSpec(d)) - transfer_matrix_capacity(d)) < 1e-9

    def test_matches_count_growth(self):
        for d in (1, 2):
            spec = RllSpec(d)
            growth = math.log2(count_constrained(64, spec)) / 64
            assert abs(growth - noiseless_capacity(spec)) < 0.02

    def test_decreasing_in_d(self):
        caps = [noiseless_capacity(RllSpec(d)) for d in range(6)]
        assert all(a > b for a, b in zip(caps, caps[1:]))


class TestEnumerative:
    def test_bijection_matches_lexicographic_order(self):
        for d in range(4):
            spec = RllSpec(d)
            for n in range(11):
                words = brute_constrained_words(n, d)
                assert count_constrained(n, spec) == len(words)
                for idx, bits in enumerate(words):
                    w = enumerative_encode(idx, n, spec)
                    assert tuple(w) == bits
                    assert enumerative_decode(w, spec) == idx

    def test_frozen_examples(self):
        s = RllSpec(1)
        assert enumerative_encode(7, 4, s).to01() == "1010"
        assert enumerative_encode(0, 4, s).to01() == "0000"
        assert enumerative_encode(3, 3, s).to01() == "100"
        assert enumerative_decode(BitWord.from_string("1010"), s) == 7

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError):
            enumerative_encode(8, 4, RllSpec(1))
        with pytest.raises(ValueError):
            enumerative_encode(-1, 4, RllSpec(1))

    def test_rejects_unconstrained_word(self):
        with pytest.raises(ValueError):
            enumerative_decode(BitWord.from_string("110"), RllSpec(1))

    def test_round_trip_larger_lengths(self):
        spec = RllSpec(3)
        n = 25
        total = count_constrained(n, spec)
        for idx in range(0, total, 37):
            w = enumerative_encode(idx, n, spec)
            assert is_constrained(w, spec)
            assert enumerative_decode(w, spec) == idx
