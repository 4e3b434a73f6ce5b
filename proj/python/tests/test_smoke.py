from fractions import Fraction
from itertools import permutations

import pytest

import peakalg


def brute_peaks(w):
    return [i for i in range(2, len(w)) if w[i - 2] < w[i - 1] > w[i]]


def test_peak_sets():
    assert peakalg.peak_set([2, 1, 4, 3, 5]) == [3]
    assert peakalg.peak_set([2, 1, 4, 3, 5], "left") == [1, 3]
    assert peakalg.peak_set([-2, 3, 4, -5, 1], "typeB") == [0, 3]
    for w in permutations(range(1, 6)):
        assert peakalg.peak_set(list(w)) == brute_peaks(w)


def test_descents():
    assert peakalg.descent_set([3, 1, 2]) == [1]
    assert peakalg.descent_set([-1, 2], "descentB") == [0]


def test_fibonacci_and_extensions():
    assert [peakalg.fibonacci(n) for n in range(6)] == [1, 1, 2, 3, 5, 8]
    assert sorted(peakalg.linear_extensions(3, [(1, 2)])) == sorted(
        list(w) for w in permutations(range(1, 4)) if w.index(1) < w.index(2))


def test_peak_function():
    assert peakalg.peak_function([], 2) == {(2,): 2, (1, 1): 4}
    f = peakalg.peak_function([], 2, basis="F")
    assert f == {(2,): 2, (1, 1): 2}
    assert all(isinstance(c, Fraction) for c in f.values())


def test_order_polynomial():
    coeffs = peakalg.enriched_order_polynomial([1, 2, 3])
    assert len(coeffs) == 4 and coeffs[-1] != 0
    assert coeffs[0] == 0
    # Only the peak set matters.
    assert peakalg.enriched_order_polynomial([3, 2, 1]) == coeffs
    assert peakalg.enriched_order_polynomial([1, 3, 2]) == peakalg.enriched_order_polynomial([2, 3, 1])
    assert peakalg.enriched_order_polynomial([1, 3, 2]) != coeffs


def test_structure_and_closure():
    table = peakalg.structure_constants(3)
    assert table[((2,), (2,), ())] == 1
    assert peakalg.closure(4)["closed"]
    b = peakalg.closure(3, "typeB")
    assert not b["closed"]
    assert b["witness"][2]


def test_idempotents():
    (j, e), = peakalg.idempotents(2)
    assert j == 1
    assert e == {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)}


def test_invalid_input():
    with pytest.raises(ValueError):
        peakalg.peak_set([1, 1, 2])
    with pytest.raises(ValueError):
        peakalg.peak_function([1, 2], 4)
