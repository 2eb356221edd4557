import threading

import pytest
from hypothesis import given, strategies as st

from hosoya.fib import FibTable, fib, lucas


def iterate(seed0, seed1, count):
    """Plain forward iteration of the second-order recurrence."""
    out = [seed0, seed1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


FIBS = iterate(0, 1, 1200)
LUCAS = iterate(2, 1, 200)


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (10, FIBS[10]), (-4, -3), (-1, 1), (-2, -1)])
def test_fib_examples(n, expected):
    assert fib(n) == expected


def test_fib_10_is_55():
    assert FIBS[10] == 55 == fib(10)


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 1), (5, LUCAS[5]), (-2, 3), (-1, -1), (-5, -11)])
def test_lucas_examples(n, expected):
    assert lucas(n) == expected


def test_fib_matches_iteration_to_1000():
    assert [fib(n) for n in range(1200)] == FIBS


def test_large_index_exact():
    # F(1000) has 209 digits; fast doubling must not lose any
    assert len(str(fib(1000))) == 209
    assert fib(1000) == FIBS[1000]


def test_negafibonacci_rule():
    for n in range(0, 60):
        assert fib(-n) == (-1) ** (n + 1) * FIBS[n]


def test_recurrence_through_zero():
    for n in range(-50, 51):
        assert fib(n + 2) == fib(n + 1) + fib(n)


def test_doubling_identities():
    for n in range(0, 501):
        assert FIBS[2 * n] == FIBS[n] * (2 * FIBS[n + 1] - FIBS[n])
        assert FIBS[2 * n + 1] == FIBS[n + 1] ** 2 + FIBS[n] ** 2
        assert fib(2 * n) == FIBS[2 * n]


def test_lucas_from_fibonacci():
    for n in range(-30, 31):
        assert lucas(n) == fib(n - 1) + fib(n + 1)
    for n in range(0, 31):
        assert lucas(-n) == (-1) ** n * LUCAS[n]


@given(st.integers(min_value=-3000, max_value=3000))
def test_table_agrees_with_doubling(n):
    assert FibTable()[n] == fib(n)


@given(st.integers(min_value=-500, max_value=500), st.integers(min_value=-500, max_value=500))
def test_addition_formula(m, n):
    # F(m+n) = F(m) F(n+1) + F(m-1) F(n), valid for all signed indices
    assert fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n)


def test_table_grows_monotonically():
    t = FibTable(4)
    assert len(t) == 4
    t[100]
    size = len(t)
    assert size > 100
    t.ensure(10)
    assert len(t) == size
    assert t.values(0, 8) == FIBS[:8]
    assert t.lucas(5) == 11


def test_table_concurrent_readers():
    t = FibTable(2)
    errors = []

    def work(offset):
        for n in range(offset, 2000, 7):
            if t[n] != fib(n):
                errors.append(n)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(7)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert not errors
