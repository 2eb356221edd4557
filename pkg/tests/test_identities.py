import pytest
from hypothesis import given, settings, strategies as st

from hosoya import identities, oracle
from hosoya.errors import DomainError
from hosoya.identities import (
    CATALOG,
    braid_closed_paper,
    braid_closed_value,
    column_sum_closed,
    column_sum_paper,
    describe_grid,
    iter_grid,
    sweep,
    verify,
)

FIBS = [0, 1]
while len(FIBS) < 300:
    FIBS.append(FIBS[-1] + FIBS[-2])


def fib(n):
    return FIBS[n] if n >= 0 else (-1) ** (n + 1) * FIBS[-n]


def lucas(n):
    return fib(n - 1) + fib(n + 1)


@pytest.fixture(scope="module")
def table():
    return oracle.build(200)


def test_catalog_has_every_row():
    assert len(CATALOG) == 23
    corrected = {i for i, row in CATALOG.items() if row.status == "corrected"}
    assert corrected == {"RECTANGLE_SHIFT", "RECTANGLE_CLOSED", "ODD_RUN_LENGTH", "ZIGZAG_PARALLEL",
                         "ZIGZAG_COLUMN_SUM", "BRAID_CLOSED", "TRIANGLE_CONFIG"}
    for row in CATALOG.values():
        assert (row.paper is not None) == (row.status == "corrected")


def test_verify_cassini():
    rep = verify("CASSINI", {"k": 3})
    assert rep.holds and rep.lhs == rep.rhs == 1


def test_verify_catalan_at_k_equals_j():
    rep = verify("CATALAN", {"k": 5, "j": 5})
    assert rep.holds and rep.lhs == 25


def test_verify_rectangle_shift_reports_paper_value():
    rep = verify("RECTANGLE_SHIFT", {"k": 6, "j": 1, "i": 1, "r": 1})
    assert rep.members == [2, 2]
    assert rep.paper_members == [2, -2]
    assert rep.holds and rep.paper_holds is False
    assert "fails" in rep.note


def test_verify_johnson_chain():
    rep = verify("JOHNSON", {"k": 5, "j": 3, "r": 6, "i": 2, "l": 1})
    assert rep.members == [2, 2, 2]
    assert rep.rhs == [2, 2]


def test_verify_triangle_config_paper_witness():
    rep = verify("TRIANGLE_CONFIG", {"n": 4, "r": 2}, paper_form=True)
    assert not rep.holds and rep.members == [3 + 1 - 4, 1]
    assert verify("TRIANGLE_CONFIG", {"n": 4, "r": 2}).holds


def test_verify_domain_violation():
    with pytest.raises(DomainError, match="0 <= j <= k - 1"):
        verify("RUNG_SUM", {"k": 3, "j": 3})
    with pytest.raises(DomainError, match="missing"):
        verify("RUNG_SUM", {"k": 3})
    with pytest.raises(DomainError, match="unknown"):
        verify("RUNG_SUM", {"k": 3, "j": 1, "z": 0})
    with pytest.raises(KeyError):
        verify("NOPE", {})


def test_hockey_stick_cases_are_labelled():
    assert verify("HOCKEY_STICK", {"k": 4, "n": 2, "side": "left"}).note == "case 1"
    assert verify("HOCKEY_STICK", {"k": 4, "n": 2, "side": "right"}).note == "case 2"
    assert verify("HOCKEY_STICK", {"k": 4, "n": 3, "side": "left"}).note == "case 3"
    assert verify("HOCKEY_STICK", {"k": 4, "n": 3, "side": "right"}).note == "case 4"
    center = verify("HOCKEY_STICK", {"k": 2, "n": 3, "side": "left"})
    assert center.note == "case 5" and center.members == [6, 6, 6]


def test_sweep_small_grid():
    rep = sweep("RUNG_SUM", {"k": "1..10", "j": "0..k-1"})
    assert rep.instances == 55 and rep.holds
    assert rep.grid == {"k": "1..10", "j": "0..k-1"}


def test_sweep_skips_out_of_domain_points():
    rep = sweep("CATALAN", {"k": "1..5", "j": "0..10"})
    assert rep.instances == sum(k + 1 for k in range(1, 6))


def test_sweep_is_deterministic():
    a = sweep("TRIANGLE_CONFIG", {"n": "1..20", "r": "1..n"}, paper_form=True)
    b = sweep("TRIANGLE_CONFIG", {"n": "1..20", "r": "1..n"}, paper_form=True)
    assert a.failures == b.failures and a.failures
    assert a.failures == sorted(a.failures, key=lambda d: (d["n"], d["r"]))


def test_sweep_needs_every_range():
    with pytest.raises(DomainError, match="no range"):
        sweep("RUNG_SUM", {"k": "1..3"})


def test_grid_expansion():
    pts = list(iter_grid({"a": "1..3", "b": "a..3", "s": "left,right"}))
    assert len(pts) == 12
    assert pts[0] == {"a": 1, "b": 1, "s": "left"}
    assert list(iter_grid({"x": "2", "y": "x*3"})) == [{"x": 2, "y": 6}]
    assert describe_grid({"a": range(0, 5), "b": [1, 2]}) == {"a": "0..4", "b": "1,2"}
    with pytest.raises(ValueError, match="unbound"):
        list(iter_grid({"a": "0..b"}))


@pytest.mark.parametrize("ident", sorted(CATALOG))
def test_catalog_agrees_under_oracle(ident, table):
    # small corners of every grid, evaluated from the recursion-built table
    small = {
        "RUNG_SUM": {"k": "1..30", "j": "0..k-1"},
        "RECTANGLE_SHIFT": {"k": "0..20", "j": "0..k", "i": "0..k-j", "r": "0..4"},
        "RECTANGLE_CLOSED": {"k": "0..20", "j": "0..k//2", "i": "0..k-2*j", "r": "0"},
        "ALT_RUNG_ABS": {"k": "1..15", "j": "0..k-1", "r": "1..3", "n": "1..3"},
        "EVEN_RUNG_SUM": {"k": "1..15", "j": "0..k-1", "m": "1..4", "n": "1..3"},
        "ODD_RUN_LENGTH": {"k": "0..15", "j": "0..k", "n": "0..k-j", "i": "0..6"},
        "COLUMN_DIFF": {"r": "1..20", "k": "1..8", "j": "1..r"},
        "DIAGONAL_SUM": {"k": "1..15", "j": "1..k-1", "m": "0..6"},
        "CASSINI": {"k": "1..60"},
        "CATALAN": {"k": "1..30", "j": "0..k"},
        "DOCAGNE": {"k": "1..30", "j": "0..k"},
        "JOHNSON": {"k": "0..15", "j": "0..15-k", "i": "0..j-1", "r": "k+j-i", "l": "0..i"},
        "ZIGZAG_PARALLEL": {"a": "1..15", "b": "1..15", "j": "0..min(a,b)"},
        "LONG_ZIGZAG_ALT": {"r": "0..30", "k": "0..r", "n": "3..15", "first": "slash,backslash"},
        "ZIGZAG_COLUMN_SUM": {"a": "1..8", "b": "1..8", "c": "1..8", "d": "a+c-b", "k": "1..4"},
        "ZIGZAG_BALANCE": {"r": "4..30", "c": "2..r-2", "k": "1..4"},
        "HOCKEY_STICK": {"k": "2..20", "n": "1..10", "side": "left,right"},
        "BRAID_SIGNED": {"n": "0..30", "m": "0..n", "l": "0..min(m,n-m)"},
        "BRAID_NORMALIZED": {"l": "0..6", "m": "l+1..15", "r": "l+1..15"},
        "BRAID_CLOSED": {"l": "0..10", "m": "l+1..20"},
        "RHOMBUS_DET": {"n": "1..40", "r": "1..n-1"},
        "TRIANGLE_CONFIG": {"n": "1..30", "r": "1..n"},
        "GEN_FIB_LADDER": {"d": "1..8", "n": "2..20"},
    }[ident]
    fast = sweep(ident, small)
    slow = sweep(ident, small, ev=table)
    assert fast.instances == slow.instances > 0
    assert fast.failures == slow.failures == []
    assert fast.paper_failures == slow.paper_failures
    assert slow.evaluator == "oracle"


# -- independent brute-force checks of the derived closed forms ------------------

def test_column_sum_closed_form_by_brute_force():
    for a in range(1, 25):
        for c in range(1, 25):
            for k in range(1, 9):
                total = sum(fib(a + j) * fib(c + j) for j in range(2 * k))
                assert column_sum_closed(a + c, k) == total


def test_column_sum_stated_form_witness():
    # columns starting at a=1, c=2 over two rows: 1*1 + 1*2 = 3
    assert fib(1) * fib(2) + fib(2) * fib(3) == 3
    assert column_sum_closed(3, 1) == 3
    assert column_sum_paper(1, 1, 1) == 1
    assert column_sum_paper(1, 2, 1) == 0


def test_braid_closed_value_by_brute_force():
    for l in range(0, 30):
        assert braid_closed_value(l) == sum((-1) ** t * lucas(t) for t in range(1, l + 1))
    for l in range(0, 20):
        for m in range(l + 1, 40):
            total = sum(fib(m - t) + (-1) ** t * fib(m + t) for t in range(1, l + 1))
            assert total == fib(m) * braid_closed_value(l)


def test_braid_stated_form_differs_for_both_parities():
    assert braid_closed_value(1) == -1 and braid_closed_paper(1) == 3
    assert braid_closed_value(2) == 2 and braid_closed_paper(2) == 0


def test_zigzag_parallel_corrected_form_by_brute_force():
    for a in range(1, 30):
        for b in range(1, 30):
            for j in range(0, min(a, b) + 1):
                s = (-1) ** j
                left = fib(a) * (fib(b + j) + s * fib(b - j))
                right = fib(b) * (fib(a + j) + s * fib(a - j))
                assert left == right == fib(a) * fib(b) * lucas(j)


def test_zigzag_parallel_stated_form_holds_for_odd_j_only():
    rep = sweep("ZIGZAG_PARALLEL", paper_form=True)
    assert rep.failures
    assert all(w["j"] % 2 == 0 and w["j"] >= 2 and w["a"] != w["b"] for w in rep.failures)
    odd = sweep("ZIGZAG_PARALLEL", {"a": "1..40", "b": "1..40", "j": "1..min(a,b)"}, paper_form=True)
    assert {w["j"] % 2 for w in odd.failures} == {0}


def test_odd_run_length_stated_parity_fails():
    assert verify("ODD_RUN_LENGTH", {"k": 4, "j": 0, "n": 1, "i": 1}, paper_form=True).members == [5, 1, 5]
    rep = sweep("ODD_RUN_LENGTH", paper_form=True)
    assert rep.failures and rep.paper_failures == len(rep.failures)


@settings(max_examples=200)
@given(st.integers(1, 60).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_triangle_config_corrected(nr):
    n, r = nr
    rep = verify("TRIANGLE_CONFIG", {"n": n, "r": r})
    assert rep.holds
    assert rep.rhs == (-1) ** r * fib(n - 2 * r)


def test_ladder_sequences():
    assert identities.ladder_sequence(1, 5) == [1, 1, 2, 3, 5]
    assert identities.ladder_sequence(2, 6) == [2, 1, 3, 4, 7, 11]
    assert identities.ladder_sequence(6, 5) == [13, 8, 21, 29, 50]
    assert set(identities.NAMED_LADDERS) == {1, 2, 3, 6}
