"""Randomized properties beyond the acceptance suites."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shadowed_ahp.ahp import rank_alternatives
from shadowed_ahp.errors import DomainError
from shadowed_ahp.granular import TFN
from shadowed_ahp.sfn import ONE, add, div, mul, sub
from shadowed_ahp.shadow import to_sfn

from strategies import CASES, close, contains, positive_sfns, sfns


@CASES
@given(st.floats(5, 20), st.floats(0.01, 2), st.floats(-3, 3))
def test_to_sfn_symmetric_and_translation(b, k, t):
    s = to_sfn(TFN(b - k, b, b + k))
    assert s.s2 + s.s3 == pytest.approx(2 * b, abs=1e-9)
    assert s.s2 - s.s1 == pytest.approx(s.s4 - s.s3, abs=1e-9)
    moved = to_sfn(TFN(b - k + t, b + t, b + k + t))
    assert close(moved.astuple(), [v + t for v in s], 1e-8)


@CASES
@given(sfns(), sfns())
def test_sub_undoes_add_up_to_widening(a, b):
    try:
        r = sub(add(a, b), b)
    except DomainError:
        assert add(a, b).s1 < b.s4
        return
    assert contains(r, a)


@CASES
@given(positive_sfns())
def test_self_division_contains_one(a):
    assert contains(div(a, a), ONE)
    assert div(a, a).s1 == pytest.approx(a.s1 / a.s4)


@CASES
@given(st.lists(sfns(), min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_rank_order(values, rnd):
    r = rank_alternatives(values)
    assert sorted(r.order) == list(range(len(values)))
    ranks = [r.breakdowns[i].R for i in r.order]
    assert all(x >= y for x, y in zip(ranks, ranks[1:]))
    assert all(math.isfinite(x) for x in ranks)
    perm = list(range(len(values)))
    rnd.shuffle(perm)
    shuffled = rank_alternatives([values[i] for i in perm])
    assert [b.R for b in shuffled.breakdowns] == [r.breakdowns[i].R for i in perm]


@CASES
@given(positive_sfns(), positive_sfns(), positive_sfns())
def test_mul_distributes_over_add(a, b, c):
    assert close(mul(add(a, b), c).astuple(), add(mul(a, c), mul(b, c)).astuple())
