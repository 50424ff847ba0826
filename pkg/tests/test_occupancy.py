from fractions import Fraction

import pytest

from curvedrift.occupancy import (MidMacro, OccupancyState, Saturated, advance, disk_bounds,
                                  max_disjoint_exponent, run_trace, trace_lines)
from curvedrift.zcover import PreconditionError


def S(n, r, i, j):
    return OccupancyState(n, r, (i, j))


@pytest.mark.parametrize("state,nxt,steps", [
    (S(6, True, 1, 2), S(6, False, 1, 3), 1),
    (S(6, False, 2, 3), S(6, False, 3, 4), 1),
    (S(6, False, 4, 5), S(6, True, 1, 2), 2),
])
def test_rules(state, nxt, steps):
    assert advance(state) == (nxt, steps)


def test_saturation():
    with pytest.raises(Saturated):
        advance(S(5, True, 1, 4))


def test_state_invariants():
    with pytest.raises(ValueError):
        S(6, True, 2, 3)
    with pytest.raises(ValueError):
        S(6, False, 2, 6)


def test_n5_trace_prefix():
    trace = run_trace(5)
    want = [S(5, True, 1, 1), S(5, False, 1, 2), S(5, False, 2, 3), S(5, False, 3, 4), None,
            S(5, True, 1, 2), S(5, False, 1, 3), S(5, False, 2, 4)]
    for (e, got), w in zip(trace, want):
        if w is None:
            assert isinstance(got, MidMacro)
        else:
            assert got == w, e
    assert [e for e, _ in trace[:8]] == list(range(8))


def test_trace_properties():
    for n in range(4, 30):
        widths = [s.width for _, s in run_trace(n) if isinstance(s, OccupancyState)]
        assert widths == sorted(widths)


def test_checkpoint_n4():
    assert dict(run_trace(4))[2] == S(4, False, 2, 3)


@pytest.mark.parametrize("n,M", [(4, 2), (5, 7), (6, 14)])
def test_max_disjoint_exponent(n, M):
    assert max_disjoint_exponent(n) == M


def test_max_disjoint_exponent_range():
    for n in range(4, 201):
        assert max_disjoint_exponent(n) == n * n - 4 * n + 2


def test_small_n():
    with pytest.raises(PreconditionError):
        max_disjoint_exponent(3)
    with pytest.raises(PreconditionError):
        disk_bounds(3)


def test_disk_bounds():
    even, odd = disk_bounds(4)
    assert even.bound == odd.bound == Fraction(1, 2)
    even, odd = disk_bounds(10)
    assert even.bound == odd.bound == Fraction(1, 62)
    assert (even.group, odd.group) == ("Mod(D_{20})", "Mod(D_{19})")
    assert any(s["op"] == "fill_puncture" for s in odd.provenance)
    assert not any(s["op"] == "fill_puncture" for s in even.provenance)
    assert odd.replay() == odd.bound


def test_trace_lines_format():
    lines = trace_lines(4)
    assert lines[0] == "0: [1,1] (+r)"
    assert lines[2] == "2: [2,3]"
