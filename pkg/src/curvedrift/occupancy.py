"""Window automaton tracking which branches of the invariant train track a curve's
image is carried through under iterates of the magic-family monodromy."""
from __future__ import annotations

from dataclasses import dataclass

from .zcover import BoundCertificate, PreconditionError


class Saturated(Exception):
    """Rule A would grow the window past the last pair."""


@dataclass(frozen=True)
class OccupancyState:
    n: int
    has_r: bool
    window: tuple

    def __post_init__(self):
        i, j = self.window
        object.__setattr__(self, "window", (int(i), int(j)))
        if self.n < 4:
            raise ValueError("occupancy states need n >= 4")
        if not 1 <= i <= j <= self.n - 1:
            raise ValueError(f"window [{i},{j}] outside pairs 1..{self.n - 1}")
        if self.has_r and i != 1:
            raise ValueError("r can only be carried together with p1 q1")

    @property
    def width(self):
        return self.window[1] - self.window[0] + 1

    def avoids_start(self):
        # disjoint from the start curve, which lives in N(r p1 q1)
        return not self.has_r and self.window[0] >= 2

    def __str__(self):
        i, j = self.window
        return f"[{i},{j}]" + (" (+r)" if self.has_r else "")


@dataclass(frozen=True)
class MidMacro:
    """An exponent inside a wrap step: occupancy is not known."""

    step: int
    of: int

    def avoids_start(self):
        return False

    def __str__(self):
        return f"? (wrap {self.step}/{self.of})"


def start_state(n):
    return OccupancyState(n, True, (1, 1))


def advance(state: OccupancyState):
    """One rule application.  Returns (next state, number of exponent steps)."""
    n, (i, j) = state.n, state.window
    if state.has_r:
        if j == n - 1:
            raise Saturated(f"window [1,{j}] cannot grow past pair {n - 1}")
        return OccupancyState(n, False, (1, j + 1)), 1
    if j < n - 1:
        return OccupancyState(n, False, (i + 1, j + 1)), 1
    return OccupancyState(n, True, (1, n - i)), n - i


def run_trace(n):
    """[(exponent, state)] from the start state until saturation; wrap interiors are MidMacro."""
    if n < 4:
        raise PreconditionError(f"n >= 4 required, got n={n}")
    e, s = 0, start_state(n)
    trace = [(e, s)]
    while True:
        try:
            nxt, steps = advance(s)
        except Saturated:
            return trace
        for k in range(1, steps):
            trace.append((e + k, MidMacro(k, steps)))
        e += steps
        s = nxt
        trace.append((e, s))


def max_disjoint_exponent(n):
    if n < 4:
        raise PreconditionError(f"n >= 4 required, got n={n}")
    return max(e for e, s in run_trace(n) if s.avoids_start())


def trace_lines(n):
    return [f"{e}: {s}" for e, s in run_trace(n)]


def disk_bounds(n):
    """Certificates for Mod(D_{2n}) and Mod(D_{2n-1}) from the same exponent."""
    if n < 4:
        raise PreconditionError(f"n >= 4 required (the filled disk needs n-1 >= 3), got n={n}")
    M = max_disjoint_exponent(n)
    base = [
        {"op": "occupancy_trace", "n": n, "start": "N(r p1 q1)"},
        {"op": "max_disjoint_exponent", "n": n, "r": M},
        {"op": "arc_to_curve", "method": "regular neighborhood boundary"},
        {"op": "distance_one_power_bound", "r": M},
    ]
    even = BoundCertificate(f"Mod(D_{{{2 * n}}})", M, base, punctures=2 * n + 1)
    odd = BoundCertificate(f"Mod(D_{{{2 * n - 1}}})", M,
                           base + [{"op": "fill_puncture", "where": "(n-1)-gon complementary region"}],
                           punctures=2 * n)
    return even, odd
