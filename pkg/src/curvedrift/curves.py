"""Integral laminations on the punctured disk in Dynnikov coordinates.

Coordinates (a_1..a_{N-2}, b_1..b_{N-2}) come from arc counts: beta_i counts
crossings with the vertical line between punctures i and i+1, and alpha_up(p),
alpha_down(p) count crossings with the vertical arcs from puncture p (2 <= p <= N-1)
to the top and bottom of the boundary.  a_i = (alpha_down - alpha_up)/2 at
puncture i+1 and b_i = (beta_i - beta_{i+1})/2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .braid import BraidWord, Flavor, underlying_permutation


def _pos(x):
    return x if x > 0 else 0


def _neg(x):
    return x if x < 0 else 0


@dataclass(frozen=True)
class LaminationCoord:
    punctures: int
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if self.punctures < 3:
            raise ValueError("laminations need at least 3 punctures")
        if len(self.coords) != 2 * self.punctures - 4:
            raise ValueError(f"expected {2 * self.punctures - 4} coordinates, got {len(self.coords)}")

    @property
    def a(self):
        return self.coords[: self.punctures - 2]

    @property
    def b(self):
        return self.coords[self.punctures - 2:]

    def is_empty(self):
        return not any(self.coords)

    def scaled(self, k):
        return LaminationCoord(self.punctures, [k * c for c in self.coords])


def admissible(N, coords) -> bool:
    """Every integer vector of length 2N-4 is the coordinate of exactly one integral lamination."""
    try:
        coords = list(coords)
        return N >= 3 and len(coords) == 2 * N - 4 and all(int(c) == c for c in coords)
    except (TypeError, ValueError):
        return False


# ------------------------------------------------------------ arc counts

def beta_counts(x: LaminationCoord) -> list:
    """beta_1..beta_{N-1}."""
    a, b = x.a, x.b
    best, run = 0, 0
    for k in range(len(a)):
        best = max(best, abs(a[k]) + _pos(b[k]) + run)
        run += b[k]
    out, run = [], 0
    for i in range(len(a) + 1):
        out.append(2 * best - 2 * run)
        if i < len(b):
            run += b[i]
    return out


def alpha_counts(x: LaminationCoord) -> list:
    """[(alpha_up, alpha_down)] at punctures 2..N-1."""
    a, b = x.a, x.b
    beta = beta_counts(x)
    out = []
    for i in range(len(a)):
        through = beta[i] - 2 * _pos(b[i])  # strands passing above or below the puncture
        loops = abs(b[i])
        out.append((loops + (through - 2 * a[i]) // 2, loops + (through + 2 * a[i]) // 2))
    return out


def from_arc_counts(N, beta, alpha) -> LaminationCoord:
    a = [(dn - up) // 2 for up, dn in alpha]
    b = [(beta[i] - beta[i + 1]) // 2 for i in range(N - 2)]
    return LaminationCoord(N, a + b)


def standard_curve(N, i, j) -> LaminationCoord:
    """Round curve enclosing punctures i..j."""
    if not 1 <= i <= j <= N:
        raise ValueError(f"range [{i}..{j}] outside 1..{N}")
    if i == j:
        raise ValueError("a curve around a single puncture is peripheral")
    if i == 1 and j == N:
        raise ValueError("a curve around all punctures is boundary parallel")
    beta = [2 if i <= k <= j - 1 else 0 for k in range(1, N)]
    alpha = [(1, 1) if i <= p <= j else (0, 0) for p in range(2, N)]
    return from_arc_counts(N, beta, alpha)


# ------------------------------------------------------------ braid action

def _sigma(a, b, i, sign, N):
    """Update lists a, b in place for sigma_i^sign on N punctures (0-based lists, 1-based i)."""
    if i == 1:
        a1, b1 = a[0], b[0]
        if sign < 0:
            a[0] = -b1 + _pos(a1 + _pos(b1))
            b[0] = a1 + _pos(b1)
        else:
            a[0] = b1 - _pos(_pos(b1) - a1)
            b[0] = _pos(b1) - a1
    elif i == N - 1:
        k = N - 3
        ak, bk = a[k], b[k]
        if sign < 0:
            a[k] = -bk + _neg(ak + _neg(bk))
            b[k] = ak + _neg(bk)
        else:
            a[k] = bk - _neg(_neg(bk) - ak)
            b[k] = _neg(bk) - ak
    else:
        p, q = i - 2, i - 1  # a_{i-1}, a_i
        ap, aq, bp, bq = a[p], a[q], b[p], b[q]
        if sign > 0:
            c = ap - _neg(bp) - aq + _pos(bq)
            a[p] = ap + _pos(bp) + _pos(_pos(bq) - c)
            b[p] = bq - _pos(c)
            a[q] = aq + _neg(bq) + _neg(_neg(bp) + c)
            b[q] = bp + _pos(c)
        else:
            d = ap + _neg(bp) - aq - _pos(bq)
            a[p] = ap - _pos(bp) - _pos(_pos(bq) + d)
            b[p] = bq + _neg(d)
            a[q] = aq - _neg(bq) - _neg(_neg(bp) - d)
            b[q] = bp - _neg(d)


def apply_letters(x: LaminationCoord, letters) -> LaminationCoord:
    """Apply letters right to left (the last letter acts first)."""
    N = x.punctures
    a, b = list(x.a), list(x.b)
    for i, s in reversed(letters):
        _sigma(a, b, i, s, N)
    return LaminationCoord(N, a + b)


def apply_braid(x: LaminationCoord, b: BraidWord) -> LaminationCoord:
    if b.flavor is not Flavor.DISK:
        raise ValueError("the disk action needs a DISK braid")
    if b.strands != x.punctures:
        raise ValueError(f"braid on {b.strands} strands acting on {x.punctures} punctures")
    return apply_letters(x, b.letters)


# ------------------------------------------------------------ intersections

def axis_counts(x: LaminationCoord) -> list:
    """nu_1..nu_{N-1}: crossings with the axis segment between punctures p and p+1.

    Inside the column between the vertical arcs at p and p+1 every strand either
    turns back around p or p+1 (crossing the segment once) or runs across,
    crossing the segment once exactly when it changes sides.  At the two end
    punctures every strand loops around, half above and half below."""
    N = x.punctures
    beta = beta_counts(x)
    cols = [(beta[0] // 2, beta[0] // 2)] + alpha_counts(x) + [(beta[-1] // 2, beta[-1] // 2)]
    out = []
    for p in range(1, N):
        (uL, dL), (uR, dR), b = cols[p - 1], cols[p], beta[p - 1]
        turns = (uL + dL - b) // 2 + (uR + dR - b) // 2
        out.append(turns + abs((uL - dL) - (uR - dR)) // 2)
    return out


def pair_intersection(x: LaminationCoord, p: int) -> int:
    """i(x, C_{p..p+1}); the round curve bounds a neighborhood of the axis segment."""
    return 2 * axis_counts(x)[p - 1]


def complexity(x: LaminationCoord) -> int:
    return sum(beta_counts(x)) + sum(u + d for u, d in alpha_counts(x))


def _block_shift(N, i, k, sign):
    # carries puncture i-1 across the block i..i+k-1, moving C_{i..i+k-1} to C_{i-1..i+k-2}
    return [(t, sign) for t in range(i - 1, i + k - 1)]


class NotACurve(ValueError):
    pass


def relax(y: LaminationCoord, max_steps=100000):
    """Find letters w, k and a multiplicity with y = mult * w(C_{1..k}).

    Greedy descent on the total arc count with a short lookahead; raises
    NotACurve when y does not reduce to a multiple of one round curve.
    """
    N = y.punctures
    if y.is_empty():
        raise NotACurve("the empty lamination is not a curve")
    from math import gcd

    g = 0
    for c in y.coords:
        g = gcd(g, c)
    z = y.scaled(1) if g == 1 else LaminationCoord(N, [c // g for c in y.coords])
    rounds = {}
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if (i, j) != (1, N):
                rounds[standard_curve(N, i, j).coords] = (i, j)
    moves = [(i, s) for i in range(1, N) for s in (1, -1)]
    path = []  # letters applied to y, in time order
    cur = z
    steps = 0
    while cur.coords not in rounds:
        steps += 1
        if steps > max_steps:
            raise NotACurve("relaxation did not terminate")
        base = complexity(cur)
        best = None
        for depth in (1, 2, 3):
            for seq in _sequences(moves, depth):
                cand = apply_letters(cur, list(reversed(seq)))
                c = complexity(cand)
                if c < base and (best is None or c < best[0]):
                    best = (c, seq, cand)
            if best is not None:
                break
        if best is None:
            raise NotACurve("no complexity-reducing move; not a single curve class")
        path.extend(best[1])
        cur = best[2]
    i, j = rounds[cur.coords]
    k = j - i + 1
    # walk the round curve left to C_{1..k}
    for start in range(i, 1, -1):
        for sign in (1, -1):
            step = _block_shift(N, start, k, sign)
            nxt = apply_letters(cur, list(reversed(step)))
            if nxt == standard_curve(N, start - 1, start + k - 2):
                path.extend(step)
                cur = nxt
                break
        else:
            raise RuntimeError("block shift failed")
    # cur = P(z) where P applies path in time order; z = P^{-1}(C_{1..k})
    inverse = [(t, -s) for t, s in path]  # inverse letters in reverse time order -> written order
    return inverse, k, g


def _sequences(moves, depth):
    if depth == 1:
        for m in moves:
            yield (m,)
        return
    for head in _sequences(moves, depth - 1):
        for m in moves:
            if m == (head[-1][0], -head[-1][1]):
                continue
            yield head + (m,)


def intersection_number(x: LaminationCoord, y: LaminationCoord, method="auto") -> int:
    """Geometric intersection number; one of x, y must be a multiple of a single curve.

    method "auto" reads two-puncture curves off the axis counts directly and
    uses twist growth otherwise; "twist" forces twist growth."""
    if x.punctures != y.punctures:
        raise ValueError("laminations on different disks")
    for z in (x, y):
        if not admissible(z.punctures, z.coords):
            raise ValueError("inadmissible coordinates")
    if x.is_empty() or y.is_empty():
        return 0
    try:
        word, k, mult = relax(y)
        other = x
    except NotACurve:
        word, k, mult = relax(x)
        other = y
    if k == 2 and method == "auto":
        winv = [(t, -s) for t, s in reversed(word)]
        return mult * pair_intersection(apply_letters(other, winv), 1)
    return mult * intersection_by_twisting(other, word, k)


def _test_total(x: LaminationCoord) -> int:
    # sum of i(x, C_{p..p+1}) over all adjacent pairs; these curves fill the disk
    return 2 * sum(axis_counts(x))


def full_twist_letters(i, j):
    """Positive full twist on punctures i..j."""
    return [(t, 1) for t in range(i, j)] * (j - i + 1)


def intersection_by_twisting(x: LaminationCoord, word, k) -> int:
    """i(x, w(C_{1..k})) from the growth of T^K x, where T twists about w(C_{1..k}).

    For curves a, b, c: |i(T_a^K b, c) - K i(a, b) i(a, c)| <= i(b, c).  Summing over
    the adjacent-pair curves and taking K large isolates i(a, b) exactly."""
    N = x.punctures
    winv = [(t, -s) for t, s in reversed(word)]
    z = apply_letters(x, winv)
    sz = _test_total(z)
    if sz == 0:
        return 0
    sxi = _test_total(standard_curve(N, 1, k))
    K = 2 * sz // sxi + 2
    a, b = list(z.a), list(z.b)
    tw = full_twist_letters(1, k)
    for _ in range(K):
        for i, s in reversed(tw):
            _sigma(a, b, i, s, N)
    grown = _test_total(LaminationCoord(N, a + b))
    den = K * sxi
    q, r = divmod(grown, den)
    return q + (1 if 2 * r > den else 0)


# ------------------------------------------------------------ spread intervals

def _fg_reduce(word):
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return out


def _fg_inv(word):
    return [-g for g in reversed(word)]


# Mirror convention for the free-group action: the positive letter sigma_i acts
# as t_i -> t_{i+1}, t_{i+1} -> t_{i+1}^-1 t_i t_{i+1}.  With it, and crossings
# counted with sign minus the exponent, the magic braid spreads over [-1, 0].
ARTIN_MIRROR = True


def artin_images(b: BraidWord, mirror=ARTIN_MIRROR) -> dict:
    """Images of the free generators t_1..t_N, substituted letter by letter in written order."""
    N = b.strands
    img = {k: [k] for k in range(1, N + 1)}
    for i, s in b.letters:
        if (s > 0) != mirror:
            sub = {i: [i, i + 1, -i], i + 1: [i]}
        else:
            sub = {i: [i + 1], i + 1: [-(i + 1), i, i + 1]}
        new = {}
        for k, w in img.items():
            out = []
            for g in w:
                piece = sub.get(abs(g), [abs(g)])
                out.extend(piece if g > 0 else _fg_inv(piece))
            new[k] = _fg_reduce(out)
        img = new
    return img


def _peel(w, i):
    h = len(w) // 2
    u = w[:h]
    if len(w) % 2 == 0 or w[h] != i or _fg_reduce(u + [i] + _fg_inv(u)) != w:
        raise RuntimeError(f"image {w} is not a reduced conjugate of t_{i}")
    return u


def _sums(seq):
    out = [0]
    for s in seq:
        out.append(out[-1] + s)
    return out


def _tail(i, k):
    return [i] * k if k >= 0 else [-i] * -k


def _best_sums(words, i, start):
    """Fewest crossings over the tail choices, then the narrowest range of sums."""
    best = None
    for k, v in words:
        seq = [(-1 if g > 0 else 1) for g in v if abs(g) == i]
        sums = [start]
        for c in seq:
            sums.append(sums[-1] + c)
        key = (len(seq), max(sums) - min(sums), abs(k))
        if best is None or key < best[0]:
            best = (key, seq, sums)
    return best[1], best[2]


def _conjugator(b: BraidWord, i: int):
    perm = underlying_permutation(b)
    if not perm.fixes(i):
        raise ValueError(f"cut arc c_{i} is not fixed: strand {i} goes to {perm(i)}")
    return _peel(artin_images(b)[i], i)


def crossing_sequence(b: BraidWord, i: int) -> list:
    """Signed crossings of the image arc b(c_i) with c_i, from the boundary to the puncture.

    The conjugator u in t_i -> u t_i u^-1 is only defined up to spinning the
    arc's end around the puncture (u ~ u t_i^k).  The tail with the fewest
    crossings is taken, ties broken by the narrower range of partial sums."""
    u = _conjugator(b, i)
    L = len(u) + 2
    return _best_sums(((k, _fg_reduce(u + _tail(i, k))) for k in range(-L, L + 1)), i, 0)[0]


@dataclass(frozen=True)
class SpreadInterval:
    a: int
    b: int

    def __post_init__(self):
        if not self.a <= 0 <= self.b:
            raise ValueError(f"spread [{self.a}, {self.b}] must contain 0")

    @property
    def width(self):
        return self.b - self.a

    def contains(self, other):
        return self.a <= other.a and other.b <= self.b

    def __add__(self, other):
        return SpreadInterval(self.a + other.a, self.b + other.b)

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return f"[{self.a}, {self.b}]"


def spread_interval(b: BraidWord, i: int) -> SpreadInterval:
    """Blocks met by the canonical lift of block 0.

    Block 0 sits between the lifted arc and its deck translate.  Its image is
    bounded below by the image arc read along its right side (sums from 0) and
    above by the translate of the image arc read along its left side: that
    copy starts one block down and first crosses the wall at the arc's foot."""
    u = _conjugator(b, i)
    L = len(u) + 2
    ks = range(-L, L + 1)
    _, right = _best_sums(((k, _fg_reduce(u + _tail(i, k))) for k in ks), i, 0)
    _, left = _best_sums(((k, _fg_reduce([-i] + u + _tail(i, k))) for k in ks), i, -1)
    return SpreadInterval(min(right), 1 + max(left))


# ------------------------------------------------------------ fibers of a braid's mapping torus
#
# A braid is realized as a planar motion: punctures start in slots along the x-axis
# and each letter is a half-turn of two neighbours about their midpoint.  The
# written word acts on curves right to left, so the motion runs the letters in
# reverse; a positive letter turns counterclockwise (left point passes below).
# Reading a motion back (extract_braid) uses the same convention, and a test
# pins it against the lamination action.


def _slot(k):
    # irregular spacing; evenly spaced slots make some fibers exactly symmetric
    return (k - 1) + 0.15 * math.sin(1.7 * k)


def half_turn_motion(b: BraidWord):
    """t in [0, 1] -> positions (complex) of the strands labelled by their start slot."""
    N = b.strands
    steps = [(i, s) for i, s in reversed(b.letters)]
    K = len(steps)
    slots = {k: complex(_slot(k), 0) for k in range(1, N + 1)}

    def at(t):
        pos = dict(slots)
        label = {k: k for k in range(1, N + 1)}  # slot -> strand label
        if K == 0:
            return [pos[k] for k in range(1, N + 1)]
        t = min(max(t, 0.0), 1.0)
        done = K if t >= 1 else min(int(t * K), K - 1)
        for i, _ in steps[:done]:
            l, r = label[i], label[i + 1]
            pos[l], pos[r] = slots[i + 1], slots[i]
            label[i], label[i + 1] = r, l
        if done < K:
            u = t * K - done
            u -= 0.25 * math.sin(2 * math.pi * u) / (2 * math.pi)
            i, s = steps[done]
            l, r = label[i], label[i + 1]
            mid = 0.5 * (slots[i] + slots[i + 1])
            rad = 0.5 * (slots[i + 1] - slots[i]).real
            pos[l] = mid + rad * cmath.exp(1j * math.pi * (1 + u * s))
            pos[r] = mid + rad * cmath.exp(1j * math.pi * u * s)
        return [pos[k] for k in range(1, N + 1)]

    return at


def _order(points):
    return sorted(range(len(points)), key=lambda k: points[k].real)


def _swaps(o0, o1):
    """Disjoint adjacent transpositions taking o0 to o1, or None."""
    out, k = [], 0
    while k < len(o0):
        if o0[k] == o1[k]:
            k += 1
        elif k + 1 < len(o0) and o0[k] == o1[k + 1] and o0[k + 1] == o1[k]:
            out.append(k)
            k += 2
        else:
            return None
    return out


def extract_braid(motion, start, stop, steps=400, max_depth=60) -> BraidWord:
    """Braid word of a planar motion, read off from changes in the x-order of the points.

    When two neighbours in x-order trade places, the letter is negative if the
    left one passes above.  Time order is reversed into written order."""
    found = []

    def sign_at(s0, s1, left, right):
        gap = lambda s: motion(s)[left].real - motion(s)[right].real
        g0, g1 = gap(s0), gap(s1)
        sc = brentq(gap, s0, s1) if g0 * g1 < 0 else 0.5 * (s0 + s1)
        P = motion(sc)
        dy = P[left].imag - P[right].imag
        return None if abs(dy) <= 1e-9 else (-1 if dy > 0 else 1)

    def split(s0, s1, o0, o1, depth):
        if o0 == o1:
            return
        pairs = _swaps(o0, o1)
        if pairs:
            letters = [(k + 1, sign_at(s0, s1, o0[k], o0[k + 1])) for k in pairs]
            if all(s is not None for _, s in letters):
                found.extend(letters)
                return
        if depth > max_depth:
            raise RuntimeError("motion is degenerate: points meet or share an x-coordinate")
        sm = 0.5 * (s0 + s1)
        om = _order(motion(sm))
        split(s0, sm, o0, om, depth + 1)
        split(sm, s1, om, o1, depth + 1)

    grid = np.linspace(start, stop, steps + 1)
    prev = _order(motion(grid[0]))
    for s0, s1 in zip(grid[:-1], grid[1:]):
        cur = _order(motion(s1))
        split(s0, s1, prev, cur, 0)
        prev = cur
    return BraidWord(len(motion(start)), list(reversed(found)))


class _Orbit:
    """A closed orbit of the non-cut strands, seen from the cut puncture (strand 1).

    arg(tau) is the continuous argument of the strand's position relative to
    strand 1 at orbit time tau; the orbit has period L (its cycle length)."""

    def __init__(self, motion, labels, samples):
        self.motion, self.labels, self.L = motion, labels, len(labels)
        self.grid = np.linspace(0.0, self.L, samples * self.L + 1)
        raw = [cmath.phase(self.X(t)) for t in self.grid]
        self.unwrapped = np.unwrap(raw)
        self.winding = (self.unwrapped[-1] - self.unwrapped[0]) / (2 * math.pi)

    def X(self, tau):
        tau = tau % self.L
        k = min(int(tau), self.L - 1)
        P = self.motion(tau - k)
        return P[self.labels[k] - 1] - P[0]

    def arg(self, tau):
        k = math.floor(tau / self.L)
        s = tau - k * self.L
        j = min(int(np.searchsorted(self.grid, s, side="right")) - 1, len(self.grid) - 2)
        d = cmath.phase(self.X(s)) - cmath.phase(self.X(self.grid[j]))
        d = (d + math.pi) % (2 * math.pi) - math.pi
        return self.unwrapped[j] + d + 2 * math.pi * self.winding * k


class MappingTorusFiber:
    """The fiber of class n*dt + eps*(winding about strand 1) in the mapping torus of b.

    Points of the fiber at level theta are pairs (r, t) with t in R/Z, drawn in
    the plane as r*exp(2 pi i t); strand 1 sits at the origin and the outer
    boundary at infinity.  Punctures are where a strand meets the level set.
    """

    def __init__(self, b: BraidWord, n: int, eps: int = 1, samples: int = 2000):
        if b.flavor is not Flavor.DISK:
            raise ValueError("fibers are built from disk braids")
        perm = underlying_permutation(b)
        if not perm.fixes(1):
            raise ValueError("strand 1 must return to its start")
        self.b, self.n, self.eps = b, n, eps
        self.motion = half_turn_motion(b)
        self.orbits = []
        for cyc in perm.cycles():
            if 1 in cyc:
                continue
            labels = [cyc[0]]
            while len(labels) < len(cyc):
                labels.append(perm(labels[-1]))
            orb = _Orbit(self.motion, labels, samples)
            level = eps * orb.unwrapped + 2 * math.pi * n * orb.grid
            if not np.all(np.diff(level) > 0):
                raise ValueError(f"n = {n} is too small: a strand is tangent to the fiber")
            self.orbits.append(orb)

    def level(self, orb, tau):
        return self.eps * orb.arg(tau) + 2 * math.pi * self.n * tau

    @property
    def punctures(self) -> int:
        """Punctures of the fiber other than the origin."""
        return sum(round(self.eps * o.winding) + self.n * o.L for o in self.orbits)

    def _solve(self, orb, value, near):
        lo, hi = near - 1.0, near + 1.0
        while self.level(orb, lo) > value:
            lo -= 1.0
        while self.level(orb, hi) < value:
            hi += 1.0
        return brentq(lambda t: self.level(orb, t) - value, lo, hi, xtol=1e-13)

    def _seeds(self, theta):
        out = []
        for orb in self.orbits:
            lo = self.level(orb, 0.0)
            hi = self.level(orb, float(orb.L))
            m = math.ceil((lo - theta) / (2 * math.pi))
            while theta + 2 * math.pi * m < hi:
                v = theta + 2 * math.pi * m
                out.append((orb, self._solve(orb, v, v / (2 * math.pi * self.n)), v))
                m += 1
        return out

    def configuration(self, theta):
        """Positions of the origin and the punctures at level theta."""
        return [0j] + [abs(o.X(t)) * cmath.exp(2j * math.pi * t) for o, t, _ in self._seeds(theta)]

    def monodromy(self, theta=0.1234, steps=400) -> BraidWord:
        """The braid traced by the punctures as the level runs once around."""
        seeds = self._seeds(theta)

        def motion(th):
            pts = [0j]
            for orb, t0, v in seeds:
                t = self._solve(orb, v + th - theta, t0)
                pts.append(abs(orb.X(t)) * cmath.exp(2j * math.pi * t))
            return pts

        return extract_braid(motion, theta, theta + 2 * math.pi, steps)

    # -------------------------------------------------------- a curve in one block
    #
    # Unwrap the angle about strand 1: the cover of the fiber slice t = t0 cut
    # along the arc from strand 1 is a strip of blocks (phi, r).  Sliding the
    # slice to the fiber, point by point along the strands, keeps the lifted
    # punctures at (phi, r); the fiber is the strip modulo phi -> phi + 2 pi n,
    # drawn in the plane by (phi, r) -> r exp(i (theta - phi) / n).

    def _lifts(self, theta, t0, kmax):
        lifts = []
        for orb in self.orbits:
            for m in range(orb.L):
                tau0 = m + t0
                base = cmath.phase(orb.X(tau0)) - orb.arg(tau0)
                for k in range(-kmax, kmax + 1):
                    lifts.append((orb, tau0, m, base + 2 * math.pi * k, k))
        n = self.n

        def at(s):
            pts = []
            for orb, tau0, m, shift, _ in lifts:
                phi = lambda tau: orb.arg(tau) + shift
                rhs = 2 * math.pi * n * m + (1 - s) * 2 * math.pi * n * t0 + s * theta * self.eps
                g = lambda tau: 2 * math.pi * n * tau + s * self.eps * phi(tau) - rhs
                lo, hi = tau0 - 1.0, tau0 + 1.0
                while g(lo) > 0:
                    lo -= 1.0
                while g(hi) < 0:
                    hi += 1.0
                tau = brentq(g, lo, hi, xtol=1e-13)
                pts.append(complex(phi(tau), abs(orb.X(tau))))
            return pts

        return at, lifts

    def block_curve(self, theta=0.1234, t0=0.05, steps=400) -> LaminationCoord:
        """Round curve about the non-cut punctures of one block, carried into the fiber.

        Needs exactly two non-cut strands (as for a 3-strand braid)."""
        if self.eps != 1:
            raise NotImplementedError("block curves are built for eps = +1")
        if sum(o.L for o in self.orbits) != 2:
            raise ValueError("block curves need exactly two strands besides the cut strand")
        n = self.n
        at, lifts = self._lifts(theta, t0, n + 2)
        start = at(0.0)
        order0 = _order(start)
        ranks = sorted(order0.index(j) for j, lf in enumerate(lifts) if lf[4] == 0)
        if ranks[1] != ranks[0] + 1:
            raise RuntimeError("the two block punctures are not neighbours in the slice")
        curve = standard_curve(len(start), ranks[0] + 1, ranks[1] + 1)
        curve = apply_braid(curve, extract_braid(at, 0.0, 1.0, steps))

        end = at(1.0)
        order1 = _order(end)
        beta = beta_counts(curve)
        support = [i for i in range(1, len(end)) if beta[i - 1]]
        lo = end[order1[support[len(support) // 2]]].real - math.pi * n
        width = 2 * math.pi * n
        xs = [p.real for p in end]
        while any(abs(v - lo) < 1e-3 or abs(v - lo - width) < 1e-3 for v in xs):
            lo += 0.01
        window = [j for j in order1 if lo < end[j].real < lo + width]
        a, z = order1.index(window[0]) + 1, order1.index(window[-1]) + 1
        curve = _with_left_puncture(_restrict(curve, a, z))

        # the origin is the strip's bottom edge; put it at the left corner
        strip = [(lo, 0.0)] + [(end[j].real, end[j].imag) for j in window]
        bend = _bend(strip, theta, n, lo)
        final = bend(2.0)
        chart = self.configuration(theta)
        if max(min(abs(z - w) for w in chart) for z in final) > 1e-6:
            raise RuntimeError("strip image does not match the fiber's punctures")
        return apply_braid(curve, extract_braid(bend, 0.0, 2.0, 5 * steps))


def _restrict(x: LaminationCoord, a: int, z: int) -> LaminationCoord:
    """The same curve on the sub-disk of punctures a..z, which must contain it."""
    beta, alpha = beta_counts(x), alpha_counts(x)
    if any(beta[i - 1] for i in range(1, x.punctures) if i < a or i >= z):
        raise ValueError(f"lamination is not inside punctures {a}..{z}")
    return from_arc_counts(z - a + 1, beta[a - 1:z - 1], alpha[a - 1:z - 2])


def _with_left_puncture(x: LaminationCoord) -> LaminationCoord:
    """Add a puncture left of everything, outside the lamination."""
    beta, alpha = beta_counts(x), alpha_counts(x)
    return from_arc_counts(x.punctures + 1, [0] + beta, [(beta[0] // 2, beta[0] // 2)] + alpha)


def _bend(strip, theta, n, lo, K=1.0, lam0=1e-4, tilt=0.5 * math.pi - 0.05):
    """Isotopy carrying the strip picture (phi, r) onto the fiber's plane picture.

    s in [0, 1]: rotate the strip a little short of a quarter turn; s in [1, 1.5]:
    straighten onto r + iK(theta - phi)/n; s in [1.5, 2]: curl the strip into
    the slit plane through embeddings (c + r) exp(i lam u) - c, c = K(1-lam)/lam,
    which collapse the bottom edge onto the origin only at lam = 1."""

    def curl(lam):
        c = K * (1 - lam) / lam
        return [(c + r) * cmath.exp(1j * lam * (theta - phi) / n) - c for phi, r in strip]

    flat = [complex(phi - lo, r) * cmath.exp(-1j * tilt) for phi, r in strip]
    curled = curl(lam0)

    def at(s):
        if s <= 1:
            return [complex(phi - lo, r) * cmath.exp(-1j * tilt * s) for phi, r in strip]
        if s <= 1.5:
            u = (s - 1) / 0.5
            return [(1 - u) * p + u * q for p, q in zip(flat, curled)]
        return curl(lam0 + (1 - lam0) * (s - 1.5) / 0.5)

    return at


def magic_family_witness(n: int, theta=0.1234):
    """(psi_n, alpha): the fiber monodromy for the magic braid and the block curve."""
    from .braid import catalog

    fiber = MappingTorusFiber(catalog("beta_magic"), n)
    return fiber.monodromy(theta), fiber.block_curve(theta)
