"""Exact integer geometry of lines in the square grid [n]^2.

Lines are stored in the canonical form a*x + b*y = c with gcd(a, b) = 1 and
(a > 0 or (a == 0 and b > 0)), which makes line identity hashable and
independent of which two points produced it.  Weights are exact rationals
(point count over n); all threshold comparisons stay in integer/Fraction
arithmetic so they are decidable, never approximate.

Enumeration never scans the grid per line: a line's point count comes from
an O(1) intersection of two integer intervals in the step parameter t along
the primitive direction (b, -a), and enumerators iterate primitive
directions emitting each line once from its minimal point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Tuple

import numpy as np

Point2 = Tuple[int, int]


@dataclass(frozen=True)
class GridParams:
    """Side length and dimension of the grid [n]^d."""

    n: int
    d: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"grid side must be at least 2, got n={self.n}")
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got d={self.d}")


@dataclass(frozen=True, order=True)
class Line:
    """The locus a*x + b*y = c, canonical: gcd(a,b)=1, a>0 or (a=0, b>0).

    Ordering is lexicographic on (a, b, c); "lowest canonical line" below
    always means minimal under this order.
    """

    a: int
    b: int
    c: int

    def is_axis(self) -> bool:
        """True for horizontal (a=0) and vertical (b=0) lines."""
        return self.a == 0 or self.b == 0


@dataclass(frozen=True)
class LineStats:
    line: Line
    count: int
    weight: Fraction


def canonicalize_line(p: Point2, q: Point2) -> Line:
    """Canonical line through two distinct grid points (order-independent)."""
    if p == q:
        raise ValueError(f"two distinct points required, got {p} twice")
    dx, dy = q[0] - p[0], q[1] - p[1]
    g = gcd(abs(dx), abs(dy))
    dx, dy = dx // g, dy // g
    a, b = dy, -dx
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return Line(a, b, a * p[0] + b * p[1])


def line_from_direction(p: Point2, direction: Point2) -> Line:
    """Canonical line through p with primitive direction (dx, dy)."""
    dx, dy = direction
    a, b = dy, -dx
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return Line(a, b, a * p[0] + b * p[1])


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _t_interval(base: int, step: int, lo: int, hi: int) -> Tuple[int, int]:
    # Integer t with lo <= base + step*t <= hi; step != 0.
    if step > 0:
        return _ceil_div(lo - base, step), (hi - base) // step
    return _ceil_div(hi - base, step), (lo - base) // step


def _solve_on_line(line: Line) -> Tuple[int, int]:
    # Any integer point (x0, y0) with a*x0 + b*y0 = c; gcd(a, b) = 1.
    a, b, c = line.a, line.b, line.c
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    # old_r == gcd == +-1 since gcd(|a|,|b|) == 1
    return (old_s * c // old_r, old_t * c // old_r)


def count_on_line(line: Line, g: GridParams) -> int:
    """|[n]^2 ∩ L| in O(1), for any canonical line (0 and 1 allowed)."""
    n = g.n
    a, b, c = line.a, line.b, line.c
    if a == 0:  # b == 1, horizontal y = c
        return n if 1 <= c <= n else 0
    if b == 0:  # a == 1, vertical x = c
        return n if 1 <= c <= n else 0
    x0, y0 = _solve_on_line(line)
    tx = _t_interval(x0, b, 1, n)
    ty = _t_interval(y0, -a, 1, n)
    lo, hi = max(tx[0], ty[0]), min(tx[1], ty[1])
    return max(0, hi - lo + 1)


def points_on_line(line: Line, g: GridParams) -> List[Point2]:
    """Exactly the grid points on the locus, sorted lexicographically."""
    n = g.n
    a, b, c = line.a, line.b, line.c
    if a == 0:
        return [(x, c) for x in range(1, n + 1)] if 1 <= c <= n else []
    if b == 0:
        return [(c, y) for y in range(1, n + 1)] if 1 <= c <= n else []
    x0, y0 = _solve_on_line(line)
    tx = _t_interval(x0, b, 1, n)
    ty = _t_interval(y0, -a, 1, n)
    lo, hi = max(tx[0], ty[0]), min(tx[1], ty[1])
    pts = [(x0 + b * t, y0 - a * t) for t in range(lo, hi + 1)]
    pts.sort()
    return pts


def line_stats(line: Line, g: GridParams) -> LineStats:
    cnt = count_on_line(line, g)
    return LineStats(line, cnt, Fraction(cnt, g.n))


def primitive_directions(n: int) -> Iterator[Point2]:
    """Primitive (dx, dy) with dx > 0, or (0, 1); one per line direction.

    Only directions that can join two points of [n]^2 are produced, i.e.
    |dx|, |dy| <= n-1.
    """
    yield (0, 1)
    for dx in range(1, n):
        for dy in range(-(n - 1), n):
            if gcd(dx, abs(dy)) == 1:
                yield (dx, dy)


@lru_cache(maxsize=32)
def _direction_arrays(n: int) -> Tuple[np.ndarray, np.ndarray]:
    dirs = list(primitive_directions(n))
    dx = np.array([d[0] for d in dirs], dtype=np.int64)
    dy = np.array([d[1] for d in dirs], dtype=np.int64)
    return dx, dy


def direction_counts(p: Point2, g: GridParams) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid point counts of the lines through p, one per primitive direction.

    Returns (dx, dy, counts) aligned arrays; counts include p itself, so a
    direction lies on a line of L exactly when its count is >= 2.  This is
    the batch backend for tail-bound checks: it avoids materializing Line
    objects for the ~1.2*n^2 directions through each point.
    """
    n = g.n
    x, y = p
    dx, dy = _direction_arrays(n)
    # t-range from 1 <= x + t*dx <= n (dx >= 0; dx == 0 only for (0,1))
    with np.errstate(divide="ignore"):
        lo_x = np.where(dx > 0, -((x - 1) // np.maximum(dx, 1)), -(10 * n))
        hi_x = np.where(dx > 0, (n - x) // np.maximum(dx, 1), 10 * n)
    ady = np.abs(np.maximum(np.abs(dy), 1))
    lo_pos = -((y - 1) // ady)  # dy > 0
    hi_pos = (n - y) // ady
    lo_neg = -((n - y) // ady)  # dy < 0: y decreases as t grows
    hi_neg = (y - 1) // ady
    lo_y = np.where(dy > 0, lo_pos, np.where(dy < 0, lo_neg, -(10 * n)))
    hi_y = np.where(dy > 0, hi_pos, np.where(dy < 0, hi_neg, 10 * n))
    counts = np.maximum(0, np.minimum(hi_x, hi_y) - np.maximum(lo_x, lo_y) + 1)
    return dx, dy, counts


def lines_through(p: Point2, g: GridParams, min_count: int = 2) -> List[LineStats]:
    """All lines of L through p with at least min_count grid points."""
    _check_point(p, g)
    dx, dy, counts = direction_counts(p, g)
    mask = counts >= max(2, min_count)
    out = []
    for i in np.flatnonzero(mask):
        line = line_from_direction(p, (int(dx[i]), int(dy[i])))
        out.append(LineStats(line, int(counts[i]), Fraction(int(counts[i]), g.n)))
    out.sort(key=lambda s: s.line)
    return out


def heavy_lines_through(p: Point2, g: GridParams, alpha) -> List[LineStats]:
    """Lines of L through p with weight >= alpha; alpha rational in (0, 1]."""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    # weight >= alpha  <=>  count >= alpha*n, exactly
    min_count = _ceil_div(alpha.numerator * g.n, alpha.denominator)
    return lines_through(p, g, min_count=max(2, min_count))


def enumerate_lines(g: GridParams, min_weight) -> List[LineStats]:
    """Every line of L with weight >= min_weight, exactly once, sorted.

    Directions are pruned by the largest count they can realize, so high
    thresholds cost far less than full enumeration.
    """
    n = g.n
    min_weight = Fraction(min_weight)
    min_count = max(2, _ceil_div(min_weight.numerator * n, min_weight.denominator))
    out: List[LineStats] = []
    if min_count <= n:
        for x in range(1, n + 1):  # vertical lines x = const, count n
            out.append(LineStats(Line(1, 0, x), n, Fraction(n, n)))
        for y in range(1, n + 1):
            out.append(LineStats(Line(0, 1, y), n, Fraction(n, n)))
    for dx, dy, x, y in _base_points(n, min_count):
        steps = (n - x) // dx
        if dy > 0:
            steps = min(steps, (n - y) // dy)
        elif dy < 0:
            steps = min(steps, (y - 1) // (-dy))
        cnt = steps + 1
        if cnt >= min_count:
            out.append(LineStats(line_from_direction((x, y), (dx, dy)), cnt, Fraction(cnt, n)))
    out.sort(key=lambda s: s.line)
    return out


def _base_points(n: int, min_count: int) -> Iterator[Tuple[int, int, int, int]]:
    # Base point of a line = the unique point whose predecessor along the
    # direction falls outside the grid.  Directions with max(|dx|,|dy|) too
    # large to ever reach min_count points are skipped entirely.
    if min_count < 2:
        min_count = 2
    dmax = (n - 1) // (min_count - 1)
    for dx in range(1, dmax + 1):
        for dy in range(-dmax, dmax + 1):
            if dy == 0:
                continue
            if gcd(dx, abs(dy)) != 1:
                continue
            # left strip: x <= dx
            for x in range(1, dx + 1):
                for y in range(1, n + 1):
                    yield dx, dy, x, y
            # top/bottom strip for the remaining x
            if dy > 0:
                for x in range(dx + 1, n + 1):
                    for y in range(1, dy + 1):
                        yield dx, dy, x, y
            else:
                for x in range(dx + 1, n + 1):
                    for y in range(n + dy + 1, n + 1):
                        yield dx, dy, x, y


def max_heavy_ratio(g: GridParams) -> Fraction:
    """max over p in [n]^2 and alpha in {2/n..1} of |heavy lines| * alpha^2.

    Exhaustive but vectorized: for each grid point the counts of all lines
    through it come from direction_counts, and the per-alpha tallies are a
    suffix-sum of a bincount.  The polynomial-tail law says this never
    exceeds 18.
    """
    n = g.n
    best = Fraction(0)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            _, _, counts = direction_counts((x, y), g)
            counts = counts[counts >= 2]
            hist = np.bincount(counts, minlength=n + 1)
            ge = np.cumsum(hist[::-1])[::-1]  # ge[i] = #lines with count >= i
            for i in range(2, n + 1):
                r = Fraction(int(ge[i]) * i * i, n * n)
                if r > best:
                    best = r
    return best


def _check_point(p: Point2, g: GridParams) -> None:
    if not (1 <= p[0] <= g.n and 1 <= p[1] <= g.n):
        raise ValueError(f"point {p} outside [1,{g.n}]^2")
