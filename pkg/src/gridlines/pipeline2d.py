"""Staged subsampling pipeline in the plane.

The construction keeps, at each scale m, every line's point count inside an
explicit integer window: heavy lines (weight above m^(-2/3)) concentrate to
(1 +- delta) * m * w(L), medium lines are capped at (1 + delta) * m^(1/3),
light lines (weight at most m^(-2)) at a constant.  A stage samples each
point of the previous set independently with probability m/m0 and then
repairs violated windows by re-randomizing one violating line at a time
(lowest canonical line first) -- the constructive counterpart of the
existential local-lemma step.

Window boundaries are computed in exact rational arithmetic.  The tolerance
delta is itself stored as a rational: by default the theory value m^(-1/12)
rounded to six decimal digits, so that every comparison in the checker is
decidable integer arithmetic rather than a float test.

The quasirandomness condition (counts of S inside combinatorial rectangles
I x J with |I|, |J| >= n/10) is exponential to check exhaustively; the
checker covers all contiguous-interval rectangles exactly plus a seeded
sample of arbitrary ones.  The flow-based regularizer downstream is the
operational test for the rest.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExhausted
from .geometry import GridParams, Line, enumerate_lines, points_on_line
from .pointset import PointSet
from .rng import make_rng

DEFAULT_EPS = Fraction(1, 200)  # 0.005
K_THEORY = 1e36
LIGHT_CAP = 14

# Widest tolerance the nice-set definition admits; the desk-scale default.
# Makes the medium cap floor(2 * m^(1/3)) instead of the theory value, which
# is what keeps the repair dynamics subcritical at m ~ 16 (measured: the
# theory tolerance plateaus at ~2000 standing violations, this one drains).
DESK_DELTA = Fraction(10**6 - 1, 10**6)
DESK_DELTA_MAX_M = 10**4


def _frac_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _frac_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def rational_delta(m) -> Fraction:
    """The theory tolerance m^(-1/12), rounded to a 6-digit rational."""
    f = float(m) ** (-1.0 / 12.0)
    num = round(f * 10**6)
    num = max(1, min(10**6 - 1, num))
    return Fraction(num, 10**6)


def desk_delta(m) -> Fraction:
    """Effective default tolerance: widest in (0,1) up to m = 10^4, the
    theory value m^(-1/12) beyond."""
    m = Fraction(m)
    return DESK_DELTA if m <= DESK_DELTA_MAX_M else rational_delta(m)


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NiceParams:
    """Scale m with its class thresholds, tolerance, and light-line cap."""

    m: Fraction
    delta: Fraction
    light_cap: int = LIGHT_CAP

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if not 0 < self.delta < 1:
            raise ValueError(f"delta must lie in (0,1), got {self.delta}")
        if self.light_cap < 2:
            raise ValueError(f"light cap must be at least 2, got {self.light_cap}")

    @classmethod
    def for_m(cls, m, delta_override=None, light_cap_override=None) -> "NiceParams":
        m = Fraction(m)
        delta = Fraction(delta_override) if delta_override is not None else rational_delta(m)
        cap = light_cap_override if light_cap_override is not None else LIGHT_CAP
        return cls(m=m, delta=delta, light_cap=cap)

    @property
    def heavy_threshold(self) -> float:
        return float(self.m) ** (-2.0 / 3.0)

    @property
    def light_threshold(self) -> float:
        return float(self.m) ** (-2.0)

    # Exact class predicates on a line's grid-point count c in [n]^2.

    def is_heavy(self, c: int, n: int) -> bool:
        # w > m^(-2/3)  <=>  c^3 * m^2 > n^3
        return c**3 * self.m.numerator**2 > n**3 * self.m.denominator**2

    def is_light(self, c: int, n: int) -> bool:
        # w <= m^(-2)  <=>  c * m^2 <= n
        return c * self.m.numerator**2 <= n * self.m.denominator**2

    def heavy_window(self, c: int, n: int) -> Tuple[int, int]:
        center = self.m * c / n
        return (_frac_ceil((1 - self.delta) * center), _frac_floor((1 + self.delta) * center))

    def medium_cap(self) -> int:
        # floor((1 + delta) * m^(1/3)): largest t with t^3 <= (1+delta)^3 * m
        bound = (1 + self.delta) ** 3 * self.m
        t = max(0, round(float(bound) ** (1.0 / 3.0)))
        while Fraction((t + 1) ** 3) <= bound:
            t += 1
        while t > 0 and Fraction(t**3) > bound:
            t -= 1
        return t


@dataclass(frozen=True)
class StageSchedule:
    """The scale sequence m_1 < m_2 < ... < m_r for a target k in [n]^2."""

    stages: Tuple[Fraction, ...]
    k: int
    n: int
    eps: Fraction
    K_theory: float = K_THEORY

    @property
    def r(self) -> int:
        return len(self.stages)

    def floats(self) -> List[float]:
        return [float(m) for m in self.stages]


def build_schedule(k: int, n: int, eps=DEFAULT_EPS) -> StageSchedule:
    """Scales start at (1+eps)k and cube until the next cube would leave [1, n].

    The paper regime additionally wants k <= 0.9n; at desk scale that is
    reported by callers, not enforced here.
    """
    eps = Fraction(eps)
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    m1 = (1 + eps) * k
    if m1 > n:
        raise ValueError(f"(1+eps)k = {float(m1):.3f} exceeds n = {n}")
    stages = [m1]
    while stages[-1] ** 3 <= n:
        stages.append(stages[-1] ** 3)
    return StageSchedule(stages=tuple(stages), k=k, n=n, eps=eps)


@dataclass(frozen=True)
class PracticalConfig:
    """Desk-scale knobs: tolerance overrides, budgets, and the run seed."""

    delta_override: Optional[Fraction] = None
    light_cap_override: Optional[int] = None
    quasi_sample_pairs: int = 128
    resample_budget: int = 50_000
    retry_budget: int = 20
    rng_seed: int = 0

    def __post_init__(self):
        if self.resample_budget < 1 or self.retry_budget < 1:
            raise ValueError("budgets must be at least 1")
        if self.delta_override is not None and not 0 < Fraction(self.delta_override) < 1:
            raise ValueError(f"delta override must lie in (0,1), got {self.delta_override}")
        if self.light_cap_override is not None and self.light_cap_override < 2:
            raise ValueError(f"light cap override must be >= 2, got {self.light_cap_override}")

    def nice_params(self, m) -> NiceParams:
        delta = self.delta_override if self.delta_override is not None else desk_delta(m)
        return NiceParams.for_m(m, delta, self.light_cap_override)


@dataclass
class NiceReport:
    """Outcome of the exact nice-set check; passed iff all lists are empty."""

    heavy_violations: List[Tuple[Line, int, Tuple[int, int]]] = field(default_factory=list)
    medium_violations: List[Tuple[Line, int, Tuple[int, int]]] = field(default_factory=list)
    light_violations: List[Tuple[Line, int, Tuple[int, int]]] = field(default_factory=list)
    quasi_violations: List[Tuple[int, int, int, Tuple[float, float]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.heavy_violations or self.medium_violations
                    or self.light_violations or self.quasi_violations)


# ---------------------------------------------------------------------------
# Theoretical diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StageDiagnostics:
    """The proof's bound chain for one stage, for regime reporting.

    Values can overflow floats at theory scale; lll_product is computed in
    log space so the regime verdict stays meaningful even when q or the
    dependency degree alone does not fit a float.
    """

    p: float
    q_bound: float
    delta_dep: float
    lll_product: float
    D: float
    chernoff_heavy: float
    chernoff_medium: float

    @property
    def theory_satisfied(self) -> bool:
        return self.lll_product <= 1.0


def _exp_or_inf(logx: float) -> float:
    if logx > 700:
        return math.inf
    return math.exp(logx)


def stage_diagnostics(m0: float, m: float, g: GridParams) -> StageDiagnostics:
    """Evaluate q <= max(2exp(-m^(1/6)/13), (5m)^(-15)), D = 18 m0^4,
    Delta <= 20 m0^5 and the product 4*q*Delta for one stage m0 -> m."""
    m0, m = float(m0), float(m)
    if m > m0:
        raise ValueError(f"need m <= m0, got m={m}, m0={m0}")
    p = m / m0
    log_chernoff = math.log(2) - m ** (1.0 / 6.0) / 13.0
    log_q_light = -15.0 * math.log(5.0 * m)
    log_q = max(log_chernoff, log_q_light)
    log_D = math.log(18.0) + 4.0 * math.log(m0)
    log_delta = math.log(20.0) + 5.0 * math.log(m0)
    log_lll = math.log(4.0) + log_q + log_delta
    chern = _exp_or_inf(log_chernoff)
    return StageDiagnostics(
        p=p,
        q_bound=_exp_or_inf(log_q),
        delta_dep=_exp_or_inf(log_delta),
        lll_product=_exp_or_inf(log_lll),
        D=_exp_or_inf(log_D),
        chernoff_heavy=chern,
        chernoff_medium=chern,
    )


# ---------------------------------------------------------------------------
# Event index: every line that can violate a window, with point incidence
# ---------------------------------------------------------------------------


class LineEvents:
    """Relevant lines for a stage, their integer windows, and which lines
    pass through each grid point.

    A line is relevant when some count could breach its window: all heavy
    lines (two-sided window), and medium/light lines whose grid count
    exceeds their cap.  Everything else passes automatically, which is what
    makes the check exact without enumerating all of L.
    """

    def __init__(self, g: GridParams, params: NiceParams, *,
                 axis_delta: Optional[Fraction] = None,
                 axis_min: Optional[int] = None,
                 nonaxis_cap: Optional[int] = None):
        n = g.n
        self.g = g
        self.params = params
        cap_med = params.medium_cap()
        cap_light = params.light_cap
        eff_med = min(cap_med, nonaxis_cap) if nonaxis_cap is not None else cap_med
        eff_light = min(cap_light, nonaxis_cap) if nonaxis_cap is not None else cap_light

        c_heavy_min = next(c for c in range(1, n + 1) if params.is_heavy(c, n))
        cands = [c_heavy_min]
        if eff_med + 1 < c_heavy_min:
            cands.append(max(2, eff_med + 1))
        c_light_max = max((c for c in range(0, n + 1) if params.is_light(c, n)), default=0)
        if eff_light + 1 <= c_light_max:
            cands.append(max(2, eff_light + 1))
        c_min = min(cands)

        stats = enumerate_lines(g, Fraction(c_min, n))
        windows: Dict[Tuple[int, bool], Tuple[int, int]] = {}

        def window_for(c: int, axis: bool) -> Tuple[int, int]:
            key = (c, axis)
            if key in windows:
                return windows[key]
            if params.is_heavy(c, n):
                if axis and axis_delta is not None and axis_delta < params.delta:
                    tight = NiceParams(params.m, axis_delta, params.light_cap)
                    lo, hi = tight.heavy_window(c, n)
                else:
                    lo, hi = params.heavy_window(c, n)
                if axis and axis_min is not None:
                    lo = max(lo, axis_min)
                if not axis and nonaxis_cap is not None:
                    hi = min(hi, nonaxis_cap)
            elif params.is_light(c, n):
                lo, hi = 0, eff_light if not axis else cap_light
            else:
                lo, hi = 0, eff_med if not axis else cap_med
            if lo > hi:
                raise ValueError(
                    f"empty window [{lo},{hi}] for count {c} at m={float(params.m):.4g}, "
                    f"delta={float(params.delta):.4g}")
            windows[key] = (lo, hi)
            return lo, hi

        lines: List[Line] = []
        grid_counts: List[int] = []
        lo_list: List[int] = []
        hi_list: List[int] = []
        for s in stats:   # enumerate_lines output is canonically sorted
            lo, hi = window_for(s.count, s.line.is_axis())
            if lo == 0 and hi >= s.count:
                continue  # can never violate
            lines.append(s.line)
            grid_counts.append(s.count)
            lo_list.append(lo)
            hi_list.append(hi)

        self.lines = lines
        self.grid_counts = grid_counts
        self.lo = lo_list
        self.hi = hi_list
        incidence: List[List[int]] = [[] for _ in range(n * n)]
        for j, line in enumerate(lines):
            for (x, y) in points_on_line(line, g):
                incidence[(x - 1) * n + (y - 1)].append(j)
        self.incidence = incidence

    def counts_for(self, member_pids: Sequence[int]) -> List[int]:
        counts = [0] * len(self.lines)
        inc = self.incidence
        for pid in member_pids:
            for j in inc[pid]:
                counts[j] += 1
        return counts


_EVENT_CACHE: Dict[tuple, LineEvents] = {}


def _events(g: GridParams, params: NiceParams, axis_delta=None, axis_min=None,
            nonaxis_cap=None) -> LineEvents:
    key = (g.n, params.m, params.delta, params.light_cap, axis_delta, axis_min, nonaxis_cap)
    ev = _EVENT_CACHE.get(key)
    if ev is None:
        ev = LineEvents(g, params, axis_delta=axis_delta, axis_min=axis_min,
                        nonaxis_cap=nonaxis_cap)
        if len(_EVENT_CACHE) >= 16:
            _EVENT_CACHE.pop(next(iter(_EVENT_CACHE)))
        _EVENT_CACHE[key] = ev
    return ev


# ---------------------------------------------------------------------------
# One subsampling stage with bad-event resampling
# ---------------------------------------------------------------------------


def _pid(x: int, y: int, n: int) -> int:
    return (x - 1) * n + (y - 1)


_REPAIR_SLACK = 2  # repair lands up to this far inside the window, not on its edge


def _mt_stage(g: GridParams, s0_pts: List[Tuple[int, int]], p: float,
              events: LineEvents, rng, budget: int) -> Tuple[set, int]:
    """Bernoulli(p) subsample of s0_pts repaired one violating line at a time.

    The repair move re-randomizes a minimal subset of the line's Bernoulli
    choices: on a deficit it turns on absent points of the line, on an
    excess it turns off present ones, landing a random small distance inside
    the window.  Flip positions are chosen min-conflicts style (fewest
    crossing lines pushed out of their own windows, ties broken by fresh
    randomness).  Re-randomizing *all* of a violated line's points (the
    textbook resampling step) is supercritical at desk scale -- each
    full-row redraw flips ~2p(1-p)n points and breaks more crossing lines
    than it fixes, which matches the stage diagnostics reporting
    4*q*Delta >> 1 here; uniformly random focused flips still plateau at a
    standing violation mass, while the min-conflicts choice drains it.
    Lines are repaired lowest-canonical-first for reproducibility.

    Returns (member point set, resamples used).  Raises BudgetExhausted when
    the violated-event set is still nonempty after `budget` repairs.
    """
    n = g.n
    inc = events.incidence
    lo, hi = events.lo, events.hi
    nlines = len(events.lines)
    counts = [0] * nlines
    in_s0 = bytearray(n * n)
    for (x, y) in s0_pts:
        in_s0[_pid(x, y, n)] = 1

    # Feasibility of lower bounds against the support actually available.
    s0_counts = events.counts_for([_pid(x, y, n) for (x, y) in s0_pts])
    for j in range(nlines):
        if s0_counts[j] < lo[j]:
            raise BudgetExhausted(
                f"window lower bound {lo[j]} exceeds support {s0_counts[j]} "
                f"on line {events.lines[j]}", resamples=0)

    member = bytearray(n * n)
    draws = rng.random(len(s0_pts))
    for (x, y), u in zip(s0_pts, draws):
        if u < p:
            pid = _pid(x, y, n)
            member[pid] = 1
            for j in inc[pid]:
                counts[j] += 1

    violated = set(j for j in range(nlines) if not lo[j] <= counts[j] <= hi[j])
    heap = sorted(violated)
    resamples = 0
    line_pts_cache: Dict[int, List[int]] = {}

    while violated:
        if not heap:
            heap = sorted(violated)
        j = heapq.heappop(heap)
        if j not in violated:
            continue
        if resamples >= budget:
            raise BudgetExhausted(
                f"resample budget {budget} exhausted with {len(violated)} violated lines",
                resamples=resamples)
        resamples += 1
        pids = line_pts_cache.get(j)
        if pids is None:
            pids = [_pid(x, y, n) for (x, y) in points_on_line(events.lines[j], g)
                    if in_s0[_pid(x, y, n)]]
            line_pts_cache[j] = pids

        c = counts[j]
        span = hi[j] - lo[j]
        slack = int(rng.integers(0, min(span, _REPAIR_SLACK) + 1))
        if c < lo[j]:
            pool = [pid for pid in pids if not member[pid]]
            want = min(lo[j] + slack, c + len(pool)) - c
            newbit = 1
        else:
            pool = [pid for pid in pids if member[pid]]
            want = c - max(hi[j] - slack, 0)
            newbit = 0
        if want <= 0 or not pool:
            # lower bound unreachable: support shrank below lo[j]
            raise BudgetExhausted(
                f"line {events.lines[j]} cannot reach window [{lo[j]},{hi[j]}]",
                resamples=resamples)
        d = 1 if newbit else -1
        if len(pool) > want:
            # min-conflicts: prefer flips that do not push any crossing line
            # out of its window; random tie-break keeps the walk stochastic
            scored = []
            for i, pid in enumerate(pool):
                damage = 0
                for t in inc[pid]:
                    ct = counts[t]
                    if lo[t] <= ct <= hi[t] and not lo[t] <= ct + d <= hi[t]:
                        damage += 1
                scored.append((damage, rng.random(), i))
            scored.sort()
            chosen = [s[2] for s in scored[:want]]
        else:
            chosen = range(len(pool))
        touched = [j]
        for i in sorted(chosen):
            pid = pool[i]
            member[pid] = newbit
            for t in inc[pid]:
                counts[t] += d
                touched.append(t)
        for t in set(touched):
            if lo[t] <= counts[t] <= hi[t]:
                violated.discard(t)
            elif t not in violated:
                violated.add(t)
                heapq.heappush(heap, t)

    pts = set()
    for pid in range(n * n):
        if member[pid]:
            pts.add((pid // n + 1, pid % n + 1))
    return pts, resamples


def subsample_stage(S0: PointSet, m0, m, g: GridParams, cfg: PracticalConfig,
                    rng=None, *, target_k: Optional[int] = None,
                    tighten_axis: bool = False) -> PointSet:
    """One stage: keep each point of S0 with probability m/m0, then repair.

    S0 must be m0-nice (or the full grid); the bad events are the nice-set
    window conditions at scale m.  With target_k set (used by the
    regularizing constructor) axis lines are additionally held at >= k and
    non-axis lines capped at k so the flow step downstream stays feasible.
    """
    m0, m = Fraction(m0), Fraction(m)
    if m > m0:
        raise ValueError(f"need m <= m0, got m={float(m)}, m0={float(m0)}")
    if S0.d != 2:
        raise ValueError("subsample_stage operates on planar point sets")
    pts, _ = _stage_with_stats(S0, m0, m, g, cfg, rng, target_k, tighten_axis)
    return pts


def _stage_with_stats(S0, m0, m, g, cfg, rng, target_k, tighten_axis):
    params = cfg.nice_params(m)
    axis_delta = min(params.delta, Fraction(1, 4)) if tighten_axis else None
    ev = _events(g, params,
                 axis_delta=axis_delta,
                 axis_min=target_k,
                 nonaxis_cap=target_k)
    if rng is None:
        rng = make_rng(cfg.rng_seed)
    p = float(m / m0)
    s0_pts = S0.sorted_points()
    members, resamples = _mt_stage(g, s0_pts, p, ev, rng, cfg.resample_budget)
    return PointSet.of(g.n, members), resamples


@dataclass
class PipelineResult:
    points: PointSet
    schedule: StageSchedule
    stage_resamples: List[int]
    deltas: List[Fraction]


def run_pipeline_result(k: int, g: GridParams, cfg: PracticalConfig = PracticalConfig(),
                        rng=None, *, eps=DEFAULT_EPS,
                        regularizable: bool = False) -> PipelineResult:
    """Fold subsampling stages from the full grid down to m_1 = (1+eps)k.

    With regularizable=True every stage pins axis-line counts tightly enough
    (and the last stage at exactly >= k, <= k off-axis) that the max-flow
    regularization step has the degrees it needs.
    """
    schedule = build_schedule(k, g.n, eps)
    if rng is None:
        rng = make_rng(cfg.rng_seed)
    S = PointSet.full_grid(g.n)
    m_prev = Fraction(g.n)
    resamples: List[int] = []
    deltas: List[Fraction] = []
    for idx in range(schedule.r - 1, -1, -1):
        m_i = schedule.stages[idx]
        is_final = idx == 0
        try:
            S, used = _stage_with_stats(
                S, m_prev, m_i, g, cfg, rng,
                target_k=(k if (regularizable and is_final) else None),
                tighten_axis=(regularizable and not is_final))
        except BudgetExhausted as e:
            e.stage_index = idx
            raise
        resamples.append(used)
        deltas.append(cfg.nice_params(m_i).delta)
        m_prev = m_i
    return PipelineResult(points=S, schedule=schedule,
                          stage_resamples=resamples, deltas=deltas)


def run_pipeline(k: int, g: GridParams, cfg: PracticalConfig = PracticalConfig(),
                 rng=None, *, eps=DEFAULT_EPS, regularizable: bool = False) -> PointSet:
    return run_pipeline_result(k, g, cfg, rng, eps=eps, regularizable=regularizable).points


# ---------------------------------------------------------------------------
# Exact nice-set checker
# ---------------------------------------------------------------------------


def check_nice(S: PointSet, params: NiceParams, g: GridParams,
               cfg: PracticalConfig = PracticalConfig(), rng=None) -> NiceReport:
    """Exact verdict for conditions (1)-(3) on every line of L, plus the
    quasirandomness condition (4) on all contiguous-interval rectangles and
    cfg.quasi_sample_pairs random ones."""
    n = g.n
    report = NiceReport()
    ev = _events(g, params)
    counts = ev.counts_for([_pid(x, y, n) for (x, y) in S.points])
    for j, line in enumerate(ev.lines):
        c = counts[j]
        if ev.lo[j] <= c <= ev.hi[j]:
            continue
        entry = (line, c, (ev.lo[j], ev.hi[j]))
        gc = ev.grid_counts[j]
        if params.is_heavy(gc, n):
            report.heavy_violations.append(entry)
        elif params.is_light(gc, n):
            report.light_violations.append(entry)
        else:
            report.medium_violations.append(entry)

    _check_quasi(S, params, g, cfg, rng, report)
    return report


def _check_quasi(S, params, g, cfg, rng, report):
    n = g.n
    min_len = -((-n) // 10)
    M = np.zeros((n, n), dtype=np.int32)
    for (x, y) in S.points:
        M[x - 1, y - 1] = 1
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[1:, 1:] = M.cumsum(0).cumsum(1)

    density = params.m / n  # points per cell, exact
    lo_frac = (1 - params.delta) * density
    hi_frac = (1 + params.delta) * density
    lo_f, hi_f = float(lo_frac), float(hi_frac)

    starts = []
    for a in range(0, n - min_len + 1):
        for b in range(a + min_len - 1, n):
            starts.append((a, b))
    A = np.array([s[0] for s in starts])
    B = np.array([s[1] for s in starts])
    sizes = B - A + 1
    # R[i, :]: column-prefix sums restricted to x-interval i
    R = P[B + 1, :] - P[A, :]
    cnt = R[:, B + 1] - R[:, A]  # cnt[i, j]: x-interval i, y-interval j
    area = np.outer(sizes, sizes)
    bad = (cnt < lo_f * area + 0.5) | (cnt > hi_f * area - 0.5)
    for i, j in zip(*np.nonzero(bad)):
        c = int(cnt[i, j])
        ar = int(area[i, j])
        lo_b, hi_b = lo_frac * ar, hi_frac * ar
        if not lo_b <= c <= hi_b:
            report.quasi_violations.append(
                (int(sizes[i]), int(sizes[j]), c, (float(lo_b), float(hi_b))))

    if rng is None:
        rng = make_rng(cfg.rng_seed)
    for _ in range(cfg.quasi_sample_pairs):
        si = int(rng.integers(min_len, n + 1))
        sj = int(rng.integers(min_len, n + 1))
        I = rng.choice(n, size=si, replace=False)
        J = rng.choice(n, size=sj, replace=False)
        c = int(M[np.ix_(I, J)].sum())
        lo_b, hi_b = lo_frac * si * sj, hi_frac * si * sj
        if not lo_b <= c <= hi_b:
            report.quasi_violations.append((si, sj, c, (float(lo_b), float(hi_b))))
