"""Odd-part iteration with a distance-based stopping rule.

Instead of halving one factor of 2 at a time, each iteration applies the
step map to the previous odd part and strips the whole power of 2 at once:

    x_i = 3 * y_{i-1} + 1,   y_i = odd_part(x_i),   u_i = valuation(x_i)

Row i also records eta_i = y_0 - y_i, the integer parameter that places
(x_{i+1}, y_i) inside the solution family of x - 3y = 1, so consecutive rows
satisfy x_{i+1} = x_1 - 3*eta_i.

Termination watches the point sequence p_i = (x_{i+1}, y_i): row i stores
v_sq, the exact squared Euclidean distance |p_{i+1} - p_i|^2, and the
iteration stops when it hits 0, which happens exactly at the fixed point
(4, 1).  v_sq stays an exact integer; square roots appear only in display
code.  The final row's own v_sq is left undefined because its successor
point is never materialized.
"""

from dataclasses import dataclass

from .arith import require_natural
from .classical import classical_trajectory
from .errors import DEFAULT_BUDGET, BudgetExhaustedError
from .report import CheckReport


@dataclass(slots=True)
class TraceRow:
    w: int                # row index
    x: int                # step-map image of the previous odd part
    y: int                # odd part of x
    u: int                # two-adic valuation of x
    eta: int              # y_0 - y
    v_sq: int | None = None  # squared distance to the next point pair; None on the last row

    @property
    def z(self) -> int:
        """Power-of-2 part of x, always 2**u; derived, never stored."""
        return 1 << self.u


@dataclass
class AcceleratedTrace:
    input: int
    rows: list[TraceRow]
    i_min: int | None     # first row with odd part 1
    terminated: bool      # distance reached 0 within budget


def accelerated_trace(n: int, max_iters: int = DEFAULT_BUDGET) -> AcceleratedTrace:
    """Run the odd-part iteration from n until the distance rule fires.

    Raises BudgetExhaustedError if max_iters iterations pass without the
    squared distance reaching 0 (undecided).  A returned trace always ends
    one row after the first zero distance, i.e. at the (4, 1) fixed point;
    the constant tail beyond it is not materialized.
    """
    require_natural(n)
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")
    u0 = (n & -n).bit_length() - 1
    y0 = n >> u0
    rows = [TraceRow(w=0, x=n, y=y0, u=u0, eta=0)]
    i_min = 0 if y0 == 1 else None
    y_prev = y0
    for i in range(1, max_iters + 1):
        x = 3 * y_prev + 1          # y_prev is odd, so this is the step map
        u = (x & -x).bit_length() - 1
        y = x >> u
        # lookahead x_{i+1} = 3y + 1 pairs (x_{i+1}, y_i) against (x_i, y_{i-1})
        v_sq = (3 * y + 1 - x) ** 2 + (y - y_prev) ** 2
        rows[-1].v_sq = v_sq
        rows.append(TraceRow(w=i, x=x, y=y, u=u, eta=y0 - y))
        if i_min is None and y == 1:
            i_min = i
        if v_sq == 0:
            return AcceleratedTrace(input=n, rows=rows, i_min=i_min, terminated=True)
        y_prev = y
    raise BudgetExhaustedError("odd-part trace", n, max_iters)


def verify_eta_relation(t: AcceleratedTrace) -> CheckReport:
    """Check eta_i = y_0 - y_i on every row and x_{i+1} = x_1 - 3*eta_i
    wherever the next row exists.  Violations are never expected."""
    if len(t.rows) < 2:
        raise ValueError("need at least two trace rows")
    y0 = t.rows[0].y
    x1 = t.rows[1].x
    bad = []
    for i, row in enumerate(t.rows):
        if row.eta != y0 - row.y:
            bad.append(f"i={i}: eta {row.eta} != y_0 - y_i = {y0 - row.y}")
        if i + 1 < len(t.rows):
            want = x1 - 3 * row.eta
            got = t.rows[i + 1].x
            if got != want:
                bad.append(f"i={i}: x_{{i+1}} {got} != x_1 - 3*eta_i = {want}")
    return CheckReport(checked=len(t.rows), violations=tuple(bad))


def cardinality_formula(t: AcceleratedTrace) -> int:
    """i_min + sum of u over rows 0..i_min, plus 1.

    Counts the distinct values the classical trajectory of the trace input
    visits before first reaching 1: one value per odd iterate after the
    first, one per halving step, plus the starting value.
    """
    if t.i_min is None:
        raise ValueError(f"trace of {t.input} never reached odd part 1")
    return t.i_min + sum(row.u for row in t.rows[: t.i_min + 1]) + 1


@dataclass(frozen=True)
class CrossCheckResult:
    """Agreement between the odd-part trace and the brute-force oracle."""

    n: int
    i_min: int
    cardinality: int
    stopping_time: int
    trajectory_cardinality: int
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def cross_check(n: int, max_budget: int = DEFAULT_BUDGET) -> CrossCheckResult:
    """Verify the accelerated trace of n against brute-force iteration.

    Asserts the cardinality formula equals the total stopping time plus one
    and the trajectory-set size, that the trace's odd parts y_0..y_{i_min}
    are exactly the odd values of the classical trajectory, and that the sum
    of the u column counts the halving steps.  Budget exhaustion on either
    side propagates as BudgetExhaustedError (undecided).
    """
    trace = accelerated_trace(n, max_budget)
    traj = classical_trajectory(n, max_budget, stop_at_one=True)
    card = cardinality_formula(trace)
    stopping = len(traj.values) - 1
    set_card = len(set(traj.values))

    bad = []
    if card != stopping + 1:
        bad.append(f"cardinality {card} != stopping time {stopping} + 1")
    if card != set_card:
        bad.append(f"cardinality {card} != trajectory set size {set_card}")
    head = trace.rows[: trace.i_min + 1]
    trace_odds = [row.y for row in head]
    classical_odds = [v for v in traj.values if v & 1]
    if trace_odds != classical_odds:
        bad.append("odd parts of the trace disagree with the trajectory's odd values")
    u_sum = sum(row.u for row in head)
    halvings = sum(1 for v in traj.values[:-1] if v & 1 == 0)
    if u_sum != halvings:
        bad.append(f"u column sums to {u_sum} but the trajectory halves {halvings} times")
    return CrossCheckResult(n=n, i_min=trace.i_min, cardinality=card,
                            stopping_time=stopping, trajectory_cardinality=set_card,
                            violations=tuple(bad))
