"""Brute-force Collatz trajectories and their discrete derivatives.

This is the oracle side of the package: plain step-by-step iteration,
against which the accelerated odd-part iteration is cross-checked.
"""

from dataclasses import dataclass

from .arith import require_natural
from .errors import DEFAULT_BUDGET, BudgetExhaustedError
from .report import CheckReport


@dataclass(frozen=True)
class ClassicalTrajectory:
    """The orbit start, C(start), C^2(start), ... with forward differences.

    deltas[k] = values[k+1] - values[k], one entry shorter than values.
    reached_one_at is the smallest index holding 1, or None.
    """

    start: int
    values: tuple[int, ...]
    deltas: tuple[int, ...]
    reached_one_at: int | None


def classical_trajectory(n: int, max_steps: int = DEFAULT_BUDGET,
                         stop_at_one: bool = True) -> ClassicalTrajectory:
    """Iterate the step map from n for at most max_steps applications.

    With stop_at_one the trajectory ends at the first value equal to 1 and a
    spent budget raises BudgetExhaustedError (undecided, not divergent).
    Without it, exactly max_steps applications are made, continuing through
    the 4 -> 2 -> 1 cycle, so values[k] is the k-th iterate for k in
    0..max_steps.
    """
    require_natural(n)
    if max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")
    values = [n]
    v = n
    if stop_at_one:
        steps = 0
        while v != 1:
            if steps >= max_steps:
                raise BudgetExhaustedError("classical trajectory", n, max_steps)
            v = v >> 1 if v & 1 == 0 else 3 * v + 1
            values.append(v)
            steps += 1
    else:
        for _ in range(max_steps):
            v = v >> 1 if v & 1 == 0 else 3 * v + 1
            values.append(v)
    deltas = tuple(values[k + 1] - values[k] for k in range(len(values) - 1))
    try:
        one_at = values.index(1)
    except ValueError:
        one_at = None
    return ClassicalTrajectory(start=n, values=tuple(values), deltas=deltas,
                               reached_one_at=one_at)


def total_stopping_time(n: int, max_steps: int = DEFAULT_BUDGET) -> int:
    """Smallest k with the k-th iterate of n equal to 1."""
    require_natural(n)
    v = n
    k = 0
    while v != 1:
        if k >= max_steps:
            raise BudgetExhaustedError("total stopping time", n, max_steps)
        v = v >> 1 if v & 1 == 0 else 3 * v + 1
        k += 1
    return k


def trajectory_set(n: int, max_steps: int = DEFAULT_BUDGET) -> set[int]:
    """All values visited from n up to and including the first 1.

    Its cardinality is total_stopping_time(n) + 1: nothing can repeat before
    1 is reached, or the orbit would cycle and never get there.
    """
    return set(classical_trajectory(n, max_steps, stop_at_one=True).values)


def discrete_derivatives(t: ClassicalTrajectory) -> tuple[int, ...]:
    """Forward differences values[k+1] - values[k] of a trajectory."""
    if len(t.values) < 2:
        raise ValueError("need at least two trajectory values")
    return t.deltas


def check_parity_sign_law(t: ClassicalTrajectory) -> CheckReport:
    """Verify parity <=> derivative sign at every trajectory index.

    An odd value v must be followed by a rise of exactly 2v + 1; an even
    value v by a fall of exactly v/2. This is an exact identity of the step
    map, so the report is expected to come back clean, always.
    """
    bad = []
    for k, (v, d) in enumerate(zip(t.values, t.deltas)):
        if v & 1:
            if d <= 0 or d != 2 * v + 1:
                bad.append(f"k={k}: odd value {v} has delta {d}, expected {2 * v + 1}")
        else:
            if d >= 0 or d != -(v >> 1):
                bad.append(f"k={k}: even value {v} has delta {d}, expected {-(v >> 1)}")
    return CheckReport(checked=len(t.deltas), violations=tuple(bad))
