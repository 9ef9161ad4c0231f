"""Linear Diophantine equations a*x + b*y = c over the integers.

The equation is solvable exactly when gcd(a, b) divides c, and every
solution is then particular + eta * step for a single integer parameter eta.
The step-map specializations x - 3y = 1 (odd y) and 2x - y = 0 (even y) are
what tie the odd-part iteration to this machinery.
"""

from dataclasses import dataclass

from .arith import collatz_step, require_natural
from .errors import DEFAULT_BUDGET
from .report import CheckReport


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and a*s + b*t = g.

    Handles negative inputs; g is 0 only for a = b = 0.
    """
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        return -r0, -s0, -t0
    return r0, s0, t0


@dataclass(frozen=True)
class DiophantineSolution:
    """Full solution family of a*x + b*y = c.

    particular is one solution; step is (b/gcd, -a/gcd), and every solution
    is particular + eta * step componentwise for integer eta.
    """

    gcd: int
    particular: tuple[int, int]
    step: tuple[int, int]

    def point(self, eta: int) -> tuple[int, int]:
        s, t = self.particular
        dx, dy = self.step
        return (s + eta * dx, t + eta * dy)


def solve_linear_diophantine(a: int, b: int, c: int) -> DiophantineSolution | None:
    """Solve a*x + b*y = c; None when gcd(a, b) does not divide c."""
    if a == 0 and b == 0:
        raise ValueError("a and b cannot both be zero")
    g, s, t = extended_gcd(a, b)
    if c % g:
        return None
    k = c // g
    return DiophantineSolution(gcd=g, particular=(s * k, t * k),
                               step=(b // g, -(a // g)))


def verify_collatz_solvability(y0: int, max_iters: int = DEFAULT_BUDGET) -> CheckReport:
    """Check that x = C(y) is solvable at y = y0 in the Diophantine sense.

    Odd y0: (3*y0 + 1, y0) must satisfy x - 3y = 1, and the whole odd-part
    trace started at y0 must satisfy the eta relation, i.e. the family
    anchored at (x_1, y_0) regenerates every later row.  Even y0:
    (y0/2, y0) must satisfy 2x - y = 0.
    """
    from .accelerated import accelerated_trace, verify_eta_relation

    require_natural(y0, "y0")
    x = collatz_step(y0)
    bad = []
    checked = 1
    if y0 & 1:
        if x - 3 * y0 != 1:
            bad.append(f"({x}, {y0}) does not satisfy x - 3y = 1")
        trace_report = verify_eta_relation(accelerated_trace(y0, max_iters))
        checked += trace_report.checked
        bad.extend(trace_report.violations)
    else:
        if 2 * x - y0 != 0:
            bad.append(f"({x}, {y0}) does not satisfy 2x - y = 0")
    return CheckReport(checked=checked, violations=tuple(bad))
