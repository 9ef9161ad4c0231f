"""collatzkit: Collatz trajectories, odd-part iteration, and verification.

The package has two engines for the same orbit.  The classical side iterates
the step map n -> n/2 (even) / 3n+1 (odd) one application at a time; the
accelerated side jumps odd part to odd part, stripping whole powers of 2,
and stops via an exact integer distance rule at the (4, 1) fixed point.
Everything the accelerated side claims (its eta relation to the linear
Diophantine family of x - 3y = 1, its trajectory-cardinality formula) is
cross-checkable against the brute-force side, per n or in batch ranges.
"""

from .accelerated import (AcceleratedTrace, CrossCheckResult, TraceRow,
                          accelerated_trace, cardinality_formula, cross_check,
                          verify_eta_relation)
from .arith import (TwoAdicSplit, collatz_step, even_part, odd_part,
                    two_adic_split, two_adic_valuation)
from .classical import (ClassicalTrajectory, check_parity_sign_law,
                        classical_trajectory, discrete_derivatives,
                        total_stopping_time, trajectory_set)
from .diophantine import (DiophantineSolution, extended_gcd,
                          solve_linear_diophantine, verify_collatz_solvability)
from .errors import DEFAULT_BUDGET, BudgetExhaustedError
from .report import CheckReport
from .scan import Pow3Result, ScanSummary, powers_of_three, scan_range

__all__ = [
    "AcceleratedTrace",
    "BudgetExhaustedError",
    "CheckReport",
    "ClassicalTrajectory",
    "CrossCheckResult",
    "DEFAULT_BUDGET",
    "DiophantineSolution",
    "Pow3Result",
    "ScanSummary",
    "TraceRow",
    "TwoAdicSplit",
    "accelerated_trace",
    "cardinality_formula",
    "check_parity_sign_law",
    "classical_trajectory",
    "collatz_step",
    "cross_check",
    "discrete_derivatives",
    "even_part",
    "extended_gcd",
    "odd_part",
    "powers_of_three",
    "scan_range",
    "solve_linear_diophantine",
    "total_stopping_time",
    "trajectory_set",
    "two_adic_split",
    "two_adic_valuation",
    "verify_collatz_solvability",
    "verify_eta_relation",
]

__version__ = "0.1.0"
