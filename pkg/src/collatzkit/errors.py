"""Shared iteration-budget handling.

Non-convergence of the step map is undecidable by finite iteration, so a
spent budget is reported as "undecided" and never as "diverges".
"""

DEFAULT_BUDGET = 10**6


class BudgetExhaustedError(RuntimeError):
    """The iteration budget ran out before the computation could decide."""

    def __init__(self, what: str, n: int, budget: int):
        super().__init__(f"{what} undecided for n={n}: budget of {budget} iterations exhausted")
        self.what = what
        self.n = n
        self.budget = budget
