"""Plain pass/fail reports returned by the verification helpers."""

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an identity check: how many cases ran, which ones broke."""

    checked: int
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok
