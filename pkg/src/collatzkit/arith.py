"""Integer primitives: the Collatz step map and odd/even-part splitting.

Everything works on plain Python ints (arbitrary precision) and the domain
is the positive naturals; 0 is rejected at every entry point.
"""

from dataclasses import dataclass


def require_natural(n: int, name: str = "n") -> None:
    """Reject anything that is not an integer >= 1."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{name} must be an integer >= 1, got {n!r}")


def collatz_step(n: int) -> int:
    """n/2 for even n, 3n+1 for odd n."""
    require_natural(n)
    return n >> 1 if n & 1 == 0 else 3 * n + 1


def two_adic_valuation(n: int) -> int:
    """Exponent of the largest power of 2 dividing n.

    two_adic_valuation(3200) = 7 because 3200 = 2**7 * 25.
    """
    require_natural(n)
    return (n & -n).bit_length() - 1


def odd_part(n: int) -> int:
    """n with all factors of 2 stripped; always odd."""
    require_natural(n)
    return n >> ((n & -n).bit_length() - 1)


def even_part(n: int) -> int:
    """Largest power of 2 dividing n; even_part(n) * odd_part(n) = n."""
    require_natural(n)
    return n & -n


@dataclass(frozen=True)
class TwoAdicSplit:
    """A natural factored as odd_part * 2**exponent."""

    odd_part: int
    exponent: int

    @property
    def even_part(self) -> int:
        return 1 << self.exponent

    def recompose(self) -> int:
        return self.odd_part << self.exponent


def two_adic_split(n: int) -> TwoAdicSplit:
    """Split n into its odd part and the exact power of 2 it carries.

    Only trailing binary zeros are inspected; no factorization beyond the
    prime 2 happens anywhere in this package.
    """
    require_natural(n)
    u = (n & -n).bit_length() - 1
    return TwoAdicSplit(odd_part=n >> u, exponent=u)
