"""Regular continued fractions normalized to an odd last index.

For coprime integers a and b >= 1 the expansion a/b = [q0; q1, ..., qn]
is computed by floor-division Euclid and then normalized so that the
last index n is odd. Every rational has exactly one expansion of this
shape, which pins down the alternating sum

    T(a, b) = -q0 + q1 - q2 + ... + qn

so that the final quotient always enters with a plus sign.
"""

from dataclasses import dataclass
from fractions import Fraction

from dedsum.arith import require_coprime


def _raw_quotients(a: int, b: int) -> list[int]:
    """Plain Euclidean expansion; last quotient >= 2 unless a/b is an integer."""
    qs = []
    while b != 0:
        q, r = divmod(a, b)
        qs.append(q)
        a, b = b, r
    return qs


def _normalize_odd(qs: list[int]) -> list[int]:
    """Force an odd last index n (even quotient count)."""
    n = len(qs) - 1
    if n % 2 == 1:
        return qs
    if n == 0:
        # [q0] -> [q0 - 1; 1]
        return [qs[0] - 1, 1]
    if qs[-1] >= 2:
        # [..., qn] -> [..., qn - 1, 1]
        return qs[:-1] + [qs[-1] - 1, 1]
    # [..., q, 1] -> [..., q + 1]
    return qs[:-2] + [qs[-2] + 1]


@dataclass(frozen=True)
class CFExpansion:
    """Continued fraction of a rational with an odd last index."""

    head: int
    tail: tuple[int, ...]

    @property
    def n(self) -> int:
        """Index of the last partial quotient (always odd)."""
        return len(self.tail)

    def quotients(self) -> list[int]:
        return [self.head, *self.tail]

    def as_fraction(self) -> Fraction:
        value = Fraction(self.quotients()[-1])
        for q in reversed(self.quotients()[:-1]):
            value = q + 1 / value
        return value

    def __str__(self) -> str:
        return f"[{self.head};{','.join(str(q) for q in self.tail)}]"


def cf_expand(a: int, b: int) -> CFExpansion:
    """Normalized continued fraction of a/b for b >= 1, gcd(a, b) == 1."""
    if b < 1:
        raise ValueError(f"denominator must be positive, got {b}")
    require_coprime(a, b)
    qs = _normalize_odd(_raw_quotients(a, b))
    return CFExpansion(head=qs[0], tail=tuple(qs[1:]))


def t_value(a: int, b: int) -> int:
    """Alternating quotient sum T(a, b) = -q0 + q1 - q2 + ... + qn."""
    qs = cf_expand(a, b).quotients()
    total = -qs[0]
    sign = 1
    for q in qs[1:]:
        total += sign * q
        sign = -sign
    return total
