"""Congruence structure of Dedekind sums modulo 8, 24, and 72.

The central object is the correction term mu(a, b), defined for
gcd(a, b) = 1 by a Jacobi symbol when b is odd and by the residue of a
mod 4 when b is even. Its value is always 0 or 4, and it controls

  * whether two sums S(a1, b), S(a2, b) differ by an element of 8Z
    or 24Z (difference_verdict, mu_condition),
  * the residue of b * T(a, b) modulo 8 (bt_congruence_mod8), and
  * the exact residue of b * T(a, b) modulo 24 or 72 (bt_residue).

family_example produces an explicit two-parameter family whose
difference of sums is divisible by 8 but, for suitable parameters,
not by 24.
"""

from dataclasses import dataclass
from fractions import Fraction

from dedsum.arith import jacobi, mod_inverse, require_coprime, sign_mod3
from dedsum.contfrac import t_value
from dedsum.dedekind import b_times_s, dedekind_fast


def mu(a: int, b: int) -> int:
    """Correction term mu(a, b) in {0, 4} for gcd(a, b) = 1, b >= 1.

    For odd b this is 2 - 2(a|b) with (a|b) the Jacobi symbol. For even
    b it is 4 exactly when b == 0 (mod 4) and a == 3 (mod 4).
    """
    if b < 1:
        raise ValueError(f"lower argument must be positive, got {b}")
    require_coprime(a, b)
    if b % 2 == 1:
        return 2 - 2 * jacobi(a, b)
    if b % 4 == 0 and a % 4 == 3:
        return 4
    return 0


def mu_original(a: int, b: int) -> int:
    """Quadratic form (a - 1)(a + b - 1) of the correction term, even b only.

    Agrees with mu(a, b) modulo 8; kept as an independent cross-check.
    """
    if b < 1 or b % 2 == 1:
        raise ValueError(f"lower argument must be even and positive, got {b}")
    require_coprime(a, b)
    return (a - 1) * (a + b - 1)


def mu_condition(a1: int, a2: int, b: int) -> bool:
    """The mod-8b pairing condition on (a1, a2) for fixed b.

    True iff b (a2 mu(b, a1) - a1 mu(b, a2)) ==
    (a1 - a2)(b - 1)(a1 a2 + b - 1)  (mod 8b). Both a1 and a2 must be
    positive and coprime to b; note mu is evaluated with the arguments
    swapped.
    """
    if a1 < 1 or a2 < 1:
        raise ValueError(f"upper arguments must be positive, got {a1}, {a2}")
    lhs = b * (a2 * mu(b, a1) - a1 * mu(b, a2))
    rhs = (a1 - a2) * (b - 1) * (a1 * a2 + b - 1)
    return (lhs - rhs) % (8 * b) == 0


def _in_m_z(x: Fraction, m: int) -> bool:
    """True iff x is an integer divisible by m."""
    return x.denominator == 1 and x.numerator % m == 0


@dataclass(frozen=True)
class DifferenceVerdict:
    """Outcome of the pairing condition next to the actual sum difference."""

    b: int
    a1: int
    a2: int
    condition_holds: bool
    diff_in_8z: bool
    diff_in_24z: bool
    s_diff: Fraction


def difference_verdict(a1: int, a2: int, b: int) -> DifferenceVerdict:
    """Evaluate the pairing condition and S(a1, b) - S(a2, b) together.

    The condition is equivalent to the difference lying in 8Z, and when
    9 does not divide b also to the difference lying in 24Z.
    """
    diff = dedekind_fast(a1, b) - dedekind_fast(a2, b)
    return DifferenceVerdict(
        b=b,
        a1=a1,
        a2=a2,
        condition_holds=mu_condition(a1, a2, b),
        diff_in_8z=_in_m_z(diff, 8),
        diff_in_24z=_in_m_z(diff, 24),
        s_diff=diff,
    )


def bt_congruence_mod8(a: int, b: int) -> bool:
    """Check b T(a, b) == -mu(a, b) + b^2 + 2 - a - a_inv (mod 8).

    a_inv is the inverse of a modulo b taken in 1..b-1. Requires b >= 2;
    a may be any integer coprime to b.
    """
    if b < 2:
        raise ValueError(f"lower argument must be at least 2, got {b}")
    a_inv = mod_inverse(a, b)
    lhs = b * t_value(a, b)
    rhs = -mu(a, b) + b * b + 2 - a - a_inv
    return (lhs - rhs) % 8 == 0


@dataclass(frozen=True)
class BTResidue:
    """Predicted vs. actual residue of b T(a, b) mod 24 (or 72 when 3 | b)."""

    b: int
    a: int
    case_tag: str
    modulus: int
    predicted: int
    actual: int

    @property
    def matches(self) -> bool:
        return self.predicted == self.actual


def bt_residue(a: int, b: int) -> BTResidue:
    """Residue of b T(a, b) modulo 24, or modulo 72 when 3 divides b.

    The prediction splits on the parity class of b (odd; b == 2 mod 4 or
    b == 0 mod 4 with a == 3 mod 4; b == 0 mod 4 with a == 1 mod 4) and
    on whether 3 divides b. a may be any integer coprime to b, b >= 2.
    """
    if b < 2:
        raise ValueError(f"lower argument must be at least 2, got {b}")
    require_coprime(a, b)
    a_inv = mod_inverse(a, b)
    div3 = b % 3 == 0
    modulus = 72 if div3 else 24
    eps_term = 16 * sign_mod3(a) if div3 else 0
    if b % 2 == 1:
        tag = "odd"
        predicted = 9 + 18 * jacobi(a, b) - a - a_inv - eps_term
    elif b % 4 == 2 or a % 4 == 3:
        tag = "even_half"
        predicted = (54 if div3 else 6) - a - a_inv - eps_term
    else:
        tag = "even_quarter"
        predicted = 18 - a - a_inv - eps_term
    tag += "_div3" if div3 else "_ndiv3"
    actual = (b * t_value(a, b)) % modulus
    return BTResidue(
        b=b,
        a=a,
        case_tag=tag,
        modulus=modulus,
        predicted=predicted % modulus,
        actual=actual,
    )


@dataclass(frozen=True)
class FamilyExample:
    """Member of the family b = c d^2, a = c d + 1 with odd c, d."""

    c: int
    d: int
    b: int
    a: int
    s_diff: int

    @property
    def diff_in_8z(self) -> bool:
        return self.s_diff % 8 == 0

    @property
    def diff_in_24z(self) -> bool:
        return self.s_diff % 24 == 0


def family_example(c: int, d: int) -> FamilyExample:
    """Construct the example with S(1, b) - S(a, b) = c (d^2 - 1).

    Requires odd c >= 1 and odd d >= 3. The difference is always in 8Z;
    it is in 24Z iff 3 does not divide d or 3 divides c. The closed form
    is verified against the exact sums before returning.
    """
    if c < 1 or c % 2 == 0:
        raise ValueError(f"first parameter must be odd and positive, got {c}")
    if d < 3 or d % 2 == 0:
        raise ValueError(f"second parameter must be odd and at least 3, got {d}")
    b = c * d * d
    a = c * d + 1
    expected = c * (d * d - 1)
    actual = b_times_s(1, b) - b_times_s(a, b)
    if actual != expected * b:
        raise ArithmeticError(
            f"family identity failed for c={c}, d={d}: "
            f"b(S(1,b)-S(a,b))={actual}, expected {expected * b}"
        )
    return FamilyExample(c=c, d=d, b=b, a=a, s_diff=expected)
