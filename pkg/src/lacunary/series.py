"""A single sparse series theta = sum of base**(-a_n): exact rationals only.

The n-th partial sum over a common denominator g**a_n has numerator
N = sum(g**(a_n - a_k), k=1..n).  Every term but the last is divisible
by g, so N = 1 (mod g) and the fraction is already reduced; the reduced
denominator g**a_n is an invariant this module actively checks.

Partial sums are materialized on demand: q_n has Theta(a_n) digits, so
construction of g**e is gated by MATERIALIZE_BITS.  Tail bounds come in
two grades: the citable pair (1/g**a_{n+1}, 2/g**a_{n+1}) and the
tighter certified bound g/(g-1) * g**(-a_{n+1}); when a_{n+1} is beyond
reach the certified bound falls back to exponent 2*a_n, which is always
valid because each schedule step at least doubles the exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ExponentBudgetExceeded,
    InternalError,
    InvalidConfigError,
    PrecisionUnattainable,
)
from .intmath import MATERIALIZE_BITS
from .interval import RationalInterval
from .schedule import PowerSchedule

# Hard stop for depth searches; budgets fire long before this in practice.
MAX_DEPTH = 64


@dataclass(frozen=True)
class Convergent:
    """A reduced fraction p/q tagged with the index it came from."""

    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidConfigError("n", f"index must be positive, got {self.n}")
        if self.q < 1:
            raise InvalidConfigError("q", f"denominator must be positive, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise InvalidConfigError("p/q", f"not reduced: gcd({self.p}, {self.q}) > 1")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


class LacunarySeries:
    """theta = sum over n >= 1 of base**(-a_n), a_n from a PowerSchedule."""

    def __init__(self, base: int, schedule: PowerSchedule):
        if not isinstance(base, int) or isinstance(base, bool) or base < 2:
            raise InvalidConfigError("base", f"must be an integer >= 2, got {base!r}")
        self.base = base
        self.schedule = schedule

    def __repr__(self) -> str:
        return f"LacunarySeries(base={self.base}, schedule={self.schedule!r})"

    def _power(self, e: int) -> int:
        """base**e, refused when the result would be absurdly wide."""
        if e * self.base.bit_length() > MATERIALIZE_BITS:
            raise ExponentBudgetExceeded(
                f"{self.base}**{e} would need about {e * self.base.bit_length()} bits, "
                f"over the {MATERIALIZE_BITS}-bit materialization cap")
        return self.base ** e

    def partial_sum(self, n: int) -> Convergent:
        """First n terms as a reduced fraction; denominator is base**a_n."""
        if not isinstance(n, int) or n < 1:
            raise InvalidConfigError("n", f"index must be a positive integer, got {n!r}")
        a_n = self.schedule.exponent(n)
        q = self._power(a_n)
        p = sum(self._power(a_n - self.schedule.exponent(k)) for k in range(1, n + 1))
        if p % self.base != 1:
            raise InternalError(f"numerator {p} is not 1 mod {self.base}; reduction law broken")
        if not 0 < p < q:
            raise InternalError(f"partial sum {p}/{q} escaped (0, 1)")
        return Convergent(n, p, q)

    def tail_sandwich(self, n: int) -> tuple[Fraction, Fraction]:
        """The citable two-sided tail bracket (1/g**a_{n+1}, 2/g**a_{n+1})."""
        step = self._power(self.schedule.exponent(n + 1))
        return Fraction(1, step), Fraction(2, step)

    def rigorous_tail_upper(self, n: int) -> Fraction:
        """Certified bound g/(g-1) * g**(-a_{n+1}) on the tail past n terms.

        Valid because exponents increase by at least 1, so the tail is
        dominated by the geometric series with ratio 1/g.
        """
        step = self._power(self.schedule.exponent(n + 1))
        return Fraction(self.base, (self.base - 1) * step)

    def _tail_upper_clamped(self, n: int) -> Fraction:
        """rigorous_tail_upper when a_{n+1} is reachable, else the fallback
        with exponent 2*a_n (sound: each step multiplies the exponent by
        an integer factor >= 2)."""
        try:
            a_next = self.schedule.exponent(n + 1)
            if a_next * self.base.bit_length() <= MATERIALIZE_BITS:
                return Fraction(self.base, (self.base - 1) * self.base ** a_next)
        except ExponentBudgetExceeded:
            pass
        return Fraction(self.base, (self.base - 1) * self._power(2 * self.schedule.exponent(n)))

    def enclose(self, n_terms: int) -> RationalInterval:
        """Exact interval containing theta, width shrinking in n_terms."""
        s = self.partial_sum(n_terms).fraction
        return RationalInterval(s, s + self._tail_upper_clamped(n_terms))

    def decimal_digits(self, digits: int) -> str:
        """Decimal expansion of theta truncated toward zero to `digits` places.

        Correctness is certified by interval agreement: enclosures are
        deepened until both endpoints truncate identically.
        """
        if not isinstance(digits, int) or digits < 1:
            raise InvalidConfigError("digits", f"must be a positive integer, got {digits!r}")
        for depth in range(1, MAX_DEPTH + 1):
            try:
                iv = self.enclose(depth)
            except ExponentBudgetExceeded as exc:
                raise PrecisionUnattainable(
                    f"no enclosure tight enough for {digits} decimal places "
                    f"within the configured budgets") from exc
            s = digits_from_interval(iv, digits)
            if s is not None:
                return s
        raise PrecisionUnattainable(
            f"no agreement after {MAX_DEPTH} enclosure levels for {digits} places")


def digits_from_interval(iv: RationalInterval, digits: int) -> str | None:
    """Toward-zero decimal string, or None if the endpoints disagree.

    Both endpoints must truncate to the same multiple of 10**-digits;
    then that truncation is the correct toward-zero expansion of every
    value in the interval.
    """
    if digits < 1:
        raise InvalidConfigError("digits", f"must be positive, got {digits}")
    scale = 10 ** digits
    t_lo = int(iv.lo * scale)  # int() on Fraction truncates toward zero
    t_hi = int(iv.hi * scale)
    if t_lo != t_hi:
        return None
    return format_fixed(t_lo, digits)


def format_fixed(t: int, digits: int) -> str:
    """Render t * 10**-digits in plain decimal with `digits` places."""
    sign = "-" if t < 0 else ""
    whole, frac = divmod(abs(t), 10 ** digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def deepest_feasible(s: LacunarySeries, hard_cap: int = MAX_DEPTH) -> int:
    """Largest depth m for which enclose(s, m) stays within every budget.

    Checks the worst case per level: the partial sum needs base**a_m and
    the clamped tail may need base**(2*a_m).  Returns 0 when even one
    term is out of reach.
    """
    deepest = 0
    for cand in range(1, hard_cap + 1):
        try:
            a = s.schedule.exponent(cand)
        except ExponentBudgetExceeded:
            break
        if 2 * a * s.base.bit_length() > MATERIALIZE_BITS:
            break
        deepest = cand
    return deepest
