"""Order relations between pure powers b**e too large to materialize.

Strategy, in order:
  1. zero exponents are handled directly (b**0 = 1);
  2. both bases are rewritten over their primitive base (b = m**t with m
     not itself a perfect power); a shared primitive base reduces the
     question to an exact integer comparison of rewritten exponents, and
     distinct primitive bases prove the values unequal;
  3. for provably unequal values, e1*ln(b1) vs e2*ln(b2) is decided with
     directed-rounding log enclosures, doubling the precision until the
     intervals separate (termination is guaranteed by step 2).

No floating point touches any decision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import InvalidConfigError
from .intmath import MATERIALIZE_BITS, primitive_power
from .logenc import ln_fraction_interval, ln_int_interval

_START_PREC = 64
# 2**61 - 1 (prime): a mismatch of residues proves the values unequal.
_M61 = (1 << 61) - 1
# Threshold comparisons stop doubling here and settle exactly instead; a
# threshold still undecided at this precision agrees with the power to
# thousands of bits, so it is about as large as the power itself and an
# exact comparison costs no more than the caller already paid to build it.
_THRESHOLD_PREC_CAP = 8192


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class PurePower:
    """An integer of the form base**exp, kept symbolic."""

    base: int
    exp: int

    def __post_init__(self):
        if not isinstance(self.base, int) or isinstance(self.base, bool) or self.base < 2:
            raise InvalidConfigError("base", f"must be an integer >= 2, got {self.base!r}")
        if not isinstance(self.exp, int) or isinstance(self.exp, bool) or self.exp < 0:
            raise InvalidConfigError("exp", f"must be a nonnegative integer, got {self.exp!r}")

    def bit_bound(self) -> int:
        """Upper bound on the bit length of the materialized value."""
        return self.exp * self.base.bit_length()

    def materialize(self) -> int:
        return self.base ** self.exp


@dataclass(frozen=True)
class CompareDiagnostics:
    """How a comparison was decided; `precisions` lists the fractional-bit
    precisions tried on the log path (doubling schedule)."""

    ordering: Ordering
    method: str  # "exponent-zero" | "common-base" | "log-enclosure"
    precisions: Tuple[int, ...] = ()


def compare(x: PurePower, y: PurePower) -> Ordering:
    return compare_trace(x, y).ordering


def compare_trace(x: PurePower, y: PurePower) -> CompareDiagnostics:
    """Ordering of the exact values of x and y, with decision diagnostics."""
    if x.exp == 0 or y.exp == 0:
        if x.exp == y.exp:
            order = Ordering.EQUAL
        elif x.exp == 0:
            order = Ordering.LESS
        else:
            order = Ordering.GREATER
        return CompareDiagnostics(order, "exponent-zero")
    m1, t1 = primitive_power(x.base)
    m2, t2 = primitive_power(y.base)
    if m1 == m2:
        e1, e2 = t1 * x.exp, t2 * y.exp
        if e1 < e2:
            order = Ordering.LESS
        elif e1 > e2:
            order = Ordering.GREATER
        else:
            order = Ordering.EQUAL
        return CompareDiagnostics(order, "common-base")
    # distinct primitive bases, positive exponents: values are distinct,
    # so the log refinement below terminates
    prec = _START_PREC
    tried = []
    while True:
        tried.append(prec)
        lx = ln_int_interval(x.base, prec) * x.exp
        ly = ln_int_interval(y.base, prec) * y.exp
        if lx.hi < ly.lo:
            return CompareDiagnostics(Ordering.LESS, "log-enclosure", tuple(tried))
        if ly.hi < lx.lo:
            return CompareDiagnostics(Ordering.GREATER, "log-enclosure", tuple(tried))
        prec *= 2


def power_vs_threshold(x: PurePower, threshold) -> Ordering:
    """Ordering of base**exp against a positive rational threshold.

    Materializes the power when it fits the bit cap (the exact path);
    beyond the cap, an integer threshold of matching bit length is first
    screened for equality (modular disproofs, then one exact confirm),
    the order is decided by log enclosures with doubling precision, and
    a near-miss that defeats the precision cap falls back to one exact
    cross-multiplied comparison.  Total for every representable input.
    """
    t = Fraction(threshold)
    if t <= 0:
        raise InvalidConfigError("threshold", f"must be positive, got {t}")
    if x.bit_bound() <= MATERIALIZE_BITS:
        v = x.materialize()
        if v < t:
            return Ordering.LESS
        if v > t:
            return Ordering.GREATER
        return Ordering.EQUAL
    # Huge power: before the log refinement (which cannot terminate on
    # equal inputs) equality must be excluded exactly.  Only an integer
    # threshold of exactly matching bit length can be equal; cheap exact
    # modular disproofs run first, and the rare survivor is settled by
    # one full power construction (no worse than the caller having built
    # the threshold itself).
    if t.denominator == 1 and t.numerator >= 2:
        tn = t.numerator
        bl = x.base.bit_length()
        tb = tn.bit_length()
        if x.exp * (bl - 1) + 1 <= tb <= x.exp * bl:
            if (pow(x.base, x.exp, _M61) == tn % _M61
                    and pow(x.base, x.exp, 1 << 64) == tn % (1 << 64)
                    and x.materialize() == tn):
                return Ordering.EQUAL
    prec = _START_PREC
    while prec <= _THRESHOLD_PREC_CAP:
        lx = ln_int_interval(x.base, prec) * x.exp
        lt = ln_fraction_interval(t, prec)
        if lx.hi < lt.lo:
            return Ordering.LESS
        if lt.hi < lx.lo:
            return Ordering.GREATER
        prec *= 2
    # Still undecided: the threshold is within 2**-cap of the power in
    # log, i.e. a deliberate near-miss of comparable size.  Settle it
    # exactly; the cross-multiplied comparison is the only sound option
    # left and its cost is bounded by the size of the given threshold.
    v = x.materialize()
    lhs, rhs = v * t.denominator, t.numerator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL
