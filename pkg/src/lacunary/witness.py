"""Verification chain for the four composites of two lacunary series.

For theta1 (base g1) and theta2 (base g2 < g1) over one shared exponent
schedule, this module certifies at concrete indices n everything a
transcendence argument consumes at that index:

  * the exact reduced convergent of theta1 op theta2 at n;
  * a certified rational upper bound on the gap |value - convergent|
    (4/g2**a_{n+1} for sum and difference, with enclosure-backed
    constants for product and quotient);
  * the threshold index n0 past which g2**a_{n+1} dominates
    (g1*g2)**(d*a_n), decided without materializing either side;
  * the strict approximation test: gap < q_n**(-d_eff), decided by exact
    cleared-power comparisons on enclosure endpoints, with the certified
    margin reported;
  * an interval for the empirical approximation exponent
    -ln(gap)/ln(q_n).

All decisions are exact rational comparisons or directed log enclosures;
no float is ever consulted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import (
    ExponentBudgetExceeded,
    InsufficientDepth,
    InternalError,
    InvalidConfigError,
    NonIntegralExponent,
    NotFound,
    PrecisionUnattainable,
)
from .intmath import root_sci_string
from .interval import RationalInterval
from .logenc import ln_int_interval, ln_of_interval
from .powercmp import Ordering, PurePower, compare
from .series import (
    MAX_DEPTH,
    Convergent,
    LacunarySeries,
    deepest_feasible,
    digits_from_interval,
)

# Enclosure depth for the constants inside product/quotient gap bounds.
_CONSTANT_DEPTH = 4
_MARGIN_DIGITS = 8


class Op(enum.Enum):
    SUM = "sum"
    DIFFERENCE = "difference"
    PRODUCT = "product"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class CompositeNumber:
    """theta1 op theta2 for two series over one schedule, g1 > g2 >= 2."""

    op: Op
    s1: LacunarySeries
    s2: LacunarySeries

    def __post_init__(self):
        if not isinstance(self.op, Op):
            raise InvalidConfigError("op", f"unknown operation {self.op!r}")
        if self.s1.base <= self.s2.base:
            raise InvalidConfigError(
                "g1", f"first base must exceed the second, got g1={self.s1.base} <= g2={self.s2.base}")
        if self.s1.schedule is not self.s2.schedule:
            raise InvalidConfigError("schedule", "both series must share the same schedule object")

    @property
    def g1(self) -> int:
        return self.s1.base

    @property
    def g2(self) -> int:
        return self.s2.base

    @property
    def schedule(self):
        return self.s1.schedule


def composite_convergent(c: CompositeNumber, n: int) -> Convergent:
    """Exact reduced combination of the two partial sums at index n.

    The quotient pairs numerators and denominators as (p1*q2)/(q1*p2)
    before reduction; reduction happens unconditionally, and for bases
    with a common factor the reduced denominator is recorded as-is
    rather than assumed to be (g1*g2)**a_n.
    """
    f1 = c.s1.partial_sum(n).fraction
    f2 = c.s2.partial_sum(n).fraction
    if c.op is Op.SUM:
        f = f1 + f2
    elif c.op is Op.DIFFERENCE:
        f = f1 - f2
    elif c.op is Op.PRODUCT:
        f = f1 * f2
    else:
        f = f1 / f2  # f2 > 0 always
    return Convergent(n, f.numerator, f.denominator)


def value_enclosure(c: CompositeNumber, depth: int) -> RationalInterval:
    """Exact interval containing the composite value, from per-series
    enclosures at `depth` terms combined with interval arithmetic."""
    iv1 = c.s1.enclose(depth)
    iv2 = c.s2.enclose(depth)
    if c.op is Op.SUM:
        return iv1 + iv2
    if c.op is Op.DIFFERENCE:
        return iv1 - iv2
    if c.op is Op.PRODUCT:
        return iv1 * iv2
    return iv1 / iv2  # iv2.lo > 0: positive-interval division


def true_gap_enclosure(c: CompositeNumber, n: int, depth: int,
                       conv: Optional[Convergent] = None) -> RationalInterval:
    """Interval enclosing |value - convergent_n| from a depth-`depth`
    value enclosure.  depth <= n is legal but yields a one-sided interval
    with lower endpoint 0, useless for certification."""
    if conv is None:
        conv = composite_convergent(c, n)
    return (value_enclosure(c, depth) - conv.fraction).abs()


def gap_bound(c: CompositeNumber, n: int) -> Fraction:
    """Certified rational upper bound on |value - convergent_n|.

    sum/difference: 4/g2**a_{n+1} (both tails are under 2/g2**a_{n+1}
    since g1 > g2).  product: 2*(1 + up1 + up2)/g2**a_{n+1} with up_j a
    certified upper bound on theta_j.  quotient (n >= 2 only):
    (2 + 4*g2**a1) * g2**a1 / g2**a_{n+1}, using the exact lower bound
    theta_{n,2} > g2**(-a1).
    """
    a_next = c.schedule.exponent(n + 1)
    step = c.s2._power(a_next)
    if c.op in (Op.SUM, Op.DIFFERENCE):
        return Fraction(4, step)
    if c.op is Op.PRODUCT:
        depth = min(_CONSTANT_DEPTH,
                    deepest_feasible(c.s1), deepest_feasible(c.s2)) or 1
        up = 2 * (1 + c.s1.enclose(depth).hi + c.s2.enclose(depth).hi)
        return up / step
    # quotient
    if n < 2:
        raise InvalidConfigError("n", "quotient gap bound requires n >= 2")
    a1 = c.schedule.exponent(1)
    floor2 = Fraction(1, c.s2._power(a1))
    if not c.s2.partial_sum(n).fraction > floor2:
        raise InternalError(
            f"partial sum of the second series at n={n} is not above {floor2}")
    inv_up = c.s2._power(a1)  # 1/theta2 < g2**a1 since theta2 > g2**(-a1)
    return Fraction((2 + 4 * inv_up) * inv_up, step)


@dataclass(frozen=True)
class ThresholdCheck:
    n: int
    passed: bool  # g2**a_{n+1} > (g1*g2)**(d*a_n)


@dataclass(frozen=True)
class ThresholdScan:
    n0: int
    checks: Tuple[ThresholdCheck, ...]


def find_n0(c: CompositeNumber, d, n_max: int) -> ThresholdScan:
    """Smallest n <= n_max with g2**a_{n+1} > (g1*g2)**(d*a_n).

    Rational d = du/dv is cleared to the integer comparison
    g2**(dv*a_{n+1}) vs (g1*g2)**(du*a_n), decided symbolically.  The
    inequality must persist for every later tested index; a relapse
    would invalidate the whole scan and raises InternalError.
    """
    d = Fraction(d)
    if d <= 2:
        raise InvalidConfigError("d", f"exponent target must exceed 2, got {d}")
    if not isinstance(n_max, int) or n_max < 1:
        raise InvalidConfigError("n_max", f"must be a positive integer, got {n_max!r}")
    du, dv = d.numerator, d.denominator
    both = c.g1 * c.g2
    checks: List[ThresholdCheck] = []
    n0 = None
    for n in range(1, n_max + 1):
        a_n = c.schedule.exponent(n)
        a_next = c.schedule.exponent(n + 1)
        passed = compare(PurePower(c.g2, dv * a_next),
                         PurePower(both, du * a_n)) is Ordering.GREATER
        checks.append(ThresholdCheck(n, passed))
        if passed and n0 is None:
            n0 = n
        elif not passed and n0 is not None:
            raise InternalError(
                f"threshold inequality relapsed at n={n} after holding from n={n0}")
    if n0 is None:
        raise NotFound(f"threshold inequality holds at no index n <= {n_max}")
    return ThresholdScan(n0=n0, checks=tuple(checks))


@dataclass(frozen=True)
class RothCheck:
    """Outcome of the strict test gap < q**(-d_eff) at one index.

    `margin` is the certified ratio gap/threshold as a decimal string:
    the upper-endpoint ratio for a pass (< 1), the lower-endpoint ratio
    for a certified fail (>= 1).  `tie` marks an exact hit of the
    threshold by the certified endpoint.
    """

    n: int
    d_eff: Fraction
    passed: bool
    tie: bool
    margin: str
    depth: int
    gap: RationalInterval


def verify_roth_instance(c: CompositeNumber, n: int, d_eff) -> RothCheck:
    """Decide gap < q_n**(-d_eff) with a certified margin.

    The irrational threshold is cleared: for d_eff = u/v,
    gap.hi < q**(-u/v) iff gap.hi**v * q**u < 1, an exact rational
    comparison.  Starts at enclosure depth n+2 and deepens until the
    comparison is decided or the budget is exhausted.
    """
    d_eff = Fraction(d_eff)
    if d_eff <= 2:
        raise InvalidConfigError("d_eff", f"effective exponent must exceed 2, got {d_eff}")
    if c.op is Op.QUOTIENT and n < 2:
        raise InvalidConfigError("n", "quotient verification starts at n=2")
    conv = composite_convergent(c, n)
    q = conv.q
    u, v = d_eff.numerator, d_eff.denominator
    dmax = min(deepest_feasible(c.s1), deepest_feasible(c.s2))
    if dmax < 1:
        raise InsufficientDepth("no enclosure depth is feasible within the budget")
    qs = q ** u
    for depth in range(min(n + 2, dmax), dmax + 1):
        gap = true_gap_enclosure(c, n, depth, conv=conv)
        hi_stat = gap.hi ** v * qs
        if hi_stat < 1:
            return RothCheck(n=n, d_eff=d_eff, passed=True, tie=False,
                             margin=root_sci_string(hi_stat, v, _MARGIN_DIGITS),
                             depth=depth, gap=gap)
        lo_stat = gap.lo ** v * qs
        if lo_stat >= 1:
            return RothCheck(n=n, d_eff=d_eff, passed=False, tie=lo_stat == 1,
                             margin=root_sci_string(lo_stat, v, _MARGIN_DIGITS),
                             depth=depth, gap=gap)
    raise InsufficientDepth(
        f"no feasible enclosure depth (up to {dmax}) separates the gap at n={n} "
        f"from the threshold")


def empirical_exponent(c: CompositeNumber, n: int, depth: int) -> RationalInterval:
    """Interval for -ln(gap)/ln(q_n), the approximation quality at index n.

    Log precision is tied to depth (64*depth fractional bits) so that
    deeper enclosures give strictly narrower exponent intervals.
    """
    conv = composite_convergent(c, n)
    gap = true_gap_enclosure(c, n, depth, conv=conv)
    return _exponent_interval(gap, conv.q, 64 * depth)


def _exponent_interval(gap: RationalInterval, q: int, prec: int) -> RationalInterval:
    if gap.lo <= 0:
        raise InsufficientDepth(
            "gap enclosure does not separate from zero; deepen the enclosure")
    num = -ln_of_interval(gap, prec)
    den = ln_int_interval(q, prec)
    if den.lo <= 0:
        raise InternalError(f"log enclosure of q={q} is not positive")
    return num / den


@dataclass(frozen=True)
class QuotientForms:
    """Truth values of the two display-level quotient bounds, recorded
    side by side: gap < 4/(q1*q2)**d and gap < 4*(1+theta2)/(q1*p2)**d."""

    q_denominator_form: bool
    p_denominator_form: bool


@dataclass(frozen=True)
class IndexRecord:
    n: int
    error: Optional[str] = None
    notice: Optional[str] = None
    convergent: Optional[Convergent] = None
    gap_bound: Optional[Fraction] = None
    gap: Optional[RationalInterval] = None
    bound_dominates: Optional[bool] = None  # gap.hi <= gap_bound cross-check
    roth: Optional[RothCheck] = None
    exponent_interval: Optional[RationalInterval] = None
    forms: Optional[QuotientForms] = None


@dataclass(frozen=True)
class WitnessCertificate:
    """Machine-checkable record of every verified inequality.

    Everything in here was decided by exact rational arithmetic or
    directed log enclosures; records are ordered by index.
    """

    op: Op
    g1: int
    g2: int
    a1: int
    beta: Fraction
    budget_bits: int
    d: Fraction
    d_eff: Fraction
    n_from: int
    n_to: int
    n0: Optional[int]
    n0_error: Optional[str]
    threshold_checks: Tuple[ThresholdCheck, ...]
    records: Tuple[IndexRecord, ...]
    verdict: str


def certify(c: CompositeNumber, d, n_range: Tuple[int, int],
            d_eff=None) -> WitnessCertificate:
    """Assemble the full certificate over n in [n_range[0], n_range[1]].

    d_eff defaults to (2+d)/2, strictly between 2 and d, absorbing the
    constant factors of the gap bounds.  Component failures are embedded
    per index; other indices still complete.  An empty range yields a
    certificate with a config echo and no records.
    """
    d = Fraction(d)
    if d <= 2:
        raise InvalidConfigError("d", f"exponent target must exceed 2, got {d}")
    if d_eff is None:
        d_eff = (2 + d) / 2
    else:
        d_eff = Fraction(d_eff)
        if d_eff <= 2:
            raise InvalidConfigError("d_eff", f"effective exponent must exceed 2, got {d_eff}")
    n_from, n_to = n_range
    if not isinstance(n_from, int) or not isinstance(n_to, int) or n_from < 1:
        raise InvalidConfigError("n_range", f"need integer bounds with lower >= 1, got {n_range!r}")

    n0 = None
    n0_error = None
    checks: Tuple[ThresholdCheck, ...] = ()
    if n_from <= n_to:
        try:
            scan = find_n0(c, d, n_to)
            n0, checks = scan.n0, scan.checks
        except (NotFound, ExponentBudgetExceeded, NonIntegralExponent) as exc:
            n0_error = f"{type(exc).__name__}: {exc}"

    records = tuple(_index_record(c, n, d, d_eff) for n in range(n_from, n_to + 1))
    passes = sum(1 for r in records if r.roth is not None and r.roth.passed)
    verdict = (f"{passes} of {len(records)} indices pass the strict approximation "
               f"test at exponent {d_eff}")
    if n0 is not None:
        verdict += f"; threshold index n0={n0}"
    return WitnessCertificate(
        op=c.op, g1=c.g1, g2=c.g2,
        a1=c.schedule.a1, beta=c.schedule.beta, budget_bits=c.schedule.budget_bits,
        d=d, d_eff=d_eff, n_from=n_from, n_to=n_to,
        n0=n0, n0_error=n0_error, threshold_checks=checks,
        records=records, verdict=verdict)


def _index_record(c: CompositeNumber, n: int, d: Fraction, d_eff: Fraction) -> IndexRecord:
    if c.op is Op.QUOTIENT and n < 2:
        try:
            conv = composite_convergent(c, n)
        except (ExponentBudgetExceeded, NonIntegralExponent) as exc:
            return IndexRecord(n=n, error=f"{type(exc).__name__}: {exc}")
        return IndexRecord(
            n=n, convergent=conv,
            notice="quotient verification starts at n=2; only the convergent is recorded")
    try:
        conv = composite_convergent(c, n)
        bound = gap_bound(c, n)
        roth = verify_roth_instance(c, n, d_eff)
        gap = roth.gap
        try:
            expo = _exponent_interval(gap, conv.q, 64 * roth.depth)
        except InsufficientDepth:
            expo = None
        forms = None
        if c.op is Op.QUOTIENT:
            forms = _quotient_display_forms(c, n, gap.hi, d)
        return IndexRecord(
            n=n, convergent=conv, gap_bound=bound, gap=gap,
            bound_dominates=gap.hi <= bound, roth=roth,
            exponent_interval=expo, forms=forms)
    except (ExponentBudgetExceeded, NonIntegralExponent, PrecisionUnattainable,
            InsufficientDepth, InvalidConfigError) as exc:
        return IndexRecord(n=n, error=f"{type(exc).__name__}: {exc}")


def _quotient_display_forms(c: CompositeNumber, n: int, gap_hi: Fraction,
                            d: Fraction) -> QuotientForms:
    du, dv = d.numerator, d.denominator
    ps1 = c.s1.partial_sum(n)
    ps2 = c.s2.partial_sum(n)
    depth = min(_CONSTANT_DEPTH, deepest_feasible(c.s2)) or 1
    theta2_up = c.s2.enclose(depth).hi
    q_form = gap_hi ** dv * Fraction(ps1.q * ps2.q) ** du < Fraction(4) ** dv
    p_form = gap_hi ** dv * Fraction(ps1.q * ps2.p) ** du < (4 * (1 + theta2_up)) ** dv
    return QuotientForms(q_denominator_form=q_form, p_denominator_form=p_form)


def composite_digits(c: CompositeNumber, digits: int) -> str:
    """Toward-zero decimal expansion of the composite value, certified by
    enclosure agreement exactly like the per-series version."""
    if not isinstance(digits, int) or digits < 1:
        raise InvalidConfigError("digits", f"must be a positive integer, got {digits!r}")
    for depth in range(1, MAX_DEPTH + 1):
        try:
            iv = value_enclosure(c, depth)
        except ExponentBudgetExceeded as exc:
            raise PrecisionUnattainable(
                f"no enclosure tight enough for {digits} decimal places "
                f"within the configured budgets") from exc
        s = digits_from_interval(iv, digits)
        if s is not None:
            return s
    raise PrecisionUnattainable(
        f"no agreement after {MAX_DEPTH} enclosure levels for {digits} places")
