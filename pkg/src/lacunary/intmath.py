"""Exact integer and rational helpers: roots, power decompositions, decimal output.

Everything here is pure integer/Fraction arithmetic; no floats enter any
result (floats appear only as Newton starting guesses).
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "MATERIALIZE_BITS",
    "introot",
    "primitive_power",
    "floor_log10",
    "sci_string",
    "root_sci_string",
]

# Cap on any big integer we agree to build in full (~4 MiB).  Exponent
# schedules themselves may go far beyond this; only materialization of
# g**a_n is gated.
MATERIALIZE_BITS = 1 << 25


def introot(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0; returns (r, exact) with r**k <= n < (r+1)**k."""
    if n < 0 or k < 1:
        raise ValueError("introot requires n >= 0 and k >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    # Newton iteration on integers, seeded one bit high so it descends.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x, x ** k == n


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i in range(2, limit + 1) if sieve[i]]


def primitive_power(b: int) -> tuple[int, int]:
    """Unique decomposition b = m**t with m not itself a perfect power.

    Two pure powers b1**e1 and b2**e2 are equal iff their primitive bases
    coincide and t1*e1 == t2*e2, which is what makes this the exact
    equality test for power comparisons.
    """
    if b < 2:
        raise ValueError("primitive_power requires b >= 2")
    t = 1
    for p in _small_primes(max(2, b.bit_length())):
        while True:
            r, exact = introot(b, p)
            if exact and r >= 2:
                b = r
                t *= p
            else:
                break
        if b.bit_length() <= p:  # no further prime exponent can apply
            break
    return b, t


def floor_log10(x: Fraction) -> int:
    """Exact floor(log10(x)) for x > 0."""
    if x <= 0:
        raise ValueError("floor_log10 requires x > 0")
    p, q = x.numerator, x.denominator
    # 10**e <= p/q  <=>  q*10**e <= p  (e may be negative: p*10**-e >= q)
    e = int((p.bit_length() - q.bit_length()) * 0.30103) - 1
    while _le_pow10(e + 1, p, q):
        e += 1
    while not _le_pow10(e, p, q):
        e -= 1
    return e


def _le_pow10(e: int, p: int, q: int) -> bool:
    if e >= 0:
        return q * 10 ** e <= p
    return q <= p * 10 ** (-e)


def root_sci_string(x: Fraction, v: int, sig: int = 6) -> str:
    """Scientific-notation string of x**(1/v), truncated toward zero.

    x must be a positive rational; v >= 1. Digits are exact: the printed
    mantissa is floor(x**(1/v) * 10**(sig-1-e)) for the true decade e.
    """
    if x < 0:
        raise ValueError("root_sci_string requires x >= 0")
    if x == 0:
        return "0"
    if v < 1 or sig < 1:
        raise ValueError("need v >= 1 and sig >= 1")
    # decade e with 10**e <= x**(1/v) < 10**(e+1), i.e. 10**(v*e) <= x
    e = floor_log10(x) // v
    p, q = x.numerator, x.denominator
    while _le_pow10(v * (e + 1), p, q):
        e += 1
    while not _le_pow10(v * e, p, q):
        e -= 1
    # floor(x**(1/v) * 10**(sig-1-e)) == introot(floor(x * 10**(v*(sig-1-e))), v)
    shift = sig - 1 - e
    if shift >= 0:
        scaled = p * 10 ** (v * shift) // q
    else:
        scaled = p // (q * 10 ** (v * (-shift)))
    digits, _ = introot(scaled, v)
    s = str(digits)
    if len(s) != sig:
        raise AssertionError(f"decade normalization failed for {x} (got {s!r})")
    mantissa = s[0] + ("." + s[1:] if sig > 1 else "")
    return f"{mantissa}e{e:+d}"


def sci_string(x: Fraction, sig: int = 6) -> str:
    """Scientific-notation string of x, truncated toward zero."""
    if x < 0:
        return "-" + root_sci_string(-x, 1, sig)
    return root_sci_string(x, 1, sig)
