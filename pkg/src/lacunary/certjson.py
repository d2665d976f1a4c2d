"""Canonical JSON for certificates: byte-identical across runs and
round-trips.

Rules: keys appear in the fixed documented order (insertion order is the
schema; nothing is sorted), separators carry no whitespace, every
integer is rendered as a decimal string (consumers with 64-bit JSON
parsers must survive q_n with thousands of digits), rationals are
{"num", "den"} string pairs, intervals are {"lo", "hi"} rational pairs.
Output is ASCII with a single trailing newline.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

from .interval import RationalInterval

# Certificates legitimately carry integers with 10**5+ digits; the
# interpreter's int-to-str guard (CVE-2020-10735 mitigation) would refuse
# them.  Decimal-string emission of exactly these integers is this
# module's contract, so the limit is lifted.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def intstr(x: int) -> str:
    return str(int(x))


def rat(x) -> dict:
    f = Fraction(x)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def interval(iv: RationalInterval) -> dict:
    return {"lo": rat(iv.lo), "hi": rat(iv.hi)}


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True,
                      allow_nan=False) + "\n"


def loads(text: str):
    return json.loads(text)
