from fractions import Fraction

import pytest

from lacunary import CompositeNumber, LacunarySeries, Op, PowerSchedule


def build_example(op: Op = Op.SUM, budget_bits: int = 20) -> CompositeNumber:
    """The running example: bases {3, 2}, a1=2, squaring schedule."""
    sched = PowerSchedule(2, Fraction(1), budget_bits=budget_bits)
    return CompositeNumber(op, LacunarySeries(3, sched), LacunarySeries(2, sched))


@pytest.fixture
def example_sum() -> CompositeNumber:
    return build_example(Op.SUM)


@pytest.fixture
def example_schedule() -> PowerSchedule:
    return PowerSchedule(2, Fraction(1))
