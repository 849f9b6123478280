from fractions import Fraction

import pytest
from hypothesis import settings

from heckehom.scalars import CyclotomicRoot, GenericQ, PrimeField, RationalQ

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# criterion number -> (description, passed); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}

FIELDS = [
    RationalQ(Fraction(1)),
    RationalQ(Fraction(3, 2)),
    RationalQ(Fraction(-1)),
    PrimeField(2, 1),
    PrimeField(5, 3),
    CyclotomicRoot(2),
    CyclotomicRoot(3),
    GenericQ(),
]


@pytest.fixture(params=FIELDS, ids=lambda F: F.descriptor)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
