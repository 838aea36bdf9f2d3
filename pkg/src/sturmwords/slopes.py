"""Slope values with certified error bounds.

A slope is a real number theta in (0, 1).  Three input forms exist:

* exact rationals (error zero, never refinable, never irrational),
* named constants (log2_3_2, golden, sqrt2m1) evaluated on demand to any
  precision with MPFR directed rounding, so the enclosure is rigorous,
* decimal literals "0.5849...@1e-18" carrying a caller-declared error
  bound.  A finite decimal is literally rational; using this form asserts
  that it stands for an irrational number.  The declared bound is final:
  decimal slopes cannot be refined.

Downstream arithmetic works on the rational approximation with exact
Fractions, so the only error source is the slope enclosure itself, and
every comparison can be certified by a margin check.  `certified` runs a
decision procedure under a doubling-precision loop (default start 64
bits, cap 4096 bits).
"""

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .errors import PrecisionExhausted, SturmwordsError

DEFAULT_BITS = 64
PRECISION_CAP = 4096

NAMED_SLOPES = ("log2_3_2", "golden", "sqrt2m1")

UNCERTAIN = object()


def _mpfr_to_fraction(x) -> Fraction:
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


@lru_cache(maxsize=None)
def _named_enclosure(name: str, bits: int) -> tuple[Fraction, Fraction]:
    """Rigorous [lo, hi] containing the named constant, width <= 2**-bits."""

    def compute(rounding):
        with gmpy2.context(precision=bits + 16, round=rounding):
            if name == "log2_3_2":
                return gmpy2.log2(gmpy2.mpfr(3) / gmpy2.mpfr(2))
            if name == "golden":
                return (gmpy2.sqrt(gmpy2.mpfr(5)) - 1) / 2
            if name == "sqrt2m1":
                return gmpy2.sqrt(gmpy2.mpfr(2)) - 1
            raise SturmwordsError(f"unknown named slope {name!r}")

    lo = _mpfr_to_fraction(compute(gmpy2.RoundDown))
    hi = _mpfr_to_fraction(compute(gmpy2.RoundUp))
    assert lo <= hi and hi - lo <= Fraction(1, 2**bits)
    return lo, hi


@dataclass(frozen=True)
class SlopeValue:
    """A slope theta in (0, 1), exact or approximated with a certified bound."""

    kind: str  # 'rational' | 'named' | 'decimal'
    irrational: bool
    rational: Fraction | None = None
    name: str | None = None
    dec_value: Fraction | None = None
    dec_err: Fraction | None = None

    @property
    def refinable(self) -> bool:
        return self.kind == "named"

    def approx(self, bits: int) -> tuple[Fraction, Fraction]:
        """(midpoint, error) with the true slope in [mid - err, mid + err]."""
        if self.kind == "rational":
            return self.rational, Fraction(0)
        if self.kind == "named":
            lo, hi = _named_enclosure(self.name, bits)
            return (lo + hi) / 2, (hi - lo) / 2
        return self.dec_value, self.dec_err

    def __float__(self) -> float:
        return float(self.approx(DEFAULT_BITS)[0])

    def describe(self) -> str:
        if self.kind == "rational":
            return f"{self.rational.numerator}/{self.rational.denominator}"
        if self.kind == "named":
            return self.name
        return f"{float(self.dec_value)!r}@{float(self.dec_err)!r}"


def _check_range(value) -> None:
    if not 0 < value < 1:
        raise SturmwordsError(f"slope must satisfy 0 < theta < 1; got {value}")


def rational_slope(value: Fraction) -> SlopeValue:
    value = Fraction(value)
    _check_range(value)
    return SlopeValue(kind="rational", irrational=False, rational=value)


def named_slope(name: str) -> SlopeValue:
    if name not in NAMED_SLOPES:
        raise SturmwordsError(f"unknown named slope {name!r}; known: {NAMED_SLOPES}")
    return SlopeValue(kind="named", irrational=True, name=name)


def decimal_slope(value, err, irrational: bool = True) -> SlopeValue:
    value = Fraction(value)
    err = Fraction(err)
    _check_range(value)
    if err <= 0:
        raise SturmwordsError("decimal slopes need a positive error bound")
    return SlopeValue(kind="decimal", irrational=irrational, dec_value=value, dec_err=err)


def parse_slope(text: str) -> SlopeValue:
    """Parse 'p/q', a named constant, or 'decimal@errbound'."""
    text = text.strip()
    if text in NAMED_SLOPES:
        return named_slope(text)
    if "@" in text:
        value_s, _, err_s = text.partition("@")
        try:
            value = Fraction(Decimal(value_s))
            err = Fraction(Decimal(err_s))
        except InvalidOperation as exc:
            raise SturmwordsError(f"cannot parse slope {text!r}") from exc
        return decimal_slope(value, err)
    if "/" in text:
        num_s, _, den_s = text.partition("/")
        try:
            value = Fraction(int(num_s), int(den_s))
        except (ValueError, ZeroDivisionError) as exc:
            raise SturmwordsError(f"cannot parse slope {text!r}") from exc
        return rational_slope(value)
    try:
        value = Fraction(Decimal(text))
    except InvalidOperation as exc:
        raise SturmwordsError(f"cannot parse slope {text!r}") from exc
    return rational_slope(value)


def certified(theta: SlopeValue, decide, *, cap_bits: int | None = None,
              exhausted=PrecisionExhausted, start_bits: int = DEFAULT_BITS):
    """Run decide(mid, err) under doubling precision until it is certain.

    decide returns UNCERTAIN to request a refinement; any other value is
    final.  Raises `exhausted` when no tighter approximation exists (the
    precision cap is reached, or the slope is not refinable).
    """
    cap = PRECISION_CAP if cap_bits is None else cap_bits
    bits = min(start_bits, cap)
    while True:
        mid, err = theta.approx(bits)
        out = decide(mid, err)
        if out is not UNCERTAIN:
            return out
        if bits >= cap or not theta.refinable:
            raise exhausted(
                f"cannot certify a decision for slope {theta.describe()} "
                f"(reached {bits} bits, cap {cap})"
            )
        bits = min(bits * 2, cap)
