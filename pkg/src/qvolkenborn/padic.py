"""Truncated p-adic arithmetic with per-value precision tracking.

A nonzero value is stored as ``p**v * unit`` with the unit known modulo
``p**prec`` (``prec`` significant digits), so the value itself is known
modulo ``p**(v + prec)``; that exponent is the *absolute precision*.
Addition and subtraction are exact up to the minimum absolute precision of
the operands; multiplication and division preserve relative precision.

A result that vanishes to the working precision is kept as a distinguished
*zero-at-precision* state carrying only a certified lower bound on its
valuation.  Convergence diagnostics rely on that bound: the difference of
two successive Riemann sums can sit below the precision floor, and the bound
is still an honest certificate.

Values are immutable and operations are pure, so they may be shared across
parallel reductions without synchronization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRECISION = 32


class PrecisionExhausted(ArithmeticError):
    """An operation would produce a value with no certified digits."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:
    """A truncated element of Q_p (odd p) with tracked precision."""

    __slots__ = ("p", "v", "unit", "prec")

    def __init__(self, p: int, v: int, unit: int | None, prec: int):
        if not _is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if unit is not None:
            if prec < 1:
                raise ValueError("nonzero value needs at least one digit of precision")
            unit %= p ** prec
            if unit % p == 0:
                raise ValueError("unit part must be prime to p")
        self.p = p
        self.v = v
        self.unit = unit
        self.prec = prec

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero_at_precision(cls, p: int, valuation_bound: int) -> PadicNumber:
        z = object.__new__(cls)
        z.p, z.v, z.unit, z.prec = p, valuation_bound, None, 0
        return z

    @classmethod
    def from_rational(cls, r: Fraction | int, p: int, prec: int = DEFAULT_PRECISION) -> PadicNumber:
        """Image of an exact rational with prec significant digits; exact zero
        maps to zero-at-precision with valuation bound prec."""
        if not _is_odd_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if prec < 1:
            raise ValueError("precision must be positive")
        r = Fraction(r)
        if r == 0:
            return cls.zero_at_precision(p, prec)
        vn = _int_valuation(r.numerator, p)
        vd = _int_valuation(r.denominator, p)
        mod = p ** prec
        num_u = r.numerator // p ** vn
        den_u = r.denominator // p ** vd
        unit = num_u * pow(den_u, -1, mod) % mod
        return cls(p, vn - vd, unit, prec)

    # -- structure ------------------------------------------------------------

    @property
    def is_zero_at_precision(self) -> bool:
        return self.unit is None

    @property
    def valuation(self) -> int:
        """Exact valuation of a nonzero value; for zero-at-precision this is
        the certified lower bound."""
        return self.v

    @property
    def absolute_precision(self) -> int:
        """The value is known modulo p**absolute_precision."""
        return self.v + self.prec

    def _check_compatible(self, other: PadicNumber) -> None:
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            if r == 0:
                return PadicNumber.zero_at_precision(self.p, self.absolute_precision)
            vr = _int_valuation(r.numerator, self.p) - _int_valuation(r.denominator, self.p)
            # enough digits that the exact scalar never limits the result
            need = max(self.prec, self.absolute_precision - vr, 1)
            return PadicNumber.from_rational(r, self.p, need)
        return None

    # -- arithmetic -----------------------------------------------------------

    @classmethod
    def _from_scaled(cls, p: int, scale_v: int, raw: int, abs_prec: int) -> PadicNumber:
        """Value p**scale_v * raw known modulo p**abs_prec (absolute)."""
        rel_mod = abs_prec - scale_v
        if rel_mod <= 0:
            return cls.zero_at_precision(p, abs_prec)
        raw %= p ** rel_mod
        if raw == 0:
            return cls.zero_at_precision(p, abs_prec)
        dv = _int_valuation(raw, p)
        return cls(p, scale_v + dv, raw // p ** dv, rel_mod - dv)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        if a.is_zero_at_precision and b.is_zero_at_precision:
            return PadicNumber.zero_at_precision(a.p, min(a.v, b.v))
        if a.is_zero_at_precision:
            a, b = b, a
        if b.is_zero_at_precision:
            m = min(a.absolute_precision, b.v)
            return PadicNumber._from_scaled(a.p, a.v, a.unit, m)
        m = min(a.absolute_precision, b.absolute_precision)
        s = min(a.v, b.v)
        raw = a.unit * a.p ** (a.v - s) + b.unit * b.p ** (b.v - s)
        return PadicNumber._from_scaled(a.p, s, raw, m)

    __radd__ = __add__

    def __neg__(self) -> PadicNumber:
        if self.is_zero_at_precision:
            return self
        return PadicNumber(self.p, self.v, self.p ** self.prec - self.unit, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        if a.is_zero_at_precision or b.is_zero_at_precision:
            return PadicNumber.zero_at_precision(a.p, a.v + b.v)
        prec = min(a.prec, b.prec)
        return PadicNumber(a.p, a.v + b.v, a.unit * b.unit % a.p ** prec, prec)

    __rmul__ = __mul__

    def reciprocal(self) -> PadicNumber:
        if self.is_zero_at_precision:
            raise ZeroDivisionError("division by zero-at-precision")
        mod = self.p ** self.prec
        return PadicNumber(self.p, -self.v, pow(self.unit, -1, mod), self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero_at_precision:
            raise ZeroDivisionError("division by zero-at-precision")
        if self.is_zero_at_precision:
            return PadicNumber.zero_at_precision(self.p, self.v - other.v)
        prec = min(self.prec, other.prec)
        mod = self.p ** prec
        unit = self.unit * pow(other.unit, -1, mod) % mod
        return PadicNumber(self.p, self.v - other.v, unit, prec)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int) -> PadicNumber:
        if n == 0:
            return PadicNumber(self.p, 0, 1, max(self.prec, 1))
        base = self if n > 0 else self.reciprocal()
        if base.is_zero_at_precision:
            return PadicNumber.zero_at_precision(self.p, base.v * abs(n))
        mod = base.p ** base.prec
        return PadicNumber(base.p, base.v * abs(n),
                           pow(base.unit, abs(n), mod), base.prec)

    # -- comparisons ----------------------------------------------------------

    def agrees_with(self, other: PadicNumber | int | Fraction, digits: int) -> bool:
        """True when v_p(self - other) >= digits; raises if the certified
        precision cannot support the claim."""
        other = self._coerce(other)
        diff = self - other
        if diff.is_zero_at_precision:
            if diff.v < digits:
                raise PrecisionExhausted(
                    f"only {diff.v} digits certified, {digits} requested")
            return True
        return diff.v >= digits

    def __eq__(self, other) -> bool:
        if not isinstance(other, PadicNumber):
            return NotImplemented
        return (self.p, self.v, self.unit, self.prec) == (other.p, other.v, other.unit, other.prec)

    __hash__ = None

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "v": self.v,
                "unit": "0" if self.unit is None else str(self.unit),
                "A": self.prec}

    @classmethod
    def from_json(cls, data: dict) -> PadicNumber:
        unit = int(data["unit"])
        if unit == 0:
            return cls.zero_at_precision(int(data["p"]), int(data["v"]))
        return cls(int(data["p"]), int(data["v"]), unit, int(data["A"]))

    def __repr__(self) -> str:
        if self.is_zero_at_precision:
            return f"O({self.p}^{self.v})"
        if self.v == 0:
            lead = f"{self.unit}"
        else:
            lead = f"{self.unit}*{self.p}^{self.v}"
        return f"{lead} + O({self.p}^{self.absolute_precision})"


def padic_from_rational(r: Fraction | int, p: int, prec: int = DEFAULT_PRECISION) -> PadicNumber:
    return PadicNumber.from_rational(r, p, prec)


def padic_valuation(x: PadicNumber) -> int:
    """v with |x|_p = p**(-v); for zero-at-precision the certified lower bound."""
    return x.valuation


def q_admissible(q: PadicNumber) -> bool:
    """Whether q - 1 is small enough for q**x to make p-adic sense, i.e.
    v_p(q - 1) >= 1 (equivalent to the strict fractional bound for odd p)."""
    return (q - 1).valuation >= 1


# ---------------------------------------------------------------------------
# profinite domains
# ---------------------------------------------------------------------------

DEFAULT_BALL_CAP = 10 ** 7


class BudgetExceeded(RuntimeError):
    """A ball enumeration would exceed the configured index budget."""


@dataclass(frozen=True)
class ProfiniteDomain:
    """Inverse limit of Z/(d p^N): the integration domain.  d = 1 is Z_p."""

    p: int
    d: int = 1

    def __post_init__(self):
        if not _is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        if self.d < 1:
            raise ValueError("d must be positive")
        if math.gcd(self.d, self.p) != 1:
            raise ValueError(f"d = {self.d} must be prime to p = {self.p}")

    def level_size(self, n: int) -> int:
        return self.d * self.p ** n


def ball_representatives(domain: ProfiniteDomain, n: int,
                         cap: int = DEFAULT_BALL_CAP) -> range:
    """Representatives 0 .. d*p^n - 1 of the level-n balls a + d p^n Z_p."""
    if n < 1:
        raise ValueError("level must be >= 1")
    size = domain.level_size(n)
    if size > cap:
        raise BudgetExceeded(f"{size} ball representatives exceed the cap of {cap}")
    return range(size)
