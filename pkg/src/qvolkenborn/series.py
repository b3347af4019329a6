"""Truncated formal power series and the generating functions built on them.

Coefficients live in a caller-chosen exact field: plain rationals for the
classical Euler-number series, rational functions in w for the q-deformed
one.  A series of order T stores exactly T+1 coefficients and no operation
ever reads beyond that order, so every computed coefficient is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import RationalFunction
from .qmeasure import QDescriptor


def _is_zero(c) -> bool:
    if isinstance(c, RationalFunction):
        return c.is_zero
    return c == 0


class TruncatedSeries:
    """Formal power series truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if not cs:
            raise ValueError("need at least one coefficient to fix the field")
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        zero = cs[0] * 0
        while len(cs) < order + 1:
            cs.append(zero)
        self.order = order
        self.coeffs = tuple(cs[:order + 1])

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        zero = self.coeffs[0] * 0
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out)

    def scale(self, factor) -> TruncatedSeries:
        return TruncatedSeries([c * factor for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, via the first-order
    recurrence (n+1) e_{n+1} = sum (k+1) s_{k+1} e_{n-k}."""
    if not _is_zero(s.coeffs[0]):
        raise ValueError("series_exp needs a zero constant term")
    one = s.coeffs[0] * 0 + 1
    out = [one]
    for n in range(s.order):
        acc = None
        for k in range(n + 1):
            term = s.coeffs[k + 1] * (k + 1) * out[n - k]
            acc = term if acc is None else acc + term
        out.append(acc * Fraction(1, n + 1))
    return TruncatedSeries(out)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with invertible constant term."""
    if _is_zero(s.coeffs[0]):
        raise ValueError("series_inverse needs a nonzero constant term")
    lead = 1 / s.coeffs[0]
    out = [lead]
    for n in range(1, s.order + 1):
        acc = None
        for k in range(1, n + 1):
            term = s.coeffs[k] * out[n - k]
            acc = term if acc is None else acc + term
        out.append(-lead * acc)
    return TruncatedSeries(out)


def scaled_coefficient(s: TruncatedSeries, n: int):
    """n! times the n-th coefficient: the number the series generates."""
    return s[n] * Fraction(math.factorial(n))


# ---------------------------------------------------------------------------
# the two generating functions
# ---------------------------------------------------------------------------

def euler_gf(order: int) -> TruncatedSeries:
    """2/(e^t + 1) truncated: n! times its n-th coefficient is the classical
    Euler number E_n."""
    half_shifted = TruncatedSeries(
        [Fraction(1)] + [Fraction(1, 2 * math.factorial(n)) for n in range(1, order + 1)])
    return series_inverse(half_shifted)


def f_q_series(q: QDescriptor, order: int) -> TruncatedSeries:
    """The q-deformed exponential generating function whose n-th scaled
    coefficient is the fermionic q-Euler number: the product of e^(t/(1-q))
    with the alternating series of (1+q)/(1+q^(j+1)) weights.

    The j-sum is truncated at j = order, which is exact for all retained
    coefficients because the j-th term only feeds orders >= j.
    """
    if q.mode == "padic":
        raise ValueError("the generating function is symbolic/rational only")
    one = q.one()
    zero = one * 0
    inv_1mq = one / (one - q.qpow(1))
    two = one + q.qpow(1)
    exp_part = series_exp(TruncatedSeries([zero, inv_1mq], order))
    terms = []
    power = one
    for j in range(order + 1):
        c = two / (one + q.qpow(j + 1)) * power * Fraction((-1) ** j, math.factorial(j))
        terms.append(c)
        power = power * inv_1mq
    return exp_part * TruncatedSeries(terms)


@dataclass(frozen=True)
class PartialSum:
    """A truncated alternating series value with its certified tail bound."""

    value: Fraction
    tail_bound: Fraction
    terms: int


def f_q_coefficient_partial(k: int, q: Fraction, n_terms: int) -> PartialSum:
    """Partial sum of [2]_q * sum (-1)^n q^n [n]_q^k, the k-th scaled series
    coefficient as an absolutely convergent number series for |q| < 1.

    The tail is bounded by [2]_q (1/(1-|q|))^k |q|^n_terms / (1-|q|), since
    every |[n]_q| is at most 1/(1-|q|); the bound is reported with the value.
    """
    q = Fraction(q)
    if not 0 < abs(q) < 1:
        raise ValueError("the series needs 0 < |q| < 1")
    if k < 0 or n_terms < 0:
        raise ValueError("k and n_terms must be nonnegative")
    two = 1 + q
    total = Fraction(0)
    bracket = Fraction(0)   # [n]_q, incremented geometrically
    power = Fraction(1)     # q^n
    for n in range(n_terms):
        term = power * bracket ** k
        total += -term if n % 2 else term
        bracket += power
        power *= q
    aq = abs(q)
    tail = abs(two) * (1 / (1 - aq)) ** k * aq ** n_terms / (1 - aq)
    return PartialSum(two * total, tail, n_terms)


def limit_consistency(n_max: int) -> list[dict]:
    """Compare the q -> 1 limits of the q-Euler numbers (both as closed forms
    and as generating-function coefficients) with the classical Euler numbers.

    Returns one row per n: {"n", "K_limit", "E_n", "equal"}; "equal" records
    that closed form, coefficient limit and E_n all coincide.
    """
    from .qnumbers import k_number

    sym = QDescriptor.symbolic()
    gf = euler_gf(n_max)
    fq = f_q_series(sym, n_max)
    rows = []
    for n in range(n_max + 1):
        e_n = scaled_coefficient(gf, n)
        k_lim = k_number(n, sym).limit_at_one()
        gf_lim = scaled_coefficient(fq, n).limit_at_one()
        rows.append({
            "n": n,
            "K_limit": str(k_lim),
            "E_n": str(e_n),
            "equal": k_lim == e_n == gf_lim,
        })
    return rows
