"""The q-deformed number and polynomial families and their classical limits.

Bosonic moments give the q-Bernoulli numbers beta_m and polynomials
beta_n(x); fermionic moments give the q-Euler-type numbers K_n and
polynomials K_n(x), their odd-m distribution relation, and the
Dirichlet-character twists.  Each family has a closed form and at least one
independent route (moment expansion or p-adic integral), and the routes are
cross-checked by the verification suites.

Fractional arguments appear only in the combination (base q^m, argument
(a+x)/m), where the combined exponents are integral once the root order
clears the denominator of x; the p-adic route never needs fractional powers
at all.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import (Polynomial, binomial_poly, complementary_products,
                      cyclotomic_denominator, reduce_cyclotomic_fraction)
from .characters import DirichletCharacter, character_value
from .padic import DEFAULT_BALL_CAP, ProfiniteDomain
from .qmeasure import (BOSONIC, FERMIONIC, MeasureSpec, QDescriptor,
                       bracket_power, character_twisted_power, integrate)

FORMS = ("closed", "expansion", "integral")


def _check_form(form: str) -> None:
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")


def _sum_of_fractions(numerators: list, denominators: list):
    """sum numerators[k]/denominators[k] over the common denominator, with a
    single division at the end (one reduction instead of one per addition)."""
    prefixes = [1]
    for d in denominators:
        prefixes.append(prefixes[-1] * d)
    total = 0
    suffix = 1
    for i in range(len(numerators) - 1, -1, -1):
        total = total + numerators[i] * prefixes[i] * suffix
        suffix = suffix * denominators[i]
    return total / prefixes[-1]


# ---------------------------------------------------------------------------
# symbolic fast paths
#
# In the rational-function field the closed forms are assembled as one
# polynomial numerator over the known product of 1 +- w^j factors and
# reduced once through the cyclotomic cancellation kernel; the generic
# field-agnostic loops below remain the implementation for rational and
# p-adic q.  The fast paths require x >= 0 (all w-exponents nonnegative),
# which covers every argument the identity suites use.
# ---------------------------------------------------------------------------

def _k_closed_symbolic(n: int, x: Fraction, q: QDescriptor):
    e1 = q.w_exponent(1)
    exps = [q.w_exponent(k + 1) for k in range(n + 1)]
    others = complementary_products([binomial_poly(1, e) for e in exps])
    acc = Polynomial()
    for k in range(n + 1):
        weight = Fraction((-1) ** k * math.comb(n, k))
        acc = acc + others[k] * Polynomial.monomial(q.w_exponent(x * k), weight)
    num = acc * binomial_poly(1, e1)
    den, sign = cyclotomic_denominator(
        [(-1, e1, n)] + [(1, e, 1) for e in exps])
    return reduce_cyclotomic_fraction(num, den, q.root_order, sign)


def _beta_closed_symbolic(n: int, x: Fraction, q: QDescriptor):
    e1 = q.w_exponent(1)
    exps = [q.w_exponent(i + 1) for i in range(n + 1)]
    others = complementary_products([binomial_poly(-1, e) for e in exps])
    acc = Polynomial()
    for i in range(n + 1):
        weight = Fraction((-1) ** i * math.comb(n, i) * (i + 1))
        acc = acc + others[i] * Polynomial.monomial(q.w_exponent(x * i), weight)
    if n == 0:
        acc = acc * binomial_poly(-1, e1)
    den, sign = cyclotomic_denominator(
        [(-1, e1, max(n - 1, 0))] + [(-1, e, 1) for e in exps])
    return reduce_cyclotomic_fraction(acc, den, q.root_order, sign)


def _twisted_sum_symbolic(n: int, x: Fraction, m: int, q: QDescriptor, weights):
    """([m]^n/[m]_-) sum_a weights[a] (-1)^a q^a K(base q^m, (a+x)/m), with the
    base-change prefactors cancelled analytically against the inner closed
    forms, leaving (1+q) * numerator over (1-q)^n prod_k (1 + q^(m(k+1)))."""
    base = q.with_base_power(m)
    e1 = q.w_exponent(1)
    exps = [base.w_exponent(k + 1) for k in range(n + 1)]
    others = complementary_products([binomial_poly(1, e) for e in exps])
    acc = Polynomial()
    for a in range(m):
        if weights[a] == 0:
            continue
        for k in range(n + 1):
            weight = Fraction((-1) ** (a + k) * math.comb(n, k)) * weights[a]
            mono = base.w_exponent(Fraction(a + x, m) * k) + q.w_exponent(a)
            acc = acc + others[k] * Polynomial.monomial(mono, weight)
    num = acc * binomial_poly(1, e1)
    den, sign = cyclotomic_denominator(
        [(-1, e1, n)] + [(1, e, 1) for e in exps])
    return reduce_cyclotomic_fraction(num, den, q.root_order, sign)


def beta_number(m: int, q: QDescriptor):
    """The m-th q-Bernoulli number: the bosonic moment of [t]^m, as the
    alternating closed form over the power moments (i+1)/[i+1].

    Written with (i+1)/[i+1] = (i+1)(1-q)/(1-q^(i+1)), one power of (1-q)
    cancels against the prefactor.

    >>> print(beta_number(1, QDescriptor.symbolic()))
    (-1)/(1 + q)
    """
    if m < 0:
        raise ValueError("index must be nonnegative")
    if q.mode == "symbolic":
        return _beta_closed_symbolic(m, Fraction(0), q)
    one = q.one()
    nums = [q.from_rational(Fraction((-1) ** i * math.comb(m, i) * (i + 1)))
            for i in range(m + 1)]
    dens = [one - q.qpow(i + 1) for i in range(m + 1)]
    acc = _sum_of_fractions(nums, dens)
    if m == 1:
        return acc
    inv = one / (one - q.qpow(1))
    return inv ** (m - 1) * acc


def beta_polynomial(n: int, x: Fraction | int, q: QDescriptor, form: str = "closed",
                    stability: int = 5, n_max: int = 8, cap: int = DEFAULT_BALL_CAP):
    """The q-Bernoulli polynomial at x, by the selected route.

    "closed": alternating sum with q^(x i) weights; "expansion": binomial
    expansion over beta numbers and [x] powers; "integral": the bosonic
    p-adic integral of [x+t]^n (padic q only).
    """
    _check_form(form)
    if n < 0:
        raise ValueError("index must be nonnegative")
    x = Fraction(x)
    one = q.one()
    if form == "closed":
        if q.mode == "symbolic" and x >= 0:
            return _beta_closed_symbolic(n, x, q)
        nums = [q.from_rational(Fraction((-1) ** i * math.comb(n, i) * (i + 1)))
                * q.qpow(x * i) for i in range(n + 1)]
        dens = [one - q.qpow(i + 1) for i in range(n + 1)]
        acc = _sum_of_fractions(nums, dens)
        if n == 1:
            return acc
        inv = one / (one - q.qpow(1))
        return inv ** (n - 1) * acc
    if form == "expansion":
        bx = q.bracket(x)
        acc = 0
        for i in range(n + 1):
            term = (q.from_rational(math.comb(n, i)) * q.qpow(i * x)
                    * beta_number(i, q) * bx ** (n - i))
            acc = acc + term
        return acc
    spec = MeasureSpec(BOSONIC, q, ProfiniteDomain(q.prime))
    return integrate(spec, bracket_power(q, n, x), stability, n_max, cap).value


def k_number(k: int, q: QDescriptor):
    """The k-th fermionic q-Euler number: [2] (1/(1-q))^k times the
    alternating binomial sum of 1/(1+q^(l+1)).

    >>> print(k_number(1, QDescriptor.symbolic()))
    (-q)/(1 + q^2)
    >>> k_number(1, QDescriptor.symbolic()).limit_at_one()
    Fraction(-1, 2)
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    if q.mode == "symbolic":
        return _k_closed_symbolic(k, Fraction(0), q)
    one = q.one()
    two = one + q.qpow(1)
    nums = [q.from_rational(Fraction((-1) ** l * math.comb(k, l))) for l in range(k + 1)]
    dens = [one + q.qpow(l + 1) for l in range(k + 1)]
    acc = _sum_of_fractions(nums, dens)
    if k == 0:
        return two * acc
    inv = one / (one - q.qpow(1))
    return two * inv ** k * acc


def k_polynomial(n: int, x: Fraction | int, q: QDescriptor, form: str = "closed",
                 stability: int = 5, n_max: int = 8, cap: int = DEFAULT_BALL_CAP):
    """The fermionic q-Euler polynomial at x, by the selected route.

    "closed" and "expansion" agree identically as reduced elements;
    "integral" is the fermionic p-adic integral of [x+y]^n (padic q only).
    """
    _check_form(form)
    if n < 0:
        raise ValueError("index must be nonnegative")
    x = Fraction(x)
    one = q.one()
    if form == "closed":
        if q.mode == "symbolic" and x >= 0:
            return _k_closed_symbolic(n, x, q)
        two = one + q.qpow(1)
        nums = [q.from_rational(Fraction((-1) ** k * math.comb(n, k))) * q.qpow(x * k)
                for k in range(n + 1)]
        dens = [one + q.qpow(k + 1) for k in range(n + 1)]
        acc = _sum_of_fractions(nums, dens)
        if n == 0:
            return two * acc
        inv = one / (one - q.qpow(1))
        return two * inv ** n * acc
    if form == "expansion":
        bx = q.bracket(x)
        acc = 0
        for m in range(n + 1):
            term = (q.from_rational(math.comb(n, m)) * bx ** (n - m)
                    * q.qpow(m * x) * k_number(m, q))
            acc = acc + term
        return acc
    spec = MeasureSpec(FERMIONIC, q, ProfiniteDomain(q.prime))
    return integrate(spec, bracket_power(q, n, x), stability, n_max, cap).value


def k_distribution_rhs(n: int, x: Fraction | int, m: int, q: QDescriptor):
    """Right side of the odd-m distribution relation for the q-Euler
    polynomials: ([m]^n / [m]_-) times the alternating q^a-weighted sum of
    the base-q^m polynomials at the shifted arguments (a+x)/m.

    Symbolically this is identical to k_polynomial(n, x, q); verifying that
    identity is the point of computing both sides independently.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError(f"the distribution relation needs odd m, got {m}")
    x = Fraction(x)
    if q.mode == "symbolic" and x >= 0:
        return _twisted_sum_symbolic(n, x, m, q, [Fraction(1)] * m)
    base = q.with_base_power(m)
    acc = 0
    for a in range(m):
        term = q.qpow(a) * k_polynomial(n, (a + x) / m, base, form="closed")
        acc = acc - term if a % 2 else acc + term
    return q.bracket(m) ** n / q.minus_bracket(m) * acc


def k_chi(n: int, chi: DirichletCharacter, q: QDescriptor, method: str = "closed",
          stability: int = 5, n_max: int = 8, cap: int = DEFAULT_BALL_CAP):
    """Character-twisted q-Euler number attached to chi.

    "closed": the finite sum over residues a of chi(a) (-1)^a q^a times the
    base-q^f polynomial at a/f, prefixed by [f]^n/[f]_-.  "integral": the
    fermionic integral of chi(y)[y]^n over the conductor-indexed profinite
    domain (padic q, quadratic or trivial chi only).
    """
    if method not in ("closed", "integral"):
        raise ValueError(f"unknown method {method!r}")
    if n < 0:
        raise ValueError("index must be nonnegative")
    f = chi.modulus
    if f % 2 == 0:
        raise ValueError("the twisted numbers need an odd conductor")
    if method == "closed":
        if q.mode == "padic" and chi.value_order > 2:
            raise ValueError(
                "p-adic twisted numbers need character values in {0, +-1}")
        if q.mode == "symbolic" and chi.value_order <= 2:
            values = [character_value(chi, a) for a in range(f)]
            return _twisted_sum_symbolic(n, Fraction(0), f, q, values)
        base = q.with_base_power(f)
        acc = 0
        for a in range(f):
            chi_a = character_value(chi, a)
            if isinstance(chi_a, Fraction) and chi_a == 0:
                continue
            term = chi_a * q.qpow(a) * k_polynomial(n, Fraction(a, f), base, form="closed")
            acc = acc - term if a % 2 else acc + term
        return q.bracket(f) ** n / q.minus_bracket(f) * acc
    spec = MeasureSpec(FERMIONIC, q, ProfiniteDomain(q.prime, f))
    integrand = character_twisted_power(q, n, chi)
    return integrate(spec, integrand, stability, n_max, cap).value


def classical_euler(n_max: int) -> list[Fraction]:
    """E_0 .. E_n_max by inverting the shifted exponential series."""
    from .series import euler_gf, scaled_coefficient

    gf = euler_gf(n_max)
    return [scaled_coefficient(gf, n) for n in range(n_max + 1)]


def classical_bernoulli(n_max: int) -> list[Fraction]:
    """B_0 .. B_n_max from the series of t/(e^t - 1)."""
    from .series import TruncatedSeries, scaled_coefficient, series_inverse

    expm1_over_t = TruncatedSeries(
        [Fraction(1, math.factorial(n + 1)) for n in range(n_max + 1)])
    gf = series_inverse(expm1_over_t)
    return [scaled_coefficient(gf, n) for n in range(n_max + 1)]
