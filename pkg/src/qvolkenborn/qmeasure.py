"""q-deformed measures on profinite domains, Riemann sums and integration.

Two measures are implemented: the *bosonic* one with ball weights
``q^a / [d p^N]_q`` (its moments are the q-Bernoulli numbers) and the
*fermionic* one with weights ``(-q)^a / [d p^N]_{-q}`` (its moments are the
q-Euler-type numbers).  The integral is the p-adic limit of the associated
Riemann sums; the engine certifies convergence with the Cauchy criterion
v_p(S_N - S_{N-1}).

The deformation parameter ``q`` is carried by a :class:`QDescriptor`, which
supports three readings: symbolic (a rational function of a D-th root of q),
exact rational, and truncated p-adic.  A descriptor may also represent a
power ``q^s`` of the base parameter; fractional arguments such as ``a/f``
against base ``q^f`` then reduce to integer powers of ``q``, which is what
keeps the p-adic path inside Q_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import RationalFunction, RootOrderMismatch
from .padic import (DEFAULT_BALL_CAP, PadicNumber, ProfiniteDomain,
                    ball_representatives, q_admissible)

Integrand = Callable[[int], object]


class NonConvergence(RuntimeError):
    """The Riemann sums did not reach the requested stability."""

    def __init__(self, message: str, trace: tuple):
        super().__init__(f"{message}; difference valuations {list(trace)}")
        self.trace = trace


# ---------------------------------------------------------------------------
# the three readings of q
# ---------------------------------------------------------------------------

class QDescriptor:
    """One of the three readings of the deformation parameter.

    mode "symbolic": value lives in the rational-function field with root
    order D (w**D = q).  mode "rational": an exact rational q != 1.  mode
    "padic": a truncated p-adic q with v_p(q - 1) >= 1.

    ``base_power`` marks that the descriptor stands for q**base_power; all
    brackets and powers are taken against that base.
    """

    __slots__ = ("mode", "root_order", "q_rational", "q_padic", "base_power")

    def __init__(self, mode: str, *, root_order: int = 1,
                 q_rational: Fraction | None = None,
                 q_padic: PadicNumber | None = None,
                 base_power: int = 1):
        if mode not in ("symbolic", "rational", "padic"):
            raise ValueError(f"unknown q mode {mode!r}")
        if base_power < 1:
            raise ValueError("base power must be >= 1")
        if mode == "symbolic" and root_order < 1:
            raise ValueError("root order must be >= 1")
        if mode == "rational":
            if q_rational is None or q_rational == 1:
                raise ValueError("rational q must be an exact rational != 1")
        if mode == "padic":
            if q_padic is None:
                raise ValueError("padic mode needs a p-adic q")
            if not q_admissible(q_padic):
                raise ValueError(
                    f"inadmissible p-adic q: v_{q_padic.p}(q - 1) must be >= 1")
        self.mode = mode
        self.root_order = root_order
        self.q_rational = q_rational
        self.q_padic = q_padic
        self.base_power = base_power

    @classmethod
    def symbolic(cls, root_order: int = 1) -> QDescriptor:
        return cls("symbolic", root_order=root_order)

    @classmethod
    def rational(cls, q: Fraction | int) -> QDescriptor:
        return cls("rational", q_rational=Fraction(q))

    @classmethod
    def padic(cls, q: PadicNumber) -> QDescriptor:
        return cls("padic", q_padic=q)

    @property
    def prime(self) -> int:
        if self.mode != "padic":
            raise ValueError("only padic descriptors carry a prime")
        return self.q_padic.p

    def with_base_power(self, m: int) -> QDescriptor:
        """Descriptor for (current base)**m."""
        if m < 1:
            raise ValueError("base power must be >= 1")
        out = object.__new__(QDescriptor)
        out.mode = self.mode
        out.root_order = self.root_order
        out.q_rational = self.q_rational
        out.q_padic = self.q_padic
        out.base_power = self.base_power * m
        return out

    # -- field plumbing -------------------------------------------------------

    def one(self):
        if self.mode == "symbolic":
            return RationalFunction.constant(1, self.root_order)
        if self.mode == "rational":
            return Fraction(1)
        return PadicNumber(self.q_padic.p, 0, 1, self.q_padic.prec)

    def from_rational(self, r: Fraction | int):
        if self.mode == "symbolic":
            return RationalFunction.constant(r, self.root_order)
        if self.mode == "rational":
            return Fraction(r)
        return PadicNumber.from_rational(Fraction(r), self.q_padic.p, self.q_padic.prec)

    def element(self):
        """The base parameter itself (q**base_power) as a field element."""
        return self.qpow(1)

    def w_exponent(self, exponent: Fraction | int) -> int:
        """The power of w realizing (q**base_power)**exponent (symbolic mode)."""
        e = Fraction(exponent) * self.base_power
        we = e * self.root_order
        if we.denominator != 1:
            raise RootOrderMismatch(
                f"power q^{e} needs root order divisible by {e.denominator}, "
                f"have {self.root_order}")
        return int(we)

    def qpow(self, exponent: Fraction | int):
        """(q**base_power) ** exponent.

        Symbolically this is a power of w and only needs the combined
        exponent to clear the root order; numerically the combined exponent
        must be an integer (fractional q-powers do not live in Q or Q_p).
        """
        if self.mode == "symbolic":
            return RationalFunction.w_power(self.w_exponent(exponent), self.root_order)
        e = Fraction(exponent) * self.base_power
        if e.denominator != 1:
            raise ValueError(f"fractional power q^{e} is not available in {self.mode} mode")
        if self.mode == "rational":
            return self.q_rational ** int(e)
        return self.q_padic ** int(e)

    def bracket(self, x: Fraction | int):
        """The q-analogue [x] = (1 - q^x)/(1 - q) against the current base."""
        one = self.one()
        return (one - self.qpow(x)) / (one - self.qpow(1))

    def minus_bracket(self, m: int):
        """[m] against the negated base, for odd m: (1 + q^m)/(1 + q)."""
        if m < 1 or m % 2 == 0:
            raise ValueError(f"the negated-base bracket needs odd m, got {m}")
        one = self.one()
        return (one + self.qpow(m)) / (one + self.qpow(1))

    def __repr__(self) -> str:
        if self.mode == "symbolic":
            core = f"symbolic D={self.root_order}"
        elif self.mode == "rational":
            core = f"q={self.q_rational}"
        else:
            core = f"padic {self.q_padic!r}"
        sfx = "" if self.base_power == 1 else f" base^={self.base_power}"
        return f"QDescriptor({core}{sfx})"


def q_bracket(x: Fraction | int, q: QDescriptor):
    """[x]_q = (1 - q^x)/(1 - q) in whichever field q selects.

    >>> print(q_bracket(3, QDescriptor.symbolic()))
    1 + q + q^2
    >>> print(q_bracket(Fraction(1, 2), QDescriptor.symbolic(2)))
    (1)/(1 + w)
    """
    return q.bracket(x)


# ---------------------------------------------------------------------------
# measures
# ---------------------------------------------------------------------------

BOSONIC = "bosonic"
FERMIONIC = "fermionic"


@dataclass(frozen=True)
class MeasureSpec:
    """A q-deformed measure (bosonic or fermionic) over a profinite domain."""

    kind: str
    q: QDescriptor
    domain: ProfiniteDomain

    def __post_init__(self):
        if self.kind not in (BOSONIC, FERMIONIC):
            raise ValueError(f"unknown measure kind {self.kind!r}")
        if self.kind == FERMIONIC and self.domain.d % 2 == 0:
            raise ValueError("the fermionic measure needs an odd d")

    def level_norm(self, n: int):
        """[d p^n] against the (signed) base: the normalizer of level n."""
        size = self.domain.level_size(n)
        if self.kind == BOSONIC:
            return self.q.bracket(size)
        return self.q.minus_bracket(size)


def ball_measure(spec: MeasureSpec, a: int, n: int):
    """Measure of the ball a + d p^n Z_p."""
    size = spec.domain.level_size(n)
    if not 0 <= a < size:
        raise ValueError(f"representative {a} out of range [0, {size})")
    if spec.q.mode == "symbolic":
        return _ball_sum_symbolic(spec, (a,), n)
    value = spec.q.qpow(a) / spec.level_norm(n)
    if spec.kind == FERMIONIC and a % 2 == 1:
        return -value
    return value


def ball_measure_sum(spec: MeasureSpec, reps, n: int):
    """Sum of ball measures over the given level-n representatives, taken
    over the common level normalizer (one division instead of one per ball,
    which keeps the exact distribution/total-mass checks cheap)."""
    size = spec.domain.level_size(n)
    reps = list(reps)
    for a in reps:
        if not 0 <= a < size:
            raise ValueError(f"representative {a} out of range [0, {size})")
    if spec.q.mode == "symbolic":
        return _ball_sum_symbolic(spec, reps, n)
    total = 0
    for a in reps:
        term = spec.q.qpow(a)
        if spec.kind == FERMIONIC and a % 2 == 1:
            total = total - term
        else:
            total = total + term
    return total / spec.level_norm(n)


def _ball_sum_symbolic(spec: MeasureSpec, reps, n: int):
    """Signed power sum over the level normalizer, reduced through the
    cyclotomic kernel: the normalizer is (1 -+ q) / (1 -+ q^(d p^n))."""
    from .algebra import (Polynomial, binomial_poly,
                          cyclotomic_denominator, reduce_cyclotomic_fraction)

    q = spec.q
    e1 = q.w_exponent(1)
    size = spec.domain.level_size(n)
    fermionic = spec.kind == FERMIONIC
    coeffs: dict[int, int] = {}
    for a in reps:
        e = q.w_exponent(a)
        coeffs[e] = coeffs.get(e, 0) + (-1 if fermionic and a % 2 else 1)
    dense = [0] * (max(coeffs) + 1 if coeffs else 1)
    for e, c in coeffs.items():
        dense[e] = c
    sign = 1 if fermionic else -1
    num = Polynomial(dense) * binomial_poly(sign, e1)
    den, den_sign = cyclotomic_denominator([(sign, e1 * size, 1)])
    return reduce_cyclotomic_fraction(num, den, q.root_order, den_sign)


def riemann_sum(spec: MeasureSpec, f: Integrand, n: int,
                cap: int = DEFAULT_BALL_CAP):
    """The level-n Riemann sum: sum over ball representatives j of
    f(j) * (+-q)^j, normalized by [d p^n] of the (signed) base.

    Exact arithmetic makes the reduction associative, so any partition of
    the index range yields the identical result.
    """
    reps = ball_representatives(spec.domain, n, cap)
    total = _sum_range(spec, f, reps)
    return total / spec.level_norm(n)


def _sum_range(spec: MeasureSpec, f: Integrand, reps: range):
    """Unnormalized sum of f(j) * (+-q)^j over a subrange of representatives."""
    q1 = spec.q.qpow(1)
    fermionic = spec.kind == FERMIONIC
    power = spec.q.qpow(reps.start) if reps.start else spec.q.one()
    total = 0
    for j in reps:
        value = f(j)
        if not (isinstance(value, int) and value == 0):
            term = value * power
            if fermionic and j % 2 == 1:
                total = total - term
            else:
                total = total + term
        power = power * q1
    return total


def integrate(spec: MeasureSpec, f: Integrand, target_stability: int,
              n_max: int, cap: int = DEFAULT_BALL_CAP) -> IntegrationResult:
    """p-adic limit of the Riemann sums, certified by the Cauchy criterion.

    Stops at the smallest N <= n_max with v_p(S_N - S_{N-1}) >= the target
    and returns that sum together with the certified stability and the full
    difference-valuation trace.  Raises :class:`NonConvergence` (with the
    trace as diagnostic) when the target is not met by n_max.
    """
    if spec.q.mode != "padic":
        raise ValueError("integration is a p-adic limit; q must be padic")
    trace: list[tuple[int, int]] = []
    previous = None
    for n in range(1, n_max + 1):
        current = riemann_sum(spec, f, n, cap)
        if previous is not None:
            stability = (current - previous).valuation
            trace.append((n, stability))
            if stability >= target_stability:
                return IntegrationResult(current, n, stability, tuple(trace))
        previous = current
    raise NonConvergence(
        f"stability {target_stability} not reached by N = {n_max}", tuple(trace))


@dataclass(frozen=True)
class IntegrationResult:
    """A certified integral value: the last Riemann sum, the level it was
    taken at, and v_p of the last difference (a lower bound on how many
    digits the final two sums share)."""

    value: object
    n_used: int
    stability: int
    trace: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        value = self.value.to_json() if hasattr(self.value, "to_json") else str(self.value)
        return {"value": value, "N_used": self.n_used, "stability": self.stability,
                "trace": [list(t) for t in self.trace]}


# ---------------------------------------------------------------------------
# closed-form moment primitives
# ---------------------------------------------------------------------------

def bosonic_power_moment(i: int, q: QDescriptor):
    """Integral of q^(t*i) under the bosonic measure: (i+1)/[i+1]_q."""
    if i < 0:
        raise ValueError("moment index must be nonnegative")
    return q.from_rational(i + 1) / q.bracket(i + 1)


def fermionic_power_moment(i: int, q: QDescriptor):
    """Integral of q^(t*i) under the fermionic measure: [2]_q/(1 + q^(i+1))."""
    if i < 0:
        raise ValueError("moment index must be nonnegative")
    one = q.one()
    return (one + q.qpow(1)) / (one + q.qpow(i + 1))


def fermionic_finite_rhs(n: int, x: Fraction | int, level: int,
                         q: QDescriptor, p: int):
    """Closed form of the level-`level` fermionic Riemann sum of [x+y]^n.

    Equals riemann_sum(fermionic over Z_p, [x+y]^n, level) exactly; its
    p-adic limit (the p^N-dependent factors tending to 1) is the closed form
    of the shifted q-Euler polynomial.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    x = Fraction(x)
    pn = p ** level
    if q.mode == "symbolic" and x >= 0:
        from .algebra import (Polynomial, binomial_poly, complementary_products,
                              cyclotomic_denominator, reduce_cyclotomic_fraction)
        e1 = q.w_exponent(1)
        exps = [q.w_exponent(k + 1) for k in range(n + 1)]
        others = complementary_products([binomial_poly(1, e) for e in exps])
        acc = Polynomial()
        for k in range(n + 1):
            weight = Fraction((-1) ** k * math.comb(n, k))
            term = (others[k] * Polynomial.monomial(q.w_exponent(x * k), weight)
                    * binomial_poly(1, q.w_exponent(pn * (k + 1))))
            acc = acc + term
        num = acc * binomial_poly(1, e1)
        den, sign = cyclotomic_denominator(
            [(-1, e1, n), (1, q.w_exponent(pn), 1)] + [(1, e, 1) for e in exps])
        return reduce_cyclotomic_fraction(num, den, q.root_order, sign)
    one = q.one()
    two = one + q.qpow(1)
    inv_1mq = one / (one - q.qpow(1)) if n else one
    nums = [q.from_rational(Fraction((-1) ** k * math.comb(n, k)))
            * q.qpow(x * k) * (one + q.qpow(pn * (k + 1)))
            for k in range(n + 1)]
    dens = [one + q.qpow(k + 1) for k in range(n + 1)]
    prefixes = [1]
    for d in dens:
        prefixes.append(prefixes[-1] * d)
    acc = 0
    suffix = 1
    for k in range(n, -1, -1):
        acc = acc + nums[k] * prefixes[k] * suffix
        suffix = suffix * dens[k]
    return two * inv_1mq ** n * acc / prefixes[-1] / (one + q.qpow(pn))


# ---------------------------------------------------------------------------
# built-in integrand families
# ---------------------------------------------------------------------------

def constant_one(q: QDescriptor) -> Integrand:
    one = q.one()
    return lambda j: one


def bracket_power(q: QDescriptor, n: int, shift: Fraction | int = 0) -> Integrand:
    """j -> [shift + j]^n against the descriptor's base.

    Consecutive calls share an incrementally maintained power of q, which is
    what makes the p-adic Riemann sums linear-time; out-of-order calls fall
    back to an explicit power and stay correct.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    shift = Fraction(shift)
    one = q.one()
    if n == 0:
        return lambda j: one
    q1 = q.qpow(1)
    inv_1mq = one / (one - q1)
    state = [0, q.qpow(shift)]  # q^(shift + j) for j = state[0]

    def f(j: int):
        last_j, last_pow = state
        if j == last_j:
            value = last_pow
        elif j == last_j + 1:
            value = last_pow * q1
            state[0], state[1] = j, value
        else:
            value = q.qpow(shift + j)
            state[0], state[1] = j, value
        return ((one - value) * inv_1mq) ** n

    return f


def character_twisted_power(q: QDescriptor, n: int, chi) -> Integrand:
    """j -> chi(j) * [j]^n; zero off the units of the character modulus."""
    from .characters import character_value

    base = bracket_power(q, n)
    one = q.one()
    table = [character_value(chi, a) for a in range(chi.modulus)]
    if q.mode == "padic" and any(not isinstance(v, (int, Fraction)) for v in table):
        raise ValueError(
            "p-adic character twists need character values in {0, +-1}; "
            "higher-order characters live on the symbolic path only")

    def f(j: int):
        chi_j = table[j % chi.modulus]
        if isinstance(chi_j, (int, Fraction)) and chi_j == 0:
            return 0
        value = base(j) if n else one
        return value if chi_j == 1 else chi_j * value

    return f


def parse_integrand(text: str, q: QDescriptor) -> Integrand:
    """Integrand selection by name: "one", "bracket_pow:n",
    "shifted_bracket_pow:n:x", "char_twisted:n:chi_id"."""
    parts = text.split(":")
    name = parts[0]
    try:
        if name == "one" and len(parts) == 1:
            return constant_one(q)
        if name == "bracket_pow" and len(parts) == 2:
            return bracket_power(q, int(parts[1]))
        if name == "shifted_bracket_pow" and len(parts) == 3:
            return bracket_power(q, int(parts[1]), Fraction(parts[2]))
        if name == "char_twisted" and len(parts) >= 3:
            from .characters import parse_character_id
            chi = parse_character_id(":".join(parts[2:]))
            return character_twisted_power(q, int(parts[1]), chi)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad integrand spec {text!r}: {exc}") from exc
    raise ValueError(f"unknown integrand spec {text!r}")
