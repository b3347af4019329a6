"""Exact univariate polynomial and rational-function arithmetic over Q.

The rational-function field used throughout the package is generated by an
indeterminate ``w`` together with a declared *root order* ``D``: the symbol
``w`` stands for a D-th root of the deformation parameter ``q``, so that
``q == w**D``.  Carrying ``D`` on every element keeps fractional powers of
``q`` (``q**(a/D)``) inside a plain univariate field: they are just integer
powers of ``w``.

Every value is canonical: numerator and denominator are coprime and the
denominator is monic, which makes equality a structural comparison.  All
values are immutable and every operation is a pure function, so elements can
be shared freely across threads or parallel reductions.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence


class PoleError(ArithmeticError):
    """Evaluation at a point where the (reduced) denominator vanishes."""


class RootOrderMismatch(ValueError):
    """Incompatible root orders that cannot be reconciled by rebasing."""


# ---------------------------------------------------------------------------
# integer-coefficient kernels
# ---------------------------------------------------------------------------

_KRONECKER_CUTOFF = 40


def _mul_int_schoolbook(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    nz_b = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            for j, y in nz_b:
                out[i + j] += x * y
    return out


def _pack(xs: list[int], stride: int) -> int:
    acc = 0
    for x in reversed(xs):
        acc = (acc << stride) | x
    return acc


def _unpack(n: int, stride: int, count: int) -> list[int]:
    mask = (1 << stride) - 1
    out = []
    for _ in range(count):
        out.append(n & mask)
        n >>= stride
    return out


def _mul_int(a: list[int], b: list[int]) -> list[int]:
    """Product of integer coefficient lists (dense, ascending degree).

    Large products are routed through Kronecker substitution: pack each
    factor into one big integer, multiply natively, read the digits back.
    The factors are split into positive/negative parts so every packed digit
    is nonnegative and the readback is exact.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return _mul_int_schoolbook(a, b)
    ma = max(abs(x) for x in a)
    mb = max(abs(y) for y in b)
    stride = (ma * mb * min(len(a), len(b)) * 2).bit_length() + 1
    ap = [x if x > 0 else 0 for x in a]
    am = [-x if x < 0 else 0 for x in a]
    bp = [y if y > 0 else 0 for y in b]
    bm = [-y if y < 0 else 0 for y in b]
    count = len(a) + len(b) - 1
    pos = _pack(ap, stride) * _pack(bp, stride) + _pack(am, stride) * _pack(bm, stride)
    neg = _pack(ap, stride) * _pack(bm, stride) + _pack(am, stride) * _pack(bp, stride)
    dp = _unpack(pos, stride, count)
    dn = _unpack(neg, stride, count)
    return [x - y for x, y in zip(dp, dn)]


def _content(xs: Iterable[int]) -> int:
    g = 0
    for x in xs:
        g = math.gcd(g, x)
        if g == 1:
            return 1
    return g


def _primitive(xs: list[int]) -> list[int]:
    while xs and xs[-1] == 0:
        xs.pop()
    if not xs:
        return xs
    g = _content(xs)
    if xs[-1] < 0:
        g = -g
    if g != 1:
        xs = [x // g for x in xs]
    return xs


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        c = r[-1]
        r = [lb * x for x in r[:-1]]
        off = len(r) - db
        for i in range(db):
            r[off + i] -= c * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def _gcd_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of primitive integer polynomials (primitive PRS)."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    return a


# ---------------------------------------------------------------------------
# polynomials over Q
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored by ascending degree; the zero polynomial is the
    empty tuple and has degree -1.  The leading coefficient of a nonzero
    polynomial is always nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, cs: list[Fraction]) -> Polynomial:
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def constant(cls, c: Fraction | int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Fraction | int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        out = list(self.coeffs) + [Fraction(0)] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw([-c for c in self.coeffs])

    def _int_form(self) -> tuple[list[int], int]:
        """(integer coefficient list, common denominator) with self = list/den."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [c.numerator * (den // c.denominator) for c in self.coeffs], den

    def __mul__(self, other: Polynomial | Fraction | int) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial._raw([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return Polynomial()
        a, da = self._int_form()
        b, db = other._int_form()
        prod = _mul_int(a, b)
        scale = Fraction(1, da * db)
        return Polynomial._raw([c * scale for c in prod])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial(), self
        rem = list(self.coeffs)
        quo = [Fraction(0)] * (self.degree - other.degree + 1)
        dlead = other.leading
        dcs = other.coeffs
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + other.degree] / dlead
            if c:
                quo[i] = c
                for j, d in enumerate(dcs):
                    rem[i + j] -= c * d
        return Polynomial(quo), Polynomial(rem)

    def exact_div(self, other: Polynomial) -> Polynomial:
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise ValueError("polynomial division is not exact")
        return quo

    def monic(self) -> Polynomial:
        if self.is_zero or self.leading == 1:
            return self
        inv = 1 / self.leading
        return Polynomial._raw([c * inv for c in self.coeffs])

    def evaluate(self, point: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def substitute_power(self, k: int) -> Polynomial:
        """Substitute w -> w**k (k >= 1)."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1 or self.is_zero:
            return self
        out = [Fraction(0)] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Polynomial._raw(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.render('w')})"

    def render(self, var: str) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                pow_ = var if i == 1 else f"{var}^{i}"
                term = f"{mag}{pow_}"
                if c < 0:
                    term = "-" + term
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append(f"- {term[1:]}")
            else:
                parts.append(f"+ {term}")
        return " ".join(parts)


_ONE_POLY_CACHE: Polynomial | None = None


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over Q."""
    global _ONE_POLY_CACHE
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        if _ONE_POLY_CACHE is None:
            _ONE_POLY_CACHE = Polynomial((1,))
        return _ONE_POLY_CACHE
    ia, _ = a._int_form()
    ib, _ = b._int_form()
    g = _gcd_int(_primitive(ia), _primitive(ib))
    return Polynomial(g).monic()


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> Polynomial:
    """The cyclotomic polynomial whose roots are the primitive order-th
    roots of unity; computed by dividing x^order - 1 by the lower ones."""
    if order < 1:
        raise ValueError("order must be positive")
    poly = Polynomial((-1,) + (0,) * (order - 1) + (1,))
    for d in range(1, order):
        if order % d == 0:
            poly = poly.exact_div(cyclotomic_polynomial(d))
    return poly


# ---------------------------------------------------------------------------
# factored reduction for binomial-product denominators
#
# Every denominator produced by the closed-form builders is a product of
# 1 +- w^j factors, i.e. a product of cyclotomic polynomials.  Cancelling
# those known irreducible factors directly (screened by an integer
# evaluation so failed trial divisions cost almost nothing) is far cheaper
# than a generic gcd at the degrees the identity suites reach.
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def binomial_factor_cyclotomics(sign: int, exponent: int) -> tuple[int, ...]:
    """Cyclotomic indices of 1 + sign*w^exponent (sign is +1 or -1)."""
    if exponent < 1 or sign not in (1, -1):
        raise ValueError("factor must be 1 +- w^j with j >= 1")
    if sign == -1:
        return tuple(_divisors(exponent))
    return tuple(d for d in _divisors(2 * exponent) if exponent % d != 0)


def cyclotomic_denominator(factors: Iterable[tuple[int, int, int]]) -> tuple[dict[int, int], int]:
    """(multiplicity map {cyclotomic index: power}, sign) of a product of
    factors (sign, exponent, multiplicity), each meaning (1 + sign*w^exponent).

    The sign accounts for 1 - w^j being *minus* the product of its
    cyclotomics (that product is w^j - 1), so that the original product
    equals sign * prod Phi_d^e with the right-hand side monic."""
    out: dict[int, int] = {}
    parity = 0
    for sign, exponent, multiplicity in factors:
        if multiplicity < 0:
            raise ValueError("factor multiplicities must be nonnegative")
        if multiplicity == 0:
            continue
        if sign == -1:
            parity ^= multiplicity & 1
        for d in binomial_factor_cyclotomics(sign, exponent):
            out[d] = out.get(d, 0) + multiplicity
    return out, -1 if parity else 1


def binomial_poly(sign: int, exponent: int) -> Polynomial:
    """The polynomial 1 + sign*w^exponent."""
    if exponent < 1 or sign not in (1, -1):
        raise ValueError("factor must be 1 +- w^j with j >= 1")
    return Polynomial((1,) + (0,) * (exponent - 1) + (sign,))


def complementary_products(factors: list[Polynomial]) -> list[Polynomial]:
    """For each k, the product of all factors except the k-th (the numerator
    weights when a sum of fractions is put over the common denominator)."""
    n = len(factors)
    prefixes = [Polynomial((1,))]
    for f in factors:
        prefixes.append(prefixes[-1] * f)
    out = [Polynomial((1,))] * n
    suffix = Polynomial((1,))
    for k in range(n - 1, -1, -1):
        out[k] = prefixes[k] * suffix
        suffix = suffix * factors[k]
    return out


def _divmod_int_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Integer quotient/remainder of a by monic b."""
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    rem = list(a)
    quo = [0] * (len(a) - db)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + db]
        if c:
            quo[i] = c
            for j in range(db):
                rem[i + j] -= c * b[j]
            rem[i + db] = 0
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem

_EVAL_POINT = 1 << 20


@functools.lru_cache(maxsize=None)
def _cyclotomic_int(order: int) -> tuple[tuple[int, ...], int]:
    """(integer coefficients, value at the screening point) of a cyclotomic."""
    coeffs = tuple(int(c) for c in cyclotomic_polynomial(order).coeffs)
    value = 0
    for c in reversed(coeffs):
        value = value * _EVAL_POINT + c
    return coeffs, value


def reduce_cyclotomic_fraction(num: Polynomial, den_map: dict[int, int],
                               root_order: int = 1, sign: int = 1) -> RationalFunction:
    """Reduced fraction sign * num / prod Phi_d^e for a known cyclotomic
    denominator map, cancelling each candidate factor by exact division.

    An integer evaluation of the running numerator screens the candidates,
    so a non-dividing factor is rejected in O(1) big-integer operations.
    """
    if num.is_zero:
        return RationalFunction(num, Polynomial((1,)), root_order)
    ints, int_den = num._int_form()
    content = _content(ints)
    prim = [x // content for x in ints]
    scale = Fraction(sign * content, int_den)
    value = 0
    for c in reversed(prim):
        value = value * _EVAL_POINT + c
    remaining: dict[int, int] = {}
    if value == 0:
        # the screening point is accidentally a root; fall back to plain gcd
        den = Polynomial((1,))
        for d, e in den_map.items():
            den = den * cyclotomic_polynomial(d) ** e
        return RationalFunction(num if sign == 1 else -num, den, root_order)
    for d in sorted(den_map):
        e = den_map[d]
        phi_coeffs, phi_value = _cyclotomic_int(d)
        while e > 0 and value % phi_value == 0:
            quo, rem = _divmod_int_monic(prim, list(phi_coeffs))
            if rem:
                break
            prim = quo
            value //= phi_value
            e -= 1
        if e > 0:
            remaining[d] = e
    den_ints = [1]
    for d, e in sorted(remaining.items()):
        phi_coeffs, _ = _cyclotomic_int(d)
        for _ in range(e):
            den_ints = _mul_int(den_ints, list(phi_coeffs))
    return RationalFunction._reduced(
        Polynomial([c * scale for c in prim]),
        Polynomial(den_ints),
        root_order)


# ---------------------------------------------------------------------------
# rational functions in w with w**D = q
# ---------------------------------------------------------------------------

class RationalFunction:
    """Reduced fraction of polynomials in ``w`` with ``w**root_order == q``.

    Canonical form: gcd(num, den) = 1 and den monic.  Binary operations on
    elements with different root orders rebase both to the least common
    multiple, so mixing (say) D = 1 and D = 2 values is transparent.
    """

    __slots__ = ("num", "den", "root_order")

    def __init__(self, num: Polynomial, den: Polynomial, root_order: int = 1):
        if root_order < 1:
            raise ValueError("root order must be >= 1")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in rational function")
        if num.is_zero:
            num, den = Polynomial(), Polynomial((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.leading
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den
        self.root_order = root_order

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial, root_order: int) -> RationalFunction:
        f = object.__new__(cls)
        f.num = num
        f.den = den
        f.root_order = root_order
        return f

    @classmethod
    def constant(cls, c: Fraction | int, root_order: int = 1) -> RationalFunction:
        return cls._reduced(Polynomial((c,)), Polynomial((1,)), root_order)

    @classmethod
    def w_power(cls, k: int, root_order: int = 1) -> RationalFunction:
        """w**k as an element (negative k gives 1/w**(-k))."""
        if k >= 0:
            return cls._reduced(Polynomial.monomial(k), Polynomial((1,)), root_order)
        return cls._reduced(Polynomial((1,)), Polynomial.monomial(-k), root_order)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    # -- root-order handling ------------------------------------------------

    def rebase_root_order(self, new_order: int) -> RationalFunction:
        """Reinterpret the element at a finer root order (a multiple of the
        current one): substitutes w -> w**(new/old).  Coprimality and the
        monic denominator survive the substitution, so no re-reduction is
        needed."""
        if new_order % self.root_order != 0:
            raise RootOrderMismatch(
                f"cannot rebase root order {self.root_order} to {new_order}")
        k = new_order // self.root_order
        if k == 1:
            return self
        return RationalFunction._reduced(
            self.num.substitute_power(k), self.den.substitute_power(k), new_order)

    def _coerce(self, other) -> tuple[RationalFunction, RationalFunction] | None:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other, self.root_order)
        elif not isinstance(other, RationalFunction):
            return None
        if self.root_order == other.root_order:
            return self, other
        lcm = self.root_order * other.root_order // math.gcd(self.root_order, other.root_order)
        return self.rebase_root_order(lcm), other.rebase_root_order(lcm)

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_zero:
            return b
        if b.is_zero:
            return a
        if a.den == b.den:
            return RationalFunction(a.num + b.num, a.den, a.root_order)
        g = poly_gcd(a.den, b.den)
        if g.degree == 0:
            return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den, a.root_order)
        da = a.den.exact_div(g)
        db = b.den.exact_div(g)
        num = a.num * db + b.num * da
        return RationalFunction(num, da * b.den, a.root_order)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._reduced(-self.num, self.den, self.root_order)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_zero or b.is_zero:
            return RationalFunction._reduced(Polynomial(), Polynomial((1,)), a.root_order)
        g1 = poly_gcd(a.num, b.den)
        g2 = poly_gcd(b.num, a.den)
        n1 = a.num.exact_div(g1) if g1.degree > 0 else a.num
        d2 = b.den.exact_div(g1) if g1.degree > 0 else b.den
        n2 = b.num.exact_div(g2) if g2.degree > 0 else b.num
        d1 = a.den.exact_div(g2) if g2.degree > 0 else a.den
        num = n1 * n2
        den = d1 * d2
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num, den = num * inv, den * inv
        return RationalFunction._reduced(num, den, a.root_order)

    __rmul__ = __mul__

    def reciprocal(self) -> RationalFunction:
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        num, den = self.den, self.num
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num, den = num * inv, den * inv
        return RationalFunction._reduced(num, den, self.root_order)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int) -> RationalFunction:
        if n == 0:
            return RationalFunction.constant(1, self.root_order)
        base = self if n > 0 else self.reciprocal()
        # powers of a reduced fraction stay reduced
        return RationalFunction._reduced(
            base.num ** abs(n), base.den ** abs(n), self.root_order)

    def __eq__(self, other) -> bool:
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.num == b.num and a.den == b.den

    __hash__ = None  # canonical form depends on root order; not hashable

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point: Fraction | int) -> Fraction:
        """Value at w = point.  Raises PoleError when the denominator
        vanishes there; the reduced form guarantees that is a genuine pole."""
        if not isinstance(point, (int, Fraction)):
            raise TypeError(f"evaluation point must be rational, got {type(point).__name__}")
        dval = self.den.evaluate(point)
        if dval == 0:
            raise PoleError(f"pole at w = {point}")
        return self.num.evaluate(point) / dval

    def limit_at_one(self) -> Fraction:
        """The q -> 1 limit: evaluation at w = 1.  Removable singularities
        were cancelled during reduction, so a vanishing denominator here is a
        genuine pole."""
        try:
            return self.evaluate(1)
        except PoleError:
            raise PoleError("genuine pole at w = 1; the q -> 1 limit does not exist") from None

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "D": self.root_order,
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> RationalFunction:
        num = Polynomial([Fraction(s) for s in data["num"]])
        den = Polynomial([Fraction(s) for s in data["den"]])
        return cls(num, den, int(data["D"]))

    def __repr__(self) -> str:
        return f"RationalFunction({self}, D={self.root_order})"

    def __str__(self) -> str:
        var = "q" if self.root_order == 1 else "w"
        num = self.num.render(var)
        if self.den.is_one:
            return num
        return f"({num})/({self.den.render(var)})"


def reduce_fraction(num: Polynomial, den: Polynomial, root_order: int = 1) -> RationalFunction:
    """Reduced representative (coprime, monic denominator) of num/den."""
    return RationalFunction(num, den, root_order)


# ---------------------------------------------------------------------------
# cyclotomic extension elements
# ---------------------------------------------------------------------------

class CyclotomicElement:
    """Polynomial in a primitive L-th root of unity ``z``, reduced modulo the
    L-th cyclotomic polynomial, with RationalFunction coefficients.

    Used for Dirichlet-character values of order > 2 and for the symbolic
    character-twisted sums built from them.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[RationalFunction | Fraction | int]):
        if order < 1:
            raise ValueError("root-of-unity order must be >= 1")
        phi_deg = cyclotomic_polynomial(order).degree
        cs = [c if isinstance(c, RationalFunction) else RationalFunction.constant(c)
              for c in coeffs]
        if len(cs) > phi_deg:
            cs = _reduce_mod_cyclotomic(cs, order)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.order = order
        self.coeffs: tuple[RationalFunction, ...] = tuple(cs)

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> CyclotomicElement:
        power %= order
        return cls(order, [Fraction(0)] * power + [Fraction(1)])

    @classmethod
    def from_scalar(cls, value, order: int) -> CyclotomicElement:
        return cls(order, [value])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: CyclotomicElement) -> None:
        if self.order != other.order:
            raise ValueError(f"mismatched root-of-unity orders {self.order} and {other.order}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return CyclotomicElement.from_scalar(other, self.order)
        if isinstance(other, CyclotomicElement):
            self._check(other)
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        zero = RationalFunction.constant(0)
        out = [(self.coeffs[i] if i < len(self.coeffs) else zero)
               + (other.coeffs[i] if i < len(other.coeffs) else zero)
               for i in range(n)]
        return CyclotomicElement(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return CyclotomicElement(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        self._check(other)
        if self.is_zero or other.is_zero:
            return CyclotomicElement(self.order, [])
        zero = RationalFunction.constant(0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return CyclotomicElement(self.order, _reduce_mod_cyclotomic(out, self.order))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_zero:
            return "CyclotomicElement(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            zpow = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            terms.append(f"({c}){'' if not zpow else '*' + zpow}" if i else f"({c})")
        return f"CyclotomicElement(L={self.order}, {' + '.join(terms)})"


def _reduce_mod_cyclotomic(coeffs: list[RationalFunction], order: int) -> list[RationalFunction]:
    phi = cyclotomic_polynomial(order)
    deg = phi.degree
    out = list(coeffs)
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c.is_zero:
            continue
        # z^i = z^(i-deg) * (z^deg - phi(z)); phi monic
        for j in range(deg):
            out[i - deg + j] = out[i - deg + j] - c * phi.coeffs[j]
        out[i] = RationalFunction.constant(0)
    while out and out[-1].is_zero:
        out.pop()
    return out
