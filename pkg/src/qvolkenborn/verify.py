"""Identity-verification suites.

Each suite checks one family of identities by computing both sides through
independent routes (closed form vs expansion, finite sum vs its closed
right-hand side, p-adic integral vs symbolic evaluation) and comparing
exactly, or modulo a stated p-adic precision.  The CLI fronts these suites
and the acceptance tests call them directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import make_character
from .padic import ProfiniteDomain, padic_from_rational
from .qmeasure import (BOSONIC, FERMIONIC, MeasureSpec, QDescriptor,
                       ball_measure, ball_measure_sum, bracket_power,
                       fermionic_finite_rhs, integrate, riemann_sum)
from .qnumbers import (beta_number, beta_polynomial, classical_bernoulli,
                       k_chi, k_distribution_rhs, k_number, k_polynomial)
from .series import (f_q_coefficient_partial, f_q_series,
                     limit_consistency, scaled_coefficient)


@dataclass
class CaseResult:
    params: dict
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"params": {k: str(v) for k, v in self.params.items()},
               "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteResult:
    name: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, params: dict, passed: bool, detail: str = "") -> None:
        self.cases.append(CaseResult(params, bool(passed), detail))

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "cases": [c.to_json() for c in self.cases]}


def _sym(denominator: int = 1) -> QDescriptor:
    return QDescriptor.symbolic(denominator)


def _padic_q(q: int | Fraction = 6, p: int = 5, prec: int = 32) -> QDescriptor:
    return QDescriptor.padic(padic_from_rational(Fraction(q), p, prec))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_measure(n_levels: int = 3, seed: int = 20240, **_) -> SuiteResult:
    """Ball-measure distribution property, total mass, and the p-adic limit
    of the fermionic ball weights."""
    out = SuiteResult("measure")
    rng = random.Random(seed)
    sym = _sym()
    for kind in (BOSONIC, FERMIONIC):
        for p in (3, 5):
            for d in (1, 3):
                if d % p == 0:
                    continue
                spec = MeasureSpec(kind, sym, ProfiniteDomain(p, d))
                for level in range(1, n_levels + 1):
                    size = d * p ** level
                    total = ball_measure_sum(spec, range(size), level)
                    out.add({"check": "total_mass", "kind": kind, "p": p,
                             "d": d, "N": level}, total == 1)
                    picks = {rng.randrange(size) for _ in range(3)}
                    for a in picks:
                        fine = ball_measure_sum(
                            spec, (a + i * size for i in range(p)), level + 1)
                        out.add({"check": "additivity", "kind": kind, "p": p,
                                 "d": d, "N": level, "a": a},
                                ball_measure(spec, a, level) == fine)
    # fermionic weights tend to ([2]_q/2)(-1)^a q^a, at the rate q^(p^N) -> 1
    qd = _padic_q()
    spec = MeasureSpec(FERMIONIC, qd, ProfiniteDomain(5))
    q = qd.q_padic
    two = qd.one() + q
    for a in (0, 1, 2):
        previous = None
        for level in range(1, 5):
            limit_value = two * q ** a / 2
            if a % 2 == 1:
                limit_value = -limit_value
            gap = (ball_measure(spec, a, level) - limit_value).valuation
            rate = (q ** (5 ** level) - qd.one()).valuation
            ok = gap >= rate and (previous is None or gap >= previous)
            out.add({"check": "fermionic_limit", "a": a, "N": level,
                     "gap": gap, "rate": rate}, ok)
            previous = gap
    return out


def suite_kpoly_forms(n_max: int = 8, **_) -> SuiteResult:
    """Closed form vs binomial expansion of the q-Euler polynomials."""
    out = SuiteResult("kpoly-forms")
    for x in (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(1, 3)):
        sym = _sym(x.denominator)
        for n in range(n_max + 1):
            same = k_polynomial(n, x, sym, "closed") == k_polynomial(n, x, sym, "expansion")
            out.add({"n": n, "x": x}, same)
    return out


def suite_finite_sum(n_max: int = 4, p: int = 3, **_) -> SuiteResult:
    """Level-N fermionic Riemann sums equal their closed right-hand side
    exactly in the symbolic field."""
    out = SuiteResult("finite-sum")
    sym = _sym()
    spec = MeasureSpec(FERMIONIC, sym, ProfiniteDomain(p))
    for level in (1, 2):
        for n in range(n_max + 1):
            for x in (0, 1):
                lhs = riemann_sum(spec, bracket_power(sym, n, x), level)
                rhs = fermionic_finite_rhs(n, x, level, sym, p)
                out.add({"N": level, "n": n, "x": x, "p": p}, lhs == rhs)
    return out


def suite_distribution(n_max: int = 6, ms: tuple[int, ...] = (1, 3, 5), **_) -> SuiteResult:
    """The odd-m distribution relation as an exact symbolic identity."""
    out = SuiteResult("distribution")
    for m in ms:
        if m < 1 or m % 2 == 0:
            raise ValueError(f"the distribution relation needs odd m, got {m}")
    for x in (Fraction(0), Fraction(1, 3)):
        sym = _sym(x.denominator)
        for m in ms:
            for n in range(n_max + 1):
                same = k_polynomial(n, x, sym) == k_distribution_rhs(n, x, m, sym)
                out.add({"m": m, "n": n, "x": x}, same)
    return out


def suite_char_twist(n_max: int = 4, digits: int = 5, levels: int = 7, **_) -> SuiteResult:
    """Twisted numbers: Riemann-sum integral vs closed form, quadratic
    character mod 3, p = 5, q = 6, modulo 5^digits."""
    out = SuiteResult("char-twist")
    chi = make_character(3, (1,))
    qd = _padic_q()
    sym = _sym()
    for n in range(n_max + 1):
        via_integral = k_chi(n, chi, qd, method="integral",
                             stability=digits, n_max=levels)
        closed_sym = k_chi(n, chi, sym, method="closed")
        closed_value = padic_from_rational(closed_sym.evaluate(6), 5, 30)
        gap = (via_integral - closed_value).valuation
        out.add({"n": n, "digits": digits, "gap": gap}, gap >= digits)
    # the closed p-adic route must match the symbolic evaluation too
    for n in range(n_max + 1):
        direct = k_chi(n, chi, qd, method="closed")
        target = padic_from_rational(k_chi(n, chi, sym).evaluate(6), 5, 30)
        out.add({"check": "closed_padic", "n": n},
                (direct - target).valuation >= digits)
    return out


def suite_beta_forms(n_max: int = 6, **_) -> SuiteResult:
    """The two displayed routes to the q-Bernoulli polynomials agree, the
    low-order numbers match their frozen reduced forms, and the bosonic
    integral reproduces the polynomials p-adically."""
    out = SuiteResult("beta-forms")
    for x in (Fraction(0), Fraction(1), Fraction(1, 2)):
        sym = _sym(x.denominator)
        for n in range(n_max + 1):
            same = beta_polynomial(n, x, sym, "closed") == beta_polynomial(n, x, sym, "expansion")
            out.add({"n": n, "x": x}, same)
    sym = _sym()
    one = sym.one()
    q = sym.element()
    out.add({"check": "beta_1"}, beta_number(1, sym) == -one / (one + q))
    out.add({"check": "beta_2"},
            beta_number(2, sym) == q / ((one + q) * (one + q + q * q)))
    qd = _padic_q()
    for n in range(4):
        for x in (0, 1, 2):
            via_integral = beta_polynomial(n, x, qd, form="integral",
                                           stability=4, n_max=8)
            target = padic_from_rational(
                beta_polynomial(n, x, _sym()).evaluate(6), 5, 30)
            gap = (via_integral - target).valuation
            out.add({"check": "integral", "n": n, "x": x, "gap": gap}, gap >= 4)
    return out


def suite_limits(n_max: int = 12, beta_n_max: int = 10, **_) -> SuiteResult:
    """q -> 1 limits: q-Euler numbers against the classical Euler numbers
    (closed form and generating function), and q-Bernoulli numbers against
    the classical Bernoulli numbers (reported comparison)."""
    out = SuiteResult("limits")
    for row in limit_consistency(n_max):
        out.add({"check": "euler", "n": row["n"], "K_limit": row["K_limit"],
                 "E_n": row["E_n"]}, row["equal"])
    bernoulli = classical_bernoulli(beta_n_max)
    sym = _sym()
    for n in range(beta_n_max + 1):
        lim = beta_number(n, sym).limit_at_one()
        out.add({"check": "bernoulli", "n": n, "beta_limit": str(lim),
                 "B_n": str(bernoulli[n])},
                lim == bernoulli[n],
                detail="equal" if lim == bernoulli[n] else "differs")
    return out


def suite_genfunc(order: int = 10, **_) -> SuiteResult:
    """n! times the generating-function coefficients equal the q-Euler
    numbers as reduced symbolic elements."""
    out = SuiteResult("genfunc")
    sym = _sym()
    gf = f_q_series(sym, order)
    for n in range(order + 1):
        out.add({"n": n}, scaled_coefficient(gf, n) == k_number(n, sym))
    return out


def suite_partial_sums(k_max: int = 6, n_terms: int = 200, **_) -> SuiteResult:
    """The alternating-series route to the numbers at rational q: partial
    sums land within their own reported tail bound of the closed form."""
    out = SuiteResult("partial-sums")
    for q in (Fraction(1, 2), Fraction(1, 3)):
        sym = _sym()
        for k in range(k_max + 1):
            ps = f_q_coefficient_partial(k, q, n_terms)
            target = k_number(k, sym).evaluate(q)
            gap = abs(ps.value - target)
            out.add({"k": k, "q": q, "bound": str(ps.tail_bound)},
                    gap <= ps.tail_bound,
                    detail=f"gap={gap}")
    return out


def suite_convergence(target: int = 6, levels: int = 8, **_) -> SuiteResult:
    """Certified p-adic convergence of the fermionic integral of [y]^3 at
    p = 5, q = 6, and nondecreasing difference-valuation traces at p = 3."""
    out = SuiteResult("convergence")
    qd = _padic_q()
    spec = MeasureSpec(FERMIONIC, qd, ProfiniteDomain(5))
    result = integrate(spec, bracket_power(qd, 3), target, levels)
    sym = _sym()
    target_value = padic_from_rational(k_number(3, sym).evaluate(6), 5, 30)
    gap = (result.value - target_value).valuation
    out.add({"check": "value", "N_used": result.n_used,
             "stability": result.stability, "gap": gap},
            result.stability >= target and gap >= target)
    trace_vals = [v for _, v in result.trace]
    out.add({"check": "trace", "trace": trace_vals},
            trace_vals == sorted(trace_vals))
    qd3 = _padic_q(4, 3)
    spec3 = MeasureSpec(FERMIONIC, qd3, ProfiniteDomain(3))
    for n in range(5):
        for x in (0, 1):
            vals = []
            previous = None
            for level in range(1, 9):
                current = riemann_sum(spec3, bracket_power(qd3, n, x), level)
                if previous is not None:
                    vals.append((current - previous).valuation)
                previous = current
            out.add({"check": "monotone", "p": 3, "n": n, "x": x, "trace": vals},
                    vals == sorted(vals))
    return out


SUITES = {
    "measure": suite_measure,
    "kpoly-forms": suite_kpoly_forms,
    "finite-sum": suite_finite_sum,
    "distribution": suite_distribution,
    "char-twist": suite_char_twist,
    "beta-forms": suite_beta_forms,
    "limits": suite_limits,
    "genfunc": suite_genfunc,
    "partial-sums": suite_partial_sums,
    "convergence": suite_convergence,
}


def run_suites(names: list[str] | None = None, **overrides) -> list[SuiteResult]:
    """Run the selected suites (all by default) with optional parameter
    overrides; unknown names raise ValueError."""
    selected = list(SUITES) if not names else names
    results = []
    for name in selected:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        results.append(SUITES[name](**overrides))
    return results
