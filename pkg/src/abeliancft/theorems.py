"""Class-number bounds and abelianness certificates.

The central object is the integer t built from the primes of a
conductor m: collect the primes q dividing at least two of the p_i - 1,
each to the largest power dividing prod (p_j - 1); multiply by the
analogous power of each p_i that has v_i >= 2 in m and divides exactly
one p_j - 1.  When the Hilbert class field of a field of conductor m is
abelian over Q, its class number divides t, and t itself is below
prod (p_i - 1) < prod p_i <= D**(1/n), which yields the main
class-number inequality h**n < D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import cyclo
from .abgroup import FiniteAbelianGroup, exponent
from .arith import divisors, euler_phi, factorize, is_prime, valuation
from .certificates import Certificate
from .errors import (
    DegreeMismatch,
    HypothesisFail,
    NonIntegral,
    NotCyclic,
    ShapeNotRecognized,
    TowerInconsistent,
)


@dataclass(frozen=True)
class TBoundBreakdown:
    """The pieces of the divisor bound t for a conductor m."""

    S: tuple[int, ...]
    S1: tuple[int, ...]
    u_exponents: tuple[tuple[int, int], ...]
    x: int
    w_exponents: tuple[tuple[int, int], ...]
    t: int

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "S1": list(self.S1),
            "u_exponents": {str(q): u for q, u in self.u_exponents},
            "x": self.x,
            "w_exponents": {str(p): w for p, w in self.w_exponents},
            "t": self.t,
        }


def t_bound(m: int) -> TBoundBreakdown:
    """Build t from the primes dividing m (taken as the conductor)."""
    if m < 1 or m % 4 == 2:
        raise ValueError(f"conductor {m} must be positive and != 2 mod 4")
    fac = factorize(m).factors
    primes = [p for p, _ in fac]
    pm1 = [p - 1 for p in primes]
    prod_pm1 = math.prod(pm1)
    q_candidates = sorted({q for v in pm1 if v > 1 for q in factorize(v).primes})
    s1 = tuple(q for q in q_candidates if sum(1 for v in pm1 if v % q == 0) >= 2)
    u_exps = tuple((q, valuation(prod_pm1, q)) for q in s1)
    x_primes = [
        p
        for p, v in fac
        if v >= 2 and sum(1 for w in pm1 if w % p == 0) == 1
    ]
    x = math.prod(x_primes)
    w_exps = tuple((p, valuation(prod_pm1, p)) for p in x_primes)
    t = math.prod(q**u for q, u in u_exps) * math.prod(p**w for p, w in w_exps)
    return TBoundBreakdown(tuple(primes), s1, u_exps, x, w_exps, t)


def t_bound_ell(m: int, ell: int) -> Certificate:
    """The ell-torsion consequence of the t construction.

    If ell does not divide t, any field of conductor m whose Hilbert
    ell-class field is abelian over Q has trivial ell-torsion; otherwise
    the ell-part of the class group is bounded by t.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    breakdown = t_bound(m)
    witnesses = (("m", m), ("ell", ell), ("t", breakdown.t))
    assumption = "the Hilbert ell-class field is assumed abelian over Q"
    if breakdown.t % ell:
        return Certificate("excluded", "thm-7.1", witnesses, (assumption,))
    return Certificate("bound_holds", "thm-7.1", witnesses, (assumption,))


def verify_main_bound(h: int, D: int, n: int) -> Certificate:
    """Check the strict inequality h**n < D in exact integers."""
    if h < 1 or D < 1 or n < 1:
        raise ValueError("verify_main_bound needs positive arguments")
    witnesses = (("h", h), ("D", D), ("n", n), ("h_pow_n", h**n))
    if h**n < D:
        return Certificate("bound_holds", "thm-1.1", witnesses)
    return Certificate("inconclusive", "thm-1.1", witnesses)


def certify_nonabelian(
    K_degree: int,
    class_group: FiniteAbelianGroup,
    subfield_data: tuple[int, int] | None = None,
) -> Certificate:
    """Non-abelianness from an element order in the class group.

    With a subfield F of relative degree n_sub = [K:F] and class number
    h_F, any class of order not dividing n_sub * h_F rules out an
    abelian Hilbert class field.  Defaults to F = Q.
    """
    n_sub, h_f = subfield_data if subfield_data is not None else (K_degree, 1)
    bound = n_sub * h_f
    for order in divisors(exponent(class_group)):
        if order > 1 and bound % order:
            return Certificate(
                "non_abelian",
                "thm-3.3",
                (
                    ("class_order", order),
                    ("n_times_h_F", bound),
                    ("class_group", class_group.invariant_factors),
                ),
            )
    return Certificate(
        "inconclusive",
        "thm-3.3",
        (("class_group", class_group.invariant_factors), ("n_times_h_F", bound)),
    )


def _shape_tag(K: cyclo.AbelianFieldSpec) -> tuple[str, str] | None:
    K0 = cyclo.reduce_to_conductor(K)
    f, H = K0.m, K0.subgroup
    if len(H) == 1:
        return ("cor-3.2", "cyclotomic")
    if f > 4 and H == frozenset({1, f - 1}):
        return ("cor-3.2", "real-cyclotomic")
    if len(factorize(f).factors) <= 1:
        return ("cor-3.2", "prime-power-conductor")
    n = cyclo.degree(K0)
    d = euler_phi(f) // n
    if math.gcd(d, n) == 1:
        return ("cor-3.6", f"phi(m)={n}*{d} with cofactor coprime to the degree")
    if n % 2:
        primes = factorize(f).primes
        pairwise = all(
            (p1 - 1) % p2 and (p2 - 1) % p1 for p1 in primes for p2 in primes if p1 < p2
        )
        only_two_power = all(
            all(q == 2 for q in factorize(math.gcd(p1 - 1, p2 - 1)).primes)
            for p1 in primes
            for p2 in primes
            if p1 < p2 and math.gcd(p1 - 1, p2 - 1) > 1
        )
        if pairwise and only_two_power:
            return ("cor-3.4", "odd degree, conductor primes nearly independent")
    return None


def cor32_check(K: cyclo.AbelianFieldSpec, h: int | None = None) -> Certificate:
    """For recognized field shapes the Hilbert class field is abelian
    over Q exactly when h = 1.  Raises ShapeNotRecognized otherwise."""
    tag = _shape_tag(K)
    if tag is None:
        raise ShapeNotRecognized(f"no h=1 criterion applies to m={K.m}")
    theorem, shape = tag
    witnesses = [("shape", shape), ("criterion", "abelian iff h_K == 1")]
    if h is None:
        return Certificate("inconclusive", theorem, tuple(witnesses))
    witnesses.append(("h", h))
    verdict = "abelian" if h == 1 else "non_abelian"
    return Certificate(verdict, theorem, tuple(witnesses), ("h supplied externally",))


def chabert_polya_cyclic(
    K: cyclo.AbelianFieldSpec, is_real: bool, unit_norm_trivial: bool
) -> int:
    """|Po(K)| for cyclic K: prod e(p) / [K:Q], with an extra factor 2
    in the denominator for real K whose units all have norm +1."""
    if not cyclo.is_cyclic(K):
        raise NotCyclic(f"field for m={K.m} is not cyclic")
    if is_real != cyclo.is_real(K):
        raise ValueError("is_real flag contradicts the field spec")
    n = cyclo.degree(K)
    prod_e = 1
    for p, _ in factorize(K.m).factors:
        prod_e *= cyclo.ramification_index(K, p)
    denom = 2 * n if (is_real and unit_norm_trivial) else n
    if prod_e % denom:
        raise NonIntegral(f"Polya order {prod_e}/{denom} not integral at m={K.m}")
    return prod_e // denom


def c1_decision_cyclic(
    K: cyclo.AbelianFieldSpec,
    h: int,
    is_real: bool,
    unit_norm_trivial: bool,
) -> Certificate:
    """For cyclic K of odd degree, or imaginary cyclic K: the Hilbert
    class field is abelian over Q iff the Polya group fills the class
    group, i.e. iff h equals the Chabert order."""
    n = cyclo.degree(K)
    if is_real and n % 2 == 0:
        raise HypothesisFail("real cyclic fields of even degree are not covered")
    po = chabert_polya_cyclic(K, is_real, unit_norm_trivial)
    witnesses = (("polya_order", po), ("h", h), ("degree", n))
    assumptions = ("h supplied externally",)
    verdict = "abelian" if po == h else "non_abelian"
    return Certificate(verdict, "thm-4.1", witnesses, assumptions)


def prime_degree_class_group_predict(
    K: cyclo.AbelianFieldSpec, q: int
) -> FiniteAbelianGroup:
    """Class group (Z/q)**(s-1) for degree-q fields with abelian Hilbert
    class field, s the number of ramified primes.  The abelianness is an
    assumption of the caller, not checked here."""
    if not is_prime(q) or q == 2:
        raise ValueError(f"{q} must be an odd prime")
    if cyclo.degree(K) != q:
        raise DegreeMismatch(f"degree {cyclo.degree(K)} != {q}")
    s = sum(
        1 for p, _ in factorize(K.m).factors if cyclo.ramification_index(K, p) > 1
    )
    return FiniteAbelianGroup([q] * (s - 1))


def r_function(deg_E: int, p: int, a: int) -> Fraction:
    """deg_E * (1/p + ... + 1/p**a) + a, exactly."""
    if deg_E < 1 or a < 1 or not is_prime(p):
        raise ValueError("r_function needs deg_E >= 1, prime p, a >= 1")
    return Fraction(deg_E * (p**a - 1), p**a * (p - 1)) + a


def _pow_fraction_upper(p: int, exp: Fraction) -> Fraction:
    # Dyadic over-approximation of p**exp for fractional exp.
    num, den = exp.numerator, exp.denominator
    scale = 2**16
    target = p**num * scale**den
    root = round(target ** (1.0 / den))
    while root**den > target:
        root -= 1
    while (root + 1) ** den <= target:
        root += 1
    return Fraction(root + 1, scale)


def r_product(x: int, y: int) -> tuple[Fraction, bool]:
    """R(x, y) = prod over p**a || y of p**r_function(x*y, p, a).

    Returns (value, exact).  Exponents are integral whenever y divides
    x*y, which holds for every use in the tower bound; the inexact
    branch returns a certified upper bound.
    """
    if x < 1 or y < 1:
        raise ValueError("r_product needs positive arguments")
    value = Fraction(1)
    exact = True
    for p, a in factorize(y).factors:
        exp = r_function(x * y, p, a)
        if exp.denominator == 1:
            value *= Fraction(p) ** int(exp)
        else:
            exact = False
            value *= _pow_fraction_upper(p, exp)
    return value, exact


def n1_bound(
    n: int, h: int, m: int, m1: int, po_K: int, po_rel: int
) -> Certificate:
    """Upper bound for the class number of the Hilbert class field:
    R(n*h, m1) * R(1, n) * |Po(K)| * |Po rel| / phi(m).

    m is the conductor of the (abelian) Hilbert class field and m1 the
    cyclotomic codegree [Q(zeta_m) : H(K)]; the relative Polya order is
    an external input.
    """
    if min(n, h, m, m1, po_K, po_rel) < 1:
        raise ValueError("n1_bound needs positive arguments")
    phi = euler_phi(m)
    if phi % (m1 * n * h):
        raise TowerInconsistent(
            f"m1*n*h = {m1 * n * h} does not divide phi({m}) = {phi}"
        )
    r_top, exact_top = r_product(n * h, m1)
    r_deg, exact_deg = r_product(1, n)
    bound = r_top * r_deg * po_K * po_rel / phi
    exact = exact_top and exact_deg
    witnesses = (
        ("bound", bound),
        ("R(nh,m1)", r_top),
        ("R(1,n)", r_deg),
        ("po_K", po_K),
        ("po_rel", po_rel),
        ("phi_m", phi),
        ("exact", exact),
    )
    assumptions = (
        "the Hilbert class field is assumed abelian over Q",
        "relative Polya order supplied externally",
    ) + (() if exact else ("bound rounded upward (fractional exponents)",))
    return Certificate("bound_holds", "thm-4.9", witnesses, assumptions)
