"""Quadratic fields: class numbers from binary forms, Pell units, Polya
orders, and the decision procedure for an absolutely abelian Hilbert
class field.

Class numbers come from exact form enumeration (reduced positive forms
for imaginary fields, cycles of reduced indefinite forms for real ones);
the Dirichlet character sum is carried as an independent oracle for the
imaginary count.  The fundamental-unit norm comes from the parity of the
continued-fraction period of sqrt(d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .arith import factorize, is_prime, kronecker_symbol, valuation
from .certificates import Certificate
from .errors import BadP, NotFundamental, NotSquarefree, ViolationFound


@dataclass(frozen=True)
class BinaryQuadraticForm:
    """a x^2 + b xy + c y^2."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        D = self.discriminant
        a, b, c = self.a, self.b, self.c
        if D < 0:
            if a <= 0:
                return False
            if not (abs(b) <= a <= c):
                return False
            if (abs(b) == a or a == c) and b < 0:
                return False
            return True
        s = math.isqrt(D)
        if s * s == D:
            raise ValueError("indefinite reduction needs non-square discriminant")
        # 0 < b < sqrt(D) and sqrt(D) - 2|a| < b  (so |sqrt(D)-2|a|| < b)
        return 0 < b <= s and s < b + 2 * abs(a) and 2 * abs(a) <= s + b


def reduced_imaginary_forms(D: int) -> list[BinaryQuadraticForm]:
    """All reduced forms of discriminant D < 0 (one per ideal class)."""
    _require_fundamental_imaginary(D)
    forms = []
    for a in range(1, math.isqrt(-D // 3) + 1):
        b0 = -(a - 1)
        if (b0 - D) % 2:
            b0 += 1
        for b in range(b0, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            forms.append(BinaryQuadraticForm(a, b, c))
    return forms


@dataclass(frozen=True)
class QuadraticFieldData:
    """Class data for Q(sqrt(d)): unit_norm is None for imaginary d."""

    d: int
    D: int
    r: int
    h: int
    h_narrow: int
    unit_norm: int | None

    @property
    def is_real(self) -> bool:
        return self.d > 0


def _squarefree_or_raise(d: int) -> None:
    if d in (0, 1):
        raise NotSquarefree(f"{d} does not define a quadratic field")
    if any(e > 1 for _, e in factorize(abs(d)).factors):
        raise NotSquarefree(f"{d} is not squarefree")


def fundamental_discriminant(d: int) -> int:
    """d if d = 1 mod 4, else 4d, for squarefree d."""
    _squarefree_or_raise(d)
    return d if d % 4 == 1 else 4 * d


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1 or D == 0:
        return False
    if D % 4 == 1:
        return all(e == 1 for _, e in factorize(abs(D)).factors)
    if D % 4 == 0:
        d = D // 4
        if d % 4 == 1 or d in (0, 1):
            return False
        return all(e == 1 for _, e in factorize(abs(d)).factors)
    return False


def discriminant_to_d(D: int) -> int:
    """Squarefree core: inverse of fundamental_discriminant."""
    if not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant")
    return D if D % 4 == 1 else D // 4


def _require_fundamental_imaginary(D: int) -> None:
    if D >= 0 or not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a negative fundamental discriminant")


def class_number_imaginary(D: int) -> int:
    """h(D) for fundamental D < 0, by counting reduced forms."""
    _require_fundamental_imaginary(D)
    return _kernels.imaginary_class_number(D)


def class_number_dirichlet(D: int) -> int:
    """Independent h(D) for fundamental D < -4, by the character sum
    h = (sum of (D|a) over 0 < a < |D|/2) / (2 - (D|2))."""
    if D >= -4 or not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a fundamental discriminant < -4")
    return _kernels.imaginary_dirichlet_class_number(D)


def ambiguous_class_count(D: int) -> int:
    """Number of ambiguous reduced forms of imaginary discriminant D."""
    _require_fundamental_imaginary(D)
    return _kernels.imaginary_ambiguous_classes(D)


def pell_unit(d: int) -> tuple[int, int]:
    """(unit_norm, period): norm of the fundamental unit of Q(sqrt(d))
    and the continued-fraction period of sqrt(d); norm -1 iff odd."""
    _squarefree_or_raise(d)
    if d <= 1:
        raise ValueError("pell_unit requires squarefree d > 1")
    return _kernels.pell_norm_and_period(d)


def narrow_class_number_real(D: int) -> int:
    """Cycle count of reduced indefinite forms: the narrow class number."""
    if D <= 0 or not is_fundamental_discriminant(D):
        raise NotFundamental(f"{D} is not a positive fundamental discriminant")
    return _kernels.real_narrow_class_number(D)


def quadratic_field_data(d: int) -> QuadraticFieldData:
    """Assemble class data for Q(sqrt(d)) from the form/Pell kernels."""
    D = fundamental_discriminant(d)
    r = len(factorize(abs(D)).primes)
    if d < 0:
        h = class_number_imaginary(D)
        return QuadraticFieldData(d=d, D=D, r=r, h=h, h_narrow=h, unit_norm=None)
    h_narrow = narrow_class_number_real(D)
    unit_norm, _ = pell_unit(d)
    if unit_norm == 1:
        if h_narrow % 2:
            raise ViolationFound(
                f"odd narrow class number {h_narrow} with unit norm +1 at d={d}"
            )
        h = h_narrow // 2
    else:
        h = h_narrow
    return QuadraticFieldData(
        d=d, D=D, r=r, h=h, h_narrow=h_narrow, unit_norm=unit_norm
    )


def polya_order_quadratic(K: QuadraticFieldData) -> int:
    """|Po(K)| = 2**(r-1), halved again for real fields with unit norm +1
    (clamped to 1 in the degenerate r = 1 case)."""
    if K.is_real and K.unit_norm == 1:
        return max(2 ** (K.r - 2), 1)
    return 2 ** (K.r - 1)


def _has_3mod4_prime(d: int) -> bool:
    return any(p % 4 == 3 for p in factorize(abs(d)).primes)


def hcf_abelian_quadratic(K: QuadraticFieldData) -> Certificate:
    """Decide whether the Hilbert class field of Q(sqrt(d)) is abelian
    over Q.

    The class group covers its Polya subgroup exactly in the abelian
    case, which pins h to 2**(r-1) (imaginary; real with unit norm -1;
    real with unit norm +1 and no prime 3 mod 4 dividing d) or to
    2**(r-2) (real with a prime 3 mod 4 dividing d).
    """
    po = polya_order_quadratic(K)
    assumptions: tuple[str, ...] = ()
    if not K.is_real:
        theorem = "cor-4.4"
        target = 2 ** (K.r - 1)
    elif _has_3mod4_prime(K.d):
        if K.unit_norm == -1:
            raise ViolationFound(
                f"unit norm -1 with a 3 mod 4 prime dividing d={K.d}"
            )
        theorem = "thm-4.6"
        target = 2 ** (K.r - 2)
    elif K.unit_norm == -1:
        theorem = "thm-4.5.1"
        target = 2 ** (K.r - 1)
    else:
        theorem = "thm-4.5.2"
        target = 2 ** (K.r - 1)
        if K.r == 1:
            assumptions = ("polya-order-clamped-at-r-1",)
    witnesses = [
        ("d", K.d),
        ("D", K.D),
        ("r", K.r),
        ("h", K.h),
        ("polya_order", po),
        ("target_h", target),
    ]
    if K.unit_norm is not None:
        witnesses.append(("unit_norm", K.unit_norm))
    if K.h == target:
        return Certificate("abelian", theorem, tuple(witnesses), assumptions)
    odd = next((p for p in factorize(K.h).primes if p != 2), None)
    if odd is not None:
        witnesses.append(("odd_prime_dividing_h", odd))
        return Certificate("non_abelian", "cor-3.5", tuple(witnesses), assumptions)
    return Certificate("non_abelian", theorem, tuple(witnesses), assumptions)


def c2_bound_check(K: QuadraticFieldData, m: int) -> Certificate:
    """For abelian verdicts, h must be 2**s with s <= d-1 where 2**d
    exactly divides phi(m).  A violation is a bug trap."""
    from .arith import euler_phi

    verdict = hcf_abelian_quadratic(K)
    d_exp = valuation(euler_phi(m), 2)
    if verdict.verdict != "abelian":
        return Certificate(
            "inconclusive",
            "cor-3.9",
            (("h", K.h), ("m", m), ("reason", "field not marked abelian")),
        )
    h = K.h
    s = valuation(h, 2)
    if 2**s != h or s > d_exp - 1:
        raise ViolationFound(
            f"h={h} violates the 2-power bound 2**{d_exp - 1} at m={m}"
        )
    return Certificate(
        "bound_holds",
        "cor-3.9",
        (("h", h), ("s", s), ("d", d_exp), ("m", m)),
    )


def two_squares(p: int) -> tuple[int, int]:
    """p = b**2 + c**2 for prime p = 1 mod 4, by Cornacchia descent."""
    if p == 2:
        return (1, 1)
    if p % 4 != 1 or not is_prime(p):
        raise BadP(f"{p} is not a prime congruent to 1 mod 4")
    # A square root of -1 mod p from a quadratic non-residue.
    for a in range(2, p):
        if kronecker_symbol(a, p) == -1:
            x = pow(a, (p - 1) // 4, p)
            break
    b, c = p, x
    while c * c > p:
        b, c = c, b % c
    return (c, math.isqrt(p - c * c))


def ext2_certify(p: int, a: int) -> list[Certificate]:
    """Certify non-abelian Hilbert class fields over Q(sqrt(p)) and the
    quartic field built from a(p + b*sqrt(p)).

    Needs p = b**2 + c**2 = 1 mod 4 prime and class number of Q(sqrt(p))
    greater than 1; any odd prime dividing that class number survives
    into the quartic field and blocks abelianness in both.  Returns the
    pair of certificates, or a single inconclusive one when h = 1.
    """
    if p % 4 != 1 or not is_prime(p):
        raise BadP(f"{p} must be a prime congruent to 1 mod 4")
    if a % 2 == 0 or abs(a) <= 1 or math.gcd(a, p) != 1:
        raise ValueError(f"a={a} must be odd, squarefree, |a|>1, coprime to p")
    _squarefree_or_raise(a)
    b, c = two_squares(p)
    base = quadratic_field_data(p)
    if base.h == 1:
        return [
            Certificate(
                "inconclusive",
                "thm-6.6",
                (("p", p), ("a", a), ("h_base", 1)),
                ("hypotheses not met: class number of the base field is 1",),
            )
        ]
    if base.h % 2 == 0:
        raise ViolationFound(f"even class number {base.h} for prime d={p}")
    q = factorize(base.h).primes[0]
    base_cert = Certificate(
        "non_abelian",
        "cor-3.5",
        (("field", f"Q(sqrt({p}))"), ("h", base.h), ("odd_prime", q), ("degree", 2)),
    )
    quartic_cert = Certificate(
        "non_abelian",
        "thm-6.6",
        (
            ("field", f"Q(sqrt({a}*({p}+{b}*sqrt({p}))))"),
            ("p", p),
            ("a", a),
            ("b", b),
            ("c", c),
            ("h_base", base.h),
            ("odd_prime", q),
            ("degree", 4),
        ),
    )
    return [base_cert, quartic_cert]
