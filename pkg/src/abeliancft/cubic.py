"""The x^3 + cx + c family: S3 splitting fields and the degree-3
residue-class criteria.

These checkers decide, from supplied class-number data, when the ideal
classes of residue-degree-3 primes generate the class group of an S3
sextic field.  Class numbers of the sextic fields are never computed
here; they enter as external inputs and are echoed into certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .abgroup import FiniteAbelianGroup, aut_order
from .arith import divisors, factorize, is_squarefree
from .certificates import Certificate


@dataclass(frozen=True)
class CubicSpec:
    """Monic cubic x^3 + a x^2 + b x + c."""

    a: int
    b: int
    c: int


def family_cubic(c: int) -> CubicSpec:
    """The one-parameter family x^3 + c x + c."""
    return CubicSpec(0, c, c)


def cubic_discriminant(f: CubicSpec) -> int:
    """a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c."""
    a, b, c = f.a, f.b, f.c
    return a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c


def _rational_root(f: CubicSpec) -> int | None:
    # Integer roots of a monic integer cubic divide the constant term.
    if f.c == 0:
        return 0
    for d in divisors(abs(f.c)):
        for root in (d, -d):
            if root**3 + f.a * root**2 + f.b * root + f.c == 0:
                return root
    return None


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    s = math.isqrt(n)
    return s * s == n


def s3_family_check(c: int) -> Certificate:
    """Galois group of the splitting field of x^3 + cx + c.

    Irreducibility mod 2 (no roots there, automatic for odd c) plus a
    non-square discriminant forces S3; a rational root means reducible,
    and a square discriminant on an irreducible cubic means cyclic.
    """
    f = family_cubic(c)
    disc = cubic_discriminant(f)
    irreducible_mod_2 = c % 2 == 1  # f(0) = c, f(1) = 1 + 2c = 1 mod 2
    if irreducible_mod_2:
        root = None
        irreducible = True
    else:
        root = _rational_root(f)
        irreducible = root is None
    witnesses = (
        ("c", c),
        ("discriminant", disc),
        ("irreducible_mod_2", irreducible_mod_2),
        ("rational_root", root),
        ("discriminant_is_square", _is_square(disc)),
    )
    if not irreducible:
        return Certificate("not_s3", "prop-5.7", witnesses)
    if _is_square(disc):
        return Certificate("not_s3", "prop-5.7", witnesses)
    return Certificate("s3", "prop-5.7", witnesses)


def pht2_check(u: int) -> Certificate:
    """Degree-3 classes generate Z/u class groups of S3 sextics when u
    is squarefree with every prime divisor = 2 mod 3."""
    if u < 1:
        raise ValueError("u must be >= 1")
    if not is_squarefree(u):
        repeated = next(p for p, e in factorize(u).factors if e > 1)
        return Certificate(
            "does_not_apply",
            "thm-5.3",
            (("u", u), ("repeated_prime", repeated)),
        )
    bad = next((p for p in factorize(u).primes if p % 3 != 2), None)
    if bad is not None:
        return Certificate(
            "does_not_apply",
            "thm-5.3",
            (("u", u), ("prime_not_2_mod_3", bad)),
        )
    return Certificate("applies", "thm-5.3", (("u", u),))


def pht1_check(
    n: int,
    u: int,
    f: int,
    galois_max_order: int,
    cl: FiniteAbelianGroup,
) -> Certificate:
    """Checkable hypotheses for f-degree classes generating the class
    group of a degree-n Galois field with class number u.

    Requires f | n, gcd(f, u) = 1, maximal Galois element order exactly
    f, and gcd(f, |Aut(Cl)|) = 1 so that every twisting homomorphism
    kills an order-f element.  The semidirect splitting is derived when
    gcd(n, u) = 1 and recorded as an assumption otherwise.
    """
    if cl.order != u:
        raise ValueError(f"class group order {cl.order} != u = {u}")
    aut = aut_order(cl)
    witnesses = (
        ("n", n),
        ("u", u),
        ("f", f),
        ("galois_max_order", galois_max_order),
        ("aut_order", aut),
        ("class_group", cl.invariant_factors),
    )
    def fail(reason: str) -> Certificate:
        return Certificate(
            "does_not_apply", "thm-5.2", witnesses + (("reason", reason),)
        )

    if f <= 1 or n % f:
        return fail(f"{f} does not divide the degree {n}")
    if math.gcd(f, u) != 1:
        return fail(f"gcd({f}, {u}) != 1")
    if galois_max_order != f:
        return fail(f"maximal element order {galois_max_order} != {f}")
    if math.gcd(f, aut) != 1:
        return fail(f"gcd({f}, |Aut| = {aut}) != 1")
    if math.gcd(n, u) == 1:
        assumptions = ("splitting derived: group and class orders coprime",)
    else:
        assumptions = ("splitting of the Galois extension assumed",)
    return Certificate("applies", "thm-5.2", witnesses, assumptions)
