"""Abelian number fields modeled inside cyclotomic fields.

A field K is given by a modulus m (m != 2 mod 4) and a subgroup H of
the units mod m; K is the fixed field of H acting on the m-th roots of
unity.  Degree, ramification, conductor, discriminant and genus-field
degrees are all subgroup-index computations.

The conductor is computed by two independent routes and the results
compared: a minimal-divisor search, and the ramification-index product
formula (with a separate 2-adic disambiguation that compares the
ramification of 2 in K and in K(sqrt(-1))).  Disagreement raises
``InternalMismatch`` and is never expected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .arith import (
    crt,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    kronecker_symbol,
    mobius,
    valuation,
)
from .errors import (
    InternalMismatch,
    InvalidSubgroup,
    NonIntegral,
    NonIntegralExponent,
    NotCyclic,
    NotDividing,
    NotSquarefree,
    ParseError,
)


@lru_cache(maxsize=None)
def unit_group(m: int) -> tuple[int, ...]:
    """Residues coprime to m, ascending.  unit_group(1) == (0,)."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return tuple(a for a in range(m) if math.gcd(a, m) == 1)


def subgroup_closure(m: int, generators) -> frozenset[int]:
    """Subgroup of the units mod m generated by the given residues."""
    identity = 1 % m
    elements = {identity}
    frontier = [identity]
    gens = [g % m for g in generators]
    for g in gens:
        if math.gcd(g, m) != 1:
            raise InvalidSubgroup(f"{g} is not a unit mod {m}")
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % m
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return frozenset(elements)


def _product_subgroup(m: int, A: frozenset[int], B: frozenset[int]) -> frozenset[int]:
    # For subgroups of an abelian group the product set is the join.
    if A <= B:
        return B
    if B <= A:
        return A
    return frozenset(a * b % m for a in A for b in B)


@dataclass(frozen=True, init=False)
class AbelianFieldSpec:
    """K inside the m-th cyclotomic field, fixed by <h_generators>."""

    m: int
    h_generators: tuple[int, ...] = ()

    def __init__(self, m: int, h_generators=()):
        if m < 1 or m % 4 == 2:
            raise InvalidSubgroup(f"modulus {m} must be positive and != 2 mod 4")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "h_generators", tuple(int(g) for g in h_generators))
        _ = self.subgroup  # validates the generators eagerly

    @cached_property
    def subgroup(self) -> frozenset[int]:
        return subgroup_closure(self.m, self.h_generators)


@dataclass(frozen=True)
class PrimeRamification:
    p: int
    e: int
    f: int
    conductor_exponent: int


@dataclass(frozen=True)
class RamificationProfile:
    """Per-prime ramification data for the primes dividing the modulus."""

    entries: tuple[PrimeRamification, ...]

    def for_prime(self, p: int) -> PrimeRamification:
        for entry in self.entries:
            if entry.p == p:
                return entry
        raise NotDividing(f"{p} does not divide the modulus")


@lru_cache(maxsize=None)
def _inertia(m: int, p: int) -> frozenset[int]:
    v = valuation(m, p)
    cofactor = m // p**v
    return frozenset(a for a in unit_group(m) if a % cofactor == 1 % cofactor)


@lru_cache(maxsize=None)
def _frobenius_residue(m: int, p: int) -> int:
    # = p mod the away-from-p part, = 1 mod the p-part.
    v = valuation(m, p)
    cofactor = m // p**v
    return crt([p % cofactor, 1], [cofactor, p**v])


def degree(K: AbelianFieldSpec) -> int:
    """[K:Q] = phi(m) / |H|."""
    return euler_phi(K.m) // len(K.subgroup)


def is_real(K: AbelianFieldSpec) -> bool:
    """K is totally real iff complex conjugation (-1 mod m) lies in H."""
    return (K.m - 1) % K.m in K.subgroup


def ramification_index(K: AbelianFieldSpec, p: int) -> int:
    """e(p) = index of H's part of the inertia subgroup at p."""
    if K.m % p != 0:
        raise NotDividing(f"{p} does not divide modulus {K.m}")
    inertia = _inertia(K.m, p)
    return len(inertia) // len(inertia & K.subgroup)


def residue_degree(K: AbelianFieldSpec, p: int) -> int:
    """Order of the Frobenius at p in Gal(K/Q)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m, H = K.m, K.subgroup
    if m % p != 0:
        target = H
        sigma = p % m
    else:
        target = _product_subgroup(m, H, _inertia(m, p))
        sigma = _frobenius_residue(m, p)
    f = 1
    x = sigma
    while x not in target:
        x = x * sigma % m
        f += 1
    return f


def _conductor_by_search(K: AbelianFieldSpec) -> int:
    m, H = K.m, K.subgroup
    units = unit_group(m)
    for f in divisors(m):
        if all(a in H for a in units if a % f == 1 % f):
            return f
    raise AssertionError("unreachable: m itself always qualifies")


def _two_adic_conductor_exponent(K: AbelianFieldSpec) -> int:
    # 2 ramified forces 4 | m, so K(sqrt(-1)) also lives mod m: its
    # subgroup is the part of H congruent to 1 mod 4.
    m, H = K.m, K.subgroup
    inertia = _inertia(m, 2)
    e = len(inertia) // len(inertia & H)
    h_gauss = frozenset(a for a in H if a % 4 == 1)
    e_adjoined = len(inertia) // len(inertia & h_gauss)
    bump = 1 if e_adjoined == e else 2
    return valuation(e, 2) + bump


def _conductor_by_formula(K: AbelianFieldSpec) -> int:
    f = 1
    for p, _ in factorize(K.m).factors:
        e = ramification_index(K, p)
        if e == 1:
            continue
        if p == 2:
            f *= 2 ** _two_adic_conductor_exponent(K)
        else:
            f *= p ** (1 + valuation(e, p))
    return f


def conductor(K: AbelianFieldSpec) -> int:
    """Smallest f with K contained in the f-th cyclotomic field.

    Runs the divisor search and the ramification formula and insists
    they agree.
    """
    by_search = _conductor_by_search(K)
    by_formula = _conductor_by_formula(K)
    if by_search != by_formula:
        raise InternalMismatch(
            f"conductor mismatch for m={K.m}: search={by_search} formula={by_formula}"
        )
    return by_search


def reduce_to_conductor(K: AbelianFieldSpec) -> AbelianFieldSpec:
    """The same field presented with modulus equal to its conductor."""
    f = conductor(K)
    if f == K.m:
        return K
    return AbelianFieldSpec(f, sorted({a % f for a in K.subgroup}))


def discriminant(K: AbelianFieldSpec) -> int:
    """Absolute value of the field discriminant.

    Per ramified prime the exponent is (v - lambda_p) * [K:Q], where
    lambda_p is an exact rational built from the conductor exponent v
    and the ramification index; a non-integral total is a bug trap.
    """
    K0 = reduce_to_conductor(K)
    n = degree(K0)
    result = 1
    for p, v in factorize(K0.m).factors:
        e = ramification_index(K0, p)
        u = Fraction(e, p ** (v - 1))
        w = v - (2 if p == 2 else 1)
        lam = (p**w - 1 + Fraction(p - 1) / u) / (p**w * (p - 1))
        exp = (v - lam) * n
        if exp.denominator != 1 or exp < 0:
            raise NonIntegralExponent(
                f"discriminant exponent {exp} at p={p} for m={K0.m}"
            )
        result *= p ** int(exp)
    return result


def conductor_discriminant_oracle(K: AbelianFieldSpec) -> int:
    """Independent discriminant: product of the conductors of all
    characters of Gal(K/Q), counted by subgroup indices and Moebius
    inversion over the divisors of the conductor."""
    K0 = reduce_to_conductor(K)
    f, H = K0.m, K0.subgroup
    units = unit_group(f)
    phi = euler_phi(f)
    divs = divisors(f)
    count_dividing = {}
    for g in divs:
        u_g = frozenset(a for a in units if a % g == 1 % g)
        count_dividing[g] = phi // len(_product_subgroup(f, H, u_g))
    result = 1
    for g in divs:
        exact = sum(mobius(g // gp) * count_dividing[gp] for gp in divisors(g))
        result *= g**exact
    return result


def is_cyclic(K: AbelianFieldSpec) -> bool:
    """Whether Gal(K/Q) = units(m)/H is cyclic."""
    m, H = K.m, K.subgroup
    n = degree(K)
    for a in unit_group(m):
        order = 1
        x = a
        while x not in H:
            x = x * a % m
            order += 1
        if order == n:
            return True
    return n == 1


def genus_degree_cyclic(K: AbelianFieldSpec) -> int:
    """Degree over K of its narrow genus field, for cyclic K.

    The narrow genus field is the compositum of one totally ramified
    piece of degree e(p) per ramified prime, so its degree over K is
    prod e(p) / [K:Q].
    """
    if not is_cyclic(K):
        raise NotCyclic(f"field for m={K.m} is not cyclic")
    n = degree(K)
    prod_e = 1
    for p, _ in factorize(K.m).factors:
        prod_e *= ramification_index(K, p)
    if prod_e % n != 0:
        raise NonIntegral(f"genus degree {prod_e}/{n} not integral")
    return prod_e // n


def ramification_profile(K: AbelianFieldSpec) -> RamificationProfile:
    """e, f and conductor exponent for each prime dividing the modulus."""
    cond = conductor(K)
    entries = []
    for p, _ in factorize(K.m).factors:
        entries.append(
            PrimeRamification(
                p=p,
                e=ramification_index(K, p),
                f=residue_degree(K, p),
                conductor_exponent=valuation(cond, p) if cond > 1 else 0,
            )
        )
    return RamificationProfile(tuple(entries))


def all_unit_subgroups(m: int) -> list[frozenset[int]]:
    """Every subgroup of the units mod m (joins of cyclic subgroups)."""
    units = unit_group(m)
    cyclics = {subgroup_closure(m, (a,)) for a in units}
    found = {frozenset({1 % m})}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        for cyc in cyclics:
            joined = _product_subgroup(m, current, cyc)
            if joined not in found:
                found.add(joined)
                frontier.append(joined)
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def quadratic_field_spec(d: int) -> AbelianFieldSpec:
    """The quadratic field of squarefree d as a cyclotomic subgroup spec."""
    if d in (0, 1):
        raise NotSquarefree(f"{d} does not define a quadratic field")
    for _, e in factorize(abs(d)).factors:
        if e > 1:
            raise NotSquarefree(f"{d} is not squarefree")
    D = d if d % 4 == 1 else 4 * d
    m = abs(D)
    gens = [a for a in unit_group(m) if kronecker_symbol(D, a) == 1]
    return AbelianFieldSpec(m, gens)


def cyclotomic_field_spec(m: int) -> AbelianFieldSpec:
    return AbelianFieldSpec(m, ())


def real_cyclotomic_field_spec(m: int) -> AbelianFieldSpec:
    return AbelianFieldSpec(m, (m - 1,))


def parse_field_spec(text: str) -> AbelianFieldSpec:
    """Parse the field grammar shared with the CLI.

    Accepted forms: ``m=<int>;gens=<int>,<int>,...``, ``quad:d=<int>``,
    ``cyclotomic:m=<int>``, ``real-cyclotomic:m=<int>``.
    """
    s = text.strip()
    try:
        if s.startswith("quad:d="):
            return quadratic_field_spec(int(s[len("quad:d="):]))
        if s.startswith("cyclotomic:m="):
            return cyclotomic_field_spec(int(s[len("cyclotomic:m="):]))
        if s.startswith("real-cyclotomic:m="):
            return real_cyclotomic_field_spec(int(s[len("real-cyclotomic:m="):]))
        if s.startswith("m="):
            head, sep, tail = s.partition(";")
            m = int(head[len("m="):])
            if not sep:
                return AbelianFieldSpec(m, ())
            if not tail.startswith("gens="):
                raise ParseError(f"expected gens=..., got {tail!r}")
            body = tail[len("gens="):]
            gens = [int(g) for g in body.split(",") if g.strip()] if body else []
            return AbelianFieldSpec(m, gens)
    except (ValueError, InvalidSubgroup, NotSquarefree) as exc:
        raise ParseError(f"bad field spec {text!r}: {exc}") from exc
    raise ParseError(f"unrecognized field spec {text!r}")
