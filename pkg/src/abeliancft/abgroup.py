"""Finite abelian groups by invariant factors.

Groups are canonicalized on construction: any list of cyclic orders
(invariant factors, a primary decomposition, or a mix) is normalized to
the unique chain n_1 | n_2 | ... | n_t.  Automorphism group orders use
the per-prime closed formula for abelian p-groups, which the test suite
pins against explicit automorphism enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, factorize
from .certificates import Certificate


def _normalize(orders) -> tuple[int, ...]:
    exps: dict[int, list[int]] = {}
    for n in orders:
        if n < 1:
            raise ValueError(f"cyclic factor {n} must be >= 1")
        for p, e in factorize(n).factors:
            exps.setdefault(p, []).append(e)
    width = max((len(v) for v in exps.values()), default=0)
    factors = []
    for i in range(width):
        n_i = 1
        for p, es in exps.items():
            es_desc = sorted(es, reverse=True)
            if i < len(es_desc):
                n_i *= p ** es_desc[i]
        factors.append(n_i)
    return tuple(reversed(factors))


@dataclass(frozen=True, init=False)
class FiniteAbelianGroup:
    """Direct sum of Z/n_i with n_1 | n_2 | ... | n_t (empty = trivial)."""

    invariant_factors: tuple[int, ...]

    def __init__(self, orders=()):
        object.__setattr__(self, "invariant_factors", _normalize(orders))

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def primary_type(self, p: int) -> tuple[int, ...]:
        """Ascending exponents e with Z/p**e a primary component."""
        return tuple(
            e for n in self.invariant_factors for q, e in factorize(n).factors if q == p
        )

    def element_orders(self) -> tuple[int, ...]:
        """All orders of elements: exactly the divisors of the exponent."""
        return tuple(divisors(exponent(self)))

    def __str__(self):
        if self.is_trivial:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.invariant_factors)


def exponent(G: FiniteAbelianGroup) -> int:
    """Maximal element order: the last invariant factor (1 if trivial)."""
    return G.invariant_factors[-1] if G.invariant_factors else 1


def _aut_order_p_group(p: int, etype: tuple[int, ...]) -> int:
    # Closed formula for Aut of a direct sum of Z/p**e_k, e_1 <= ... <= e_n.
    n = len(etype)
    d = [max(l + 1 for l in range(n) if etype[l] == etype[k]) for k in range(n)]
    c = [min(l + 1 for l in range(n) if etype[l] == etype[k]) for k in range(n)]
    total = 1
    for k in range(n):
        total *= p ** d[k] - p**k
    for j in range(n):
        total *= (p ** etype[j]) ** (n - d[j])
    for i in range(n):
        total *= (p ** (etype[i] - 1)) ** (n - c[i] + 1)
    return total


def aut_order(G: FiniteAbelianGroup) -> int:
    """Order of the automorphism group of G."""
    if G.is_trivial:
        return 1
    primes = factorize(G.order).primes
    total = 1
    for p in primes:
        total *= _aut_order_p_group(p, G.primary_type(p))
    return total


def _partitions(n: int):
    """Integer partitions of n as descending tuples."""
    if n == 0:
        yield ()
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part, *rest)

    yield from rec(n, n)


def abelian_groups_of_order(m: int) -> list[FiniteAbelianGroup]:
    """All isomorphism classes of abelian groups of order m."""
    if m < 1:
        raise ValueError("order must be >= 1")
    choices: list[list[tuple[int, ...]]] = []
    primes = []
    for p, e in factorize(m).factors:
        primes.append(p)
        choices.append([part for part in _partitions(e)])
    groups = [FiniteAbelianGroup()] if m == 1 else []
    if m > 1:
        def build(i, acc):
            if i == len(primes):
                groups.append(FiniteAbelianGroup(acc))
                return
            p = primes[i]
            for part in choices[i]:
                build(i + 1, acc + [p**e for e in part])

        build(0, [])
    groups.sort(key=lambda g: g.invariant_factors)
    return groups


def semidirect_order(n1: int, n2: int) -> int:
    """Order of (g1, g2) when the twisting map fixes g1: lcm(n1, n2)."""
    if n1 < 1 or n2 < 1:
        raise ValueError("element orders must be >= 1")
    return math.lcm(n1, n2)


def cor37_check(n: int, m: int) -> Certificate:
    """Exclude m as a class number of a cyclic degree-n field.

    Succeeds when some prime factor of m does not divide n and n is
    coprime to |Aut(G)| for every abelian group G of order m; the
    coprimality forces the group extension to split into a direct
    product, which the prime condition contradicts.
    """
    if n <= 1 or m <= 1:
        raise ValueError("cor37_check requires n > 1 and m > 1")
    has_free_prime = any(n % p for p in factorize(m).primes)
    checked = []
    coprime = True
    for G in abelian_groups_of_order(m):
        a = aut_order(G)
        checked.append((G.invariant_factors, a))
        if math.gcd(n, a) != 1:
            coprime = False
    witnesses = (
        ("n", n),
        ("m", m),
        ("groups_checked", tuple(checked)),
        ("prime_of_m_not_dividing_n", has_free_prime),
    )
    if has_free_prime and coprime:
        return Certificate("excluded", "cor-3.7", witnesses)
    return Certificate("inconclusive", "cor-3.7", witnesses)
