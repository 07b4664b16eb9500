"""Brute-force oracles the tests check the library against.

Everything here is deliberately naive and independent of the package's
own algorithms: sieves, exhaustive enumeration, and lattice counting.
"""

from __future__ import annotations

import itertools
import math


def naive_factorize(n: int) -> list[tuple[int, int]]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def phi_sieve(limit: int) -> list[int]:
    """phi[0..limit] by the standard multiplicative sieve."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def phi_count(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def legendre_by_euler(a: int, p: int) -> int:
    """(a|p) for odd prime p via Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def partition_count(n: int) -> int:
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            counts[total] += counts[total - part]
    return counts[n]


# --- abelian group element machinery -------------------------------------

def group_elements(factors: tuple[int, ...]) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(n) for n in factors)))


def elem_add(factors, x, y):
    return tuple((a + b) % n for a, b, n in zip(x, y, factors))


def elem_order(factors, x) -> int:
    zero = tuple(0 for _ in factors)
    k, acc = 1, x
    while acc != zero:
        acc = elem_add(factors, acc, x)
        k += 1
    return k


def brute_force_aut_count(factors: tuple[int, ...]) -> int:
    """Count automorphisms by enumerating generator images.

    Feasible for small groups only: candidate images for the i-th
    canonical generator are elements of order dividing factors[i]; a
    tuple is an automorphism iff its images generate the group.
    """
    if not factors:
        return 1
    elements = group_elements(factors)
    order = len(elements)
    candidates = [
        [x for x in elements if elem_order(factors, x) in _divisors(n)]
        for n in factors
    ]
    count = 0
    for images in itertools.product(*candidates):
        generated = {tuple(0 for _ in factors)}
        frontier = list(generated)
        for g in images:
            for base in list(generated):
                acc = elem_add(factors, base, g)
                while acc not in generated:
                    generated.add(acc)
                    acc = elem_add(factors, acc, g)
        if len(generated) == order:
            count += 1
    return count


def _divisors(n: int) -> set[int]:
    return {d for d in range(1, n + 1) if n % d == 0}


def lattice_aut_count(factors: tuple[int, ...]) -> int:
    """Count automorphisms by Moebius inversion over the subgroup lattice.

    The automorphisms correspond to generator-image tuples (orders
    dividing the invariant factors) that generate the whole group;
    counting tuples inside each subgroup and inverting over the lattice
    gives the exact count.  Works for any order <= 64 in seconds.
    """
    if not factors:
        return 1
    elements = group_elements(factors)
    order = len(elements)
    index = {x: i for i, x in enumerate(elements)}
    add = [[index[elem_add(factors, x, y)] for y in elements] for x in elements]

    def closure(seed: frozenset[int]) -> frozenset[int]:
        out = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for g in seed:
                j = add[i][g]
                if j not in out:
                    out.add(j)
                    frontier.append(j)
        return frozenset(out)

    cyclic = {closure(frozenset({i})) for i in range(order)}
    subgroups = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        current = frontier.pop()
        for cyc in cyclic:
            joined = frozenset(
                add[i][j] for i in current for j in cyc
            )
            if joined not in subgroups:
                subgroups.add(joined)
                frontier.append(joined)

    masks = []
    for sub in subgroups:
        mask = 0
        for i in sub:
            mask |= 1 << i
        masks.append((mask, sub))
    masks.sort(key=lambda t: -bin(t[0]).count("1"))

    mu: dict[int, int] = {}
    full_mask = (1 << order) - 1
    for pos, (mask, _) in enumerate(masks):
        if mask == full_mask:
            mu[mask] = 1
            continue
        total = 0
        for other_mask, _ in masks[:pos]:
            if mask & ~other_mask == 0 and other_mask != mask:
                total += mu[other_mask]
        mu[mask] = -total

    orders = [elem_order(factors, x) for x in elements]
    total = 0
    for mask, sub in masks:
        prod = 1
        for n in factors:
            prod *= sum(1 for i in sub if n % orders[i] == 0)
        total += mu[mask] * prod
    return total


# --- quadratic forms ------------------------------------------------------

def naive_reduced_imaginary_forms(D: int) -> list[tuple[int, int, int]]:
    """Reduced forms of discriminant D < 0 by raw triple scan."""
    forms = []
    bound = math.isqrt(-D) + 1
    for a in range(1, bound + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if not (abs(b) <= a <= c):
                continue
            if (abs(b) == a or a == c) and b < 0:
                continue
            forms.append((a, b, c))
    return forms


def negative_pell_solvable(d: int, y_limit: int = 200000) -> bool | None:
    """True if x^2 - d y^2 = -1 has a small solution; None if unknown."""
    for y in range(1, y_limit + 1):
        x2 = d * y * y - 1
        x = math.isqrt(x2)
        if x * x == x2:
            return True
    return None
