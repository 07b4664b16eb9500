"""Pure-Python reference kernels.

Semantics are identical to the compiled module ``_fast``; these are the
fallback when the extension is unavailable and the baseline the
benchmark compares against.  Inputs are validated by the callers in
``quadratic``; here the discriminants are assumed well-formed.
"""

from __future__ import annotations

import math

from ..arith import kronecker_symbol


def imaginary_class_number(D: int) -> int:
    """Number of reduced positive forms (a,b,c) of discriminant D < 0."""
    h = 0
    alim = math.isqrt(-D // 3)
    for a in range(1, alim + 1):
        b0 = -(a - 1)
        if (b0 - D) % 2:
            b0 += 1
        for b in range(b0, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            h += 1
    return h


def imaginary_ambiguous_classes(D: int) -> int:
    """Reduced forms with b = 0, a = b, or a = c (the genus count)."""
    count = 0
    alim = math.isqrt(-D // 3)
    for a in range(1, alim + 1):
        b0 = -(a - 1)
        if (b0 - D) % 2:
            b0 += 1
        for b in range(b0, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if b == 0 or a == b or a == c:
                count += 1
    return count


def imaginary_dirichlet_class_number(D: int) -> int:
    """Class number for fundamental D < -4 from the finite character sum."""
    s = 0
    for a in range(1, (-D - 1) // 2 + 1):
        s += kronecker_symbol(D, a)
    denom = 2 - kronecker_symbol(D, 2)
    if s <= 0 or s % denom:
        raise ArithmeticError(f"character sum {s} not divisible by {denom} at D={D}")
    return s // denom


def _reduced_indefinite_forms(D: int) -> list[tuple[int, int, int]]:
    s = math.isqrt(D)
    forms = []
    b0 = 1 if (1 - D) % 2 == 0 else 2
    for b in range(b0, s + 1, 2):
        num = b * b - D  # negative: a*c < 0
        lo = (s - b) // 2 + 1
        hi = (s + b) // 2
        for a in range(lo, hi + 1):
            if a == 0 or num % (4 * a):
                continue
            c = num // (4 * a)
            forms.append((a, b, c))
            forms.append((-a, b, -c))
    return forms


def _rho(D: int, s: int, form: tuple[int, int, int]) -> tuple[int, int, int]:
    _, b, c = form
    twoc = 2 * abs(c)
    base = s + 1 - twoc
    r = base + (-b - base) % twoc
    return (c, r, (r * r - D) // (4 * c))


def real_narrow_class_number(D: int) -> int:
    """Number of cycles of reduced indefinite forms of discriminant D > 0."""
    s = math.isqrt(D)
    forms = _reduced_indefinite_forms(D)
    seen = set()
    cycles = 0
    for start in forms:
        if start in seen:
            continue
        cycles += 1
        current = start
        while True:
            seen.add(current)
            current = _rho(D, s, current)
            if current == start:
                break
    return cycles


def pell_norm_and_period(d: int) -> tuple[int, int]:
    """(norm of the fundamental unit, continued-fraction period of sqrt(d)).

    The norm is -1 exactly when the period is odd.
    """
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"{d} is a perfect square")
    p_prev, q_prev, a_prev = 0, 1, a0
    period = 0
    while True:
        p = a_prev * q_prev - p_prev
        q = (d - p * p) // q_prev
        period += 1
        if q == 1:
            break
        a_prev = (a0 + p) // q
        p_prev, q_prev = p, q
    return (-1 if period % 2 else 1), period
