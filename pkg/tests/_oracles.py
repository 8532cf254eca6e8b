"""Independent cross-check formulas used to compute expected test values.

Nothing here imports the package's own polynomial pipeline logic; these
are deliberately different algorithms so the tests are not circular.
"""

from __future__ import annotations

import math


def semigroup_alexander_terms(p: int, q: int) -> dict[int, int]:
    """Alexander polynomial of T(p,q) from the numerical semigroup <p,q>.

    With g = (p-1)(q-1)/2, the polynomial satisfies

        Delta(t) * t^g = (1 - t) * sum_{s in <p,q>, s < 2g} t^s + t^{2g},

    expressing the coefficients through semigroup membership alone --
    no products or division of polynomials anywhere.  Returns a sparse
    {exponent: coefficient} map, centred like the package output.
    """
    if math.gcd(p, q) != 1:
        raise ValueError("coprime parameters required")
    if p > q:
        p, q = q, p
    if p == 1:
        return {0: 1}
    g = (p - 1) * (q - 1) // 2
    members = {
        a * p + b * q
        for a in range(2 * g // p + 1)
        for b in range(2 * g // q + 1)
        if a * p + b * q < 2 * g
    }
    coefficients: dict[int, int] = {}
    for s in members:
        coefficients[s] = coefficients.get(s, 0) + 1
        coefficients[s + 1] = coefficients.get(s + 1, 0) - 1
    coefficients[2 * g] = coefficients.get(2 * g, 0) + 1
    return {e - g: c for e, c in coefficients.items() if c != 0}


def coprime_pair_count(bound: int) -> int:
    """Number of pairs 1 < p < q < bound with gcd(p, q) = 1, by sieve."""
    count = 0
    for q in range(3, bound):
        for p in range(2, q):
            if math.gcd(p, q) == 1:
                count += 1
    return count
