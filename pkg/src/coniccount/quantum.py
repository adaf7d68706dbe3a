"""Closed-form conic counts for hypersurfaces of degree n in P^n and the
quantum-cohomology structure constants they come from.

Everything is exact big-integer or rational arithmetic; the polynomials
in w are plain coefficient lists of Fractions, low degree first.  The
count of conics through a general point admits two independent
computations, a closed form and a three-point-invariant route, and their
agreement is the module's main identity.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x + y for x, y in zip(a, b)]


def _poly_scale(a, c):
    return [x * c for x in a]


def _poly_eval(a, w):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * w + c
    return acc


@dataclass
class StructureConstants:
    """Degree-1 or degree-2 structure constants of the small quantum ring
    of a degree-n hypersurface in P^n, as exact coefficients indexed by m."""

    n: int
    level: int
    coefficients: list

    def __getitem__(self, m):
        return self.coefficients[m]

    def as_integers(self):
        """The coefficients as ints; raises when one is not integral."""
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"non-integer structure constant {c}")
            out.append(int(c))
        return out

    def to_json(self):
        return {"n": self.n, "level": self.level,
                "coefficients": [str(c) for c in self.coefficients]}


def structure_constants_d1(n):
    """Coefficient list of n * prod_(j=1..n-1) (j*w + (n-j)), length n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    poly = [Fraction(n)]
    for j in range(1, n):
        poly = _poly_mul(poly, [Fraction(n - j), Fraction(j)])
    assert len(poly) == n
    return StructureConstants(n, 1, poly)


def structure_constants_d2(n):
    """Degree-2 constants via the triple sum

        sum_(j2=0..n-2) sum_(j1=0..j2) sum_(j0=0..j1)
            L1[j1] * L1[j2+1] * w^(j1-j0) * ((1+w)/2)^(j2-j1);

    the halves cancel and the coefficient list has length n-1."""
    l1 = structure_constants_d1(n).coefficients
    half_1_plus_w = [Fraction(1, 2), Fraction(1, 2)]
    powers = [[Fraction(1)]]
    for _ in range(n - 2):
        powers.append(_poly_mul(powers[-1], half_1_plus_w))
    total = [Fraction(0)]
    for j2 in range(n - 1):
        for j1 in range(j2 + 1):
            base = _poly_scale(powers[j2 - j1], l1[j1] * l1[j2 + 1])
            for j0 in range(j1 + 1):
                shifted = [Fraction(0)] * (j1 - j0) + base
                total = _poly_add(total, shifted)
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    if len(total) > n - 1:
        raise AssertionError("degree-2 constants exceed the index bound")
    total += [Fraction(0)] * (n - 1 - len(total))
    return StructureConstants(n, 2, total)


def conic_count_closed_form(n):
    """(2n)! / 2^(n+1) - (n!)^2 / 2, as an exact integer."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = Fraction(math.factorial(2 * n), 2 ** (n + 1))
    b = Fraction(math.factorial(n) ** 2, 2)
    value = a - b
    assert value.denominator == 1
    return int(value)


def conic_count_via_structure_constants(n):
    """The three-point route: the top degree-2 constant divided by four.

    Setting m = n-2 in the bracket relation identifies L2[n-2] with the
    invariant counting conics through a point and two hyperplane-like
    conditions, up to the factor 4 from the two degree-1 insertions."""
    if n < 3:
        raise ValueError("n must be at least 3")
    l2 = structure_constants_d2(n)
    return l2[n - 2] / 4


def w_equals_two_evaluations(n):
    """Raw data for the derivation sketch: both generating polynomials
    evaluated at w = 2, next to the coefficients the sketch names."""
    l1 = structure_constants_d1(n)
    l2 = structure_constants_d2(n)
    return {
        "d1_at_w2": str(_poly_eval(l1.coefficients, Fraction(2))),
        "d2_at_w2": str(_poly_eval(l2.coefficients, Fraction(2))),
        "d1_top_coefficient": str(l1[n - 1]),
        "d2_top_coefficient": str(l2[n - 2]),
    }


def formulas_table(n_min=3, n_max=10):
    """Per-n comparison of the two conic counts, with the match flag."""
    rows = []
    for n in range(n_min, n_max + 1):
        closed = conic_count_closed_form(n)
        via = conic_count_via_structure_constants(n)
        rows.append({
            "n": n,
            "L1": [str(c) for c in structure_constants_d1(n).coefficients],
            "L2": [str(c) for c in structure_constants_d2(n).coefficients],
            "closed_form": closed,
            "via_structure_constants": str(via),
            "match": via == closed,
            "w_equals_two": w_equals_two_evaluations(n),
        })
    return rows
