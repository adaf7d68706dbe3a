"""Counting and certifying the solutions of the derived system.

The count must come out equal to the closed formula

    (1/2) * prod_i (d_i - 1)! * d_i!

which is also the Bezout number of the derived system.  Counting runs
over large prime fields: a random instance over GF(p) behaves like a
general complex one with overwhelming probability, and unanimity of the
count across several primes and seeds is the working genericity proxy.
This substitution is recorded in every CountReport.

Backends, chosen by the shape of the system after the linear
compatibility equations are substituted away:

* one binary form          -> distinct projective roots directly,
* two equations in P^2     -> Sylvester eliminant, then distinct roots,
* anything bigger          -> Groebner basis over GF(p) on a random affine
                              chart; the count is the number of standard
                              monomials, certified against the Bezout
                              number and by squarefreeness of the
                              eliminant of a random linear form.
"""

import math
import random
from dataclasses import dataclass, field as dc_field

from .fields import PrimeField
from .multipoly import PolyRing
from .unipoly import (UniPoly, squarefree_root_count, is_squarefree,
                      factor_squarefree, roots_in_field)
from .groebner import (groebner_basis, quotient_count, eliminant_of_linear_form,
                       solve_zero_dimensional, INFINITE, PositiveDimensional)
from .resultant import sylvester_resultant
from .conic_system import (DegenerateInstance, dimension_from_degrees,
                           random_ci, restrict_to_plane_family, cascade_solve,
                           reconstruct_conic, restrict_section_to_plane)
from . import linalg

DEFAULT_PRIMES = (10007, 31013, 65537)
DEFAULT_SEEDS = (0, 1, 2)
MIN_PRIME = 10007

FIELD_NOTE = ("counted over large prime fields; unanimity across primes and "
              "seeds stands in for genericity over the complex numbers")


class InconsistentCounts(RuntimeError):
    """Trials disagreed; carries the full report for inspection."""

    def __init__(self, report):
        super().__init__("counts or certificates differ across trials")
        self.report = report


def expected_count(degrees):
    """The closed-form number of conics through two general points."""
    md = dimension_from_degrees(degrees)
    prod = 1
    for d in md.degrees:
        prod *= math.factorial(d - 1) * math.factorial(d)
    # d_i >= 2 makes the product even
    return prod // 2


def bezout_number(ds):
    """Product of the degrees of the derived system's equations."""
    out = 1
    for d in ds.degrees:
        out *= d
    return out


def expected_dimension_hypersurface(n, d):
    """Dimension of the conic family on a degree-d hypersurface of
    dimension n: conic Hilbert scheme of the ambient space minus the rank
    of the obstruction bundle, 3(n-1) + 5 - (2d+1) = 3n - 2d + 1.

    The stated hypothesis is n >= 7 and d <= n+1; the formula is computed
    for any inputs and flagged when outside that range."""
    dim = 3 * (n - 1) + 5 - (2 * d + 1)
    within = n >= 7 and d <= n + 1
    return dim, within


def obstruction_rank(md):
    """Rank of the bundle cutting out conics inside the Hilbert scheme of
    conics of the ambient space: sum of rk S^d E - rk S^(d-2) E."""
    return sum((d + 1) * (d + 2) // 2 - d * (d - 1) // 2 for d in md.degrees)


def boundary_family_dimension(md):
    """Dimension of the conic family for a boundary-case multidegree,
    computed the same way: dim P(S^2 E*) - rk of the obstruction bundle."""
    ambient = md.ambient
    return 3 * (ambient - 2) + 5 - obstruction_rank(md)


# ---------------------------------------------------------------------------
# solving the derived system


class _LinearReduction:
    """Substitute away the linear equations of a homogeneous system."""

    def __init__(self, ds):
        ring = ds.ring
        F = ring.field
        nv = ring.nvars
        linear, nonlinear = [], []
        for eq in ds.equations:
            (linear if eq.degree() == 1 else nonlinear).append(eq)
        rows = []
        for eq in linear:
            row = [F.zero] * nv
            for mon, c in eq.terms.items():
                row[mon.index(1)] = c
            rows.append(row)
        if rows:
            rref_rows, pivots = linalg.rref(F, rows)
            if len(pivots) != len(rows):
                raise DegenerateInstance("linear compatibility equations are dependent")
        else:
            rref_rows, pivots = [], []
        self.field = F
        self.nvars = nv
        self.pivots = pivots
        self.rows = rref_rows[:len(pivots)]
        self.free = [v for v in range(nv) if v not in pivots]
        names = tuple(ring.names[v] for v in self.free)
        self.ring = PolyRing(F, len(self.free), names)
        images = []
        free_index = {v: j for j, v in enumerate(self.free)}
        for v in range(nv):
            if v in free_index:
                images.append(self.ring.gen(free_index[v]))
            else:
                row = self.rows[pivots.index(v)]
                combo = self.ring.zero()
                for j, w in enumerate(self.free):
                    if row[w] != F.zero:
                        combo = combo - self.ring.gen(j).scale(row[w])
                images.append(combo)
        self.equations = [eq.substitute(self.ring, images) for eq in nonlinear]
        self.expected_degrees = [eq.degree() for eq in nonlinear]

    def lift(self, free_point, L, embed):
        """Rebuild the full projective point from free coordinates."""
        full = [None] * self.nvars
        for j, v in enumerate(self.free):
            full[v] = free_point[j]
        for t, v in enumerate(self.pivots):
            acc = L.zero
            for w in self.free:
                c = self.rows[t][w]
                if c != self.field.zero:
                    acc = L.sub(acc, L.mul(embed(c), full[w]))
            full[v] = acc
        return tuple(full)


def _embed_into(F, L):
    if F == L:
        return lambda c: c
    return L.from_base


def _binary_form_data(f):
    """(dehomogenized UniPoly in t = v0/v1, total degree) of a binary form."""
    ring = f.ring
    F = ring.field
    deg = f.degree()
    coeffs = [F.zero] * (deg + 1)
    for mon, c in f.terms.items():
        coeffs[mon[0]] = c
    return UniPoly(F, coeffs), deg


def _binary_distinct_roots(f):
    """Number of distinct projective roots of a nonzero binary form, plus
    a squarefreeness flag covering the root at infinity."""
    poly, deg = _binary_form_data(f)
    inf_mult = deg - poly.degree
    distinct = squarefree_root_count(poly) + (1 if inf_mult else 0)
    squarefree = is_squarefree(poly) and inf_mult <= 1
    return distinct, squarefree


class DerivedSolver:
    """Counts and optionally solves one derived system instance."""

    def __init__(self, ds, rng, method="auto"):
        self.ds = ds
        self.rng = rng
        self.reduction = _LinearReduction(ds)
        self.bezout = bezout_number(ds)
        red = self.reduction
        if any(d0 != d1 for d0, d1 in
               zip(self.reduction.expected_degrees,
                   [eq.degree() for eq in red.equations])):
            raise DegenerateInstance("degree dropped under linear substitution")
        nfree = len(red.free)
        neq = len(red.equations)
        if neq != nfree - 1:
            raise DegenerateInstance("reduced system is not square")
        if nfree == 1:
            route = "trivial"
        elif nfree == 2:
            route = "binary"
        elif nfree == 3 and neq == 2:
            route = "resultant"
        else:
            route = "groebner"
        if method == "resultant" and route == "groebner":
            raise ValueError("resultant backend needs two equations in P^2")
        if method == "groebner" and route in ("binary", "resultant"):
            route = "groebner"
        self.route = route
        self._counted = None
        self._groebner_state = None

    # -- counting ---------------------------------------------------------

    def count_and_certify(self):
        """(count, certificates) with certificates =
        {quotient_dim_equals_bezout, eliminant_squarefree}."""
        if self._counted is not None:
            return self._counted
        handler = getattr(self, f"_count_{self.route}")
        self._counted = handler()
        return self._counted

    def _count_trivial(self):
        ok = all(not eq for eq in self.reduction.equations)
        count = 1 if ok else 0
        return count, {"quotient_dim_equals_bezout": ok,
                       "eliminant_squarefree": ok}

    def _count_binary(self):
        (f,) = self.reduction.equations
        distinct, squarefree = _binary_distinct_roots(f)
        return distinct, {
            "quotient_dim_equals_bezout": f.degree() == self.bezout,
            "eliminant_squarefree": squarefree,
        }

    def _resultant_eliminant(self):
        f, g = self.reduction.equations
        ring = self.reduction.ring
        F = ring.field
        # eliminate a variable in which both leading coefficients are
        # constants, so no solutions can hide over the eliminated direction
        for var in (1, 0, 2):
            top_f = tuple(f.degree() if i == var else 0 for i in range(3))
            top_g = tuple(g.degree() if i == var else 0 for i in range(3))
            if f.coefficient(top_f) != F.zero and g.coefficient(top_g) != F.zero:
                res = sylvester_resultant(f, g, var)
                if res:
                    return res, var
        raise DegenerateInstance("no variable is proper for elimination")

    def _count_resultant(self):
        res, _ = self._resultant_eliminant()
        distinct, squarefree = _binary_distinct_roots(res)
        return distinct, {
            "quotient_dim_equals_bezout": res.degree() == self.bezout,
            "eliminant_squarefree": squarefree,
        }

    def _affine_chart(self):
        red = self.reduction
        F = red.field
        m = len(red.free)
        while True:
            mat = [[F.random_element(self.rng) for _ in range(m)] for _ in range(m)]
            if linalg.rank(F, mat) == m:
                break
        chart_ring = PolyRing(F, m - 1, tuple(f"w{i}" for i in range(m - 1)))
        images = []
        for i in range(m):
            combo = chart_ring.constant(mat[i][m - 1])
            for j in range(m - 1):
                if mat[i][j] != F.zero:
                    combo = combo + chart_ring.gen(j).scale(mat[i][j])
            images.append(combo)
        affine = [eq.substitute(chart_ring, images) for eq in red.equations]
        return affine, mat, chart_ring

    def _count_groebner(self):
        affine, mat, chart_ring = self._affine_chart()
        basis = groebner_basis(affine)
        qc = quotient_count(basis)
        if qc == INFINITE:
            raise PositiveDimensional("derived system is not zero dimensional")
        F = chart_ring.field
        lam = [F.random_element(self.rng) for _ in range(chart_ring.nvars)]
        elim = eliminant_of_linear_form(basis, lam)
        squarefree = is_squarefree(elim)
        count = squarefree_root_count(elim)
        self._groebner_state = (basis, mat, chart_ring)
        return count, {
            "quotient_dim_equals_bezout": qc == self.bezout,
            "eliminant_squarefree": squarefree,
        }

    # -- point extraction --------------------------------------------------

    def points(self, max_ext_degree=6):
        """Solutions as full projective a-points.

        Yields (point, field, orbit_degree): extension-field solutions are
        reported once per Galois orbit, with the orbit size as degree."""
        handler = getattr(self, f"_points_{self.route}")
        red = self.reduction
        out = []
        for free_pt, L, k in handler(max_ext_degree):
            embed = _embed_into(red.field, L)
            out.append((red.lift(free_pt, L, embed), L, k))
        return out

    def _points_trivial(self, max_ext_degree):
        F = self.reduction.field
        if any(self.reduction.equations):
            return []
        return [((F.one,), F, 1)]

    def _binary_points(self, form, max_ext_degree):
        poly, deg = _binary_form_data(form)
        F = form.ring.field
        pts = []
        if poly.degree < deg:
            pts.append(((F.one, F.zero), F, 1))
        for factor in factor_squarefree(poly, self.rng):
            k = factor.degree
            if k > max_ext_degree:
                continue
            if k == 1:
                L = F
                root = F.neg(factor.coeffs[0])
            else:
                from .fields import ExtensionField
                L = ExtensionField(F.p, list(factor.coeffs))
                root = L.generator()
            pts.append(((root, L.one), L, k))
        return pts

    def _points_binary(self, max_ext_degree):
        (f,) = self.reduction.equations
        return self._binary_points(f, max_ext_degree)

    def _points_resultant(self, max_ext_degree):
        res, var = self._resultant_eliminant()
        f, g = self.reduction.equations
        keep = [i for i in range(3) if i != var]
        pts = []
        for (u, v), L, k in self._binary_points(res, max_ext_degree):
            embed = _embed_into(self.reduction.field, L)
            fL = f.map_coefficients(embed, L)
            gL = g.map_coefficients(embed, L)
            vals = [None, None, None]
            vals[keep[0]], vals[keep[1]] = u, v
            fu = _restrict_to_line(fL, var, vals)
            gu = _restrict_to_line(gL, var, vals)
            h = fu.gcd(gu)
            if h.degree < 1:
                raise DegenerateInstance("eliminant root without a fiber point")
            if h.degree == 1:
                middles = [L.neg(L.div(h.coeffs[0], h.coeffs[1]))]
            else:
                middles = roots_in_field(h, self.rng)
            for w in middles:
                vals2 = list(vals)
                vals2[var] = w
                pts.append((tuple(vals2), L, k))
        return pts

    def _points_groebner(self, max_ext_degree):
        if self._groebner_state is None:
            self.count_and_certify()
        basis, mat, chart_ring = self._groebner_state
        F = chart_ring.field
        raw, _ = solve_zero_dimensional(basis, self.rng, max_ext_degree=max_ext_degree)
        pts = []
        m = len(self.reduction.free)
        for coords, L, k in raw:
            embed = _embed_into(F, L)
            w = list(coords) + [L.one]
            free_pt = []
            for i in range(m):
                acc = L.zero
                for j in range(m):
                    c = mat[i][j]
                    if c != F.zero:
                        acc = L.add(acc, L.mul(embed(c), w[j]))
                free_pt.append(acc)
            pts.append((tuple(free_pt), L, k))
        return pts


def _restrict_to_line(poly, var, vals):
    """Plug fixed values into all variables except ``var``; returns a
    UniPoly in that variable."""
    ring = poly.ring
    L = ring.field
    deg = max((m[var] for m in poly.terms), default=0)
    coeffs = [L.zero] * (deg + 1)
    for mon, c in poly.terms.items():
        v = c
        for i, e in enumerate(mon):
            if i == var or not e:
                continue
            base = vals[i]
            for _ in range(e):
                v = L.mul(v, base)
        coeffs[mon[var]] = L.add(coeffs[mon[var]], v)
    return UniPoly(L, coeffs)


# ---------------------------------------------------------------------------
# the end-to-end counting pipeline


@dataclass
class TrialRecord:
    prime: int
    seed: int
    attempts: int
    method: str
    count: int
    bezout: int
    degree_profile: list
    certificates: dict

    def to_json(self):
        return {
            "prime": self.prime,
            "seed": self.seed,
            "attempts": self.attempts,
            "method": self.method,
            "count": self.count,
            "bezout": self.bezout,
            "degree_profile": list(self.degree_profile),
            "certificates": dict(self.certificates),
        }


@dataclass
class CountReport:
    degrees: tuple
    variant: str
    expected: int
    bezout: int
    count: int
    method: str
    certificates: dict
    degree_profile: list
    primes: tuple
    seeds: tuple
    trials: list = dc_field(default_factory=list)
    consistent: bool = True
    field_note: str = FIELD_NOTE

    @property
    def matches_expected(self):
        return (self.consistent and self.count == self.expected
                and all(self.certificates.values()))

    def to_json(self):
        return {
            "degrees": list(self.degrees),
            "variant": self.variant,
            "expected": self.expected,
            "bezout": self.bezout,
            "count": self.count,
            "method": self.method,
            "certificates": dict(self.certificates),
            "degree_profile": list(self.degree_profile),
            "primes": list(self.primes),
            "seeds": list(self.seeds),
            "trials": [t.to_json() for t in self.trials],
            "consistent": self.consistent,
            "matches_expected": self.matches_expected,
            "field_note": self.field_note,
        }


def prepare_instance(md, field, seed, variant, retry_limit=8):
    """Sample instances until the cascade goes through; returns
    (ci, ansatz list, residual list, derived system, attempts)."""
    last = None
    for attempt in range(retry_limit):
        ci = random_ci(md, field, f"{seed}.{attempt}" if attempt else seed, variant)
        pr = restrict_to_plane_family(ci)
        try:
            ansatze, residuals, ds = cascade_solve(pr, variant)
            return ci, ansatze, residuals, ds, attempt + 1
        except DegenerateInstance as exc:
            last = exc
    raise DegenerateInstance(
        f"retry limit {retry_limit} exhausted for {md} over {field!r}: {last}")


def run_trial(md, variant, prime, seed, method="auto", retry_limit=8):
    """One (prime, seed) counting trial; resamples on degeneracy."""
    if prime < MIN_PRIME:
        raise ValueError(f"prime {prime} below the configured minimum {MIN_PRIME}")
    field = PrimeField(prime)
    last = None
    for attempt in range(retry_limit):
        try:
            ci, ansatze, residuals, ds, used = prepare_instance(
                md, field, seed if attempt == 0 else f"{seed}r{attempt}",
                variant, retry_limit)
            rng = random.Random(f"trial:{prime}:{seed}:{attempt}:{variant}")
            solver = DerivedSolver(ds, rng, method)
            count, certs = solver.count_and_certify()
            record = TrialRecord(prime, seed, attempt + used, solver.route,
                                 count, solver.bezout, ds.degrees, certs)
            return ci, ansatze, ds, solver, record
        except DegenerateInstance as exc:
            last = exc
    raise DegenerateInstance(
        f"retry limit {retry_limit} exhausted for {md} over GF({prime}): {last}")


def count_conics(degrees, variant="secant", primes=DEFAULT_PRIMES,
                 seeds=DEFAULT_SEEDS, method="auto", retry_limit=8):
    """Full pipeline over every (prime, seed) pair; unanimity required.

    Returns a CountReport; raises InconsistentCounts (with the report
    attached) when trials disagree on the count or the certificates.
    """
    md = dimension_from_degrees(degrees)
    expected = expected_count(degrees)
    trials = []
    for prime in primes:
        for seed in seeds:
            _, _, _, _, record = run_trial(md, variant, prime, seed,
                                           method, retry_limit)
            trials.append(record)
    counts = {t.count for t in trials}
    certsets = {tuple(sorted(t.certificates.items())) for t in trials}
    consistent = len(counts) == 1 and len(certsets) == 1
    first = trials[0]
    report = CountReport(
        degrees=md.degrees, variant=variant, expected=expected,
        bezout=first.bezout,
        count=first.count if consistent else min(counts),
        method=first.method,
        certificates=dict(first.certificates),
        degree_profile=first.degree_profile,
        primes=tuple(primes), seeds=tuple(seeds),
        trials=trials, consistent=consistent)
    if not consistent:
        raise InconsistentCounts(report)
    return report


# ---------------------------------------------------------------------------
# explicit conics and certification


def verify_conic(ci, conic):
    """Exact divisibility check: the restriction of every section to the
    conic's plane must factor through the conic equation."""
    form = conic.form()
    if not form:
        return False
    for section in ci.sections:
        restricted = restrict_section_to_plane(section, ci.md, conic)
        if not form.divides(restricted):
            return False
    return True


def solve_and_verify(degrees, variant="secant", prime=DEFAULT_PRIMES[0],
                     seed=0, method="auto", retry_limit=8, max_ext_degree=6):
    """Reconstruct the conics of one instance and run verify_conic on each.

    Returns (ci, results, trial_record) where results holds one
    (conic, verified, orbit_degree) triple per Galois orbit of solutions;
    the orbit degrees sum to the count."""
    md = dimension_from_degrees(degrees)
    ci, ansatze, ds, solver, record = run_trial(md, variant, prime, seed,
                                                method, retry_limit)
    results = []
    for point, L, k in solver.points(max_ext_degree):
        conic = reconstruct_conic(ansatze[0], point, L)
        results.append((conic, verify_conic(ci, conic), k))
    return ci, results, record
