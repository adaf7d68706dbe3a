"""Splitting types of restricted tangent bundles on the projective line,
and the quasi-line test.

A rational curve of degree e inside the complete intersection is given by
homogeneous coordinate forms with no common root.  The restricted tangent
bundle sits as the middle cohomology of a three-term complex of split
bundles

    O  --(coordinate forms)-->  O(e)^(N+1)  --(Jacobian along f)-->  (+) O(e*d_i)

so its cohomology in any twist is the middle hypercohomology of the
twisted complex.  On P^1 with its two standard charts everything is
monomial: H^0 of O(d) is spanned by u^a v^b with a, b >= 0, H^1 by the
doubly negative monomials, and the maps act by multiplication followed by
projection.  The dimensions fall out of exact linear algebra on these
finite graded pieces plus one explicit zig-zag for the connecting
differential.  The h^0 profile over a window of twists then determines
the splitting multiset uniquely.
"""

import itertools
import random
from dataclasses import dataclass

from . import linalg
from .conic_system import DegenerateInstance
from .counting import DerivedSolver
from .conic_system import DerivedSystem
from .multipoly import PolyRing


class ComplexInvariantError(ValueError):
    """The three-term complex is not of the expected shape."""


class SplittingError(RuntimeError):
    """The h^0 profile matches no splitting; implementation or genericity
    failure."""


class BinaryForm:
    """Homogeneous form in (u, v); coeffs[j] multiplies u^(deg-j) v^j."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs):
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient list does not match the degree")
        self.field = field
        self.degree = degree
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field, degree):
        return cls(field, degree, [field.zero] * (degree + 1))

    @classmethod
    def monomial(cls, field, degree, v_exp, c=None):
        coeffs = [field.zero] * (degree + 1)
        coeffs[v_exp] = c if c is not None else field.one
        return cls(field, degree, coeffs)

    def is_zero(self):
        return all(c == self.field.zero for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and other.field == self.field
                and other.degree == self.degree and other.coeffs == self.coeffs)

    def __add__(self, other):
        F = self.field
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return BinaryForm(F, self.degree,
                          [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        F = self.field
        return BinaryForm(F, self.degree, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        out = [F.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a != F.zero:
                for j, b in enumerate(other.coeffs):
                    if b != F.zero:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return BinaryForm(F, self.degree + other.degree, out)

    def scale(self, c):
        F = self.field
        return BinaryForm(F, self.degree, [F.mul(a, c) for a in self.coeffs])

    def evaluate(self, u, v):
        from .fields import field_pow
        F = self.field
        acc = F.zero
        for j, c in enumerate(self.coeffs):
            if c != F.zero:
                term = F.mul(c, field_pow(F, u, self.degree - j))
                term = F.mul(term, field_pow(F, v, j))
                acc = F.add(acc, term)
        return acc

    def __repr__(self):
        F = self.field
        parts = [f"({c})*u^{self.degree - j}v^{j}"
                 for j, c in enumerate(self.coeffs) if c != F.zero]
        return " + ".join(parts) if parts else "0"


def _binary_gcd(f, g):
    """Gcd of two nonzero binary forms, returned as a binary form."""
    F = f.field

    def split(form):
        lo = next(j for j, c in enumerate(form.coeffs) if c != F.zero)
        hi = max(j for j, c in enumerate(form.coeffs) if c != F.zero)
        return lo, form.degree - hi, list(form.coeffs[lo:hi + 1])

    vlo_f, ulo_f, core_f = split(f)
    vlo_g, ulo_g, core_g = split(g)
    from .unipoly import UniPoly
    h = UniPoly(F, core_f).gcd(UniPoly(F, core_g))
    v_exp = min(vlo_f, vlo_g)
    u_exp = min(ulo_f, ulo_g)
    deg = h.degree + v_exp + u_exp
    coeffs = [F.zero] * (deg + 1)
    for j, c in enumerate(h.coeffs):
        coeffs[v_exp + j] = c
    return BinaryForm(F, deg, coeffs)


def binary_forms_common_root(forms):
    """Whether a list of binary forms has a common projective root (in the
    algebraic closure).  Zero forms are ignored; an all-zero list does."""
    nonzero = [f for f in forms if f]
    if not nonzero:
        return True
    g = nonzero[0]
    for f in nonzero[1:]:
        g = _binary_gcd(g, f)
        if g.degree == 0:
            return False
    return g.degree > 0


def compose_in_forms(poly, forms):
    """Substitute binary forms for the variables of a homogeneous
    polynomial; coefficients must already live in the forms' field."""
    F = forms[0].field
    deg = poly.degree()
    if deg < 0:
        raise ValueError("zero polynomial has no well-defined output degree")
    e = forms[0].degree
    out = BinaryForm.zero(F, deg * e)
    power_cache = [dict() for _ in forms]

    def powf(i, n):
        if n == 0:
            return BinaryForm(F, 0, [F.one])
        d = power_cache[i]
        if n not in d:
            d[n] = powf(i, n - 1) * forms[i]
        return d[n]

    for mon, c in poly.terms.items():
        term = BinaryForm(F, 0, [c])
        for i, expo in enumerate(mon):
            if expo:
                term = term * powf(i, expo)
        if term.degree != out.degree:
            raise ValueError("forms must share one degree")
        out = out + term
    return out


@dataclass
class RationalCurveMap:
    """A degree-e map P^1 -> P^N landing in the instance."""

    field: object
    degree: int
    coords: list

    def validate(self, ci=None):
        if binary_forms_common_root(self.coords):
            raise ValueError("coordinate forms share a projective root")
        if ci is not None:
            from .conic_system import _embedder
            embed = _embedder(ci.ring.field, self.field)
            for s in ci.sections:
                sL = s.map_coefficients(embed, self.field)
                if compose_in_forms(sL, self.coords):
                    raise ValueError("curve does not lie on the instance")
        return self


@dataclass
class ThreeTermComplex:
    """A complex of split bundles A -> B -> C on P^1, with A of rank at
    most one (the Euler section slot); either end may be absent."""

    field: object
    prev_degrees: list      # [] or [d]
    mid_degrees: list
    next_degrees: list
    alpha: list             # column of BinaryForm, one per mid component
    beta: list              # rows over next, columns over mid

    @property
    def rank(self):
        return len(self.mid_degrees) - len(self.prev_degrees) - len(self.next_degrees)

    @property
    def euler_characteristic_degree(self):
        return (sum(self.mid_degrees) - sum(self.prev_degrees)
                - sum(self.next_degrees))

    def validate(self):
        F = self.field
        if self.prev_degrees and self.alpha:
            if binary_forms_common_root(self.alpha):
                raise ComplexInvariantError("first map vanishes at a point")
        if self.beta and self.alpha:
            for row in self.beta:
                acc = None
                for b, a in zip(row, self.alpha):
                    term = b * a
                    acc = term if acc is None else acc + term
                if acc:
                    raise ComplexInvariantError("composition of the maps is nonzero")
        if self.beta:
            r = len(self.beta)
            minors = []
            for cols in itertools.combinations(range(len(self.mid_degrees)), r):
                minors.append(_form_det(F, [[self.beta[i][j] for j in cols]
                                            for i in range(r)]))
            if binary_forms_common_root(minors):
                raise ComplexInvariantError("second map drops rank at a point")
        return self


def _form_det(field, mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc = None
    sign = 1
    for j in range(n):
        minor = [[mat[i][jj] for jj in range(n) if jj != j] for i in range(1, n)]
        term = mat[0][j] * _form_det(field, minor)
        if sign < 0:
            term = -term
        acc = term if acc is None else acc + term
        sign = -sign
    return acc


def euler_jacobian_complex(ci, curve):
    """The tangent-bundle presentation along the curve: coordinate forms
    into the Jacobian of the defining sections."""
    from .conic_system import _embedder
    md = ci.md
    L = curve.field
    e = curve.degree
    embed = _embedder(ci.ring.field, L)
    alpha = list(curve.coords)
    beta = []
    next_degrees = []
    for s, d in zip(ci.sections, md.degrees):
        sL = s.map_coefficients(embed, L)
        row = []
        for j in range(md.ambient + 1):
            partial = sL.derivative(j)
            if partial:
                row.append(compose_in_forms(partial, curve.coords))
            else:
                row.append(BinaryForm.zero(L, e * (d - 1)))
        beta.append(row)
        next_degrees.append(e * d)
    return ThreeTermComplex(L, [0], [e] * (md.ambient + 1), next_degrees,
                            alpha, beta)


# ---------------------------------------------------------------------------
# hypercohomology of the twisted complex


def _h0_basis(degrees):
    out = []
    for c, d in enumerate(degrees):
        for b in range(d + 1):
            out.append((c, b))
    return out


def _h1_basis(degrees):
    out = []
    for c, d in enumerate(degrees):
        for b in range(d + 1, 0):
            out.append((c, b))
    return out


def _map_matrix(field, basis_src, basis_dst, deg_src, deg_dst, entries, h1):
    """Matrix of a block multiplication map on H^0 (h1=False) or H^1."""
    index = {key: i for i, key in enumerate(basis_dst)}
    mat = [[field.zero] * len(basis_src) for _ in basis_dst]
    for col, (c, b) in enumerate(basis_src):
        for cdst in range(len(deg_dst)):
            form = entries(cdst, c)
            if form is None or not form:
                continue
            for j, coeff in enumerate(form.coeffs):
                if coeff == field.zero:
                    continue
                b2 = b + j
                if h1:
                    if not (deg_dst[cdst] + 1 <= b2 <= -1):
                        continue
                else:
                    if not (0 <= b2 <= deg_dst[cdst]):
                        continue
                row = index[(cdst, b2)]
                mat[row][col] = field.add(mat[row][col], coeff)
    return mat


def hypercohomology_dims(cx, twist=0):
    """(h0, h1) of the middle cohomology sheaf of the twisted complex.

    Works on the Cech model of the two standard charts: the E_1 page
    carries H^0 and H^1 of every split term in monomial bases, and the
    only connecting differential is evaluated by an explicit zig-zag
    through the Laurent cochains.
    """
    F = cx.field
    prev = [d + twist for d in cx.prev_degrees]
    mid = [d + twist for d in cx.mid_degrees]
    nxt = [d + twist for d in cx.next_degrees]

    h0_prev, h0_mid, h0_next = _h0_basis(prev), _h0_basis(mid), _h0_basis(nxt)
    h1_prev, h1_mid, h1_next = _h1_basis(prev), _h1_basis(mid), _h1_basis(nxt)

    alpha_entry = lambda cdst, csrc: cx.alpha[cdst] if cx.alpha else None
    beta_entry = lambda cdst, csrc: cx.beta[cdst][csrc] if cx.beta else None

    A0 = _map_matrix(F, h0_prev, h0_mid, prev, mid, alpha_entry, False)
    A1 = _map_matrix(F, h1_prev, h1_mid, prev, mid, alpha_entry, True)
    B0 = _map_matrix(F, h0_mid, h0_next, mid, nxt, beta_entry, False)
    B1 = _map_matrix(F, h1_mid, h1_next, mid, nxt, beta_entry, True)

    rank_A0 = linalg.rank(F, A0) if h0_prev and h0_mid else 0
    rank_B0 = linalg.rank(F, B0) if h0_mid and h0_next else 0
    rank_A1 = linalg.rank(F, A1) if h1_prev and h1_mid else 0
    rank_B1 = linalg.rank(F, B1) if h1_mid and h1_next else 0

    e2_00 = len(h0_mid) - rank_B0 - rank_A0
    e2_01 = len(h1_mid) - rank_B1 - rank_A1
    e2_10 = len(h0_next) - rank_B0

    # E_2^(-1,1) = ker(H^1 prev -> H^1 mid), then the d_2 zig-zag into
    # E_2^(1,0) = coker(H^0 mid -> H^0 next)
    d2_rank_in_coker = 0
    dim_ker_a1 = 0
    if h1_prev:
        if h1_mid and A1:
            kernel = linalg.nullspace(F, A1)
        else:
            kernel = linalg.identity(F, len(h1_prev))
        dim_ker_a1 = len(kernel)
        if kernel and h0_next:
            cols = [_d2_image(cx, F, prev, mid, nxt, h1_prev, h0_next, vec)
                    for vec in kernel]
            if any(any(c != F.zero for c in col) for col in cols):
                combined = [row[:] for row in B0] if B0 else \
                    [[] for _ in h0_next]
                for col in cols:
                    for i, c in enumerate(col):
                        combined[i] = combined[i] + [c]
                d2_rank_in_coker = linalg.rank(F, combined) - rank_B0
    h0 = e2_00 + (dim_ker_a1 - d2_rank_in_coker)
    h1 = e2_01 + (e2_10 - d2_rank_in_coker)
    return h0, h1


def _d2_image(cx, F, prev, mid, nxt, h1_prev, h0_next, vec):
    """Zig-zag: lift a kernel class through the Cech bicomplex and push it
    into H^0 of the last term."""
    # the H^1(prev) element as a Laurent cochain, indexed by v-exponent
    x = {}
    for coeff, (c, b) in zip(vec, h1_prev):
        if coeff != F.zero:
            x[b] = coeff
    # alpha * x per mid component, split into chart-regular halves
    s0 = []
    for c in range(len(mid)):
        form = cx.alpha[c]
        acc = {}
        for b, xv in x.items():
            for j, fc in enumerate(form.coeffs):
                if fc != F.zero:
                    b2 = b + j
                    acc[b2] = F.add(acc.get(b2, F.zero), F.mul(xv, fc))
        part0 = {}
        for b2, cval in acc.items():
            if cval == F.zero:
                continue
            a2 = mid[c] - b2
            if b2 <= -1 and a2 <= -1:
                raise ComplexInvariantError("kernel class fails to lift")
            if b2 >= 0:
                part0[b2] = F.neg(cval)
        s0.append(part0)
    # beta * s0 is a global section of the next term
    out = [F.zero] * len(h0_next)
    index = {key: i for i, key in enumerate(h0_next)}
    for i in range(len(nxt)):
        acc = {}
        for c in range(len(mid)):
            form = cx.beta[i][c]
            for b, sv in s0[c].items():
                for j, fc in enumerate(form.coeffs):
                    if fc != F.zero:
                        b2 = b + j
                        acc[b2] = F.add(acc.get(b2, F.zero), F.mul(sv, fc))
        for b2, cval in acc.items():
            if cval == F.zero:
                continue
            if not (0 <= b2 <= nxt[i]):
                raise ComplexInvariantError("zig-zag left the polynomial range")
            out[index[(i, b2)]] = F.neg(cval)
    return out


# ---------------------------------------------------------------------------
# splitting types


def splitting_type_of_complex(cx, max_window=80):
    """Splitting multiset of the middle cohomology bundle, from the h^0
    profile over a twist window that extends itself until the profile is
    pinned on both sides."""
    cx.validate()
    rank = cx.rank
    deg = cx.euler_characteristic_degree
    if rank <= 0:
        raise ComplexInvariantError("middle term has nonpositive rank")
    h0 = {}

    def get(m):
        if m not in h0:
            a, b = hypercohomology_dims(cx, m)
            if a - b != deg + rank * (m + 1):
                raise SplittingError("Riemann-Roch failed at twist %d" % m)
            h0[m] = a
        return h0[m]

    lo = 0
    while get(lo) > 0:
        lo -= 1
        if lo < -max_window:
            raise SplittingError("no vanishing twist found")
    hi = 1
    while get(hi) - get(hi - 1) != rank:
        hi += 1
        if hi > max_window:
            raise SplittingError("profile never reaches full rank")
    splitting = []
    for m in range(lo + 1, hi + 1):
        k = (get(m) - get(m - 1)) - (get(m - 1) - get(m - 2) if m - 1 > lo else 0)
        if k < 0:
            raise SplittingError("h^0 increments decreased")
        splitting.extend([-m] * k)
    splitting.sort(reverse=True)
    if len(splitting) != rank or sum(splitting) != deg:
        raise SplittingError("profile matches no splitting")
    # round trip: the multiset must reproduce every computed h^0
    for m, value in h0.items():
        predicted = sum(max(a + m + 1, 0) for a in splitting)
        if predicted != value:
            raise SplittingError("splitting does not reproduce the profile")
    return tuple(splitting)


def splitting_type(ci, curve):
    """Splitting type of the restricted tangent bundle along the curve."""
    curve.validate(ci)
    cx = euler_jacobian_complex(ci, curve)
    return splitting_type_of_complex(cx)


def is_quasi_line(st):
    """True when the splitting is O(2) + O(1)^(n-1)."""
    st = tuple(sorted(st, reverse=True))
    n = len(st)
    return n >= 1 and st == (2,) + (1,) * (n - 1)


# ---------------------------------------------------------------------------
# producing test curves


def conic_to_map(conic, md):
    """Parametrize a smooth conic by projecting from a point on it."""
    L = conic.field
    if not conic.is_smooth():
        raise DegenerateInstance("conic is singular; cannot parametrize")
    s2, s1, s1p = conic.s2, conic.s1, conic.s1p
    one, zero = L.one, L.zero
    if conic.variant == "secant":
        # [u:v] -> (x, z, y) = (-u(s1p v + s2 u), u(v + s1 u), v(v + s1 u))
        x = BinaryForm(L, 2, [L.neg(s2), L.neg(s1p), zero])
        z = BinaryForm(L, 2, [s1, one, zero])
        y = BinaryForm(L, 2, [zero, s1, one])
    else:
        # [u:v] -> (x, z, y) = (-(s2 u^2 + s1p uv + v^2), s1 u^2, s1 uv)
        x = BinaryForm(L, 2, [L.neg(s2), L.neg(s1p), L.neg(one)])
        z = BinaryForm(L, 2, [s1, zero, zero])
        y = BinaryForm(L, 2, [zero, s1, zero])
    coords = [x]
    for aj in conic.a_point:
        coords.append(z.scale(aj))
    coords.append(y)
    return RationalCurveMap(L, 2, coords).validate()


def line_family_system(ci, slice_rng):
    """Conditions on a direction b for the line from the first marked
    point towards b to lie on the instance, cut down to dimension zero by
    random hyperplane slices when the family is positive dimensional."""
    md = ci.md
    F = ci.ring.field
    nb = md.ambient
    ring = PolyRing(F, nb, tuple(f"b{i}" for i in range(1, nb + 1)))
    equations = []
    for s, d in zip(ci.sections, md.degrees):
        buckets = {}
        for mon, c in s.terms.items():
            k = d - mon[0]
            buckets.setdefault(k, {})[mon[1:]] = c
        for k in range(1, d + 1):
            eq = ring.from_dict(buckets.get(k, {}))
            if eq.degree() != k:
                raise DegenerateInstance("degenerate line family equation")
            equations.append(eq)
    slices = (md.n - 3) // 2
    for _ in range(slices):
        eq = ring.from_dict({tuple(1 if j == i else 0 for j in range(nb)):
                             F.random_element(slice_rng) for i in range(nb)})
        if eq.degree() != 1:
            raise DegenerateInstance("degenerate slicing form")
        equations.append(eq)
    return DerivedSystem(md, "lines", ring, equations, [("line", 0, ())] * len(equations))


def find_line_through_point(ci, tries=40, rng_tag="lines"):
    """A line through the first marked point, found by solving the line
    conditions over GF(p) and keeping a rational solution; the slicing
    and the eliminant randomness are reseeded until one shows up."""
    md = ci.md
    last = None
    for attempt in range(tries):
        rng = random.Random(f"{rng_tag}:{ci.seed}:{attempt}")
        try:
            system = line_family_system(ci, rng)
            solver = DerivedSolver(system, rng)
            pts = solver.points(max_ext_degree=1)
        except (DegenerateInstance, ValueError) as exc:
            last = exc
            continue
        for point, L, k in pts:
            if k != 1:
                continue
            coords = [BinaryForm(L, 1, [L.zero, L.one])]
            for bj in point:
                coords.append(BinaryForm(L, 1, [bj, L.zero]))
            try:
                return RationalCurveMap(L, 1, coords).validate(ci)
            except ValueError as exc:
                last = exc
    raise DegenerateInstance(f"no rational line found in {tries} tries: {last}")
