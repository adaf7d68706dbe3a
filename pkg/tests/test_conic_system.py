import json

import pytest

from coniccount.fields import PrimeField
from coniccount.conic_system import (dimension_from_degrees,
                                     random_ci, random_ci_through_pq,
                                     restrict_to_plane_family, cascade_solve,
                                     predicted_profile, universal_block_degrees,
                                     reconstruct_conic, ambient_ring,
                                     CISections)

F = PrimeField(10007)


def test_dimension_from_degrees():
    md = dimension_from_degrees((3,))
    assert md.n == 3 and md.ambient == 4
    md = dimension_from_degrees((2, 2))
    assert md.n == 3 and md.ambient == 5
    md = dimension_from_degrees((2,))
    assert md.n == 1 and md.ambient == 2
    with pytest.raises(ValueError):
        dimension_from_degrees((1, 3))
    with pytest.raises(ValueError):
        dimension_from_degrees(())


def test_forced_zeros_and_point_conditions():
    md = dimension_from_degrees((3,))
    ci = random_ci_through_pq(md, F, 7)
    s = ci.sections[0]
    nv = md.ambient + 1
    p = [F.one] + [F.zero] * (nv - 1)
    q = [F.zero] * (nv - 1) + [F.one]
    assert s.evaluate(p) == F.zero and s.evaluate(q) == F.zero
    assert s.coefficient(tuple([3] + [0] * (nv - 1))) == F.zero
    assert s.coefficient(tuple([0] * (nv - 1) + [3])) == F.zero


def test_tangent_instance_conditions():
    md = dimension_from_degrees((3,))
    ci = random_ci(md, F, 7, "tangent")
    s = ci.sections[0]
    nv = md.ambient + 1
    assert s.coefficient(tuple([3] + [0] * (nv - 1))) == F.zero
    mixed = [2] + [0] * (nv - 2) + [1]
    assert s.coefficient(tuple(mixed)) == F.zero


def test_distinct_seeds_differ():
    md = dimension_from_degrees((3,))
    a = random_ci_through_pq(md, F, 0).sections[0]
    b = random_ci_through_pq(md, F, 1).sections[0]
    assert a != b


def test_restriction_single_monomial():
    # s = x0*x2 on the plane conic case: only s_{1,2} survives, equal to 1
    md = dimension_from_degrees((2,))
    ring = ambient_ring(md, F)
    s = ring.from_dict({(1, 0, 1): F.one})
    ci = CISections(md, F, 0, "secant", ring, [s])
    pr = restrict_to_plane_family(ci)
    assert pr.coeff(0, 1, 2) == pr.ring.one()
    assert all(ak == (1, 2) for ak in pr.coeffs[0])


def test_restriction_degree_rule():
    # for a cubic, the z^2-level coefficient s_{0,1} is a quadric in the a's
    md = dimension_from_degrees((3,))
    ci = random_ci_through_pq(md, F, 3)
    pr = restrict_to_plane_family(ci)
    c = pr.coeff(0, 0, 1)
    assert c.is_homogeneous() and c.degree() == 2
    assert pr.ring.nvars == 3
    # the marked-point conditions again, on the restriction side
    assert pr.coeff(0, 0, 3).is_zero() and pr.coeff(0, 3, 3).is_zero()


def test_predicted_profiles():
    assert predicted_profile(dimension_from_degrees((3,))) == [3, 2]
    assert predicted_profile(dimension_from_degrees((2, 2))) == [1, 1, 2]
    assert predicted_profile(dimension_from_degrees((4,))) == [3, 4, 2, 3]
    assert predicted_profile(dimension_from_degrees((2, 3))) == [3, 2, 1, 1, 2]
    assert universal_block_degrees(2) == []


def _multidegrees(total_cap, min_sum=2):
    """All ordered degree tuples with entries >= 2 and sum <= total_cap."""
    out = []

    def rec(prefix, remaining):
        if prefix:
            out.append(tuple(prefix))
        for d in range(2, remaining + 1):
            rec(prefix + [d], remaining - d)

    rec([], total_cap)
    return [md for md in out if sum(md) >= min_sum]


@pytest.mark.parametrize("variant", ["secant", "tangent"])
def test_cascade_bookkeeping(variant):
    # equation count, variable count and degree profile across the small
    # multidegrees where dense instances are desk sized
    seeds = {True: range(5), False: range(2)}
    for degrees in _multidegrees(7) + [(2, 2, 2, 2)]:
        md = dimension_from_degrees(degrees)
        small = sum(degrees) <= 6
        for seed in seeds[small]:
            ci = random_ci(md, F, seed, variant)
            pr = restrict_to_plane_family(ci)
            ansatze, residuals, ds = cascade_solve(pr, variant)
            assert len(ds.equations) == md.n + md.r - 2
            assert ds.ring.nvars == md.n + md.r - 1
            assert sorted(ds.degrees) == sorted(predicted_profile(md))
            assert all(eq.is_homogeneous() for eq in ds.equations)
            for i, res in enumerate(residuals):
                d = degrees[i]
                assert res.coefficient_count() == d * (d - 1) // 2


def test_residual_coefficient_degrees():
    md = dimension_from_degrees((4,))
    ci = random_ci_through_pq(md, F, 1)
    pr = restrict_to_plane_family(ci)
    ansatze, residuals, ds = cascade_solve(pr)
    for (a, k), poly in residuals[0].coeffs.items():
        assert 0 <= a <= k <= 2
        if poly:
            assert poly.is_homogeneous() and poly.degree() == 4 - 2 - k
    a0 = ansatze[0]
    assert a0.s2.degree() == 2 and a0.s1.degree() == 1 and a0.s1p.degree() == 1


def _expand_product(md, variant, ansatz, residual, ring):
    """Oracle: multiply the conic ansatz with the residual curve in plane
    monomial indexing (a, k) and return the coefficient table."""
    d = residual.degree
    conic_terms = {(0, 0): ansatz.s2, (1, 1): ansatz.s1, (0, 1): ansatz.s1p}
    xy_term = (1, 2) if variant == "secant" else (0, 2)
    conic_terms[xy_term] = ring.one()
    table = {}
    for (ca, ck), cpoly in conic_terms.items():
        for (ra, rk), rpoly in residual.coeffs.items():
            key = (ca + ra, ck + rk)
            prod = cpoly * rpoly
            table[key] = table.get(key, ring.zero()) + prod
    return table


@pytest.mark.parametrize("variant", ["secant", "tangent"])
@pytest.mark.parametrize("degrees", [(3,), (4,), (2, 2), (2, 3), (5,), (2, 2, 2)])
def test_cascade_consistency_identity(variant, degrees):
    # expanding conic * residual and subtracting the restriction leaves a
    # table supported exactly on the leftover equation slots
    md = dimension_from_degrees(degrees)
    ci = random_ci(md, F, 0, variant)
    pr = restrict_to_plane_family(ci)
    ansatze, residuals, ds = cascade_solve(pr, variant)
    leftover_slots = {(i, ak) for kind, i, ak in ds.tags if kind == "universal"}
    for i, d in enumerate(md.degrees):
        product = _expand_product(md, variant, ansatze[i], residuals[i], pr.ring)
        for k in range(d + 1):
            for a in range(k + 1):
                diff = product.get((a, k), pr.ring.zero()) - pr.coeff(i, a, k)
                if (i, (a, k)) in leftover_slots:
                    assert not diff.is_zero()
                else:
                    assert diff.is_zero(), (i, a, k)


def test_vanishing_divisor_raises_degenerate():
    # kill the top residual constant s_{1,3} (coefficient of x0 * x4^2):
    # the cascade then has nothing to divide by
    from coniccount.conic_system import DegenerateInstance
    md = dimension_from_degrees((3,))
    ci = random_ci_through_pq(md, F, 0)
    s = ci.sections[0]
    bad = s - s.ring.from_dict({(1, 0, 0, 0, 2): s.coefficient((1, 0, 0, 0, 2))})
    ci.sections[0] = bad
    pr = restrict_to_plane_family(ci)
    with pytest.raises(DegenerateInstance):
        cascade_solve(pr)


def test_compatibility_tags():
    md = dimension_from_degrees((2, 2))
    ci = random_ci_through_pq(md, F, 0)
    pr = restrict_to_plane_family(ci)
    _, _, ds = cascade_solve(pr)
    kinds = [(kind, name) for kind, i, name in ds.tags]
    assert kinds == [("compat", "s1"), ("compat", "s1p"), ("compat", "s2")]
    assert [eq.degree() for eq in ds.equations] == [1, 1, 2]


def test_plane_conic_residual_is_constant():
    # the (2) case: the instance is its own conic; the residual quotient
    # of the restriction by the conic form has degree zero
    from coniccount.counting import solve_and_verify
    from coniccount.conic_system import restrict_section_to_plane
    ci, results, _ = solve_and_verify((2,), prime=10007, seed=0)
    conic, verified, _ = results[0]
    assert verified
    restricted = restrict_section_to_plane(ci.sections[0], ci.md, conic)
    quotient = restricted.exact_div(conic.form())
    assert quotient.degree() == 0


def test_cascade_deterministic():
    md = dimension_from_degrees((2, 3))
    runs = []
    for _ in range(2):
        ci = random_ci_through_pq(md, F, 5)
        pr = restrict_to_plane_family(ci)
        _, _, ds = cascade_solve(pr)
        runs.append(json.dumps(ds.to_json(), sort_keys=True))
    assert runs[0] == runs[1]


def test_tangent_precondition_enforced():
    md = dimension_from_degrees((3,))
    ci = random_ci_through_pq(md, F, 0)   # secant-style zeros only
    pr = restrict_to_plane_family(ci)
    with pytest.raises(ValueError):
        cascade_solve(pr, "tangent")


def test_reconstructed_conic_through_marked_points():
    md = dimension_from_degrees((3,))
    ci = random_ci_through_pq(md, F, 0)
    pr = restrict_to_plane_family(ci)
    ansatze, _, _ = cascade_solve(pr)
    conic = reconstruct_conic(ansatze[0], (1, 2, 3), F)
    form = conic.form()
    # plane coordinates [x:z:y]: both marked points lie on every such conic
    assert form.evaluate([F.one, F.zero, F.zero]) == F.zero
    assert form.evaluate([F.zero, F.zero, F.one]) == F.zero


def test_serialization_round_trip():
    md = dimension_from_degrees((2, 2))
    ci = random_ci_through_pq(md, F, 9)
    data = ci.to_json()
    assert data["degrees"] == [2, 2]
    assert data["field"] == {"type": "prime", "p": 10007}
    text = json.dumps(data, sort_keys=True)
    assert json.loads(text) == data
