"""Identity catalog, grid verification mechanics, ODE defects."""

import json
import math

import pytest

from legshift.complexfn import cpow, zsq_minus_one_pow
from legshift.errors import DomainError
from legshift.legendre import ferrers_p, legendre_p
from legshift.verify import (
    GridSummary,
    get_identity,
    list_identities,
    ode_residual,
    verify_grid,
    verify_identity,
    weighted_ferrers_upper,
    weighted_p_lower,
    weighted_p_upper,
)


def test_catalog_size_and_unique_ids():
    entries = list_identities()
    assert len(entries) == 24
    ids = [e.id for e in entries]
    assert len(set(ids)) == len(ids)


def test_catalog_entries_serialize():
    for entry in list_identities():
        d = entry.to_dict()
        json.dumps(d)  # must be plain data
        assert d["id"] == entry.id
        assert d["default_grid"], entry.id
        assert d["formula"], entry.id


def test_get_identity_unknown_raises():
    with pytest.raises(DomainError):
        get_identity("NOPE")


def test_verify_identity_passes_at_default_point():
    entry = get_identity("WEYL_MMINUS_Q")
    p = entry.default_grid[0]
    rep = verify_identity("WEYL_MMINUS_Q", **p)
    assert rep.validity and rep.passed
    assert rep.rel_err < 1e-6
    assert rep.lhs is not None and rep.lhs.evaluations > 0


def test_verify_identity_invalid_point_names_predicate():
    # Re(nu-mu+lam+1) < 0 violates the convergence condition; no quadrature runs
    rep = verify_identity("WEYL_MMINUS_Q", 0.6, 0.3, -2.0, 2.0)
    assert not rep.validity and not rep.passed
    assert rep.lhs is None
    assert any("nu-mu+lam" in d or "lam" in d for d in rep.failed_conditions)
    assert math.isinf(rep.rel_err)


def test_verify_identity_canary_flips():
    entry = get_identity("WEYL_MPLUS_Q")
    p = entry.default_grid[0]
    clean = verify_identity("WEYL_MPLUS_Q", **p)
    canary = verify_identity("WEYL_MPLUS_Q", coeff_perturbation=1e-6, **p)
    assert clean.passed and not canary.passed


def test_verify_grid_deterministic_order():
    entry = get_identity("WEYL_MPLUS_P")
    grid = list(entry.default_grid)
    fwd = verify_grid("WEYL_MPLUS_P", grid)
    rev = verify_grid("WEYL_MPLUS_P", list(reversed(grid)))
    assert [r.params for r in fwd.reports] == [r.params for r in rev.reports]
    assert fwd.all_passed and fwd.n_points == len(grid)


def test_verify_grid_empty_raises():
    with pytest.raises(DomainError):
        verify_grid("WEYL_MPLUS_P", [])


def test_verify_grid_collects_invalid_points():
    bad = {"nu": 0.6, "mu": 0.3, "lam": -2.0, "z": 2.0}
    good = dict(get_identity("WEYL_MMINUS_Q").default_grid[0])
    s = verify_grid("WEYL_MMINUS_Q", [bad, good])
    assert s.n_points == 2 and s.n_valid == 1 and s.n_passed == 1
    assert len(s.failures) == 1
    assert s.failures[0][1].startswith("invalid:")


def test_use_far_field_guard_and_agreement():
    with pytest.raises(DomainError):
        verify_identity("WEYL_MPLUS_Q", 0.6, 0.3, 0.7, 2.0, use_far_field=True)
    rep = verify_identity("RIEMANN_MMINUS_P", 0.7, 0.4, 0.6, 6.0, use_far_field=True)
    assert rep.passed, rep.rel_err


def test_grid_summary_all_passed_property():
    s = GridSummary("X", 2, 2, 2, 1e-9)
    assert s.all_passed
    assert not GridSummary("X", 2, 1, 2, 1e-9).all_passed
    assert not GridSummary("X", 0, 0, 0, 0.0).all_passed


def test_weighted_helpers_match_direct_product():
    nu, mu = 0.7, 0.4
    v = 1.5
    ref = zsq_minus_one_pow(v, -mu / 2.0) * legendre_p(nu, mu, v)
    assert abs(weighted_p_upper(nu, mu, v) - ref) <= 1e-12 * abs(ref)
    u = 0.35
    ref = cpow(1.0 - u * u, -mu / 2.0) * ferrers_p(nu, mu, u)
    assert abs(weighted_ferrers_upper(nu, mu, u) - ref) <= 1e-12 * abs(ref)


def test_weighted_helper_smooth_through_branch_point():
    # the weighted form is analytic at v = 1 where the raw product is not
    a = weighted_p_lower(0.7, 0.4, 1.0 + 1e-8)
    b = weighted_p_lower(0.7, 0.4, 1.0 - 1e-8)
    assert abs(a - b) <= 1e-6 * abs(a)


def test_ode_residual_homogeneous():
    for kind in ("p", "q"):
        for nu, mu, z in ((0.7, 0.4, 2.0), (1.3 + 0.2j, -0.6, 3.5)):
            r = ode_residual("homogeneous", nu, mu, z=z, kind=kind)
            scale = abs(legendre_p(nu, mu, z)) + 1.0
            assert abs(r) <= 1e-10 * scale, (kind, nu, mu, z)


def test_ode_residual_inhomogeneous():
    for lam in (0.6, -0.4, 1.0, 2.0):
        r = ode_residual("inhomogeneous_mminus", 0.7, 0.4, lam=lam, z=1.8)
        assert abs(r) <= 1e-10, lam


def test_ode_residual_bad_input():
    with pytest.raises(DomainError):
        ode_residual("inhomogeneous_mminus", 0.7, 0.4)
    with pytest.raises(DomainError):
        ode_residual("nope", 0.7, 0.4)
