from __future__ import annotations

import math

import pytest

from motivic.errors import CertificateError
from motivic.kapranov import SymbolicCurve, sym_class
from motivic.limits import (
    MODEL_LEVEL,
    CompletedElement,
    geometric_series_inverse,
    limit_report,
    limit_via_zeta,
    mod_l_stabilization,
    mssp_probe,
    mssp_probe_curve,
    sym_limit,
)
from motivic.ring import L, ONE, Generator, gen, lefschetz_power, mod_l_power


def test_geometric_series_inverse():
    assert geometric_series_inverse(3).representative == 1 + L + L ** 2
    assert geometric_series_inverse(1).representative == ONE
    assert mod_l_power((1 - L) * geometric_series_inverse(5).representative, 5) == ONE
    with pytest.raises(ValueError):
        geometric_series_inverse(0)


def test_completed_element_is_canonical():
    x = CompletedElement(2, 1 + L + L ** 5)
    assert x.representative == 1 + L
    assert (x * x).representative == 1 + 2 * L
    assert (x + CompletedElement(1, L)).precision == 1
    assert x.to_dict()["precision"] == 2


def test_sym_limit_examples():
    c1 = SymbolicCurve(1)
    r = sym_limit(c1, 2)
    assert r.limit.representative == c1.C * (1 + L) and r.bound_index == 2
    c2 = SymbolicCurve(2)
    r = sym_limit(c2, 1)
    assert r.limit.representative == c2.Jac and r.bound_index == 3
    c3 = SymbolicCurve(3)
    r = sym_limit(c3, 4)
    assert r.limit.representative == c3.Jac * (1 + L + L ** 2 + L ** 3) and r.bound_index == 8


def test_sym_limit_observed_index():
    # the exceptional degree 2g-2 already agrees modulo L, so the observed index can sit below the bound
    assert sym_limit(SymbolicCurve(2), 1).stabilization_index == 2
    assert sym_limit(SymbolicCurve(3), 4).stabilization_index == 6
    assert sym_limit(SymbolicCurve(1), 2).stabilization_index == 2


def test_limit_via_zeta_examples():
    c1 = SymbolicCurve(1)
    assert limit_via_zeta(c1, 3).value.representative == c1.C * (1 + L + L ** 2)
    c2 = SymbolicCurve(2)
    assert limit_via_zeta(c2, 2).value.representative == c2.Jac * (1 + L)
    for g in range(1, 5):
        c = SymbolicCurve(g)
        assert limit_via_zeta(c, 1).value.representative == mod_l_power(c.Jac, 1)


@pytest.mark.parametrize("g", range(1, 5))
def test_limits_agree(g):
    c = SymbolicCurve(g)
    for N in range(1, 11):
        z = limit_via_zeta(c, N)
        assert z.value == sym_limit(c, N).limit
        assert mod_l_power((1 - L) * z.value.representative, N) == mod_l_power(c.Jac, N)
        assert all(z.checks.values())


def test_limit_via_zeta_detects_disagreement(monkeypatch):
    import motivic.limits as lim

    monkeypatch.setattr(lim, "sym_limit", lambda c, N: lim.SymLimit(CompletedElement(N, c.C), 0, 0, 0))
    with pytest.raises(CertificateError):
        lim.limit_via_zeta(SymbolicCurve(2), 2)


def test_mod_l_stabilization_examples():
    assert mod_l_stabilization([ONE, ONE, ONE]) == 0
    syms = [gen(Generator(f"S{k}", k)) for k in (2, 3, 4)]
    assert mod_l_stabilization(syms) is None
    assert mod_l_stabilization([ONE]) is None
    with pytest.raises(ValueError):
        mod_l_stabilization([])


def test_mod_l_stabilization_of_curves():
    # entries mod L are 1, [C], [Jac], [Jac], ... : s_2 = [Jac] + L already agrees
    c2 = SymbolicCurve(2)
    assert mod_l_stabilization([sym_class(c2, n) for n in range(9)]) == 2
    assert mod_l_stabilization([sym_class(SymbolicCurve(1), n) for n in range(9)]) == 1
    for g in range(2, 5):
        c = SymbolicCurve(g)
        assert mod_l_stabilization([sym_class(c, n) for n in range(2 * g + 6)]) == 2 * g - 2


def test_mssp_probe_curve_genus_one():
    c1 = SymbolicCurve(1)
    r = mssp_probe_curve(c1, 2)
    assert r.convergence_index is not None
    assert r.truncation == c1.C * (lefschetz_power(-1) + lefschetz_power(-2))
    dims = r.difference_dims
    assert all(b < a for a, b in zip(dims[1:], dims[2:]))
    assert r.to_dict()["checks"]["level"] == MODEL_LEVEL
    assert r.checks["duality_matches_normalization"]


def test_mssp_probe_curve_genus_two():
    r = mssp_probe_curve(SymbolicCurve(2), 1)
    assert r.convergence_index == 2
    assert all(d <= -1 for d in r.difference_dims[r.convergence_index :])


def test_mssp_probe_constant_sequence():
    r = mssp_probe([ONE, ONE, ONE], 3)
    assert r.convergence_index == 0
    assert all(d == -math.inf for d in r.difference_dims)
    assert r.to_dict()["checks"]["difference_dims"] == [None, None]
    assert r.truncation == ONE


def test_mssp_probe_divergent_sequence():
    r = mssp_probe([lefschetz_power(n) for n in range(6)], 1)
    assert r.convergence_index is None and r.to_dict()["limit"] is None


def test_limit_report_shape():
    rep = limit_report(SymbolicCurve(2), 3)
    assert set(rep) == {"limit", "stabilization_index", "checks"}
    assert rep["checks"]["level"] == MODEL_LEVEL
    assert rep["limit"]["precision"] == 3
