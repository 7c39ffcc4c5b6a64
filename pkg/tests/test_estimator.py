import pytest
from sklearn.base import clone

from rsht import Complex, RshtSimplifier, dunce_hat8


def test_get_set_params_roundtrip():
    est = RshtSimplifier(max_step=3, seed=5)
    params = est.get_params()
    assert params["max_step"] == 3 and params["seed"] == 5
    est.set_params(seed=9)
    assert est.get_params()["seed"] == 9


def test_sklearn_clone():
    est = clone(RshtSimplifier(policy="local", seed=2))
    assert est.get_params()["policy"] == "local"


def test_fit_returns_self_and_validates():
    est = RshtSimplifier(max_step=0)
    with pytest.raises(ValueError):
        est.fit(dunce_hat8())
    est = RshtSimplifier()
    assert est.fit(dunce_hat8()) is est


def test_transform_simplifies_and_reports():
    est = RshtSimplifier(max_step=5, total_expansion_cap=500, seed=0)
    K = dunce_hat8()
    out = est.transform(K)
    assert isinstance(out, Complex)
    assert out.f_vector() == (1,)
    assert est.report_.reduced_to_point
    # the input is untouched
    assert K.f_vector() == (8, 24, 17)


def test_transform_accepts_facet_lists():
    est = RshtSimplifier(seed=1)
    out = est.transform([(1, 2, 3), (2, 3, 4)])
    assert out.f_vector() == (1,)


def test_fit_transform_matches_transform():
    a = RshtSimplifier(seed=4).fit_transform(dunce_hat8())
    b = RshtSimplifier(seed=4).transform(dunce_hat8())
    assert a == b
