import qtpieri
from qtpieri import q, t


def test_golden_sk():
    sk = qtpieri.pieri_coeff("sk", [2, 1], [1])
    assert sk == (1 - q - q**2 + t + q * t - q**2 * t) / (1 - q**2 * t)
    assert str(sk) == "(1 - q + t - q^2 + q*t - q^2*t)/(1 - q^2*t)"
    assert qtpieri.pieri_coeff("sk", [2, 1], [1], q_zero=True) == 1 + t


def test_golden_ks():
    ks = qtpieri.pieri_coeff("ks", [2, 1], [1])
    expected = (1 - t) * (1 + q - t + q * t - t**2 - q * t**2) / ((1 - q) * (1 - q**2 * t))
    assert ks == expected
    assert ks.at_q_zero() == (1 - t) * (1 - t - t**2)


def test_factored_matches():
    for kind in ("vs", "hs", "sk"):
        assert qtpieri.factored(kind, [3, 1], [2]) == qtpieri.pieri_coeff(kind, [3, 1], [2], q_zero=True)
    assert qtpieri.factored("hat_sk", [3, 1], [1]) == qtpieri.pieri_coeff("hat_sk", [3, 1], [1])


def test_expand():
    p2 = qtpieri.expand("P", [2])
    assert set(p2) == {(2,), (1, 1)}
    assert p2[(2,)] == 1
    assert p2[(1, 1)] == (1 + q) * (1 - t) / (1 - q * t)
    assert {k: str(v) for k, v in qtpieri.expand("Q", []).items()} == {(): "1"}


def test_run_suite():
    reports = qtpieri.run_suite(["ortho"], max_size=1)
    assert len(reports) == 4
    assert reports[0] == {"identity": "ortho", "params": {"lambda": (), "mu": ()}, "status": "pass"}
    assert all(r["status"] == "pass" for r in qtpieri.run_suite(max_size=1, cap=2, max_r=1, jobs=2))


def test_bad_input():
    import pytest

    with pytest.raises(ValueError):
        qtpieri.pieri_coeff("nope", [1], [])
    with pytest.raises(ValueError):
        qtpieri.pieri_coeff("sk", [1, 2], [])
    assert qtpieri.identities[0] == "hl_skew_pieri"
