import cmath
import math
from fractions import Fraction

import pytest

import ricepath as rp


def golden(n):
    return Fraction(1, (n + 1) * (n + 2))


def test_version():
    assert rp.__version__ == "0.1.0"


def test_pi_is_an_involution():
    f = [Fraction(1, 2), Fraction(-3, 7), 5, 0, Fraction(2, 9)]
    assert rp.pi_transform(rp.pi_transform(f)) == f


def test_pi_of_golden():
    f = [golden(n) for n in range(20)]
    assert rp.pi_transform(f) == [Fraction(1, n + 2) for n in range(20)]


def test_sequence_spec():
    g = rp.SequenceSpec.golden()
    assert [Fraction(v) for v in g.exact_table(4)] == [golden(n) for n in range(5)]
    assert str(rp.SequenceSpec.parse("basic d=0 b=0").canonical()) == str(g)
    with pytest.raises(ValueError):
        rp.SequenceSpec.parse("nonsense")


def test_liftings_agree_on_golden():
    for s in (0.5, complex(-0.5, 2.0), complex(2.0, -1.0)):
        expect = 1 / (s + 2)
        assert abs(rp.newton_psi(rp.SequenceSpec.golden(), s) - expect) < 1e-10
        assert abs(rp.canonical_psi(0.0, 0, s) - expect) < 1e-12
        assert abs(rp.psi_via_laplace(0.0, 0, s) - expect) < 1e-10


def test_rice_recovery_with_python_callable():
    value = rp.rice_recover_f(lambda s: 1 / (s + 2), 6, -0.5, domain=-2.0)
    assert value == pytest.approx(float(golden(6)), rel=1e-9)


def test_twisted_gamma():
    euler = 0.5772156649015329
    assert abs(rp.twisted_gamma_closed_form(1, 1, 1.0) + euler) < 1e-12
    assert abs(rp.twisted_gamma(2, 1, 1.5) - rp.twisted_gamma_closed_form(2, 1, 1.5)) < 1e-10


def test_trie_routes():
    assert rp.mean_exact("1/2,1/2", "size", 2)[2] == 2
    assert rp.mean_exact("1/2,1/2", "pathlength", 2)[2] == 4
    exact = rp.mean_exact("1/3,2/3", "pathlength", 12)
    assert all(rp.mean_via_rice_pair("1/3,2/3", "pathlength", n) == exact[n] for n in range(13))
    assert rp.lambda_series("1/3,2/3", 3) == pytest.approx(1.5)
    assert rp.entropy("1/2,1/2") == pytest.approx(math.log(2))


def test_simulation_is_deterministic():
    a = rp.simulate_trie("1/2,1/2", "size", 16, 300, seed=5, threads=1)
    b = rp.simulate_trie("1/2,1/2", "size", 16, 300, seed=5, threads=3)
    assert a["mean"] == b["mean"] and a["stderr"] == b["stderr"]


def test_fit_constant():
    fit = rp.asymptotic_constant_fit("1/2,1/2", "sorting", 256, 4096)
    assert fit["c_theory"] == pytest.approx(1 / (2 * math.log(2)))
    assert abs(fit["rel_err"]) < 0.15


def test_charlier_tau():
    assert rp.charlier_tau(0, 7) == 1
    assert rp.charlier_tau(1, 7) == 0
    assert rp.charlier_tau(2, 7) == -7


def test_errors_map_to_python():
    with pytest.raises(ArithmeticError):
        rp.lambda_series("1/2,1/2", 1.0)
    with pytest.raises(ValueError):
        rp.mean_exact("1/2,1/3", "size", 3)
    with pytest.raises(rp.Error):
        rp.SequenceSpec.parse("nonsense")
    assert issubclass(rp.PoleError, rp.DomainError)
    assert issubclass(rp.ConvergenceError, rp.Error)
