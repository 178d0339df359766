import numpy as np
import pytest

import vilenkin as v


def test_group_and_digits():
    g = v.make_group([2, 3], 4)
    assert g.size == 36
    assert g.places == [1, 2, 6, 12, 36]
    assert v.digits(g, 11) == [1, 2, 1, 0]
    assert v.index_of(g, [1, 2, 1, 0]) == 11
    with pytest.raises(v.SizeError):
        v.make_group([1])
    with pytest.raises(v.RangeError):
        v.digits(g, 36)


def test_transform_round_trip_and_parseval():
    g = v.make_group([2, 3, 2, 3])
    rng = np.random.default_rng(3)
    f = rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size)
    c = v.forward(g, f)
    assert np.allclose(c, v.forward(g, f, method="naive"), atol=1e-10)
    assert np.allclose(v.inverse(g, c), f, atol=1e-10)
    assert np.isclose(np.sum(np.abs(c) ** 2), np.mean(np.abs(f) ** 2))


def test_kernels_and_means():
    g = v.make_group([2], 3)
    assert np.allclose(v.fejer(g, 4), [2.5, 0.5, 1, 0] * 2)
    assert v.domination_constant(g, [3]) == pytest.approx(1.5)
    riesz = v.WeightSequence.parse("riesz")
    assert riesz.Q(4) == pytest.approx(11 / 6)
    one = np.ones(g.size, dtype=complex)
    assert np.allclose(v.norlund_mean(g, one, riesz, 5), 1.0)
    f = v.character(g, 3)
    assert np.allclose(v.t_mean(g, f, riesz, 6), v.t_mean(g, f, riesz, 6, method="abel"))


def test_points_and_classify():
    g = v.make_group([2], 6)
    assert v.w_modulus(g, v.character(g, 1), [0] * 6, 2) == 0.5
    c = v.classify(v.WeightSequence.parse("logpow:0.5"), 10000)
    assert c["monotonicity"] == "non-decreasing"
    assert c["convergence_gate"] and c["block_gate"]


def test_cli_round_trip():
    code, out, _ = v.run_cli(["kernel-profile", "--group", "2", "--levels", "3", "--n-max", "4"])
    assert code == 0
    assert "4,1,1,0,0.125" in out
    code, _, err = v.run_cli(["converge", "--weights", "cesaro:2"])
    assert code == 2
    assert "weights" in err
