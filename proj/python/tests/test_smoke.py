import json
import math
import os

import pytest

import corrmetrics as cm

RARE = [[993, 3], [3, 1]]


def test_worked_example():
    m = cm.ConfusionMatrix(RARE)
    assert m.classes == 2
    assert m.total == 1000
    assert m[1, 0] == 3
    assert cm.mcc(cm.binary_counts(m)).value == pytest.approx(984 / 3984, abs=1e-12)
    assert cm.accuracy_rescaled(m).value == pytest.approx(0.988, abs=1e-12)
    assert cm.empc1_rho(m, 0.9999).value == pytest.approx(-0.36, abs=0.01)
    assert cm.empc2(m).value == cm.er_k(m).value


def test_score_matrix_dict():
    panel = cm.score_matrix(cm.ConfusionMatrix(RARE), rho=0.5)
    assert panel["k"] == 2
    assert set(panel["scores"]) >= {"r_k", "mpc1", "emcc", "empc1_rho", "mcc", "f1"}
    assert panel["warnings"]


def test_endpoints():
    diag = cm.ConfusionMatrix([[4, 0, 0], [0, 5, 0], [0, 0, 6]])
    hollow = cm.ConfusionMatrix([[0, 2, 1], [1, 0, 3], [2, 2, 0]])
    for f in (cm.r_k, cm.mpc1, cm.mpc2, cm.er_k, cm.empc1, cm.emcc):
        assert f(diag).value == pytest.approx(1.0, abs=1e-12)
    for f in (cm.er_k, cm.empc1, cm.empc2, cm.emcc):
        assert f(hollow).value == pytest.approx(-1.0, abs=1e-12)
    assert cm.r_k(hollow).value > -1.0


def test_parse_and_errors():
    m = cm.parse_confusion_matrix("labels: a,b\n1,2\n3,4\n")
    assert m.labels == ["a", "b"]
    assert m.tolist() == [[1, 2], [3, 4]]
    assert cm.parse_confusion_matrix(m.render()) == m
    with pytest.raises(cm.ParseError):
        cm.parse_confusion_matrix("1,2\n3\n")
    with pytest.raises(ValueError):
        cm.ConfusionMatrix([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        cm.empc1_rho(m, 1.0)


def test_read_file():
    data = os.environ.get("CORRMETRICS_TEST_DATA")
    if not data:
        pytest.skip("test data directory not provided")
    m = cm.read_confusion_matrix(os.path.join(data, "three_class.txt"))
    assert m.labels == ["cat", "dog", "bird"]


def test_mpc_matrix_masks_with_none():
    rows = cm.mpc_matrix(cm.ConfusionMatrix([[4, 1, 0], [2, 5, 0], [1, 1, 0]]))
    assert all(row[2] is None for row in rows)
    assert rows[0][0] is not None


def test_generate_and_simulate_are_deterministic():
    a = cm.generate("nearly_uniform", k=4, n=200, replicate=3, seed=9)
    b = cm.generate("nearly_uniform", k=4, n=200, replicate=3, seed=9)
    assert a == b and a.total == 200
    out1 = cm.simulate(["hollow", "diagonal"], k=4, n=300, reps=50, seed=2, workers=1)
    out4 = cm.simulate(["hollow", "diagonal"], k=4, n=300, reps=50, seed=2, workers=4)
    assert out1 == out4
    doc = json.loads(out1)
    assert doc["families"]["hollow"]["ER_K"]["counts"][0] == 50
    csv = cm.simulate(["hollow"], reps=5, format="csv")
    assert csv.startswith("family,metric,bin_lo,bin_hi,count\n")
    with pytest.raises(ValueError):
        cm.simulate(["hollow"], reps=5, format="xml")
    with pytest.raises(ValueError):
        cm.simulate(["no_such_family"], reps=5)


def test_oracle_agrees():
    report = cm.oracle.cross_check(trials=60, seed=4)
    assert report["passed"]
    m = cm.ConfusionMatrix([[5, 1, 0], [2, 7, 1], [0, 3, 4]])
    assert cm.oracle.r_k(m).value == pytest.approx(cm.r_k(m).value, abs=1e-12)
    assert cm.oracle.emcc(m).value == pytest.approx(cm.emcc(m).value, abs=1e-12)
    t, c = cm.oracle.build_sequences(m)
    r = cm.oracle.pcc([float(v) for v in t[0]], [float(v) for v in c[0]])
    assert math.isclose(r.value, cm.mpc_matrix(m)[0][0], abs_tol=1e-12)


def test_weights():
    m = cm.ConfusionMatrix([[5, 1, 0], [2, 7, 1], [0, 3, 4]])
    assert cm.mpc1(m, [1 / 3] * 3).value == pytest.approx(cm.mpc1(m).value)
    with pytest.raises(ValueError):
        cm.empc1(m, [0.5, 0.5])
