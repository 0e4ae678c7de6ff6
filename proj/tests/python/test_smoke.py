import json

import pytest

import fuzzycurve as fc


def test_alpha_cut_regimes_and_pipeline():
    s = fc.FuzzyScalar(4.0, 4.5, 4.8, 5.0, 5.2, 5.5, 6.0, 0.6)
    below = fc.alpha_cut(s, 0.3)
    assert below.regime == fc.CutRegime.Below
    assert below.left[2] is not None
    between = fc.alpha_cut(s, 0.8)
    assert between.regime == fc.CutRegime.Between
    assert between.left[2] is None and between.right[0] is None
    tr = fc.type_reduce(between)
    assert tr.left == pytest.approx((between.left[0] + between.left[1]) / 2)
    assert fc.defuzzify(tr) == pytest.approx((tr.left + tr.c + tr.right) / 3)


def test_invalid_input_raises_with_kind():
    with pytest.raises(fc.FuzzyCurveError) as info:
        fc.FuzzyScalar(0, 0.5, 0.4, 1, 1, 1, 1, 0.5)
    assert info.value.kind == "OrderingViolation"
    assert info.value.detail == "l > rl"
    with pytest.raises(ValueError):
        fc.alpha_cut(fc.FuzzyScalar(0, 0, 0, 0, 0, 0, 0, 0.5), 1.0)


def test_basis_partition_of_unity():
    knots = fc.clamped_uniform_knots(5, 3)
    assert knots[:3] == [0, 0, 0] and knots[-3:] == [1, 1, 1]
    for i in range(11):
        assert sum(fc.basis(knots, 3, i / 10)) == pytest.approx(1.0, abs=1e-12)


def test_rational_point_and_curve():
    controls = [(1, 1), (2, 4), (5, 5), (6, 1)]
    p = fc.rational_point(controls, [1, 1, 3, 1], 3, 0.5)
    assert (p.x, p.y) == pytest.approx((4.25, 4.75))
    curve = fc.rational_curve(controls, [1, 1, 3, 1], 3, samples=11)
    assert len(curve) == 11
    assert tuple(curve.points[0]) == (1.0, 1.0)
    assert tuple(curve.points[-1]) == (6.0, 1.0)


def test_demo_model_curves():
    model = fc.demo_model()
    assert len(model) == 4 and model.order == 3 and model.alpha == 0.8
    band = model.band(21)
    assert [label for label, _ in band] == ["ll", "l", "rl", "crisp", "lr", "r", "rr"]
    left, crisp, right = model.reduced(21)
    assert len(left) == len(crisp) == len(right) == 21
    report = fc.deviation(model.defuzzified(21), model.crisp(21))
    assert report.max_distance > 0
    assert report.mean_distance <= report.max_distance
    assert model.band_svg(11).startswith("<?xml")
    assert model.band_csv(3).splitlines()[0].startswith("t,ll_x,ll_y")


def test_document_round_trip(tmp_path):
    text = fc.demo_document()
    assert json.loads(text)["weights"] == [1, 1, 3, 1]
    model = fc.parse_model(text)
    assert model == fc.demo_model()
    path = tmp_path / "demo.json"
    path.write_text(fc.to_json(model))
    assert fc.load_model(path) == model


def test_run_cli(tmp_path):
    path = tmp_path / "demo.json"
    code, out, err = fc.run_cli(["demo", "--out", str(path)])
    assert code == 0 and out == "" and err == ""
    code, out, _ = fc.run_cli(["validate", str(path)])
    assert code == 0 and out.startswith("valid: 4 points")
    code, _, err = fc.run_cli(["validate", str(path), "--order", "7"])
    assert code == 1 and "OrderExceedsControlCount" in err
