"""Normal type-2 fuzzy rational B-spline curves."""

from ._core import (
    AlphaCutScalar,
    CutRegime,
    DeviationReport,
    FuzzyCurveError,
    FuzzyCurveModel,
    FuzzyPoint,
    FuzzyScalar,
    Point2,
    Polyline,
    TRInterval,
    alpha_cut,
    basis,
    clamped_uniform_knots,
    defuzzify,
    demo_document,
    demo_model,
    deviation,
    load_model,
    parse_model,
    pipeline_point,
    rational_curve,
    rational_point,
    reduce_point,
    run_cli,
    to_json,
    type_reduce,
)

__all__ = [
    "AlphaCutScalar",
    "CutRegime",
    "DeviationReport",
    "FuzzyCurveError",
    "FuzzyCurveModel",
    "FuzzyPoint",
    "FuzzyScalar",
    "Point2",
    "Polyline",
    "TRInterval",
    "alpha_cut",
    "basis",
    "clamped_uniform_knots",
    "defuzzify",
    "demo_document",
    "demo_model",
    "deviation",
    "load_model",
    "parse_model",
    "pipeline_point",
    "rational_curve",
    "rational_point",
    "reduce_point",
    "run_cli",
    "to_json",
    "type_reduce",
]
