"""Exact-arithmetic octonion algebras over Q and maximal-torus type decisions."""

from .arith import (
    FactorizationOverflow,
    Place,
    Rational,
    SquareClass,
    ZeroInput,
    hilbert_symbol,
    relevant_places,
    squarefree_class,
)
from .composition import CompositionAlgebra
from .engine import (
    INCONCLUSIVE,
    NO,
    YES,
    CrossCheckDisagreement,
    InvalidScenario,
    LaurentScenario,
    Verdict,
    decide_over_Q,
    decide_over_R,
    decide_laurent_counterexample,
    odd_degree_reduction,
)
from .etale import CubicEtale, QuadraticEtale, TorusType
from .hermitian import HermitianForm
from .quadforms import LaurentForm, QuadForm

__version__ = "0.1.0"

__all__ = [
    "CompositionAlgebra",
    "CrossCheckDisagreement",
    "CubicEtale",
    "FactorizationOverflow",
    "HermitianForm",
    "INCONCLUSIVE",
    "InvalidScenario",
    "LaurentForm",
    "LaurentScenario",
    "NO",
    "Place",
    "QuadForm",
    "QuadraticEtale",
    "Rational",
    "SquareClass",
    "TorusType",
    "Verdict",
    "YES",
    "ZeroInput",
    "decide_over_Q",
    "decide_over_R",
    "decide_laurent_counterexample",
    "hilbert_symbol",
    "odd_degree_reduction",
    "relevant_places",
    "squarefree_class",
]
