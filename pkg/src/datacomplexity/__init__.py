"""Complexity measures for binary classification datasets.

Twenty-two scalar measures in six categories (feature based, linearity,
neighborhood, network, dimensionality, class imbalance), a calculator that
evaluates them in one pass, and a CLI producing JSON reports and SVG charts.

>>> import datacomplexity as dc
>>> data = dc.fixture("WDBC")
>>> calc = dc.ComplexityCalculator().fit(data)
>>> round(calc.score(), 3)  # doctest: +SKIP
0.21
"""
from .calculator import (
    CANONICAL_IDS,
    CATEGORIES,
    DEFAULT_COLORS,
    ComplexityCalculator,
    MeasureDescriptor,
    MEASURES,
    PolarPlotSpec,
    Wedge,
)
from .dataset import ClassSplit, Dataset, build_dataset, fixture
from .errors import (
    ClassTooSmallError,
    DataComplexityError,
    EmptyCandidatesError,
    EmptyDatasetError,
    MeasureEvaluationError,
    NonBinaryLabelsError,
    NonFiniteFeatureError,
    NotFittedError,
    ShapeMismatchError,
    SingleClassError,
    UnknownFixtureError,
    UnknownMeasureError,
    WeightLengthMismatchError,
    ZeroWeightVectorError,
)
from .geometry import (
    DistanceMatrix,
    euclidean_matrix,
    gower_matrix,
    interpolate_same_class,
    minimum_spanning_tree,
    nearest_neighbor,
)
from .measures import (
    build_epsilon_graph,
    c1,
    c2,
    cls_coef,
    density,
    EpsilonGraph,
    f1,
    f1v,
    f2,
    f3,
    f4,
    hubs,
    l1,
    l2,
    l3,
    lsc,
    n1,
    n2,
    n3,
    n4,
    t1,
    t2,
    t3,
    t4,
)
from .numerics import (
    LinearModel,
    PcaSpectrum,
    components_for,
    decision_margin,
    pca_spectrum,
    train_linear,
)
from .svg import render_svg, svg_document

__version__ = "0.1.0"
