"""Exception types raised by dataset construction, measures and the calculator."""


class DataComplexityError(Exception):
    """Base class for all errors raised by this package."""


class ShapeMismatchError(DataComplexityError):
    """Feature matrix and label vector dimensions disagree."""


class EmptyDatasetError(DataComplexityError):
    """Fewer than two instances or zero features."""


class NonFiniteFeatureError(DataComplexityError):
    """A feature value is NaN or infinite."""


class NonBinaryLabelsError(DataComplexityError):
    """The label vector does not contain exactly two distinct values."""


class UnknownFixtureError(DataComplexityError):
    """Requested a built-in dataset that does not exist."""


class SingleClassError(DataComplexityError):
    """An operation that needs both classes saw only one."""


class ClassTooSmallError(DataComplexityError):
    """An operation needs at least two instances per class."""


class EmptyCandidatesError(DataComplexityError):
    """Nearest-neighbor query against an empty candidate set."""


class ZeroWeightVectorError(DataComplexityError):
    """Linear model has a zero weight vector, margins are undefined."""


class WeightLengthMismatchError(DataComplexityError):
    """Score weights do not match the number of selected measures."""


class NotFittedError(DataComplexityError):
    """Calculator method called before fit()."""


class UnknownMeasureError(DataComplexityError):
    """A measure id is not in the registry."""


class MeasureEvaluationError(DataComplexityError):
    """A measure failed during fit; carries the offending measure id."""

    def __init__(self, measure_id, cause):
        super().__init__(f"measure '{measure_id}': {cause}")
        self.measure_id = measure_id
        self.cause = cause
