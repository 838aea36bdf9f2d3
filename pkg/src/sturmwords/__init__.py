"""Christoffel and Sturmian words: partitioned factors, varieties,
multiplicities, and exact frequencies."""

from .christoffel import (
    BwtMatrix,
    ChristoffelParams,
    FactorMultiset,
    bwt_matrix,
    circular_factors,
    is_christoffel_conjugate,
    lower_christoffel,
    make_params,
    upper_christoffel,
    verify_isc,
)
from .errors import (
    BadLength,
    ConsistencyError,
    DegenerateSlope,
    EmptyComposition,
    EmptyPattern,
    EmptyWord,
    InvalidWord,
    LengthMismatch,
    NotChristoffel,
    NotCoprime,
    NotPrimitive,
    PrecisionExhausted,
    SturmwordsError,
    WordTooShort,
    ZeroPart,
)
from .partitioned import (
    Composition,
    PartitionedFactor,
    VarietyEntry,
    VarietyTable,
    classify_varieties,
    compose,
    height_profile,
    multiplicities_formula,
    partition_factor,
    variety_count,
)
from .slopes import SlopeValue, decimal_slope, named_slope, parse_slope, rational_slope
from .sturmian import (
    FactorIntervalTable,
    FrequencyEntry,
    FrequencyTable,
    RotationEncoding,
    empirical_frequencies,
    factor_frequencies,
    factor_interval_table,
    mechanical_prefix,
    partitioned_frequencies,
)
from .words import (
    conjugate,
    height,
    is_balanced1_circular,
    is_primitive,
    lex_compare,
    occurrences,
    validate_word,
)

__version__ = "0.1.0"
