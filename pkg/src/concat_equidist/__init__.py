"""Digit-exact concatenation-tail sequences and equidistribution diagnostics."""

from .asymptotics import (
    LimitConstants,
    RatioScanReport,
    ScanRecord,
    Y_LIMIT,
    inverse_epsilon,
    lemma1_main_term,
    lemma2_main_term,
    limit_constants,
    poly_floor_inverse,
    ratio_scan,
    scan_points,
    subsequence_points_linear,
    subsequence_points_poly,
    y_sequence,
)
from .counting import (
    CountResult,
    UndecidedMembershipError,
    census,
    count_A,
    in_interval,
    leading_digit,
)
from .equidist import (
    BENFORD_FREQ,
    BenfordReport,
    PointSet,
    benford_report,
    log10_fracpart,
    log10_int,
    log_fracparts,
    poly_log_ratio,
    star_discrepancy,
    ud_deviation,
    weyl_sum,
)
from .exactnum import (
    DigitString,
    ExactEndpoint,
    HalfOpenInterval,
    PrefixOrder,
    compare_prefix,
    digit_length,
    digits_to_int,
    int_to_digits,
)
from .seqgen import (
    ChampernowneTail,
    DomainError,
    IntPoly,
    MultipleTail,
    PolyTail,
    TailSpec,
    digit_stream,
    poly_eval,
    tail_digits,
    term,
)

__all__ = [
    "BENFORD_FREQ",
    "BenfordReport",
    "ChampernowneTail",
    "CountResult",
    "DigitString",
    "DomainError",
    "ExactEndpoint",
    "HalfOpenInterval",
    "IntPoly",
    "LimitConstants",
    "MultipleTail",
    "PointSet",
    "PolyTail",
    "PrefixOrder",
    "RatioScanReport",
    "ScanRecord",
    "TailSpec",
    "UndecidedMembershipError",
    "Y_LIMIT",
    "benford_report",
    "census",
    "compare_prefix",
    "count_A",
    "digit_length",
    "digit_stream",
    "digits_to_int",
    "in_interval",
    "int_to_digits",
    "inverse_epsilon",
    "leading_digit",
    "lemma1_main_term",
    "lemma2_main_term",
    "limit_constants",
    "log10_fracpart",
    "log10_int",
    "log_fracparts",
    "poly_eval",
    "poly_floor_inverse",
    "poly_log_ratio",
    "ratio_scan",
    "scan_points",
    "star_discrepancy",
    "subsequence_points_linear",
    "subsequence_points_poly",
    "tail_digits",
    "term",
    "ud_deviation",
    "weyl_sum",
    "y_sequence",
]

__version__ = "0.1.0"
