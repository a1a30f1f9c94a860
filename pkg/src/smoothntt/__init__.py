"""Exact number-theoretic transforms over prime fields with smooth group order."""

from .bench import BenchReport, emit_report, run_benchmark
from .errors import (
    BadRadices,
    InvalidField,
    LengthMismatch,
    NotADivisor,
    OutOfRange,
    VectorFileError,
    WrongOrder,
    ZeroElement,
    ZeroInverse,
)
from .field import FieldElement, FieldParams, fp_add, fp_inv, fp_mul, fp_pow, fp_sub, is_prime
from .numtheory import (
    Factorization,
    SmoothPrimeRecord,
    element_order,
    euler_phi,
    factorize,
    find_generator,
    generator_probability,
    prime_search,
)
from .transform import (
    DigitPermutation,
    OpCounts,
    TransformPlan,
    build_twiddle_table,
    cyclic_convolve_via_fft,
    dft_naive,
    digit_reverse,
    fft_recursive,
    fft_twiddle,
    idft_naive,
    ifft,
    plan_transform,
    predicted_counts,
)

__all__ = [
    "BadRadices",
    "BenchReport",
    "DigitPermutation",
    "Factorization",
    "FieldElement",
    "FieldParams",
    "InvalidField",
    "LengthMismatch",
    "NotADivisor",
    "OpCounts",
    "OutOfRange",
    "SmoothPrimeRecord",
    "TransformPlan",
    "VectorFileError",
    "WrongOrder",
    "ZeroElement",
    "ZeroInverse",
    "build_twiddle_table",
    "cyclic_convolve_via_fft",
    "dft_naive",
    "digit_reverse",
    "element_order",
    "emit_report",
    "euler_phi",
    "factorize",
    "fft_recursive",
    "fft_twiddle",
    "find_generator",
    "fp_add",
    "fp_inv",
    "fp_mul",
    "fp_pow",
    "fp_sub",
    "generator_probability",
    "idft_naive",
    "ifft",
    "is_prime",
    "plan_transform",
    "predicted_counts",
    "prime_search",
    "run_benchmark",
]
