"""Fourier transforms, fast transforms, and convolution on C^n and finite
abelian groups, with dense-matrix oracles for every fast path.

Conventions: the Fourier matrix F has the characters as columns
(F[x, g] = chi_g(x), positive exponent), "synthesis" multiplies by F,
"analysis" by (1/|G|) F*. sklearn-style wrappers live in
`abelianfft.estimators` (imported lazily to keep import light).
"""

from .bench import BenchReport, BenchRow, run_bench
from .circulant import (
    DEFAULT_ORACLE_CAP,
    Circulant,
    GCirculant,
    block_decompose,
    decompose_in_powers_of_P,
    g_naive_convolve,
    naive_convolve,
    oracle_cap,
    shift_matrix,
)
from .errors import (
    DimensionError,
    ResourceLimitError,
    UnsupportedLengthError,
    VectorParseError,
)
from .fourier import (
    apply_D,
    apply_F,
    apply_F_inverse,
    boolean_character,
    character,
    character_kron,
    circulant_eigenvalues,
    dft_matrix,
    diagonalize_check,
    fourier_column,
    g_circulant_eigenvalues,
)
from .groups import (
    FiniteAbelianGroup,
    as_group,
    canonicalize,
    cyclic,
    parse_group,
    trivial_group,
)
from .transforms import (
    FactorStep,
    TwiddleTable,
    fast_convolve,
    fft,
    g_fast_convolve,
    g_fft,
    ifft,
    is_power_of_two,
    linear_convolve,
    transform_plan,
    twiddle_table,
    walsh_hadamard,
)
from .vectors import (
    as_matrix,
    as_vector,
    hadamard,
    inner_product,
    mat_vec,
    max_abs_diff,
    root_of_unity,
    roots_of_unity,
    scaled_tolerance,
)
from .verify import CheckResult, run_verify

__version__ = "0.1.0"

__all__ = [
    "BenchReport",
    "BenchRow",
    "Circulant",
    "CheckResult",
    "DEFAULT_ORACLE_CAP",
    "DimensionError",
    "FactorStep",
    "FiniteAbelianGroup",
    "GCirculant",
    "ResourceLimitError",
    "TwiddleTable",
    "UnsupportedLengthError",
    "VectorParseError",
    "apply_D",
    "apply_F",
    "apply_F_inverse",
    "as_group",
    "as_matrix",
    "as_vector",
    "block_decompose",
    "boolean_character",
    "canonicalize",
    "character",
    "character_kron",
    "circulant_eigenvalues",
    "cyclic",
    "decompose_in_powers_of_P",
    "dft_matrix",
    "diagonalize_check",
    "fast_convolve",
    "fft",
    "fourier_column",
    "g_circulant_eigenvalues",
    "g_fast_convolve",
    "g_fft",
    "g_naive_convolve",
    "hadamard",
    "ifft",
    "inner_product",
    "is_power_of_two",
    "linear_convolve",
    "mat_vec",
    "max_abs_diff",
    "naive_convolve",
    "oracle_cap",
    "parse_group",
    "root_of_unity",
    "roots_of_unity",
    "run_bench",
    "run_verify",
    "scaled_tolerance",
    "shift_matrix",
    "transform_plan",
    "trivial_group",
    "twiddle_table",
    "walsh_hadamard",
]
