"""Pascal's-triangle-matrix zero cross-correlation codes for SAC-OCDMA."""

from .analysis import (
    CorrelationReport,
    FamilyRow,
    compare_table,
    cross_correlation,
    family_length,
    generate_hadamard_code,
    verify,
)
from .code_core import (
    BlockPlan,
    CodeSpec,
    PascalRow,
    binomial_row,
    block_plan,
    canonicalize,
    codeword,
    format_matrix,
    generate_ptmc,
    left_block,
    parse_matrix,
    pascal_type_matrix,
    right_block,
)
from .simulator import (
    SimConfig,
    SimReport,
    detect_direct,
    encode,
    run_exhaustive,
    run_monte_carlo,
)

__version__ = "0.1.0"
