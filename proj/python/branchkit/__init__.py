"""Branching of irreducible sl_n representations to sl2-subalgebras.

Multiplicity results are dicts {j: m_j}, where m_j counts copies of the
(j+1)-dimensional irreducible F_j. Weights are fundamental-weight coordinates
(a_1, ..., a_{n-1}) unless passed as ``partition=``.
"""

from ._branchkit import (
    BranchkitError,
    BudgetExceeded,
    ConsistencyError,
    Engine,
    InvalidInput,
    branch,
    build_triple,
    dim_irrep,
    fundamental_branching,
    gaussian_binomial,
    h_diagonal,
    omega_to_partition,
    oracle_branch,
    partition_to_omega,
    pi,
    pieri_set,
    subalgebra_types,
)

__all__ = [
    "BranchkitError",
    "BudgetExceeded",
    "ConsistencyError",
    "Engine",
    "InvalidInput",
    "branch",
    "build_triple",
    "dim_irrep",
    "fundamental_branching",
    "gaussian_binomial",
    "h_diagonal",
    "omega_to_partition",
    "oracle_branch",
    "partition_to_omega",
    "pi",
    "pieri_set",
    "subalgebra_types",
]

__version__ = "0.1.0"
