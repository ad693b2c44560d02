"""
核心模块 - Config、容差常量、异常
"""

from dsau.core.config import (
    AU_TOL,
    ASCENT_TOL,
    CONS_TOL,
    GRID_TOL,
    MASS_TOL,
    MAX_FRAME,
    ROUND_TOL,
    Config,
    FrameConfig,
    OracleConfig,
    RuntimeConfig,
    SuiteConfig,
    load_config,
)
from dsau.core.errors import (
    BpaDocumentError,
    CapacityError,
    DsauError,
    DuplicateLabelError,
    DuplicateSetError,
    EmptySetError,
    EvidenceError,
    FrameError,
    FrameMismatchError,
    InvalidMaskError,
    InvalidMassError,
    InvalidProbabilityError,
    InvariantViolationError,
    MalformedDocumentError,
    MassSumError,
    NonPositiveMassError,
    NotBeliefFunctionError,
    PartitionError,
    RelabelError,
    TransferError,
    UnknownLabelError,
)

__all__ = [
    "AU_TOL",
    "ASCENT_TOL",
    "CONS_TOL",
    "GRID_TOL",
    "MASS_TOL",
    "MAX_FRAME",
    "ROUND_TOL",
    "Config",
    "FrameConfig",
    "OracleConfig",
    "RuntimeConfig",
    "SuiteConfig",
    "load_config",
    "BpaDocumentError",
    "CapacityError",
    "DsauError",
    "DuplicateLabelError",
    "DuplicateSetError",
    "EmptySetError",
    "EvidenceError",
    "FrameError",
    "FrameMismatchError",
    "InvalidMaskError",
    "InvalidMassError",
    "InvalidProbabilityError",
    "InvariantViolationError",
    "MalformedDocumentError",
    "MassSumError",
    "NonPositiveMassError",
    "NotBeliefFunctionError",
    "PartitionError",
    "RelabelError",
    "TransferError",
    "UnknownLabelError",
]
