"""Degree-k normal forms for additive logics.

Enumerate the normal-form spaces of a logic equipped with a
domain-representation system, rewrite any formula into an equivalent
disjunction of forms of its own degree, and verify the results against
exhaustive finite-model oracles at desk scale.
"""
from .constituents import (
    DEFAULT_CAP,
    Constituent,
    ConstituentSpace,
    PartitionReport,
    count,
    partition_check,
    space,
)
from .domain_system import DomainSystem, Generator, SuitabilityReport, derive_generator, suitable
from .errors import (
    BudgetExceeded,
    CapExceeded,
    DomainViolation,
    EngineError,
    NotLargeEnough,
    ParseError,
    UnknownSymbolError,
    UnsuitableGenerator,
)
from .rewriter import NormalizationResult, VerifyReport, disjunction, normalize, verify, verify_many
from .syntax import (
    And,
    App,
    ConnectiveSig,
    Formula,
    GuardPayload,
    LogicDef,
    Not,
    Or,
    Prop,
    conj_all,
    depth,
    disj_all,
    parse_formula,
    render_formula,
    validate_domains,
    vocabulary,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "App",
    "BudgetExceeded",
    "CapExceeded",
    "ConnectiveSig",
    "Constituent",
    "ConstituentSpace",
    "DEFAULT_CAP",
    "DomainSystem",
    "DomainViolation",
    "EngineError",
    "Formula",
    "Generator",
    "GuardPayload",
    "LogicDef",
    "NormalizationResult",
    "Not",
    "NotLargeEnough",
    "Or",
    "ParseError",
    "PartitionReport",
    "Prop",
    "SuitabilityReport",
    "UnknownSymbolError",
    "UnsuitableGenerator",
    "VerifyReport",
    "conj_all",
    "count",
    "depth",
    "derive_generator",
    "disj_all",
    "disjunction",
    "normalize",
    "parse_formula",
    "partition_check",
    "render_formula",
    "space",
    "suitable",
    "validate_domains",
    "verify",
    "verify_many",
    "vocabulary",
]
