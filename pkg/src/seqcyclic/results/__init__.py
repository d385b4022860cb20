from .result_types import (
    CauchyRecord,
    ConditionReport,
    CriterionResult,
    HypercyclicVectorResult,
    OrbitEstimate,
    ProbeResult,
    SampleRecord,
    SeriesRecord,
    Verdict,
)

__all__ = [
    "CauchyRecord",
    "ConditionReport",
    "CriterionResult",
    "HypercyclicVectorResult",
    "OrbitEstimate",
    "ProbeResult",
    "SampleRecord",
    "SeriesRecord",
    "Verdict",
]
