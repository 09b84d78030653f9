"""
@file: __init__.py
@description: Инициализация пакета схем Pydantic
@dependencies: pydantic
@created: 2026-10-18
"""

from .certificate import (
    CertificateFile,
    GenericTopology,
    SetKind,
    VerificationStatus,
    VisibilityCertificate,
)
from .graph import GraphDocument
from .reports import BoundsReport, BypassSummary, SolveOptions, SolveReport, VerifyOutcome
from .topology import TopologyKind, TopologySpec

__all__ = [
    "CertificateFile",
    "GenericTopology",
    "SetKind",
    "VerificationStatus",
    "VisibilityCertificate",
    "GraphDocument",
    "BoundsReport",
    "BypassSummary",
    "SolveOptions",
    "SolveReport",
    "VerifyOutcome",
    "TopologyKind",
    "TopologySpec",
]
