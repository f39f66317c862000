"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class SrepError(Exception):
    """Base class; `code` is a stable machine-readable name."""

    code = "error"

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class UnsupportedRank(SrepError):
    code = "unsupported_rank"


class UnsupportedFamily(SrepError):
    code = "unsupported_family"


class NotARoot(SrepError):
    code = "not_a_root"


class GroupTooLarge(SrepError):
    code = "group_too_large"


class UnsupportedEmbedding(SrepError):
    code = "unsupported_embedding"


class UnknownPair(SrepError):
    code = "unknown_pair"


class ConstraintViolated(SrepError):
    code = "constraint_violated"


class SignatureDataUnavailable(SrepError):
    code = "signature_data_unavailable"

    def __init__(self, message: str, support=None):
        super().__init__(message)
        self.support = support


class Case4Detected(SrepError):
    code = "case4_detected"


class UnknownDiagramClassification(SrepError):
    code = "unknown_diagram_classification"


class InvalidDiagram(SrepError):
    code = "invalid_diagram"


class NonSimpleTheta(SrepError):
    code = "non_simple_theta"


class ParseError(SrepError):
    code = "parse_error"
