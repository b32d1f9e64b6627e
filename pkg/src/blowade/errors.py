"""Exception hierarchy.  Every domain error carries a machine-readable ``kind`` tag."""


class BlowAdeError(Exception):
    kind = "domain_error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"kind": self.kind, "message": str(self)}
        out.update({k: _plain(v) for k, v in self.details.items()})
        return out


def _plain(value):
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


class ParseError(BlowAdeError):
    kind = "syntax_error"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}", position=position)
        self.position = position


class ExponentOverflow(BlowAdeError):
    kind = "exponent_overflow"


class ZeroPolynomial(BlowAdeError):
    kind = "zero_polynomial"


class NonzeroConstantTerm(BlowAdeError):
    kind = "nonzero_constant_term"


class InsufficientPrecision(BlowAdeError):
    kind = "insufficient_precision"


class NonReducedTangentCone(BlowAdeError):
    kind = "non_reduced_tangent_cone"


class NonRationalSingularLocus(BlowAdeError):
    kind = "non_rational_singular_locus"


class NotSingular(BlowAdeError):
    kind = "not_a_singularity"


class IndeterminateType(BlowAdeError):
    kind = "indeterminate_type"


class UnboundedNewtonRegion(BlowAdeError):
    kind = "unbounded_newton_region"


class DegenerateGerm(BlowAdeError):
    kind = "degenerate_germ"


class IndeterminateNondegeneracy(BlowAdeError):
    kind = "indeterminate_nondegeneracy"


class BlowOrderExceeded(BlowAdeError):
    kind = "blow_order_exceeded"


class NonIsolatedSingularity(BlowAdeError):
    kind = "non_isolated_singularity"


class NotBlowADEShape(BlowAdeError):
    kind = "not_blow_ade_shape"


class TruncationExhausted(BlowAdeError):
    kind = "truncation_exhausted"


class FactorLevelError(BlowAdeError):
    kind = "level_exceeds_factor_count"


class UncertifiedReport(BlowAdeError):
    kind = "uncertified_report"


class DegenerateForMuStar(BlowAdeError):
    kind = "degenerate_for_mu_star"
