"""Exact tools for blow-ADE surface singularities: Newton polyhedra, monodromy
zeta-functions, tangent-cone singularities and the blow-up certifier."""

__version__ = "0.1.0"

from .errors import BlowAdeError  # noqa: E402
from .poly import Polynomial, TruncatedSeries, parse_polynomial  # noqa: E402
from .newton import is_nondegenerate, newton_boundary, newton_number, newton_principal_part  # noqa: E402
from .zeta import ZetaFunction, global_zeta, multiplicity_factor, varchenko_zeta, zeta_degree  # noqa: E402
from .curves import ADEType, ProjectivePoint, classify_ade, singular_points, total_milnor  # noqa: E402
from .blowup import Chart, extract_principal_part, normalize_node, pullback, split_quadratic  # noqa: E402
from .certify import AnalyzeOptions, BlowAdeReport, analyze, is_le_yomdin, same_type  # noqa: E402
from .deform import DeformationFamily, check_family, mu_star  # noqa: E402

__all__ = [
    "ADEType", "AnalyzeOptions", "BlowAdeError", "BlowAdeReport", "Chart", "DeformationFamily",
    "Polynomial", "ProjectivePoint", "TruncatedSeries", "ZetaFunction", "analyze", "check_family",
    "classify_ade", "extract_principal_part", "global_zeta", "is_le_yomdin", "is_nondegenerate",
    "mu_star", "multiplicity_factor", "newton_boundary", "newton_number", "newton_principal_part",
    "normalize_node", "parse_polynomial", "pullback", "same_type", "singular_points", "split_quadratic",
    "total_milnor", "varchenko_zeta", "zeta_degree",
]
