"""Command handlers: request in, JSON-ready report out.

Both the HTTP app and the in-process CLI go through :func:`run`, so the two
paths produce identical reports.
"""

from __future__ import annotations

from fractions import Fraction

from . import __version__
from .blowup import Chart, Y_NAMES, extract_principal_part, germ_at, pullback
from .certify import AnalyzeOptions, TypeSignature, analyze, same_type
from .curves import ProjectivePoint, classify_ade, classify_points, singular_points
from .deform import DEFAULT_SAMPLES, DeformationFamily, check_family, mu_star
from .errors import BlowAdeError, ExponentOverflow, ParseError
from .newton import is_nondegenerate, newton_number
from .poly import Z_VARS, homogeneous_decompose, parse_polynomial
from .schemas import AnalysisRequest, Options
from .zeta import multiplicity_factor, varchenko_zeta

COMMANDS = ("analyze", "zeta", "classify", "blowup", "compare", "deform-check", "mu-star")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    """Malformed request: bad option values, unparsable input, wrong variables."""


def _poly(text, names=Z_VARS):
    try:
        return parse_polynomial(text, names)
    except (ParseError, ExponentOverflow) as e:
        raise UsageError(str(e)) from e


def _points(opts: Options):
    if opts.points is None:
        return None
    try:
        return tuple(ProjectivePoint.parse(p) for p in opts.points)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad --point value: {e}") from e


def _analyze_options(opts: Options) -> AnalyzeOptions:
    return AnalyzeOptions(truncation=opts.truncation, max_blow_order=opts.max_blow_order, points=_points(opts))


def do_analyze(req: AnalysisRequest) -> dict:
    f = _poly(req.input)
    report = analyze(f, _analyze_options(req.options))
    out = report.to_dict()
    if report.is_blow_ade:
        out["signature"] = TypeSignature.of(report).to_dict()
    if report.global_zeta is not None and req.options.level:
        out["multiplicity_factor"] = multiplicity_factor(report.global_zeta, req.options.level).to_dict()
    return out


def do_zeta(req: AnalysisRequest) -> dict:
    names = tuple(req.options.vars) if req.options.vars else Z_VARS
    f = _poly(req.input, names)
    if f.constant_term():
        raise UsageError("the germ must vanish at the origin")
    z = varchenko_zeta(f)
    out = {"zeta": z.to_json(), "zeta_string": str(z), "degree": z.degree,
           "nondegenerate": is_nondegenerate(f).to_dict()}
    try:
        out["newton_number"] = newton_number(f).value
    except BlowAdeError as e:
        out["newton_number"] = None
        out["newton_number_error"] = e.to_dict()
    if req.options.level:
        out["multiplicity_factor"] = multiplicity_factor(z, req.options.level).to_dict()
    return out


def do_classify(req: AnalysisRequest) -> dict:
    names = tuple(req.options.vars) if req.options.vars else ("x2", "x3")
    if len(names) != 2:
        raise UsageError("classify works on plane-curve germs: give exactly two variables")
    g = _poly(req.input, names)
    cls = classify_ade(g)
    return {
        "family": cls.type.family,
        "index": cls.type.index,
        "milnor": cls.type.milnor,
        "h": cls.h.to_string(names) if cls.h is not None else None,
        "change_rational": cls.change_rational,
    }


def do_blowup(req: AnalysisRequest) -> dict:
    f = _poly(req.input)
    opts = req.options
    dec = homogeneous_decompose(f)
    d = dec.order
    pts = classify_points(singular_points(dec.leading, _points(opts)))
    out = []
    for rep in pts:
        chart = Chart(rep.chart)
        pb = pullback(f, chart, opts.truncation)
        germ, change = germ_at(f, rep.point, opts.truncation)
        entry = {
            "coords": str(rep.point),
            "chart": chart.to_dict(),
            "type": rep.type.to_dict(),
            "strict_transform": pb.strict.to_string(Y_NAMES),
            "local_germ": germ.poly.to_string(("x1", "x2", "x3")),
        }
        try:
            pp = extract_principal_part(germ, rep.type, rep.classification, d, opts.max_blow_order, change)
            entry["principal_part"] = pp.to_dict()
        except BlowAdeError as e:
            entry["principal_part"] = None
            entry["failure"] = e.to_dict()
        out.append(entry)
    return {"d": d, "points": out}


def do_compare(req: AnalysisRequest) -> dict:
    if req.other is None:
        raise UsageError("compare needs two polynomials")
    a = analyze(_poly(req.input), _analyze_options(req.options))
    b = analyze(_poly(req.other), _analyze_options(req.options))
    out = {"first": a.to_dict(), "second": b.to_dict()}
    if a.is_blow_ade and b.is_blow_ade:
        verdict, matching = same_type(a, b)
        out.update(same_type=verdict, matching=[list(p) for p in matching])
    else:
        out.update(same_type=None, matching=[], note="both reports must be certified blow-ADE to compare")
    return out


def do_deform(req: AnalysisRequest) -> dict:
    opts = req.options
    try:
        samples = [Fraction(s) for s in opts.samples] if opts.samples else list(DEFAULT_SAMPLES)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad --samples value: {e}") from e
    try:
        fam = DeformationFamily.parse(req.input, samples)
    except (ParseError, ExponentOverflow) as e:
        raise UsageError(str(e)) from e
    verdict = check_family(fam, _analyze_options(opts), opts.trials, opts.seed)
    return verdict.to_dict()


def do_mu_star(req: AnalysisRequest) -> dict:
    f = _poly(req.input)
    return mu_star(f, req.options.trials, req.options.seed).to_dict()


HANDLERS = {
    "analyze": do_analyze,
    "zeta": do_zeta,
    "classify": do_classify,
    "blowup": do_blowup,
    "compare": do_compare,
    "deform-check": do_deform,
    "mu-star": do_mu_star,
}


def run(command: str, req: AnalysisRequest) -> tuple:
    """Return (exit_code, report dict)."""
    opts = req.options
    diagnostics = {"version": __version__, "truncation": opts.truncation, "seed": opts.seed,
                   "error": None, "notes": []}
    if command in ("deform-check", "mu-star"):
        diagnostics["notes"].append("mu2 is the minimum over random plane sections (heuristic-generic)")
    report = {
        "command": command,
        "input": req.input if req.other is None else [req.input, req.other],
        "options": opts.model_dump(),
        "result": None,
        "diagnostics": diagnostics,
    }
    if command not in HANDLERS:
        diagnostics["error"] = {"kind": "usage_error", "message": f"unknown command {command!r}"}
        return EXIT_USAGE, report
    try:
        report["result"] = HANDLERS[command](req)
        return EXIT_OK, report
    except (UsageError, ValueError) as e:
        # bare ValueErrors come from malformed user data, e.g. a --point that is not singular
        diagnostics["error"] = {"kind": "usage_error", "message": str(e)}
        return EXIT_USAGE, report
    except BlowAdeError as e:
        diagnostics["error"] = e.to_dict()
        return EXIT_DOMAIN, report
