"""Command-line client.

Runs the service handlers in-process by default; with ``--server URL`` the
same request is posted to a running ``blowade serve`` instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .schemas import AnalysisRequest, Options
from .service import COMMANDS, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p):
    p.add_argument("--truncation", type=int, default=64, metavar="N", help="truncation order of power series")
    p.add_argument("--max-blow-order", type=int, default=None, metavar="M")
    p.add_argument("--samples", default=None, help='comma-separated s values, e.g. "0,1/7,1/3"')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=8, help="random plane sections for mu2")
    p.add_argument("--point", action="append", default=None, metavar="a:b:c",
                   help="singular point of the tangent cone (repeatable); skips solving")
    p.add_argument("--vars", default=None, help="comma-separated variable names (classify, zeta)")
    p.add_argument("--level", type=int, default=None, help="also report this zeta multiplicity factor")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--corpus", default=None, metavar="DIR", help="run over every .poly file in DIR")
    p.add_argument("--server", default=None, metavar="URL", help="post to a running service")


def build_parser():
    parser = _Parser(prog="blowade", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd)
        p.add_argument("input", nargs="?", help="polynomial text, or a path to a file holding one")
        if cmd == "compare":
            p.add_argument("other", nargs="?")
        _common(p)
    s = sub.add_parser("serve", help="start the HTTP service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8000)
    return parser


def read_input(text: str) -> str:
    """Inline text, or the first non-comment content of a file."""
    path = Path(text)
    if len(text) < 4096 and path.suffix in (".poly", ".txt") and path.is_file():
        lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
        return " ".join(ln for ln in lines if ln)
    return text


def _options(args) -> Options:
    split = lambda s: [x.strip() for x in s.split(",") if x.strip()] if s else None
    return Options(
        truncation=args.truncation, max_blow_order=args.max_blow_order, samples=split(args.samples),
        seed=args.seed, trials=args.trials, points=args.point, vars=split(args.vars), level=args.level,
    )


def _remote(url, command, req):
    import httpx

    r = httpx.post(url.rstrip("/") + "/" + command, json=req.model_dump(), timeout=600)
    code = {200: EXIT_OK, 422: EXIT_DOMAIN}.get(r.status_code, EXIT_USAGE)
    body = r.json()
    if "command" not in body:
        body = {"command": command, "input": req.input, "options": req.options.model_dump(), "result": None,
                "diagnostics": {"error": {"kind": "usage_error", "message": json.dumps(body.get("detail"))}}}
    return code, body


def _text(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(
            f"{pad}-\n{_text(v, indent + 1)}" if isinstance(v, (dict, list)) else f"{pad}- {v}" for v in value
        )
    return f"{pad}{value}"


def emit(report, fmt):
    if fmt == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(_text(report))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run("blowade.api:app", host=args.host, port=args.port)
        return EXIT_OK
    try:
        opts = _options(args)
    except ValueError as e:
        print(f"blowade: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.corpus:
        files = sorted(Path(args.corpus).glob("*.poly"))
        if not files:
            print(f"blowade: error: no .poly files in {args.corpus}", file=sys.stderr)
            return EXIT_USAGE
        inputs = [(f.name, read_input(str(f))) for f in files]
    else:
        if args.input is None:
            print("blowade: error: an input polynomial is required", file=sys.stderr)
            return EXIT_USAGE
        inputs = [(None, read_input(args.input))]
    other = getattr(args, "other", None)
    if args.command == "compare" and other is None and not args.corpus:
        print("blowade: error: compare needs two polynomials", file=sys.stderr)
        return EXIT_USAGE
    worst, reports = EXIT_OK, []
    for name, text in inputs:
        req = AnalysisRequest(input=text, other=read_input(other) if other else None, options=opts)
        code, report = _remote(args.server, args.command, req) if args.server else run(args.command, req)
        if name is not None:
            report = {"file": name, **report}
        reports.append(report)
        worst = max(worst, code)
    emit(reports[0] if not args.corpus else {"corpus": args.corpus, "reports": reports}, args.format)
    return worst


if __name__ == "__main__":
    sys.exit(main())
