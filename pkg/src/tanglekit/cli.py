"""Command-line front end.

A thin client over the service layer: each subcommand builds a request
model and dispatches it either in process (the default) or to a running
service instance given with --server.  Exit codes: 0 on success, 1 when a
verification fails, 2 on parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import tanglekit.service.app as service
from .service import models as m
from .service.models import (DiagramRequest, HomologyRequest, KcheckRequest,
                             ReducedRequest, RelcheckRequest, SkeinRequest)

EXIT_OK, EXIT_FAILED_CHECK, EXIT_INVALID = 0, 1, 2


def _color(text: str, good: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    code = "32" if good else "31"
    return f"\x1b[{code}m{text}\x1b[0m"


def _verdict(flag: bool) -> str:
    return _color("PASS" if flag else "FAIL", flag)


class _Remote:
    """Dispatch requests to a running service over HTTP."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def call(self, endpoint: str, request, response_model):
        import httpx

        resp = httpx.post(f"{self.base_url}/{endpoint}",
                          json=request.model_dump(), timeout=600.0)
        if resp.status_code == 422:
            detail = resp.json().get("detail", resp.text)
            raise service.InvalidInput(str(detail))
        resp.raise_for_status()
        return response_model.model_validate(resp.json())


class _Local:
    """Dispatch requests to the in-process handlers."""

    HANDLERS = {
        "parse": service.handle_parse,
        "jones": service.handle_jones,
        "homology": service.handle_homology,
        "reduced": service.handle_reduced,
        "euler": service.handle_euler,
        "skein": service.handle_skein,
        "relcheck": service.handle_relcheck,
        "kcheck": service.handle_kcheck,
    }

    def call(self, endpoint: str, request, response_model):
        return self.HANDLERS[endpoint](request)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise service.InvalidInput(f"cannot read {path}: {exc}") from exc


def _dims_table(dims) -> str:
    lines = [f"{'i':>5} {'j':>5} {'dim':>5}"]
    lines.extend(f"{e.i:>5} {e.j:>5} {e.dim:>5}" for e in dims)
    return "\n".join(lines)


def _dims_json(dims) -> str:
    return json.dumps([{"i": e.i, "j": e.j, "dim": e.dim} for e in dims],
                      separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Quantum sl(2) tangle invariants: Jones polynomial, "
                    "bigraded link homology and consistency suites.")
    parser.add_argument("--server", metavar="URL",
                        help="dispatch to a running service instead of computing in process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help=".tgl diagram file, or - for stdin")

    p = sub.add_parser("parse", help="validate a diagram and print its canonical form")
    add_file(p)

    p = sub.add_parser("jones", help="Jones polynomial of a link diagram")
    add_file(p)

    p = sub.add_parser("homology", help="bigraded link homology dimensions")
    add_file(p)
    p.add_argument("--standard", action="store_true",
                   help="use the standard (unsheared) grading")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("reduced", help="reduced homology of a marked link")
    add_file(p)
    p.add_argument("--mark", required=True, metavar="C:K",
                   help="marked strand: leg K (1 or 2) of the C-th cap layer")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("euler", help="Euler characteristic vs. Jones oracle")
    add_file(p)

    p = sub.add_parser("skein", help="verify the skein long exact sequence at one crossing")
    add_file(p)
    p.add_argument("--crossing", type=int, required=True, metavar="S",
                   help="1-based crossing index")

    p = sub.add_parser("relcheck", help="run the tangle-relation suite")
    p.add_argument("--max-width", type=int, default=5)
    p.add_argument("--model", choices=("rt", "ktheory"), default="rt")

    p = sub.add_parser("kcheck", help="Grothendieck-group vs. matrix intertwining suite")
    p.add_argument("--max-width", type=int, default=5)
    p.add_argument("--shifts", action="store_true",
                   help="also report the crossing-scalar diagnostic")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8536)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        uvicorn.run(service.app, host=args.host, port=args.port)
        return EXIT_OK

    client = _Remote(args.server) if args.server else _Local()
    try:
        if args.command == "parse":
            req = DiagramRequest(source=_read_source(args.file))
            out = client.call("parse", req, m.ParseResponse)
            print(f"({out.n},{out.m}) tangle, {out.layers} layers, "
                  f"{out.crossings} crossings"
                  + (f", {out.components} components" if out.components is not None else ""))
            print(out.canonical, end="")
            return EXIT_OK

        if args.command == "jones":
            req = DiagramRequest(source=_read_source(args.file))
            out = client.call("jones", req, m.JonesResponse)
            print(out.jones)
            return EXIT_OK

        if args.command == "homology":
            req = HomologyRequest(source=_read_source(args.file),
                                  standard=args.standard)
            out = client.call("homology", req, m.HomologyResponse)
            if args.as_json:
                print(_dims_json(out.dims))
            else:
                kind = "standard Khovanov" if out.standard else "sheared"
                print(f"{kind} homology, total dimension {out.total}")
                print(_dims_table(out.dims))
                print(f"euler: {out.euler}")
            return EXIT_OK

        if args.command == "reduced":
            req = ReducedRequest(source=_read_source(args.file), mark=args.mark)
            out = client.call("reduced", req, m.ReducedResponse)
            if args.as_json:
                print(_dims_json(out.dims))
            else:
                print(f"reduced homology, total dimension {out.total}")
                print(_dims_table(out.dims))
                print(f"euler: {out.euler}")
                print(f"normalized jones: {out.normalized_jones} "
                      f"[{_verdict(out.euler_matches_jones)}]")
            return EXIT_OK if out.euler_matches_jones else EXIT_FAILED_CHECK

        if args.command == "euler":
            req = DiagramRequest(source=_read_source(args.file))
            out = client.call("euler", req, m.EulerResponse)
            print(f"euler characteristic (sign-corrected, {out.components} components): {out.euler}")
            print(f"jones from the matrix functor:            {out.jones}")
            print(f"agreement: {_verdict(out.matches)}")
            return EXIT_OK if out.matches else EXIT_FAILED_CHECK

        if args.command == "skein":
            req = SkeinRequest(source=_read_source(args.file),
                               crossing=args.crossing)
            out = client.call("skein", req, m.SkeinResponse)
            print(f"skein check at crossing {out.crossing}")
            print(f"  d^2 = 0:                 {_verdict(out.d_squared_zero)}")
            print(f"  sub = one-smoothing:     {_verdict(out.sub_matches_one_smoothing)}")
            print(f"  quotient = zero-smoothing: {_verdict(out.quotient_matches_zero_smoothing)}")
            print(f"  exactness bookkeeping:   {_verdict(out.exactness_ok)}")
            print(f"  euler identity:          {_verdict(out.euler_ok)}")
            for line in out.details:
                print(f"  ! {line}")
            return EXIT_OK if out.ok else EXIT_FAILED_CHECK

        if args.command == "relcheck":
            req = RelcheckRequest(max_width=args.max_width, model=args.model)
            out = client.call("relcheck", req, m.RelcheckResponse)
            print(f"relation suite, model={out.model}, width<={out.max_width}")
            for family, (good, bad) in sorted(out.families.items()):
                status = _verdict(bad == 0)
                print(f"  {family:<12} {good:>4} passed {bad:>3} failed  {status}")
            print(f"total: {out.passed} passed, {out.failed} failed")
            for key in out.failures:
                print(f"  ! {key}")
            return EXIT_OK if out.ok else EXIT_FAILED_CHECK

        if args.command == "kcheck":
            req = KcheckRequest(max_width=args.max_width, shifts=args.shifts)
            out = client.call("kcheck", req, m.KcheckResponse)
            print(f"intertwining suite, width<={out.max_width}: "
                  f"{out.checked} checks, {len(out.failures)} failures "
                  f"[{_verdict(out.ok)}]")
            for key in out.failures:
                print(f"  ! {key}")
            if out.shift_report:
                print("crossing-scalar diagnostic:")
                for key, val in out.shift_report.items():
                    label = f"type {key}" if key.isdigit() else key
                    print(f"  {label}: {val}")
            return EXIT_OK if out.ok else EXIT_FAILED_CHECK

    except service.InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
