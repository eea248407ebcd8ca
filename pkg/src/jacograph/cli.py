"""Command line front end.

Thin client over the service api functions: local mode calls them in
process, --server sends the same request to a running instance over
HTTP. Both paths produce identical payload dicts and share one
renderer, so output bytes do not depend on the mode.

Exit codes: 0 success (all checks verified), 1 a conjecture check found
a counterexample, 2 usage or internal error.
"""

import argparse
import sys

from .render import (render_dompath, render_graph, render_reports,
                     render_seq, render_table)
from .sequences import SEQUENCE_IDS
from .service import api
from .service.schemas import CheckRequest


def _add_server(sub):
    sub.add_argument("--server", metavar="URL",
                     help="base URL of a running service; default is in-process")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jaco",
        description="Linear Jaco graph tables, dom-paths, sequences, "
                    "and conjecture checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="parameter table for orders 1..max_n")
    p.add_argument("--max-n", dest="max_n", type=int, default=32)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_server(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("check", help="run conjecture checks")
    p.add_argument("--max-n", dest="max_n", type=int, default=10000)
    p.add_argument("--conjecture", dest="conjectures", action="append",
                   metavar="ID",
                   help="group token (P1, C1..C7) or exact report id; "
                        "repeatable; default all")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_server(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("graph", help="export one graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json", "dot", "edges"),
                   default="edges")
    _add_server(p)
    p.set_defaults(handler=_cmd_graph)

    p = sub.add_parser("dompath", help="dominating path for one graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--secondary", action="store_true",
                   help="descend from v_n instead of growing from v_1")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_server(p)
    p.set_defaults(handler=_cmd_dompath)

    p = sub.add_parser("seq", help="emit sequence terms")
    p.add_argument("--id", dest="seq_id", required=True, choices=SEQUENCE_IDS)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    _add_server(p)
    p.set_defaults(handler=_cmd_seq)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)

    return parser


def _fetch(args, local, remote):
    if getattr(args, "server", None):
        import httpx
        with httpx.Client(base_url=args.server, timeout=None) as client:
            resp = remote(client)
            if resp.status_code >= 400:
                try:
                    detail = resp.json().get("detail", resp.text)
                except ValueError:
                    detail = resp.text
                raise RuntimeError(f"server returned {resp.status_code}: {detail}")
            return resp.json()
    return local().model_dump(mode="json")


def _cmd_table(args):
    payload = _fetch(
        args,
        lambda: api.table(args.max_n),
        lambda c: c.get("/table", params={"max_n": args.max_n}))
    sys.stdout.write(render_table(payload["rows"], args.format))
    return 0


def _cmd_check(args):
    body = CheckRequest(conjectures=args.conjectures, max_n=args.max_n)
    payload = _fetch(
        args,
        lambda: api.check(body),
        lambda c: c.post("/check", json=body.model_dump(mode="json")))
    sys.stdout.write(render_reports(payload["reports"], args.format))
    return 0 if payload["all_verified"] else 1


def _cmd_graph(args):
    payload = _fetch(
        args,
        lambda: api.graph(args.n),
        lambda c: c.get(f"/graph/{args.n}"))
    sys.stdout.write(render_graph(payload, args.format))
    return 0


def _cmd_dompath(args):
    payload = _fetch(
        args,
        lambda: api.dompath(args.n, args.secondary),
        lambda c: c.get(f"/dompath/{args.n}",
                        params={"secondary": args.secondary}))
    sys.stdout.write(render_dompath(payload, args.format))
    return 0


def _cmd_seq(args):
    payload = _fetch(
        args,
        lambda: api.sequence(args.seq_id, args.count),
        lambda c: c.get(f"/sequence/{args.seq_id}",
                        params={"count": args.count}))
    sys.stdout.write(render_seq(payload, args.format))
    return 0


def _cmd_serve(args):
    import uvicorn
    uvicorn.run("jacograph.service.app:app", host=args.host, port=args.port)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
