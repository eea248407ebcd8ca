"""Service operations as plain functions.

All validation lives here so the CLI can call these directly in local
mode and the HTTP layer stays a thin adapter. ValueError marks a bad
request, LookupError a missing resource; the app module maps them to
422 and 404.
"""

from ..conjectures import run_checks
from ..dompath import primary_dom_path, secondary_dom_path
from ..graph_params import table_rows
from ..jaco_core import build_jaco
from ..sequences import SEQUENCE_IDS, seq_prefix, seq_start
from .schemas import (CheckRequest, CheckResponse, DomPathResponse,
                      GraphResponse, HealthResponse, ReportModel,
                      SequenceResponse, TableResponse, TableRow)

# request size caps; the J_n edge count grows quadratically, so the
# full edge list is only shipped for modest orders
TABLE_MAX_N = 20000
GRAPH_MAX_N = 2000
GRAPH_EDGE_LIST_MAX_N = 600
DOMPATH_MAX_N = 10 ** 6
CHECK_MAX_N = 200000
C7_TERMS_MAX = 64
SEQ_COUNT_MAX = 10000
SEQ_COUNT_MAX_EXPONENTIAL = 64


def health():
    return HealthResponse(status="ok")


def table(max_n):
    if not 1 <= max_n <= TABLE_MAX_N:
        raise ValueError(f"max_n must be in 1..{TABLE_MAX_N}")
    rows = [TableRow(n=r.n, back_degree=r.back_degree,
                     forward_degree=r.forward_degree, size=r.size,
                     max_degree_set=list(r.max_degree_set),
                     domination_number=r.domination_number,
                     diameter=r.diameter, max_degree=r.max_degree)
            for r in table_rows(max_n)]
    return TableResponse(max_n=max_n, rows=rows)


def graph(n):
    if not 1 <= n <= GRAPH_MAX_N:
        raise ValueError(f"n must be in 1..{GRAPH_MAX_N}")
    g = build_jaco(n)
    edges = g.edges() if n <= GRAPH_EDGE_LIST_MAX_N else None
    return GraphResponse(n=n, size=g.edge_count(),
                         lo=list(g.lo[1:]), hi=list(g.hi[1:]), edges=edges)


def dompath(n, secondary=False):
    if not 1 <= n <= DOMPATH_MAX_N:
        raise ValueError(f"n must be in 1..{DOMPATH_MAX_N}")
    path = secondary_dom_path(n) if secondary else primary_dom_path(n)
    return DomPathResponse(n=n, kind=path.kind,
                           vertices=list(path.vertices),
                           gamma_set=list(path.gamma_set))


def sequence(seq_id, count, prepend_artificial=False):
    if seq_id not in SEQUENCE_IDS:
        raise LookupError(f"unknown sequence id {seq_id!r}")
    cap = SEQ_COUNT_MAX_EXPONENTIAL if seq_id == "A000149" else SEQ_COUNT_MAX
    if not 0 <= count <= cap:
        raise ValueError(f"count for {seq_id} must be in 0..{cap}")
    return SequenceResponse(id=seq_id, start=seq_start(seq_id), count=count,
                            prepend_artificial=prepend_artificial,
                            terms=seq_prefix(seq_id, count, prepend_artificial))


def check(req: CheckRequest):
    if not 1 <= req.max_n <= CHECK_MAX_N:
        raise ValueError(f"max_n must be in 1..{CHECK_MAX_N}")
    if not 1 <= req.c7_terms <= C7_TERMS_MAX:
        raise ValueError(f"c7_terms must be in 1..{C7_TERMS_MAX}")
    reports = run_checks(req.conjectures, req.max_n, req.c7_terms)
    models = [ReportModel(**r.as_dict()) for r in reports]
    return CheckResponse(max_n=req.max_n, c7_terms=req.c7_terms,
                         all_verified=all(m.status == "verified" for m in models),
                         reports=models)
