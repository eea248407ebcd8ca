"""Output rendering over plain payload dicts.

Every CLI command funnels through these functions, whether the payload
came from an in-process call or from the HTTP service as JSON, so both
modes emit identical bytes. Formats: text (human), csv, json, and for
graphs additionally dot and edges.
"""

import json

TABLE_COLUMNS = ("n", "back_degree", "forward_degree", "size",
                 "max_degree_set", "domination_number", "diameter",
                 "max_degree")


def _dumps(payload):
    return json.dumps(payload, indent=2) + "\n"


def _vset(vertices):
    return "{" + ",".join(f"v{v}" for v in vertices) + "}"


def render_table(rows, fmt):
    if fmt == "json":
        return _dumps(rows)
    if fmt == "csv":
        out = [",".join(TABLE_COLUMNS)]
        for r in rows:
            out.append(",".join((
                str(r["n"]), str(r["back_degree"]), str(r["forward_degree"]),
                str(r["size"]),
                ";".join(str(v) for v in r["max_degree_set"]),
                str(r["domination_number"]), str(r["diameter"]),
                str(r["max_degree"]))))
        return "\n".join(out) + "\n"
    if fmt == "text":
        cells = [list(TABLE_COLUMNS)]
        for r in rows:
            cells.append([
                str(r["n"]), str(r["back_degree"]), str(r["forward_degree"]),
                str(r["size"]), _vset(r["max_degree_set"]),
                str(r["domination_number"]), str(r["diameter"]),
                str(r["max_degree"])])
        widths = [max(len(row[c]) for row in cells) for c in range(len(TABLE_COLUMNS))]
        lines = ["  ".join(row[c].ljust(widths[c]) for c in range(len(row))).rstrip()
                 for row in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"table cannot be rendered as {fmt!r}")


def render_graph(payload, fmt):
    n = payload["n"]
    edges = payload.get("edges")
    if fmt == "json":
        return _dumps(payload)
    if fmt == "text":
        lines = [f"vertices: {n}", f"size: {payload['size']}"]
        lo, hi = payload["lo"], payload["hi"]
        for i in range(1, n + 1):
            lines.append(f"v{i}: {lo[i - 1]}..{hi[i - 1]}")
        return "\n".join(lines) + "\n"
    if edges is None:
        raise ValueError(f"edge list unavailable, format {fmt!r} needs it")
    if fmt == "edges":
        return "".join(f"{a} {b}\n" for a, b in edges)
    if fmt == "csv":
        return "i,j\n" + "".join(f"{a},{b}\n" for a, b in edges)
    if fmt == "dot":
        lines = ["graph jaco {"]
        lines.extend(f"  v{i};" for i in range(1, n + 1))
        lines.extend(f"  v{a} -- v{b};" for a, b in edges)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"graph cannot be rendered as {fmt!r}")


def render_dompath(payload, fmt):
    if fmt == "json":
        return _dumps(payload)
    verts = payload["vertices"]
    gamma = payload["gamma_set"]
    if fmt == "text":
        line = " ".join(f"v{v}" for v in verts)
        # the descending variant is conventionally printed bare
        if payload["kind"] == "primary" and gamma:
            line += " | gamma: " + " ".join(f"v{v}" for v in gamma)
        return line + "\n"
    if fmt == "csv":
        in_gamma = set(gamma)
        out = ["position,vertex,in_gamma_set"]
        out.extend(f"{p},{v},{int(v in in_gamma)}"
                   for p, v in enumerate(verts, start=1))
        return "\n".join(out) + "\n"
    raise ValueError(f"dom-path cannot be rendered as {fmt!r}")


def render_seq(payload, fmt):
    if fmt == "json":
        return _dumps(payload)
    terms = payload["terms"]
    if fmt == "text":
        return " ".join(str(v) for v in terms) + "\n"
    if fmt == "csv":
        start = payload["start"]
        if payload["prepend_artificial"]:
            start -= 1
        out = ["index,value"]
        out.extend(f"{start + k},{v}" for k, v in enumerate(terms))
        return "\n".join(out) + "\n"
    raise ValueError(f"sequence cannot be rendered as {fmt!r}")


def render_reports(reports, fmt):
    if fmt == "json":
        return _dumps(reports)
    if fmt == "csv":
        out = ["id,variable,lo,hi,status,witness_index,witness_expected,"
               "witness_actual,margin,offset"]
        for r in reports:
            wit = r["witness"] or ("", "", "")
            out.append(",".join(str(x) for x in (
                r["id"], r["variable"], r["range"][0], r["range"][1],
                r["status"], wit[0], wit[1], wit[2],
                r["margin"], r["offset"])))
        return "\n".join(out) + "\n"
    if fmt == "text":
        lines = []
        for r in reports:
            lo, hi = r["range"]
            line = f"{r['id']} {r['variable']} in [{lo}, {hi}]: {r['status']}"
            if r["witness"]:
                idx, expected, actual = r["witness"]
                line += (f" at {r['variable']}={idx}"
                         f" (expected {expected}, actual {actual})")
            line += f"; margin={r['margin']}; offset={r['offset']}"
            for key, val in r["metadata"].items():
                line += f"; {key}={val}"
            lines.append(line)
        return "\n".join(lines) + "\n"
    raise ValueError(f"reports cannot be rendered as {fmt!r}")
