"""Byte-stable text, JSON and CSV serialisation of reports."""

from __future__ import annotations

import csv
import io
import json
import math

from annideal.corpus import CorpusReport, CrosscheckReport
from annideal.graphs import GraphInvariants

ATLAS_FIELDS = ("ring", "order", "vertex_count", "edge_count", "diameter", "girth", "is_complete", "is_star")


def _num(x):
    if x is None:
        return None
    return "inf" if x == math.inf else int(x)


def _dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def _results(obj):
    if isinstance(obj, CorpusReport):
        return obj.results
    return list(obj)


def report_json(obj):
    if isinstance(obj, GraphInvariants):
        return _dumps(obj.to_json())
    if isinstance(obj, CrosscheckReport):
        return _dumps({"max_n": obj.max_n, "total": obj.total, "agreed": obj.agreed,
                       "discrepancy": obj.discrepancy})
    return _dumps([r.to_json() for r in _results(obj)])


def report_text(obj):
    if isinstance(obj, GraphInvariants):
        return "".join(f"{k}: {v}\n" for k, v in obj.to_json().items())
    if isinstance(obj, CrosscheckReport):
        line = f"crosscheck Z_n, 2 <= n <= {obj.max_n}: {obj.agreed}/{obj.total} agree\n"
        if obj.discrepancy:
            line += f"first discrepancy: {obj.discrepancy}\n"
        return line
    results = _results(obj)
    lines = []
    by_ring = {}
    for r in results:
        by_ring.setdefault(r.ring, []).append(r)
    for ring, rs in by_ring.items():
        c = {"pass": 0, "fail": 0, "not-applicable": 0}
        for r in rs:
            c[r.verdict] += 1
        lines.append(f"{ring}: {c['pass']} pass, {c['fail']} fail, {c['not-applicable']} n/a")
        for r in rs:
            if r.verdict == "fail":
                lines.append(f"  FAIL {r.check}: {r.witness}")
    total = {"pass": 0, "fail": 0, "not-applicable": 0}
    for r in results:
        total[r.verdict] += 1
    lines.append(f"total: {len(by_ring)} rings, {total['pass']} pass, {total['fail']} fail, "
                 f"{total['not-applicable']} n/a")
    return "\n".join(lines) + "\n"


def report_verbose(results):
    """One line per check with its witness."""
    return "".join(f"{r.ring} {r.check}: {r.verdict} -- {r.witness}\n" for r in results)


def report_csv(obj):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ATLAS_FIELDS)
    rings = obj.rings if isinstance(obj, CorpusReport) else list(obj)
    for s in rings:
        diam = _num(s.diameter)
        w.writerow([s.ring, s.order, s.vertex_count, s.edge_count,
                    "null" if diam is None else diam, _num(s.girth),
                    str(s.is_complete).lower(), str(s.is_star).lower()])
    return buf.getvalue()


def render(obj, format):
    if format == "json":
        return report_json(obj)
    if format == "text":
        return report_text(obj)
    if format == "csv":
        return report_csv(obj)
    raise ValueError(f"unknown report format {format!r}")


def emit_report(obj, format, sink):
    """Write ``obj`` to the binary or text stream ``sink``; returns the byte count."""
    data = render(obj, format).encode()
    try:
        sink.write(data)
    except TypeError:
        sink.write(data.decode())
    return len(data)

