"""Text and JSON renderings of a :class:`Report`.

The JSON document leaves out timings so that equal inputs give equal bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

SCHEMA_VERSION = 1


def _jsonable(v):
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return v if v == v and abs(v) != float("inf") else str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def to_json_obj(report):
    return {
        "schema_version": SCHEMA_VERSION,
        "source": report.source,
        "config": report.config.as_dict(),
        "summary": report.counts(),
        "stopped_early": report.stopped_early,
        "exit_code": report.exit_code(),
        "checks": [{
            "index": r.index,
            "kind": r.kind,
            "name": r.name,
            "verdict": r.verdict,
            "artifacts": _jsonable(r.artifacts),
            "notes": list(r.notes),
            "error": r.error,
        } for r in report.results],
    }


def to_json(report):
    return json.dumps(to_json_obj(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _value(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_value(x)}" for k, x in v.items()) + "}"
    return str(v)


def to_text(report):
    lines = [f"scenario: {report.source or '<string>'}"]
    for r in report.results:
        label = f"{r.kind} {r.name}" if r.name else r.kind
        lines.append(f"[{r.verdict.upper()}] #{r.index} {label} ({r.seconds:.3f} s)")
        for k, v in r.artifacts.items():
            if isinstance(v, str) and (v.startswith(k + " ") or v.startswith(k + ":")):
                lines.append(f"    {v}")
            else:
                lines.append(f"    {k}: {_value(v)}")
        for n in r.notes:
            lines.append(f"    note: {n}")
        if r.error:
            lines.append(f"    error: {r.error}")
    c = report.counts()
    tail = f"{c['pass']} passed, {c['fail']} failed, {c['error']} errored"
    if report.stopped_early:
        tail += " (stopped at first failure)"
    lines.append(tail)
    return "\n".join(lines) + "\n"


def load_schema():
    text = resources.files("cohesion_lab.cli").joinpath("report_schema.json").read_text("utf-8")
    return json.loads(text)
