"""Execute a scenario's checks, concurrently unless failing fast."""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .checks import CHECK_FUNCTIONS, Builder, Config


@dataclass
class CheckResult:
    index: int
    kind: str
    name: str
    verdict: str  # "pass", "fail" or "error"
    artifacts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    error: str = None
    seconds: float = 0.0


@dataclass
class Report:
    source: str
    config: Config
    results: list
    stopped_early: bool = False

    def counts(self):
        out = {"pass": 0, "fail": 0, "error": 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    def exit_code(self):
        c = self.counts()
        if c["error"]:
            return 2
        if c["fail"]:
            return 1
        return 0


def worker_limit(default=None):
    raw = os.environ.get("COHESION_LAB_WORKERS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return default or min(8, os.cpu_count() or 1)


def _run_one(builder, index, stanza):
    start = time.perf_counter()
    kind = stanza.check_kind
    try:
        out = CHECK_FUNCTIONS[kind](builder, stanza.params())
        res = CheckResult(index, kind, stanza.name, "pass" if out.passed else "fail",
                          out.artifacts, out.notes)
    except Exception as exc:  # reported per check, never raised
        res = CheckResult(index, kind, stanza.name, "error",
                          error=f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - start
    return res


def run(scenario, config=None, fail_fast=False, workers=None):
    config = config or Config()
    builder = Builder(scenario, config)
    checks = list(enumerate(scenario.checks))
    results = []
    stopped = False
    if fail_fast or len(checks) <= 1:
        for i, st in checks:
            res = _run_one(builder, i, st)
            results.append(res)
            if fail_fast and res.verdict != "pass":
                stopped = i < len(checks) - 1
                break
    else:
        with ThreadPoolExecutor(max_workers=workers or worker_limit()) as pool:
            futures = [pool.submit(_run_one, builder, i, st) for i, st in checks]
            results = [f.result() for f in futures]
    return Report(scenario.source, config, results, stopped)
