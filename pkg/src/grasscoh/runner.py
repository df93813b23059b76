"""Sweep orchestration and the JSONL result cache."""

from __future__ import annotations

import json
import logging
import os
import threading
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .endo import check_lemma_m2
from .filtration import CHECKERS
from .lefschetz import check_hard_lefschetz
from .qseries import prop5_check
from .report import HOLDS, ConjectureReport

log = logging.getLogger("grasscoh")

CACHE_ENV = "GRASSCOH_CACHE"
DEFAULT_CACHE = ".grasscoh-cache.jsonl"

M_CLAIMS = ("conj1", "conj2", "conj3", "conj4", "conj4prime")
BOX_CLAIMS = ("prop5", "lefschetz", "lemma_m2")
SWEEP_CLAIMS = M_CLAIMS + BOX_CLAIMS
DEFAULT_CLAIMS = M_CLAIMS

_M_RANGE = {"conj1": 0, "conj2": 1, "conj3": 1, "conj4": 3, "conj4prime": 3}


@dataclass
class SweepConfig:
    k_max: int = 4
    l_max: int = 5
    k_min: int = 1
    l_min: int = 1
    m_policy: str = "all"  # all | boundary | explicit
    m_values: tuple = ()
    claims: tuple = DEFAULT_CLAIMS
    jobs: int = 1
    out: Optional[str] = None
    cache: Optional[str] = None
    force: bool = False
    transposed: bool = False  # also run l < k
    timing: bool = True

    def __post_init__(self):
        if self.k_min > self.k_max or self.l_min > self.l_max:
            raise ValueError("empty k or l range")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.m_policy not in ("all", "boundary", "explicit"):
            raise ValueError(f"unknown m policy {self.m_policy!r}")
        if self.m_policy == "explicit" and not self.m_values:
            raise ValueError("explicit m policy needs at least one m")
        unknown = set(self.claims) - set(SWEEP_CLAIMS)
        if unknown:
            raise ValueError(f"unknown claims {sorted(unknown)}")


def run_instance(claim: str, k: int, l: int, m: Optional[int]) -> ConjectureReport:
    if claim in CHECKERS:
        return CHECKERS[claim](k, l, m)
    if claim == "prop5":
        return prop5_check(k, l)
    if claim == "lefschetz":
        return check_hard_lefschetz(k, l)
    if claim == "lemma_m2":
        return check_lemma_m2(k, l)
    raise ValueError(f"unknown claim {claim!r}")


def _worker(task) -> dict:
    return run_instance(*task).to_dict()


def _m_values(cfg: SweepConfig, claim: str, k: int) -> list:
    lo = _M_RANGE[claim]
    if cfg.m_policy == "all":
        return list(range(lo, k + 1))
    if cfg.m_policy == "boundary":
        return sorted({m for m in (1, k) if lo <= m <= k})
    return [m for m in cfg.m_values if lo <= m <= k]


def instances(cfg: SweepConfig) -> list:
    tasks = []
    for k in range(cfg.k_min, cfg.k_max + 1):
        for l in range(cfg.l_min, cfg.l_max + 1):
            if l < k and not cfg.transposed:
                continue
            for claim in cfg.claims:
                if claim in BOX_CLAIMS:
                    tasks.append((claim, k, l, None))
                else:
                    tasks.extend((claim, k, l, m) for m in _m_values(cfg, claim, k))
    return tasks


def default_cache_path() -> str:
    return os.environ.get(CACHE_ENV, DEFAULT_CACHE)


class ReportCache:
    """Append-only JSONL store; the last record for a (claim, k, l, m) key wins."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.records: dict = {}
        self.bad_lines = 0
        self._load()

    def _load(self):
        if not self.path.exists():
            return
        with self.path.open() as fh:
            for n, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rep = ConjectureReport.from_dict(json.loads(line))
                except (ValueError, TypeError, KeyError) as exc:
                    self.bad_lines += 1
                    log.warning("ignoring corrupted cache line %s:%d (%s)", self.path, n, exc)
                    continue
                self.records[rep.key] = rep

    def get(self, key) -> Optional[ConjectureReport]:
        return self.records.get(key)

    def append(self, report: ConjectureReport) -> None:
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(report.to_json() + "\n")
            self.records[report.key] = report


def persist_report(report: ConjectureReport, cache) -> None:
    if not isinstance(cache, ReportCache):
        cache = ReportCache(cache)
    cache.append(report)


@dataclass
class SweepResult:
    reports: list
    skipped: int = 0
    computed: int = 0
    bad_cache_lines: int = 0
    counts: dict = field(default_factory=dict)

    @property
    def any_failed(self) -> bool:
        return any(r.failed for r in self.reports)


def _log(rep: ConjectureReport, cached: bool = False):
    tag = " (cached)" if cached else f" ({rep.elapsed_ms} ms)"
    m = "" if rep.m is None else f" m={rep.m}"
    log.info("[%s] %s k=%d l=%d%s%s", rep.verdict, rep.claim, rep.k, rep.l, m, tag)


def sweep(cfg: SweepConfig) -> SweepResult:
    cache = ReportCache(cfg.cache) if cfg.cache else None
    tasks = instances(cfg)
    done: list = []
    todo: list = []
    skipped = 0
    for task in tasks:
        hit = cache.get(task) if cache else None
        if hit is not None and hit.verdict == HOLDS and not cfg.force:
            skipped += 1
            done.append(hit)
            _log(hit, cached=True)
        else:
            todo.append(task)

    def finish(rep: ConjectureReport):
        if not cfg.timing:
            rep.elapsed_ms = 0
        if cache:
            cache.append(rep)
        done.append(rep)
        _log(rep)

    if cfg.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = [pool.submit(_worker, t) for t in todo]
            for fut in as_completed(futures):
                finish(ConjectureReport.from_dict(fut.result()))
    else:
        for t in todo:
            finish(run_instance(*t))

    done.sort(key=ConjectureReport.sort_key)
    counts: dict = {}
    for rep in done:
        counts[rep.verdict] = counts.get(rep.verdict, 0) + 1
    return SweepResult(done, skipped, len(todo), cache.bad_lines if cache else 0, counts)


def write_reports(reports: Iterable[ConjectureReport], fh) -> None:
    for rep in sorted(reports, key=ConjectureReport.sort_key):
        fh.write(rep.to_json() + "\n")
