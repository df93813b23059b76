"""Verdict records shared by every checker."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from . import __version__

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

CLAIMS = (
    "conj1",
    "conj2",
    "conj3",
    "conj4",
    "conj4prime",
    "prop5",
    "lefschetz",
    "lemma_m2",
    "identity-check",
)


class _Clock:
    elapsed_ms = 0


@contextmanager
def timed():
    clock = _Clock()
    start = time.perf_counter()
    try:
        yield clock
    finally:
        clock.elapsed_ms = int(round((time.perf_counter() - start) * 1000))


@dataclass
class ConjectureReport:
    claim: str
    k: int
    l: int
    m: Optional[int]
    verdict: str
    witness: Optional[dict] = None
    elapsed_ms: int = 0
    engine_version: str = __version__
    # In-memory extras (certificates, stage results); never serialized.
    details: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, NOT_APPLICABLE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAILS and not self.witness:
            raise ValueError("a failing report must carry a witness")
        if self.verdict == NOT_APPLICABLE and not (self.witness and "precondition" in self.witness):
            raise ValueError("a not-applicable report must name the violated precondition")

    @classmethod
    def make(cls, claim, k, l, m, witness, clock=None, details=None) -> "ConjectureReport":
        """``holds`` when ``witness`` is None, else ``fails`` carrying it."""
        verdict = HOLDS if witness is None else FAILS
        if witness is not None:
            witness = dict(witness)
            witness.setdefault("replay", replay_command(claim, k, l, m))
        return cls(
            claim, k, l, m, verdict, witness,
            elapsed_ms=clock.elapsed_ms if clock else 0,
            details=details or {},
        )

    @classmethod
    def not_applicable(cls, claim, k, l, m, precondition: str) -> "ConjectureReport":
        return cls(claim, k, l, m, NOT_APPLICABLE, {"precondition": precondition})

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    @property
    def failed(self) -> bool:
        return self.verdict == FAILS

    @property
    def key(self) -> tuple:
        return (self.claim, self.k, self.l, self.m)

    def sort_key(self) -> tuple:
        return (self.k, self.l, -1 if self.m is None else self.m, self.claim)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "verdict": self.verdict,
            "witness": self.witness,
            "elapsed_ms": self.elapsed_ms,
            "engine_version": self.engine_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "ConjectureReport":
        missing = {"claim", "k", "l", "m", "verdict", "witness", "elapsed_ms", "engine_version"} - set(obj)
        if missing:
            raise ValueError(f"report is missing fields {sorted(missing)}")
        return cls(
            obj["claim"], int(obj["k"]), int(obj["l"]),
            None if obj["m"] is None else int(obj["m"]),
            obj["verdict"], obj["witness"], int(obj["elapsed_ms"]), obj["engine_version"],
        )


_REPLAY = {
    "conj1": "check conj1 {k} {l} {m}",
    "conj2": "check conj2 {k} {l} {m}",
    "conj3": "check conj3 {k} {l} {m}",
    "conj4": "check conj4 {k} {l} {m}",
    "conj4prime": "check conj4prime {k} {l} {m}",
    "prop5": "prop5 {k} {l}",
    "lefschetz": "lefschetz {k} {l}",
    "lemma_m2": "lemma-m2 {k} {l}",
}


def replay_command(claim, k, l, m) -> str:
    template = _REPLAY.get(claim)
    if template is None:
        return "selftest"
    return "grasscoh " + template.format(k=k, l=l, m=m)
