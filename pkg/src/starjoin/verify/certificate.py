"""Verification certificates: schema, verdict rules, hashing and atomic output.

A certificate serializes as JSON with sorted keys and two-space indentation.
Everything except the "timings" object is a function of the parameters and
budgets, so two runs can be compared with content_hash().
"""

import hashlib
import json
import logging
import os
import tempfile
import time
from collections.abc import Callable
from enum import StrEnum
from pathlib import Path
from typing import Any, NamedTuple

from pydantic import BaseModel, Field
from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_exponential

from .. import __version__
from ..coloring.solver import SearchBudget
from ..errors import ResourceError
from ..graph.dimacs import canonical_hash
from ..graph.graph import Graph
from .metrics import record_check

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class ClaimId(StrEnum):
    THEOREM2 = "theorem2"
    LEMMA_LOCJOIN = "lemma_locjoin"
    LEMMA_JOIN_HOMOLOGY = "lemma_join_homology"
    REMARK_R0 = "remark_r0"
    KST_CONSISTENCY = "kst_consistency"
    EQ1_COUNT = "eq1_count"
    EQ2_ADJACENCY = "eq2_adjacency"


class Verdict(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


class CheckResult(BaseModel):
    """One named check with its verdict, a one-line detail and structured data."""

    name: str
    verdict: Verdict
    detail: str
    data: dict[str, Any] = Field(default_factory=dict)


class Outcome(NamedTuple):
    """What a check function returns; the runner attaches the name and timing."""

    verdict: Verdict
    detail: str
    data: dict[str, Any] = {}


def overall_verdict(checks: list[CheckResult]) -> Verdict:
    """FAIL if any check failed, else UNKNOWN if any is unknown or none ran, else PASS."""
    verdicts = {c.verdict for c in checks}
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.UNKNOWN in verdicts or not checks:
        return Verdict.UNKNOWN
    return Verdict.PASS


class Certificate(BaseModel):
    """Machine-readable record of one verification run."""

    schema_version: int = SCHEMA_VERSION
    claim_id: ClaimId
    params: dict[str, Any]
    budget: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)
    artifact_hashes: dict[str, str] = Field(default_factory=dict)
    timings: dict[str, float] = Field(default_factory=dict)
    tool_version: str = __version__

    @property
    def verdict(self) -> Verdict:
        return overall_verdict(self.checks)

    def check(self, name: str) -> CheckResult:
        """Look up a check by name."""
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_json(self) -> str:
        """Stable JSON text (sorted keys, indent 2, trailing newline)."""
        payload = self.model_dump(mode="json")
        payload["verdict"] = self.verdict.value
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def content_hash(self) -> str:
        """SHA-256 of the JSON text with the timings removed."""
        payload = self.model_dump(mode="json", exclude={"timings"})
        text = json.dumps(payload, sort_keys=True, indent=2)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        payload = json.loads(text)
        payload.pop("verdict", None)
        return cls.model_validate(payload)


class CertificateBuilder:
    """Accumulates checks, hashes and timings for one claim."""

    def __init__(self, claim: ClaimId, params: dict[str, Any], budget: SearchBudget | None = None):
        self.certificate = Certificate(
            claim_id=claim,
            params=params,
            budget=budget.to_dict() if budget else {},
        )

    def hash_graph(self, name: str, graph: Graph) -> None:
        self.certificate.artifact_hashes[name] = canonical_hash(graph)

    def run(self, name: str, check: Callable[[], Outcome]) -> CheckResult:
        """
        Run one check, timing it and recording its verdict.

        A ResourceError (face cap) becomes an UNKNOWN verdict carrying the cap.
        """
        started = time.perf_counter()
        try:
            outcome = check()
        except ResourceError as e:
            logger.warning(f"{self.certificate.claim_id} / {name}: {e}")
            outcome = Outcome(Verdict.UNKNOWN, f"resource cap reached: {e}", {"cap": e.cap, "requested": e.requested})
        elapsed = time.perf_counter() - started

        result = CheckResult(name=name, verdict=outcome.verdict, detail=outcome.detail, data=dict(outcome.data))
        claim = self.certificate.claim_id.value
        self.certificate.checks.append(result)
        self.certificate.timings[name] = round(elapsed, 6)
        record_check(claim, name, result.verdict.value, elapsed)
        logger.info(f"{claim} / {name}: {result.verdict.value} ({result.detail})")
        return result

    def build(self) -> Certificate:
        return self.certificate


@retry(
    stop=stop_after_attempt(3),
    wait=wait_exponential(multiplier=0.1, min=0.1, max=2),
    retry=retry_if_exception_type(OSError),
    reraise=True,
)
def atomic_write_text(path: Path, text: str) -> None:
    """Write via a temporary file in the target directory and os.replace."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(temp_name, path)
    except BaseException:
        Path(temp_name).unlink(missing_ok=True)
        raise


def write_certificate(certificate: Certificate, path: Path) -> None:
    atomic_write_text(Path(path), certificate.to_json())
    logger.debug(f"Certificate {certificate.claim_id} written to {path}")
