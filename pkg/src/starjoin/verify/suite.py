"""Suite runner: a TOML grid of verification items, run in isolation.

    [budget]                 optional defaults for every item
    max_nodes = 2000000
    max_seconds = 300
    face_cap = 5000000

    [[theorem2]]             one table per item; sections may repeat
    n = 2
    c = 3
    r = 1
    deep = true
    max_nodes = 100000       optional per-item override

Sections: eq1, eq2, theorem2, locjoin, joinhom, remark, kst. Items run in
that section order, in file order within a section. Each item writes
"<index>-<claim>.json"; the run also writes summary.txt, errors.json and
metrics.prom.
"""

import json
import logging
import tomllib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, ClassVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..coloring.solver import SearchBudget
from ..config import settings
from ..errors import InputError
from ..graph.constructions import TowerParams, graph_from_spec
from .certificate import (
    Certificate,
    CertificateBuilder,
    ClaimId,
    Outcome,
    Verdict,
    atomic_write_text,
    write_certificate,
)
from .metrics import merge_work, record_check, work_totals, write_metrics
from .pipelines import (
    verify_eq1_count,
    verify_eq2_adjacency,
    verify_kst_consistency,
    verify_lemma_join_homology,
    verify_lemma_locjoin,
    verify_remark_r0,
    verify_theorem2,
)

logger = logging.getLogger(__name__)


# Config schema


class BudgetSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_nodes: int | None = Field(default=None, ge=1)
    max_seconds: float | None = Field(default=None, gt=0)
    face_cap: int | None = Field(default=None, ge=1)


class SuiteItem(BaseModel):
    """Base of every item table; per-item budget overrides live here."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    claim: ClassVar[ClaimId]

    max_nodes: int | None = Field(default=None, ge=1)
    max_seconds: float | None = Field(default=None, gt=0)

    def budget(self, defaults: BudgetSection) -> SearchBudget:
        return SearchBudget(
            max_nodes=self.max_nodes or defaults.max_nodes or settings.max_nodes,
            max_seconds=self.max_seconds or defaults.max_seconds or settings.max_seconds,
        )

    def describe(self) -> str:
        fields = self.model_dump(exclude={"max_nodes", "max_seconds"})
        return " ".join(f"{k}={v}" for k, v in fields.items())

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        raise NotImplementedError


class TowerItem(SuiteItem):
    n: int = Field(ge=1)
    c: int = Field(ge=3)
    r: int = Field(ge=1)

    @property
    def params(self) -> TowerParams:
        return TowerParams.checked(self.n, self.c, self.r)


class Theorem2Item(TowerItem):
    claim: ClassVar[ClaimId] = ClaimId.THEOREM2
    deep: bool = False

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_theorem2(self.params, budget, self.deep, face_cap)


class Eq1Item(TowerItem):
    claim: ClassVar[ClaimId] = ClaimId.EQ1_COUNT

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_eq1_count(self.params)


class LocjoinItem(SuiteItem):
    claim: ClassVar[ClaimId] = ClaimId.LEMMA_LOCJOIN
    g1: str
    g2: str
    r: int = Field(ge=1)

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_lemma_locjoin(graph_from_spec(self.g1), graph_from_spec(self.g2), self.r, budget)


class JoinhomItem(SuiteItem):
    claim: ClassVar[ClaimId] = ClaimId.LEMMA_JOIN_HOMOLOGY
    g1: str
    g2: str
    s: int = Field(ge=1)

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_lemma_join_homology(graph_from_spec(self.g1), graph_from_spec(self.g2), self.s, face_cap=face_cap)


class Eq2Item(SuiteItem):
    claim: ClassVar[ClaimId] = ClaimId.EQ2_ADJACENCY
    g1: str
    g2: str
    s: int = Field(ge=2)

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_eq2_adjacency(graph_from_spec(self.g1), graph_from_spec(self.g2), self.s)


class RemarkItem(SuiteItem):
    claim: ClassVar[ClaimId] = ClaimId.REMARK_R0
    n: int = Field(ge=2)
    m: int = Field(ge=2)

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_remark_r0(self.n, self.m, face_cap)


class KstItem(SuiteItem):
    claim: ClassVar[ClaimId] = ClaimId.KST_CONSISTENCY
    graph: str
    r: int = Field(ge=1)
    n: int = Field(ge=1)
    c: int = Field(ge=1)

    def run(self, budget: SearchBudget, face_cap: int) -> Certificate:
        return verify_kst_consistency(graph_from_spec(self.graph), self.r, self.n, self.c, budget)


class SuiteConfig(BaseModel):
    """A parsed suite file."""

    model_config = ConfigDict(extra="forbid")

    budget: BudgetSection = Field(default_factory=BudgetSection)
    eq1: list[Eq1Item] = Field(default_factory=list)
    eq2: list[Eq2Item] = Field(default_factory=list)
    theorem2: list[Theorem2Item] = Field(default_factory=list)
    locjoin: list[LocjoinItem] = Field(default_factory=list)
    joinhom: list[JoinhomItem] = Field(default_factory=list)
    remark: list[RemarkItem] = Field(default_factory=list)
    kst: list[KstItem] = Field(default_factory=list)

    @classmethod
    def load(cls, path: Path) -> "SuiteConfig":
        """Parse and validate a TOML suite file."""
        try:
            with Path(path).open("rb") as handle:
                data = tomllib.load(handle)
        except OSError as e:
            raise InputError(f"Cannot read suite config {path}: {e}") from e
        except tomllib.TOMLDecodeError as e:
            raise InputError(f"Suite config {path} is not valid TOML: {e}") from e
        return cls.parse(data, str(path))

    @classmethod
    def parse(cls, data: dict[str, Any], source: str = "<suite>") -> "SuiteConfig":
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise InputError(f"Invalid suite config {source}: {e}") from e

    @classmethod
    def default(cls) -> "SuiteConfig":
        """The desk-scale grid shipped as configs/default-suite.toml."""
        towers = [(n, c, r) for n in (1, 2) for c in (3, 4) for r in (1, 2)]
        theorem2 = []
        for n, c, r in towers:
            if n == 1:
                theorem2.append(Theorem2Item(n=n, c=c, r=r, deep=True))
            elif (c, r) == (3, 1):
                theorem2.append(Theorem2Item(n=n, c=c, r=r, deep=True))
            elif (c, r) == (4, 2):
                theorem2.append(Theorem2Item(n=n, c=c, r=r, max_nodes=10_000))
            else:
                theorem2.append(Theorem2Item(n=n, c=c, r=r, max_nodes=1_000_000))
        return cls(
            eq1=[Eq1Item(n=n, c=c, r=r) for n, c, r in towers],
            eq2=[
                Eq2Item(g1="K3", g2="K3", s=2),
                Eq2Item(g1="K2", g2="K3", s=3),
                Eq2Item(g1="C5", g2="P3", s=4),
            ],
            theorem2=theorem2,
            locjoin=[
                LocjoinItem(g1="K3", g2="K3", r=1),
                LocjoinItem(g1="C5", g2="K3", r=1),
                LocjoinItem(g1="K2", g2="K2", r=1),
            ],
            joinhom=[
                JoinhomItem(g1="K2", g2="K2", s=2),
                JoinhomItem(g1="K3", g2="K3", s=2),
                JoinhomItem(g1="K2", g2="K3", s=1),
            ],
            remark=[RemarkItem(n=2, m=2), RemarkItem(n=2, m=3), RemarkItem(n=3, m=3)],
            kst=[
                KstItem(graph="K3", r=6, n=1, c=3),
                KstItem(graph="tower:2,3,1", r=1, n=2, c=3),
                KstItem(graph="C5", r=2, n=1, c=3),
            ],
        )

    def items(self) -> list[SuiteItem]:
        """All items in execution order."""
        sections: list[list[Any]] = [self.eq1, self.eq2, self.theorem2, self.locjoin, self.joinhom, self.remark, self.kst]
        return [item for section in sections for item in section]


# Execution


class ItemFailure(BaseModel):
    """A suite item that raised instead of producing a certificate."""

    index: int
    claim: ClaimId
    item: str
    error_type: str
    message: str


class ErrorTracker:
    """Failures of suite items by exception type; dumped as errors.json."""

    def __init__(self) -> None:
        self.failures: list[ItemFailure] = []

    def track_error(self, index: int, item: SuiteItem, error: BaseException) -> None:
        failure = ItemFailure(
            index=index,
            claim=item.claim,
            item=item.describe(),
            error_type=type(error).__name__,
            message=str(error),
        )
        self.failures.append(failure)
        logger.error(f"Suite item {index} ({item.claim.value} {failure.item}) raised {failure.error_type}: {error}")

    def get_error_stats(self) -> dict[str, Any]:
        return {
            "error_counts": dict(Counter(f.error_type for f in self.failures)),
            "failures": [f.model_dump(mode="json") for f in self.failures],
            "total_errors": len(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.get_error_stats(), sort_keys=True, indent=2) + "\n"


def _error_certificate(item: SuiteItem, error: Exception) -> Certificate:
    builder = CertificateBuilder(item.claim, {"item": item.describe()})
    builder.run("execution", lambda: Outcome(Verdict.UNKNOWN, f"{type(error).__name__}: {error}"))
    return builder.build()


def run_item(item: SuiteItem, defaults: BudgetSection) -> Certificate:
    """Run one item with its effective budget and face cap."""
    face_cap = defaults.face_cap or settings.face_cap
    return item.run(item.budget(defaults), face_cap)


def _run_in_worker(item: SuiteItem, defaults: BudgetSection) -> tuple[Certificate, dict[str, float]]:
    """run_item in a pool process, also returning the work counted there."""
    before = work_totals()
    certificate = run_item(item, defaults)
    after = work_totals()
    return certificate, {name: after[name] - before[name] for name in after}


def _merge_worker_metrics(certificate: Certificate, work: dict[str, float]) -> None:
    merge_work(work)
    claim = certificate.claim_id.value
    for check in certificate.checks:
        record_check(claim, check.name, check.verdict.value, certificate.timings.get(check.name, 0.0))


def summary_text(items: list[SuiteItem], certificates: list[Certificate]) -> str:
    """Fixed-width table: one row per item plus a verdict tally."""
    header = f"{'#':>3}  {'claim':<20} {'verdict':<8} {'p/f/u':<7} {'seconds':>9}  params"
    rows = [header, "-" * len(header)]
    tally = dict.fromkeys(Verdict, 0)
    for index, (item, cert) in enumerate(zip(items, certificates, strict=True)):
        counts = [sum(c.verdict is v for c in cert.checks) for v in (Verdict.PASS, Verdict.FAIL, Verdict.UNKNOWN)]
        seconds = sum(cert.timings.values())
        tally[cert.verdict] += 1
        rows.append(
            f"{index:>3}  {cert.claim_id.value:<20} {cert.verdict.value:<8} "
            f"{'/'.join(map(str, counts)):<7} {seconds:>9.2f}  {item.describe()}"
        )
    rows.append("")
    rows.append(", ".join(f"{v.value}: {n}" for v, n in tally.items()))
    return "\n".join(rows) + "\n"


def run_suite(
    config: SuiteConfig | Path,
    output_dir: Path | None = None,
    workers: int | None = None,
) -> list[Certificate]:
    """
    Execute every item of a suite and write its outputs.

    An item that raises is logged, tracked and recorded as an "unknown"
    certificate with a single "execution" check; the suite continues.

    Args:
        config: A parsed config or the path of a TOML file
        output_dir: Destination of certificates, summary, errors and metrics
        workers: Worker processes; 1 runs sequentially in-process

    Returns:
        One certificate per item, in execution order
    """
    if not isinstance(config, SuiteConfig):
        config = SuiteConfig.load(config)
    items = config.items()
    if not items:
        logger.info("Suite config declares no items")
        return []

    output_dir = Path(output_dir or settings.certificate_dir)
    workers = workers or settings.workers
    tracker = ErrorTracker()
    logger.info(f"Running {len(items)} suite items with {workers} worker(s) into {output_dir}")

    certificates: list[Certificate] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_in_worker, item, config.budget) for item in items]
            for index, (item, future) in enumerate(zip(items, futures, strict=True)):
                try:
                    certificate, work = future.result()
                except Exception as e:
                    tracker.track_error(index, item, e)
                    certificates.append(_error_certificate(item, e))
                    continue
                _merge_worker_metrics(certificate, work)
                certificates.append(certificate)
    else:
        for index, item in enumerate(items):
            try:
                certificates.append(run_item(item, config.budget))
            except Exception as e:
                tracker.track_error(index, item, e)
                certificates.append(_error_certificate(item, e))

    for index, cert in enumerate(certificates):
        write_certificate(cert, output_dir / f"{index:03d}-{cert.claim_id.value}.json")
    atomic_write_text(output_dir / "summary.txt", summary_text(items, certificates))
    atomic_write_text(output_dir / "errors.json", tracker.to_json())
    write_metrics(output_dir / "metrics.prom")

    stats = tracker.get_error_stats()
    if stats["total_errors"]:
        logger.warning(f"{stats['total_errors']} suite item(s) raised: {stats['error_counts']}")
    return certificates
