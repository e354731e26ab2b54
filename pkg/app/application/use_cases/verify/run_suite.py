"""Use case for running a verification suite over the whole catalog."""

import asyncio
import logging
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from app.application.dtos import EntryReport, SuiteReport
from app.application.interfaces.catalog_repository import CatalogRepository
from app.application.interfaces.weight_table_repository import WeightTableRepository
from app.domain.enums import CheckStatus, Labelling, Suite
from app.domain.errors import DomainError, NotFoundError
from app.domain.models.catalog import Catalog
from app.domain.models.crystal import WeightTable
from app.domain.models.reports import CheckResult
from app.domain.services.catalog import CatalogBuilder
from app.domain.services.verification import (
    EntryVerifier,
    VerifyOptions,
    verify_chain,
    verify_graph,
    verify_identities,
    verify_link,
)
from app.domain.value_objects.field import CoefficientField
from app.domain.value_objects.run_config import RunConfig

logger = logging.getLogger(__name__)

_NUMBERED = re.compile(r"(\D*)(\d*)")


@dataclass
class RunSuiteInput:
    """Input data for a verification run.

    Attributes:
        suite: ``core`` (all E6 entries and the gating E7 subset) or ``full``.
        config: Run configuration.
        workers: Process pool size; 0 means one per CPU, 1 runs in-process.
        max_complex_rank: Largest recipe complex built in full.
        rational_keys: Entries re-run over the rationals in the core suite; the full
            suite re-runs every entry.
        keys: Restrict the entry checks to these keys; empty means the whole suite.
        shuffle_keys: Entries whose Gröbner basis is recomputed under generator shuffles.
        shuffles: Generator orders tried per shuffled entry.
        prefix_degree: Last degree of the Hilbert function compared with the series.
    """

    suite: Suite = Suite.CORE
    config: RunConfig = field(default_factory=RunConfig)
    workers: int = 0
    max_complex_rank: int = 4096
    rational_keys: tuple[str, ...] = ()
    keys: tuple[str, ...] = ()
    shuffle_keys: tuple[str, ...] = ()
    shuffles: int = 20
    prefix_degree: int = 3


@dataclass(frozen=True)
class SuiteJob:
    """One independent unit of verification work.

    Attributes:
        kind: ``entry``, ``identities``, ``link``, ``chain`` or ``graph``.
        key: Entry, labelling, link or table key.
        other: Second entry of a chain.
    """

    kind: str
    key: str
    other: str = ""

    @property
    def report_key(self) -> str:
        if self.kind == "chain":
            return f"chain/{self.key}-{self.other.rsplit('/', 1)[-1]}"
        return self.key


@dataclass(frozen=True)
class SuiteContext:
    """Everything a worker process needs; sent once per process."""

    catalog: Catalog
    tables: tuple[WeightTable, ...]
    options: VerifyOptions
    characteristic: int
    rational_keys: tuple[str, ...] = ()


class SuiteWorker:
    """Runs jobs against builders kept for the life of the process.

    Args:
        context: Catalog, tables and options of the run.
    """

    def __init__(self, context: SuiteContext) -> None:
        self._context = context
        self._builder = CatalogBuilder(
            context.catalog, CoefficientField(context.characteristic)
        )
        rational = None
        wants_rational = context.rational_keys or context.options.suite is Suite.FULL
        if wants_rational and context.characteristic != 0:
            rational = CatalogBuilder(context.catalog, CoefficientField.rationals())
        self._tables = {t.label: t for t in context.tables}
        self._verifier = EntryVerifier(
            self._builder,
            self._tables,
            context.options,
            rational=rational,
            rational_keys=context.rational_keys,
        )

    def run(self, job: SuiteJob) -> EntryReport:
        start = time.perf_counter()
        logger.info("verify %s %s: start", job.kind, job.key)
        try:
            checks = self._checks(job)
        except DomainError as exc:
            logger.warning("verify %s %s: %s", job.kind, job.key, exc.message)
            checks = [CheckResult(job.key, job.kind, CheckStatus.FAIL, note=exc.message)]
        seconds = time.perf_counter() - start
        logger.info("verify %s %s: done in %.2fs", job.kind, job.key, seconds)
        return EntryReport(key=job.report_key, checks=tuple(checks), seconds=round(seconds, 3))

    def _checks(self, job: SuiteJob) -> list[CheckResult]:
        if job.kind == "entry":
            return self._verifier.verify(job.key)
        if job.kind == "identities":
            labelling = Labelling(job.key.removeprefix("derivatives/"))
            return verify_identities(self._builder, labelling)
        if job.kind == "link":
            return verify_link(self._builder, self._context.catalog.link(job.key))
        if job.kind == "chain":
            return [verify_chain(self._builder, job.key, job.other)]
        if job.kind == "graph":
            if job.key not in self._tables:
                raise NotFoundError(f"No weight table {job.key}")
            return verify_graph(self._tables[job.key])
        raise NotFoundError(f"Unknown job kind {job.kind}")


# One worker per pool process, created by the pool initializer.
_worker: SuiteWorker | None = None


def _init_worker(context: SuiteContext) -> None:
    global _worker
    _worker = SuiteWorker(context)


def _run_job(job: SuiteJob) -> EntryReport:
    if _worker is None:
        raise RuntimeError("Suite worker used before initialisation")
    return _worker.run(job)


def natural_key(key: str) -> tuple[tuple[str, int], ...]:
    """Sort key under which ``E6/I9`` precedes ``E6/I10``."""
    return tuple(
        (text, int(number) if number else -1)
        for text, number in _NUMBERED.findall(key)
        if text or number
    )


def plan_jobs(
    catalog: Catalog,
    tables: list[WeightTable],
    suite: Suite,
    keys: tuple[str, ...] = (),
) -> list[SuiteJob]:
    """Jobs of a suite.

    The core suite checks every E6 entry, the E7 entries marked ``suite = core``,
    both derivative lists, both graphs and the E6 linkage claims. The full suite
    adds every E7 entry, the E7 linkage claims and the nested-list chains.
    """
    jobs = [SuiteJob("identities", key) for key in ("derivatives/E7", "derivatives/E6D5")]
    jobs += [SuiteJob("graph", t.label) for t in tables]
    for key in catalog.ideal_keys():
        entry = catalog.entries[key]
        if keys:
            selected = key in keys
        else:
            selected = suite is Suite.FULL or entry.family == "E6" or entry.core_suite
        if selected:
            jobs.append(SuiteJob("entry", key))
    for link in catalog.links.values():
        if keys and link.first not in keys and link.second not in keys:
            continue
        if suite is Suite.FULL or catalog.entry(link.first).family == "E6":
            jobs.append(SuiteJob("link", link.key))
    if suite is Suite.FULL:
        builder = CatalogBuilder(catalog, CoefficientField.rationals())
        for upper, lower in builder.nested_pairs("E7"):
            if not keys or upper in keys:
                jobs.append(SuiteJob("chain", upper, lower))
    return jobs


class RunSuite:
    """Verifies the catalog against its printed data, in parallel.

    Args:
        catalog_repo: Repository for catalog access.
        table_repo: Repository for the printed weight tables.
    """

    def __init__(
        self, catalog_repo: CatalogRepository, table_repo: WeightTableRepository
    ) -> None:
        self._catalog_repo = catalog_repo
        self._table_repo = table_repo

    async def execute(self, input_data: RunSuiteInput) -> SuiteReport:
        """Execute the verification suite.

        Items are reported in key order whatever order the workers finish in.
        Failing items are listed in the report; raising is left to the caller.

        Raises:
            NotFoundError: If a requested key is not in the catalog.
        """
        start = time.perf_counter()
        catalog = await self._catalog_repo.load()
        for key in input_data.keys:
            catalog.entry(key)
        tables = await self._table_repo.find_all()
        config = input_data.config
        context = SuiteContext(
            catalog=catalog,
            tables=tuple(tables),
            options=VerifyOptions(
                suite=input_data.suite,
                seed=config.seed,
                prime=config.prime,
                points=config.rank_points,
                max_steps=config.max_steps,
                max_complex_rank=input_data.max_complex_rank,
                prefix_degree=input_data.prefix_degree,
                shuffles=input_data.shuffles,
                shuffle_keys=input_data.shuffle_keys,
            ),
            characteristic=config.coefficient_field.characteristic,
            rational_keys=input_data.rational_keys if input_data.suite is Suite.CORE else (),
        )
        jobs = plan_jobs(catalog, tables, input_data.suite, input_data.keys)
        workers = input_data.workers or os.cpu_count() or 1
        logger.info("verify %s: %d jobs on %d workers", input_data.suite, len(jobs), workers)

        if workers == 1:
            worker = SuiteWorker(context)
            items = [worker.run(job) for job in jobs]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(
                max_workers=workers, initializer=_init_worker, initargs=(context,)
            ) as pool:
                items = list(
                    await asyncio.gather(*(loop.run_in_executor(pool, _run_job, j) for j in jobs))
                )

        items.sort(key=lambda item: natural_key(item.key))
        report = SuiteReport(
            suite=input_data.suite,
            config=config,
            items=tuple(items),
            seconds=round(time.perf_counter() - start, 3),
        )
        logger.info(
            "verify %s: %d pass, %d ledger, %d fail in %.1fs",
            input_data.suite,
            report.count(CheckStatus.PASS),
            report.count(CheckStatus.LEDGER),
            report.count(CheckStatus.FAIL),
            report.seconds,
        )
        return report
