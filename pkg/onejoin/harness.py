import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

import aiofiles

from model.codec import dumps, report_to_dict
from model.report import ClaimRecord, ClaimStatus, VerificationReport
from model.verdict import SearchBudget
from . import run_sync_in_executor
from .claims import GROUPS, Claim, build_claims, select
from .config import budget_for

log = logging.getLogger(__name__)


def evaluate_claim(claim: Claim, budget: SearchBudget) -> ClaimRecord:
    started = time.monotonic()
    outcome = claim.evaluate(budget)
    return ClaimRecord(claim.claim_id, claim.anchor, claim.expected, outcome.computed, outcome.status,
                       time.monotonic() - started, outcome.stats or {}, claim.stretch)


class VerificationHarness:
    def __init__(self, config: dict):
        self.config = config
        self.profile = config['profile']
        suite = config.get('suite') or {}
        self.groups = suite.get('groups') or list(GROUPS)
        self.suite = suite

    @property
    def log(self):
        return logging.getLogger(f'{__name__}.{self.__class__.__name__}')

    def claims(self, only: Optional[List[str]] = None) -> List[Claim]:
        groups = GROUPS if only else self.groups
        return select(build_claims(groups, self.suite), only)

    async def run(self, only: Optional[List[str]] = None) -> VerificationReport:
        claims = self.claims(only)
        self.log.info(f'running {len(claims)} claims with profile {self.profile}')
        workers = int(self.config['workers'])
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tasks = [run_sync_in_executor(evaluate_claim, claim,
                                          budget_for(self.config, claim.claim_id, claim.budget_section),
                                          executor=pool)
                     for claim in claims]
            records = await asyncio.gather(*tasks)

        for record in records:
            if record.status is not ClaimStatus.PASS:
                self.log.warning(f'{record.claim_id}: {record.status.value} (computed {record.computed})')
        records = sorted(records, key=lambda r: r.claim_id)
        return VerificationReport(self.profile, tuple(records))


async def write_report(report: VerificationReport, output_dir: Path, markdown: str,
                       include_timings: bool = False) -> Tuple[Path, Path]:
    output_dir.mkdir(parents=True, exist_ok=True)
    json_path = output_dir / f'report-{report.profile}.json'
    md_path = output_dir / f'report-{report.profile}.md'
    async with aiofiles.open(json_path, 'w') as f:
        await f.write(dumps(report_to_dict(report, include_timings)) + '\n')
    async with aiofiles.open(md_path, 'w') as f:
        await f.write(markdown)
    log.info(f'report written to {json_path} and {md_path}')
    return json_path, md_path
