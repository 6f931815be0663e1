import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple


class ClaimStatus(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    anchor: str
    expected: Any
    computed: Any
    status: ClaimStatus
    elapsed: float = 0.0
    stats: Dict[str, Any] = field(default_factory=dict)
    stretch: bool = False


@dataclass(frozen=True)
class VerificationReport:
    profile: str
    records: Tuple[ClaimRecord, ...] = ()

    def __post_init__(self):
        ids = [r.claim_id for r in self.records]
        if len(ids) != len(set(ids)):
            raise ValueError('claim ids must be unique within a report')

    @property
    def totals(self) -> Dict[str, int]:
        result = {status.value: 0 for status in ClaimStatus}
        for record in self.records:
            result[record.status.value] += 1
        return result

    @property
    def failed(self) -> bool:
        """Failures decide the exit status; inconclusive non-stretch claims fail only under the full profile"""
        for record in self.records:
            if record.status is ClaimStatus.FAIL:
                return True
            if record.status is ClaimStatus.INCONCLUSIVE and self.profile == 'full' and not record.stretch:
                return True
        return False
