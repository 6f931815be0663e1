import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple, Any, Dict

from .graph import Graph
from .verdict import Answer, OnePlanarWitness, Verdict


@dataclass(frozen=True)
class MajorPair:
    """One of the four maximal pairs whose joins are 1-planar"""

    left: Graph
    right: Graph
    name: str


class ReasonKind(enum.Enum):
    MATCHED_PAIR = 'matched_pair'
    NOT_MAJORIZED = 'not_majorized'
    SIZE_RULE = 'size_rule'
    FORBIDDEN_SUBGRAPH = 'forbidden_subgraph'
    EDGE_BOUND = 'edge_bound'
    DEGREE_BOUND = 'degree_bound'
    SOLVER = 'solver'


@dataclass(frozen=True)
class Reason:
    kind: ReasonKind
    name: str = ''
    pair: Optional[MajorPair] = None
    verdict: Optional[Verdict] = None


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one condition; detail holds the values needed to re-check it by hand"""

    name: str
    holds: bool
    detail: Dict[str, Any] = field(default_factory=dict, compare=False)
    kind: Optional[ReasonKind] = None


@dataclass(frozen=True)
class JoinDecision:
    answer: Answer
    reason: Reason
    witness: Optional[OnePlanarWitness] = None
    conditions: Tuple[ConditionReport, ...] = ()

    def __post_init__(self):
        if self.reason.kind is ReasonKind.MATCHED_PAIR and self.reason.pair is None:
            raise ValueError('matched_pair reason needs its pair')
        if self.witness is not None and self.answer is not Answer.ONE_PLANAR:
            raise ValueError('only one-planar decisions carry a witness')
