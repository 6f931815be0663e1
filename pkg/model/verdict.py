import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .crossing_plan import CrossingPlan, MultiCrossingPlan
from .embedding import PlaneEmbedding


class Answer(enum.Enum):
    ONE_PLANAR = 'one_planar'
    NOT_ONE_PLANAR = 'not_one_planar'
    INCONCLUSIVE = 'inconclusive'

    @property
    def is_definite(self) -> bool:
        return self is not Answer.INCONCLUSIVE


class RefutationKind(enum.Enum):
    SEARCH_EXHAUSTED = 'search_exhausted'
    EDGE_BOUND = 'edge_bound'
    FORBIDDEN_SUBGRAPH = 'forbidden_subgraph'
    DEGREE_BOUND = 'degree_bound'


@dataclass(frozen=True)
class Refutation:
    kind: RefutationKind
    detail: str = ''


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 1_000_000
    max_seconds: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError(f'search budget must be positive, got {self.max_nodes} nodes / {self.max_seconds}s')

    @classmethod
    def from_config(cls, budget_config: dict) -> 'SearchBudget':
        return cls(int(budget_config['max_nodes']), float(budget_config['max_seconds']))


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0
    pruned: int = 0


@dataclass(frozen=True)
class OnePlanarWitness:
    plan: CrossingPlan
    planarization_embedding: PlaneEmbedding

    @property
    def crossing_count(self) -> int:
        return self.plan.crossing_count


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    witness: Optional[OnePlanarWitness] = None
    refutation: Optional[Refutation] = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def __post_init__(self):
        if (self.answer is Answer.ONE_PLANAR) != (self.witness is not None):
            raise ValueError('a one-planar verdict carries a witness and nothing else does')
        if self.answer is Answer.NOT_ONE_PLANAR and self.refutation is None:
            raise ValueError('a negative verdict needs a refutation')


@dataclass(frozen=True)
class CrResult:
    lower_bound: int
    upper_bound: Optional[int] = None
    witness: Optional[MultiCrossingPlan] = None
    embedding: Optional[PlaneEmbedding] = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def __post_init__(self):
        if self.upper_bound is not None and self.lower_bound > self.upper_bound:
            raise ValueError(f'lower bound {self.lower_bound} exceeds upper bound {self.upper_bound}')

    @property
    def value(self) -> Optional[int]:
        return self.lower_bound if self.lower_bound == self.upper_bound else None

    @property
    def interval(self) -> Tuple[int, Optional[int]]:
        return self.lower_bound, self.upper_bound
