from .crossing_plan import CrossingPlan, MultiCrossingPlan
from .embedding import Face, PlaneEmbedding
from .family_instance import ExpectedProperty, FamilyInstance
from .graph import Graph, PartitionSpec, make_graph
from .join_decision import ConditionReport, JoinDecision, MajorPair, Reason, ReasonKind
from .planarization import Planarization
from .report import ClaimRecord, ClaimStatus, VerificationReport
from .verdict import Answer, CrResult, OnePlanarWitness, Refutation, RefutationKind, SearchBudget, SearchStats, Verdict
from . import codec, operators

__all__ = ['CrossingPlan', 'MultiCrossingPlan', 'Face', 'PlaneEmbedding', 'ExpectedProperty', 'FamilyInstance',
           'Graph', 'PartitionSpec', 'make_graph', 'ConditionReport', 'JoinDecision', 'MajorPair', 'Reason',
           'ReasonKind', 'Planarization', 'ClaimRecord', 'ClaimStatus', 'VerificationReport', 'Answer', 'CrResult',
           'OnePlanarWitness', 'Refutation', 'RefutationKind', 'SearchBudget', 'SearchStats', 'Verdict', 'codec',
           'operators']
