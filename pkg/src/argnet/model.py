"""Domain model: nodes, certainty scale, schemes, critical questions,
immutable network snapshots, and cycle-pruned argument trees.

Instances of these types are plain immutable data. Structural invariants
(kind constraints, reference resolution) are enforced by the mutation
surface in :mod:`argnet.network`; the types themselves stay permissive so
that imported documents can be checked and reported as violations instead
of failing at construction time.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Optional

from argnet.errors import InvalidContextWeight, UnknownNode


class NodeKind(str, Enum):
    """AIF node taxonomy: information nodes and the three scheme applications."""

    I = "I"
    RA = "RA"
    CA = "CA"
    PA = "PA"

    @property
    def is_scheme(self) -> bool:
        return self is not NodeKind.I


class Certainty(str, Enum):
    """Five-level user certainty scale with fixed numeric values."""

    VERY_LOW = "very_low"
    LOW = "low"
    AVERAGE = "average"
    HIGH = "high"
    VERY_HIGH = "very_high"

    @property
    def numeric(self) -> int:
        return _CERTAINTY_VALUES[self]

    @classmethod
    def coerce(cls, value) -> "Certainty":
        if isinstance(value, Certainty):
            return value
        return cls(str(value))


_CERTAINTY_VALUES = {
    Certainty.VERY_LOW: 1,
    Certainty.LOW: 2,
    Certainty.AVERAGE: 5,
    Certainty.HIGH: 7,
    Certainty.VERY_HIGH: 9,
}


@dataclass(frozen=True)
class ContextTerm:
    """A vocabulary term with a relevance weight in [0, 1]."""

    term: str
    weight: float = 1.0

    def __post_init__(self):
        if not self.term:
            raise InvalidContextWeight("context term must be non-empty")
        if not (0.0 <= self.weight <= 1.0):
            raise InvalidContextWeight(
                f"context weight {self.weight!r} outside [0, 1] for term {self.term!r}"
            )

    @classmethod
    def coerce(cls, value) -> "ContextTerm":
        """Accept ContextTerm, (term, weight) or (weight, term) pairs, or dicts."""
        if isinstance(value, ContextTerm):
            return value
        if isinstance(value, Mapping):
            return cls(term=str(value["term"]), weight=float(value.get("weight", 1.0)))
        a, b = value
        if isinstance(a, str):
            return cls(term=a, weight=float(b))
        return cls(term=str(b), weight=float(a))


def coerce_terms(values) -> tuple[ContextTerm, ...]:
    return tuple(ContextTerm.coerce(v) for v in values or ())


class SchemeKind(str, Enum):
    """What a scheme application does: infer, attack, or support."""

    INFERENCE = "inference"
    CONFLICT = "conflict"
    PREFERENCE = "preference"

    @property
    def node_kind(self) -> NodeKind:
        return _SCHEME_NODE_KINDS[self]


_SCHEME_NODE_KINDS = {
    SchemeKind.INFERENCE: NodeKind.RA,
    SchemeKind.CONFLICT: NodeKind.CA,
    SchemeKind.PREFERENCE: NodeKind.PA,
}


@dataclass(frozen=True)
class Node:
    """One vertex of the argument network.

    I-nodes carry passive information; RA/CA/PA nodes apply a scheme to a
    list of I-node premises and conclude at any existing node.
    """

    id: str
    kind: NodeKind
    summary: str
    certainty: Certainty = Certainty.AVERAGE
    text: str = ""
    support_url: Optional[str] = None
    context: tuple[ContextTerm, ...] = ()
    topic: tuple[ContextTerm, ...] = ()
    author: str = ""
    created_at: Optional[dt.datetime] = None
    premises: tuple[str, ...] = ()
    conclusion: Optional[str] = None
    scheme: Optional[str] = None
    default_form: Optional[str] = None


@dataclass(frozen=True)
class SchemeDescriptor:
    """An argumentation scheme: premise/conclusion descriptors plus the
    critical questions that can be raised against an application of it."""

    id: str
    name: str
    premise_descriptors: tuple[str, ...]
    conclusion_descriptor: str
    critical_questions: tuple[str, ...] = ()
    scheme_kind: SchemeKind = SchemeKind.INFERENCE


class CQStatus(str, Enum):
    OPEN = "open"
    RESOLVED = "resolved"


@dataclass(frozen=True)
class CQInstance:
    """A raised critical question; while open it blocks the target S-node."""

    id: str
    target: str
    cq_index: int
    challenge_text: str
    status: CQStatus = CQStatus.OPEN
    raised_by: str = ""
    resolution_text: Optional[str] = None


@dataclass(frozen=True)
class UsageCounts:
    """Structural participation counts for one node, network-wide."""

    premise_of: int = 0
    concluded_by_ra: int = 0
    concluded_by_ca: int = 0
    concluded_by_pa: int = 0

    @property
    def usage(self) -> int:
        # participations minus CA/PA-conclusion cases; both node classes
        # reduce to premise roles plus RA conclusions.
        return self.premise_of + self.concluded_by_ra


@dataclass(frozen=True)
class Violation:
    """One structural consistency breach found by validation."""

    code: str
    node_id: Optional[str]
    message: str


@dataclass(frozen=True)
class NetworkSnapshot:
    """Immutable view of the whole network plus the derived indices that
    evaluation and querying read. Snapshots built from the same state are
    equal; the version counter is informational and excluded from equality."""

    nodes: Mapping[str, Node]
    schemes: Mapping[str, SchemeDescriptor]
    cq_instances: Mapping[str, CQInstance]
    incoming_by_conclusion: Mapping[str, tuple[str, ...]]
    usage_index: Mapping[str, UsageCounts]
    blocked: frozenset[str]
    version: int = field(default=0, compare=False)

    @classmethod
    def build(cls, nodes, schemes, cq_instances, version: int = 0) -> "NetworkSnapshot":
        nodes = dict(nodes)
        incoming: dict[str, list[str]] = {}
        counts: dict[str, dict[str, int]] = {
            nid: {"premise_of": 0, "concluded_by_ra": 0, "concluded_by_ca": 0, "concluded_by_pa": 0}
            for nid in nodes
        }
        for node in nodes.values():
            for pid in node.premises:
                if pid in counts:
                    counts[pid]["premise_of"] += 1
            if node.conclusion is not None:
                incoming.setdefault(node.conclusion, []).append(node.id)
                slot = counts.get(node.conclusion)
                if slot is not None:
                    key = {
                        NodeKind.RA: "concluded_by_ra",
                        NodeKind.CA: "concluded_by_ca",
                        NodeKind.PA: "concluded_by_pa",
                    }.get(node.kind)
                    if key:
                        slot[key] += 1
        blocked = frozenset(
            cq.target
            for cq in dict(cq_instances).values()
            if cq.status is CQStatus.OPEN
        )
        return cls(
            nodes=nodes,
            schemes=dict(schemes),
            cq_instances=dict(cq_instances),
            incoming_by_conclusion={k: tuple(sorted(v)) for k, v in incoming.items()},
            usage_index={nid: UsageCounts(**c) for nid, c in counts.items()},
            blocked=blocked,
            version=version,
        )

    def node(self, node_id: str) -> Node:
        try:
            return self.nodes[node_id]
        except KeyError:
            raise UnknownNode(f"no node with id {node_id!r}") from None

    def usage(self, node_id: str) -> int:
        counts = self.usage_index.get(node_id)
        return counts.usage if counts else 0

    def incoming(self, node_id: str) -> tuple[str, ...]:
        return self.incoming_by_conclusion.get(node_id, ())

    def s_node_ids(self) -> tuple[str, ...]:
        return tuple(sorted(nid for nid, n in self.nodes.items() if n.kind.is_scheme))


@dataclass(frozen=True)
class TreeNode:
    """One occurrence of a network node in an argument tree. The same
    network node may occur at several positions when it is reused."""

    node_id: str
    children: tuple["TreeNode", ...] = ()


@dataclass(frozen=True)
class ArgumentTree:
    """Evaluation tree rooted at a queried node. Edges that would revisit a
    node already on the root-to-here path are pruned and recorded."""

    root: TreeNode
    pruned_edges: tuple[tuple[str, str], ...] = ()

    def walk(self) -> Iterator[TreeNode]:
        """Preorder traversal, children in ascending node-id order."""
        stack = [self.root]
        while stack:
            occ = stack.pop()
            yield occ
            stack.extend(reversed(occ.children))

    def node_ids(self) -> frozenset[str]:
        return frozenset(occ.node_id for occ in self.walk())

    def contains(self, node_id: str) -> bool:
        return any(occ.node_id == node_id for occ in self.walk())

    def first_occurrence(self, node_id: str) -> Optional[TreeNode]:
        for occ in self.walk():
            if occ.node_id == node_id:
                return occ
        return None

    def edges(self) -> list[tuple[str, str]]:
        """Unique (parent, child) node-id pairs, sorted."""
        seen = set()
        for occ in self.walk():
            for child in occ.children:
                seen.add((occ.node_id, child.node_id))
        return sorted(seen)
