"""Argument network: append-only mutation surface, snapshots, argument-tree
construction, and structural validation.

The network is single-writer / multi-reader: mutations are serialized by the
caller (the HTTP service holds a lock), snapshots are immutable values that
any number of readers can evaluate concurrently. Nodes are never edited or
deleted; corrections are expressed as new CA/PA nodes.
"""

from __future__ import annotations

import datetime as dt
import warnings
from typing import Callable, Iterable, Optional

from argnet.errors import (
    AlreadyResolved,
    CQIndexOutOfRange,
    DuplicateName,
    EmptyConclusionDescriptor,
    EmptySummary,
    InvalidSpec,
    NotSchemeNode,
    PremiseNotINode,
    SchemeArityWarning,
    SchemeKindMismatch,
    SelfReference,
    UnknownInstance,
    UnknownNode,
    UnknownScheme,
)
from argnet.model import (
    ArgumentTree,
    Certainty,
    CQInstance,
    CQStatus,
    NetworkSnapshot,
    Node,
    NodeKind,
    SchemeDescriptor,
    SchemeKind,
    TreeNode,
    Violation,
    coerce_terms,
)
from argnet.schemes import builtin_schemes, slugify

EventListener = Callable[[str, dict], None]


def _utcnow_ms() -> dt.datetime:
    now = dt.datetime.now(dt.timezone.utc)
    return now.replace(microsecond=(now.microsecond // 1000) * 1000)


class ArgumentNetwork:
    """Mutable append-only store of nodes, schemes and critical questions.

    Every committed mutation is reported to the registered event listeners
    (payloads carry generated ids and timestamps, so replaying the events
    reproduces the exact state).
    """

    def __init__(self, *, include_builtin_schemes: bool = True,
                 clock: Optional[Callable[[], dt.datetime]] = None):
        self._nodes: dict[str, Node] = {}
        self._schemes: dict[str, SchemeDescriptor] = {}
        self._cqs: dict[str, CQInstance] = {}
        self._version = 0
        self._node_seq = 0
        self._cq_seq = 0
        self._clock = clock or _utcnow_ms
        self._listeners: list[EventListener] = []
        if include_builtin_schemes:
            for descriptor in builtin_schemes():
                self._schemes[descriptor.id] = descriptor

    # -- observation ------------------------------------------------------

    @property
    def version(self) -> int:
        return self._version

    def __len__(self) -> int:
        return len(self._nodes)

    def add_listener(self, listener: EventListener) -> None:
        self._listeners.append(listener)

    def snapshot(self) -> NetworkSnapshot:
        return NetworkSnapshot.build(self._nodes, self._schemes, self._cqs, self._version)

    # -- mutations --------------------------------------------------------

    def create_i_node(self, summary: str, certainty=Certainty.AVERAGE, text: str = "",
                      support_url: Optional[str] = None, context: Iterable = (),
                      author: str = "") -> str:
        node = Node(
            id=self._fresh_node_id(),
            kind=NodeKind.I,
            summary=summary,
            certainty=Certainty.coerce(certainty) if certainty is not None else Certainty.AVERAGE,
            text=text,
            support_url=support_url,
            context=coerce_terms(context),
            author=author,
            created_at=self._clock(),
        )
        self._check_node(node)
        self._commit_node(node)
        self._emit("create_i_node", _node_payload(node))
        return node.id

    def create_s_node(self, kind, summary: str, certainty, premises: Iterable[str],
                      conclusion: str, scheme: str, topic: Iterable = (),
                      support_url: Optional[str] = None, default_form: Optional[str] = None,
                      author: str = "") -> str:
        node = Node(
            id=self._fresh_node_id(),
            kind=NodeKind(kind),
            summary=summary,
            certainty=Certainty.coerce(certainty) if certainty is not None else Certainty.AVERAGE,
            support_url=support_url,
            topic=coerce_terms(topic),
            author=author,
            created_at=self._clock(),
            premises=tuple(premises),
            conclusion=conclusion,
            scheme=scheme,
            default_form=default_form or scheme,
        )
        self._check_node(node)
        self._commit_node(node)
        self._emit("create_s_node", _node_payload(node))
        return node.id

    def register_scheme(self, descriptor: SchemeDescriptor) -> str:
        if not descriptor.conclusion_descriptor:
            raise EmptyConclusionDescriptor("scheme conclusion descriptor must be non-empty")
        if descriptor.scheme_kind is SchemeKind.INFERENCE and not descriptor.premise_descriptors:
            raise InvalidSpec("inference scheme needs at least one premise descriptor")
        scheme_id = descriptor.id or slugify(descriptor.name)
        if scheme_id != descriptor.id:
            descriptor = SchemeDescriptor(
                id=scheme_id,
                name=descriptor.name,
                premise_descriptors=descriptor.premise_descriptors,
                conclusion_descriptor=descriptor.conclusion_descriptor,
                critical_questions=descriptor.critical_questions,
                scheme_kind=descriptor.scheme_kind,
            )
        taken = {s.name for s in self._schemes.values()}
        if scheme_id in self._schemes or descriptor.name in taken:
            raise DuplicateName(f"scheme {descriptor.name!r} already registered")
        self._schemes[scheme_id] = descriptor
        self._version += 1
        self._emit("register_scheme", _scheme_payload(descriptor))
        return scheme_id

    def raise_critical_question(self, target: str, cq_index: int, challenge_text: str,
                                raised_by: str = "") -> str:
        node = self._nodes.get(target)
        if node is None:
            raise UnknownNode(f"no node with id {target!r}")
        if not node.kind.is_scheme:
            raise NotSchemeNode(f"critical questions apply to scheme nodes, not {node.kind.value}")
        descriptor = self._schemes.get(node.scheme or "")
        questions = descriptor.critical_questions if descriptor else ()
        if not (0 <= cq_index < len(questions)):
            raise CQIndexOutOfRange(
                f"cq_index {cq_index} out of range for scheme {node.scheme!r} "
                f"({len(questions)} critical questions)"
            )
        instance = CQInstance(
            id=self._fresh_cq_id(),
            target=target,
            cq_index=cq_index,
            challenge_text=challenge_text,
            status=CQStatus.OPEN,
            raised_by=raised_by,
        )
        self._cqs[instance.id] = instance
        self._version += 1
        self._emit("raise_cq", _cq_payload(instance))
        return instance.id

    def resolve_critical_question(self, cq_instance_id: str, resolution_text: str = "") -> CQInstance:
        instance = self._cqs.get(cq_instance_id)
        if instance is None:
            raise UnknownInstance(f"no critical-question instance {cq_instance_id!r}")
        if instance.status is CQStatus.RESOLVED:
            raise AlreadyResolved(f"{cq_instance_id} already resolved")
        updated = CQInstance(
            id=instance.id,
            target=instance.target,
            cq_index=instance.cq_index,
            challenge_text=instance.challenge_text,
            status=CQStatus.RESOLVED,
            raised_by=instance.raised_by,
            resolution_text=resolution_text,
        )
        self._cqs[instance.id] = updated
        self._version += 1
        self._emit("resolve_cq", {"id": instance.id, "resolution_text": resolution_text})
        return updated

    # -- event replay -----------------------------------------------------

    def apply_event(self, event_type: str, payload: dict) -> None:
        """Re-apply a previously emitted event. Runs the same validation as
        the public mutations but keeps the recorded ids and timestamps."""
        from argnet.interchange import cq_from_json, node_from_json  # local import, no cycle at module load

        if event_type in ("create_i_node", "create_s_node"):
            node = node_from_json(payload)
            self._check_node(node)
            self._commit_node(node)
        elif event_type == "register_scheme":
            from argnet.schemes import scheme_from_json

            descriptor = scheme_from_json(payload)
            if descriptor.id in self._schemes:
                raise DuplicateName(f"scheme {descriptor.id!r} already registered")
            self._schemes[descriptor.id] = descriptor
            self._version += 1
        elif event_type == "raise_cq":
            instance = cq_from_json(payload)
            self._cqs[instance.id] = instance
            self._version += 1
            self._bump_cq_seq(instance.id)
        elif event_type == "resolve_cq":
            self.resolve_critical_question(payload["id"], payload.get("resolution_text", ""))
        else:
            raise ValueError(f"unknown event type {event_type!r}")

    # -- internals --------------------------------------------------------

    def _fresh_node_id(self) -> str:
        self._node_seq += 1
        return f"n{self._node_seq:06d}"

    def _fresh_cq_id(self) -> str:
        self._cq_seq += 1
        return f"q{self._cq_seq:06d}"

    def _bump_node_seq(self, node_id: str) -> None:
        if node_id.startswith("n") and node_id[1:].isdigit():
            self._node_seq = max(self._node_seq, int(node_id[1:]))

    def _bump_cq_seq(self, cq_id: str) -> None:
        if cq_id.startswith("q") and cq_id[1:].isdigit():
            self._cq_seq = max(self._cq_seq, int(cq_id[1:]))

    def _check_node(self, node: Node) -> None:
        if not node.summary:
            raise EmptySummary("node summary must be non-empty")
        if node.id in self._nodes:
            raise DuplicateName(f"node id {node.id!r} already exists")
        if node.kind is NodeKind.I:
            return
        if not node.premises or node.conclusion is None:
            raise PremiseNotINode("scheme node needs premises and a conclusion")
        if node.conclusion == node.id or node.id in node.premises:
            raise SelfReference("scheme node may not reference itself")
        descriptor = self._schemes.get(node.scheme or "")
        if descriptor is None:
            raise UnknownScheme(f"scheme {node.scheme!r} is not registered")
        if descriptor.scheme_kind.node_kind is not node.kind:
            raise SchemeKindMismatch(
                f"scheme {descriptor.id!r} is a {descriptor.scheme_kind.value} scheme; "
                f"expected node kind {descriptor.scheme_kind.node_kind.value}, got {node.kind.value}"
            )
        for pid in node.premises:
            premise = self._nodes.get(pid)
            if premise is None:
                raise UnknownNode(f"premise {pid!r} does not resolve")
            if premise.kind is not NodeKind.I:
                raise PremiseNotINode(f"premise {pid!r} is a {premise.kind.value} node; only I-nodes may be premises")
        if node.conclusion not in self._nodes:
            raise UnknownNode(f"conclusion {node.conclusion!r} does not resolve")
        if descriptor.premise_descriptors and len(node.premises) != len(descriptor.premise_descriptors):
            warnings.warn(
                f"node {node.id}: {len(node.premises)} premises given, scheme "
                f"{descriptor.id!r} describes {len(descriptor.premise_descriptors)}",
                SchemeArityWarning,
                stacklevel=3,
            )

    def _commit_node(self, node: Node) -> None:
        self._nodes[node.id] = node
        self._bump_node_seq(node.id)
        self._version += 1

    def _emit(self, event_type: str, payload: dict) -> None:
        for listener in self._listeners:
            listener(event_type, payload)


def _node_payload(node: Node) -> dict:
    from argnet.interchange import node_to_json

    return node_to_json(node)


def _scheme_payload(descriptor: SchemeDescriptor) -> dict:
    from argnet.schemes import scheme_to_json

    return scheme_to_json(descriptor)


def _cq_payload(instance: CQInstance) -> dict:
    from argnet.interchange import cq_to_json

    return cq_to_json(instance)


# -- argument tree ---------------------------------------------------------


def argument_tree(root: str, snapshot: NetworkSnapshot) -> ArgumentTree:
    """Build the evaluation tree rooted at ``root``.

    Children of a node are every non-blocked S-node concluding at it plus,
    for S-nodes, their premises, merged in ascending node-id order. An edge
    to a node already on the current root-to-here path is recorded in
    ``pruned_edges`` and not expanded, which guarantees termination on
    cyclic networks.
    """
    snapshot.node(root)
    pruned: list[tuple[str, str]] = []

    def expand(node_id: str, on_path: frozenset[str]) -> TreeNode:
        node = snapshot.nodes[node_id]
        child_ids = [
            cid for cid in snapshot.incoming(node_id)
            if cid not in snapshot.blocked and cid in snapshot.nodes
        ]
        if node.kind.is_scheme:
            child_ids.extend(pid for pid in node.premises if pid in snapshot.nodes)
        children = []
        path = on_path | {node_id}
        for cid in sorted(child_ids):
            if cid in path:
                pruned.append((node_id, cid))
                continue
            children.append(expand(cid, path))
        return TreeNode(node_id=node_id, children=tuple(children))

    tree_root = expand(root, frozenset())
    return ArgumentTree(root=tree_root, pruned_edges=tuple(pruned))


# -- validation ------------------------------------------------------------


def validate_network(snapshot: NetworkSnapshot) -> list[Violation]:
    """Return every structural invariant breach in the snapshot.

    Mutation operations never produce violations; this exists for imported
    documents and hand-assembled snapshots.
    """
    violations: list[Violation] = []

    def flag(code: str, node_id: Optional[str], message: str) -> None:
        violations.append(Violation(code=code, node_id=node_id, message=message))

    for nid, node in sorted(snapshot.nodes.items()):
        if node.id != nid:
            flag("IndexInconsistency", nid, f"node indexed as {nid!r} carries id {node.id!r}")
        if not node.summary:
            flag("EmptySummary", nid, f"node {nid} has an empty summary")
        if node.kind is NodeKind.I:
            if node.premises or node.conclusion is not None or node.scheme is not None:
                flag("KindConstraint", nid, f"I-node {nid} must not carry premises, a conclusion or a scheme")
            continue
        if not node.premises:
            flag("KindConstraint", nid, f"{node.kind.value}-node {nid} has no premises")
        if node.conclusion is None:
            flag("KindConstraint", nid, f"{node.kind.value}-node {nid} has no conclusion")
        if node.scheme is None:
            flag("KindConstraint", nid, f"{node.kind.value}-node {nid} has no scheme")
        elif node.scheme not in snapshot.schemes:
            flag("UnknownScheme", nid, f"node {nid} uses unregistered scheme {node.scheme!r}")
        else:
            descriptor = snapshot.schemes[node.scheme]
            if descriptor.scheme_kind.node_kind is not node.kind:
                flag("SchemeKindMismatch", nid,
                     f"node {nid} is {node.kind.value} but scheme {node.scheme!r} "
                     f"is a {descriptor.scheme_kind.value} scheme")
        if node.conclusion == nid or nid in node.premises:
            flag("SelfReference", nid, f"node {nid} references itself")
        for pid in node.premises:
            premise = snapshot.nodes.get(pid)
            if premise is None:
                flag("DanglingReference", nid, f"node {nid} premise {pid!r} does not resolve")
            elif premise.kind is not NodeKind.I:
                flag("PremiseNotINode", nid, f"node {nid} premise {pid!r} is a {premise.kind.value} node")
        if node.conclusion is not None and node.conclusion not in snapshot.nodes:
            flag("DanglingReference", nid, f"node {nid} conclusion {node.conclusion!r} does not resolve")

    for cq in sorted(snapshot.cq_instances.values(), key=lambda c: c.id):
        target = snapshot.nodes.get(cq.target)
        if target is None:
            flag("DanglingReference", cq.target, f"critical question {cq.id} targets missing node {cq.target!r}")
            continue
        if not target.kind.is_scheme:
            flag("NotSchemeNode", cq.target, f"critical question {cq.id} targets an I-node")
            continue
        descriptor = snapshot.schemes.get(target.scheme or "")
        if descriptor is not None and not (0 <= cq.cq_index < len(descriptor.critical_questions)):
            flag("CQIndexOutOfRange", cq.target,
                 f"critical question {cq.id} index {cq.cq_index} out of range")

    rebuilt = NetworkSnapshot.build(snapshot.nodes, snapshot.schemes, snapshot.cq_instances)
    if dict(snapshot.incoming_by_conclusion) != dict(rebuilt.incoming_by_conclusion):
        flag("IndexInconsistency", None, "incoming_by_conclusion index disagrees with the node collection")
    if dict(snapshot.usage_index) != dict(rebuilt.usage_index):
        flag("IndexInconsistency", None, "usage_index disagrees with the node collection")
    if snapshot.blocked != rebuilt.blocked:
        flag("IndexInconsistency", None, "blocked set disagrees with the open critical questions")
    return violations
