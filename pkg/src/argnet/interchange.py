"""Persistence and exchange: the AIF-JSON document format, the append-only
event log, and DOT graph export.

Documents are self-contained: every id referenced inside one is defined in
it. Serialization is canonical (sorted keys, id-ascending lists, ISO-8601
UTC millisecond timestamps) so export -> import -> export is byte-identical.
"""

from __future__ import annotations

import datetime as dt
import json
import os
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from argnet.errors import ArgnetError, CorruptLog, UnsupportedVersion, ValidationFailed
from argnet.evaluation import (
    CredibilityConfig,
    config_from_json,
    config_to_json,
    evaluate_tree,
)
from argnet.model import (
    ArgumentTree,
    Certainty,
    ContextTerm,
    CQInstance,
    CQStatus,
    NetworkSnapshot,
    Node,
    NodeKind,
    Violation,
)
from argnet.network import ArgumentNetwork, validate_network
from argnet.query import Taxonomy
from argnet.schemes import scheme_from_json, scheme_to_json

FORMAT_VERSION = "1.0"

KIND_COLORS = {
    NodeKind.I: "white",
    NodeKind.RA: "green",
    NodeKind.CA: "red",
    NodeKind.PA: "blue",
}


# -- field-level serialization ----------------------------------------------


def timestamp_to_json(value: Optional[dt.datetime]) -> Optional[str]:
    if value is None:
        return None
    value = value.astimezone(dt.timezone.utc)
    return value.strftime("%Y-%m-%dT%H:%M:%S.") + f"{value.microsecond // 1000:03d}Z"


def timestamp_from_json(value: Optional[str]) -> Optional[dt.datetime]:
    if value is None:
        return None
    return dt.datetime.strptime(value, "%Y-%m-%dT%H:%M:%S.%fZ").replace(tzinfo=dt.timezone.utc)


def _terms_to_json(terms: Iterable[ContextTerm]) -> list[dict]:
    return [{"term": t.term, "weight": t.weight} for t in terms]


def _terms_from_json(values) -> tuple[ContextTerm, ...]:
    return tuple(ContextTerm(term=v["term"], weight=float(v.get("weight", 1.0))) for v in values or ())


def node_to_json(node: Node) -> dict:
    return {
        "id": node.id,
        "kind": node.kind.value,
        "summary": node.summary,
        "text": node.text,
        "certainty": node.certainty.value,
        "support_url": node.support_url,
        "context": _terms_to_json(node.context),
        "topic": _terms_to_json(node.topic),
        "author": node.author,
        "created_at": timestamp_to_json(node.created_at),
        "premises": list(node.premises),
        "conclusion": node.conclusion,
        "scheme": node.scheme,
        "default_form": node.default_form,
    }


def node_from_json(obj: dict) -> Node:
    return Node(
        id=obj["id"],
        kind=NodeKind(obj["kind"]),
        summary=obj.get("summary", ""),
        text=obj.get("text", ""),
        certainty=Certainty(obj.get("certainty", "average")),
        support_url=obj.get("support_url"),
        context=_terms_from_json(obj.get("context")),
        topic=_terms_from_json(obj.get("topic")),
        author=obj.get("author", ""),
        created_at=timestamp_from_json(obj.get("created_at")),
        premises=tuple(obj.get("premises") or ()),
        conclusion=obj.get("conclusion"),
        scheme=obj.get("scheme"),
        default_form=obj.get("default_form"),
    )


def cq_to_json(instance: CQInstance) -> dict:
    return {
        "id": instance.id,
        "target": instance.target,
        "cq_index": instance.cq_index,
        "challenge_text": instance.challenge_text,
        "status": instance.status.value,
        "raised_by": instance.raised_by,
        "resolution_text": instance.resolution_text,
    }


def cq_from_json(obj: dict) -> CQInstance:
    return CQInstance(
        id=obj["id"],
        target=obj["target"],
        cq_index=int(obj["cq_index"]),
        challenge_text=obj.get("challenge_text", ""),
        status=CQStatus(obj.get("status", "open")),
        raised_by=obj.get("raised_by", ""),
        resolution_text=obj.get("resolution_text"),
    )


def taxonomy_to_json(taxonomy: Taxonomy) -> dict:
    return {"edges": dict(sorted(taxonomy.parent.items()))}


def taxonomy_from_json(obj: dict) -> Taxonomy:
    return Taxonomy(parent=dict(obj.get("edges") or {}))


# -- documents ---------------------------------------------------------------


def export_document(snapshot: NetworkSnapshot, *, config: Optional[CredibilityConfig] = None,
                    taxonomy: Optional[Taxonomy] = None) -> dict:
    """Serialize a snapshot into a self-contained document, ids ascending."""
    doc = {
        "version": FORMAT_VERSION,
        "nodes": [node_to_json(snapshot.nodes[nid]) for nid in sorted(snapshot.nodes)],
        "schemes": [scheme_to_json(snapshot.schemes[sid]) for sid in sorted(snapshot.schemes)],
        "cq_instances": [cq_to_json(snapshot.cq_instances[cid]) for cid in sorted(snapshot.cq_instances)],
    }
    if config is not None:
        doc["config"] = config_to_json(config)
    if taxonomy is not None:
        doc["taxonomy"] = taxonomy_to_json(taxonomy)
    return doc


def dumps_document(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def import_document(document: Union[str, dict]) -> NetworkSnapshot:
    """Parse and validate a document into a snapshot.

    Import is atomic: any structural violation aborts with the full list.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ValidationFailed(
                [Violation(code="MalformedDocument", node_id=None, message=str(exc))]
            ) from exc
    version = document.get("version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(f"unsupported document version {version!r}; expected {FORMAT_VERSION!r}")

    violations: list[Violation] = []
    nodes: dict[str, Node] = {}
    schemes = {}
    cqs: dict[str, CQInstance] = {}

    for raw in document.get("schemes") or ():
        try:
            descriptor = scheme_from_json(raw)
        except (KeyError, ValueError) as exc:
            violations.append(Violation("MalformedScheme", raw.get("id"), f"bad scheme record: {exc}"))
            continue
        if descriptor.id in schemes:
            violations.append(Violation("DuplicateName", descriptor.id, f"scheme {descriptor.id!r} defined twice"))
        schemes[descriptor.id] = descriptor
        if not descriptor.conclusion_descriptor:
            violations.append(Violation("EmptyConclusionDescriptor", descriptor.id,
                                        f"scheme {descriptor.id!r} has an empty conclusion descriptor"))

    for raw in document.get("nodes") or ():
        try:
            node = node_from_json(raw)
        except (KeyError, ValueError, ArgnetError) as exc:
            violations.append(Violation("MalformedNode", raw.get("id"), f"bad node record: {exc}"))
            continue
        if node.id in nodes:
            violations.append(Violation("DuplicateName", node.id, f"node {node.id!r} defined twice"))
        nodes[node.id] = node

    for raw in document.get("cq_instances") or ():
        try:
            instance = cq_from_json(raw)
        except (KeyError, ValueError) as exc:
            violations.append(Violation("MalformedCQ", raw.get("id"), f"bad critical-question record: {exc}"))
            continue
        cqs[instance.id] = instance

    snapshot = NetworkSnapshot.build(nodes, schemes, cqs, version=len(nodes) + len(cqs))
    violations.extend(validate_network(snapshot))
    if violations:
        raise ValidationFailed(violations)
    return snapshot


def network_from_snapshot(snapshot: NetworkSnapshot) -> ArgumentNetwork:
    """Reconstruct a mutable network whose snapshot equals the given one."""
    network = ArgumentNetwork(include_builtin_schemes=False)
    for sid in sorted(snapshot.schemes):
        network._schemes[sid] = snapshot.schemes[sid]
    for nid in sorted(snapshot.nodes):
        network._nodes[nid] = snapshot.nodes[nid]
        network._bump_node_seq(nid)
    for cid in sorted(snapshot.cq_instances):
        network._cqs[cid] = snapshot.cq_instances[cid]
        network._bump_cq_seq(cid)
    network._version = snapshot.version
    return network


def document_config(document: dict) -> Optional[CredibilityConfig]:
    raw = document.get("config")
    return config_from_json(raw) if raw is not None else None


def document_taxonomy(document: dict) -> Optional[Taxonomy]:
    raw = document.get("taxonomy")
    return taxonomy_from_json(raw) if raw is not None else None


# -- DOT export --------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def export_dot(tree: ArgumentTree, snapshot: NetworkSnapshot,
               config: CredibilityConfig) -> str:
    """Render the evaluated tree as a DOT digraph.

    I-nodes are white, RA green, CA red, PA blue; edges run premise to
    S-node and S-node to conclusion; pruned edges are dashed. Labels carry
    the summary truncated to 40 characters and the credibility to 2
    decimals.
    """
    evaluated = evaluate_tree(tree, snapshot, config)
    labels: dict[str, str] = {}
    for occ, breakdown in evaluated.breakdowns.items():
        labels.setdefault(occ.node_id, f"{snapshot.nodes[occ.node_id].summary[:40]}\n{breakdown.total:.2f}")

    lines = ["digraph argument_tree {", "  rankdir=BT;"]
    for nid in sorted(labels):
        node = snapshot.nodes[nid]
        color = KIND_COLORS[node.kind]
        lines.append(
            f'  "{_dot_escape(nid)}" [label="{_dot_escape(labels[nid])}", '
            f'style=filled, fillcolor={color}];'
        )
    # tree edges render child -> parent, which is premise -> S-node for
    # premise children and S-node -> conclusion for concluder children.
    for parent, child in tree.edges():
        lines.append(f'  "{_dot_escape(child)}" -> "{_dot_escape(parent)}";')
    for parent, child in sorted(set(tree.pruned_edges)):
        lines.append(f'  "{_dot_escape(child)}" -> "{_dot_escape(parent)}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- event log ---------------------------------------------------------------


class EventLog:
    """Append-only newline-delimited JSON log of mutation events.

    Records are ``{seq, timestamp, event_type, payload}`` with strictly
    increasing sequence numbers starting at 1.
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self._next_seq = 1
        if self.path.exists():
            for record in read_events(self.path):
                self._next_seq = record["seq"] + 1

    def append(self, event_type: str, payload: dict) -> int:
        record = {
            "seq": self._next_seq,
            "timestamp": timestamp_to_json(dt.datetime.now(dt.timezone.utc)),
            "event_type": event_type,
            "payload": payload,
        }
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
            handle.flush()
            os.fsync(handle.fileno())
        self._next_seq += 1
        return record["seq"]

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        return list(read_events(self.path))


def read_events(path: Union[str, Path]) -> Iterator[dict]:
    """Yield log records, enforcing sequence continuity."""
    expected = None
    with Path(path).open("r", encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorruptLog(f"line {line_no}: truncated or malformed record ({exc})") from exc
            seq = record.get("seq")
            if not isinstance(seq, int):
                raise CorruptLog(f"line {line_no}: missing sequence number")
            if expected is None:
                expected = seq
            if seq != expected:
                raise CorruptLog(f"line {line_no}: expected seq {expected}, got {seq}")
            expected += 1
            yield record


def replay_events(source, *, include_builtin_schemes: bool = True,
                  base: Optional[NetworkSnapshot] = None) -> NetworkSnapshot:
    """Rebuild the snapshot a log describes, optionally on top of a
    checkpoint snapshot."""
    if base is not None:
        network = network_from_snapshot(base)
    else:
        network = ArgumentNetwork(include_builtin_schemes=include_builtin_schemes)
    if isinstance(source, (str, Path)):
        records: Iterable[dict] = read_events(source)
    else:
        records = _check_sequence(source)
    for record in records:
        network.apply_event(record["event_type"], record["payload"])
    return network.snapshot()


def _check_sequence(records: Iterable[dict]) -> Iterator[dict]:
    expected = None
    for record in records:
        seq = record.get("seq")
        if not isinstance(seq, int):
            raise CorruptLog("record without sequence number")
        if expected is None:
            expected = seq
        if seq != expected:
            raise CorruptLog(f"expected seq {expected}, got {seq}")
        expected += 1
        yield record
