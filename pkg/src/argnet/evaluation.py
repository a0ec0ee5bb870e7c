"""Credibility evaluation: the six-factor weighted score, validity verdicts,
best-explanation chains, and contradiction-degree metrics.

All functions are pure over immutable snapshots, so evaluations can run
concurrently and repeat bit-identically.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Optional, Sequence

from argnet.errors import (
    EmptyDenominator,
    MissingSchemeWeightWarning,
    NodeNotInTree,
    NotSchemeNode,
    ZeroDenominator,
)
from argnet.model import ArgumentTree, NetworkSnapshot, NodeKind, TreeNode
from argnet.network import argument_tree

ATTACK_COUNT = "count"
ATTACK_CREDIBILITY_SUM = "credibility_sum"
ATTACK_MODES = (ATTACK_COUNT, ATTACK_CREDIBILITY_SUM)


@dataclass(frozen=True)
class CredibilityConfig:
    """Factor weights and per-scheme source values for evaluation.

    ``attack_mode`` selects how CA-nodes enter the attack factor: as a plain
    count or as the sum of the attackers' credibilities.
    """

    w_cert: float = 0.02
    w_usage: float = 0.7
    w_minsup: float = 0.18
    w_conflict: float = -1.5
    w_pref: float = 1.5
    w_scheme: float = 0.1
    scheme_weights: Mapping[str, float] = field(default_factory=dict)
    balance_point: float = 0.0
    attack_mode: str = ATTACK_COUNT

    def __post_init__(self):
        if self.attack_mode not in ATTACK_MODES:
            raise ValueError(f"attack_mode must be one of {ATTACK_MODES}")

    def scheme_weight(self, scheme_id: Optional[str]) -> float:
        if scheme_id is None:
            return 0.0
        try:
            return float(self.scheme_weights[scheme_id])
        except KeyError:
            warnings.warn(
                f"no scheme weight configured for {scheme_id!r}; using 0",
                MissingSchemeWeightWarning,
                stacklevel=3,
            )
            return 0.0

    def with_attack_mode(self, mode: str) -> "CredibilityConfig":
        return CredibilityConfig(
            w_cert=self.w_cert, w_usage=self.w_usage, w_minsup=self.w_minsup,
            w_conflict=self.w_conflict, w_pref=self.w_pref, w_scheme=self.w_scheme,
            scheme_weights=dict(self.scheme_weights),
            balance_point=self.balance_point, attack_mode=mode,
        )


def config_to_json(config: CredibilityConfig) -> dict:
    return {
        "w_cert": config.w_cert,
        "w_usage": config.w_usage,
        "w_minsup": config.w_minsup,
        "w_conflict": config.w_conflict,
        "w_pref": config.w_pref,
        "w_scheme": config.w_scheme,
        "scheme_weights": dict(sorted(config.scheme_weights.items())),
        "balance_point": config.balance_point,
        "attack_mode": config.attack_mode,
    }


def config_from_json(obj: Mapping) -> CredibilityConfig:
    return CredibilityConfig(
        w_cert=float(obj.get("w_cert", 0.0)),
        w_usage=float(obj.get("w_usage", 0.0)),
        w_minsup=float(obj.get("w_minsup", 0.0)),
        w_conflict=float(obj.get("w_conflict", 0.0)),
        w_pref=float(obj.get("w_pref", 0.0)),
        w_scheme=float(obj.get("w_scheme", 0.0)),
        scheme_weights={k: float(v) for k, v in (obj.get("scheme_weights") or {}).items()},
        balance_point=float(obj.get("balance_point", 0.0)),
        attack_mode=obj.get("attack_mode", ATTACK_COUNT),
    )


DEFAULT_PRESET = "scenario-2010"


@lru_cache(maxsize=1)
def _load_presets() -> dict[str, CredibilityConfig]:
    raw = resources.files("argnet.data").joinpath("presets.json").read_text("utf-8")
    return {name: config_from_json(obj) for name, obj in json.loads(raw).items()}


def presets() -> dict[str, CredibilityConfig]:
    """Named weighting presets shipped with the package."""
    return dict(_load_presets())


def preset(name: str = DEFAULT_PRESET) -> CredibilityConfig:
    try:
        return _load_presets()[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {sorted(_load_presets())}") from None


@dataclass(frozen=True)
class CredibilityBreakdown:
    """The six factors and their weighted total for one evaluated node."""

    c: float
    u: int
    m: float
    a: float
    p: float
    s: float
    total: float

    def to_json(self) -> dict:
        return {"c": self.c, "u": self.u, "m": self.m, "a": self.a,
                "p": self.p, "s": self.s, "total": self.total}


@dataclass(frozen=True)
class ValidityVerdict:
    node: str
    credibility: float
    valid: bool
    balance_point: float

    def status_text(self, summary: str) -> str:
        polarity = "" if self.valid else "not "
        return f"The fact that {summary} is {polarity}sufficiently supported."

    def to_json(self) -> dict:
        return {"node": self.node, "credibility": self.credibility,
                "valid": self.valid, "balance_point": self.balance_point}


@dataclass(frozen=True)
class Explanation:
    """Most-credible root-to-leaf chain with its assembled prose."""

    path: tuple[str, ...]
    text: str
    path_credibilities: tuple[float, ...]

    def to_json(self) -> dict:
        return {"path": list(self.path), "text": self.text,
                "path_credibilities": list(self.path_credibilities)}


class EvaluatedTree:
    """An argument tree together with per-occurrence breakdowns."""

    def __init__(self, tree: ArgumentTree, snapshot: NetworkSnapshot,
                 config: CredibilityConfig):
        self.tree = tree
        self.snapshot = snapshot
        self.config = config
        self.breakdowns: dict[TreeNode, CredibilityBreakdown] = {}
        self._evaluate(tree.root)

    def _evaluate(self, occ: TreeNode) -> CredibilityBreakdown:
        cached = self.breakdowns.get(occ)
        if cached is not None:
            return cached
        node = self.snapshot.nodes[occ.node_id]
        child_breakdowns = [(child, self._evaluate(child)) for child in occ.children]

        def is_concluder(child: TreeNode, kind: NodeKind) -> bool:
            c = self.snapshot.nodes[child.node_id]
            return c.kind is kind and c.conclusion == occ.node_id

        c = float(node.certainty.numeric)
        u = self.snapshot.usage(occ.node_id)

        if node.kind is NodeKind.I:
            supports = [bd.total for ch, bd in child_breakdowns if is_concluder(ch, NodeKind.RA)]
        else:
            premise_ids = set(node.premises)
            supports = [bd.total for ch, bd in child_breakdowns if ch.node_id in premise_ids]
        m = min(supports) if supports else 0.0

        ca_vals = [bd.total for ch, bd in child_breakdowns if is_concluder(ch, NodeKind.CA)]
        a = float(len(ca_vals)) if self.config.attack_mode == ATTACK_COUNT else float(sum(ca_vals))
        p = float(sum(bd.total for ch, bd in child_breakdowns if is_concluder(ch, NodeKind.PA)))
        s = self.config.scheme_weight(node.scheme) if node.kind.is_scheme else 0.0

        total = (self.config.w_cert * c + self.config.w_usage * u
                 + self.config.w_minsup * m + self.config.w_conflict * a
                 + self.config.w_pref * p + self.config.w_scheme * s)
        breakdown = CredibilityBreakdown(c=c, u=u, m=m, a=a, p=p, s=s, total=total)
        self.breakdowns[occ] = breakdown
        return breakdown

    def breakdown_for(self, node_id: str) -> CredibilityBreakdown:
        """Breakdown at the first preorder occurrence of ``node_id``."""
        occ = self.tree.first_occurrence(node_id)
        if occ is None:
            raise NodeNotInTree(f"node {node_id!r} is not in the argument tree")
        return self.breakdowns[occ]

    @property
    def root_breakdown(self) -> CredibilityBreakdown:
        return self.breakdowns[self.tree.root]


def evaluate_tree(tree: ArgumentTree, snapshot: NetworkSnapshot,
                  config: CredibilityConfig) -> EvaluatedTree:
    return EvaluatedTree(tree, snapshot, config)


def credibility(node_id: str, tree: ArgumentTree, snapshot: NetworkSnapshot,
                config: CredibilityConfig) -> CredibilityBreakdown:
    """Bottom-up credibility of ``node_id`` within an existing tree."""
    return evaluate_tree(tree, snapshot, config).breakdown_for(node_id)


def credibility_at(node_id: str, snapshot: NetworkSnapshot,
                   config: CredibilityConfig) -> CredibilityBreakdown:
    """Credibility of a node evaluated over its own argument tree."""
    tree = argument_tree(node_id, snapshot)
    return evaluate_tree(tree, snapshot, config).root_breakdown


def validity(node_id: str, snapshot: NetworkSnapshot,
             config: CredibilityConfig) -> ValidityVerdict:
    """Valid iff credibility strictly exceeds the configured balance point."""
    breakdown = credibility_at(node_id, snapshot, config)
    return ValidityVerdict(
        node=node_id,
        credibility=breakdown.total,
        valid=breakdown.total > config.balance_point,
        balance_point=config.balance_point,
    )


def explanation(node_id: str, snapshot: NetworkSnapshot,
                config: CredibilityConfig) -> Explanation:
    """Greedy most-credible descent from the node to a leaf of its tree.

    Ties are broken toward the ascending node id; the assembled text walks
    the path in reverse, folding each scheme hop into a connective clause.
    """
    tree = argument_tree(node_id, snapshot)
    evaluated = evaluate_tree(tree, snapshot, config)
    occ = tree.root
    path = [occ]
    while occ.children:
        best = occ.children[0]
        best_val = evaluated.breakdowns[best].total
        for child in occ.children[1:]:
            val = evaluated.breakdowns[child].total
            if val > best_val:
                best, best_val = child, val
        path.append(best)
        occ = best
    ids = tuple(o.node_id for o in path)
    totals = tuple(evaluated.breakdowns[o].total for o in path)
    return Explanation(path=ids, text=_assemble_text(ids, snapshot), path_credibilities=totals)


def _assemble_text(path: Sequence[str], snapshot: NetworkSnapshot) -> str:
    """Reverse-order concatenation of path summaries with fixed connectives."""
    if len(path) == 1:
        return snapshot.nodes[path[0]].summary
    reverse = list(reversed(path))
    pieces: list[str] = []
    consumed: set[str] = set()
    for idx, nid in enumerate(reverse):
        if nid in consumed:
            continue
        node = snapshot.nodes[nid]
        if node.kind is NodeKind.I:
            nxt = snapshot.nodes[reverse[idx + 1]] if idx + 1 < len(reverse) else None
            if nxt is not None and nxt.kind.is_scheme and nid in nxt.premises:
                continue  # appears inside the scheme clause
            pieces.append(node.summary)
            continue
        premise_summaries = [snapshot.nodes[p].summary for p in node.premises if p in snapshot.nodes]
        facts = " and that ".join(premise_summaries)
        target = snapshot.nodes.get(node.conclusion or "")
        if node.kind is NodeKind.CA:
            attacked = target
            if attacked is not None and attacked.kind.is_scheme:
                consumed.add(attacked.id)
                attacked = snapshot.nodes.get(attacked.conclusion or "")
            if attacked is not None:
                consumed.add(attacked.id)
            label = attacked.summary if attacked is not None else "the target"
            pieces.append(f'which is in conflict with "{label}"')
            continue
        verb = "indicate" if node.kind is NodeKind.RA else "support"
        if target is not None:
            consumed.add(target.id)
            pieces.append(f"The facts that {facts} {verb} that {target.summary}")
        else:
            pieces.append(f"The facts that {facts} {verb} the conclusion")
    return ", ".join(pieces)


def contradiction_degree_simple(scope: Iterable[str], snapshot: NetworkSnapshot) -> float:
    """Conflict count over rule-plus-preference count within the scope."""
    counts = {"RA": 0, "CA": 0, "PA": 0}
    for nid in scope:
        node = snapshot.node(nid)
        if not node.kind.is_scheme:
            raise NotSchemeNode(f"contradiction scope must contain only scheme nodes, got {nid!r}")
        counts[node.kind.value] += 1
    denominator = counts["RA"] + counts["PA"]
    if denominator == 0:
        raise EmptyDenominator("scope has no RA or PA nodes")
    return counts["CA"] / denominator


def contradiction_degree_weighted(scope: Iterable[str], snapshot: NetworkSnapshot,
                                  config: CredibilityConfig) -> float:
    """Credibility-mass variant; every scope node is evaluated as its own
    tree root."""
    sums = {"RA": 0.0, "CA": 0.0, "PA": 0.0}
    counts = {"RA": 0, "CA": 0, "PA": 0}
    for nid in sorted(set(scope)):
        node = snapshot.node(nid)
        if not node.kind.is_scheme:
            raise NotSchemeNode(f"contradiction scope must contain only scheme nodes, got {nid!r}")
        value = credibility_at(nid, snapshot, config).total
        sums[node.kind.value] += value
        counts[node.kind.value] += 1
    if counts["RA"] + counts["PA"] == 0:
        raise EmptyDenominator("scope has no RA or PA nodes")
    denominator = sums["RA"] + sums["PA"]
    if denominator == 0.0:
        raise ZeroDenominator("RA and PA credibilities sum to exactly 0")
    return sums["CA"] / denominator


def topic_scope(snapshot: NetworkSnapshot, topic_term: Optional[str] = None,
                taxonomy=None) -> tuple[str, ...]:
    """S-node ids in a topic (term match or taxonomy descendant), or all
    S-nodes when no term is given."""
    result = []
    for nid in snapshot.s_node_ids():
        node = snapshot.nodes[nid]
        if topic_term is None:
            result.append(nid)
            continue
        terms = [t.term for t in node.topic] + [t.term for t in node.context]
        for term in terms:
            if term == topic_term or (taxonomy is not None and taxonomy.is_descendant(term, topic_term)):
                result.append(nid)
                break
    return tuple(result)
