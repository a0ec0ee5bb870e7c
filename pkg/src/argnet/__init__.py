"""Argument-network engine.

Structured arguments are authored against Walton-style schemes as AIF
I/RA/CA/PA nodes, evaluated with a weighted six-factor credibility score,
explained by most-credible chains, measured for contradiction, queried
along six filter families, and exchanged as versioned JSON documents or
replayable event logs.
"""

from argnet.evaluation import (
    ATTACK_COUNT,
    ATTACK_CREDIBILITY_SUM,
    DEFAULT_PRESET,
    CredibilityBreakdown,
    CredibilityConfig,
    Explanation,
    ValidityVerdict,
    contradiction_degree_simple,
    contradiction_degree_weighted,
    credibility,
    credibility_at,
    evaluate_tree,
    explanation,
    preset,
    presets,
    topic_scope,
    validity,
)
from argnet.interchange import (
    EventLog,
    dumps_document,
    export_document,
    export_dot,
    import_document,
    replay_events,
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
    SchemeDescriptor,
    SchemeKind,
    TreeNode,
    Violation,
)
from argnet.network import ArgumentNetwork, argument_tree, validate_network
from argnet.query import QuerySpec, Taxonomy, load_taxonomy, make_spec, match_context, run_query
from argnet.schemes import builtin_schemes

__version__ = "0.1.0"

__all__ = [
    "ATTACK_COUNT",
    "ATTACK_CREDIBILITY_SUM",
    "ArgumentNetwork",
    "ArgumentTree",
    "Certainty",
    "ContextTerm",
    "CQInstance",
    "CQStatus",
    "CredibilityBreakdown",
    "CredibilityConfig",
    "DEFAULT_PRESET",
    "EventLog",
    "Explanation",
    "NetworkSnapshot",
    "Node",
    "NodeKind",
    "QuerySpec",
    "SchemeDescriptor",
    "SchemeKind",
    "Taxonomy",
    "TreeNode",
    "ValidityVerdict",
    "Violation",
    "argument_tree",
    "builtin_schemes",
    "contradiction_degree_simple",
    "contradiction_degree_weighted",
    "credibility",
    "credibility_at",
    "dumps_document",
    "evaluate_tree",
    "explanation",
    "export_document",
    "export_dot",
    "import_document",
    "load_taxonomy",
    "make_spec",
    "match_context",
    "preset",
    "presets",
    "replay_events",
    "run_query",
    "topic_scope",
    "validate_network",
    "validity",
]
