"""Query engine: the six filter families over a snapshot, taxonomy
subsumption, and weighted context matching.

Filters conjoin; results are ordered by descending credibility, then
ascending node id.
"""

from __future__ import annotations

import datetime as dt
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from argnet.errors import (
    CycleDetected,
    DuplicateChild,
    InvalidSpec,
    UnknownTaxonomyTermWarning,
)
from argnet.evaluation import CredibilityConfig, credibility_at
from argnet.model import ContextTerm, NetworkSnapshot, NodeKind, coerce_terms
from argnet.network import argument_tree

DEFAULT_CONTEXT_THRESHOLD = 0.5


@dataclass(frozen=True)
class Taxonomy:
    """Single-parent term forest answering strict descendant queries."""

    parent: Mapping[str, str]

    @property
    def roots(self) -> tuple[str, ...]:
        terms = set(self.parent) | set(self.parent.values())
        return tuple(sorted(t for t in terms if t not in self.parent))

    def __contains__(self, term: str) -> bool:
        return term in self.parent or term in set(self.parent.values())

    def is_descendant(self, term: str, ancestor: str) -> bool:
        """Strict: a term is not its own descendant."""
        current = self.parent.get(term)
        while current is not None:
            if current == ancestor:
                return True
            current = self.parent.get(current)
        return False

    def matches(self, term: str, ancestor: str) -> bool:
        return term == ancestor or self.is_descendant(term, ancestor)


EMPTY_TAXONOMY = Taxonomy(parent={})


def load_taxonomy(source) -> Taxonomy:
    """Build a taxonomy from ``child<TAB>parent`` text or (child, parent) pairs.

    Rejects repeated children and parent cycles.
    """
    if isinstance(source, str):
        pairs = []
        for line_no, line in enumerate(source.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise InvalidSpec(f"taxonomy line {line_no}: expected 'child<TAB>parent', got {line!r}")
            pairs.append((parts[0], parts[1]))
    else:
        pairs = [(str(c), str(p)) for c, p in source]

    parent: dict[str, str] = {}
    for child, par in pairs:
        if child in parent:
            raise DuplicateChild(f"term {child!r} already has parent {parent[child]!r}")
        parent[child] = par
    for term in parent:
        seen = {term}
        current = parent.get(term)
        while current is not None:
            if current in seen:
                raise CycleDetected(f"taxonomy cycle through {current!r}")
            seen.add(current)
            current = parent.get(current)
    return Taxonomy(parent=parent)


def match_context(query_ctx: Iterable, node_ctx: Iterable,
                  taxonomy: Optional[Taxonomy] = None) -> float:
    """Weighted overlap score: sum of query-weight times node-weight over
    shared terms; a node term that is a taxonomy descendant of a query term
    counts as that term."""
    query_terms = coerce_terms(query_ctx)
    node_terms = coerce_terms(node_ctx)
    taxonomy = taxonomy or EMPTY_TAXONOMY
    score = 0.0
    for q in query_terms:
        for n in node_terms:
            if n.term == q.term or taxonomy.is_descendant(n.term, q.term):
                score += q.weight * n.weight
    return score


@dataclass(frozen=True)
class QuerySpec:
    """Conjunction of optional filters; at least one must be present."""

    kind_filter: Optional[frozenset[NodeKind]] = None
    scheme_filter: Optional[frozenset[str]] = None
    author_filter: Optional[str] = None
    date_range: Optional[tuple[Optional[dt.datetime], Optional[dt.datetime]]] = None
    domain_term: Optional[str] = None
    min_support: Optional[float] = None
    context: Optional[tuple[ContextTerm, ...]] = None
    context_threshold: float = DEFAULT_CONTEXT_THRESHOLD
    target: Optional[str] = None

    def active_filters(self) -> list[str]:
        names = []
        for name in ("kind_filter", "scheme_filter", "author_filter", "date_range",
                     "domain_term", "min_support", "context", "target"):
            if getattr(self, name) is not None:
                names.append(name)
        return names


def make_spec(*, kinds: Optional[Iterable] = None, schemes: Optional[Iterable[str]] = None,
              author: Optional[str] = None,
              date_from: Optional[dt.datetime] = None, date_to: Optional[dt.datetime] = None,
              domain: Optional[str] = None, min_support: Optional[float] = None,
              context: Optional[Iterable] = None,
              context_threshold: float = DEFAULT_CONTEXT_THRESHOLD,
              target: Optional[str] = None) -> QuerySpec:
    """Convenience constructor accepting loose value types."""
    return QuerySpec(
        kind_filter=frozenset(NodeKind(k) for k in kinds) if kinds is not None else None,
        scheme_filter=frozenset(schemes) if schemes is not None else None,
        author_filter=author,
        date_range=(date_from, date_to) if (date_from or date_to) else None,
        domain_term=domain,
        min_support=min_support,
        context=coerce_terms(context) if context is not None else None,
        context_threshold=context_threshold,
        target=target,
    )


def run_query(spec: QuerySpec, snapshot: NetworkSnapshot, config: CredibilityConfig,
              taxonomy: Optional[Taxonomy] = None) -> list[str]:
    """Evaluate the conjunction of the spec's filters.

    ``min_support`` and result ordering use each node's credibility over its
    own argument tree under the active config.
    """
    if not spec.active_filters():
        raise InvalidSpec("query must include at least one filter")
    if spec.date_range is not None:
        lo, hi = spec.date_range
        if lo is not None and hi is not None and lo > hi:
            raise InvalidSpec("date_range start is after its end")
    taxonomy = taxonomy or EMPTY_TAXONOMY

    if spec.domain_term is not None and spec.domain_term not in taxonomy:
        warnings.warn(
            f"domain term {spec.domain_term!r} is not in the taxonomy",
            UnknownTaxonomyTermWarning,
            stacklevel=2,
        )

    candidates: Iterable[str] = sorted(snapshot.nodes)
    if spec.target is not None:
        candidates = sorted(argument_tree(spec.target, snapshot).node_ids())

    matched: list[str] = []
    for nid in candidates:
        node = snapshot.nodes[nid]
        if spec.kind_filter is not None and node.kind not in spec.kind_filter:
            continue
        if spec.scheme_filter is not None and (node.scheme is None or node.scheme not in spec.scheme_filter):
            continue
        if spec.author_filter is not None and node.author != spec.author_filter:
            continue
        if spec.date_range is not None:
            lo, hi = spec.date_range
            created = node.created_at
            if created is None:
                continue
            if lo is not None and created < lo:
                continue
            if hi is not None and created >= hi:  # half-open range
                continue
        if spec.domain_term is not None:
            terms = [t.term for t in node.topic] + [t.term for t in node.context]
            if not any(taxonomy.matches(t, spec.domain_term) for t in terms):
                continue
        if spec.context is not None:
            score = match_context(spec.context, node.context, taxonomy)
            if score < spec.context_threshold:
                continue
        matched.append(nid)

    scored = [(credibility_at(nid, snapshot, config).total, nid) for nid in matched]
    if spec.min_support is not None:
        scored = [(total, nid) for total, nid in scored if total >= spec.min_support]
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return [nid for _, nid in scored]
