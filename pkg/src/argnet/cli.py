"""Command-line surface over a data directory.

State lives in ``--data-dir`` (or $ARGNET_DATA_DIR): mutations append to the
event log, reads replay it. ``--format doc`` switches any command to
machine-readable JSON output. Engine errors exit with their distinct codes.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from argnet.errors import ArgnetError, ValidationFailed
from argnet.evaluation import (
    config_to_json,
    contradiction_degree_simple,
    contradiction_degree_weighted,
    credibility_at,
    explanation,
    preset,
    presets,
    topic_scope,
    validity,
)
from argnet.interchange import (
    dumps_document,
    export_document,
    export_dot,
    import_document,
    timestamp_from_json,
)
from argnet.model import SchemeDescriptor, SchemeKind
from argnet.network import argument_tree
from argnet.query import make_spec, run_query
from argnet.schemes import scheme_to_json
from argnet.service import ENV_DATA_DIR, ServiceConfig, serve
from argnet.storage import Store


def _parse_terms(values: tuple[str, ...]) -> list[tuple[str, float]]:
    terms = []
    for raw in values:
        if "=" in raw:
            term, _, weight = raw.partition("=")
            terms.append((term, float(weight)))
        else:
            terms.append((raw, 1.0))
    return terms


def _echo_doc(payload) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))


class Context:
    def __init__(self, data_dir: str, output_format: str):
        self.data_dir = data_dir
        self.output_format = output_format
        self._store = None

    @property
    def store(self) -> Store:
        if self._store is None:
            self._store = Store(self.data_dir)
        return self._store

    @property
    def doc_mode(self) -> bool:
        return self.output_format == "doc"


@click.group()
@click.option("--data-dir", default=None, help="Data directory (default: $ARGNET_DATA_DIR or ./argnet-data)")
@click.option("--format", "output_format", type=click.Choice(["text", "doc"]), default="text",
              help="Output format: human text or machine-readable JSON")
@click.pass_context
def main(ctx, data_dir, output_format):
    """Argument-network engine: author, evaluate, query, exchange."""
    resolved = data_dir or os.environ.get(ENV_DATA_DIR) or "./argnet-data"
    ctx.obj = Context(resolved, output_format)


def _run(ctx_obj, action):
    try:
        return action()
    except ArgnetError as exc:
        click.echo(f"error [{exc.code}]: {exc.message}", err=True)
        if isinstance(exc, ValidationFailed):
            for violation in exc.violations:
                click.echo(f"  - {violation.code}: {violation.message}", err=True)
        sys.exit(exc.exit_code)


@main.command("add-i")
@click.option("--summary", required=True)
@click.option("--certainty", default="average")
@click.option("--text", default="")
@click.option("--support-url", default=None)
@click.option("--context", "context_terms", multiple=True, help="term=weight (repeatable)")
@click.option("--author", default="")
@click.pass_obj
def add_i(obj, summary, certainty, text, support_url, context_terms, author):
    """Create an information node."""
    def action():
        with obj.store.lock():
            node_id = obj.store.network.create_i_node(
                summary, certainty=certainty, text=text, support_url=support_url,
                context=_parse_terms(context_terms), author=author,
            )
        if obj.doc_mode:
            from argnet.interchange import node_to_json

            _echo_doc(node_to_json(obj.store.snapshot().nodes[node_id]))
        else:
            click.echo(node_id)
    _run(obj, action)


@main.command("add-s")
@click.option("--kind", type=click.Choice(["RA", "CA", "PA"]), required=True)
@click.option("--summary", required=True)
@click.option("--certainty", default="average")
@click.option("--premise", "premises", multiple=True, required=True)
@click.option("--conclusion", required=True)
@click.option("--scheme", required=True)
@click.option("--topic", "topic_terms", multiple=True, help="term=weight (repeatable)")
@click.option("--support-url", default=None)
@click.option("--default-form", default=None)
@click.option("--author", default="")
@click.pass_obj
def add_s(obj, kind, summary, certainty, premises, conclusion, scheme, topic_terms,
          support_url, default_form, author):
    """Create a scheme-application node (RA, CA or PA)."""
    def action():
        with obj.store.lock():
            node_id = obj.store.network.create_s_node(
                kind, summary, certainty, premises=list(premises), conclusion=conclusion,
                scheme=scheme, topic=_parse_terms(topic_terms), support_url=support_url,
                default_form=default_form, author=author,
            )
        if obj.doc_mode:
            from argnet.interchange import node_to_json

            _echo_doc(node_to_json(obj.store.snapshot().nodes[node_id]))
        else:
            click.echo(node_id)
    _run(obj, action)


@main.group()
def schemes():
    """Inspect or extend the scheme registry."""


@schemes.command("list")
@click.pass_obj
def schemes_list(obj):
    def action():
        snapshot = obj.store.snapshot()
        records = [scheme_to_json(snapshot.schemes[sid]) for sid in sorted(snapshot.schemes)]
        if obj.doc_mode:
            _echo_doc({"schemes": records})
        else:
            for record in records:
                kind = record["scheme_kind"]
                cqs = len(record["critical_questions"])
                click.echo(f"{record['id']}  [{kind}]  {record['name']}  ({cqs} critical questions)")
    _run(obj, action)


@schemes.command("add")
@click.option("--file", "path", type=click.Path(exists=True), required=True,
              help="JSON file with one scheme descriptor")
@click.pass_obj
def schemes_add(obj, path):
    def action():
        raw = json.loads(Path(path).read_text("utf-8"))
        descriptor = SchemeDescriptor(
            id=raw.get("id", ""),
            name=raw["name"],
            premise_descriptors=tuple(raw.get("premise_descriptors", ())),
            conclusion_descriptor=raw.get("conclusion_descriptor", ""),
            critical_questions=tuple(raw.get("critical_questions", ())),
            scheme_kind=SchemeKind(raw.get("scheme_kind", "inference")),
        )
        with obj.store.lock():
            scheme_id = obj.store.network.register_scheme(descriptor)
        click.echo(scheme_id)
    _run(obj, action)


@main.group()
def cq():
    """Raise or resolve critical questions."""


@cq.command("raise")
@click.option("--target", required=True)
@click.option("--cq-index", type=int, required=True)
@click.option("--text", "challenge_text", default="")
@click.option("--by", "raised_by", default="")
@click.pass_obj
def cq_raise(obj, target, cq_index, challenge_text, raised_by):
    def action():
        with obj.store.lock():
            cq_id = obj.store.network.raise_critical_question(target, cq_index, challenge_text, raised_by)
        click.echo(cq_id)
    _run(obj, action)


@cq.command("resolve")
@click.option("--id", "cq_id", required=True)
@click.option("--text", "resolution_text", default="")
@click.pass_obj
def cq_resolve(obj, cq_id, resolution_text):
    def action():
        with obj.store.lock():
            obj.store.network.resolve_critical_question(cq_id, resolution_text)
        click.echo(f"{cq_id} resolved")
    _run(obj, action)


@main.command("eval")
@click.argument("node_id")
@click.pass_obj
def eval_node(obj, node_id):
    """Credibility breakdown and validity verdict for a node."""
    def action():
        snapshot = obj.store.snapshot()
        snapshot.node(node_id)
        _, config = obj.store.load_config()
        breakdown = credibility_at(node_id, snapshot, config)
        verdict = validity(node_id, snapshot, config)
        if obj.doc_mode:
            _echo_doc({"node": node_id, "breakdown": breakdown.to_json(), "verdict": verdict.to_json()})
        else:
            click.echo(f"node {node_id}")
            click.echo(f"  c={breakdown.c} u={breakdown.u} m={breakdown.m:.6g} "
                       f"a={breakdown.a:.6g} p={breakdown.p:.6g} s={breakdown.s:.6g}")
            click.echo(f"  credibility {breakdown.total:.6g}")
            click.echo(f"  verdict {'valid' if verdict.valid else 'invalid'} "
                       f"(balance point {verdict.balance_point:g})")
    _run(obj, action)


@main.command("explain")
@click.argument("node_id")
@click.pass_obj
def explain(obj, node_id):
    """Best-explanation path and assembled text for a node."""
    def action():
        snapshot = obj.store.snapshot()
        snapshot.node(node_id)
        _, config = obj.store.load_config()
        result = explanation(node_id, snapshot, config)
        if obj.doc_mode:
            _echo_doc(result.to_json())
        else:
            click.echo(" -> ".join(result.path))
            click.echo(result.text)
    _run(obj, action)


@main.command("dc")
@click.option("--weighted", is_flag=True, default=False)
@click.option("--topic", default=None)
@click.pass_obj
def dc(obj, weighted, topic):
    """Contradiction degree over a topic scope (or the whole network)."""
    def action():
        snapshot = obj.store.snapshot()
        scope = topic_scope(snapshot, topic)
        if weighted:
            _, config = obj.store.load_config()
            value = contradiction_degree_weighted(scope, snapshot, config)
        else:
            value = contradiction_degree_simple(scope, snapshot)
        if obj.doc_mode:
            _echo_doc({"value": value, "weighted": weighted, "topic": topic, "scope": list(scope)})
        else:
            click.echo(f"{value:g}")
    _run(obj, action)


@main.command("query")
@click.option("--kind", "kinds", multiple=True, type=click.Choice(["I", "RA", "CA", "PA"]))
@click.option("--scheme", "scheme_ids", multiple=True)
@click.option("--author", default=None)
@click.option("--from", "date_from", default=None, help="ISO-8601 UTC, inclusive")
@click.option("--to", "date_to", default=None, help="ISO-8601 UTC, exclusive")
@click.option("--domain", default=None)
@click.option("--min-support", type=float, default=None)
@click.option("--context", "context_terms", multiple=True, help="term=weight (repeatable)")
@click.option("--theta", type=float, default=0.5, help="Context match threshold")
@click.option("--target", default=None)
@click.option("--taxonomy", "taxonomy_path", type=click.Path(exists=True), default=None,
              help="child<TAB>parent taxonomy file")
@click.pass_obj
def query(obj, kinds, scheme_ids, author, date_from, date_to, domain, min_support,
          context_terms, theta, target, taxonomy_path):
    """Run a conjunctive query over the network."""
    def action():
        from argnet.query import load_taxonomy

        snapshot = obj.store.snapshot()
        _, config = obj.store.load_config()
        taxonomy = load_taxonomy(Path(taxonomy_path).read_text("utf-8")) if taxonomy_path else None
        spec = make_spec(
            kinds=kinds or None,
            schemes=scheme_ids or None,
            author=author,
            date_from=timestamp_from_json(date_from) if date_from else None,
            date_to=timestamp_from_json(date_to) if date_to else None,
            domain=domain,
            min_support=min_support,
            context=_parse_terms(context_terms) if context_terms else None,
            context_threshold=theta,
            target=target,
        )
        ids = run_query(spec, snapshot, config, taxonomy)
        if obj.doc_mode:
            _echo_doc({"results": [
                {"id": nid, "credibility": credibility_at(nid, snapshot, config).total}
                for nid in ids
            ]})
        else:
            for nid in ids:
                click.echo(nid)
    _run(obj, action)


@main.command("export")
@click.option("--dot", "dot_root", default=None, help="Export the argument tree at this node as DOT")
@click.option("--doc", "as_doc", is_flag=True, default=False, help="Export the full document (default)")
@click.pass_obj
def export(obj, dot_root, as_doc):
    """Export the network as a document, or one argument tree as DOT."""
    def action():
        snapshot = obj.store.snapshot()
        if dot_root is not None:
            _, config = obj.store.load_config()
            tree = argument_tree(dot_root, snapshot)
            click.echo(export_dot(tree, snapshot, config), nl=False)
        else:
            click.echo(dumps_document(export_document(snapshot)), nl=False)
    _run(obj, action)


@main.command("import")
@click.argument("path", type=click.Path(exists=True))
@click.pass_obj
def import_cmd(obj, path):
    """Replace the network with a document's content (atomic)."""
    def action():
        snapshot = import_document(Path(path).read_text("utf-8"))
        obj.store.replace(snapshot)
        click.echo(f"imported {len(snapshot.nodes)} nodes, {len(snapshot.schemes)} schemes")
    _run(obj, action)


@main.group()
def config():
    """Inspect or switch the active credibility configuration."""


@config.command("preset")
@click.argument("name")
@click.pass_obj
def config_preset(obj, name):
    def action():
        if name not in presets():
            raise ArgnetError(f"unknown preset {name!r}; available: {sorted(presets())}")
        obj.store.save_config(preset_name=name)
        click.echo(f"active preset: {name}")
    _run(obj, action)


@config.command("show")
@click.pass_obj
def config_show(obj):
    def action():
        name, cfg = obj.store.load_config()
        _echo_doc({"preset": name, "config": config_to_json(cfg)})
    _run(obj, action)


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
@click.option("--preset", "preset_name", default=None)
@click.pass_obj
def serve_cmd(obj, host, port, preset_name):
    """Run the HTTP service over this data directory."""
    def action():
        serve(ServiceConfig(
            listen_address=f"{host}:{port}",
            data_directory=obj.data_dir,
            active_config_preset=preset_name,
        ))
    _run(obj, action)


if __name__ == "__main__":
    main()
