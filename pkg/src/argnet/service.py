"""HTTP API over one argument network.

A single writer lane (the store lock) serializes mutations, which are
appended to the event log before the response is sent; reads serve from the
latest snapshot. ``POST /whatif`` evaluates draft nodes against an overlay
copy of the current snapshot and never takes the writer lane.
"""

from __future__ import annotations

import errno
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from argnet.errors import (
    AddressInUse,
    AlreadyResolved,
    ArgnetError,
    DuplicateName,
    UnknownInstance,
    UnknownNode,
    UnknownScheme,
    ValidationFailed,
)
from argnet.evaluation import (
    config_from_json,
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
    cq_to_json,
    export_document,
    export_dot,
    import_document,
    network_from_snapshot,
    node_to_json,
)
from argnet.model import NetworkSnapshot, NodeKind, SchemeDescriptor, SchemeKind
from argnet.network import argument_tree
from argnet.query import make_spec, run_query
from argnet.schemes import scheme_to_json
from argnet.storage import Store

ENV_DATA_DIR = "ARGNET_DATA_DIR"


@dataclass
class ServiceConfig:
    listen_address: str = "127.0.0.1:8000"
    data_directory: str = "./argnet-data"
    active_config_preset: Optional[str] = None
    cors_allowed_origins: list[str] = field(default_factory=lambda: ["*"])

    @property
    def host(self) -> str:
        return self.listen_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen_address.rsplit(":", 1)[1])

    def resolved_data_dir(self) -> Path:
        return Path(os.environ.get(ENV_DATA_DIR, self.data_directory))


class TermBody(BaseModel):
    term: str
    weight: float = 1.0


class CreateINodeBody(BaseModel):
    summary: str
    certainty: str = "average"
    text: str = ""
    support_url: Optional[str] = None
    context: list[TermBody] = Field(default_factory=list)
    author: str = ""


class CreateSNodeBody(BaseModel):
    kind: str
    summary: str
    certainty: str = "average"
    premises: list[str]
    conclusion: str
    scheme: str
    topic: list[TermBody] = Field(default_factory=list)
    support_url: Optional[str] = None
    default_form: Optional[str] = None
    author: str = ""


class RaiseCQBody(BaseModel):
    target: str
    cq_index: int
    challenge_text: str = ""
    raised_by: str = ""


class ResolveCQBody(BaseModel):
    resolution_text: str = ""


class QueryBody(BaseModel):
    kinds: Optional[list[str]] = None
    schemes: Optional[list[str]] = None
    author: Optional[str] = None
    date_from: Optional[str] = None
    date_to: Optional[str] = None
    domain: Optional[str] = None
    min_support: Optional[float] = None
    context: Optional[list[TermBody]] = None
    context_threshold: float = 0.5
    target: Optional[str] = None


class SchemeBody(BaseModel):
    id: str = ""
    name: str
    premise_descriptors: list[str] = Field(default_factory=list)
    conclusion_descriptor: str
    critical_questions: list[str] = Field(default_factory=list)
    scheme_kind: str = "inference"


class DraftNodeBody(BaseModel):
    kind: str
    summary: str
    certainty: str = "average"
    text: str = ""
    support_url: Optional[str] = None
    context: list[TermBody] = Field(default_factory=list)
    topic: list[TermBody] = Field(default_factory=list)
    premises: list[str] = Field(default_factory=list)
    conclusion: Optional[str] = None
    scheme: Optional[str] = None
    default_form: Optional[str] = None
    author: str = ""


class WhatIfBody(BaseModel):
    target: str
    nodes: list[DraftNodeBody]


class ConfigBody(BaseModel):
    preset: Optional[str] = None
    config: Optional[dict] = None


_STATUS_BY_CODE = {
    UnknownNode.code: 404,
    UnknownInstance.code: 404,
    UnknownScheme.code: 404,
    DuplicateName.code: 409,
    AlreadyResolved.code: 409,
    ValidationFailed.code: 422,
}


def _terms(values: list[TermBody]) -> list[tuple[str, float]]:
    return [(t.term, t.weight) for t in values]


def _apply_drafts(snapshot: NetworkSnapshot, drafts: list[DraftNodeBody]) -> tuple[NetworkSnapshot, list[str]]:
    """Extend a copy of the snapshot with uncommitted draft nodes."""
    overlay = network_from_snapshot(snapshot)
    created: list[str] = []
    for draft in drafts:
        if NodeKind(draft.kind) is NodeKind.I:
            created.append(overlay.create_i_node(
                draft.summary, certainty=draft.certainty, text=draft.text,
                support_url=draft.support_url, context=_terms(draft.context),
                author=draft.author,
            ))
        else:
            created.append(overlay.create_s_node(
                draft.kind, draft.summary, draft.certainty,
                premises=draft.premises, conclusion=draft.conclusion or "",
                scheme=draft.scheme or "", topic=_terms(draft.topic),
                support_url=draft.support_url, default_form=draft.default_form,
                author=draft.author,
            ))
    return overlay.snapshot(), created


def create_app(config: Optional[ServiceConfig] = None) -> FastAPI:
    service_config = config or ServiceConfig()
    store = Store(service_config.resolved_data_dir())
    if service_config.active_config_preset:
        store.save_config(preset_name=service_config.active_config_preset)

    app = FastAPI(title="argnet", version="0.1.0")
    app.state.store = store
    app.state.service_config = service_config
    if service_config.cors_allowed_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=service_config.cors_allowed_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(ArgnetError)
    async def argnet_error_handler(request: Request, exc: ArgnetError):
        body = {"code": exc.code, "message": exc.message}
        if isinstance(exc, ValidationFailed):
            body["violations"] = [
                {"code": v.code, "node_id": v.node_id, "message": v.message}
                for v in exc.violations
            ]
        return JSONResponse(status_code=_STATUS_BY_CODE.get(exc.code, 400), content=body)

    def active_config():
        _, cfg = store.load_config()
        return cfg

    # -- nodes ---------------------------------------------------------------

    @app.post("/nodes/i")
    def create_i_node(body: CreateINodeBody):
        with store.lock():
            node_id = store.network.create_i_node(
                body.summary, certainty=body.certainty, text=body.text,
                support_url=body.support_url, context=_terms(body.context),
                author=body.author,
            )
            return node_to_json(store.network.snapshot().nodes[node_id])

    @app.post("/nodes/s")
    def create_s_node(body: CreateSNodeBody):
        with store.lock():
            node_id = store.network.create_s_node(
                body.kind, body.summary, body.certainty,
                premises=body.premises, conclusion=body.conclusion,
                scheme=body.scheme, topic=_terms(body.topic),
                support_url=body.support_url, default_form=body.default_form,
                author=body.author,
            )
            return node_to_json(store.network.snapshot().nodes[node_id])

    @app.get("/nodes/{node_id}")
    def get_node(node_id: str):
        return node_to_json(store.snapshot().node(node_id))

    @app.get("/nodes/{node_id}/credibility")
    def get_credibility(node_id: str):
        snapshot = store.snapshot()
        snapshot.node(node_id)
        breakdown = credibility_at(node_id, snapshot, active_config())
        return {"node": node_id, "breakdown": breakdown.to_json()}

    @app.get("/nodes/{node_id}/validity")
    def get_validity(node_id: str):
        snapshot = store.snapshot()
        node = snapshot.node(node_id)
        verdict = validity(node_id, snapshot, active_config())
        payload = verdict.to_json()
        payload["status_text"] = verdict.status_text(node.summary)
        payload["breakdown"] = credibility_at(node_id, snapshot, active_config()).to_json()
        return payload

    @app.get("/nodes/{node_id}/explanation")
    def get_explanation(node_id: str):
        snapshot = store.snapshot()
        snapshot.node(node_id)
        return explanation(node_id, snapshot, active_config()).to_json()

    @app.get("/nodes/{node_id}/tree.dot")
    def get_tree_dot(node_id: str):
        snapshot = store.snapshot()
        tree = argument_tree(node_id, snapshot)
        return PlainTextResponse(
            export_dot(tree, snapshot, active_config()),
            media_type="text/vnd.graphviz",
        )

    # -- critical questions ----------------------------------------------------

    @app.post("/cq")
    def raise_cq(body: RaiseCQBody):
        with store.lock():
            cq_id = store.network.raise_critical_question(
                body.target, body.cq_index, body.challenge_text, body.raised_by,
            )
            return cq_to_json(store.network.snapshot().cq_instances[cq_id])

    @app.post("/cq/{cq_id}/resolve")
    def resolve_cq(cq_id: str, body: ResolveCQBody):
        with store.lock():
            instance = store.network.resolve_critical_question(cq_id, body.resolution_text)
            return cq_to_json(instance)

    @app.get("/cq")
    def list_cq(status: Optional[str] = None):
        snapshot = store.snapshot()
        instances = [cq_to_json(cq) for _, cq in sorted(snapshot.cq_instances.items())]
        if status is not None:
            instances = [cq for cq in instances if cq["status"] == status]
        return {"cq_instances": instances}

    # -- schemes -----------------------------------------------------------------

    @app.get("/schemes")
    def list_schemes():
        snapshot = store.snapshot()
        return {"schemes": [scheme_to_json(snapshot.schemes[sid]) for sid in sorted(snapshot.schemes)]}

    @app.post("/schemes")
    def register_scheme(body: SchemeBody):
        with store.lock():
            descriptor = SchemeDescriptor(
                id=body.id,
                name=body.name,
                premise_descriptors=tuple(body.premise_descriptors),
                conclusion_descriptor=body.conclusion_descriptor,
                critical_questions=tuple(body.critical_questions),
                scheme_kind=SchemeKind(body.scheme_kind),
            )
            scheme_id = store.network.register_scheme(descriptor)
            return scheme_to_json(store.network.snapshot().schemes[scheme_id])

    # -- evaluation-wide -----------------------------------------------------------

    @app.post("/query")
    def query(body: QueryBody):
        from argnet.interchange import timestamp_from_json

        snapshot = store.snapshot()
        cfg = active_config()
        spec = make_spec(
            kinds=body.kinds, schemes=body.schemes, author=body.author,
            date_from=timestamp_from_json(body.date_from),
            date_to=timestamp_from_json(body.date_to),
            domain=body.domain, min_support=body.min_support,
            context=[(t.term, t.weight) for t in body.context] if body.context is not None else None,
            context_threshold=body.context_threshold, target=body.target,
        )
        ids = run_query(spec, snapshot, cfg)
        return {"results": [
            {"id": nid, "credibility": credibility_at(nid, snapshot, cfg).total}
            for nid in ids
        ]}

    @app.get("/contradiction")
    def contradiction(topic: Optional[str] = None, weighted: bool = False):
        snapshot = store.snapshot()
        scope = topic_scope(snapshot, topic)
        census = {"ca": 0, "ra": 0, "pa": 0}
        for nid in scope:
            census[snapshot.nodes[nid].kind.value.lower()] += 1
        if weighted:
            value = contradiction_degree_weighted(scope, snapshot, active_config())
        else:
            value = contradiction_degree_simple(scope, snapshot)
        return {"value": value, "weighted": weighted, "topic": topic,
                "scope": list(scope), "census": census}

    # -- network documents -----------------------------------------------------------

    @app.get("/network")
    def get_network():
        return export_document(store.snapshot())

    @app.post("/network")
    def post_network(document: dict):
        snapshot = import_document(document)
        with store.lock():
            store.replace(snapshot)
        return {"nodes": len(snapshot.nodes), "schemes": len(snapshot.schemes),
                "cq_instances": len(snapshot.cq_instances)}

    # -- config -----------------------------------------------------------------------

    @app.get("/config")
    def get_config():
        name, cfg = store.load_config()
        return {"preset": name, "presets": sorted(presets()), "config": config_to_json(cfg)}

    @app.put("/config")
    def put_config(body: ConfigBody):
        if body.config is not None:
            cfg = store.save_config(preset_name=body.preset, config=config_from_json(body.config))
        else:
            cfg = store.save_config(preset_name=body.preset or None)
        name, _ = store.load_config()
        return {"preset": name, "config": config_to_json(cfg)}

    # -- what-if preview ------------------------------------------------------------------

    @app.post("/whatif")
    def whatif(body: WhatIfBody):
        snapshot = store.snapshot()
        node = snapshot.node(body.target)
        cfg = active_config()
        before_breakdown = credibility_at(body.target, snapshot, cfg)
        before_verdict = validity(body.target, snapshot, cfg)
        overlay, created = _apply_drafts(snapshot, body.nodes)
        after_breakdown = credibility_at(body.target, overlay, cfg)
        after_verdict = validity(body.target, overlay, cfg)
        return {
            "target": body.target,
            "summary": node.summary,
            "before": {"breakdown": before_breakdown.to_json(), "verdict": before_verdict.to_json()},
            "after": {"breakdown": after_breakdown.to_json(), "verdict": after_verdict.to_json()},
            "flipped": before_verdict.valid != after_verdict.valid,
            "draft_ids": created,
        }

    return app


def serve(service_config: ServiceConfig) -> None:
    """Run the HTTP service until interrupted."""
    import uvicorn

    app = create_app(service_config)
    try:
        uvicorn.run(app, host=service_config.host, port=service_config.port, log_level="info")
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            raise AddressInUse(f"address {service_config.listen_address} already in use") from exc
        raise
