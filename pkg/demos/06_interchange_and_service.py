"""Persistence and exchange: documents, event-log replay, DOT rendering,
and the HTTP surface the debate workbench consumes.

Run: python3 demos/06_interchange_and_service.py
"""

import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from argnet import (
    ArgumentNetwork,
    EventLog,
    argument_tree,
    dumps_document,
    export_document,
    export_dot,
    import_document,
    preset,
    replay_events,
)
from argnet.sampledata import build_software_debate
from argnet.service import ServiceConfig, create_app

workdir = Path(tempfile.mkdtemp(prefix="argnet-demo-"))

print("== event sourcing: every mutation is logged before acknowledgment ==")
log = EventLog(workdir / "events.ndjson")
net = ArgumentNetwork()
net.add_listener(log.append)
_, ids = build_software_debate(network=net)
print(f"  logged {len(log.records())} events")
replayed = replay_events(workdir / "events.ndjson")
print(f"  replay reproduces the snapshot exactly: {replayed == net.snapshot()}")

print("\n== documents round-trip byte-identically ==")
text = dumps_document(export_document(net.snapshot()))
again = dumps_document(export_document(import_document(text)))
print(f"  export -> import -> export identical: {text == again}")
(workdir / "debate.json").write_text(text, encoding="utf-8")
print(f"  wrote {workdir / 'debate.json'} ({len(text)} bytes)")

print("\n== DOT rendering of the claim's tree ==")
snapshot = net.snapshot()
dot = export_dot(argument_tree(ids["claim"], snapshot), snapshot, preset("scenario-2010"))
print("\n".join(f"  {line}" for line in dot.splitlines()[:8]))
print("  ... (white=I, green=RA, red=CA, blue=PA; dashed=pruned)")

print("\n== the HTTP service over a fresh data directory ==")
app = create_app(ServiceConfig(data_directory=str(workdir / "service-data")))
with TestClient(app) as client:
    client.post("/network", json=export_document(snapshot))
    verdict = client.get(f"/nodes/{ids['argument1']}/validity").json()
    print(f"  GET /nodes/{ids['argument1']}/validity -> {verdict['status_text']}")
    dc = client.get("/contradiction", params={"topic": "software"}).json()
    print(f"  GET /contradiction?topic=software -> {dc['value']} (census {dc['census']})")
    preview = client.post("/whatif", json={
        "target": ids["protege_good"],
        "nodes": [
            {"kind": "I", "summary": "Protege's support contract is expensive", "certainty": "average"},
        ],
    }).json()
    print(f"  POST /whatif (draft support statement) -> total "
          f"{preview['before']['breakdown']['total']:.4f} stays "
          f"{preview['after']['breakdown']['total']:.4f} until committed")
print(f"\nartifacts left in {workdir}")
