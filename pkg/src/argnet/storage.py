"""Durable storage for one network: an append-only event log plus
full-document checkpoints, both living in a data directory.

Layout:
    events.ndjson     mutation events since the last checkpoint
    checkpoint.json   {"last_seq": int, "document": <interchange document>}
    config.json       {"preset": name or null, "config": <config document>}

Loading replays the checkpoint (if any) and then the event log; every
mutation is appended to the log before being acknowledged.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Optional, Union

from argnet.errors import DataDirUnwritable
from argnet.evaluation import (
    DEFAULT_PRESET,
    CredibilityConfig,
    config_from_json,
    config_to_json,
    preset,
)
from argnet.interchange import (
    EventLog,
    dumps_document,
    export_document,
    import_document,
    network_from_snapshot,
    replay_events,
)
from argnet.model import NetworkSnapshot
from argnet.network import ArgumentNetwork

EVENTS_FILE = "events.ndjson"
CHECKPOINT_FILE = "checkpoint.json"
CONFIG_FILE = "config.json"


class Store:
    """Single-writer durable home of one argument network."""

    def __init__(self, data_dir: Union[str, Path]):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._assert_writable()
        self._lock = threading.RLock()
        self._log = EventLog(self.data_dir / EVENTS_FILE)
        self.network = self._load_network()
        self.network.add_listener(self._on_event)

    def _assert_writable(self) -> None:
        probe = self.data_dir / ".write-probe"
        try:
            probe.write_text("", encoding="utf-8")
            probe.unlink()
        except OSError as exc:
            raise DataDirUnwritable(f"data directory {self.data_dir} is not writable: {exc}") from exc

    def _checkpoint_path(self) -> Path:
        return self.data_dir / CHECKPOINT_FILE

    def _load_network(self) -> ArgumentNetwork:
        base: Optional[NetworkSnapshot] = None
        checkpoint = self._checkpoint_path()
        if checkpoint.exists():
            payload = json.loads(checkpoint.read_text("utf-8"))
            base = import_document(payload["document"])
        events_path = self.data_dir / EVENTS_FILE
        if events_path.exists():
            snapshot = replay_events(events_path, base=base)
            return network_from_snapshot(snapshot)
        if base is not None:
            return network_from_snapshot(base)
        return ArgumentNetwork()

    def _on_event(self, event_type: str, payload: dict) -> None:
        self._log.append(event_type, payload)

    # -- public surface -----------------------------------------------------

    def lock(self) -> threading.RLock:
        return self._lock

    def snapshot(self) -> NetworkSnapshot:
        with self._lock:
            return self.network.snapshot()

    def replace(self, snapshot: NetworkSnapshot) -> None:
        """Import: checkpoint the new state and truncate the event log."""
        with self._lock:
            document = export_document(snapshot)
            checkpoint = {"last_seq": self._log._next_seq - 1, "document": document}
            self._checkpoint_path().write_text(
                json.dumps(checkpoint, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
                encoding="utf-8",
            )
            (self.data_dir / EVENTS_FILE).write_text("", encoding="utf-8")
            self._log = EventLog(self.data_dir / EVENTS_FILE)
            self._log._next_seq = checkpoint["last_seq"] + 1
            self.network = network_from_snapshot(snapshot)
            self.network.add_listener(self._on_event)

    def export_text(self) -> str:
        return dumps_document(export_document(self.snapshot()))

    # -- active credibility config -------------------------------------------

    def load_config(self) -> tuple[Optional[str], CredibilityConfig]:
        path = self.data_dir / CONFIG_FILE
        if not path.exists():
            return DEFAULT_PRESET, preset(DEFAULT_PRESET)
        payload = json.loads(path.read_text("utf-8"))
        name = payload.get("preset")
        if payload.get("config") is not None:
            return name, config_from_json(payload["config"])
        return name, preset(name or DEFAULT_PRESET)

    def save_config(self, *, preset_name: Optional[str] = None,
                    config: Optional[CredibilityConfig] = None) -> CredibilityConfig:
        if config is None:
            config = preset(preset_name or DEFAULT_PRESET)
        payload = {"preset": preset_name, "config": config_to_json(config)}
        (self.data_dir / CONFIG_FILE).write_text(
            json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        return config
