"""Built-in argumentation scheme catalog.

The catalog ships as a data file in the interchange format so deployments
can extend or replace it without touching code. ``builtin_schemes`` loads
and caches the shipped set.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources

from argnet.model import SchemeDescriptor, SchemeKind

BUILTIN_SCHEMES_RESOURCE = "builtin_schemes.json"


def scheme_from_json(obj: dict) -> SchemeDescriptor:
    return SchemeDescriptor(
        id=obj["id"],
        name=obj["name"],
        premise_descriptors=tuple(obj.get("premise_descriptors", ())),
        conclusion_descriptor=obj["conclusion_descriptor"],
        critical_questions=tuple(obj.get("critical_questions", ())),
        scheme_kind=SchemeKind(obj.get("scheme_kind", "inference")),
    )


def scheme_to_json(descriptor: SchemeDescriptor) -> dict:
    return {
        "id": descriptor.id,
        "name": descriptor.name,
        "premise_descriptors": list(descriptor.premise_descriptors),
        "conclusion_descriptor": descriptor.conclusion_descriptor,
        "critical_questions": list(descriptor.critical_questions),
        "scheme_kind": descriptor.scheme_kind.value,
    }


@lru_cache(maxsize=1)
def _load_builtin() -> tuple[SchemeDescriptor, ...]:
    raw = resources.files("argnet.data").joinpath(BUILTIN_SCHEMES_RESOURCE).read_text("utf-8")
    doc = json.loads(raw)
    return tuple(scheme_from_json(s) for s in doc["schemes"])


def builtin_schemes() -> list[SchemeDescriptor]:
    """The shipped scheme set, in catalog order."""
    return list(_load_builtin())


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")
    return slug or "scheme"
