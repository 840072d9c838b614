"""Model files: named spaces, maps and predicates loaded from JSON."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import jsonschema

from .errors import (DuplicateLabel, ModelIOError, NotATopology, NotClopen, NotContinuous,
                     SchemaError, SizeCap, ValidationError)
from .heyting import Predicate
from .topology import ContMap, FinSpace, discrete, mk_space, product_many

_point = {"type": ["string", "integer"]}

MODEL_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "spaces": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "points"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "points": {"type": "array", "items": _point},
                    "opens": {"type": "array", "items": {"type": "array", "items": _point}},
                },
            },
        },
        "maps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "dom", "cod", "table"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "dom": {"type": "string"},
                    "cod": {"type": "string"},
                    "table": {"type": ["array", "object"]},
                },
            },
        },
        "predicates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "space", "extent"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "space": {"oneOf": [{"type": "string"},
                                        {"type": "array", "items": {"type": "string"}}]},
                    "extent": {"type": "array",
                               "items": {"oneOf": [_point, {"type": "array", "items": _point}]}},
                },
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(MODEL_SCHEMA)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = {"P", "forall", "exists", "and", "or", "not", "implies", "iff", "in", "top", "bottom"}


@dataclass
class ModelFile:
    spaces: dict[str, FinSpace] = field(default_factory=dict)
    maps: dict[str, ContMap] = field(default_factory=dict)
    predicates: dict[str, Predicate] = field(default_factory=dict)
    # factor space names of each predicate; () for a proposition on 1
    predicate_sorts: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def space(self, name: str) -> FinSpace:
        return self.spaces[name]


def _point_index(X: FinSpace, p, where: str) -> int:
    if isinstance(p, int):
        if not 0 <= p < X.size:
            raise ValidationError(f"{where}: index {p} out of range for {X.name}",
                                  item=where, invariant="point in range")
        return p
    try:
        return X.index(str(p))
    except KeyError:
        raise ValidationError(f"{where}: {X.name} has no point {p!r}",
                              item=where, invariant="point exists") from None


def _name(kind: str, name: str, seen: dict):
    if not _IDENT.match(name) or name in _RESERVED:
        raise SchemaError(f"{kind} name {name!r} is not a usable identifier")
    if name in seen:
        raise SchemaError(f"duplicate {kind} name {name!r}")


def model_from_dict(data: Any) -> ModelFile:
    exc = jsonschema.exceptions.best_match(_VALIDATOR.iter_errors(data))
    if exc is not None:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"{where}: {exc.message}") from None
    model = ModelFile()
    for entry in data.get("spaces", []):
        name = entry["name"]
        _name("space", name, model.spaces)
        try:
            if "opens" in entry:
                X = mk_space(entry["points"], entry["opens"], name=name)
            else:
                X = discrete(entry["points"], name=name)
        except DuplicateLabel as exc:
            raise ValidationError(f"space {name}: {exc}", item=name,
                                  invariant="distinct labels") from None
        except NotATopology as exc:
            raise ValidationError(f"space {name}: {exc}", item=name,
                                  invariant="topology") from None
        except ValueError as exc:
            raise ValidationError(f"space {name}: {exc}", item=name,
                                  invariant="opens in range") from None
        model.spaces[name] = X
    for entry in data.get("maps", []):
        name = entry["name"]
        _name("map", name, model.maps)
        dom = _lookup(model, entry["dom"], f"map {name}")
        cod = _lookup(model, entry["cod"], f"map {name}")
        table = entry["table"]
        if isinstance(table, dict):
            missing = [lab for lab in dom.labels if lab not in table]
            if missing:
                raise ValidationError(f"map {name}: no image for {missing[0]!r}",
                                      item=name, invariant="total")
            table = [table[lab] for lab in dom.labels]
        if len(table) != dom.size:
            raise ValidationError(f"map {name}: table has {len(table)} entries for "
                                  f"{dom.size} points", item=name, invariant="total")
        idx = [_point_index(cod, p, f"map {name}") for p in table]
        try:
            model.maps[name] = ContMap(dom, cod, tuple(idx), name=name)
        except NotContinuous as exc:
            raise ValidationError(f"map {name}: {exc}", item=name,
                                  invariant="continuity") from None
    for entry in data.get("predicates", []):
        name = entry["name"]
        _name("predicate", name, model.predicates)
        names = entry["space"]
        names = [names] if isinstance(names, str) else list(names)
        factors = [_lookup(model, n, f"predicate {name}") for n in names]
        try:
            X = factors[0] if len(factors) == 1 else product_many(factors)[0]
        except SizeCap as exc:
            raise ValidationError(f"predicate {name}: {exc}", item=name,
                                  invariant="size cap") from None
        mask = 0
        for p in entry["extent"]:
            mask |= 1 << _extent_index(X, factors, p, f"predicate {name}")
        try:
            model.predicates[name] = Predicate(X, mask)
        except NotClopen as exc:
            raise ValidationError(f"predicate {name}: {exc}", item=name,
                                  invariant="clopen") from None
        model.predicate_sorts[name] = tuple(names)
    return model


def _extent_index(X: FinSpace, factors, p, where: str) -> int:
    if isinstance(p, list):
        if len(p) != len(factors):
            raise ValidationError(f"{where}: point {p} has the wrong arity",
                                  item=where, invariant="arity")
        idx = 0
        for F, q in zip(factors, p):
            idx = idx * F.size + _point_index(F, q, where)
        return idx
    return _point_index(X, p, where)


def _lookup(model: ModelFile, name: str, where: str) -> FinSpace:
    try:
        return model.spaces[name]
    except KeyError:
        raise SchemaError(f"{where}: undeclared space {name!r}") from None


def load_model(path) -> ModelFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelIOError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return model_from_dict(data)


def space_to_json(X: FinSpace) -> dict:
    out: dict[str, Any] = {"name": X.name, "points": list(X.labels)}
    if not X.discrete:
        out["opens"] = [[i for i in range(X.size) if o >> i & 1] for o in X.opens]
    return out


def predicate_to_json(phi: Predicate) -> dict:
    return {"space": phi.space.name, "extent": phi.points()}


def space_from_json(data: dict) -> FinSpace:
    if "opens" in data:
        return mk_space(data["points"], data["opens"], name=data["name"])
    return discrete(data["points"], name=data["name"])
