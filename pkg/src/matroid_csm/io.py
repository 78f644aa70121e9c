"""JSON documents for matroids, polynomials, fans and reports, plus input parsing."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from . import catalog
from .matroid import Matroid, MatroidError, from_graph, from_matrix, uniform


class InputError(ValueError):
    pass


def matroid_to_json(M: Matroid) -> dict:
    doc = {"ground_size": M.size, "bases": M.sorted_bases()}
    if M.name:
        doc["name"] = M.name
    return doc


def matroid_from_json(doc: dict) -> Matroid:
    name = doc.get("name")
    if "bases" in doc:
        return Matroid.from_bases(int(doc["ground_size"]), doc["bases"], name)
    if "graph" in doc:
        g = doc["graph"]
        return from_graph(int(g["vertices"]), [tuple(e) for e in g["edges"]], name)
    if "matrix" in doc:
        return from_matrix(int(doc.get("field", 0)), doc["matrix"], name)
    raise InputError("document needs one of 'bases', 'graph' or 'matrix'")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _load_json_text(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def read_document(spec: str):
    """Read a JSON document from a path, or from stdin when ``spec`` is ``-``."""
    if spec == "-":
        return _load_json_text(sys.stdin.read(), "<stdin>")
    path = Path(spec)
    if not path.is_file():
        raise InputError(f"no such file: {spec}")
    return _load_json_text(path.read_text(), spec)


def parse_order(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        order = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"order must be a list of integers, got {text!r}") from exc
    return order


def resolve_matroid(spec: str) -> tuple[Matroid, list[int] | None]:
    """Turn a command-line matroid spec into a matroid and an optional element order.

    Accepted forms: ``"uniform r m"``, a catalog name (``K4``, ``fano`` ...),
    a JSON file path, or ``-`` for a JSON document on stdin.
    """
    words = spec.split()
    try:
        if words and words[0] == "uniform":
            if len(words) != 3:
                raise InputError("usage: 'uniform RANK SIZE'")
            return uniform(int(words[1]), int(words[2])), None
        if spec in catalog.NAMED:
            return catalog.NAMED[spec](), None
        doc = read_document(spec)
        if not isinstance(doc, dict):
            raise InputError("matroid document must be a JSON object")
        order = doc.get("order")
        return matroid_from_json(doc), order
    except InputError:
        raise
    except (MatroidError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{spec}: {exc}") from exc
