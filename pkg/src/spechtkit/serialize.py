"""JSON encoding of partitions, tableaux, sparse vectors, matrices and reports.

Every ``encode_*`` has a matching ``decode_*`` so that ``decode(encode(x)) == x``.
Output is deterministic: vectors are sorted by tabloid, dict keys by name.
"""
from __future__ import annotations

import json
from typing import Any, Mapping

import numpy as np

from .combinatorics import Partition, SemistandardSet, Tableau
from .errors import SpechtError


def encode_partition(p: Partition) -> list[int]:
    return list(p.parts)


def decode_partition(data) -> Partition:
    return Partition(tuple(int(x) for x in data))


def encode_tableau(t: Tableau) -> list[list[int]]:
    return [list(r) for r in t.rows]


def decode_tableau(data) -> Tableau:
    return Tableau(tuple(tuple(int(x) for x in r) for r in data))


def encode_set(S: SemistandardSet) -> dict:
    return {"alpha": encode_partition(S.alpha), "a": S.a, "b": S.b, "members": sorted(S.members)}


def decode_set(data) -> SemistandardSet:
    return SemistandardSet(decode_partition(data["alpha"]), int(data["a"]), int(data["b"]), frozenset(data["members"]))


def _scalar(x) -> int | str:
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x.numerator)
    return int(x)


def _unscalar(x):
    from fractions import Fraction

    return Fraction(x) if isinstance(x, str) else int(x)


def encode_vector(v: Mapping, type_: tuple[int, ...] | None = None) -> dict:
    """A sparse tabloid vector: ``{"type": [...], "terms": [[rows, coeff], ...]}`` sorted by tabloid."""
    if type_ is None:
        type_ = next((tuple(len(r) for r in k) for k in v), ())
    terms = [[[list(r) for r in tab], _scalar(c)] for tab, c in sorted(v.items()) if c]
    return {"type": list(type_), "terms": terms}


def decode_vector(data) -> dict:
    out = {}
    for rows, c in data["terms"]:
        key = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) != m for r, m in zip(key, data["type"])) or len(key) != len(data["type"]):
            raise SpechtError(f"tabloid {rows} does not have type {data['type']}")
        out[key] = _unscalar(c)
    return out


def encode_matrix(M) -> list[list]:
    A = np.asarray(M)
    return [[_scalar(x) for x in row] for row in A.reshape(A.shape[0], -1)] if A.size else [[] for _ in range(A.shape[0] if A.ndim else 0)]


def decode_matrix(data) -> np.ndarray:
    return np.array([[_unscalar(x) for x in row] for row in data], dtype=object)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def loads(text: str) -> Any:
    return json.loads(text)
