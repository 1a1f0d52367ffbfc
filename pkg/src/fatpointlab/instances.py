"""JSON instance files.

Two flavors: "scheme" (a fat point scheme) and "vectors" (a plain vector
configuration, for partition experiments whose elements may be parallel
and therefore cannot be distinct projective points).  All numbers are
serialized as strings so exact rationals survive the round trip.
"""

from __future__ import annotations

import json

from .exact import ExactMatrix, ScalarField
from .matroid import VectorMatroid
from .schemes import FatPointScheme


class InstanceError(ValueError):
    pass


def field_from_descriptor(desc):
    if desc == "rational":
        return ScalarField.rational()
    if isinstance(desc, str) and desc.startswith("prime:"):
        try:
            p = int(desc.split(":", 1)[1])
        except ValueError:
            raise InstanceError("bad field descriptor: %r" % (desc,))
        try:
            return ScalarField.prime(p)
        except ValueError as exc:
            raise InstanceError(str(exc))
    raise InstanceError("bad field descriptor: %r" % (desc,))


def field_descriptor(field):
    return "rational" if field.is_rational else "prime:%d" % field.p


def scheme_to_dict(x, seed=None, generator=None):
    out = {
        "kind": "scheme",
        "field": field_descriptor(x.field),
        "ambient_dim": x.n,
        "points": [
            {"coords": [x.field.to_str(c) for c in coords], "mult": mult}
            for coords, mult in x.points
        ],
    }
    if seed is not None:
        out["seed"] = seed
    if generator is not None:
        out["generator"] = generator
    return out


def scheme_from_dict(data):
    try:
        field = field_from_descriptor(data["field"])
        n = int(data["ambient_dim"])
        points = [
            (tuple(field.elem(c) for c in entry["coords"]), int(entry["mult"]))
            for entry in data["points"]
        ]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InstanceError("malformed scheme instance: %s" % exc)
    try:
        return FatPointScheme(field, n, points)
    except ValueError as exc:
        raise InstanceError(str(exc))


def vectors_to_dict(field, vectors, seed=None, generator=None, **extras):
    out = {
        "kind": "vectors",
        "field": field_descriptor(field),
        "dim": len(vectors[0]),
        "vectors": [[field.to_str(c) for c in v] for v in vectors],
    }
    if seed is not None:
        out["seed"] = seed
    if generator is not None:
        out["generator"] = generator
    out.update(extras)
    return out


def vector_matroid_from_dict(data):
    try:
        field = field_from_descriptor(data["field"])
        vectors = [tuple(field.elem(c) for c in v) for v in data["vectors"]]
        if not vectors:
            raise InstanceError("empty vector list")
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InstanceError("malformed vector instance: %s" % exc)
    return VectorMatroid(ExactMatrix.from_columns(field, vectors))


def load_instance(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceError("cannot read instance file: %s" % exc)
    if not isinstance(data, dict) or "kind" not in data:
        raise InstanceError("instance file must be an object with a 'kind' field")
    return data


def canonical_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
