"""JSON documents for rings, complexes, certificates and witnesses.

Every document carries a ``schema`` field.  Scalars are lists of
``[degree, payload]`` terms with exact coefficient strings ("a/b"); on input
a string in the ring's own syntax (for example "1-A") is accepted too.
``dumps`` is canonical, so load followed by save reproduces a saved file
byte for byte.
"""

from __future__ import annotations

import json
import os
from importlib import resources

from .complexes import FreeComplex, R0Complex
from .errors import SchemaError
from .fields import field_from_doc
from .matrix import Matrix
from .novikov import ContractionCertificate
from .rings import GradedQuotientRing, LaurentRing, TwistedLaurentRing

RING_SCHEMA = "findom/ring/v1"
COMPLEX_SCHEMA = "findom/complex/v1"
CERT_SCHEMA = "findom/certificate/v1"
WITNESS_SCHEMA = "findom/witness/v1"


def _compact(v):
    return json.dumps(v, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def dumps(doc):
    """Canonical text: one line per top-level key, nested dicts one line per entry."""
    lines = []
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, dict) and v:
            inner = ",\n".join("  %s: %s" % (_compact(a), _compact(v[a])) for a in sorted(v))
            lines.append(" %s: {\n%s\n }" % (_compact(k), inner))
        else:
            lines.append(" %s: %s" % (_compact(k), _compact(v)))
    return "{\n" + ",\n".join(lines) + "\n}\n"


def save(doc, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON (%s)" % exc, path) from exc
    except OSError as exc:
        raise SchemaError("cannot read file (%s)" % exc.strerror, path) from exc


def data_path(name):
    return str(resources.files("findom") / "data" / name)


def _need(doc, key, where, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError("missing field %r" % key, where)
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise SchemaError("field %r has the wrong type" % key, where)
    return v


def _check_schema(doc, schema, where):
    got = _need(doc, "schema", where, str)
    if got != schema:
        raise SchemaError("expected schema %r, found %r" % (schema, got), where)


def _index_map(d, where):
    try:
        return {int(k): v for k, v in d.items()}
    except (ValueError, AttributeError) as exc:
        raise SchemaError("keys must be chain indices", where) from exc


# --------------------------------------------------------------------------
# scalars and matrices


def encode_scalar(ring, x):
    return ring.encode(x)


def decode_scalar(ring, data, where=""):
    try:
        return ring.decode(data)
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError("bad ring element %r (%s)" % (data, exc), where) from exc


def encode_matrix(ring, M):
    return {"shape": [M.nrows, M.ncols],
            "rows": [[ring.encode(x) for x in r] for r in M.rows]}


def decode_matrix(ring, doc, where=""):
    shape = _need(doc, "shape", where, list)
    rows = _need(doc, "rows", where, list)
    if len(shape) != 2 or len(rows) != shape[0] or any(
            not isinstance(r, list) or len(r) != shape[1] for r in rows):
        raise SchemaError("rows do not match the declared shape %r" % (shape,), where)
    return Matrix([[decode_scalar(ring, x, "%s[%d][%d]" % (where, i, j))
                    for j, x in enumerate(r)] for i, r in enumerate(rows)],
                  shape[1], ring.zero())


# --------------------------------------------------------------------------
# rings


def ring_to_doc(ring):
    doc = {"schema": RING_SCHEMA, "kind": ring.kind, "field": ring.field.to_doc()}
    if isinstance(ring, LaurentRing):
        doc["t_degree"] = ring.t_degree
    elif isinstance(ring, TwistedLaurentRing):
        fs = ring.field.to_str
        doc["structure_constants"] = [[[fs(c) for c in v] for v in row] for row in ring.consts]
        doc["unit"] = [fs(c) for c in ring.unit]
        doc["automorphism"] = [[fs(c) for c in row] for row in ring.sigma]
        doc["names"] = list(ring.names)
        doc["reversed"] = ring.is_reversed
    elif isinstance(ring, GradedQuotientRing):
        from .polys import format_poly
        doc["variables"] = list(ring.names)
        doc["degrees"] = list(ring.degrees)
        doc["relations"] = [format_poly(r, ring.names, ring.field) for r in ring.relations]
        doc["order"] = ring.order
    else:
        raise SchemaError("ring kind %r has no document form" % ring.kind)
    doc["partitions"] = {
        "plus": [[ring.encode(u), ring.encode(v)] for u, v in ring.pou_plus.pairs],
        "minus": [[ring.encode(u), ring.encode(v)] for u, v in ring.pou_minus.pairs]}
    return doc


def ring_from_doc(doc, where="ring"):
    """Build the ring without checking it; ``validate_ring`` is the caller's job."""
    _check_schema(doc, RING_SCHEMA, where)
    kind = _need(doc, "kind", where, str)
    try:
        F = field_from_doc(_need(doc, "field", where))
    except (ValueError, KeyError, TypeError) as exc:
        raise SchemaError("bad field (%s)" % exc, where) from exc
    try:
        if kind == "laurent":
            ring = LaurentRing(F, int(doc.get("t_degree", 1)))
        elif kind == "twisted_laurent":
            ring = TwistedLaurentRing(F, _need(doc, "structure_constants", where, list),
                                      _need(doc, "unit", where, list),
                                      _need(doc, "automorphism", where, list),
                                      names=doc.get("names"),
                                      reversed_=bool(doc.get("reversed", False)))
        elif kind == "graded_quotient":
            ring = GradedQuotientRing(F, _need(doc, "variables", where, list),
                                      _need(doc, "degrees", where, list),
                                      _need(doc, "relations", where, list),
                                      doc.get("order", "lex"))
        else:
            raise SchemaError("unknown ring kind %r" % kind, where)
    except SchemaError:
        raise
    except Exception as exc:
        raise SchemaError("cannot build %s ring (%s)" % (kind, exc), where) from exc
    parts = _need(doc, "partitions", where, dict)
    pairs = {}
    for side in ("plus", "minus"):
        lst = _need(parts, side, where + ".partitions", list)
        pairs[side] = []
        for j, pair in enumerate(lst):
            w = "%s.partitions.%s[%d]" % (where, side, j)
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError("a partition entry is a pair [u, v]", w)
            pairs[side].append((decode_scalar(ring, pair[0], w), decode_scalar(ring, pair[1], w)))
    ring.set_partitions(pairs["plus"], pairs["minus"])
    return ring


def load_ring(path):
    return ring_from_doc(read_json(path), os.path.basename(path))


# --------------------------------------------------------------------------
# complexes


def complex_to_doc(C, ring_ref=None):
    ring = C.ring
    return {"schema": COMPLEX_SCHEMA,
            "ring": ring_ref if ring_ref is not None else ring_to_doc(ring),
            "ranks": {str(n): r for n, r in sorted(C.ranks.items())},
            "differentials": {str(n): encode_matrix(ring, M) for n, M in sorted(C.diffs.items())}}


def _resolve_ring(ref, base_dir, where):
    if isinstance(ref, dict):
        return ring_from_doc(ref, where + ".ring")
    if isinstance(ref, str):
        for cand in (os.path.join(base_dir or ".", ref), data_path(ref)):
            if os.path.exists(cand):
                return load_ring(cand)
        raise SchemaError("ring file %r not found" % ref, where)
    raise SchemaError("field 'ring' must be a ring document or a file name", where)


def complex_from_doc(doc, where="complex", base_dir=None, ring=None):
    _check_schema(doc, COMPLEX_SCHEMA, where)
    if ring is None:
        ring = _resolve_ring(_need(doc, "ring", where), base_dir, where)
    ranks = _index_map(_need(doc, "ranks", where, dict), where + ".ranks")
    diffs = {n: decode_matrix(ring, M, "%s.differentials.%d" % (where, n))
             for n, M in _index_map(_need(doc, "differentials", where, dict),
                                    where + ".differentials").items()}
    try:
        return FreeComplex(ring, ranks, diffs)
    except ValueError as exc:
        raise SchemaError(str(exc), where) from exc


def load_complex(path):
    return complex_from_doc(read_json(path), os.path.basename(path),
                            os.path.dirname(os.path.abspath(path)))


# --------------------------------------------------------------------------
# certificates


def certificate_to_doc(cert, ring):
    return {"schema": CERT_SCHEMA, "direction": cert.direction, "truncation": cert.truncation,
            "maps": {str(n): encode_matrix(ring, M) for n, M in sorted(cert.maps.items())}}


def certificate_from_doc(doc, ring, where="certificate"):
    _check_schema(doc, CERT_SCHEMA, where)
    direction = _need(doc, "direction", where, str)
    if direction not in ("plus", "minus"):
        raise SchemaError("direction must be 'plus' or 'minus'", where)
    T = _need(doc, "truncation", where, int)
    maps = {n: decode_matrix(ring, M, "%s.maps.%d" % (where, n))
            for n, M in _index_map(_need(doc, "maps", where, dict), where + ".maps").items()}
    return ContractionCertificate(direction, T, maps)


def load_certificate(path, ring):
    return certificate_from_doc(read_json(path), ring, os.path.basename(path))


# --------------------------------------------------------------------------
# witnesses


def witness_to_doc(S, W, betti=None):
    ring = W.ring
    return {"schema": WITNESS_SCHEMA,
            "windows": {str(n): list(qp) for n, qp in sorted(S.windows.items())},
            "modules": {str(n): [list(s) for s in W.slots(n)] for n in sorted(W.modules)},
            "differentials": {str(n): encode_matrix(ring, M) for n, M in sorted(W.diffs.items())},
            "betti": None if betti is None else {str(n): b for n, b in sorted(betti.items())}}


def witness_from_doc(doc, ring, where="witness"):
    """Returns ``(windows, R0Complex, betti or None)``."""
    _check_schema(doc, WITNESS_SCHEMA, where)
    windows = {n: tuple(v) for n, v in _index_map(_need(doc, "windows", where, dict),
                                                  where + ".windows").items()}
    modules = {n: tuple(tuple(s) for s in v)
               for n, v in _index_map(_need(doc, "modules", where, dict),
                                      where + ".modules").items()}
    diffs = {n: decode_matrix(ring, M, "%s.differentials.%d" % (where, n))
             for n, M in _index_map(_need(doc, "differentials", where, dict),
                                    where + ".differentials").items()}
    betti = doc.get("betti")
    if betti is not None:
        betti = _index_map(betti, where + ".betti")
    return windows, R0Complex(ring, modules, diffs), betti
