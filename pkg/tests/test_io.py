import json
import os

import pytest

from findom import io
from findom.complexes import FreeComplex
from findom.errors import SchemaError
from findom.fields import GF, QQ
from findom.novikov import contraction_verify, geometric_certificates, paper_example_complex
from findom.rings import LaurentRing, abcd_ring, validate_ring
from findom.sheaves import witness_pipeline
from findom.complexes import r0_betti

DATA = os.path.dirname(io.data_path("abcd.ring.json"))


@pytest.mark.parametrize("name", sorted(os.listdir(DATA)))
def test_bundled_documents_round_trip_bit_exact(name, tmp_path):
    path = os.path.join(DATA, name)
    text = open(path, encoding="utf-8").read()
    doc = json.loads(text)
    if name.endswith(".ring.json"):
        ring = io.load_ring(path)
        assert validate_ring(ring)
        out = io.ring_to_doc(ring)
    elif name.endswith(".complex.json"):
        C = io.load_complex(path)
        out = io.complex_to_doc(C, doc["ring"] if isinstance(doc["ring"], str) else None)
    else:
        ring = io.load_ring(os.path.join(DATA, "abcd.ring.json"))
        out = io.certificate_to_doc(io.load_certificate(path, ring), ring)
    assert io.dumps(out) == text


def test_bundled_certificates_verify():
    C = io.load_complex(io.data_path("paper_example.complex.json"))
    for d in ("plus", "minus"):
        cert = io.load_certificate(io.data_path("paper_example.%s.cert.json" % d), C.ring)
        assert cert.direction == d and cert.truncation == 8
        assert contraction_verify(C, cert)
    assert C == paper_example_complex(C.ring)


@pytest.mark.parametrize("ring", [LaurentRing(GF(101)), abcd_ring(GF(7))])
def test_rings_round_trip(ring):
    back = io.ring_from_doc(json.loads(io.dumps(io.ring_to_doc(ring))))
    assert back == ring
    assert validate_ring(back)


def test_inline_ring_complex_round_trip(tmp_path):
    R = LaurentRing(QQ)
    C = FreeComplex(R, {1: 1, 0: 2}, {1: [[R.parse("t - 1/2")], [R.parse("t^-1")]]})
    p = tmp_path / "c.json"
    io.save(io.complex_to_doc(C), p)
    assert io.load_complex(str(p)) == C


def test_string_entries_are_accepted(tmp_path):
    doc = {"schema": io.COMPLEX_SCHEMA, "ring": "abcd.ring.json", "ranks": {"1": 1, "0": 1},
           "differentials": {"1": {"shape": [1, 1], "rows": [["1 - A"]]}}}
    p = tmp_path / "c.json"
    p.write_text(json.dumps(doc))
    C = io.load_complex(str(p))
    assert C.d(1).rows[0][0] == C.ring.parse("1 - A")


def test_witness_round_trip():
    C = io.load_complex(io.data_path("t_minus_2.complex.json"))
    S, W = witness_pipeline(C)
    doc = io.witness_to_doc(S, W, r0_betti(W))
    windows, W2, betti = io.witness_from_doc(json.loads(io.dumps(doc)), C.ring)
    assert windows == S.windows
    assert W2.modules == W.modules and W2.diffs == W.diffs
    assert betti == {0: 1, 1: 0}


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.update(schema="findom/ring/v9"), "expected schema"),
    (lambda d: d.pop("partitions"), "missing field"),
    (lambda d: d.update(kind="sphere"), "unknown ring kind"),
    (lambda d: d["partitions"]["plus"].append(["A"]), "pair"),
    (lambda d: d["partitions"]["plus"].append(["A", "Q"]), "bad ring element"),
])
def test_ring_schema_errors(mutate, message):
    doc = json.loads(open(io.data_path("abcd.ring.json")).read())
    mutate(doc)
    with pytest.raises(SchemaError, match=message):
        io.ring_from_doc(doc)


def test_matrix_shape_errors(tmp_path):
    doc = {"schema": io.COMPLEX_SCHEMA, "ring": "laurent.ring.json", "ranks": {"1": 1, "0": 1},
           "differentials": {"1": {"shape": [1, 2], "rows": [["t"]]}}}
    with pytest.raises(SchemaError, match="shape"):
        io.complex_from_doc(doc)
    doc["differentials"]["1"] = {"shape": [1, 1], "rows": [["t"]]}
    doc["ranks"] = {"1": 2, "0": 1}
    with pytest.raises(SchemaError):
        io.complex_from_doc(doc)


def test_unreadable_files(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"schema": "findom/ring/v1", "kind": ')
    with pytest.raises(SchemaError, match="not valid JSON"):
        io.load_ring(str(p))
    with pytest.raises(SchemaError, match="cannot read"):
        io.load_ring(str(tmp_path / "missing.json"))
    doc = {"schema": io.COMPLEX_SCHEMA, "ring": "nowhere.ring.json", "ranks": {},
           "differentials": {}}
    with pytest.raises(SchemaError, match="not found"):
        io.complex_from_doc(doc, base_dir=str(tmp_path))


def test_canonical_text_layout():
    text = io.dumps({"b": {"y": [1, 2], "x": "s"}, "a": 1, "c": {}})
    assert text == '{\n "a": 1,\n "b": {\n  "x": "s",\n  "y": [1,2]\n },\n "c": {}\n}\n'
