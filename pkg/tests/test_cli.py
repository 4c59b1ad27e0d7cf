import json
import subprocess
import sys

import pytest

from findom import cli, io
from findom.novikov import geometric_certificates, mutate_certificate


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip() else None
    return code, doc, out.err


def data(name):
    return io.data_path(name)


def write(tmp_path, name, doc):
    p = tmp_path / name
    io.save(doc, str(p))
    return p


def test_ring_verify(capsys, tmp_path):
    code, doc, _ = run(capsys, "ring", "verify", data("abcd.ring.json"))
    assert code == 0 and doc["schema"] == "findom/report/v1"
    ring_doc = json.loads(open(data("abcd.ring.json")).read())
    ring_doc["partitions"]["plus"] = ring_doc["partitions"]["plus"][:1]
    code, doc, _ = run(capsys, "ring", "verify", write(tmp_path, "bad.ring.json", ring_doc))
    assert code == 1 and "pou_plus" in doc["verdict"]
    text = open(data("abcd.ring.json")).read()
    p = tmp_path / "cut.ring.json"
    p.write_text(text[: len(text) // 2])
    code, doc, _ = run(capsys, "ring", "verify", p)
    assert code == 3 and doc["kind"] == "SchemaError"


def test_complex_validate(capsys, tmp_path):
    assert run(capsys, "complex", "validate", data("paper_example.complex.json"))[0] == 0
    doc = json.loads(open(data("paper_example.complex.json")).read())
    doc["differentials"]["1"]["rows"] = [["1 - B", "1 - A"]]
    p = write(tmp_path, "wrong.complex.json", doc)
    # the ring reference is resolved from the bundled data directory
    code, rep, _ = run(capsys, "complex", "validate", p)
    assert code == 1 and rep["location"]["index"] == "2"


def test_novikov_verify(capsys, tmp_path):
    cx = data("paper_example.complex.json")
    plus = data("paper_example.plus.cert.json")
    assert run(capsys, "novikov", "verify", cx, "--cert", plus)[0] == 0
    assert run(capsys, "novikov", "verify", cx, "--cert", plus, "--truncation", "3")[0] == 0
    code, rep, _ = run(capsys, "novikov", "verify", cx, "--cert", plus, "--truncation", "12")
    assert code == 2
    assert run(capsys, "novikov", "verify", cx, "--cert", plus, "--direction", "minus")[0] == 3
    assert run(capsys, "novikov", "verify", cx)[0] == 3
    ring = io.load_ring(data("abcd.ring.json"))
    bad = mutate_certificate(geometric_certificates(ring, 8)[0], 0, 1, 0, degree=4)
    p = write(tmp_path, "bad.cert.json", io.certificate_to_doc(bad, ring))
    code, rep, _ = run(capsys, "novikov", "verify", cx, "--cert", p)
    assert code == 1 and rep["location"]["degree"] == "4"


def test_novikov_decide(capsys):
    code, rep, _ = run(capsys, "novikov", "decide", data("one_term.complex.json"))
    assert code == 1 and rep["results"] == {"plus": "not acyclic", "minus": "not acyclic"}
    assert run(capsys, "novikov", "decide", data("t_minus_2.complex.json"))[0] == 0
    assert run(capsys, "novikov", "decide", data("paper_example.complex.json"))[0] == 3


def test_novikov_search(capsys, tmp_path):
    assert run(capsys, "novikov", "search", data("paper_example.complex.json"))[0] == 3
    assert run(capsys, "novikov", "search", data("one_term.complex.json"))[0] == 2
    out = tmp_path / "found.json"
    code, rep, _ = run(capsys, "novikov", "search", data("t_minus_2.complex.json"),
                       "--truncation", "5", "--out", out)
    assert code == 0 and rep["truncation"] == 5
    for d in ("plus", "minus"):
        cert = tmp_path / ("found.%s.json" % d)
        assert run(capsys, "novikov", "verify", data("t_minus_2.complex.json"),
                   "--cert", cert)[0] == 0
    code, rep, _ = run(capsys, "novikov", "search", data("t_minus_2.complex.json"),
                       "--direction", "plus")
    assert code == 0 and set(rep["certificates"]) == {"plus"}
    assert run(capsys, "novikov", "search", data("t_minus_2.complex.json"),
               "--truncation", "-1")[0] == 3


def test_dominate(capsys, tmp_path):
    code, rep, _ = run(capsys, "dominate", data("t_minus_2.complex.json"))
    assert code == 0
    assert rep["betti"] == {"0": 1, "1": 0}
    assert rep["windows"] == {"0": [1, 0], "1": [0, 0]}
    code, rep, _ = run(capsys, "dominate", data("paper_example.complex.json"))
    assert code == 0 and rep["betti"] is None
    assert rep["windows"] == {"0": [2, 2], "1": [1, 1], "2": [0, 0]}
    code, rep, _ = run(capsys, "dominate", data("zero.complex.json"))
    assert code == 0 and rep["witness"]["modules"] == {}
    out = tmp_path / "w.json"
    run(capsys, "dominate", data("t_minus_2.complex.json"), "--out", out)
    assert json.loads(out.read_text())["schema"] == "findom/witness/v1"


def test_identities(capsys, tmp_path):
    code, rep, err = run(capsys, "identities", "--samples", "0")
    assert code == 0 and "warning" in err
    code, rep, _ = run(capsys, "identities", "--suite", "hogrs", "--samples", "2",
                       "--ring", data("laurent.ring.json"), "--ring", data("abcd.ring.json"))
    assert code == 0 and set(rep["counts"]) == {"hogrs/laurent.ring.json",
                                                "hogrs/abcd.ring.json"}
    ring_doc = json.loads(open(data("abcd.ring.json")).read())
    ring_doc["partitions"]["minus"] = []
    p = write(tmp_path, "bad.ring.json", ring_doc)
    assert run(capsys, "identities", "--ring", p, "--samples", "1")[0] == 3


def test_two_step_example_command(capsys, tmp_path):
    code, rep, _ = run(capsys, "paper-example")
    assert code == 0
    assert rep["stages"]["witness"]["windows"] == {"0": [2, 2], "1": [1, 1], "2": [0, 0]}
    code, rep, _ = run(capsys, "paper-example", "--truncation", "2")
    assert code == 0 and rep["notes"]
    assert run(capsys, "paper-example", "--truncation", "9")[0] == 2
    ring = io.load_ring(data("abcd.ring.json"))
    bad = mutate_certificate(geometric_certificates(ring, 8)[1], 1, 0, 1, degree=-2)
    p = write(tmp_path, "bad.cert.json", io.certificate_to_doc(bad, ring))
    code, rep, _ = run(capsys, "paper-example", "--certificate-minus", p)
    assert code == 1 and "minus" in " ".join(rep["stages"])
    assert run(capsys, "paper-example", "--certificate-plus", p)[0] == 3


def test_usage_errors(capsys):
    assert run(capsys, "novikov", "frobnicate", "x")[0] == 3
    assert run(capsys)[0] == 3
    assert cli.main(["--help"]) == 0
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "findom", "ring", "verify",
                           data("twisted.ring.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ring"] == "twisted_laurent"
