"""Command line interface.

Exit codes: 0 verified / pass, 1 refuted / fail, 2 inconclusive, 3 input error.
Reports are JSON documents on stdout.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .complexes import r0_betti, validate_complex
from .errors import FindomError, GatingError, SchemaError, WindowError
from .identities import SUITES, run_suites
from .novikov import (ContractionCertificate, contraction_search, contraction_verify,
                      laurent_novikov_decide)
from .rings import validate_ring
from .sheaves import witness_pipeline

PASS, FAIL, INCONCLUSIVE, INPUT_ERROR = 0, 1, 2, 3
REPORT_SCHEMA = "findom/report/v1"


def _emit(doc, out=None):
    text = io.dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command, code, **kw):
    doc = {"schema": REPORT_SCHEMA, "command": command, "exit_code": code}
    doc.update(kw)
    _emit(doc)
    return code


def _directions(arg):
    return ("plus", "minus") if arg == "both" else (arg,)


# --------------------------------------------------------------------------


def cmd_ring_verify(args):
    ring = io.load_ring(args.path)
    v = validate_ring(ring)
    return _report("ring verify", PASS if v else FAIL, ring=ring.kind, verdict=v.detail,
                   location={k: str(x) for k, x in v.location.items()})


def cmd_complex_validate(args):
    C = io.load_complex(args.path)
    v = validate_ring(C.ring)
    if not v:
        raise SchemaError("ring does not verify: %s" % v.detail, args.path)
    v = validate_complex(C)
    return _report("complex validate", PASS if v else FAIL, verdict=v.detail,
                   location={k: str(x) for k, x in v.location.items()},
                   ranks={str(n): r for n, r in sorted(C.ranks.items())})


def _novikov_search(C, args):
    results, code, certs = {}, PASS, {}
    for d in _directions(args.direction):
        cert = contraction_search(C, d, args.truncation)
        if cert is None:
            results[d] = "not found (inconclusive)"
            code = max(code, INCONCLUSIVE)
        else:
            results[d] = "certificate found and verified"
            certs[d] = io.certificate_to_doc(cert, C.ring)
    if args.out and certs:
        for d, doc in certs.items():
            path = args.out if len(certs) == 1 else "%s.%s%s" % (
                os.path.splitext(args.out)[0], d, os.path.splitext(args.out)[1] or ".json")
            io.save(doc, path)
    return _report("novikov search", code, truncation=args.truncation, results=results,
                   certificates=certs if not args.out else {})


def _novikov_verify(C, args):
    if not args.cert:
        raise SchemaError("verify needs --cert")
    cert = io.load_certificate(args.cert, C.ring)
    if args.direction not in ("both", cert.direction):
        raise SchemaError("certificate is for the %s direction" % cert.direction, args.cert)
    T = cert.truncation if args.truncation is None else args.truncation
    if T > cert.truncation:
        return _report("novikov verify", INCONCLUSIVE, direction=cert.direction,
                       verdict="certificate only covers degrees up to %d" % cert.truncation)
    v = contraction_verify(C, ContractionCertificate(cert.direction, T, cert.maps))
    return _report("novikov verify", PASS if v else FAIL, direction=cert.direction,
                   truncation=T, verdict=v.detail,
                   location={k: str(x) for k, x in v.location.items()})


def _novikov_decide(C, args):
    ans = laurent_novikov_decide(C)
    dirs = _directions(args.direction)
    ok = all(ans[d] for d in dirs)
    return _report("novikov decide", PASS if ok else FAIL,
                   results={d: "acyclic" if ans[d] else "not acyclic" for d in dirs})


def cmd_novikov(args):
    C = io.load_complex(args.path)
    v = validate_complex(C)
    if not v:
        raise SchemaError("complex does not validate: %s" % v.detail, args.path)
    if args.mode != "verify" and args.truncation is None:
        args.truncation = 6
    if args.truncation is not None and args.truncation < 0:
        raise SchemaError("truncation must be >= 0")
    return {"search": _novikov_search, "verify": _novikov_verify,
            "decide": _novikov_decide}[args.mode](C, args)


def _witness(C):
    """Returns (report fields, exit code)."""
    try:
        S, W = witness_pipeline(C)
    except WindowError as exc:
        return {"verdict": str(exc)}, FAIL, None
    betti = r0_betti(W) if C.ring.component_finite else None
    doc = io.witness_to_doc(S, W, betti)
    return {"windows": doc["windows"], "betti": doc["betti"]}, PASS, doc


def cmd_dominate(args):
    C = io.load_complex(args.path)
    fields, code, doc = _witness(C)
    if doc is not None and args.out:
        io.save(doc, args.out)
    return _report("dominate", code, witness=doc if doc and not args.out else None, **fields)


def cmd_identities(args):
    rings = None
    if args.ring:
        rings = {}
        for p in args.ring:
            r = io.load_ring(p)
            v = validate_ring(r)
            if not v:
                raise SchemaError("ring does not verify: %s" % v.detail, p)
            rings[os.path.basename(p)] = r
    rep = run_suites(rings, args.suite, args.seed, args.samples)
    for w in rep.warnings:
        print("warning: " + w, file=sys.stderr)
    return _report("identities", PASS if rep.ok else FAIL, suite=args.suite, seed=args.seed,
                   samples=args.samples, **rep.as_dict())


def cmd_paper_example(args):
    stages = {}
    ring = io.load_ring(args.ring or io.data_path("abcd.ring.json"))
    v = validate_ring(ring)
    stages["ring"] = v.detail
    if not v:
        return _report("paper-example", FAIL, stages=stages)
    C = io.load_complex(args.complex or io.data_path("paper_example.complex.json"))
    v = validate_complex(C)
    stages["complex"] = v.detail
    if not v:
        return _report("paper-example", FAIL, stages=stages)
    T = args.truncation
    notes = []
    if T < 8:
        notes.append("truncation %d is weaker than the default 8" % T)
    for d in ("plus", "minus"):
        path = getattr(args, "certificate_" + d) or io.data_path(
            "paper_example.%s.cert.json" % d)
        cert = io.load_certificate(path, C.ring)
        if cert.direction != d:
            raise SchemaError("expected a %s certificate" % d, path)
        if T > cert.truncation:
            stages["certificate " + d] = "covers degrees up to %d only" % cert.truncation
            return _report("paper-example", INCONCLUSIVE, stages=stages)
        v = contraction_verify(C, ContractionCertificate(d, T, cert.maps))
        stages["certificate " + d] = v.detail
        if not v:
            return _report("paper-example", FAIL, stages=stages)
    fields, code, _ = _witness(C)
    stages["witness"] = fields
    return _report("paper-example", code, truncation=T, stages=stages, notes=notes)


# --------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="findom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="group", required=True)

    ring = sub.add_parser("ring", help="ring documents")
    rs = ring.add_subparsers(dest="action", required=True)
    rv = rs.add_parser("verify", help="check partitions of unity and relations")
    rv.add_argument("path")
    rv.set_defaults(func=cmd_ring_verify)

    cx = sub.add_parser("complex", help="complex documents")
    cs = cx.add_subparsers(dest="action", required=True)
    cv = cs.add_parser("validate", help="check d d = 0 and shapes")
    cv.add_argument("path")
    cv.set_defaults(func=cmd_complex_validate)

    nv = sub.add_parser("novikov", help="acyclicity over the Novikov rings")
    nv.add_argument("mode", choices=("search", "verify", "decide"))
    nv.add_argument("path")
    nv.add_argument("--direction", choices=("plus", "minus", "both"), default="both")
    nv.add_argument("--truncation", type=int, default=None)
    nv.add_argument("--cert", help="certificate document (verify)")
    nv.add_argument("--out", help="write found certificates here (search)")
    nv.set_defaults(func=cmd_novikov)

    dm = sub.add_parser("dominate", help="sheaf extension and H^0 witness")
    dm.add_argument("path")
    dm.add_argument("--out")
    dm.set_defaults(func=cmd_dominate)

    idn = sub.add_parser("identities", help="seeded identity suites")
    idn.add_argument("--suite", choices=("all",) + SUITES, default="all")
    idn.add_argument("--seed", type=int, default=0)
    idn.add_argument("--samples", type=int, default=200)
    idn.add_argument("--ring", action="append", help="ring document (repeatable); "
                     "default: the bundled rings over Q and F_101")
    idn.set_defaults(func=cmd_identities)

    pe = sub.add_parser("paper-example", help="end-to-end run on the ABCD two-step complex")
    pe.add_argument("--truncation", type=int, default=8)
    pe.add_argument("--ring")
    pe.add_argument("--complex")
    pe.add_argument("--certificate-plus", dest="certificate_plus")
    pe.add_argument("--certificate-minus", dest="certificate_minus")
    pe.set_defaults(func=cmd_paper_example)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else PASS
    try:
        return args.func(args)
    except (SchemaError, GatingError) as exc:
        return _report(" ".join(a for a in (args.group, getattr(args, "action", None),
                                            getattr(args, "mode", None)) if a),
                       INPUT_ERROR, error=str(exc), kind=type(exc).__name__)
    except FindomError as exc:
        return _report(args.group, FAIL, error=str(exc), kind=type(exc).__name__)


if __name__ == "__main__":
    sys.exit(main())
