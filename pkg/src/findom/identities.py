"""Seeded identity suites over the bundled ring variants.

Every sample draws from ``random.Random("<seed>/<suite>/<ring>/<index>")``
so a failure is reproduced from (seed, index) alone, independent of how many
other samples ran before it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .fields import GF, QQ
from .rings import LaurentRing, abcd_ring, swap_twisted_ring
from .sheaves import HalfLineTensor, PowerSeriesSplitting, TwistingSheaf, hogrs_check
from .torus import (iota_map, mu_apply, mu_literal, pi_map, random_induced, tau_apply,
                    tau_literal)

SUITES = ("splites", "hogrs", "splitting", "adjoint")
SPLITTING_T = 8


@dataclass
class Failure:
    suite: str
    ring: str
    seed: object
    index: int
    detail: str

    def as_dict(self):
        return {"suite": self.suite, "ring": self.ring, "seed": self.seed,
                "index": self.index, "detail": self.detail}


@dataclass
class Report:
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    warnings: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def as_dict(self):
        return {"ok": self.ok, "counts": self.counts, "seconds": round(self.seconds, 3),
                "failures": [f.as_dict() for f in self.failures], "warnings": self.warnings}


def default_rings():
    """The three variants over Q and F_101, keyed by a short label."""
    out = {}
    for fname, F in (("Q", QQ), ("F101", GF(101))):
        out["laurent/" + fname] = LaurentRing(F)
        out["twisted/" + fname] = swap_twisted_ring(F)
        out["abcd/" + fname] = abcd_ring(F)
    return out


def sample_rng(seed, suite, ring_label, index):
    return random.Random("%s/%s/%s/%d" % (seed, suite, ring_label, index))


# one sample of each suite; returns None or a failure description

def splites_sample(ring, rng, tau=tau_apply, mu=mu_apply):
    x = random_induced(ring, rng, rank=2, nslots=3)
    if any(pi_map(mu(x), 2)):
        return "pi mu != 0"
    if tau(mu(x)) != x:
        return "tau mu != id"
    if mu(tau(x)) + iota_map(ring, pi_map(x, 2)) != x:
        return "mu tau + iota pi != id"
    m = [ring.random_element(rng, -2, 2) for _ in range(2)]
    if pi_map(iota_map(ring, m), 2) != m:
        return "pi iota != id"
    if mu_literal(x) != mu(x):
        return "mu differs from identity minus shift"
    if tau_literal(x) != tau(x):
        return "tau differs from its partition formula"
    return None


def hogrs_sample(ring, rng):
    for q in range(4):
        for p in range(4):
            S = TwistingSheaf(q, p, ring)
            v = hogrs_check(S, S.random_window_element(rng), S.random_pair(rng),
                            ring.random_element(rng, -5, 5))
            if not v:
                return "O(%d, %d): %s" % (q, p, v.detail)
    return None


def splitting_sample(ring, rng, T=SPLITTING_T):
    P = PowerSeriesSplitting(ring, T)
    r_poly = ring.random_element(rng, 0, 4)
    pair = (ring.random_element(rng, -4, 4), ring.random_element(rng, 0, T + 3))
    x = ring.random_element(rng, -4, T + 3)
    v = P.check(r_poly, pair, x)
    return None if v else v.detail


def adjoint_sample(ring, rng):
    q, p = rng.randint(0, 2), rng.randint(0, 2)
    for side, edge in (("plus", -p), ("minus", q)):
        H = HalfLineTensor(ring, edge, side)
        r = ring.random_element(rng, -2, 2)
        if H.alpha(H.beta(r)) != r:
            return "O(%d, %d) %s side: alpha beta != id" % (q, p, side)
        lo, hi = (edge, edge + 1) if side == "plus" else (edge - 1, edge)
        terms = [(ring.random_element(rng, lo, hi), ring.random_element(rng, -1, 1))
                 for _ in range(rng.randint(1, 2))]
        if H.coordinates(H.beta(H.alpha(terms))) != H.coordinates(terms):
            return "O(%d, %d) %s side: beta alpha != id" % (q, p, side)
    return None


SAMPLERS = {"splites": splites_sample, "hogrs": hogrs_sample,
            "splitting": splitting_sample, "adjoint": adjoint_sample}


def run_suites(rings=None, suites="all", seed=0, samples=200, stop_on_failure=True,
               samplers=None):
    """Run the named suites on every ring; deterministic in (seed, samples)."""
    rings = rings or default_rings()
    names = SUITES if suites == "all" else tuple(
        [suites] if isinstance(suites, str) else suites)
    samplers = dict(SAMPLERS, **(samplers or {}))
    for s in names:
        if s not in samplers:
            raise ValueError("unknown suite %r (choose from %s)" % (s, ", ".join(SUITES)))
    report = Report()
    if samples <= 0:
        report.warnings.append("no samples requested; nothing was checked")
    start = time.perf_counter()
    for s in names:
        for label, ring in rings.items():
            n = 0
            for i in range(max(samples, 0)):
                err = samplers[s](ring, sample_rng(seed, s, label, i))
                n += 1
                if err:
                    report.failures.append(Failure(s, label, seed, i, err))
                    if stop_on_failure:
                        break
            report.counts["%s/%s" % (s, label)] = n
            if report.failures and stop_on_failure:
                report.seconds = time.perf_counter() - start
                return report
    report.seconds = time.perf_counter() - start
    return report
