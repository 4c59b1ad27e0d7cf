import random

import pytest

from findom.fields import GF, QQ
from findom.rings import LaurentRing, abcd_ring, swap_twisted_ring


@pytest.fixture(scope="session")
def laurent():
    return LaurentRing(QQ)


@pytest.fixture(scope="session")
def abcd():
    return abcd_ring(QQ)


@pytest.fixture(scope="session")
def twisted():
    return swap_twisted_ring(QQ)


def ring_variants():
    """(label, ring) for all three variants over Q and F_101."""
    out = []
    for fname, F in (("Q", QQ), ("F101", GF(101))):
        out += [("laurent/" + fname, LaurentRing(F)), ("twisted/" + fname, swap_twisted_ring(F)),
                ("abcd/" + fname, abcd_ring(F))]
    return out


RINGS = ring_variants()


@pytest.fixture(params=RINGS, ids=[r[0] for r in RINGS])
def any_ring(request):
    return request.param[1]


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """record(number, ok, detail): one line per criterion in the terminal summary."""
    store = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number, ok, detail=""):
        line = "criterion %d: %s%s" % (number, "PASS" if ok else "FAIL",
                                        "  (%s)" % detail if detail else "")
        store[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(ACCEPTANCE, {})
    if store:
        terminalreporter.section("acceptance criteria")
        for n in sorted(store):
            terminalreporter.write_line(store[n])
