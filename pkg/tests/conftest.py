import itertools
import random
import time

import pytest

from orderedpatterns.graph import OrderedGraph, is_realization

# criterion number -> (title, outcome, detail); filled by the acceptance suite
ACCEPTANCE: dict = {}


def all_graphs(n, max_m=None):
    """Every graph on positions 1..n, optionally with at most ``max_m`` edges."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if max_m is None:
        for mask in range(1 << len(pairs)):
            yield OrderedGraph(n, [p for b, p in enumerate(pairs) if mask >> b & 1])
        return
    for m in range(min(max_m, len(pairs)) + 1):
        for es in itertools.combinations(pairs, m):
            yield OrderedGraph(n, list(es))


def random_graphs(count, n_max, seed, n_min=1):
    """Seeded graphs with random sizes and densities."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.85])
        yield OrderedGraph(n, [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])


class WitnessTally:
    """Counts positive reports and the ones whose witness fails ``is_realization``."""

    def __init__(self):
        self.found = 0
        self.bad = []

    def check(self, G, P, report):
        if report.found:
            self.found += 1
            if not is_realization(G, report.witness, P):
                self.bad.append((G.n, sorted(G.edge_set), P, report.witness, report.engine))
        return report


WITNESSES = WitnessTally()


@pytest.fixture
def tally():
    return WITNESSES


class Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.detail = ""
        self.t0 = time.perf_counter()

    def note(self, text):
        self.detail = text

    @property
    def elapsed(self):
        return time.perf_counter() - self.t0


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    c = Criterion(*marker.args)
    ACCEPTANCE[c.number] = [c.title, "FAIL", ""]
    yield c
    ACCEPTANCE[c.number][2] = f"{c.detail} [{c.elapsed:.1f} s]".strip()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    num = getattr(report, "criterion_number", None)
    if num is not None and num in ACCEPTANCE:
        ACCEPTANCE[num][1] = "PASS" if report.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion_number = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, outcome, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num} {outcome}: {title} {detail}".rstrip())
