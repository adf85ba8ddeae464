import itertools
import random
from pathlib import Path

import pytest

from zeromac import build_world
from zeromac.channels import CORPUS

FIXTURES = Path(__file__).parent / "fixtures"


def random_world(rng: random.Random, max_vars: int = 4, max_symbols: int = 4, min_vars: int = 2):
    """A random nonempty outcome set over min_vars..max_vars variables."""
    k = rng.randint(min_vars, max_vars)
    names = [f"V{i}" for i in range(k)]
    alphabets = [[str(s) for s in range(rng.randint(1, max_symbols))] for _ in names]
    full = list(itertools.product(*alphabets))
    density = rng.choice([0.1, 0.2, 0.4, 0.6, 0.9])
    chosen = [o for o in full if rng.random() < density] or [rng.choice(full)]
    return build_world(names, chosen)


def random_worlds(seed: int, count: int, **kw):
    rng = random.Random(seed)
    return [random_world(rng, **kw) for _ in range(count)]


@pytest.fixture(params=sorted(CORPUS))
def corpus_channel(request):
    return request.param, CORPUS[request.param]()


@pytest.fixture
def fixtures():
    return FIXTURES


ACCEPTANCE: list = []


def record(criterion: int, ok: bool, detail: str) -> bool:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
