import json
import random
from pathlib import Path

import pytest

from qhspectrum.poly import Polynomial

ACCEPTANCE = pytest.StashKey[list]()

CORPUS_PATH = Path(__file__).resolve().parents[1] / "src" / "qhspectrum" / "data" / "corpus.jsonl"


def bp_polynomial(c):
    names = [f"z{i}" for i in range(len(c))]
    terms = {tuple(ci if j == i else 0 for j in range(len(c))): 1 for i, ci in enumerate(c)}
    return Polynomial(terms, names)


def random_bp_instances(count=200, seed=20261015):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 4)
        out.append([rng.randint(2, 7) for _ in range(n + 1)])
    return out


def corpus_records():
    return [json.loads(line) for line in CORPUS_PATH.read_text().splitlines()
            if line.strip() and not line.startswith("#")]


@pytest.fixture(scope="session")
def acceptance_log(request):
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def log(criterion, passed, detail):
        line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {detail}"
        lines.append(line)
        print(line)
    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
