import os
import random

import pytest

from ikforge.enumeration import generate_all
from ikforge.graph import build_graph


@pytest.fixture(scope="session")
def candidates():
    """All max-degree-5 candidates (1177 graphs)."""
    return [g for _, g in generate_all(5)]


@pytest.fixture(scope="session")
def threads():
    return int(os.environ.get("IKFORGE_THREADS", min(4, os.cpu_count() or 1)))


def random_graph(rng: random.Random, n: int, p: float, multi: bool = False):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                m = rng.choice((1, 1, 1, 2)) if multi else 1
                edges.append((u, v, m))
    return build_graph(n, edges)


def shuffled(rng: random.Random, g):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm), perm


@pytest.fixture(scope="session")
def full_run(tmp_path_factory, threads):
    """One complete ``verify all`` run: (report, output directory)."""
    from ikforge.pipeline import SECTIONS, Config, run

    out = tmp_path_factory.mktemp("run")
    return run(list(SECTIONS), Config(threads=threads, out=out)), out
