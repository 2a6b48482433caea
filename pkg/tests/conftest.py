import functools
import os
import random
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(__file__))

from hypothesis import settings

from raddepth import finite_type_certificate, load_preset
from raddepth.linalg import Mat, inverse
from raddepth.modules import Morph, Rep

settings.register_profile("raddepth", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("raddepth")

FINITE_PRESETS = ("A1", "A2", "A3", "N3", "QH4", "A3-ab0-213", "C3-bc0-231")


@functools.lru_cache(maxsize=None)
def algebra(name):
    return load_preset(name).presentation()


@functools.lru_cache(maxsize=None)
def certificate(name, max_dim=60):
    return finite_type_certificate(algebra(name), max_dim=max_dim)


def category(name):
    return certificate(name).category


def random_invertible(n, rng):
    while True:
        m = Mat([[Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))) for _ in range(n)]
                 for _ in range(n)], n, n)
        inv = inverse(m)
        if inv is not None:
            return m, inv


def base_change(m: Rep, seed: int):
    """An isomorphic copy of ``m`` and the isomorphism ``m -> copy``."""
    rng = random.Random(seed)
    pairs = [random_invertible(d, rng) for d in m.dims]
    q = m.algebra.quiver
    maps = []
    for a, mat in zip(q.arrows, m.maps):
        s, t = q.vertex_index(a.source), q.vertex_index(a.target)
        maps.append(pairs[t][0] @ mat @ pairs[s][1])
    copy = Rep(m.algebra, m.dims, maps)
    return copy, Morph(m, copy, [p for p, _ in pairs])


@functools.lru_cache(maxsize=None)
def qh(name):
    from raddepth.qh import qh_data
    return qh_data(algebra(name), load_preset(name).order)


@functools.lru_cache(maxsize=None)
def fdelta(name):
    from raddepth.qh import delta_good_category
    return delta_good_category(qh(name), base=category(name))


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
