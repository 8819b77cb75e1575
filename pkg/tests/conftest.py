"""Shared seeded generators for random shifted skew shapes and restrictions."""

import random

import pytest

from skewbetti.diagrams import build_shifted_skew, restrict


def random_shape(rng: random.Random, max_first: int = 8):
    """A random nonempty shifted skew shape lambda/mu."""
    while True:
        lam = [rng.randint(1, max_first)]
        while rng.random() < 0.7 and lam[-1] > 1:
            lam.append(rng.randint(1, lam[-1] - 1))
        mu = []
        for part in lam:
            hi = min(part - 1, (mu[-1] - 1) if mu else part - 1)
            if hi >= 1 and rng.random() < 0.5:
                mu.append(rng.randint(1, hi))
            else:
                break
        try:
            shape = build_shifted_skew(tuple(lam), tuple(mu))
        except ValueError:
            continue
        if shape.cells:
            return shape


def random_restriction(rng: random.Random, total: int = 12, require_cells=True):
    """A random bipartite restriction D_{X|Y} with |X| + |Y| <= total."""
    while True:
        shape = random_shape(rng)
        top = len(shape.lam) + shape.lam.parts[0]
        nx = rng.randint(1, min(total - 1, top, 8))
        ny = rng.randint(1, min(total - nx, top, 8))
        xs = tuple(sorted(rng.sample(range(1, top + 1), nx)))
        ys = tuple(sorted(rng.sample(range(1, top + 1), ny)))
        d = restrict(shape, xs, ys)
        if d.cells or not require_cells:
            return d


def random_shape_within(rng: random.Random, n: int):
    """A random nonempty shifted skew shape living inside [n] x [n]."""
    while True:
        lam = []
        top = n - 1
        while top >= 1 and (not lam or rng.random() < 0.75):
            part = rng.randint(1, top)
            if lam and part >= lam[-1]:
                part = lam[-1] - 1
            if part < 1:
                break
            lam.append(part)
            top = part - 1
        if not lam:
            continue
        mu = []
        for part in lam:
            hi = min(part - 1, (mu[-1] - 1) if mu else part - 1)
            if hi >= 1 and rng.random() < 0.5:
                mu.append(rng.randint(1, hi))
            else:
                break
        try:
            shape = build_shifted_skew(tuple(lam), tuple(mu))
        except ValueError:
            continue
        if shape.cells:
            return shape


def random_shifted_restriction(rng: random.Random, max_labels: int = 8):
    """A random shifted restriction D_X with cells."""
    while True:
        shape = random_shape(rng)
        top = len(shape.lam) + shape.lam.parts[0]
        k = rng.randint(2, min(max_labels, top))
        xs = tuple(sorted(rng.sample(range(1, top + 1), k)))
        d = restrict(shape, xs)
        if d.cells:
            return d


@pytest.fixture
def rng():
    return random.Random(20260810)
