"""Shared fixtures: the three reference configurations and random generators."""

import json
import random
from fractions import Fraction

import pytest

from quadriline import (
    ConfigurationInput,
    InputLine,
    NormalizedConfig,
    QQ,
    Ratio,
)

CFG1_INTS = (2, 3, 0, 1, 1)  # non-degenerate
CFG2_INTS = (-4, -1, 0, 2, 3)  # degenerate, no parallel lines
CFG3_INTS = (1, 0, 0, 1, 1)  # twin pairs (A parallel D, B parallel C)


@pytest.fixture
def cfg1():
    return NormalizedConfig.from_ints(QQ, *CFG1_INTS)


@pytest.fixture
def cfg2():
    return NormalizedConfig.from_ints(QQ, *CFG2_INTS)


@pytest.fixture
def cfg3():
    return NormalizedConfig.from_ints(QQ, *CFG3_INTS)


def rat(field, s, t):
    return Ratio.of(field.from_int(s), field.from_int(t))


def qq(n, d=1):
    return Fraction(n, d)


def random_rational_config(rng: random.Random) -> NormalizedConfig:
    """A random valid normalized configuration with small rational constants."""
    while True:
        vals = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(5)]
        if vals[2] != vals[3]:
            return NormalizedConfig.make(QQ, *vals)


def random_degenerate_config(rng: random.Random) -> NormalizedConfig:
    """A random degenerate configuration, built by solving for the intercept."""
    from quadriline import ALL_INTERCEPTS, degenerating_intercepts

    while True:
        ms = [Fraction(rng.randint(-5, 5), rng.randint(1, 2)) for _ in range(4)]
        if ms[2] == ms[3]:
            continue
        roots = degenerating_intercepts(QQ, *ms)
        if roots is ALL_INTERCEPTS:
            b_a = Fraction(rng.randint(-4, 4))
            return NormalizedConfig.make(QQ, *ms, b_a)
        if roots:
            return NormalizedConfig.make(QQ, *ms, roots[0])


def lines_for(cfg) -> dict:
    return cfg.lines()


def slope_intercept_line(field, m, k) -> InputLine:
    return InputLine.from_slope_intercept(field, field.from_int(m), field.from_int(k))


def standing_input(field, m_a, m_b, m_c, m_d, b_a) -> ConfigurationInput:
    """A ConfigurationInput already in standing form."""
    mk = lambda m, k: slope_intercept_line(field, m, k)
    return ConfigurationInput(
        field, (mk(m_a, b_a), mk(m_c, 0)), (mk(m_b, 1), mk(m_d, 0))
    )


def write_config(tmp_path, name, field_tag, pairs):
    """Write a CLI configuration file; pairs is [[(a,b,c) x2], [(a,b,c) x2]]."""
    doc = {
        "field": field_tag,
        "pairs": [
            [{"a": str(a), "b": str(b), "c": str(c)} for a, b, c in pair]
            for pair in pairs
        ],
    }
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


# Standing-form (a, b, c) triples for the reference configurations, with
# lines written as a*x + b*y = c.
CFG1_PAIRS = [[(-2, 1, 1), (0, 1, 0)], [(-3, 1, 1), (-1, 1, 0)]]
CFG2_PAIRS = [[(4, 1, 3), (0, 1, 0)], [(1, 1, 1), (-2, 1, 0)]]
CFG3_PAIRS = [[(-1, 1, 1), (0, 1, 0)], [(0, 1, 1), (-1, 1, 0)]]
