"""Seeded random generators shared by the test modules.

All generators take an explicit random.Random so every suite is
reproducible; none of them touch global RNG state.
"""

from __future__ import annotations

import random

from linarr.arrangement import Arrangement, Line, normalize_direction, normalize_line
from linarr.derivations import Multiarrangement
from linarr.exactalg import Field

Q = Field.rationals()

_Q_DIRECTIONS = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (1, -2), (2, 1), (3, 1)]
_SMALL = (-2, -1, 0, 1, 2)


def field_directions(field: Field) -> list[tuple]:
    if field.characteristic:
        p = field.p
        dirs = [(field.one, field.from_int(t)) for t in range(p)]
        dirs.append((field.zero, field.one))
        return dirs
    return [normalize_direction(field, field.from_int(a), field.from_int(b)) for a, b in _Q_DIRECTIONS]


def random_arrangement(
    rng: random.Random,
    field: Field,
    max_lines: int,
    min_lines: int = 0,
) -> Arrangement:
    """Random arrangement biased toward shared points and shared directions."""
    target = rng.randint(min_lines, max_lines)
    dirs = field_directions(field)
    anchors = [
        (field.from_int(rng.choice(_SMALL)), field.from_int(rng.choice(_SMALL)))
        for _ in range(rng.randint(1, 3))
    ]
    lines: dict[Line, None] = {}
    attempts = 0
    while len(lines) < target and attempts < 20 * (target + 1):
        attempts += 1
        roll = rng.random()
        if roll < 0.45:
            a, b = rng.choice(dirs)
            x, y = rng.choice(anchors)
            line = normalize_line(field, a, b, -(a * x + b * y))
        elif roll < 0.8:
            a, b = rng.choice(dirs)
            line = normalize_line(field, a, b, field.from_int(rng.choice(_SMALL)))
        else:
            a = field.from_int(rng.choice(_SMALL))
            b = field.from_int(rng.choice(_SMALL))
            if not a and not b:
                continue
            line = normalize_line(field, a, b, field.from_int(rng.choice(_SMALL)))
        lines.setdefault(line, None)
    return Arrangement(field, lines)


def random_multiarrangement(
    rng: random.Random,
    field: Field,
    max_h: int = 5,
    max_mult: int = 4,
    min_h: int = 0,
) -> Multiarrangement:
    dirs = field_directions(field)
    h = rng.randint(min_h, min(max_h, len(dirs)))
    chosen = rng.sample(dirs, h)
    mults = [rng.randint(1, max_mult) for _ in chosen]
    return Multiarrangement(field, chosen, mults)


def random_subset(rng: random.Random, n: int, max_out: int | None = None) -> list[int]:
    """Random subset of range(n), optionally keeping the complement small."""
    if n == 0:
        return []
    if max_out is not None:
        out = rng.randint(0, min(max_out, n))
        drop = set(rng.sample(range(n), out))
        return [i for i in range(n) if i not in drop]
    k = rng.randint(0, n)
    return sorted(rng.sample(range(n), k))
