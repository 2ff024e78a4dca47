"""Affine line arrangements and their characteristic polynomials.

A line is the zero set of a*x + b*y + c with (a, b) != (0, 0), stored
with its first nonzero coefficient normalized to 1 so that equal lines
compare equal. An Arrangement is an ordered tuple of distinct lines
plus eagerly built caches: the intersection points (with the incident
line indices at each), the parallel classes, and the per-line counts
n_H = number of distinct points in which the other members meet H.

The characteristic polynomial is always t^2 - n*t + b2 with
b2 = sum over points of (multiplicity - 1), so it lives in Z[t] no
matter which coefficient field the lines use. Root pairs are classified
exactly: two integers, an irrational conjugate pair u +- v*sqrt(rad),
or a complex conjugate pair (rad < 0).

Everything is immutable; delete and add build fresh arrangements and
rebuild caches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InvariantViolation, MembershipError, ParseError, PreconditionError
from .exactalg import Field, squarefree_decomposition


@dataclass(frozen=True, slots=True)
class Line:
    """Normalized coefficient triple of a*x + b*y + c = 0."""

    a: object
    b: object
    c: object

    @property
    def direction(self) -> tuple:
        """Normalized (a, b) pair; two lines are parallel iff these agree."""
        return (self.a, self.b)


def normalize_line(field: Field, a, b, c) -> Line:
    a, b, c = field.coerce(a), field.coerce(b), field.coerce(c)
    if not a and not b:
        raise PreconditionError("not a line: a and b are both zero")
    head = a if a else b
    if head != field.one:
        a, b, c = a / head, b / head, c / head
    return Line(a, b, c)


def normalize_direction(field: Field, a, b) -> tuple:
    a, b = field.coerce(a), field.coerce(b)
    if not a and not b:
        raise PreconditionError("not a direction: a and b are both zero")
    head = a if a else b
    if head != field.one:
        a, b = a / head, b / head
    return (a, b)


@dataclass(frozen=True, slots=True)
class IncidencePoint:
    """Intersection point together with the indices of all lines through it."""

    x: object
    y: object
    incident: frozenset

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


def _intersect(l1: Line, l2: Line):
    """Intersection point of two distinct lines, or None when parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if not det:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return (x, y)


def line_through(field: Field, p, q) -> Line:
    """The unique line through two distinct points."""
    px, py = field.coerce(p[0]), field.coerce(p[1])
    qx, qy = field.coerce(q[0]), field.coerce(q[1])
    dx, dy = qx - px, qy - py
    if not dx and not dy:
        raise PreconditionError("need two distinct points")
    a, b = -dy, dx
    c = px * dy - py * dx
    return normalize_line(field, a, b, c)


@dataclass(frozen=True, slots=True)
class CharPoly:
    """t^2 - n*t + b2 for an arrangement of n lines."""

    n: int
    b2: int

    def eval(self, t):
        return t * t - self.n * t + self.b2

    def __str__(self):
        parts = ["t^2"]
        if self.n:
            parts.append(f"- {self.n} t")
        if self.b2:
            parts.append(f"+ {self.b2}")
        return " ".join(parts)

    def roots(self) -> "RootPair":
        return RootPair.from_char_poly(self)

    def factored_str(self) -> str | None:
        """"(t-5)(t-7)" style string when the roots are integers, else None."""
        rp = self.roots()
        if rp.classification != TWO_INTEGER:
            return None

        def factor(r):
            return "t" if r == 0 else f"(t-{r})"

        if rp.low == rp.high:
            return "t^2" if rp.low == 0 else f"(t-{rp.low})^2"
        return factor(rp.low) + factor(rp.high)


@dataclass(frozen=True, slots=True)
class Surd:
    """u + v*sqrt(rad) with rational u, v and squarefree rad not in {0, 1}."""

    u: Fraction
    v: Fraction
    rad: int

    @property
    def is_real(self) -> bool:
        return self.rad > 0

    def cmp_rational(self, q) -> int:
        """Sign of self - q for rational q; only for real surds."""
        if not self.is_real:
            raise PreconditionError("cannot order a complex surd")
        c = self.u - Fraction(q)
        v = self.v
        if v == 0:
            return (c > 0) - (c < 0)
        if c == 0:
            return 1 if v > 0 else -1
        if c > 0 and v > 0:
            return 1
        if c < 0 and v < 0:
            return -1
        # opposite signs: compare c*c against v*v*rad, sign of the larger wins
        lhs, rhs = c * c, v * v * self.rad
        if lhs == rhs:
            # would force sqrt(rad) rational, impossible for squarefree rad > 1
            raise InvariantViolation(f"surd {self} equals rational {q}")
        return 1 if (c > 0) == (lhs > rhs) else -1

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        mag = abs(self.v)
        vpart = f"sqrt({self.rad})" if mag == 1 else f"{mag}*sqrt({self.rad})"
        sign = "-" if self.v < 0 else "+"
        if self.u == 0:
            return vpart if self.v > 0 else f"-{vpart}"
        return f"{self.u} {sign} {vpart}"


TWO_INTEGER = "two-integer"
REAL_IRRATIONAL = "real-irrational"
COMPLEX_CONJUGATE = "complex-conjugate"


@dataclass(frozen=True, slots=True)
class RootPair:
    """Exact root data of a CharPoly.

    low and high are ints for the two-integer classification and Surd
    descriptors otherwise; for the complex classification they describe
    the conjugate pair and carry no ordering.
    """

    n: int
    b2: int
    discriminant: int
    classification: str
    low: object
    high: object

    @classmethod
    def from_char_poly(cls, cp: CharPoly) -> "RootPair":
        n, b2 = cp.n, cp.b2
        disc = n * n - 4 * b2
        if disc >= 0:
            s = isqrt(disc)
            if s * s == disc:
                if (n - s) % 2:
                    raise InvariantViolation(
                        f"integer discriminant parity broken for n={n}, b2={b2}"
                    )
                low, high = (n - s) // 2, (n + s) // 2
                if low + high != n or low * high != b2:
                    raise InvariantViolation("integer root reconstruction failed")
                return cls(n, b2, disc, TWO_INTEGER, low, high)
            f, rad = squarefree_decomposition(disc)
            kind = REAL_IRRATIONAL
        else:
            f, rad = squarefree_decomposition(-disc)
            rad = -rad
            kind = COMPLEX_CONJUGATE
        u = Fraction(n, 2)
        v = Fraction(f, 2)
        low = Surd(u, -v, rad)
        high = Surd(u, v, rad)
        if 2 * u != n or u * u - v * v * rad != b2:
            raise InvariantViolation("surd root reconstruction failed")
        return cls(n, b2, disc, kind, low, high)

    def cmp_low(self, q) -> int:
        """Sign of (low root) - q; roots must be real."""
        if self.classification == COMPLEX_CONJUGATE:
            raise PreconditionError("complex roots cannot be ordered")
        if self.classification == TWO_INTEGER:
            d = Fraction(self.low) - Fraction(q)
            return (d > 0) - (d < 0)
        return self.low.cmp_rational(q)

    def cmp_high(self, q) -> int:
        """Sign of (high root) - q; roots must be real."""
        if self.classification == COMPLEX_CONJUGATE:
            raise PreconditionError("complex roots cannot be ordered")
        if self.classification == TWO_INTEGER:
            d = Fraction(self.high) - Fraction(q)
            return (d > 0) - (d < 0)
        return self.high.cmp_rational(q)

    def gap_cmp(self, k: int) -> int:
        """Sign of (high - low) - k for real roots and k >= 0."""
        if self.classification == COMPLEX_CONJUGATE:
            raise PreconditionError("complex roots have no real gap")
        if k < 0:
            raise PreconditionError("gap comparisons need k >= 0")
        if self.classification == TWO_INTEGER:
            d = self.high - self.low - k
            return (d > 0) - (d < 0)
        # gap = 2*v*sqrt(rad) with v > 0; compare squares exactly
        g2 = 4 * self.high.v * self.high.v * self.high.rad
        d = g2 - k * k
        return (d > 0) - (d < 0)


class Arrangement:
    """Ordered distinct lines over one field, with eager incidence caches."""

    __slots__ = (
        "field",
        "lines",
        "_index",
        "_points",
        "_points_on",
        "_classes",
        "_n_counts",
        "_char_poly",
    )

    def __init__(self, field: Field, lines):
        lines = tuple(lines)
        index: dict[Line, int] = {}
        for i, line in enumerate(lines):
            if not isinstance(line, Line):
                raise PreconditionError(f"expected a Line, got {line!r}")
            # re-normalize to catch hand-built unnormalized triples
            canon = normalize_line(field, line.a, line.b, line.c)
            if canon != line:
                raise PreconditionError(f"line {line} is not normalized")
            if line in index:
                raise PreconditionError(f"duplicate line {line}")
            index[line] = i
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "_index", index)
        self._build_caches()

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    def _build_caches(self):
        lines = self.lines
        n = len(lines)
        by_coords: dict[tuple, set[int]] = {}
        order: list[tuple] = []
        for i in range(n):
            for j in range(i + 1, n):
                pt = _intersect(lines[i], lines[j])
                if pt is None:
                    continue
                if pt not in by_coords:
                    by_coords[pt] = set()
                    order.append(pt)
                by_coords[pt].update((i, j))
        points = tuple(
            IncidencePoint(x, y, frozenset(by_coords[(x, y)])) for (x, y) in order
        )
        points_on: list[list[int]] = [[] for _ in range(n)]
        for k, pt in enumerate(points):
            for i in pt.incident:
                points_on[i].append(k)
        classes: dict[tuple, list[int]] = {}
        for i, line in enumerate(lines):
            classes.setdefault(line.direction, []).append(i)
        n_counts = tuple(len(points_on[i]) for i in range(n))
        b2 = sum(pt.multiplicity - 1 for pt in points)
        object.__setattr__(self, "_points", points)
        object.__setattr__(
            self, "_points_on", tuple(tuple(ks) for ks in points_on)
        )
        object.__setattr__(
            self,
            "_classes",
            tuple((d, tuple(ix)) for d, ix in classes.items()),
        )
        object.__setattr__(self, "_n_counts", n_counts)
        object.__setattr__(self, "_char_poly", CharPoly(n, b2))

    # -------------------------------------------------------- constructors

    @classmethod
    def from_triples(cls, field: Field, triples) -> "Arrangement":
        return cls(field, [normalize_line(field, *t) for t in triples])

    # -------------------------------------------------------- basic queries

    def __len__(self):
        return len(self.lines)

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.field == other.field and frozenset(self.lines) == frozenset(
            other.lines
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.lines)))

    def __repr__(self):
        return f"Arrangement({self.field}, {len(self.lines)} lines)"

    @property
    def points(self) -> tuple[IncidencePoint, ...]:
        return self._points

    @property
    def parallel_classes(self) -> tuple:
        """Tuple of (direction, line index tuple), in first-occurrence order."""
        return self._classes

    @property
    def n_counts(self) -> tuple[int, ...]:
        """n_H for each member: distinct points where other members meet it."""
        return self._n_counts

    def char_poly(self) -> CharPoly:
        return self._char_poly

    def index_of(self, line: Line) -> int:
        try:
            return self._index[line]
        except KeyError:
            raise MembershipError(f"{line} is not a member") from None

    def __contains__(self, line: Line) -> bool:
        return line in self._index

    def points_on(self, i: int) -> tuple[int, ...]:
        """Indices into .points of the intersection points lying on member i."""
        return self._points_on[i]

    # -------------------------------------------------------- counting

    def count_on_line(self, line: Line) -> int:
        """Distinct intersection points of `line` with members other than itself.

        Defined for members and non-members alike.
        """
        pts = set()
        for other in self.lines:
            if other == line:
                continue
            pt = _intersect(line, other)
            if pt is not None:
                pts.add(pt)
        return len(pts)

    # -------------------------------------------------------- edits

    def _resolve(self, which) -> int:
        if isinstance(which, Line):
            return self.index_of(which)
        i = int(which)
        if not 0 <= i < len(self.lines):
            raise MembershipError(f"line index {i} out of range")
        return i

    def delete(self, which) -> "Arrangement":
        i = self._resolve(which)
        return Arrangement(self.field, self.lines[:i] + self.lines[i + 1 :])

    def add(self, line) -> "Arrangement":
        if isinstance(line, tuple):
            line = normalize_line(self.field, *line)
        if line in self._index:
            raise MembershipError(f"{line} is already a member")
        return Arrangement(self.field, self.lines + (line,))

    def subarrangement(self, indices) -> "Arrangement":
        idx = self._validate_subset(indices)
        return Arrangement(self.field, [self.lines[i] for i in idx])

    def _validate_subset(self, indices) -> tuple[int, ...]:
        idx = tuple(int(i) for i in indices)
        seen = set()
        for i in idx:
            if not 0 <= i < len(self.lines):
                raise MembershipError(f"line index {i} out of range")
            if i in seen:
                raise MembershipError(f"duplicate index {i} in subset")
            seen.add(i)
        return idx

    def sub_char_poly(self, indices) -> CharPoly:
        """CharPoly of the subarrangement, computed from the cached lattice."""
        idx = set(self._validate_subset(indices))
        b2 = 0
        for pt in self._points:
            m = len(pt.incident & idx)
            if m > 1:
                b2 += m - 1
        return CharPoly(len(idx), b2)

    def _count_within(self, i: int, subset: set[int]) -> int:
        """Distinct points where members of `subset` meet line i (i excluded)."""
        pts = 0
        for k in self.points_on(i):
            if self._points[k].incident & subset:
                pts += 1
        return pts

    def order_increasing(self, sub_indices) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Greedy ordering of the lines outside a subarrangement.

        Starting from B = sub_indices, repeatedly appends the remaining
        line H minimizing the number of points in which the current set
        meets H (ties broken by line index). Returns (order, counts)
        where counts[k] is that minimum at step k. The count sequence is
        nondecreasing.
        """
        base = set(self._validate_subset(sub_indices))
        remaining = [i for i in range(len(self.lines)) if i not in base]
        current = set(base)
        order: list[int] = []
        counts: list[int] = []
        while remaining:
            best = None
            best_count = None
            for i in remaining:
                c = self._count_within(i, current - {i})
                if best_count is None or c < best_count:
                    best, best_count = i, c
            order.append(best)
            counts.append(best_count)
            current.add(best)
            remaining.remove(best)
        return tuple(order), tuple(counts)


# ------------------------------------------------------------------ file IO

_TOKEN = re.compile(r"\S+")


def _tokens_with_columns(line: str):
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _parse_field_header(tokens, lineno, path) -> Field:
    words = [t for t, _ in tokens]
    try:
        if words == ["field", "Q"]:
            return Field.rationals()
        if len(words) == 4 and words[:3] == ["field", "Q", "sqrt"]:
            return Field.quadratic(int(words[3]))
        if len(words) == 3 and words[:2] == ["field", "F"]:
            return Field.prime(int(words[2]))
    except (ValueError, PreconditionError) as exc:
        raise ParseError(f"bad field header: {exc}", lineno, tokens[0][1], path) from None
    raise ParseError(
        "field header must be 'field Q', 'field Q sqrt <d>', or 'field F <p>'",
        lineno,
        tokens[0][1],
        path,
    )


def parse_body(text: str, path, keyword: str, arity: int):
    """Shared reader for .arr and .marr: a field header then keyword rows.

    Returns (field, rows) where each row is (arg tokens with columns,
    lineno, directive column); argument parsing is left to the caller.
    """
    field = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        tokens = _tokens_with_columns(stripped)
        if not tokens:
            continue
        word, col = tokens[0]
        if field is None:
            if word != "field":
                raise ParseError("expected a field header first", lineno, col, path)
            field = _parse_field_header(tokens, lineno, path)
            continue
        if word != keyword:
            raise ParseError(f"unknown directive {word!r}", lineno, col, path)
        if len(tokens) != arity + 1:
            raise ParseError(
                f"{keyword} takes {arity} arguments", lineno, col, path
            )
        rows.append((tokens[1:], lineno, col))
    if field is None:
        raise ParseError("empty input: missing field header", 1, 1, path)
    return field, rows


def scalar_at(field: Field, token: str, lineno: int, col: int, path):
    try:
        return field.parse_scalar(token)
    except ParseError as exc:
        raise ParseError(exc.message, lineno, col, path) from None


def parse_arrangement(text: str, path=None) -> Arrangement:
    """Parse the .arr format: a field header, then 'line <a> <b> <c>' rows."""
    field, rows = parse_body(text, path, "line", 3)
    lines = []
    seen = {}
    for args, lineno, col in rows:
        a, b, c = (scalar_at(field, tok, lineno, tc, path) for tok, tc in args)
        try:
            line = normalize_line(field, a, b, c)
        except PreconditionError as exc:
            raise ParseError(str(exc), lineno, col, path) from None
        if line in seen:
            raise ParseError(
                f"duplicate line (same as line directive on input line {seen[line]})",
                lineno,
                col,
                path,
            )
        seen[line] = lineno
        lines.append(line)
    return Arrangement(field, lines)


def load_arrangement(path) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_arrangement(fh.read(), path=str(path))


def format_field_header(field: Field) -> str:
    if field.kind == "rationals":
        return "field Q"
    if field.kind == "quadratic":
        return f"field Q sqrt {field.d}"
    return f"field F {field.p}"


def format_arrangement(arr: Arrangement) -> str:
    out = [format_field_header(arr.field)]
    fmt = arr.field.format_scalar
    for line in arr.lines:
        out.append(f"line {fmt(line.a)} {fmt(line.b)} {fmt(line.c)}")
    return "\n".join(out) + "\n"
