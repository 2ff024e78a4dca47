"""Exact scalars and dense linear algebra over Q, Q(sqrt d), and F_p.

Three scalar representations share one arithmetic protocol (binary ops,
unary minus, truthiness as a zero test):

  * rationals            stdlib Fraction, always in lowest terms
  * quadratic extension  Quad(u, v, d) meaning u + v*sqrt(d)
  * prime field          Mod(value, p) with value reduced into [0, p)

A Field value describes which representation an arrangement or matrix
uses and provides coercion, parsing, and formatting. All arithmetic is
arbitrary precision; nothing here ever rounds.

Matrices are immutable and row-major. kernel_basis returns the reduced
row echelon form of the standard free-variable parametrization of the
null space, which makes the basis deterministic: the same matrix always
yields the same vectors in the same order.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, PreconditionError

RATIONALS = "rationals"
QUADRATIC = "quadratic"
PRIME = "prime"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def squarefree_decomposition(m: int) -> tuple[int, int]:
    """Write m >= 1 as f*f*r with r squarefree; returns (f, r)."""
    if m < 1:
        raise PreconditionError(f"need a positive integer, got {m}")
    f = 1
    i = 2
    while i * i <= m:
        while m % (i * i) == 0:
            m //= i * i
            f *= i
        i += 1
    return f, m


class Quad:
    """u + v*sqrt(d) with rational u, v and a fixed squarefree d.

    Mixing values with different d raises; mixing with int or Fraction
    coerces the rational into the extension. Because d is squarefree and
    not 0 or 1, the norm u*u - d*v*v vanishes only at zero, so every
    nonzero value is invertible.
    """

    __slots__ = ("u", "v", "d")

    def __init__(self, u, v, d: int):
        object.__setattr__(self, "u", Fraction(u))
        object.__setattr__(self, "v", Fraction(v))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quad is immutable")

    def _lift(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise PreconditionError(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) values"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Quad(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(self.u + o.u, self.v + o.v, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(self.u - o.u, self.v - o.v, self.d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(o.u - self.u, o.v - self.v, self.d)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quad(
            self.u * o.u + self.d * self.v * o.v,
            self.u * o.v + self.v * o.u,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        norm = self.u * self.u - self.d * self.v * self.v
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return Quad(self.u / norm, -self.v / norm, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Quad(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __neg__(self):
        return Quad(-self.u, -self.v, self.d)

    def __bool__(self):
        return self.u != 0 or self.v != 0

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.d == other.d and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash(("quad", self.u, self.v, self.d))

    def __repr__(self):
        return f"Quad({self.u}, {self.v}, d={self.d})"


class Mod:
    """Residue in the prime field F_p, stored reduced into [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "value", int(value) % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Mod is immutable")

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise PreconditionError(f"cannot mix F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Mod(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Mod(pow(self.value, n, self.p), self.p)

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(("mod", self.value, self.p))

    def __repr__(self):
        return f"Mod({self.value}, p={self.p})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_RE_RAT = re.compile(rf"{_RAT}\Z")
_RE_INT = re.compile(r"[+-]?\d+\Z")
_RE_QUAD_FULL = re.compile(rf"(?P<u>{_RAT})(?P<sign>[+-])(?P<v>(?:\d+(?:/\d+)?)?)r\Z")
_RE_QUAD_PURE = re.compile(rf"(?P<v>{_RAT}|[+-]?)r\Z")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


@dataclass(frozen=True, slots=True)
class Field:
    """Descriptor for one of the three supported coefficient fields."""

    kind: str
    d: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.d is not None or self.p is not None:
                raise PreconditionError("rationals take no parameters")
        elif self.kind == QUADRATIC:
            if self.p is not None or self.d is None:
                raise PreconditionError("quadratic field needs d only")
            if self.d in (0, 1):
                raise PreconditionError(f"sqrt({self.d}) is rational, d must not be 0 or 1")
            if squarefree_decomposition(abs(self.d))[0] != 1:
                raise PreconditionError(f"d = {self.d} is not squarefree")
        elif self.kind == PRIME:
            if self.d is not None or self.p is None:
                raise PreconditionError("prime field needs p only")
            if not is_prime(self.p):
                raise PreconditionError(f"p = {self.p} is not prime")
        else:
            raise PreconditionError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(RATIONALS)

    @classmethod
    def quadratic(cls, d: int) -> "Field":
        return cls(QUADRATIC, d=d)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(PRIME, p=p)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        if self.kind == RATIONALS:
            return Fraction(n)
        if self.kind == QUADRATIC:
            return Quad(n, 0, self.d)
        return Mod(n, self.p)

    def coerce(self, x):
        """Return x as this field's canonical scalar type, or raise."""
        if self.kind == RATIONALS:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
        elif self.kind == QUADRATIC:
            if isinstance(x, Quad):
                if x.d != self.d:
                    raise PreconditionError(
                        f"sqrt({x.d}) value in a sqrt({self.d}) field"
                    )
                return x
            if isinstance(x, (int, Fraction)):
                return Quad(x, 0, self.d)
        else:
            if isinstance(x, Mod):
                if x.p != self.p:
                    raise PreconditionError(f"F_{x.p} value in an F_{self.p} field")
                return x
            if isinstance(x, int):
                return Mod(x, self.p)
        raise PreconditionError(f"{x!r} is not a scalar of {self}")

    def is_element(self, x) -> bool:
        try:
            self.coerce(x)
            return True
        except PreconditionError:
            return False

    def parse_scalar(self, text: str):
        """Parse scalar syntax: '-3', '5/7', '2+3/4r' (r = sqrt d), residues '4'."""
        if self.kind == RATIONALS:
            if not _RE_RAT.match(text):
                raise ParseError(f"bad rational {text!r}")
            return _fraction(text)
        if self.kind == QUADRATIC:
            m = _RE_QUAD_FULL.match(text)
            if m:
                u = _fraction(m.group("u"))
                v = _fraction(m.group("v") or "1")
                if m.group("sign") == "-":
                    v = -v
                return Quad(u, v, self.d)
            m = _RE_QUAD_PURE.match(text)
            if m:
                vtxt = m.group("v")
                if vtxt in ("", "+"):
                    v = Fraction(1)
                elif vtxt == "-":
                    v = Fraction(-1)
                else:
                    v = _fraction(vtxt)
                return Quad(0, v, self.d)
            if _RE_RAT.match(text):
                return Quad(_fraction(text), 0, self.d)
            raise ParseError(f"bad quadratic scalar {text!r}")
        if not _RE_INT.match(text):
            raise ParseError(f"bad residue {text!r}")
        return Mod(int(text), self.p)

    def format_scalar(self, x) -> str:
        """Canonical text for a scalar; round-trips through parse_scalar."""
        x = self.coerce(x)
        if self.kind == RATIONALS:
            return str(x)
        if self.kind == PRIME:
            return str(x.value)
        if x.v == 0:
            return str(x.u)
        if x.v == 1:
            vpart = "r"
        elif x.v == -1:
            vpart = "-r"
        elif x.v > 0:
            vpart = f"{x.v}r"
        else:
            vpart = f"-{-x.v}r"
        if x.u == 0:
            return vpart
        sign = "+" if x.v > 0 else ""
        return f"{x.u}{sign}{vpart}"

    def __str__(self):
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == QUADRATIC:
            return f"Q(sqrt {self.d})"
        return f"F_{self.p}"


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    """Immutable row-major matrix with entries in a single field."""

    field: Field
    nrows: int
    ncols: int
    entries: tuple

    @classmethod
    def from_rows(cls, field: Field, rows, ncols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if ncols is not None and ncols != width:
                raise PreconditionError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise PreconditionError("ragged rows")
            flat.extend(field.coerce(x) for x in r)
        return cls(field, len(rows), ncols, tuple(flat))

    def entry(self, i: int, j: int):
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.ncols : (i + 1) * self.ncols])

    def rows_list(self) -> list[list]:
        return [self.row(i) for i in range(self.nrows)]

    def mulvec(self, v) -> tuple:
        if len(v) != self.ncols:
            raise PreconditionError("vector length does not match column count")
        v = [self.field.coerce(x) for x in v]
        zero = self.field.zero
        out = []
        for i in range(self.nrows):
            acc = zero
            for j in range(self.ncols):
                acc = acc + self.entry(i, j) * v[j]
            out.append(acc)
        return tuple(out)


def _rref_rows(rows: list[list], ncols: int, one) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        head = rows[r][c]
        if head != one:
            rows[r] = [x / head for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(matrix: ExactMatrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of the matrix; returns (rows, pivot columns)."""
    return _rref_rows(matrix.rows_list(), matrix.ncols, matrix.field.one)


def rank(matrix: ExactMatrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: ExactMatrix) -> tuple[tuple, ...]:
    """Deterministic basis of the null space.

    Construction: RREF the matrix, parametrize by free columns in
    increasing order, then put the resulting basis itself into reduced
    echelon form. rank + len(kernel_basis) always equals ncols.
    """
    field = matrix.field
    echelon, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.ncols) if c not in pivot_set]
    zero, one = field.zero, field.one
    raw = []
    for f in free:
        v = [zero] * matrix.ncols
        v[f] = one
        for j, pc in enumerate(pivots):
            v[pc] = -echelon[j][f]
        raw.append(v)
    reduced, _ = _rref_rows(raw, matrix.ncols, one)
    return tuple(tuple(r) for r in reduced)


def reduce_against(echelon: list[list], pivots: list[int], v: list) -> list:
    """Residual of v after elimination by rows already in reduced echelon form."""
    v = list(v)
    for row, pc in zip(echelon, pivots):
        if v[pc]:
            f = v[pc]
            v = [a - f * b for a, b in zip(v, row)]
    return v
