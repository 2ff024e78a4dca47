"""Derivation modules of multiarrangements in the plane.

A central line is a normalized pair (a, b) standing for the form
a*x + b*y; a multiarrangement gives each central a positive integer
multiplicity. D(M) is the module of derivations theta = P dx + Q dy
with alpha^m dividing theta(alpha) = a*P + b*Q for every weighted
central. Over a field this module is free of rank 2, so it is pinned
down by two generator degrees d1 <= d2 with d1 + d2 = |m|; exponents()
finds them by scanning graded kernel dimensions from degree 0 up and
certifies the result through the Saito determinant.

Homogeneous polynomials of degree d are coefficient tuples of length
d + 1, entry j holding the coefficient of x^(d-j) y^j. The empty tuple
is the zero polynomial (degree undefined), which only shows up as a
quotient of constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .arrangement import (
    Arrangement,
    Line,
    format_field_header,
    normalize_direction,
    parse_body,
    scalar_at,
)
from .errors import InvariantViolation, MembershipError, ParseError, PreconditionError
from .exactalg import (
    ExactMatrix,
    Field,
    _rref_rows,
    kernel_basis,
    reduce_against,
)

AT_INFINITY = "infinity"


# -------------------------------------------------------- polynomial helpers


def poly_mul(field: Field, p: tuple, q: tuple) -> tuple:
    if not p or not q:
        return ()
    zero = field.zero
    out = [zero] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if not pi:
            continue
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return tuple(out)


def poly_scale(field: Field, c, p: tuple) -> tuple:
    c = field.coerce(c)
    return tuple(c * x for x in p)


def poly_sub(p: tuple, q: tuple) -> tuple:
    if len(p) != len(q):
        raise PreconditionError("degree mismatch in polynomial subtraction")
    return tuple(a - b for a, b in zip(p, q))


def linear_power(field: Field, central: tuple, e: int) -> tuple:
    out = (field.one,)
    base = (field.coerce(central[0]), field.coerce(central[1]))
    for _ in range(e):
        out = poly_mul(field, out, base)
    return out


def divmod_linear(field: Field, coeffs: tuple, central: tuple):
    """Split P = alpha*Q + gamma*beta^d for a normalized central alpha.

    beta is the first of {x, y} independent from alpha, so the remainder
    coefficient gamma is the beta^d coordinate of P in the (alpha, beta)
    monomial basis. Returns (Q, gamma) with Q one degree lower.
    """
    a, b = central
    d = len(coeffs) - 1
    if not a:
        # alpha = y, beta = x
        return coeffs[1:], coeffs[0]
    if not b:
        # alpha = x, beta = y
        return coeffs[:-1], coeffs[-1]
    # alpha = x + b*y, beta = x: evaluate at y = -x/b, then divide out
    t = -(field.one / b)
    gamma = coeffs[d]
    for j in range(d - 1, -1, -1):
        gamma = gamma * t + coeffs[j]
    if d == 0:
        return (), gamma
    q = [coeffs[0] - gamma]
    for j in range(1, d):
        q.append(coeffs[j] - b * q[-1])
    return tuple(q), gamma


def adic_coefficients(field: Field, coeffs: tuple, central: tuple, steps: int) -> list:
    """First `steps` coordinates of P along alpha^0, alpha^1, ... (beta-padded)."""
    out = []
    rest = coeffs
    for _ in range(steps):
        rest, gamma = divmod_linear(field, rest, central)
        out.append(gamma)
    return out


def divides_power(field: Field, central: tuple, m: int, coeffs: tuple) -> bool:
    """Whether alpha^m divides the homogeneous polynomial P."""
    steps = min(m, len(coeffs))
    zero = field.zero
    return all(g == zero for g in adic_coefficients(field, coeffs, central, steps))


# ------------------------------------------------------------- domain types


@dataclass(frozen=True, slots=True)
class HomDerivation:
    """theta = P dx + Q dy with P, Q homogeneous of one shared degree."""

    field: Field
    px: tuple
    py: tuple

    def __post_init__(self):
        if len(self.px) != len(self.py) or not self.px:
            raise PreconditionError("components must share one degree")
        object.__setattr__(self, "px", tuple(self.field.coerce(c) for c in self.px))
        object.__setattr__(self, "py", tuple(self.field.coerce(c) for c in self.py))
        if not (any(self.px) or any(self.py)):
            raise PreconditionError("the zero derivation is not allowed")

    @property
    def degree(self) -> int:
        return len(self.px) - 1

    def applied_to(self, central: tuple) -> tuple:
        """theta(a*x + b*y) = a*P + b*Q as a coefficient tuple."""
        a, b = self.field.coerce(central[0]), self.field.coerce(central[1])
        return tuple(a * p + b * q for p, q in zip(self.px, self.py))

    def times(self, coeffs: tuple) -> "HomDerivation":
        """Multiply both components by a homogeneous polynomial."""
        return HomDerivation(
            self.field,
            poly_mul(self.field, coeffs, self.px),
            poly_mul(self.field, coeffs, self.py),
        )

    def as_vector(self) -> tuple:
        return self.px + self.py

    def __str__(self):
        return f"({format_poly(self.field, self.px)}) dx + ({format_poly(self.field, self.py)}) dy"


def format_poly(field: Field, coeffs: tuple) -> str:
    d = len(coeffs) - 1
    parts = []
    for j, c in enumerate(coeffs):
        if not c:
            continue
        xexp, yexp = d - j, j
        mono = "".join(
            (
                ("x" if xexp == 1 else f"x^{xexp}") if xexp else "",
                ("y" if yexp == 1 else f"y^{yexp}") if yexp else "",
            )
        )
        txt = field.format_scalar(c)
        if mono:
            if txt == "1":
                txt = mono
            elif txt == "-1":
                txt = f"-{mono}"
            elif "+" in txt[1:] or "-" in txt[1:] or "/" in txt or "r" in txt:
                txt = f"({txt}){mono}"
            else:
                txt = f"{txt}{mono}"
        parts.append(txt)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class Multiarrangement:
    """Distinct central lines with positive multiplicities, in input order.

    Equality and hashing use set semantics so that logically equal
    multiarrangements built in different orders share cache entries.
    """

    __slots__ = ("field", "centrals", "mults")

    def __init__(self, field: Field, centrals, mults):
        centrals = tuple(
            normalize_direction(field, a, b) for a, b in centrals
        )
        mults = tuple(int(m) for m in mults)
        if len(centrals) != len(mults):
            raise PreconditionError("one multiplicity per central line")
        if len(set(centrals)) != len(centrals):
            raise PreconditionError("central lines must be distinct")
        if any(m < 1 for m in mults):
            raise PreconditionError("multiplicities must be >= 1")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "centrals", centrals)
        object.__setattr__(self, "mults", mults)

    def __setattr__(self, name, value):
        raise AttributeError("Multiarrangement is immutable")

    @classmethod
    def from_pairs(cls, field: Field, weighted) -> "Multiarrangement":
        """Build from (a, b, multiplicity) triples."""
        weighted = list(weighted)
        return cls(
            field,
            [(a, b) for a, b, _ in weighted],
            [m for _, _, m in weighted],
        )

    @property
    def size(self) -> int:
        """|m|, the sum of all multiplicities."""
        return sum(self.mults)

    @property
    def h(self) -> int:
        """Number of distinct central lines."""
        return len(self.centrals)

    def items(self) -> tuple:
        return tuple(zip(self.centrals, self.mults))

    def multiplicity_of(self, central) -> int:
        central = normalize_direction(self.field, *central)
        for c, m in zip(self.centrals, self.mults):
            if c == central:
                return m
        raise MembershipError(f"{central} is not a central line here")

    def with_multiplicities(self, mults) -> "Multiarrangement":
        return Multiarrangement(self.field, self.centrals, mults)

    def is_balanced(self) -> bool:
        """No single multiplicity exceeds half of |m|."""
        if not self.mults:
            return True
        return 2 * max(self.mults) <= self.size

    def __eq__(self, other):
        if not isinstance(other, Multiarrangement):
            return NotImplemented
        return self.field == other.field and frozenset(self.items()) == frozenset(
            other.items()
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.items())))

    def __repr__(self):
        return f"Multiarrangement({self.field}, h={self.h}, |m|={self.size})"


def q_poly(M: Multiarrangement) -> tuple:
    """The defining polynomial Q(M) = product of alpha^m over all centrals."""
    out = (M.field.one,)
    for central, m in M.items():
        out = poly_mul(M.field, out, linear_power(M.field, central, m))
    return out


# --------------------------------------------------------- Ziegler restriction


def ziegler_restriction(A: Arrangement, target=AT_INFINITY) -> Multiarrangement:
    """Ziegler restriction of the cone of A onto one of its planes.

    target = AT_INFINITY restricts onto z = 0: the centrals are the
    direction classes of A and each multiplicity is the size of the
    parallel class. An integer or Line target restricts onto the cone
    of that member instead. Either way the multiplicities sum to |A|.
    """
    field = A.field
    if target == AT_INFINITY:
        pairs = [(d, len(ix)) for d, ix in A.parallel_classes]
        M = Multiarrangement(field, [d for d, _ in pairs], [m for _, m in pairs])
        if M.size != len(A):
            raise InvariantViolation("restriction multiplicities must sum to |A|")
        return M

    if isinstance(target, Line):
        i = A.index_of(target)
    else:
        i = int(target)
        if not 0 <= i < len(A):
            raise MembershipError(f"line index {i} out of range")
    h_line = A.lines[i]
    plane = ExactMatrix.from_rows(field, [[h_line.a, h_line.b, h_line.c]])
    u, v = kernel_basis(plane)

    def restrict(triple):
        s = triple[0] * u[0] + triple[1] * u[1] + triple[2] * u[2]
        t = triple[0] * v[0] + triple[1] * v[1] + triple[2] * v[2]
        if not s and not t:
            raise InvariantViolation("a distinct plane restricted to zero")
        return normalize_direction(field, s, t)

    counts: dict[tuple, int] = {}
    order = []
    others = [ln for j, ln in enumerate(A.lines) if j != i]
    for triple in [(ln.a, ln.b, ln.c) for ln in others] + [
        (field.zero, field.zero, field.one)
    ]:
        central = restrict(triple)
        if central not in counts:
            counts[central] = 0
            order.append(central)
        counts[central] += 1
    M = Multiarrangement(field, order, [counts[c] for c in order])
    if M.size != len(A):
        raise InvariantViolation("restriction multiplicities must sum to |A|")
    if M.h != A.n_counts[i] + 1:
        raise InvariantViolation(
            "member restriction must have n_H + 1 distinct centrals"
        )
    return M


# ------------------------------------------------------------- graded pieces


def _constraint_rows(M: Multiarrangement, d: int) -> list:
    """Stacked linear conditions on the 2(d+1) coefficients of (P, Q)."""
    field = M.field
    rows = []
    width = d + 1
    zero = field.zero
    for central, mult in M.items():
        steps = min(mult, d + 1)
        a, b = central
        # adic coordinates of each monomial; theta(alpha) = a*P + b*Q is
        # linear in the unknowns, so columns are scaled copies of these
        per_monomial = []
        for j in range(width):
            mono = tuple(field.one if k == j else zero for k in range(width))
            per_monomial.append(adic_coefficients(field, mono, central, steps))
        for s in range(steps):
            row = [a * per_monomial[j][s] for j in range(width)]
            row += [b * per_monomial[j][s] for j in range(width)]
            rows.append(row)
    return rows


def graded_kernel_dim(M: Multiarrangement, d: int) -> int:
    """Dimension of the degree-d homogeneous piece of D(M)."""
    if d < 0:
        raise PreconditionError("degree must be >= 0")
    rows = _constraint_rows(M, d)
    ncols = 2 * (d + 1)
    if not rows:
        return ncols
    _, pivots = _rref_rows(rows, ncols, M.field.one)
    return ncols - len(pivots)


def graded_kernel(M: Multiarrangement, d: int) -> tuple:
    """Deterministic basis of the degree-d piece, as HomDerivations."""
    ncols = 2 * (d + 1)
    matrix = ExactMatrix.from_rows(M.field, _constraint_rows(M, d), ncols=ncols)
    basis = kernel_basis(matrix)
    width = d + 1
    return tuple(
        HomDerivation(M.field, vec[:width], vec[width:]) for vec in basis
    )


# ----------------------------------------------------------------- exponents


@dataclass(frozen=True, slots=True)
class Exponents:
    """Generator degrees d1 <= d2 of D(M) with certified witnesses."""

    d1: int
    d2: int
    theta1: HomDerivation
    theta2: HomDerivation

    @property
    def pair(self) -> tuple[int, int]:
        return (self.d1, self.d2)


@lru_cache(maxsize=None)
def exponents(M: Multiarrangement) -> Exponents:
    """Exponents of D(M) by graded kernel scan, Saito-verified.

    d1 is the least degree with a nonzero kernel. A two-dimensional
    kernel at d1 forces d2 = d1 (and 2*d1 = |m|); otherwise
    d2 = |m| - d1 and theta2 is the earliest reduced-echelon kernel
    vector at degree d2 outside the span of S*theta1.
    """
    total = M.size
    d1 = None
    for d in range(total // 2 + 1):
        dim = graded_kernel_dim(M, d)
        if dim > 0:
            d1 = d
            break
    if d1 is None:
        raise InvariantViolation("no derivation found up to |m|/2; scan is broken")
    basis1 = graded_kernel(M, d1)
    theta1 = basis1[0]
    if len(basis1) >= 2:
        if 2 * d1 != total:
            raise InvariantViolation(
                f"kernel dimension {len(basis1)} at degree {d1} with |m| = {total}"
            )
        result = Exponents(d1, d1, theta1, basis1[1])
        if not saito_verify(result.theta1, result.theta2, M):
            raise InvariantViolation("Saito check failed on a balanced kernel pair")
        return result
    d2 = total - d1
    span_rows = []
    k = d2 - d1
    field = M.field
    zero = field.zero
    for i in range(k + 1):
        mono = tuple(field.one if j == i else zero for j in range(k + 1))
        span_rows.append(list(theta1.times(mono).as_vector()))
    echelon, pivots = _rref_rows(span_rows, 2 * (d2 + 1), field.one)
    theta2 = None
    for candidate in graded_kernel(M, d2):
        residual = reduce_against(echelon, pivots, list(candidate.as_vector()))
        if any(residual):
            theta2 = candidate
            break
    if theta2 is None:
        raise InvariantViolation("no degree-d2 derivation independent of theta1")
    result = Exponents(d1, d2, theta1, theta2)
    if not saito_verify(theta1, theta2, M):
        raise InvariantViolation("Saito check failed on the selected witnesses")
    return result


def saito_verify(theta1: HomDerivation, theta2: HomDerivation, M: Multiarrangement) -> bool:
    """Whether det[[P1,Q1],[P2,Q2]] is a nonzero scalar times Q(M)."""
    if theta1.degree + theta2.degree != M.size:
        raise PreconditionError(
            f"witness degrees {theta1.degree}+{theta2.degree} != |m| = {M.size}"
        )
    field = M.field
    det = poly_sub(
        poly_mul(field, theta1.px, theta2.py),
        poly_mul(field, theta2.px, theta1.py),
    )
    qm = q_poly(M)
    lead = next(i for i, c in enumerate(qm) if c)
    c = det[lead] / qm[lead]
    if not c:
        return False
    return det == poly_scale(field, c, qm)


def is_member(M: Multiarrangement, theta: HomDerivation) -> bool:
    """Direct divisibility test: alpha^m | theta(alpha) for every central."""
    if theta.field != M.field:
        raise PreconditionError("field mismatch between derivation and centrals")
    return all(
        divides_power(M.field, central, mult, theta.applied_to(central))
        for central, mult in M.items()
    )


def euler_witness(M: Multiarrangement) -> HomDerivation:
    """The derivation (prod alpha^(m-1)) * theta_E, always in D(M).

    Its degree is |m| - h + 1; when |m| <= 2h - 2 that degree is d1.
    """
    field = M.field
    f = (field.one,)
    for central, mult in M.items():
        f = poly_mul(field, f, linear_power(field, central, mult - 1))
    theta = HomDerivation(field, f + (field.zero,), (field.zero,) + f)
    if not is_member(M, theta):
        raise InvariantViolation("Euler witness failed its divisibility check")
    return theta


# ------------------------------------------------------------------- file IO

_INT = re.compile(r"[0-9]+\Z")


def parse_multiarrangement(text: str, path=None) -> Multiarrangement:
    """Parse the .marr format: a field header, then 'mline <a> <b> <mult>' rows."""
    field, rows = parse_body(text, path, "mline", 3)
    centrals = []
    mults = []
    seen = {}
    for args, lineno, col in rows:
        (atok, acol), (btok, bcol), (mtok, mcol) = args
        a = scalar_at(field, atok, lineno, acol, path)
        b = scalar_at(field, btok, lineno, bcol, path)
        if not _INT.match(mtok) or int(mtok) < 1:
            raise ParseError(
                f"multiplicity must be a positive integer, got {mtok!r}",
                lineno,
                mcol,
                path,
            )
        try:
            central = normalize_direction(field, a, b)
        except PreconditionError as exc:
            raise ParseError(str(exc), lineno, col, path) from None
        if central in seen:
            raise ParseError(
                f"duplicate central (same as mline on input line {seen[central]})",
                lineno,
                col,
                path,
            )
        seen[central] = lineno
        centrals.append(central)
        mults.append(int(mtok))
    return Multiarrangement(field, centrals, mults)


def load_multiarrangement(path) -> Multiarrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_multiarrangement(fh.read(), path=str(path))


def format_multiarrangement(M: Multiarrangement) -> str:
    out = [format_field_header(M.field)]
    fmt = M.field.format_scalar
    for (a, b), m in M.items():
        out.append(f"mline {fmt(a)} {fmt(b)} {m}")
    return "\n".join(out) + "\n"
