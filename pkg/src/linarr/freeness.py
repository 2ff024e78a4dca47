"""Exact freeness decisions and the combinatorial criteria layered on them.

The ground truth is decide_free: the second Betti number b2 of an affine
line arrangement always dominates the product d1*d2 of its Ziegler
restriction exponents, with equality precisely when the arrangement is
free. Every other routine in this module is a criterion that reads only
combinatorial data (characteristic polynomial roots, incidence counts,
distinguished subarrangements) and, when its hypotheses hold, predicts
the same verdict. Criteria never overrule the exact decision; any
disagreement raises InvariantViolation, because it would mean a bug in
one of the two computations rather than a mathematical possibility.

Criterion entries carry machine-readable evidence dictionaries whose
keys are stable snake_case names; members of the arrangement are
referenced by index, external lines by their coefficient text.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .arrangement import (
    COMPLEX_CONJUGATE,
    TWO_INTEGER,
    Arrangement,
    Line,
    line_through,
    normalize_direction,
    normalize_line,
)
from .derivations import AT_INFINITY, exponents, ziegler_restriction
from .errors import InvariantViolation, MembershipError, PreconditionError

FREE = "free"
NOT_FREE = "not-free"
NO_CONCLUSION = "no-conclusion"

# Exhaustive external-line enumeration is only attempted for small primes.
PLANE_PRIME_CAP = 13

# Intermediate subarrangements are searched exhaustively when the gap
# between A and B is at most this many lines (2^12 subsets).
EXHAUSTIVE_GAP_CAP = 12


@dataclass(frozen=True, slots=True)
class FreenessCertificate:
    """Outcome of the exact freeness decision.

    b2 is compared against d1*d2 for the Ziegler restriction onto
    `target` (the at-infinity plane by default, or a member line).
    exponents is the pair (d1, d2) when free and None otherwise.
    """

    verdict: str
    exponents: tuple | None
    b2: int
    d1: int
    d2: int
    target: object

    @property
    def is_free(self) -> bool:
        return self.verdict == FREE


@dataclass(frozen=True, slots=True)
class CriterionEntry:
    """One criterion's verdict: name, applicability, conclusion, evidence."""

    name: str
    applicable: bool
    conclusion: str
    evidence: dict

    def as_record(self) -> dict:
        return {
            "criterion": self.name,
            "applicable": self.applicable,
            "conclusion": self.conclusion,
            "evidence": self.evidence,
        }


@dataclass(frozen=True, slots=True)
class CriterionReport:
    certificate: FreenessCertificate
    entries: tuple

    def entry(self, name: str) -> CriterionEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


@dataclass(frozen=True, slots=True)
class RootWindowReport:
    """Observed incidence counts after the root-window assertions passed."""

    member_values: tuple
    external_values: tuple
    externals_checked: int
    free: bool


# ------------------------------------------------------------ exact decision


@lru_cache(maxsize=None)
def _decide_free_cached(A: Arrangement, target) -> FreenessCertificate:
    M = ziegler_restriction(A, target)
    e = exponents(M)
    b2 = A.char_poly().b2
    if e.d1 + e.d2 != len(A):
        raise InvariantViolation("restriction exponents must sum to |A|")
    if b2 < e.d1 * e.d2:
        raise InvariantViolation(
            f"b2 = {b2} below exponent product {e.d1 * e.d2}; "
            "the lower bound b2 >= d1*d2 is unconditional"
        )
    if b2 == e.d1 * e.d2:
        return FreenessCertificate(FREE, (e.d1, e.d2), b2, e.d1, e.d2, target)
    return FreenessCertificate(NOT_FREE, None, b2, e.d1, e.d2, target)


def decide_free(A: Arrangement, target=AT_INFINITY) -> FreenessCertificate:
    """Decide freeness exactly: free iff b2 equals the product of the
    Ziegler restriction exponents. target selects the restriction plane
    (AT_INFINITY, a member Line, or a member index)."""
    if target != AT_INFINITY and not isinstance(target, Line):
        i = int(target)
        if not 0 <= i < len(A):
            raise MembershipError(f"line index {i} out of range")
        target = A.lines[i]
    return _decide_free_cached(A, target)


# ------------------------------------------------------- evidence helpers


def _line_text(A: Arrangement, line: Line) -> str:
    fmt = A.field.format_scalar
    return f"{fmt(line.a)} {fmt(line.b)} {fmt(line.c)}"


def _member_index(A: Arrangement, which) -> int:
    if isinstance(which, Line):
        return A.index_of(which)
    i = int(which)
    if not 0 <= i < len(A):
        raise MembershipError(f"line index {i} out of range")
    return i


def _integer_roots(A: Arrangement):
    """(low, high) integer roots of chi(A, t), or None."""
    roots = A.char_poly().roots()
    if roots.classification != TWO_INTEGER:
        return None
    return roots.low, roots.high


def _member_witness(A: Arrangement, values) -> int | None:
    for i, n_h in enumerate(A.n_counts):
        if n_h in values:
            return i
    return None


def _inapplicable(name: str, reason: str, **extra) -> CriterionEntry:
    evidence = {"reason": reason}
    evidence.update(extra)
    return CriterionEntry(name, False, NO_CONCLUSION, evidence)


# ---------------------------------------------------------------- criteria


def root_incidence(A: Arrangement, externals=()) -> CriterionEntry:
    """Freeness from a single incidence count hitting a root of chi.

    With integer roots a <= a+b, any line H (member or supplied
    external) with count in {a, a+b} certifies freeness. Finding no
    such line concludes nothing.
    """
    name = "root_incidence"
    externals = tuple(externals)
    pair = _integer_roots(A)
    if pair is None:
        return _inapplicable(
            name,
            "roots are not a pair of integers",
            classification=A.char_poly().roots().classification,
        )
    a, ab = pair
    witness = _member_witness(A, (a, ab))
    if witness is not None:
        return CriterionEntry(
            name,
            True,
            FREE,
            {"member": witness, "count": A.n_counts[witness], "roots": [a, ab]},
        )
    for L in externals:
        if L in A:
            raise MembershipError(f"{L} is a member, not an external line")
        n_l = A.count_on_line(L)
        if n_l in (a, ab):
            return CriterionEntry(
                name,
                True,
                FREE,
                {"external": _line_text(A, L), "count": n_l, "roots": [a, ab]},
            )
    return CriterionEntry(
        name,
        True,
        NO_CONCLUSION,
        {
            "roots": [a, ab],
            "member_counts": sorted(set(A.n_counts)),
            "externals_checked": len(externals),
        },
    )


def deletion_pair(A: Arrangement, which) -> CriterionEntry:
    """Common-root test for the pair (A, A minus H).

    The two characteristic polynomials differ by t - n_H, so their gcd
    is nonconstant exactly when both vanish at n_H; in that case the
    pair is free on both sides. Without a common root the two cannot
    both be free, which alone settles nothing about A.
    """
    name = "deletion_pair"
    i = _member_index(A, which)
    sub = A.delete(i)
    n_h = A.n_counts[i]
    common = A.char_poly().eval(n_h) == 0
    if common:
        if sub.char_poly().eval(n_h) != 0:
            raise InvariantViolation(
                "deletion-restriction forces both polynomials to vanish at n_H"
            )
        if n_h < 0:
            raise InvariantViolation("a common root must be a nonnegative integer")
        return CriterionEntry(
            name,
            True,
            FREE,
            {"member": i, "common_root": n_h, "deleted_free": True},
        )
    return CriterionEntry(
        name,
        True,
        NO_CONCLUSION,
        {"member": i, "count": n_h, "pair_free": False},
    )


def addition(A: Arrangement, which) -> CriterionEntry:
    """Addition step: chi(A, n_H) = chi(A', n_H) = 0 ties the freeness of
    A to that of A' = A minus H; the smaller side is then decided exactly."""
    name = "addition"
    i = _member_index(A, which)
    sub = A.delete(i)
    n_h = A.n_counts[i]
    if A.char_poly().eval(n_h) != 0:
        return CriterionEntry(
            name,
            True,
            NO_CONCLUSION,
            {"member": i, "count": n_h, "chi_at_count": A.char_poly().eval(n_h)},
        )
    if sub.char_poly().eval(n_h) != 0:
        raise InvariantViolation(
            "deletion-restriction forces both polynomials to vanish at n_H"
        )
    smaller = decide_free(sub)
    return CriterionEntry(
        name,
        True,
        smaller.verdict,
        {"member": i, "count": n_h, "deleted_verdict": smaller.verdict},
    )


def bracketing_sub(A: Arrangement, sub_indices) -> CriterionEntry:
    """Biconditional freeness test from a subarrangement with bracketing roots.

    With chi(A) = (t-n)(t-n-r) and a subarrangement B whose real roots
    satisfy alpha <= n and n-1 <= beta, freeness of A is equivalent to
    some member count hitting {n, n+r}. B need not be free.
    """
    name = "bracketing_sub"
    idx = tuple(sub_indices)
    pair = _integer_roots(A)
    if pair is None:
        return _inapplicable(name, "roots are not a pair of integers")
    n, nr = pair
    r = nr - n
    roots_b = A.sub_char_poly(idx).roots()
    if roots_b.classification == COMPLEX_CONJUGATE:
        return _inapplicable(name, "subarrangement roots are complex")
    if not (roots_b.cmp_low(n) <= 0 and roots_b.cmp_high(n - 1) >= 0):
        return _inapplicable(
            name,
            "subarrangement roots do not bracket the window",
            alpha=str(roots_b.low),
            beta=str(roots_b.high),
            n=n,
        )
    witness = _member_witness(A, (n, nr))
    evidence = {
        "n": n,
        "r": r,
        "sub": list(idx),
        "alpha": str(roots_b.low),
        "beta": str(roots_b.high),
        "member": witness,
    }
    return CriterionEntry(name, True, FREE if witness is not None else NOT_FREE, evidence)


def intermediate_search(
    A: Arrangement, sub_indices, exhaustive_cap: int = EXHAUSTIVE_GAP_CAP
) -> CriterionEntry:
    """Biconditional freeness test from a free subarrangement B.

    With chi(A) = (t-n)(t-n-r) and B free with exponents (n-s, n-1) for
    s >= 1, A is free exactly when no intermediate C between B and A has
    chi(C) = (t-n-u+1)(t-n+s) with u > r+1. The search runs over the
    greedy insertion chain always, and over all intermediate sets when
    |A minus B| <= exhaustive_cap. For exponents (n-1, n-s) with
    -r <= s <= 0 the equivalent test is a member count in {n, n+r}.
    """
    name = "intermediate_search"
    idx = tuple(sub_indices)
    pair = _integer_roots(A)
    if pair is None:
        return _inapplicable(name, "roots are not a pair of integers")
    n, nr = pair
    r = nr - n
    roots_b = A.sub_char_poly(idx).roots()
    if roots_b.classification != TWO_INTEGER:
        return _inapplicable(name, "subarrangement roots are not integers")
    # a free subarrangement has exponents equal to its roots, so the
    # shape test runs on the cheap polynomial before the exact decision
    y1, y2 = roots_b.low, roots_b.high
    if y2 == n - 1:
        shifted = False
    elif y1 == n - 1 and n <= y2 <= nr:
        shifted = True
    else:
        return _inapplicable(
            name,
            "subarrangement roots do not match (n-s, n-1)",
            sub_roots=[y1, y2],
            n=n,
        )
    cert_b = decide_free(A.subarrangement(idx))
    if not cert_b.is_free:
        return _inapplicable(name, "subarrangement is not free", sub=list(idx))
    e1, e2 = cert_b.exponents
    if (e1, e2) != (y1, y2):
        raise InvariantViolation("free subarrangement exponents must match its roots")

    if not shifted:
        s = n - e1
        return _search_intermediate(A, idx, n, r, s, e1, e2, exhaustive_cap)
    s = n - e2
    witness = _member_witness(A, (n, nr))
    return CriterionEntry(
        name,
        True,
        FREE if witness is not None else NOT_FREE,
        {
            "n": n,
            "r": r,
            "s": s,
            "sub": list(idx),
            "sub_exponents": [e1, e2],
            "member": witness,
            "mode": "count-scan",
        },
    )


def _search_intermediate(A, idx, n, r, s, e1, e2, exhaustive_cap) -> CriterionEntry:
    name = "intermediate_search"
    base = {
        "n": n,
        "r": r,
        "s": s,
        "sub": list(idx),
        "sub_exponents": [e1, e2],
    }

    def violating(subset: tuple) -> bool:
        chi_c = A.sub_char_poly(subset)
        return chi_c.eval(n - s) == 0 and len(subset) - (n - s) > n + r

    outside = [i for i in range(len(A)) if i not in set(idx)]
    if len(outside) <= exhaustive_cap:
        mode = "exhaustive"
        candidates = (
            idx + extra
            for k in range(len(outside) + 1)
            for extra in combinations(outside, k)
        )
    else:
        mode = "chain"
        order, _ = A.order_increasing(idx)
        candidates = (idx + order[: k + 1] for k in range(len(order)))
    for subset in candidates:
        if violating(subset):
            chi_c = A.sub_char_poly(subset)
            return CriterionEntry(
                name,
                True,
                NOT_FREE,
                {
                    **base,
                    "mode": mode,
                    "violating": sorted(subset),
                    "violating_roots": [n - s, len(subset) - (n - s)],
                },
            )
    return CriterionEntry(name, True, FREE, {**base, "mode": mode, "violating": None})


def subfree(A: Arrangement, sub_indices) -> CriterionEntry:
    """Freeness inherited upward from a free subarrangement sharing a root.

    With chi(A) = (t-a)(t-c) and chi(B) = (t-a)(t-b) for integers
    a <= b <= c and B free, A is free as well. One-directional.
    """
    name = "subfree"
    idx = tuple(sub_indices)
    pair_a = _integer_roots(A)
    if pair_a is None:
        return _inapplicable(name, "roots are not a pair of integers")
    roots_b = A.sub_char_poly(idx).roots()
    if roots_b.classification != TWO_INTEGER:
        return _inapplicable(name, "subarrangement roots are not integers")
    x1, x2 = pair_a
    y1, y2 = roots_b.low, roots_b.high
    pattern = None
    for a, b in ((y1, y2), (y2, y1)):
        for a2, c in ((x1, x2), (x2, x1)):
            if a == a2 and a <= b <= c:
                pattern = (a, b, c)
                break
        if pattern:
            break
    if pattern is None:
        return _inapplicable(
            name,
            "no shared root with ordered remainders",
            roots=[x1, x2],
            sub_roots=[y1, y2],
        )
    cert_b = decide_free(A.subarrangement(idx))
    if not cert_b.is_free:
        return _inapplicable(
            name,
            "subarrangement is not free",
            sub=list(idx),
            shared_root=pattern[0],
        )
    a, b, c = pattern
    return CriterionEntry(
        name,
        True,
        FREE,
        {"sub": list(idx), "shared_root": a, "sub_other": b, "other": c},
    )


def root_gap(A: Arrangement) -> CriterionEntry:
    """Freeness from the gap between real roots of chi.

    Over characteristic zero, when the at-infinity restriction is
    balanced with h > 2 centrals, the gap beta - alpha never exceeds
    h - 2, and hitting h - 2 or h - 3 exactly certifies freeness.
    """
    name = "root_gap"
    if A.field.characteristic != 0:
        return _inapplicable(name, "needs characteristic zero")
    roots = A.char_poly().roots()
    if roots.classification == COMPLEX_CONJUGATE:
        return _inapplicable(name, "roots are complex")
    M = ziegler_restriction(A)
    if M.h <= 2:
        return _inapplicable(name, "needs more than two direction classes", h=M.h)
    if not M.is_balanced():
        return _inapplicable(name, "restriction is unbalanced", h=M.h)
    h = M.h
    if roots.gap_cmp(h - 2) > 0:
        raise InvariantViolation(
            f"balanced root gap exceeded h - 2 = {h - 2}; the bound is a theorem"
        )
    matched = None
    if roots.gap_cmp(h - 2) == 0:
        matched = h - 2
    elif roots.gap_cmp(h - 3) == 0:
        matched = h - 3
    evidence = {"h": h, "gap_equals": matched, "balanced": True}
    if matched is not None:
        return CriterionEntry(name, True, FREE, evidence)
    return CriterionEntry(name, True, NO_CONCLUSION, evidence)


def small_exponent_sub(A: Arrangement, sub_indices) -> CriterionEntry:
    """Biconditional freeness test from a free subarrangement with
    exponents just below n.

    With chi(A) = (t-n)(t-n-r), a free B with exponents (n-2, n-2) and
    r >= 1, or (n-3, n-2) and r >= 2, or (n-3, n-3) and r >= 4, makes A
    free exactly when some member count hits {n, n+r}.
    """
    name = "small_exponent_sub"
    idx = tuple(sub_indices)
    pair = _integer_roots(A)
    if pair is None:
        return _inapplicable(name, "roots are not a pair of integers")
    n, nr = pair
    r = nr - n
    roots_b = A.sub_char_poly(idx).roots()
    if roots_b.classification != TWO_INTEGER:
        return _inapplicable(name, "subarrangement roots are not integers")
    shape = (roots_b.low, roots_b.high)
    variants = {
        (n - 2, n - 2): 1,
        (n - 3, n - 2): 2,
        (n - 3, n - 3): 4,
    }
    min_r = variants.get(shape)
    if min_r is None or r < min_r:
        return _inapplicable(
            name,
            "subarrangement exponent shape or root spread does not qualify",
            sub_roots=list(shape),
            n=n,
            r=r,
        )
    cert_b = decide_free(A.subarrangement(idx))
    if not cert_b.is_free:
        return _inapplicable(name, "subarrangement is not free", sub=list(idx))
    if cert_b.exponents != shape:
        raise InvariantViolation("free subarrangement exponents must match its roots")
    witness = _member_witness(A, (n, nr))
    return CriterionEntry(
        name,
        True,
        FREE if witness is not None else NOT_FREE,
        {
            "n": n,
            "r": r,
            "sub": list(idx),
            "sub_exponents": list(shape),
            "member": witness,
        },
    )


# ----------------------------------------------------- external candidates


def _fresh_direction(A: Arrangement):
    """First direction not parallel to any member, scanning (0,1), (1,0),
    (1,1), (1,2), ...; None when the field has no direction left."""
    field = A.field
    used = {line.direction for line in A.lines}
    # a prime field has exactly p+1 directions; elsewhere the stream is
    # injective, so len(used)+2 distinct candidates always suffice
    limit = field.p + 1 if field.kind == "prime" else len(used) + 2
    stream = _direction_stream(field)
    for _ in range(limit):
        d = normalize_direction(field, *next(stream))
        if d not in used:
            return d
    return None


def _direction_stream(field):
    yield field.zero, field.one
    k = 0
    while True:
        yield field.one, field.from_int(k)
        k += 1


def external_candidates(A: Arrangement) -> tuple:
    """Deterministic family of candidate external lines.

    Over a small prime field this is every line of the plane that is
    not a member. Otherwise: (i) every line through two or more
    intersection points, (ii) through each intersection point one line
    per member direction class plus one fresh direction, (iii) per
    member direction class one line avoiding all intersection points.
    These realize every achievable extremum of the incidence count.
    """
    field = A.field
    if field.kind == "prime" and field.p <= PLANE_PRIME_CAP:
        from .fqscan import PlaneEnumeration

        plane = PlaneEnumeration(field.p)
        return tuple(L for L in plane.lines if L not in A)

    found: dict[Line, None] = {}

    def offer(line: Line):
        if line not in A and line not in found:
            found[line] = None

    pts = A.points
    for p, q in combinations(pts, 2):
        offer(line_through(field, (p.x, p.y), (q.x, q.y)))

    directions = [d for d, _ in A.parallel_classes]
    fresh = _fresh_direction(A)
    per_point = directions + ([fresh] if fresh is not None else [])
    for p in pts:
        for a, b in per_point:
            offer(normalize_line(field, a, b, -(a * p.x + b * p.y)))

    # a generic line per direction, plus one in a fresh direction: the
    # latter meets every member in a distinct point, realizing the
    # maximum count |A|
    for a, b in per_point:
        hit = {-(a * p.x + b * p.y) for p in pts}
        k = 0
        limit = field.p if field.kind == "prime" else len(hit) + 1
        while k < limit:
            c = field.from_int(k)
            if c not in hit:
                offer(normalize_line(field, a, b, c))
                break
            k += 1

    return tuple(found)


# ------------------------------------------------------------- root window


def verify_root_window(A: Arrangement, externals=None) -> RootWindowReport:
    """Assert the root-window facts on members and candidate externals.

    chi(A, count) >= 0 always; when A is free with integer roots
    (a, a+b), member counts lie in Z_{<=a} union {a+b} and external
    counts in {a} union Z_{>=a+b}. Violations raise InvariantViolation.
    """
    chi = A.char_poly()
    if externals is None:
        externals = external_candidates(A)
    for i, n_h in enumerate(A.n_counts):
        if chi.eval(n_h) < 0:
            raise InvariantViolation(
                f"chi(A, n_H) = {chi.eval(n_h)} < 0 at member {i}"
            )
    external_values = []
    for L in externals:
        n_l = A.count_on_line(L)
        external_values.append(n_l)
        if chi.eval(n_l) < 0:
            raise InvariantViolation(
                f"chi(A, n_L) = {chi.eval(n_l)} < 0 at external {_line_text(A, L)}"
            )
    cert = decide_free(A)
    if cert.is_free:
        a, ab = cert.exponents
        for i, n_h in enumerate(A.n_counts):
            if not (n_h <= a or n_h == ab):
                raise InvariantViolation(
                    f"free arrangement has member count {n_h} outside "
                    f"Z_<={a} and {{{ab}}}"
                )
        for L, n_l in zip(externals, external_values):
            if not (n_l == a or n_l >= ab):
                raise InvariantViolation(
                    f"free arrangement has external count {n_l} outside "
                    f"{{{a}}} and Z_>={ab}"
                )
    return RootWindowReport(
        member_values=tuple(sorted(set(A.n_counts))),
        external_values=tuple(sorted(set(external_values))),
        externals_checked=len(tuple(externals)),
        free=cert.is_free,
    )


# ------------------------------------------------------------ full report


def candidate_subarrangements(A: Arrangement) -> tuple:
    """Deterministic candidate subarrangements for criteria needing one:
    pencils at each point (largest first), delete-one sets, pairs,
    singles, and the empty set."""
    seen = set()
    out = []

    def offer(idx):
        key = frozenset(idx)
        if key not in seen and len(idx) < len(A):
            seen.add(key)
            out.append(tuple(sorted(idx)))

    pencils = sorted(
        (tuple(sorted(p.incident)) for p in A.points),
        key=lambda t: (-len(t), t),
    )
    for idx in pencils:
        offer(idx)
    for i in range(len(A)):
        offer(tuple(j for j in range(len(A)) if j != i))
    for pair in combinations(range(len(A)), 2):
        offer(pair)
    for i in range(len(A)):
        offer((i,))
    offer(())
    return tuple(out)


def _scan_members(A: Arrangement, criterion, name: str) -> CriterionEntry:
    if not len(A):
        return _inapplicable(name, "empty arrangement")
    fallback = None
    for i in range(len(A)):
        entry = criterion(A, i)
        if entry.conclusion != NO_CONCLUSION:
            return entry
        if fallback is None:
            fallback = entry
    return fallback


def _scan_subarrangements(A: Arrangement, criterion, name: str) -> CriterionEntry:
    first_applicable = None
    for idx in candidate_subarrangements(A):
        entry = criterion(A, idx)
        if entry.applicable and entry.conclusion != NO_CONCLUSION:
            return entry
        if entry.applicable and first_applicable is None:
            first_applicable = entry
    if first_applicable is not None:
        return first_applicable
    return _inapplicable(name, "no qualifying subarrangement among candidates")


def run_criteria(A: Arrangement) -> CriterionReport:
    """Evaluate every criterion with automatically chosen inputs and
    hard-check each conclusion against the exact verdict."""
    cert = decide_free(A)
    externals = external_candidates(A)
    entries = [
        root_incidence(A, externals),
        _scan_members(A, deletion_pair, "deletion_pair"),
        _scan_members(A, addition, "addition"),
        _scan_subarrangements(A, bracketing_sub, "bracketing_sub"),
        _scan_subarrangements(A, intermediate_search, "intermediate_search"),
        _scan_subarrangements(A, subfree, "subfree"),
        root_gap(A),
        _scan_subarrangements(A, small_exponent_sub, "small_exponent_sub"),
    ]
    for entry in entries:
        if entry.applicable and entry.conclusion != NO_CONCLUSION:
            if entry.conclusion != cert.verdict:
                raise InvariantViolation(
                    f"criterion {entry.name} concluded {entry.conclusion} but the "
                    f"exact verdict is {cert.verdict}; evidence: {entry.evidence}"
                )
    return CriterionReport(cert, tuple(entries))
