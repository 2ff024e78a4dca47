import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import Q, random_arrangement, random_subset
from linarr.arrangement import (
    COMPLEX_CONJUGATE,
    REAL_IRRATIONAL,
    TWO_INTEGER,
    Arrangement,
    CharPoly,
    Line,
    RootPair,
    Surd,
    format_arrangement,
    line_through,
    normalize_direction,
    normalize_line,
    parse_arrangement,
)
from linarr.errors import MembershipError, ParseError, PreconditionError
from linarr.exactalg import Field, Quad
from linarr.fixtures import (
    f3_all,
    pencil,
    squares_diagonals,
    star7_transversal_q,
    star7_transversal_sqrt2,
)

F3 = Field.prime(3)
F5 = Field.prime(5)


def triangle():
    # x = 0, y = 0, x + y = 1: three double points, complex roots
    return Arrangement.from_triples(Q, [(1, 0, 0), (0, 1, 0), (1, 1, -1)])


def three_parallels():
    return Arrangement.from_triples(Q, [(0, 1, 0), (0, 1, -1), (0, 1, -2)])


# ----------------------------------------------------------- normalization


def test_normalize_line_examples():
    assert normalize_line(Q, 2, 4, 6) == Line(Fraction(1), Fraction(2), Fraction(3))
    assert normalize_line(Q, 0, -3, 6) == Line(Fraction(0), Fraction(1), Fraction(-2))
    assert normalize_line(F3, 2, 1, 1).a == F3.one


def test_normalize_line_rejects_degenerate():
    with pytest.raises(PreconditionError):
        normalize_line(Q, 0, 0, 5)
    with pytest.raises(PreconditionError):
        normalize_direction(Q, 0, 0)


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_normalize_line_idempotent(a, b, c):
    if a == 0 and b == 0:
        return
    line = normalize_line(Q, a, b, c)
    again = normalize_line(Q, line.a, line.b, line.c)
    assert again == line
    head = line.a if line.a else line.b
    assert head == Q.one


def test_constructor_rejects_duplicates_and_raw_triples():
    with pytest.raises(PreconditionError):
        Arrangement.from_triples(Q, [(1, 2, 3), (2, 4, 6)])
    with pytest.raises(PreconditionError):
        Arrangement(Q, [Line(Fraction(2), Fraction(4), Fraction(6))])


def test_line_through():
    assert line_through(Q, (0, 0), (1, 1)) == normalize_line(Q, 1, -1, 0)
    assert line_through(Q, (0, 1), (2, 1)) == normalize_line(Q, 0, 1, -1)
    with pytest.raises(PreconditionError):
        line_through(Q, (1, 1), (1, 1))
    p = (Fraction(1, 2), Fraction(3))
    q = (Fraction(-2), Fraction(1, 5))
    ln = line_through(Q, p, q)
    assert ln.a * p[0] + ln.b * p[1] + ln.c == 0
    assert ln.a * q[0] + ln.b * q[1] + ln.c == 0


# ----------------------------------------------------- char poly on fixtures


def test_pencil_char_poly():
    for n in range(2, 9):
        arr = pencil(n)
        cp = arr.char_poly()
        assert (cp.n, cp.b2) == (n, n - 1)
        assert cp.factored_str() == (
            "(t-1)^2" if n == 2 else f"(t-1)(t-{n - 1})"
        )
        assert arr.n_counts == (1,) * n


def test_star7_twins_char_poly():
    for arr in (star7_transversal_sqrt2(), star7_transversal_q()):
        cp = arr.char_poly()
        assert (cp.n, cp.b2) == (8, 13)
        assert str(cp) == "t^2 - 8 t + 13"
        assert cp.factored_str() is None


def test_squares_diagonals_char_poly():
    cp = squares_diagonals().char_poly()
    assert (cp.n, cp.b2) == (12, 35)
    assert str(cp) == "t^2 - 12 t + 35"
    assert cp.factored_str() == "(t-5)(t-7)"


def test_three_parallels_char_poly():
    arr = three_parallels()
    cp = arr.char_poly()
    assert (cp.n, cp.b2) == (3, 0)
    assert str(cp) == "t^2 - 3 t"
    assert cp.factored_str() == "t(t-3)"
    assert arr.points == ()
    assert len(arr.parallel_classes) == 1
    assert arr.parallel_classes[0][1] == (0, 1, 2)


def test_f3_all_lines_char_poly():
    arr = f3_all()
    cp = arr.char_poly()
    # 9 points, each on all 4 directions through it
    assert (cp.n, cp.b2) == (12, 27)
    assert cp.factored_str() == "(t-3)(t-9)"
    assert all(pt.multiplicity == 4 for pt in arr.points)


def test_empty_and_single():
    empty = Arrangement(Q, [])
    assert str(empty.char_poly()) == "t^2"
    assert empty.char_poly().factored_str() == "t^2"
    single = Arrangement.from_triples(Q, [(1, 0, 0)])
    assert single.char_poly().factored_str() == "t(t-1)"


# ------------------------------------------------------------ root pairs


def test_root_pair_two_integer():
    rp = CharPoly(12, 35).roots()
    assert rp.classification == TWO_INTEGER
    assert (rp.low, rp.high) == (5, 7)
    assert rp.discriminant == 4
    assert rp.gap_cmp(2) == 0 and rp.gap_cmp(1) == 1 and rp.gap_cmp(3) == -1
    assert rp.cmp_low(5) == 0 and rp.cmp_high(Fraction(13, 2)) == 1


def test_root_pair_real_irrational():
    rp = CharPoly(8, 13).roots()
    assert rp.classification == REAL_IRRATIONAL
    assert rp.discriminant == 12
    assert rp.low == Surd(Fraction(4), Fraction(-1), 3)
    assert rp.high == Surd(Fraction(4), Fraction(1), 3)
    assert str(rp.low) == "4 - sqrt(3)"
    # 4 - sqrt(3) ~ 2.268, 4 + sqrt(3) ~ 5.732
    assert rp.cmp_low(2) == 1 and rp.cmp_low(3) == -1
    assert rp.cmp_high(5) == 1 and rp.cmp_high(6) == -1
    assert rp.cmp_low(Fraction(9, 4)) == 1
    # gap = 2*sqrt(3) ~ 3.46
    assert rp.gap_cmp(3) == 1 and rp.gap_cmp(4) == -1


def test_root_pair_complex():
    rp = triangle().char_poly().roots()
    assert rp.classification == COMPLEX_CONJUGATE
    assert rp.discriminant == -3
    assert rp.high == Surd(Fraction(3, 2), Fraction(1, 2), -3)
    with pytest.raises(PreconditionError):
        rp.cmp_low(0)
    with pytest.raises(PreconditionError):
        rp.gap_cmp(1)


def test_root_pair_gap_negative_k():
    with pytest.raises(PreconditionError):
        CharPoly(12, 35).roots().gap_cmp(-1)


@given(st.integers(0, 40), st.integers(0, 400))
def test_root_pair_invariants(n, b2):
    rp = RootPair.from_char_poly(CharPoly(n, b2))
    if rp.classification == TWO_INTEGER:
        assert rp.low + rp.high == n and rp.low * rp.high == b2
        assert rp.low <= rp.high
    else:
        assert rp.low.u == rp.high.u == Fraction(n, 2)
        assert rp.low.v == -rp.high.v
        s = rp.high
        # u^2 - v^2*rad... sign flips with rad: value is u^2 + |v^2 rad| for complex
        assert s.u * s.u - s.v * s.v * s.rad == b2
    if rp.classification == REAL_IRRATIONAL:
        assert rp.cmp_low(0) in (-1, 1)
        assert rp.cmp_high(n) == -1  # high root < n once b2 > 0; b2 = 0 is integer


def test_surd_cmp_rational_mixed_signs():
    # 1 - sqrt(5) ~ -1.236
    s = Surd(Fraction(1), Fraction(-1), 5)
    assert s.cmp_rational(-2) == 1
    assert s.cmp_rational(-1) == -1
    assert s.cmp_rational(0) == -1
    # -1 + sqrt(5) ~ 1.236
    t = Surd(Fraction(-1), Fraction(1), 5)
    assert t.cmp_rational(1) == 1
    assert t.cmp_rational(2) == -1
    assert t.cmp_rational(Fraction(-3, 2)) == 1


# --------------------------------------------------------- incidence counts


def test_count_on_line_member_matches_n_counts():
    arr = squares_diagonals()
    for i, line in enumerate(arr.lines):
        assert arr.count_on_line(line) == arr.n_counts[i]


def test_count_on_line_non_member():
    arr = pencil(4)
    # a generic external line meets all 4 members in 4 distinct points
    assert arr.count_on_line(normalize_line(Q, 1, 7, -1)) == 4
    # through the center: one point only
    assert arr.count_on_line(normalize_line(Q, 1, 9, 0)) == 1


def test_sum_of_counts_identity():
    for arr in (pencil(5), squares_diagonals(), star7_transversal_q(), triangle()):
        assert sum(arr.n_counts) == arr.char_poly().b2 + len(arr.points)


# ----------------------------------------------------------------- editing


def test_delete_add_round_trip():
    arr = squares_diagonals()
    line = arr.lines[3]
    smaller = arr.delete(3)
    assert len(smaller) == 11 and line not in smaller
    assert smaller.add(line) == arr
    assert arr.delete(line) == smaller


def test_edit_errors():
    arr = pencil(3)
    with pytest.raises(MembershipError):
        arr.delete(normalize_line(Q, 1, 5, 5))
    with pytest.raises(MembershipError):
        arr.delete(3)
    with pytest.raises(MembershipError):
        arr.add(arr.lines[0])
    with pytest.raises(MembershipError):
        arr.subarrangement([0, 0])
    with pytest.raises(MembershipError):
        arr.subarrangement([5])


def test_set_equality_ignores_order():
    a = Arrangement.from_triples(Q, [(1, 0, 0), (0, 1, 0)])
    b = Arrangement.from_triples(Q, [(0, 1, 0), (1, 0, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Arrangement.from_triples(F3, [(1, 0, 0), (0, 1, 0)])


# ---------------------------------------------- deletion-restriction identity


def check_deletion_restriction(arr):
    cp = arr.char_poly()
    n = len(arr)
    for i in range(n):
        smaller_cp = arr.delete(i).char_poly()
        n_h = arr.n_counts[i]
        for t in (0, 1, n):
            assert cp.eval(t) == smaller_cp.eval(t) - (t - n_h)


def test_deletion_restriction_fixtures():
    for arr in (pencil(6), squares_diagonals(), star7_transversal_sqrt2(), f3_all()):
        check_deletion_restriction(arr)


def test_deletion_restriction_random():
    rng = random.Random(20260817)
    for field in (Q, F5):
        for _ in range(60):
            arr = random_arrangement(rng, field, 7, min_lines=1)
            check_deletion_restriction(arr)


# ------------------------------------------------------------- subsets


def test_sub_char_poly_matches_subarrangement():
    rng = random.Random(424242)
    for field in (Q, F5):
        for _ in range(60):
            arr = random_arrangement(rng, field, 8)
            idx = random_subset(rng, len(arr))
            direct = arr.subarrangement(idx).char_poly()
            fast = arr.sub_char_poly(idx)
            assert (fast.n, fast.b2) == (direct.n, direct.b2)


# ------------------------------------------------------- increasing orders


def test_order_increasing_full_base():
    arr = pencil(4)
    assert arr.order_increasing(range(4)) == ((), ())


def test_order_increasing_pencil_from_empty():
    order, counts = pencil(3).order_increasing([])
    assert counts == (0, 1, 1)
    assert order[0] == 0


def test_order_increasing_star7_from_pencil():
    arr = star7_transversal_q()
    order, counts = arr.order_increasing(range(7))
    assert order == (7,) and counts == (7,)


def test_order_increasing_ties_break_by_index():
    arr = three_parallels()
    order, counts = arr.order_increasing([])
    assert order == (0, 1, 2) and counts == (0, 0, 0)


def test_order_increasing_counts_nondecreasing():
    rng = random.Random(97531)
    for field in (Q, F5):
        for _ in range(150):
            arr = random_arrangement(rng, field, 9)
            base = random_subset(rng, len(arr))
            order, counts = arr.order_increasing(base)
            assert sorted(order) == [i for i in range(len(arr)) if i not in set(base)]
            assert all(a <= b for a, b in zip(counts, counts[1:]))
            # final-step count equals n_H of that line in the full arrangement
            if order:
                assert counts[-1] <= arr.n_counts[order[-1]]


# ----------------------------------------------------------------- file IO


ARR_TEXT = """\
# squares minus diagonals
field Q
line 1 0 0
line 0 1 0
line 1 0 -1   # x = 1
line 0 1 -1
"""


def test_parse_arrangement_basic():
    arr = parse_arrangement(ARR_TEXT)
    assert len(arr) == 4
    assert arr.char_poly().factored_str() == "(t-2)^2"


def test_parse_arrangement_quadratic_and_prime():
    arr = parse_arrangement("field Q sqrt 2\nline 1 r 0\nline 1 -r 1/2\n")
    assert arr.field == Field.quadratic(2)
    assert arr.lines[0].b == Quad(0, 1, 2)
    arr = parse_arrangement("field F 5\nline 1 4 2\nline 0 1 0\n")
    assert arr.field == Field.prime(5)


def parse_error(text):
    with pytest.raises(ParseError) as info:
        parse_arrangement(text, path="input.arr")
    return info.value


def test_parse_errors_report_position():
    err = parse_error("line 1 0 0\n")
    assert (err.line, err.column) == (1, 1)
    assert "field header" in err.message

    err = parse_error("field Q\npoint 1 0 0\n")
    assert (err.line, err.column) == (2, 1)
    assert "point" in err.message

    err = parse_error("field Q\nline 1 0\n")
    assert (err.line, err.column) == (2, 1)
    assert "3 arguments" in err.message

    err = parse_error("field Q\nline 1 0/0 3\n")
    assert err.line == 2 and err.column == 8
    assert str(err).startswith("input.arr:2:8:")

    err = parse_error("field Q\nline 0 0 5\n")
    assert err.line == 2 and "not a line" in err.message

    err = parse_error("field Q\nline 1 2 3\nline 2 4 6\n")
    assert err.line == 3 and "input line 2" in err.message

    err = parse_error("field Q sqrt 12\nline 1 0 0\n")
    assert err.line == 1 and "squarefree" in err.message

    err = parse_error("field F 4\nline 1 0 0\n")
    assert err.line == 1

    err = parse_error("")
    assert err.line == 1 and "missing field header" in err.message

    err = parse_error("field Q\nline 1 r 0\n")
    assert err.line == 2 and err.column == 8


def test_format_round_trip_fixtures():
    for arr in (
        pencil(5),
        squares_diagonals(),
        star7_transversal_sqrt2(),
        f3_all(),
        Arrangement(Q, []),
    ):
        text = format_arrangement(arr)
        again = parse_arrangement(text)
        assert again == arr and again.lines == arr.lines


def test_format_round_trip_random():
    rng = random.Random(8675309)
    for field in (Q, F5, Field.quadratic(2)):
        for _ in range(40):
            if field.kind == "quadratic":
                # salt with irrational coefficients now and then
                arr = Arrangement.from_triples(
                    field,
                    {
                        (
                            1,
                            Quad(rng.randint(-2, 2), rng.randint(-2, 2), 2),
                            Quad(rng.randint(-2, 2), Fraction(rng.randint(-2, 2), 3), 2),
                        )
                        for _ in range(rng.randint(1, 5))
                    },
                )
            else:
                arr = random_arrangement(rng, field, 8)
            assert parse_arrangement(format_arrangement(arr)) == arr


@settings(max_examples=60)
@given(st.integers(2, 7), st.integers(0, 6))
def test_pencil_plus_parallels_b2(n, k):
    # pencil of n lines through the origin plus k horizontals y = 1..k:
    # the k lines meet each pencil line once (y = 0 is parallel to them)
    arr = pencil(n)
    horizontal_members = sum(1 for ln in arr.lines if ln.direction == (Q.zero, Q.one))
    for j in range(1, k + 1):
        arr = arr.add((0, 1, -j))
    expect = (n - 1) + k * (n - horizontal_members)
    assert arr.char_poly().b2 == expect
