"""Command-line driver.

One subcommand per question: characteristic polynomial, roots, member
spectrum, Ziegler restriction, exponents, exact freeness, the criteria
battery, deletion pairs, incidence orderings, finite-plane scans, and a
verify command that runs every invariant the library knows against a
single input file.

Exit codes: 0 on success, 1 for usage or parse problems, 2 when an
internal consistency assertion fails (InvariantViolation).

Every command accepts --format text (default) or --format json-lines;
the JSON field names are stable and documented in the README.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .arrangement import (
    Arrangement,
    CharPoly,
    format_arrangement,
    load_arrangement,
    parse_arrangement,
)
from .derivations import (
    AT_INFINITY,
    exponents,
    format_multiarrangement,
    load_multiarrangement,
    ziegler_restriction,
)
from .errors import InvariantViolation, LinarrError, ParseError, PreconditionError
from .freeness import (
    PLANE_PRIME_CAP,
    decide_free,
    deletion_pair,
    run_criteria,
    verify_root_window,
)


def _parse_target(text: str):
    if text == "infinity":
        return AT_INFINITY
    if text.startswith("member:"):
        try:
            return int(text.split(":", 1)[1])
        except ValueError:
            pass
    raise PreconditionError("target must be 'infinity' or 'member:<index>'")


def _target_label(target):
    return "infinity" if target == AT_INFINITY else int(target)


def _load_arr(path: str) -> Arrangement:
    try:
        return load_arrangement(path)
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_marr(path: str):
    try:
        return load_multiarrangement(path)
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror or exc}") from None


# ------------------------------------------------------------- subcommands


def _cmd_chi(args):
    chi = _load_arr(args.file).char_poly()
    factored = chi.factored_str()
    text = str(chi) if factored in (None, str(chi)) else f"{chi} = {factored}"
    record = {"n": chi.n, "b2": chi.b2, "poly": str(chi), "factored": factored}
    return [record], [text]


def _cmd_roots(args):
    roots = _load_arr(args.file).char_poly().roots()
    record = {
        "classification": roots.classification,
        "low": str(roots.low),
        "high": str(roots.high),
        "discriminant": roots.discriminant,
    }
    return [record], [f"{roots.low}, {roots.high} ({roots.classification})"]


def _cmd_spectrum(args):
    counts = Counter(_load_arr(args.file).n_counts)
    pairs = sorted(counts.items())
    records = [{"value": v, "count": c} for v, c in pairs]
    return records, [f"{v} {c}" for v, c in pairs]


def _cmd_ziegler(args):
    A = _load_arr(args.file)
    M = ziegler_restriction(A, args.target)
    fmt = M.field.format_scalar
    record = {
        "target": _target_label(args.target),
        "centrals": [[fmt(a), fmt(b)] for a, b in M.centrals],
        "multiplicities": list(M.mults),
        "size": M.size,
    }
    return [record], format_multiarrangement(M).splitlines()


def _cmd_exponents(args):
    if args.file.endswith(".marr"):
        M = _load_marr(args.file)
        record = {"d1": None, "d2": None, "size": M.size}
    else:
        M = ziegler_restriction(_load_arr(args.file), args.target)
        record = {"d1": None, "d2": None, "size": M.size, "target": _target_label(args.target)}
    pair = exponents(M).pair
    record["d1"], record["d2"] = pair
    return [record], [f"exp = ({pair[0]},{pair[1]})"]


def _certificate_record(cert, target) -> dict:
    return {
        "verdict": cert.verdict,
        "exponents": list(cert.exponents) if cert.exponents else None,
        "b2": cert.b2,
        "d1": cert.d1,
        "d2": cert.d2,
        "target": _target_label(target),
    }


def _certificate_text(cert) -> str:
    if cert.is_free:
        return f"free, exp = ({cert.d1},{cert.d2})"
    return f"not-free, exp = ({cert.d1},{cert.d2}), b2 = {cert.b2} > {cert.d1 * cert.d2}"


def _cmd_free(args):
    cert = decide_free(_load_arr(args.file), args.target)
    return [_certificate_record(cert, args.target)], [_certificate_text(cert)]


def _entry_text(entry) -> str:
    status = "applicable" if entry.applicable else "inapplicable"
    evidence = json.dumps(entry.evidence, default=str)
    return f"{entry.name}: {status}, {entry.conclusion} {evidence}"


def _cmd_criteria(args):
    report = run_criteria(_load_arr(args.file))
    records = [_certificate_record(report.certificate, AT_INFINITY)]
    lines = [_certificate_text(report.certificate)]
    for entry in report.entries:
        records.append(entry.as_record())
        lines.append(_entry_text(entry))
    return records, lines


def _cmd_pair(args):
    entry = deletion_pair(_load_arr(args.file), args.index)
    return [entry.as_record()], [_entry_text(entry)]


def _cmd_order(args):
    A = _load_arr(args.file)
    sub = tuple(args.sub or ())
    order, counts = A.order_increasing(sub)
    record = {"sub": list(sub), "order": list(order), "counts": list(counts)}
    lines = [
        "order: " + " ".join(map(str, order)),
        "counts: " + " ".join(map(str, counts)),
    ]
    return [record], lines


def _require_prime_input(A: Arrangement, command: str):
    if A.field.kind != "prime":
        raise PreconditionError(f"{command} needs an arrangement over a prime field")


def _cmd_fq_count(args):
    from . import fqscan

    A = _load_arr(args.file)
    _require_prime_input(A, "fq-count")
    count = fqscan.complement_count(A)
    p = A.field.p
    record = {"p": p, "complement": count, "chi_at_p": count, "ok": True}
    return [record], [f"complement = {count}, chi({p}) = {count}, OK"]


def _cmd_fq_spectrum(args):
    from . import fqscan

    A = _load_arr(args.file)
    _require_prime_input(A, "fq-spectrum")
    spectrum = fqscan.line_spectrum(A)
    records, lines = [], []
    for bucket, pairs in (("member", spectrum.members), ("external", spectrum.externals)):
        for value, count in pairs:
            records.append({"bucket": bucket, "value": value, "count": count})
            lines.append(f"{bucket} {value} {count}")
    return records, lines


# ----------------------------------------------------------------- verify


def run_verify(A: Arrangement, corrupt_b2: int = 0, plane_cap: int = PLANE_PRIME_CAP):
    """Every invariant the library can assert against one arrangement.

    Returns the list of check names that passed; raises
    InvariantViolation on the first failure. corrupt_b2 shifts the
    claimed b2 before validation, so any nonzero value must be caught
    (the empty arrangement by the range check, everything else by the
    deletion-restriction identity).
    """
    checks = []
    n = len(A)
    chi = A.char_poly()
    claimed = CharPoly(chi.n, chi.b2 + corrupt_b2)

    if parse_arrangement(format_arrangement(A)) != A:
        raise InvariantViolation("serialization round-trip changed the arrangement")
    checks.append("round-trip")

    cap = n * (n - 1) // 2
    if not 0 <= claimed.b2 <= cap:
        raise InvariantViolation(f"b2 = {claimed.b2} outside [0, {cap}]")
    if n <= 1 and claimed.b2 != 0:
        raise InvariantViolation(f"b2 = {claimed.b2} with {n} lines and no points")
    checks.append("b2-range")

    for i in range(n):
        sub = A.delete(i).char_poly()
        n_h = A.n_counts[i]
        if claimed.n != sub.n + 1 or claimed.b2 != sub.b2 + n_h:
            raise InvariantViolation(
                f"deletion-restriction fails at member {i}: "
                f"b2 = {claimed.b2}, deleted b2 = {sub.b2}, n_H = {n_h}"
            )
    checks.append("deletion-restriction")

    for i, n_h in enumerate(A.n_counts):
        if claimed.eval(n_h) < 0:
            raise InvariantViolation(f"chi({n_h}) < 0 at member {i}")
    checks.append("member-window")

    cert = decide_free(A)
    for i in range(n):
        if decide_free(A, i).verdict != cert.verdict:
            raise InvariantViolation(f"freeness verdict flips at member target {i}")
    checks.append("target-independence")

    run_criteria(A)
    checks.append("criteria-consistency")

    verify_root_window(A)
    checks.append("root-window")

    if A.field.kind == "prime" and A.field.p <= plane_cap:
        from . import fqscan

        p = A.field.p
        count = fqscan.complement_count(A)
        if claimed.eval(p) != count:
            raise InvariantViolation(
                f"chi({p}) = {claimed.eval(p)} but the complement has {count} points"
            )
        checks.append("complement-count")

        spectrum = fqscan.line_spectrum(A)
        for value, _ in spectrum.combined:
            if claimed.eval(value) < 0:
                raise InvariantViolation(f"chi({value}) < 0 on a plane line")
        roots = chi.roots()
        if cert.is_free and roots.classification == "two-integer":
            low, high = roots.low, roots.high
            for value, _ in spectrum.members:
                if not (value <= low or value == high):
                    raise InvariantViolation(f"member count {value} escapes the window")
            for value, _ in spectrum.externals:
                if not (value == low or value >= high):
                    raise InvariantViolation(f"external count {value} inside the window")
        checks.append("plane-spectrum")

        fqscan.order_root(A)
        fqscan.order_minus_one_root(A)
        checks.append("order-criteria")

        M = ziegler_restriction(A)
        if all(m <= p for m in M.mults):
            report = fqscan.finite_exponent_bounds(M)
            if not report.applicable:
                raise InvariantViolation("bounds report inapplicable despite m <= p")
            checks.append("finite-bounds")

    return checks


def _cmd_verify(args):
    A = _load_arr(args.file)
    checks = run_verify(A, corrupt_b2=args.corrupt_b2, plane_cap=args.plane_cap)
    records = [{"check": name, "status": "ok"} for name in checks]
    records.append({"verify": "ok", "checks": len(checks)})
    lines = [f"ok {name}" for name in checks]
    lines.append(f"verify: OK ({len(checks)} checks)")
    return records, lines


# ------------------------------------------------------------------ driver


class _Parser(argparse.ArgumentParser):
    """argparse quits with status 2 on bad usage; remap that to 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


_HANDLERS = {
    "chi": _cmd_chi,
    "roots": _cmd_roots,
    "spectrum": _cmd_spectrum,
    "ziegler": _cmd_ziegler,
    "exponents": _cmd_exponents,
    "free": _cmd_free,
    "criteria": _cmd_criteria,
    "pair": _cmd_pair,
    "order": _cmd_order,
    "fq-count": _cmd_fq_count,
    "fq-spectrum": _cmd_fq_spectrum,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linarr", description="Exact freeness tests for affine line arrangements.")
    fmt = _Parser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("text", "json-lines"),
        default="text",
        help="output as plain text (default) or one JSON object per line",
    )
    target = _Parser(add_help=False)
    target.add_argument(
        "--target",
        type=_parse_target,
        default=AT_INFINITY,
        help="restriction target: 'infinity' (default) or 'member:<index>'",
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text, *, parents=(fmt,), file_help="input .arr file"):
        p = sub.add_parser(name, parents=list(parents), help=help_text)
        p.add_argument("file", help=file_help)
        return p

    add("chi", "characteristic polynomial, factored when the roots are integers")
    add("roots", "exact roots and their classification")
    add("spectrum", "member incidence counts as sorted 'value count' pairs")
    add("ziegler", "Ziegler restriction multiarrangement", parents=(fmt, target))
    add(
        "exponents",
        "exponents of a multiarrangement (.marr) or of a restriction (.arr)",
        parents=(fmt, target),
        file_help="input .arr or .marr file",
    )
    add("free", "exact freeness decision with exponents", parents=(fmt, target))
    add("criteria", "exact certificate plus every combinatorial criterion")
    pair = add("pair", "deletion-pair criterion for (A, A minus one member)")
    pair.add_argument("index", type=int, help="member index to delete")
    order = add("order", "greedy incidence-nondecreasing ordering of the members")
    order.add_argument(
        "--sub",
        type=int,
        nargs="*",
        default=(),
        metavar="I",
        help="member indices of the starting subarrangement",
    )
    add("fq-count", "complement point count over a prime field")
    add("fq-spectrum", "incidence histogram over every line of the prime plane")
    verify = add("verify", "run the full invariant battery on one input")
    verify.add_argument(
        "--corrupt-b2",
        type=int,
        default=0,
        metavar="DELTA",
        help="shift the claimed b2 before checking (mutation testing)",
    )
    verify.add_argument(
        "--plane-cap",
        type=int,
        default=PLANE_PRIME_CAP,
        metavar="P",
        help="largest prime for which the finite-plane checks run",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records, lines = _HANDLERS[args.command](args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except LinarrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json-lines":
        for record in records:
            print(json.dumps(record, default=str))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
