"""Run every proved implication against concrete rings.

``analyze`` fills an AnalysisReport and then asserts each implication that
applies to the ring at hand.  Since all of those implications are theorems
for finite rings (finite rings are semiperfect, and their radical is
nilpotent, hence they are perfect), any violation is an implementation bug
and raises TheoremViolationError — a different category from a predicate
merely being false on an interesting ring.

``corpus_run`` applies the analysis to a whole corpus, records per-member
budget misses without failing, and aborts loudly on a theorem violation
with the offending ring serialized for reproduction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .core import (DEFAULT_ENUM_CAP, FiniteAlgebra, Ideal, exterior_algebra,
                   field_algebra, group_algebra, matrix_algebra,
                   named_group_table, product_algebra, product_grading,
                   quotient_algebra, random_algebra, triangular_algebra)
from .errors import (CapExceededError, InvalidRingError,
                     TheoremViolationError)
from .essentiality import CEVerdict, ce_decide
from .fplinalg import contains, intersect, subspace_sum, zero_subspace
from .graded import (Grading, check_generalized_anticommutative,
                     check_grading, check_homogeneously_faithful, component,
                     graded_center_predicted)
from .ringfile import dump_ring, load_ring
from .structure import (AnalysisReport, center, idempotents_all_central,
                        is_local, jacobson_radical, local_decomposition,
                        right_socle, socle_over_center)


def analyze(algebra: FiniteAlgebra, grading: Optional[Grading] = None,
            cap: int = DEFAULT_ENUM_CAP) -> AnalysisReport:
    """Compute every structural flag the budget allows, then assert the
    applicable implications.  Budget misses downgrade the affected flags to
    unknown and are recorded in the notes; they never fail the analysis."""
    notes: list[str] = []
    if grading is not None and not check_grading(algebra, grading):
        raise InvalidRingError(
            f"grading supplied for {algebra.name} is not compatible")

    c = center(algebra)
    commutative = algebra.is_commutative()

    verdict: Optional[CEVerdict] = None
    try:
        verdict = ce_decide(algebra, grading, cap)
    except CapExceededError as exc:
        notes.append(f"centrally_essential undecided: {exc}")

    radical = None
    try:
        radical = jacobson_radical(algebra, cap)
    except CapExceededError as exc:
        notes.append(f"radical unavailable: {exc}")

    semiprime = None
    soc = None
    soc_in_center = None
    socles_equal = None
    r_equals_c_plus_j = None
    radical_quotient_commutative = None
    local = None
    if radical is not None:
        semiprime = radical.dim == 0
        soc = socle_over_center(algebra, cap)
        soc_in_center = contains(c, soc)
        socles_equal = soc == right_socle(algebra, cap)
        r_equals_c_plus_j = subspace_sum(c, radical).dim == algebra.dim
        if radical.dim:
            quo = quotient_algebra(algebra, Ideal(algebra, radical,
                                                  _verified=True))
            radical_quotient_commutative = quo.is_commutative()
        else:
            radical_quotient_commutative = commutative
        try:
            local = is_local(algebra, cap)
        except CapExceededError as exc:
            notes.append(f"locality undecided: {exc}")

    idem_central = None
    try:
        idem_central = idempotents_all_central(algebra, cap)
    except CapExceededError as exc:
        notes.append(f"idempotent scan skipped: {exc}")

    factor_count = None
    factors = None
    if idem_central is True:
        try:
            factors = local_decomposition(algebra, cap)
            factor_count = len(factors)
        except CapExceededError as exc:
            notes.append(f"central block decomposition skipped: {exc}")
    elif idem_central is False:
        notes.append("central block decomposition unavailable: "
                     "noncentral idempotents present")

    report = AnalysisReport(
        name=algebra.name,
        p=algebra.p,
        dim=algebra.dim,
        dim_center=c.dim,
        dim_radical=None if radical is None else radical.dim,
        dim_socle_center=None if soc is None else soc.dim,
        commutative=commutative,
        centrally_essential=None if verdict is None else verdict.value,
        ce_method="none" if verdict is None else verdict.method,
        ce_witness=(tuple(int(v) for v in verdict.witness)
                    if verdict is not None and verdict.witness is not None
                    else None),
        local=local,
        semiprime=semiprime,
        idempotents_central=idem_central,
        soc_in_center=soc_in_center,
        radical_quotient_commutative=radical_quotient_commutative,
        r_equals_c_plus_j=r_equals_c_plus_j,
        socles_equal=socles_equal,
        factor_count=factor_count,
        notes=tuple(notes),
    )
    _assert_implications(algebra, grading, report, c, radical, factors, cap)
    return report


def _violated(name: str, what: str) -> TheoremViolationError:
    return TheoremViolationError(f"{name}: {what}")


def _assert_implications(algebra, grading, report, c, radical, factors,
                         cap) -> None:
    name = algebra.name
    ce = report.centrally_essential
    if ce:
        if report.idempotents_central is False:
            raise _violated(name, "centrally essential but has a noncentral "
                                  "idempotent")
        if report.semiprime and not report.commutative:
            raise _violated(name, "centrally essential and semiprime but "
                                  "not commutative")
        if radical is not None:
            if intersect(c, radical).dim == 0 and not report.commutative:
                raise _violated(name, "centrally essential with semiprime "
                                      "center but not commutative")
        if report.radical_quotient_commutative is False:
            raise _violated(name, "centrally essential but the quotient by "
                                  "the radical is not commutative")
        if report.soc_in_center is False:
            raise _violated(name, "centrally essential but the socle over "
                                  "the center leaves the center")
        if factors is not None:
            for f in factors:
                if f.dim == algebra.dim:
                    # single block: the ring itself, already analyzed
                    if report.local is False:
                        raise _violated(name, "centrally essential with only "
                                              "central idempotents but not "
                                              "local despite being its own "
                                              "only block")
                    continue
                try:
                    if not is_local(f, cap):
                        raise _violated(name, f"block {f.name} of a "
                                              "centrally essential ring is "
                                              "not local")
                    if not ce_decide(f, None, cap).value:
                        raise _violated(name, f"block {f.name} of a "
                                              "centrally essential ring is "
                                              "not centrally essential")
                except CapExceededError:
                    pass
    if grading is not None:
        # the center always decomposes along the homogeneous components
        decomposed = zero_subspace(algebra.field, algebra.dim)
        for degree in sorted(set(grading.degrees)):
            decomposed = subspace_sum(
                decomposed, intersect(c, component(algebra, grading, degree)))
        if decomposed != c:
            raise _violated(name, "center does not decompose along the "
                                  "homogeneous components")
        if (algebra.p != 2
                and check_generalized_anticommutative(algebra, grading)
                and check_homogeneously_faithful(algebra, grading)):
            if graded_center_predicted(algebra, grading) != c:
                raise _violated(name, "graded center formula disagrees with "
                                      "the computed center")


def check_ce_equivalence(algebra: FiniteAlgebra,
                         grading: Optional[Grading] = None,
                         cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Centrally essential  <=>  socle-over-center inside the center and all
    idempotents central.  Valid for perfect rings; finite rings qualify.
    Raises TheoremViolationError when the two sides differ."""
    lhs = ce_decide(algebra, grading, cap)
    soc_in = contains(center(algebra), socle_over_center(algebra, cap))
    idem = idempotents_all_central(algebra, cap)
    rhs = soc_in and idem
    if lhs.value != rhs:
        raise TheoremViolationError(
            f"{algebra.name}: essentiality ({lhs.value}, by {lhs.method}) "
            f"does not match the socle/idempotent characterization ({rhs})")
    return True


# ---------------------------------------------------------------------------
# corpus descriptions


@dataclass
class CorpusMember:
    name: str
    algebra: FiniteAlgebra
    grading: Optional[Grading]


def build_constructor(tokens: Sequence[str],
                      base_dir: Optional[Path] = None
                      ) -> tuple[FiniteAlgebra, Optional[Grading]]:
    """Build a ring from a constructor spec, e.g. ['exterior', '3', '3'] or
    ['product', '(', 'field', '3', ')', '(', 'field', '3', ')']."""
    tokens = list(tokens)
    algebra, grading, rest = _parse_spec(tokens, base_dir)
    if rest:
        raise InvalidRingError(f"trailing constructor tokens: {rest}")
    return algebra, grading


def _parse_spec(tokens: list[str], base_dir: Optional[Path]):
    if not tokens:
        raise InvalidRingError("empty constructor spec")
    kind = tokens[0]
    rest = tokens[1:]

    def take_ints(n: int) -> list[int]:
        nonlocal rest
        if len(rest) < n:
            raise InvalidRingError(f"constructor {kind!r} needs {n} arguments")
        vals = []
        for t in rest[:n]:
            try:
                vals.append(int(t))
            except ValueError:
                raise InvalidRingError(
                    f"constructor {kind!r}: integer expected, got {t!r}")
        rest = rest[n:]
        return vals

    if kind == "exterior":
        p, n = take_ints(2)
        algebra, grading = exterior_algebra(p, n)
        return algebra, grading, rest
    if kind == "matrix":
        n, p = take_ints(2)
        return matrix_algebra(n, p), None, rest
    if kind == "triangular":
        n, p = take_ints(2)
        return triangular_algebra(n, p), None, rest
    if kind == "field":
        (p,) = take_ints(1)
        return field_algebra(p), None, rest
    if kind == "group":
        if len(rest) < 2:
            raise InvalidRingError("group constructor needs <p> <group-name>")
        p = int(rest[0])
        gname = rest[1]
        rest = rest[2:]
        algebra = group_algebra(p, named_group_table(gname),
                                name=f"group(F{p},{gname})")
        return algebra, None, rest
    if kind == "random":
        p, dim, seed = take_ints(3)
        return random_algebra(p, dim, seed), None, rest
    if kind == "product":
        a, ga, rest = _parse_operand(rest, base_dir)
        b, gb, rest = _parse_operand(rest, base_dir)
        algebra = product_algebra(a, b)
        return algebra, product_grading(a, ga, b, gb), rest
    raise InvalidRingError(f"unknown constructor kind {kind!r}")


def _parse_operand(tokens: list[str], base_dir: Optional[Path]):
    if not tokens:
        raise InvalidRingError("product constructor is missing an operand")
    if tokens[0] == "(":
        depth = 0
        for i, t in enumerate(tokens):
            if t == "(":
                depth += 1
            elif t == ")":
                depth -= 1
                if depth == 0:
                    inner = tokens[1:i]
                    algebra, grading, leftover = _parse_spec(inner, base_dir)
                    if leftover:
                        raise InvalidRingError(
                            f"trailing tokens inside parentheses: {leftover}")
                    return algebra, grading, tokens[i + 1:]
        raise InvalidRingError("unbalanced parentheses in constructor spec")
    path = Path(tokens[0])
    if base_dir is not None and not path.is_absolute():
        path = base_dir / path
    algebra, grading = load_ring(path)
    return algebra, grading, tokens[1:]


def parse_corpus_text(text: str,
                      base_dir: Optional[Path] = None) -> list[CorpusMember]:
    """Corpus description: one ring per line, either
    ``construct <spec>`` or ``load <path>``; '#' lines are comments."""
    members: list[CorpusMember] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "construct":
            algebra, grading = build_constructor(tokens[1:], base_dir)
        elif tokens[0] == "load":
            if len(tokens) != 2:
                raise InvalidRingError(f"line {lineno}: load takes one path")
            path = Path(tokens[1])
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            algebra, grading = load_ring(path)
        else:
            raise InvalidRingError(
                f"line {lineno}: expected 'construct' or 'load'")
        members.append(CorpusMember(algebra.name, algebra, grading))
    return members


DEFAULT_CORPUS_LINES = [
    "construct field 2",
    "construct field 3",
    "construct field 5",
    "construct field 7",
    "construct exterior 2 3",
    "construct exterior 3 1",
    "construct exterior 3 2",
    "construct exterior 3 3",
    "construct exterior 3 4",
    "construct exterior 5 1",
    "construct exterior 5 2",
    "construct exterior 5 3",
    "construct exterior 7 1",
    "construct exterior 7 2",
    "construct matrix 2 2",
    "construct matrix 2 3",
    "construct matrix 2 5",
    "construct triangular 2 2",
    "construct triangular 2 3",
    "construct triangular 2 5",
    "construct triangular 3 2",
    "construct triangular 3 3",
    "construct group 2 s3",
    "construct group 3 s3",
    "construct group 5 s3",
    "construct group 2 c2",
    "construct group 2 c4",
    "construct group 2 v4",
    "construct group 2 d4",
    "construct group 2 q8",
    "construct group 3 c2",
    "construct group 3 c3",
    "construct group 3 c6",
    "construct group 5 c2",
    "construct group 5 c4",
    "construct group 7 c3",
    "construct product ( field 3 ) ( field 3 )",
    "construct product ( field 2 ) ( matrix 2 2 )",
    "construct product ( exterior 3 3 ) ( field 3 )",
    "construct product ( triangular 2 3 ) ( field 3 )",
    "construct product ( exterior 3 1 ) ( exterior 3 1 )",
    "construct random 2 3 101",
    "construct random 2 4 102",
    "construct random 3 3 103",
    "construct random 3 4 104",
    "construct random 5 2 105",
    "construct random 5 3 106",
]


def default_corpus_text() -> str:
    return "# built-in verification corpus\n" + "\n".join(DEFAULT_CORPUS_LINES) + "\n"


def default_corpus() -> list[CorpusMember]:
    return parse_corpus_text(default_corpus_text())


def _safe_filename(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", name)


def corpus_run(members: Sequence[CorpusMember], cap: int = DEFAULT_ENUM_CAP,
               violation_dir: Optional[Path] = None) -> list[AnalysisReport]:
    """Analyze every member in order.  Budget misses are recorded in the
    member's notes; a theorem violation serializes the offending ring next
    to the corpus for reproduction and aborts the run."""
    reports: list[AnalysisReport] = []
    for m in members:
        try:
            report = analyze(m.algebra, m.grading, cap)
            extra: list[str] = []
            try:
                check_ce_equivalence(m.algebra, m.grading, cap)
                extra.append("ce_equivalence checked")
            except CapExceededError as exc:
                extra.append(f"ce_equivalence skipped: {exc}")
            report.notes = tuple(report.notes) + tuple(extra)
        except TheoremViolationError:
            if violation_dir is not None:
                violation_dir = Path(violation_dir)
                violation_dir.mkdir(parents=True, exist_ok=True)
                out = violation_dir / f"violation_{_safe_filename(m.name)}.ring"
                dump_ring(out, m.algebra, m.grading)
            raise
        reports.append(report)
    return reports


def corpus_summary(reports: Sequence[AnalysisReport]) -> str:
    """Fixed-width table of the headline flags plus the aggregate tallies."""
    head = (f"{'name':40} {'dim':>4} {'dC':>4} {'dJ':>4} {'dSoc':>4} "
            f"{'comm':>5} {'CE':>7} {'local':>7} {'idemC':>7} {'soc<C':>7}")
    lines = [head, "-" * len(head)]

    def cell(v, width):
        if v is None:
            return f"{'?':>{width}}"
        if isinstance(v, bool):
            return f"{str(v).lower():>{width}}"
        return f"{v:>{width}}"

    for r in reports:
        lines.append(
            f"{r.name:40} {r.dim:>4} {r.dim_center:>4} "
            f"{cell(r.dim_radical, 4)} {cell(r.dim_socle_center, 4)} "
            f"{cell(r.commutative, 5)} {cell(r.centrally_essential, 7)} "
            f"{cell(r.local, 7)} {cell(r.idempotents_central, 7)} "
            f"{cell(r.soc_in_center, 7)}")
    ce_true = [r for r in reports if r.centrally_essential is True]
    noncomm_ce = [r for r in ce_true if not r.commutative]
    lines.append("")
    lines.append(f"members {len(reports)}")
    lines.append(f"centrally_essential {len(ce_true)}")
    lines.append(f"noncommutative_centrally_essential {len(noncomm_ce)}")
    oq_sum_false = [r.name for r in ce_true if r.r_equals_c_plus_j is False]
    oq_soc_false = [r.name for r in ce_true if r.socles_equal is False]
    lines.append(f"probe_center_plus_radical_false {len(oq_sum_false)}")
    lines.append(f"probe_socles_unequal {len(oq_soc_false)}")
    for name in oq_sum_false:
        lines.append(f"OBSERVATION {name}: centrally essential but "
                     f"center + radical is a proper subspace")
    for name in oq_soc_false:
        lines.append(f"OBSERVATION {name}: centrally essential but the two "
                     f"socles differ")
    return "\n".join(lines) + "\n"
