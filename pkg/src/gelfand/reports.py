"""Pair verification: run both Gelfand criteria and cross-check everything.

A PairReport records the double-coset (Hecke) verdict, the character-theoretic
verdict, the branching prediction from the base group's irreducible
dimensions, and every consistency check between them.  The two verdicts are
computed along fully independent routes, so agreement is evidence, not
tautology; any disagreement is an internal failure and must never happen.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import __version__
from .chartab import (
    DEFAULT_CLASS_LIMIT,
    DEFAULT_ORDER_LIMIT,
    cached_character_table,
    decompose_induced_trivial,
)
from .errors import InvalidParameterError, ResourceLimitError
from .groups import conjugacy_classes, is_abelian
from .hecke import double_cosets, is_commutative, structure_constants
from .partitions import (
    format_multipartition,
    format_partition,
    induced_trivial_prediction,
)
from .specs import build_group, parse_pair_spec, render_group_spec, render_pair_spec
from .wreath import DEFAULT_SIZE_BUDGET, embed_wreath_subgroup

SCHEMA_VERSION = 1

SKIPPED = "skipped"


@dataclass
class PairReport:
    """Everything the toolkit can say about one pair (G wr S_n, G wr S_(n-1))."""

    pair_spec: str
    base_spec: str = ""
    n: int = 0
    group_order: int | None = None
    subgroup_order: int | None = None
    base_abelian: bool | None = None
    rank: int | None = None
    gelfand_hecke: bool | None = None
    gelfand_character: bool | str | None = None
    multiplicities: tuple[int, ...] | None = None  # nonzero, sorted
    predicted_term_count: int | None = None
    predicted_rank: int | None = None
    predicted_multiplicities: tuple[int, ...] | None = None
    failures: tuple[str, ...] = ()
    error: str | None = None
    timings: dict = field(default_factory=dict)
    toolkit_version: str = __version__

    @property
    def consistent(self) -> bool:
        return self.error is None and not self.failures

    @property
    def gelfand(self) -> bool | None:
        if isinstance(self.gelfand_hecke, bool):
            return self.gelfand_hecke
        if isinstance(self.gelfand_character, bool):
            return self.gelfand_character
        return None


def _consistency_failures(report: PairReport) -> list[str]:
    out = []
    hecke_ran = isinstance(report.gelfand_hecke, bool)
    char_ran = isinstance(report.gelfand_character, bool)
    if hecke_ran and char_ran and report.gelfand_hecke != report.gelfand_character:
        out.append(
            "THE TWO CRITERIA DISAGREE: "
            f"hecke={report.gelfand_hecke} character={report.gelfand_character}"
        )
    if char_ran and report.multiplicities is not None and report.rank is not None:
        ssq = sum(m * m for m in report.multiplicities)
        if ssq != report.rank:
            out.append(
                f"sum of squared multiplicities {ssq} != double-coset rank {report.rank}"
            )
    if report.rank is not None and report.predicted_rank is not None:
        if report.rank != report.predicted_rank:
            out.append(
                f"double-coset rank {report.rank} != predicted rank {report.predicted_rank}"
            )
    if char_ran and report.predicted_multiplicities is not None:
        if report.multiplicities != report.predicted_multiplicities:
            out.append(
                f"multiplicity multiset {report.multiplicities} != predicted "
                f"{report.predicted_multiplicities}"
            )
    if report.base_abelian is not None:
        for label, verdict in (
            ("hecke", report.gelfand_hecke),
            ("character", report.gelfand_character),
        ):
            if isinstance(verdict, bool) and verdict != report.base_abelian:
                out.append(
                    f"{label} verdict {verdict} contradicts base abelian = "
                    f"{report.base_abelian}"
                )
    return out


def check_pair(
    pairspec: str,
    *,
    method: str = "both",
    seed: int = 0,
    size_budget: int = DEFAULT_SIZE_BUDGET,
    cache_dir=None,
    class_limit: int = DEFAULT_CLASS_LIMIT,
    order_limit: int = DEFAULT_ORDER_LIMIT,
) -> PairReport:
    """Verify one pair with the selected method(s) and cross-check the results.

    With method="both", a wreath group too large for the character-table
    limits degrades to the Hecke criterion alone (itself a complete exact
    verdict) and marks the character verdict "skipped".
    """
    if method not in ("hecke", "character", "both"):
        raise InvalidParameterError(
            f"method must be 'hecke', 'character' or 'both', got {method!r}"
        )
    base_ast, n = parse_pair_spec(pairspec)
    if n < 2:
        raise InvalidParameterError(f"pair spec needs n >= 2, got n={n}")
    report = PairReport(
        pair_spec=render_pair_spec(base_ast, n),
        base_spec=render_group_spec(base_ast),
        n=n,
    )
    timings = report.timings

    t0 = time.perf_counter()
    base = build_group(base_ast)
    report.base_abelian = is_abelian(base)
    embedding = embed_wreath_subgroup(base, n, size_budget)
    wreath = embedding.parent
    report.group_order = wreath.order
    report.subgroup_order = embedding.subgroup.order
    timings["build"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    base_table = cached_character_table(
        base, cache_dir, seed=seed, class_limit=class_limit, order_limit=order_limit
    )
    prediction = induced_trivial_prediction(base_table.degrees, n)
    report.predicted_term_count = prediction.term_count
    report.predicted_rank = prediction.predicted_rank
    report.predicted_multiplicities = prediction.multiplicities
    timings["prediction"] = time.perf_counter() - t0

    if method in ("hecke", "both"):
        t0 = time.perf_counter()
        cosets = double_cosets(wreath, embedding)
        constants = structure_constants(wreath, embedding, cosets)
        report.rank = cosets.rank
        report.gelfand_hecke = is_commutative(constants)
        timings["hecke"] = time.perf_counter() - t0

    if method in ("character", "both"):
        t0 = time.perf_counter()
        if wreath.order > order_limit:
            if method == "character":
                raise ResourceLimitError(
                    f"|{wreath.name}| = {wreath.order} exceeds the character-table "
                    f"order limit {order_limit}"
                )
            report.gelfand_character = SKIPPED
        else:
            classes = conjugacy_classes(wreath)
            if classes.count > class_limit:
                if method == "character":
                    raise ResourceLimitError(
                        f"{wreath.name} has {classes.count} conjugacy classes, "
                        f"over the limit {class_limit}"
                    )
                report.gelfand_character = SKIPPED
            else:
                table = cached_character_table(
                    wreath,
                    cache_dir,
                    seed=seed,
                    class_limit=class_limit,
                    order_limit=order_limit,
                )
                decomp = decompose_induced_trivial(wreath, embedding, table)
                report.multiplicities = decomp.nonzero
                report.gelfand_character = all(
                    m <= 1 for m in decomp.multiplicities
                )
        timings["character"] = time.perf_counter() - t0

    report.failures = tuple(_consistency_failures(report))
    return report


def scan_pairs(base_specs: list[str], n: int, **kwargs) -> list[PairReport]:
    """One report per base; per-row errors are recorded, never abort the scan."""
    reports = []
    for base in base_specs:
        spec = f"wr({base},{n})"
        try:
            reports.append(check_pair(spec, **kwargs))
        except Exception as exc:  # recorded in the row
            reports.append(PairReport(pair_spec=spec, base_spec=base, n=n, error=str(exc)))
    return reports


def report_record(report: PairReport, kind: str = "pair_report") -> dict:
    """Machine form of a report.

    Timings are deliberately absent: identical inputs must produce
    byte-identical machine output.
    """
    return {
        "kind": kind,
        "schema_version": SCHEMA_VERSION,
        "toolkit_version": report.toolkit_version,
        "pair": report.pair_spec,
        "base": report.base_spec,
        "n": report.n,
        "group_order": report.group_order,
        "subgroup_order": report.subgroup_order,
        "base_abelian": report.base_abelian,
        "rank": report.rank,
        "gelfand_hecke": report.gelfand_hecke,
        "gelfand_character": report.gelfand_character,
        "multiplicities": list(report.multiplicities)
        if report.multiplicities is not None
        else None,
        "predicted_term_count": report.predicted_term_count,
        "predicted_rank": report.predicted_rank,
        "predicted_multiplicities": list(report.predicted_multiplicities)
        if report.predicted_multiplicities is not None
        else None,
        "failures": list(report.failures),
        "consistent": report.consistent,
        "error": report.error,
    }


def _multiset(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def format_report(report: PairReport) -> str:
    """Human-readable multi-line rendering of one pair report."""
    lines = [f"pair {report.pair_spec}"]
    if report.error is not None:
        lines.append(f"  error: {report.error}")
        return "\n".join(lines)
    lines.append(
        f"  G = wr({report.base_spec},{report.n}), |G| = {report.group_order}; "
        f"K = wr({report.base_spec},{report.n - 1}), |K| = {report.subgroup_order}"
    )
    lines.append(
        f"  base {report.base_spec}: {'abelian' if report.base_abelian else 'non-abelian'}"
    )
    if isinstance(report.gelfand_hecke, bool):
        verdict = "commutative" if report.gelfand_hecke else "NOT commutative"
        lines.append(f"  hecke:      rank {report.rank}, double-coset algebra {verdict}")
    if report.gelfand_character == SKIPPED:
        lines.append("  character:  skipped (over character-table limits)")
    elif isinstance(report.gelfand_character, bool):
        verdict = (
            "multiplicity free" if report.gelfand_character else "NOT multiplicity free"
        )
        lines.append(
            f"  character:  nonzero multiplicities {_multiset(report.multiplicities)}, "
            f"{verdict}"
        )
    if report.predicted_term_count is not None:
        lines.append(
            f"  predicted:  {report.predicted_term_count} terms, multiplicities "
            f"{_multiset(report.predicted_multiplicities)}, rank {report.predicted_rank}"
        )
    if report.failures:
        for failure in report.failures:
            lines.append(f"  CONSISTENCY FAILURE: {failure}")
    else:
        lines.append("  consistency: all checks passed")
    gelfand = report.gelfand
    if gelfand is not None:
        lines.append(
            f"  verdict: (wr({report.base_spec},{report.n}), "
            f"wr({report.base_spec},{report.n - 1})) "
            f"{'IS' if gelfand else 'is NOT'} a Gelfand pair"
        )
    timing = " ".join(f"{k} {v:.3f}s" for k, v in report.timings.items())
    if timing:
        lines.append(f"  time: {timing}")
    return "\n".join(lines)


def format_branch_terms(prediction) -> str:
    """Render prediction terms like "S^(5) ⊕ S^(4,1)" (l = 1 drops the tuple)."""
    parts = []
    for mp, mult in prediction.terms:
        label = format_multipartition(mp) if len(mp) > 1 else format_partition(mp[0])
        term = f"S^{label}"
        if mult != 1:
            term = f"{mult}·{term}"
        parts.append(term)
    return " ⊕ ".join(parts)
