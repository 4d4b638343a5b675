"""Randomized verification suites for the embedding conjugacy property.

The headline suite, verify_nonmerging, draws pairs (a, b) in B_m and
decides conjugacy twice: once in B_m and once for the standard images in
B_n. The two verdicts must always agree: embedded conjugacy implies
conjugacy downstairs (geometric embeddings do not merge conjugacy
classes) and the converse direction is trivial. Any disagreement is a
fatal finding, reported with a nonzero exit status, since it can only
come from an engine bug.

Both decisions are computed independently; the B_m verdict is never used
to shortcut the B_n one, otherwise the suite would be vacuous.

All randomness flows through the documented SplitMix64 streams: trial t
of a suite with seed s draws from derive_seed(s, t), and the optional
general-embedding conjugator from derive_seed(s ^ GENERAL_SALT, t), so
reports are bitwise reproducible.
"""

from __future__ import annotations

import dataclasses
import json
import time

from .curves import curve_class_round, is_periodic, preserves_curve_class
from .embedding import embed_general, embed_standard
from .garside import (
    DEFAULT_SSS_LIMIT,
    ConjugacyCertificate,
    ResourceLimitError,
    are_conjugate,
    equal_words,
)
from .words import (
    BraidWord,
    SplitMix64,
    concat,
    derive_seed,
    format_word,
    invert_word,
    random_letters,
)

__all__ = [
    "BoundarySummary",
    "EmbeddingMergeError",
    "SuiteConfig",
    "TrialReport",
    "VerifySummary",
    "boundary_suite",
    "generate_pair",
    "lift_witness",
    "render_boundary_json",
    "render_boundary_records",
    "render_boundary_text",
    "render_json",
    "render_records",
    "render_text",
    "verify_nonmerging",
]

GENERAL_SALT = 0xC2B2AE3D27D4EB4F


class EmbeddingMergeError(Exception):
    """Embedded words were conjugate upstairs but not downstairs.

    Geometric embeddings never merge conjugacy classes, so reaching this
    always means the engine has a bug; it is reported as a fatal finding,
    never swallowed.
    """


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    """Configuration of a verify_nonmerging run."""

    m: int
    n: int
    trials: int
    maxlen: int
    seed: int
    conjugate_fraction: float = 0.5
    general_conj_len: int | None = None
    max_sss: int = DEFAULT_SSS_LIMIT
    max_skip_rate: float = 0.05

    def __post_init__(self):
        if not self.n > self.m >= 2:
            raise ValueError(f"need n > m >= 2, got m={self.m}, n={self.n}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.maxlen < 0:
            raise ValueError("maxlen must be >= 0")
        if not 0.0 <= self.conjugate_fraction <= 1.0:
            raise ValueError("conjugate_fraction must lie in [0, 1]")
        if self.general_conj_len is not None and self.general_conj_len < 0:
            raise ValueError("general_conj_len must be >= 0")
        if self.max_sss < 1:
            raise ValueError("max_sss must be >= 1")


@dataclasses.dataclass(frozen=True)
class TrialReport:
    """Everything one trial produced. ``consistent`` is None exactly when
    the trial was skipped on a resource limit."""

    trial: int
    mode: str
    a: BraidWord
    b: BraidWord
    verdict_m: bool | None = None
    verdict_n: bool | None = None
    verdict_general: bool | None = None
    consistent: bool | None = None
    general_consistent: bool | None = None
    certificate_m: ConjugacyCertificate | None = None
    certificate_n: ConjugacyCertificate | None = None
    lifted_witness: BraidWord | None = None
    theorem_violation: bool = False
    skipped: bool = False
    skip_reason: str | None = None
    time_m_us: int = 0
    time_n_us: int = 0


@dataclasses.dataclass
class VerifySummary:
    config: SuiteConfig
    reports: list[TrialReport]
    conjugate: int = 0
    non_conjugate: int = 0
    inconsistent: int = 0
    skipped: int = 0
    theorem_violations: int = 0
    certificate_failures: int = 0
    general_mismatches: int = 0

    @property
    def skip_rate(self) -> float:
        return self.skipped / len(self.reports) if self.reports else 0.0

    @property
    def violations(self) -> int:
        return (
            self.inconsistent
            + self.theorem_violations
            + self.certificate_failures
            + self.general_mismatches
        )

    @property
    def exit_code(self) -> int:
        if self.violations:
            return 1
        if self.skip_rate > self.config.max_skip_rate:
            return 3
        return 0


def generate_pair(cfg: SuiteConfig, trial: int) -> tuple[BraidWord, BraidWord, str]:
    """The trial's pair, deterministic in (cfg.seed, trial).

    Draw order from the trial stream: mode (one 32-bit compare against
    the configured fraction), then |a| and a's letters, then either the
    conjugating word w for b = w a w^-1 or b's own length and letters.
    """
    rng = SplitMix64(derive_seed(cfg.seed, trial))
    threshold = round(cfg.conjugate_fraction * (1 << 32))
    constructed = rng.below(1 << 32) < threshold
    a = BraidWord(cfg.m, random_letters(rng, cfg.m, rng.below(cfg.maxlen + 1)))
    if constructed:
        w = BraidWord(cfg.m, random_letters(rng, cfg.m, rng.below(cfg.maxlen + 1)))
        return a, concat(w, a, invert_word(w)), "constructed"
    b = BraidWord(cfg.m, random_letters(rng, cfg.m, rng.below(cfg.maxlen + 1)))
    return a, b, "random"


def _general_conjugator(cfg: SuiteConfig, trial: int) -> BraidWord:
    rng = SplitMix64(derive_seed(cfg.seed ^ GENERAL_SALT, trial))
    length = rng.below(cfg.general_conj_len + 1)
    return BraidWord(cfg.n, random_letters(rng, cfg.n, length))


def _run_trial(cfg: SuiteConfig, trial: int) -> TrialReport:
    a, b, mode = generate_pair(cfg, trial)
    try:
        start = time.perf_counter_ns()
        cert_m = are_conjugate(a, b, max_sss=cfg.max_sss)
        time_m_us = (time.perf_counter_ns() - start) // 1000

        ea = embed_standard(a, cfg.n)
        eb = embed_standard(b, cfg.n)
        start = time.perf_counter_ns()
        cert_n = are_conjugate(ea, eb, max_sss=cfg.max_sss)
        time_n_us = (time.perf_counter_ns() - start) // 1000

        verdict_general = None
        if cfg.general_conj_len is not None:
            g = _general_conjugator(cfg, trial)
            cert_g = are_conjugate(
                embed_general(a, cfg.n, g), embed_general(b, cfg.n, g), max_sss=cfg.max_sss
            )
            verdict_general = cert_g is not None
    except ResourceLimitError as exc:
        return TrialReport(
            trial, mode, a, b, skipped=True, skip_reason=f"resource-limit: {exc}"
        )
    verdict_m = cert_m is not None
    verdict_n = cert_n is not None
    # The witness downstairs for an embedded conjugacy is the B_m
    # certificate itself; its absence would contradict the embedding
    # property (see lift_witness for the standalone operation).
    theorem_violation = verdict_n and not verdict_m
    lifted = cert_m.conjugator if (verdict_n and cert_m is not None) else None
    return TrialReport(
        trial,
        mode,
        a,
        b,
        verdict_m=verdict_m,
        verdict_n=verdict_n,
        verdict_general=verdict_general,
        consistent=verdict_m == verdict_n,
        general_consistent=None if verdict_general is None else verdict_general == verdict_n,
        certificate_m=cert_m,
        certificate_n=cert_n,
        lifted_witness=lifted,
        theorem_violation=theorem_violation,
        time_m_us=time_m_us,
        time_n_us=time_n_us,
    )


def verify_nonmerging(cfg: SuiteConfig) -> VerifySummary:
    """Run all trials and tally verdicts.

    Trials that hit the summit-set cap are reported as skipped, never
    silently dropped and never retried (retrying would break
    reproducibility); the summary's exit code turns nonzero when the
    skip rate passes the configured threshold.
    """
    summary = VerifySummary(cfg, [])
    for trial in range(cfg.trials):
        report = _run_trial(cfg, trial)
        summary.reports.append(report)
        if report.skipped:
            summary.skipped += 1
            continue
        if report.verdict_m and report.verdict_n:
            summary.conjugate += 1
        elif not report.verdict_m and not report.verdict_n:
            summary.non_conjugate += 1
        if report.consistent is False:
            summary.inconsistent += 1
        if report.theorem_violation:
            summary.theorem_violations += 1
        if report.general_consistent is False:
            summary.general_mismatches += 1
        for cert in (report.certificate_m, report.certificate_n):
            if cert is not None and not cert.verified:
                summary.certificate_failures += 1
    return summary


def lift_witness(
    a: BraidWord, b: BraidWord, n: int, max_sss: int = DEFAULT_SSS_LIMIT
) -> BraidWord | None:
    """Conjugator in B_m for a pair whose standard images are conjugate in B_n.

    Returns None when the embedded words are not conjugate. When they
    are, a conjugator must exist downstairs as well; it is found by
    solving conjugacy directly in B_m, and its absence raises
    EmbeddingMergeError (a fatal finding).
    """
    if a.strands != b.strands:
        raise ValueError(f"strand count mismatch: {a.strands} != {b.strands}")
    if n <= a.strands:
        raise ValueError(f"target must add strands: need n > {a.strands}, got {n}")
    embedded = are_conjugate(embed_standard(a, n), embed_standard(b, n), max_sss=max_sss)
    if embedded is None:
        return None
    cert = are_conjugate(a, b, max_sss=max_sss)
    if cert is None:
        raise EmbeddingMergeError(
            f"images of {format_word(a)} and {format_word(b)} are conjugate in "
            f"B_{n} but no conjugator exists in B_{a.strands}"
        )
    return cert.conjugator


@dataclasses.dataclass
class BoundarySummary:
    m: int
    n: int
    trials: int
    seed: int
    maxlen: int
    boundary_passes: int = 0
    torsion_passes: int = 0
    torsion_checked: int = 0
    failures: list[tuple[int, BraidWord, str]] = dataclasses.field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0


def boundary_suite(
    m: int, n: int, trials: int, seed: int, maxlen: int = 10
) -> BoundarySummary:
    """Check that embedded braids preserve the boundary curve of the
    embedded disc (the round curve around punctures 1..m) and that
    nontrivial embedded braids are never periodic."""
    if not n > m >= 2:
        raise ValueError(f"need n > m >= 2, got m={m}, n={n}")
    boundary = curve_class_round(1, m, n)
    identity = BraidWord(m)
    summary = BoundarySummary(m, n, trials, seed, maxlen)
    for trial in range(trials):
        rng = SplitMix64(derive_seed(seed, trial))
        a = BraidWord(m, random_letters(rng, m, rng.below(maxlen + 1)))
        embedded = embed_standard(a, n)
        if preserves_curve_class(embedded, boundary):
            summary.boundary_passes += 1
        else:
            summary.failures.append((trial, a, "boundary curve not preserved"))
        if not equal_words(a, identity):
            summary.torsion_checked += 1
            if not is_periodic(embedded):
                summary.torsion_passes += 1
            else:
                summary.failures.append((trial, a, "nontrivial embedded word is periodic"))
    return summary


# -- report rendering ----------------------------------------------------------


def _tristate(value: bool | None) -> str:
    if value is None:
        return "na"
    return "true" if value else "false"


def render_records(summary: VerifySummary, include_times: bool = False) -> str:
    """One machine-readable line per trial plus a final summary line.

    Field order is fixed: trial id, mode, verdict_m, verdict_n,
    consistent, skipped, then the per-decision times when requested.
    Times are excluded by default so that identical flags reproduce
    byte-identical reports.
    """
    lines = []
    for r in summary.reports:
        fields = [
            f"trial={r.trial}",
            f"mode={r.mode}",
            f"verdict_m={_tristate(r.verdict_m)}",
            f"verdict_n={_tristate(r.verdict_n)}",
            f"consistent={_tristate(r.consistent)}",
            f"skipped={'yes' if r.skipped else 'no'}",
        ]
        if summary.config.general_conj_len is not None:
            fields.append(f"verdict_general={_tristate(r.verdict_general)}")
        if include_times:
            fields.append(f"time_m_us={r.time_m_us}")
            fields.append(f"time_n_us={r.time_n_us}")
        lines.append(" ".join(fields))
    lines.append(
        "summary trials={} conjugate={} non_conjugate={} inconsistent={} skipped={} "
        "theorem_violations={} general_mismatches={} certificate_failures={}".format(
            len(summary.reports),
            summary.conjugate,
            summary.non_conjugate,
            summary.inconsistent,
            summary.skipped,
            summary.theorem_violations,
            summary.general_mismatches,
            summary.certificate_failures,
        )
    )
    return "\n".join(lines) + "\n"


def _trial_json(r: TrialReport, include_times: bool) -> dict:
    data: dict = {
        "trial": r.trial,
        "mode": r.mode,
        "a": format_word(r.a),
        "b": format_word(r.b),
        "verdict_m": r.verdict_m,
        "verdict_n": r.verdict_n,
        "verdict_general": r.verdict_general,
        "consistent": r.consistent,
        "skipped": r.skipped,
        "skip_reason": r.skip_reason,
        "conjugator_m": format_word(r.certificate_m.conjugator) if r.certificate_m else None,
        "conjugator_n": format_word(r.certificate_n.conjugator) if r.certificate_n else None,
        "lifted_witness": format_word(r.lifted_witness) if r.lifted_witness else None,
        "theorem_violation": r.theorem_violation,
    }
    if include_times:
        data["time_m_us"] = r.time_m_us
        data["time_n_us"] = r.time_n_us
    return data


def render_json(summary: VerifySummary, include_times: bool = False) -> str:
    """The whole report as one JSON document; deterministic for identical
    flags unless times are requested."""
    cfg = summary.config
    document = {
        "config": {
            "m": cfg.m,
            "n": cfg.n,
            "trials": cfg.trials,
            "maxlen": cfg.maxlen,
            "seed": cfg.seed,
            "conjugate_fraction": cfg.conjugate_fraction,
            "general_conj_len": cfg.general_conj_len,
            "max_sss": cfg.max_sss,
            "max_skip_rate": cfg.max_skip_rate,
        },
        "trials": [_trial_json(r, include_times) for r in summary.reports],
        "summary": {
            "trials": len(summary.reports),
            "conjugate": summary.conjugate,
            "non_conjugate": summary.non_conjugate,
            "inconsistent": summary.inconsistent,
            "skipped": summary.skipped,
            "skip_rate": summary.skip_rate,
            "theorem_violations": summary.theorem_violations,
            "general_mismatches": summary.general_mismatches,
            "certificate_failures": summary.certificate_failures,
            "exit_code": summary.exit_code,
        },
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def render_text(summary: VerifySummary) -> str:
    """Human-readable report with per-decision wall-clock times."""
    cfg = summary.config
    lines = [
        f"verify-nonmerging: B_{cfg.m} -> B_{cfg.n}, {cfg.trials} trials, "
        f"maxlen {cfg.maxlen}, seed {cfg.seed}"
        + (
            f", general conjugator length <= {cfg.general_conj_len}"
            if cfg.general_conj_len is not None
            else ""
        )
    ]
    for r in summary.reports:
        if r.skipped:
            lines.append(f"  trial {r.trial:4d} [{r.mode:11s}] skipped ({r.skip_reason})")
            continue
        verdict = "conjugate" if r.verdict_m else "non-conjugate"
        flag = "ok" if r.consistent else "INCONSISTENT"
        extra = ""
        if r.verdict_general is not None:
            extra = " general=ok" if r.general_consistent else " general=MISMATCH"
        lines.append(
            f"  trial {r.trial:4d} [{r.mode:11s}] {verdict:14s} {flag}{extra} "
            f"({r.time_m_us} us / {r.time_n_us} us)"
        )
    lines.append(
        f"summary: {summary.conjugate} conjugate, {summary.non_conjugate} non-conjugate, "
        f"{summary.inconsistent} inconsistent, {summary.skipped} skipped "
        f"({100 * summary.skip_rate:.1f}%), {summary.theorem_violations} theorem violations, "
        f"{summary.general_mismatches} general mismatches"
    )
    return "\n".join(lines) + "\n"


def render_boundary_text(summary: BoundarySummary) -> str:
    lines = [
        f"boundary-suite: B_{summary.m} -> B_{summary.n}, {summary.trials} trials, "
        f"maxlen {summary.maxlen}, seed {summary.seed}",
        f"  boundary curve preserved: {summary.boundary_passes}/{summary.trials}",
        f"  nontrivial and non-periodic: {summary.torsion_passes}/{summary.torsion_checked}",
    ]
    for trial, word, what in summary.failures:
        lines.append(f"  FAIL trial {trial}: {what}: {format_word(word)}")
    return "\n".join(lines) + "\n"


def render_boundary_records(summary: BoundarySummary) -> str:
    lines = [
        f"m={summary.m} n={summary.n} trials={summary.trials} seed={summary.seed} "
        f"maxlen={summary.maxlen}",
        f"boundary_passes={summary.boundary_passes} torsion_passes={summary.torsion_passes} "
        f"torsion_checked={summary.torsion_checked} failures={len(summary.failures)}",
    ]
    return "\n".join(lines) + "\n"


def render_boundary_json(summary: BoundarySummary) -> str:
    document = {
        "config": {
            "m": summary.m,
            "n": summary.n,
            "trials": summary.trials,
            "seed": summary.seed,
            "maxlen": summary.maxlen,
        },
        "summary": {
            "boundary_passes": summary.boundary_passes,
            "torsion_passes": summary.torsion_passes,
            "torsion_checked": summary.torsion_checked,
            "failures": [
                {"trial": trial, "word": format_word(word), "what": what}
                for trial, word, what in summary.failures
            ],
            "exit_code": summary.exit_code,
        },
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"
