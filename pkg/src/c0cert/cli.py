"""certify: run exact certificate suites from a JSON config, emit reports.

    certify run [--config PATH|-] [--format json|markdown] [--out PATH]
                [--timestamp on|off]
    certify {skew,monotone,maximal,extensions,gap,all} [same options]

The suite shortcuts run a single suite (or every suite, for ``all``)
regardless of the config's suite selection.  Without ``--config`` a built-in
default configuration is used: seed 0, 1000 samples per suite, direction
unit(1), parameters 1 and 2, all suites.

Every evidence value in a report is an exact rational serialized as "p/q".
With ``--timestamp off`` the report carries no timestamp and no wall-clock
durations, so identical configs produce byte-identical reports.

Exit codes: 0 all selected suites passed, 1 some suite failed, 2 config
error, 3 report could not be written.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .certify import (
    extension_point,
    closure_margin,
    distinctness,
    fitzpatrick_gap,
    fitzpatrick_value,
    monotone_product,
    random_graph_point,
    random_offgraph_pair,
    random_summable,
    violation_witness,
    Member,
    Violation,
)
from .gossez import gossez_apply
from .seqspace import ONES, Rational, Seq, pairing, rat_str, unit

__all__ = [
    "ConfigError",
    "SuiteConfig",
    "SuiteResult",
    "SuiteReport",
    "SUITE_NAMES",
    "default_config",
    "parse_config",
    "config_from_obj",
    "run_suite",
    "render_json",
    "render_markdown",
    "emit_report",
    "main",
]

# Canonical report order: suite name order, independent of execution order.
SUITE_NAMES = ("extensions", "gap", "maximal", "monotone", "skew")

# Cap on failure messages kept per suite; counts always carry the full number.
MAX_FAILURES_SHOWN = 5


class ConfigError(ValueError):
    """The configuration document is malformed or violates a precondition."""


@dataclass(frozen=True)
class SuiteConfig:
    """Validated run configuration. Defaults mirror ``default_config()``."""

    seed: int = 0
    samples: int = 1000
    support_max: int = 16
    coeff_bound: int = 100
    taus: tuple[Rational, ...] = (Fraction(1), Fraction(2))
    ytilde: Seq = field(default_factory=lambda: unit(1))
    suites: tuple[str, ...] = SUITE_NAMES

    def to_obj(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "support_max": self.support_max,
            "coeff_bound": self.coeff_bound,
            "taus": [rat_str(t) for t in self.taus],
            "ytilde": self.ytilde.to_obj(),
            "suites": list(self.suites),
        }


@dataclass
class SuiteResult:
    name: str
    passed: bool
    counts: dict
    evidence: dict
    failures: list
    duration: float = 0.0


@dataclass
class SuiteReport:
    config: SuiteConfig
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def default_config() -> SuiteConfig:
    return SuiteConfig()


def _parse_rational(value: object, where: str) -> Rational:
    if isinstance(value, bool) or isinstance(value, float):
        raise ConfigError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{where}: malformed rational string {value!r}") from None
    raise ConfigError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")


def _parse_int(value: object, where: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: expected an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{where}: must be at least {minimum}, got {value}")
    return value


def config_from_obj(obj: object) -> SuiteConfig:
    """Validate a decoded JSON document into a SuiteConfig.

    Unspecified fields take the defaults; every violation is reported with
    the offending field in the message.
    """
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    known = {"seed", "samples", "support_max", "coeff_bound", "taus", "ytilde", "suites"}
    unknown = set(obj) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    defaults = default_config()
    seed = _parse_int(obj.get("seed", defaults.seed), "seed", 0)
    samples = _parse_int(obj.get("samples", defaults.samples), "samples", 1)
    support_max = _parse_int(obj.get("support_max", defaults.support_max), "support_max", 2)
    coeff_bound = _parse_int(obj.get("coeff_bound", defaults.coeff_bound), "coeff_bound", 1)

    raw_taus = obj.get("taus", [rat_str(t) for t in defaults.taus])
    if not isinstance(raw_taus, list) or not raw_taus:
        raise ConfigError("taus: expected a nonempty list")
    taus = []
    for i, item in enumerate(raw_taus):
        tau = _parse_rational(item, f"taus[{i}]")
        if tau <= 0:
            raise ConfigError(f"taus[{i}]: must be positive, got {tau}")
        if tau not in taus:  # deduplicate, keeping first occurrence order
            taus.append(tau)

    if "ytilde" in obj:
        try:
            ytilde = Seq.from_obj(obj["ytilde"])
        except ValueError as exc:
            raise ConfigError(f"ytilde: {exc}") from None
    else:
        ytilde = defaults.ytilde
    if ytilde.tail != 0:
        raise ConfigError("ytilde: must be finitely supported (tail 0)")
    if pairing(ONES, ytilde) <= 0:
        raise ConfigError("ytilde: pairing with the ones sequence must be positive")

    raw_suites = obj.get("suites", ["all"])
    if not isinstance(raw_suites, list) or not raw_suites:
        raise ConfigError("suites: expected a nonempty list")
    selected = set()
    for i, name in enumerate(raw_suites):
        if name == "all":
            selected.update(SUITE_NAMES)
        elif name in SUITE_NAMES:
            selected.add(name)
        else:
            raise ConfigError(f"suites[{i}]: unknown suite name {name!r}")
    suites = tuple(n for n in SUITE_NAMES if n in selected)

    return SuiteConfig(
        seed=seed,
        samples=samples,
        support_max=support_max,
        coeff_bound=coeff_bound,
        taus=tuple(taus),
        ytilde=ytilde,
        suites=suites,
    )


def parse_config(source: str) -> SuiteConfig:
    """Load and validate a config from a file path, or from stdin for '-'."""
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    return config_from_obj(obj)


# --- suite runners ---------------------------------------------------------
#
# One deterministic generator per suite, seed split by suite name, so suites
# could run in any order (or in parallel) without changing any draw.


def _rng(config: SuiteConfig, name: str) -> random.Random:
    return random.Random(f"{config.seed}:{name}")


def _graph_sample(config: SuiteConfig, rng: random.Random) -> list:
    return [
        random_graph_point(rng, config.support_max, config.coeff_bound)
        for _ in range(config.samples)
    ]


def _run_skew(config: SuiteConfig) -> SuiteResult:
    rng = _rng(config, "skew")
    failures = []
    seen = set()
    for _ in range(config.samples):
        y = random_summable(rng, config.support_max, config.coeff_bound)
        value = pairing(gossez_apply(y), y)
        seen.add(value)
        if value != 0:
            failures.append(f"pairing(G(y), y) = {value} for y = {y}")
    return SuiteResult(
        name="skew",
        passed=not failures,
        counts={"samples": config.samples, "failures": len(failures)},
        evidence={"pairing_values": sorted(rat_str(v) for v in seen)},
        failures=failures[:MAX_FAILURES_SHOWN],
    )


def _run_monotone(config: SuiteConfig) -> SuiteResult:
    rng = _rng(config, "monotone")
    failures = []
    seen = set()
    for _ in range(config.samples):
        p = random_graph_point(rng, config.support_max, config.coeff_bound)
        q = random_graph_point(rng, config.support_max, config.coeff_bound)
        value = monotone_product(p, q)
        seen.add(value)
        if value != 0:
            failures.append(f"monotone product {value} for a graph pair")
    return SuiteResult(
        name="monotone",
        passed=not failures,
        counts={"pairs": config.samples, "failures": len(failures)},
        evidence={"products": sorted(rat_str(v) for v in seen)},
        failures=failures[:MAX_FAILURES_SHOWN],
    )


def _run_maximal(config: SuiteConfig) -> SuiteResult:
    rng = _rng(config, "maximal")
    failures = []
    worst = None  # violation product closest to zero; must stay negative
    for _ in range(config.samples):
        p = random_graph_point(rng, config.support_max, config.coeff_bound)
        verdict = violation_witness(p.x, p.y)
        if not isinstance(verdict, Member):
            failures.append(f"graph point misclassified: {verdict!r}")
    for _ in range(config.samples):
        x, y = random_offgraph_pair(rng, config.support_max, config.coeff_bound)
        verdict = violation_witness(x, y)
        if not isinstance(verdict, Violation):
            failures.append("perturbed pair misclassified as a member")
            continue
        recheck = pairing(x - verdict.witness.x, y - verdict.witness.y)
        if recheck != verdict.product or recheck >= 0:
            failures.append(f"witness product {verdict.product} failed re-verification")
            continue
        worst = recheck if worst is None else max(worst, recheck)
    evidence = {}
    if worst is not None:
        evidence["max_violation_product"] = rat_str(worst)
    return SuiteResult(
        name="maximal",
        passed=not failures,
        counts={
            "members": config.samples,
            "violations": config.samples,
            "failures": len(failures),
        },
        evidence=evidence,
        failures=failures[:MAX_FAILURES_SHOWN],
    )


def _run_extensions(config: SuiteConfig) -> SuiteResult:
    rng = _rng(config, "extensions")
    failures = []
    sample = _graph_sample(config, rng)
    expected = pairing(ONES, config.ytilde)
    for tau in config.taus:
        ep = extension_point(tau, config.ytilde)
        for p in sample:
            margin = closure_margin(ep, p)
            if margin != expected or margin <= 0:
                failures.append(f"margin {margin} != {expected} at tau = {tau}")
    products = {}
    if len(config.taus) < 2:
        failures.append("insufficient distinct taus for pairwise distinctness")
    else:
        for i, t1 in enumerate(config.taus):
            for t2 in config.taus[i + 1 :]:
                value = distinctness(t1, t2, config.ytilde)
                products[f"{rat_str(t1)},{rat_str(t2)}"] = rat_str(value)
                if value >= 0:
                    failures.append(f"distinctness({t1}, {t2}) = {value} not negative")
    return SuiteResult(
        name="extensions",
        passed=not failures,
        counts={
            "graph_points": config.samples,
            "taus": len(config.taus),
            "tau_pairs": len(products),
            "failures": len(failures),
        },
        evidence={
            "closure_margin": rat_str(expected),
            "distinctness_products": products,
        },
        failures=failures[:MAX_FAILURES_SHOWN],
    )


def _run_gap(config: SuiteConfig) -> SuiteResult:
    rng = _rng(config, "gap")
    failures = []
    sample = _graph_sample(config, rng)
    expected = pairing(ONES, config.ytilde)
    per_tau = {}
    for tau in config.taus:
        ep = extension_point(tau, config.ytilde)
        values = {fitzpatrick_value(ep, p) for p in sample}
        if len(values) != 1:
            failures.append(f"Fitzpatrick values not constant at tau = {tau}")
            continue
        gap = fitzpatrick_gap(ep, sample)
        if gap != expected or gap <= 0:
            failures.append(f"gap {gap} != expected {expected} at tau = {tau}")
        per_tau[rat_str(ep.tau)] = {
            "fitzpatrick_value": rat_str(next(iter(values))),
            "self_pairing": rat_str(pairing(ep.xstar, ep.xstarstar)),
            "gap": rat_str(gap),
        }
    return SuiteResult(
        name="gap",
        passed=not failures,
        counts={
            "graph_points": config.samples,
            "taus": len(config.taus),
            "failures": len(failures),
        },
        evidence={"expected_gap": rat_str(expected), "per_tau": per_tau},
        failures=failures[:MAX_FAILURES_SHOWN],
    )


_RUNNERS = {
    "skew": _run_skew,
    "monotone": _run_monotone,
    "maximal": _run_maximal,
    "extensions": _run_extensions,
    "gap": _run_gap,
}


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Execute the selected suites; certificate errors become suite failures."""
    results = []
    for name in config.suites:
        started = time.perf_counter()
        try:
            result = _RUNNERS[name](config)
        except Exception as exc:  # a crash is itself a failed certificate
            result = SuiteResult(
                name=name,
                passed=False,
                counts={},
                evidence={},
                failures=[f"{type(exc).__name__}: {exc}"],
            )
        result.duration = time.perf_counter() - started
        results.append(result)
    return SuiteReport(config=config, results=results)


# --- report rendering ------------------------------------------------------


def report_obj(report: SuiteReport, with_timing: bool) -> dict:
    suites = []
    for r in report.results:
        entry = {
            "name": r.name,
            "status": "pass" if r.passed else "fail",
            "counts": r.counts,
            "evidence": r.evidence,
            "failures": r.failures,
        }
        if with_timing:
            entry["duration_s"] = round(r.duration, 3)
        suites.append(entry)
    obj = {
        "overall": "pass" if report.passed else "fail",
        "config": report.config.to_obj(),
        "suites": suites,
    }
    if with_timing:
        obj["generated_at"] = datetime.now(timezone.utc).isoformat()
    return obj


def render_json(report: SuiteReport, with_timing: bool = True) -> str:
    return json.dumps(report_obj(report, with_timing), sort_keys=True, indent=2) + "\n"


def _flat(prefix: str, value: object):
    if isinstance(value, dict):
        for key in sorted(value):
            yield from _flat(f"{prefix}.{key}" if prefix else str(key), value[key])
    else:
        yield prefix, json.dumps(value)


def render_markdown(report: SuiteReport, with_timing: bool = True) -> str:
    obj = report_obj(report, with_timing)
    lines = [
        "# Certificate report",
        "",
        f"Overall: **{obj['overall'].upper()}**",
        "",
        "Config: `" + json.dumps(obj["config"], sort_keys=True) + "`",
        "",
        "| suite | status | counts |",
        "| --- | --- | --- |",
    ]
    for entry in obj["suites"]:
        counts = ", ".join(f"{k}={v}" for k, v in sorted(entry["counts"].items()))
        lines.append(f"| {entry['name']} | {entry['status']} | {counts} |")
    for entry in obj["suites"]:
        lines.append("")
        lines.append(f"## {entry['name']}: {entry['status']}")
        for key, value in _flat("", entry["evidence"]):
            lines.append(f"- {key} = {value}")
        for message in entry["failures"]:
            lines.append(f"- FAILURE: {message}")
        if with_timing:
            lines.append(f"- duration_s = {entry['duration_s']}")
    if with_timing:
        lines.append("")
        lines.append(f"Generated at {obj['generated_at']}")
    return "\n".join(lines) + "\n"


def emit_report(
    report: SuiteReport,
    format: str = "json",
    out: str | None = None,
    with_timing: bool = True,
) -> int:
    """Write the report; exit code 0 on overall pass, 1 on failure, 3 on I/O error."""
    text = render_json(report, with_timing) if format == "json" else render_markdown(
        report, with_timing
    )
    try:
        if out is None or out == "-":
            sys.stdout.write(text)
        else:
            Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return 3
    return 0 if report.passed else 1


# --- entry point -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="certify",
        description="Run exact certificate suites for the skew operator construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {"run": "run the suites selected by the config", "all": "run every suite"}
    for name in ("run", "all") + SUITE_NAMES:
        p = sub.add_parser(name, help=helps.get(name, f"run the {name} suite"))
        p.add_argument("--config", default=None, help="config file path, or '-' for stdin")
        p.add_argument("--format", choices=("json", "markdown"), default="json")
        p.add_argument("--out", default=None, help="report path (default: stdout)")
        p.add_argument(
            "--timestamp",
            choices=("on", "off"),
            default="on",
            help="'off' drops timestamp and durations for byte-identical reports",
        )
    return parser


def main(argv: list | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = parse_config(args.config) if args.config else default_config()
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    if args.command == "all":
        config = replace(config, suites=SUITE_NAMES)
    elif args.command != "run":
        config = replace(config, suites=(args.command,))
    report = run_suite(config)
    return emit_report(report, args.format, args.out, args.timestamp == "on")


if __name__ == "__main__":
    sys.exit(main())
