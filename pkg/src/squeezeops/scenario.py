"""Scenario files: time-dependent coefficient schedules on a scan grid.

A scenario binds the three coefficient expressions to physical constants
and a uniform time grid.  File format (INI-like, '#' starts a comment,
keys case-sensitive)::

    [system]
    m = 1.0            # optional section; defaults are 1.0 each
    omega0 = 1.0
    hbar = 1.0

    [coefficients]
    beta1 = "1"
    beta2 = "0.2*cos(t)"
    beta3 = "1 + 0.1*sin(t)"

    [scan]
    t_start = 0.0
    t_end = 6.2831853
    steps = 100

The derivatives needed by the pipeline are taken symbolically at load
time, and beta3 > 0 is checked eagerly on every grid point.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass

from . import timefunc
from .timefunc import EvalDomainError, ParseError, TimeFunction
from .transform import (
    CoefficientSample,
    SystemConstants,
    gamma_mix,
    omega_squared,
    w1_params,
    w2_params,
    w_combined,
)

__all__ = [
    "CSV_COLUMNS",
    "ScanGrid",
    "Scenario",
    "ScenarioError",
    "load_scenario",
    "run_scan",
]

CSV_COLUMNS = (
    "t",
    "beta1",
    "beta2",
    "beta3",
    "beta3_dot",
    "gamma_mix",
    "rho1",
    "theta2",
    "r2",
    "phi2",
    "theta_o",
    "r_o",
    "phi_o",
    "Omega2",
)


class ScenarioError(ValueError):
    """Invalid scenario file: format, expression, or grid violation."""


@dataclass(frozen=True)
class ScanGrid:
    """Uniform time grid with steps + 1 points."""

    t_start: float
    t_end: float
    steps: int

    def __post_init__(self):
        if not (isinstance(self.steps, int) and self.steps >= 1):
            raise ScenarioError(f"steps must be an integer >= 1, got {self.steps!r}")
        if not self.t_end > self.t_start:
            raise ScenarioError(
                f"t_end must exceed t_start, got [{self.t_start!r}, {self.t_end!r}]"
            )

    def points(self):
        span = self.t_end - self.t_start
        return [self.t_start + span * i / self.steps for i in range(self.steps + 1)]


@dataclass(frozen=True)
class Scenario:
    """Compiled coefficient schedules plus constants and scan grid."""

    constants: SystemConstants
    beta1: TimeFunction
    beta2: TimeFunction
    beta3: TimeFunction
    scan: ScanGrid

    def sample_at(self, t):
        """Coefficient sample at time t, with symbolic derivatives."""
        beta3_dot = timefunc.derivative(self.beta3)
        return CoefficientSample(
            t=t,
            beta1=timefunc.evaluate(self.beta1, t),
            beta2=timefunc.evaluate(self.beta2, t),
            beta3=timefunc.evaluate(self.beta3, t),
            beta2_dot=timefunc.evaluate(timefunc.derivative(self.beta2), t),
            beta3_dot=timefunc.evaluate(beta3_dot, t),
            beta3_ddot=timefunc.evaluate(timefunc.derivative(beta3_dot), t),
        )


_SECTION_KEYS = {
    "system": {"m", "omega0", "hbar"},
    "coefficients": {"beta1", "beta2", "beta3"},
    "scan": {"t_start", "t_end", "steps"},
}


def _strip_quotes(value):
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    return value


def _parse_expression(raw, key):
    try:
        return timefunc.parse(_strip_quotes(raw))
    except ParseError as exc:
        raise ScenarioError(f"bad expression for {key}: {exc}") from exc


def _parse_number(parser, section, key, default=None, integer=False):
    if not parser.has_option(section, key):
        if default is not None:
            return default
        raise ScenarioError(f"missing key {key!r} in section [{section}]")
    raw = _strip_quotes(parser.get(section, key))
    try:
        return int(raw) if integer else float(raw)
    except ValueError as exc:
        kind = "an integer" if integer else "a decimal literal"
        raise ScenarioError(f"{key} in [{section}] must be {kind}, got {raw!r}") from exc


def load_scenario(path):
    """Load, compile, and validate a scenario file.

    Raises
    ------
    FileNotFoundError
        If the path does not exist.
    ScenarioError
        On malformed sections or keys (with the line number when the
        underlying parser reports one), bad expressions, or a beta3
        schedule that is not strictly positive on the grid (reporting
        the offending t).
    """
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#",), interpolation=None, strict=True
    )
    parser.optionxform = str
    with open(path, encoding="utf-8") as handle:
        try:
            parser.read_file(handle)
        except configparser.Error as exc:
            raise ScenarioError(f"bad scenario format: {exc}") from exc

    for section in parser.sections():
        if section not in _SECTION_KEYS:
            raise ScenarioError(f"unknown section [{section}]")
        stray = set(parser.options(section)) - _SECTION_KEYS[section]
        if stray:
            raise ScenarioError(f"unknown keys in [{section}]: {sorted(stray)}")
    for section in ("coefficients", "scan"):
        if not parser.has_section(section):
            raise ScenarioError(f"missing required section [{section}]")

    try:
        constants = SystemConstants(
            m=_parse_number(parser, "system", "m", 1.0) if parser.has_section("system") else 1.0,
            omega0=_parse_number(parser, "system", "omega0", 1.0)
            if parser.has_section("system") else 1.0,
            hbar=_parse_number(parser, "system", "hbar", 1.0)
            if parser.has_section("system") else 1.0,
        )
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc

    trees = {}
    for key in ("beta1", "beta2", "beta3"):
        if not parser.has_option("coefficients", key):
            raise ScenarioError(f"missing key {key!r} in section [coefficients]")
        trees[key] = _parse_expression(parser.get("coefficients", key), key)

    grid = ScanGrid(
        t_start=_parse_number(parser, "scan", "t_start"),
        t_end=_parse_number(parser, "scan", "t_end"),
        steps=_parse_number(parser, "scan", "steps", integer=True),
    )

    for t in grid.points():
        try:
            value = timefunc.evaluate(trees["beta3"], t)
        except EvalDomainError as exc:
            raise ScenarioError(f"beta3 undefined on the grid: {exc}") from exc
        if not value > 0.0:
            raise ScenarioError(
                f"beta3 must be strictly positive on the grid; got {value!r} at t = {t!r}"
            )

    return Scenario(constants=constants, scan=grid, **trees)


def _fmt(value):
    return format(float(value), ".17g")


def run_scan(scenario, out):
    """Run the pipeline over the scan grid, writing CSV rows to ``out``.

    One row per grid point with the columns in :data:`CSV_COLUMNS`; all
    values carry 17 significant digits so reruns diff exactly.  Returns
    the number of data rows written (steps + 1).
    """
    out.write(",".join(CSV_COLUMNS) + "\n")
    rows = 0
    for t in scenario.scan.points():
        sample = scenario.sample_at(t)
        constants = scenario.constants
        gamma = gamma_mix(sample, constants)
        # real by construction (phi is 0 or pi); equals -ln(beta3)/2
        rho1 = w1_params(sample).rho.real
        w2 = w2_params(sample, constants)
        fused = w_combined(sample, constants)
        row = (
            sample.t,
            sample.beta1,
            sample.beta2,
            sample.beta3,
            sample.beta3_dot,
            gamma,
            rho1,
            w2.theta,
            w2.r,
            w2.phi,
            fused.theta,
            fused.r,
            fused.phi,
            omega_squared(sample, constants),
        )
        out.write(",".join(_fmt(v) for v in row) + "\n")
        rows += 1
    return rows
