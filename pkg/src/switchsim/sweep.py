"""Parameter sweeps over the switch time t and input angle a, with
closed-form cross-checks.

Every sweep runs over the state |A>|0>|1> with |A> = sin(a)|0> + cos(a)|1>.
The numeric pipeline always runs; the closed-form column is filled whenever
a closed form exists for the configuration (clean runs for every measure,
noisy runs for the I-concurrence and the average fidelity with noise on
qubit 0). Output is deterministic: identical configurations produce
byte-identical files.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import channels as ch
from . import entanglement as ent
from . import states, switch

MEASURES = (
    "schmidt",
    "ppt",
    "concurrence",
    "iconcurrence",
    "entropy",
    "fidelity",
    "avg_fidelity",
)

#: measures whose numeric pipeline is defined for a noisy (mixed) state
NOISY_MEASURES = ("ppt", "concurrence", "iconcurrence", "entropy")

#: verification gate per measure
DEFAULT_TOLERANCE = 1e-9
AVG_FIDELITY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ChannelSpec:
    kind: str
    p: float
    qubit: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", ch.canonical_kind(self.kind))
        if not (math.isfinite(self.p) and 0.0 <= self.p <= 1.0):
            raise ValueError(f"probability must lie in [0, 1], got {self.p!r}")
        if self.qubit not in (0, 1):
            raise ValueError(f"noise qubit must be 0 or 1, got {self.qubit}")

    def make(self) -> ch.KrausChannel:
        return ch.make_channel(self.kind, self.p)


@dataclass(frozen=True)
class SweepConfig:
    measure: str
    a: float = math.pi / 4
    a_steps: int = 1
    t_min: float = 0.0
    t_max: float = math.pi / 2
    t_steps: int = 101
    channel: Optional[ChannelSpec] = None
    log_base: str = "e"
    compare: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValueError(
                f"unknown measure {self.measure!r}; expected one of {MEASURES}"
            )
        if self.t_steps < 2:
            raise ValueError(f"t_steps must be >= 2, got {self.t_steps}")
        if self.a_steps < 1:
            raise ValueError(f"a_steps must be >= 1, got {self.a_steps}")
        for name in ("a", "t_min", "t_max"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.t_max < self.t_min:
            raise ValueError("t_max must be >= t_min")
        ent._log_scale(self.log_base)  # validates

    def a_values(self) -> np.ndarray:
        if self.a_steps == 1:
            return np.array([self.a])
        return np.linspace(0.0, math.pi / 2, self.a_steps)

    def t_values(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.t_steps)


@dataclass(frozen=True)
class SweepRow:
    t: float
    a: float
    value_numeric: float
    value_closed: Optional[float] = None
    abs_err: Optional[float] = None


def _check_pipeline(config: SweepConfig) -> None:
    if config.measure == "avg_fidelity":
        if config.channel is None:
            raise ValueError("avg_fidelity needs a channel (--channel/--p)")
        return
    if config.channel is not None and config.measure not in NOISY_MEASURES:
        raise ValueError(
            f"measure {config.measure!r} is defined for noiseless (pure) states "
            f"only; drop the channel or pick one of {NOISY_MEASURES}"
        )


def _pair_density(a: float, t: float, spec: Optional[ChannelSpec]) -> states.DensityMatrix:
    a_state = states.qubit_from_angle(a)
    if spec is None:
        return states.to_density(switch.switched_pair(a_state, t))
    return ent.noisy_pair_density(a_state, t, spec.make(), qubit=spec.qubit)


def _numeric(config: SweepConfig, a: float, t: float) -> float:
    measure = config.measure
    if measure == "fidelity":
        a_state = states.qubit_from_angle(a)
        psi0 = states.tensor(
            [a_state, states.make_qubit(1.0, 0.0), states.make_qubit(0.0, 1.0)]
        )
        return switch.switch_fidelity(psi0, t)
    if measure == "schmidt":
        return ent.schmidt_coefficients(switch.switched_pair(states.qubit_from_angle(a), t)).lambda0
    if measure == "avg_fidelity":
        spec = config.channel
        lifted = ch.lift(spec.make(), spec.qubit, 3)
        return ch.average_fidelity_numeric(switch.switch_unitary(t).matrix, lifted)
    rho = _pair_density(a, t, config.channel)
    if measure == "ppt":
        return float(ent.ppt_spectrum(rho)[0])
    if measure == "concurrence":
        return ent.concurrence(rho)
    if measure == "iconcurrence":
        return ent.iconcurrence(rho, "B")
    if measure == "entropy":
        return ent.von_neumann_entropy(states.partial_trace(rho, {1}), config.log_base)
    raise AssertionError(measure)


def _closed(config: SweepConfig, a: float, t: float) -> Optional[float]:
    measure = config.measure
    alpha0, beta0 = math.sin(a), math.cos(a)
    spec = config.channel
    if measure == "avg_fidelity":
        if spec.qubit != 0:
            return None  # closed forms hold for noise on the first qubit
        return ch.average_fidelity_closed(spec.kind, spec.p, t)
    if spec is not None:
        if measure == "iconcurrence" and spec.qubit == 0:
            return ent.iconcurrence_noisy_closed(spec.kind, spec.p, t, alpha0, beta0)
        return None  # no noisy closed form for the other measures
    if measure == "fidelity":
        return alpha0**2 + math.sin(t) * beta0**2
    if measure == "schmidt":
        return ent.schmidt_closed(beta0, t).lambda0
    if measure == "ppt":
        return float(ent.ppt_closed(alpha0, beta0, t)[0])
    if measure == "concurrence":
        return ent.concurrence_closed(beta0, t)
    if measure == "iconcurrence":
        return ent.iconcurrence_closed(alpha0, beta0, t)
    if measure == "entropy":
        return ent.reduced_entropy_closed(alpha0, beta0, t, config.log_base)
    raise AssertionError(measure)


def _row(t: float, a: float, numeric: float, closed: Optional[float]) -> SweepRow:
    if closed is None:
        return SweepRow(t=t, a=a, value_numeric=numeric)
    return SweepRow(
        t=t, a=a, value_numeric=numeric, value_closed=closed, abs_err=abs(numeric - closed)
    )


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    """One row per grid point, a outer, t fastest."""
    _check_pipeline(config)
    rows = []
    for a in config.a_values():
        for t in config.t_values():
            numeric = _numeric(config, float(a), float(t))
            closed = _closed(config, float(a), float(t)) if config.compare else None
            rows.append(_row(float(t), float(a), numeric, closed))
    return rows


def diff_sweep(config: SweepConfig) -> list[SweepRow]:
    """|noisy - clean| of a measure per grid point; needs a channel."""
    if config.channel is None:
        raise ValueError("diff needs a channel (--channel/--p)")
    if config.measure not in NOISY_MEASURES:
        raise ValueError(
            f"diff is defined for {NOISY_MEASURES}, got {config.measure!r}"
        )
    clean = replace(config, channel=None)
    rows = []
    for a in config.a_values():
        for t in config.t_values():
            a_f, t_f = float(a), float(t)
            numeric = abs(_numeric(config, a_f, t_f) - _numeric(clean, a_f, t_f))
            closed = None
            if config.compare:
                noisy_c = _closed(config, a_f, t_f)
                clean_c = _closed(clean, a_f, t_f)
                if noisy_c is not None and clean_c is not None:
                    closed = abs(noisy_c - clean_c)
            rows.append(_row(t_f, a_f, numeric, closed))
    return rows


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    max_abs_err: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_abs_err <= self.tolerance


NOISY_P_VALUES = (0.0, 0.25, 0.5, 0.74, 1.0)


def verify(
    measures: Optional[Sequence[str]] = None,
    a_steps: int = 50,
    t_steps: int = 50,
    noisy_a_steps: int = 9,
    avg_grid: int = 20,
    log_base: str = "e",
    seed: int = 0,
    inject_error: float = 0.0,
) -> list[VerifyCheck]:
    """Closed-form-vs-numeric comparison battery.

    Returns one check per measure (plus one per channel kind for the noisy
    measures). ``inject_error`` is added to every closed-form value; it
    exists so the harness can prove it fails when the two routes disagree.
    """
    wanted = set(MEASURES if measures is None else measures)
    unknown = wanted - set(MEASURES)
    if unknown:
        raise ValueError(f"unknown measures: {sorted(unknown)}")
    checks = []

    clean_measures = [m for m in MEASURES if m in wanted and m != "avg_fidelity"]
    for measure in clean_measures:
        config = SweepConfig(
            measure=measure, a_steps=a_steps, t_steps=t_steps,
            log_base=log_base, compare=True, seed=seed,
        )
        worst = 0.0
        for row in run_sweep(config):
            worst = max(worst, abs(row.value_numeric - (row.value_closed + inject_error)))
        checks.append(VerifyCheck(measure, worst, DEFAULT_TOLERANCE))

    if "iconcurrence" in wanted:
        for kind in ch.CHANNEL_KINDS:
            worst = 0.0
            for p in NOISY_P_VALUES:
                config = SweepConfig(
                    measure="iconcurrence", a_steps=noisy_a_steps, t_steps=t_steps,
                    channel=ChannelSpec(kind, p, 0), compare=True, seed=seed,
                )
                for row in run_sweep(config):
                    worst = max(
                        worst, abs(row.value_numeric - (row.value_closed + inject_error))
                    )
            checks.append(
                VerifyCheck(f"iconcurrence[{kind}]", worst, DEFAULT_TOLERANCE)
            )

    if "avg_fidelity" in wanted:
        t_grid = np.linspace(0.0, math.pi / 2, avg_grid)
        p_grid = np.linspace(0.0, 1.0, avg_grid)
        for kind in ch.CHANNEL_KINDS:
            worst = 0.0
            for p in p_grid:
                lifted = ch.lift(ch.make_channel(kind, float(p)), 0, 3)
                for t in t_grid:
                    numeric = ch.average_fidelity_numeric(
                        switch.switch_unitary(float(t)).matrix, lifted
                    )
                    closed = ch.average_fidelity_closed(kind, float(p), float(t))
                    worst = max(worst, abs(numeric - (closed + inject_error)))
            checks.append(
                VerifyCheck(f"avg_fidelity[{kind}]", worst, AVG_FIDELITY_TOLERANCE)
            )
        # the two flip channels must agree with each other exactly
        worst = 0.0
        for p in p_grid:
            pf = ch.lift(ch.make_channel("PF", float(p)), 0, 3)
            bf = ch.lift(ch.make_channel("BF", float(p)), 0, 3)
            for t in t_grid:
                u = switch.switch_unitary(float(t)).matrix
                worst = max(
                    worst,
                    abs(
                        ch.average_fidelity_numeric(u, pf)
                        - ch.average_fidelity_numeric(u, bf)
                    ),
                )
        checks.append(VerifyCheck("avg_fidelity[PF=BF]", worst, 1e-12))

    return checks


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.12g}"


def emit(rows: Sequence[SweepRow], fmt: str = "csv", destination=None) -> None:
    """Write rows as CSV or JSON to a path or a text stream (default stdout).

    Columns/keys are t, a, value, value_closed, abs_err; optional fields
    are empty (CSV) or null (JSON). Values carry 12 significant digits and
    a locale-independent decimal point.
    """
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    text = _render_csv(rows) if fmt == "csv" else _render_json(rows)
    if destination is None:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        try:
            with open(destination, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write sweep output to {destination!r}: {exc}") from exc


def _render_csv(rows: Sequence[SweepRow]) -> str:
    lines = ["t,a,value,value_closed,abs_err"]
    for r in rows:
        lines.append(
            ",".join(
                (_fmt(r.t), _fmt(r.a), _fmt(r.value_numeric), _fmt(r.value_closed), _fmt(r.abs_err))
            )
        )
    return "\n".join(lines) + "\n"


def _render_json(rows: Sequence[SweepRow]) -> str:
    def number(value: Optional[float]):
        return None if value is None else float(f"{value:.12g}")

    payload = [
        {
            "t": number(r.t),
            "a": number(r.a),
            "value": number(r.value_numeric),
            "value_closed": number(r.value_closed),
            "abs_err": number(r.abs_err),
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"
