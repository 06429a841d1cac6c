"""Output records and their CSV / JSON / text renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .magnetic import shift_closed, shift_nonrel
from .quantum_numbers import (
    PhysicalParams,
    QuantumNumbers,
    enumerate_states,
    format_half,
    spectroscopic_label,
    table_order,
)
from .spectrum import energy

ENERGY_DECIMALS = 12
SHIFT_DIGITS = 12


@dataclass(frozen=True)
class OutputRecord:
    label: str
    n: int
    n_prime: int
    kappa: str
    mu: str | None
    l: int  # noqa: E741
    energy: float
    shift_e1: float | None = None
    shift_nonrel: float | None = None


FIELDS = [f.name for f in fields(OutputRecord)]


def _round_shift(x: float | None) -> float | None:
    return None if x is None else float(f"{x:.{SHIFT_DIGITS}g}")


def make_record(
    qn: QuantumNumbers,
    E: float,
    e1: float | None = None,
    e_nonrel: float | None = None,
    with_mu: bool = True,
) -> OutputRecord:
    return OutputRecord(
        label=spectroscopic_label(qn),
        n=qn.n,
        n_prime=qn.n_prime,
        kappa=format_half(qn.two_kappa),
        mu=format_half(qn.two_mu) if with_mu else None,
        l=qn.l,
        energy=round(E, ENERGY_DECIMALS),
        shift_e1=_round_shift(e1),
        shift_nonrel=_round_shift(e_nonrel),
    )


def level_states(n_max: int, params: PhysicalParams) -> list[QuantumNumbers]:
    """One representative (mu = |kappa|) per (n, kappa) level, in table order."""
    return [q for q in table_order(enumerate_states(n_max, params)) if q.two_mu > 0]


def level_records(n_max: int, params: PhysicalParams) -> list[OutputRecord]:
    return [make_record(q, energy(q, params).E, with_mu=False) for q in level_states(n_max, params)]


def shift_records(n_max: int, params: PhysicalParams) -> list[OutputRecord]:
    """Every state with its closed-form E1 and the Pauli limit, ordered by (n', |kappa|, -kappa, -mu)."""
    states = sorted(
        enumerate_states(n_max, params),
        key=lambda q: (q.n_prime, abs(q.two_kappa), -q.two_kappa, -q.two_mu),
    )
    return [
        make_record(q, energy(q, params).E, shift_closed(q, params).E1, shift_nonrel(q)) for q in states
    ]


# ---------------------------------------------------------------------------
# machine-readable renderings


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(records: list[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rec in records:
        writer.writerow([_csv_cell(getattr(rec, f)) for f in FIELDS])
    return buf.getvalue()


def to_json(records: list[OutputRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"


def from_csv(text: str) -> list[OutputRecord]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        out.append(
            OutputRecord(
                label=row["label"],
                n=int(row["n"]),
                n_prime=int(row["n_prime"]),
                kappa=row["kappa"],
                mu=row["mu"] or None,
                l=int(row["l"]),
                energy=float(row["energy"]),
                shift_e1=float(row["shift_e1"]) if row["shift_e1"] else None,
                shift_nonrel=float(row["shift_nonrel"]) if row["shift_nonrel"] else None,
            )
        )
    return out


def from_json(text: str) -> list[OutputRecord]:
    return [OutputRecord(**obj) for obj in json.loads(text)]


# ---------------------------------------------------------------------------
# printed tables


def format_shift(x: float) -> str:
    """Magnitude as printed in the shift table: 8 decimals, or 'm.mmmm[e]' below 1e-3."""
    x = abs(x)
    if x >= 1e-3 or x == 0.0:
        return f"{x:.8f}"
    mantissa, exponent = f"{x:.4e}".split("e")
    return f"{mantissa}[{int(exponent)}]"


def _signed_pair(upper: float) -> str:
    """'±' when the mu = +|kappa| value is positive, '∓' when negative."""
    return ("±" if upper >= 0 else "∓")


def format_nonrel(x: float) -> str:
    if x == 0:
        return "0"
    return f"{_signed_pair(x)}{abs(x):g}"


def render_levels_text(records: list[OutputRecord]) -> str:
    lines = [f"{'n':>2} {'nprime':>6} {'kappa':>6} {'l':>2}  {'state':<7} {'energy':>16}"]
    for r in records:
        lines.append(
            f"{r.n:>2} {r.n_prime:>6} {r.kappa:>6} {r.l:>2}  {r.label:<7} {r.energy:>16.{ENERGY_DECIMALS}f}"
        )
    return "\n".join(lines) + "\n"


def render_table1(params: PhysicalParams | None = None) -> str:
    return render_levels_text(level_records(3, params or PhysicalParams()))


def render_table2(params: PhysicalParams | None = None) -> str:
    params = params or PhysicalParams()
    lines = [f"{'nprime':>6} {'kappa':>6}  {'state':<7} {'E1':>14} {'E1_nonrel':>10}"]
    for q in sorted(level_states(3, params), key=lambda q: (q.n_prime, abs(q.two_kappa), -q.two_kappa)):
        e1 = shift_closed(q, params).E1
        e1_text = _signed_pair(e1) + format_shift(e1)
        lines.append(
            f"{q.n_prime:>6} {format_half(q.two_kappa):>6}  {spectroscopic_label(q):<7} "
            f"{e1_text:>14} {format_nonrel(shift_nonrel(q)):>10}"
        )
    return "\n".join(lines) + "\n"


def render_shift_text(records: list[OutputRecord]) -> str:
    lines = [f"{'state':<7} {'kappa':>6} {'mu':>6} {'energy':>16} {'E1':>16} {'E1_nonrel':>10}"]
    for r in records:
        e1 = "" if r.shift_e1 is None else f"{r.shift_e1:.8g}"
        nr = "" if r.shift_nonrel is None else f"{r.shift_nonrel:g}"
        lines.append(f"{r.label:<7} {r.kappa:>6} {r.mu or '':>6} {r.energy:>16.{ENERGY_DECIMALS}f} {e1:>16} {nr:>10}")
    return "\n".join(lines) + "\n"
