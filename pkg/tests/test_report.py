import pytest

from dirac2d import report
from dirac2d.quantum_numbers import PhysicalParams, validate_state


@pytest.mark.parametrize(
    "x, text",
    [(0.4999733729, "0.49997337"), (-2.95856611e-6, "2.9586[-6]"), (1.0651e-6, "1.0651[-6]"), (1.5, "1.50000000")],
)
def test_format_shift(x, text):
    assert report.format_shift(x) == text


def test_format_nonrel():
    assert report.format_nonrel(0.0) == "0"
    assert report.format_nonrel(1.0) == "±1"
    assert report.format_nonrel(-0.5) == "∓0.5"


def test_record_rounding():
    q = validate_state(2, "-1/2", "1/2")
    rec = report.make_record(q, -0.2222340570546738832, -2.958566110493861e-06, 0.0)
    assert rec.energy == -0.222234057055
    assert rec.shift_e1 == -2.95856611049e-06
    assert (rec.label, rec.kappa, rec.mu, rec.n_prime, rec.l) == ("2p1/2", "-1/2", "1/2", 1, 1)


def test_shift_record_order():
    recs = report.shift_records(3, PhysicalParams())
    keys = [(r.n_prime, abs(int(r.kappa.split("/")[0])), r.kappa, r.mu) for r in recs]
    assert [k[:2] for k in keys] == sorted(k[:2] for k in keys)
    assert recs[0].label == "1s1/2" and recs[0].mu == "1/2" and recs[1].mu == "-1/2"


def test_empty_cells_roundtrip():
    recs = report.level_records(2, PhysicalParams())
    text = report.to_csv(recs)
    # mu, shift_e1 and shift_nonrel are null for level rows
    first = text.splitlines()[1].split(",")
    assert first[report.FIELDS.index("mu")] == "" and first[-2:] == ["", ""]
    assert report.from_csv(text) == recs
