import csv
import io
import subprocess
import sys

import pytest

from interception import cli
from interception.errors import DomainError


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_sample_planar(capsys):
    code, out, _ = _run(capsys, "sample", "planar_interception", "--range", "0", "10", "--n", "100")
    assert code == 0
    rows = _rows(out)
    assert rows[0] == ["p", "x", "y", "theta", "pq"]
    xs = [float(r[1]) for r in rows[1:]]
    assert len(xs) == 100
    assert all(a < b for a, b in zip(xs, xs[1:]))


def test_sample_pursuit_gap(capsys):
    code, out, _ = _run(capsys, "sample", "pursuit", "--range", "0", "0.9", "--n", "10")
    assert code == 0
    rows = _rows(out)
    assert float(rows[-1][rows[0].index("gap")]) == pytest.approx(0.505, abs=1e-12)


@pytest.mark.parametrize("curve", sorted(cli.CURVES))
def test_sample_two_points_are_endpoints(curve):
    lo, hi = cli.CURVES[curve][0]
    samples = cli.sample_curve(curve, None, 2)
    assert len(samples.rows) == 2
    assert samples.meta["range"] == (lo, hi)
    assert samples.rows[0][0] == lo and samples.rows[-1][0] == hi
    text = samples.to_csv()
    # 17 significant digits round-trip exactly
    assert [tuple(map(float, r)) for r in _rows(text)[1:]] == samples.rows


def test_sample_bad_range(capsys):
    code, _, err = _run(capsys, "sample", "pursuit", "--range", "0", "1.0")
    assert code == 2 and "invalid range" in err
    with pytest.raises(DomainError):
        cli.sample_curve("helix", (1.0, 0.0), 5)
    with pytest.raises(DomainError):
        cli.sample_curve("helix", None, 1)


def test_sample_to_file_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert cli.main(["sample", "stereographic_image", "--n", "50", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_unwritable_output(capsys, tmp_path):
    code, _, err = _run(capsys, "sample", "helix", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and err.startswith("error:")


def test_verify_planar(capsys):
    code, out, _ = _run(capsys, "verify", "planar")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "name,residual,tolerance,status"
    names = [line.split(",")[0] for line in lines[1:-1]]
    for part in ("UP=OU+TQ", "(1-x)UP=TQ", "x*PT=TQ", "sinQPT=OP*sin^2TQP"):
        assert any(part in n for n in names)
    assert all(line.rsplit(",", 1)[1] in {"PASS", "FAIL"} for line in lines[1:-1])


def test_verify_lemmas_reports_monte_carlo(capsys):
    code, out, _ = _run(capsys, "verify", "lemmas")
    names = [line.split(",")[0] for line in out.splitlines()[1:-1]]
    assert any("lemma1" in n for n in names) and any("lemma3" in n for n in names)
    failed = any(line.endswith(",FAIL") for line in out.splitlines())
    assert code == (1 if failed else 0)


def test_limits(capsys):
    code, out, _ = _run(capsys, "limits")
    rows = {r[0]: r for r in _rows(out)[1:]}
    assert float(rows["B^2"][1]) == pytest.approx(0.3588850048, abs=1e-9)
    assert float(rows["lim_PQ_pursuit"][1]) == 0.5
    assert float(rows["B^2*4G^2-1"][3]) < 1e-10
    assert code == 0


def test_limits_tol_flag(capsys):
    code, out, _ = _run(capsys, "limits", "--tol", "1e-12")
    assert code == 1
    assert _rows(out)[7][-1] == "FAIL"


def test_compare(capsys):
    code, out, _ = _run(capsys, "compare")
    rows = {r[0]: r for r in _rows(out)[1:]}
    assert code == 0
    assert float(rows["pursuit"][1]) == 0.5
    assert float(rows["interception"][1]) < 0.5
    assert rows["interception_beats_pursuit"][1] == "True"


@pytest.mark.parametrize("fig", ["fig1", "fig2", "fig3", "fig4"])
def test_plot_deterministic(tmp_path, fig):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert cli.main(["plot", fig, "--out", str(a)]) == 0
    assert cli.main(["plot", fig, "--out", str(b)]) == 0
    text = a.read_text()
    assert text == b.read_text()
    assert text.startswith("<svg") and 'viewBox="0 0 800 600"' in text


def test_fig1_paths(tmp_path):
    out = tmp_path / "f.svg"
    cli.main(["plot", "fig1", "--out", str(out)])
    text = out.read_text()
    assert text.count("<path") >= 4
    assert "#1f4fd1" in text  # blue curve


def test_fig2_two_panels(tmp_path):
    out = tmp_path / "f.svg"
    cli.main(["plot", "fig2", "--out", str(out)])
    assert out.read_text().count("<clipPath") == 2


def test_fig4_asymptote_line():
    fig = cli.FIGURES["fig4"]()
    plane = fig.panels[1]
    y_px = plane.to_px(0.0, 2.0)[1]
    horizontal = [e for e in plane.elements if "#e6c300" in e]
    assert len(horizontal) == 1
    assert f",{y_px:.2f} L " in horizontal[0]


def test_bad_arguments_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "interception", "plot", "fig9"], capture_output=True, text=True
    )
    assert proc.returncode == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "interception", "compare"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.startswith("strategy,limit_gap,note")
