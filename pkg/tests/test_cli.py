import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from interpfit import SampleSet, lagrange_eval, natural_cubic_spline, newton_build
from interpfit.cli import main, read_points

from test_chebyshev import RUNGE_CHEB_10, RUNGE_EQUI_10


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def parse_csv(text):
    rows = [line for line in text.splitlines() if line and not line.startswith("#")]
    return np.array([[float(v) for v in r.split(",")] for r in rows[1:]])


class TestInterp:
    def test_newton_grid(self, write):
        f = write("two_points.csv", "0,0\n1,2\n")
        code, out, err = run("interp", "--method", "newton", "--input", f, "--grid", "0:1:3")
        assert code == 0
        assert out == "x,y\n0.0,0.0\n0.5,1.0\n1.0,2.0\n"
        assert err == ""

    def test_spline_on_line(self, write):
        f = write("line.csv", "x,y\n0,0\n1,2\n2,4\n")
        code, out, _ = run("interp", "--method", "spline", "--input", f, "--grid", "0:2:5")
        assert code == 0
        assert out == "x,y\n0.0,0.0\n0.5,1.0\n1.0,2.0\n1.5,3.0\n2.0,4.0\n"

    def test_hermite_smoothstep(self, write):
        f = write("smoothstep.csv", "0,0,0\n1,1,0\n")
        code, out, _ = run("interp", "--method", "hermite", "--input", f, "--at", "0.5")
        assert code == 0
        assert out == "x,y\n0.5,0.5\n"

    @pytest.mark.parametrize("method", ["lagrange", "newton", "neville"])
    def test_polynomial_methods_agree(self, write, method):
        f = write("quad.csv", "0,1\n1,3\n2,7\n")
        code, out, _ = run("interp", "--method", method, "--input", f, "--at", "-1,0.5,3")
        assert code == 0
        np.testing.assert_allclose(parse_csv(out)[:, 1], [1, 1.75, 13], atol=1e-12)

    def test_negative_grid_start_and_extrapolation_warning(self, write):
        f = write("line.csv", "0,0\n1,2\n2,4\n")
        code, out, err = run("interp", "--method", "spline", "--input", f, "--grid", "-1:3:3")
        assert code == 0
        assert out == "x,y\n-1.0,-2.0\n1.0,2.0\n3.0,6.0\n"
        assert err.startswith("warning: 2 point(s) outside")

    def test_json_newton(self, write):
        f = write("quad.csv", "0,1\n1,3\n2,7\n")
        code, out, _ = run("interp", "--method", "newton", "--input", f, "--json")
        assert code == 0
        assert out == '{"method": "newton", "centers": [0.0, 1.0], "coefficients": [1.0, 2.0, 1.0]}\n'

    def test_json_spline(self, write):
        f = write("hat.csv", "0,0\n1,1\n2,0\n")
        code, out, _ = run("interp", "--method", "spline", "--input", f, "--json")
        obj = json.loads(out)
        assert list(obj) == ["method", "knots", "a", "b", "c", "d"]
        s = natural_cubic_spline(SampleSet([0, 1, 2], [0, 1, 0]))
        assert obj["c"] == s.c.tolist() and obj["b"] == s.b.tolist() and obj["d"] == s.d.tolist()

    def test_json_key_order_other_methods(self, write):
        f2 = write("p.csv", "0,1\n1,3\n")
        f3 = write("h.csv", "0,1,0\n1,3,1\n")
        assert list(json.loads(run("interp", "--method", "lagrange", "--input", f2, "--json")[1])) == [
            "method", "nodes", "values"]
        assert list(json.loads(run("interp", "--method", "hermite", "--input", f3, "--json")[1])) == [
            "method", "nodes", "values", "derivatives"]

    def test_round_trip_is_exact(self, write, rng):
        x = np.sort(rng.uniform(-1, 1, 7))
        y = rng.normal(size=7)
        f = write("r.csv", "".join(f"{float(a)!r},{float(b)!r}\n" for a, b in zip(x, y)))
        _, out, _ = run("interp", "--method", "newton", "--input", f, "--grid", "-1:1:41")
        back = parse_csv(out)
        p = newton_build(SampleSet(x, y))
        assert back[:, 1].tolist() == p(np.linspace(-1, 1, 41)).tolist()


class TestExitCodes:
    def test_wrong_arity_for_hermite(self, write):
        f = write("two.csv", "0,0\n1,1\n")
        code, out, err = run("interp", "--method", "hermite", "--input", f, "--at", "0.5")
        assert (code, out) == (2, "")
        assert err.startswith("interpfit: error:") and err.count("\n") == 1

    def test_ragged_rows(self, write):
        f = write("bad.csv", "0,0\n1,1,1\n")
        assert run("interp", "--method", "lagrange", "--input", f, "--at", "0")[0] == 2

    def test_non_numeric_and_non_finite(self, write):
        assert run("interp", "--method", "lagrange", "--input", write("a.csv", "x,y\n0,abc\n"), "--at", "0")[0] == 2
        assert run("interp", "--method", "lagrange", "--input", write("b.csv", "0,nan\n"), "--at", "0")[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("interp", "--method", "lagrange", "--input", str(tmp_path / "nope.csv"), "--at", "0")[0] == 2

    def test_bad_grid(self, write):
        f = write("two.csv", "0,0\n1,1\n")
        assert run("interp", "--method", "newton", "--input", f, "--grid", "1:0:3")[0] == 2
        assert run("interp", "--method", "newton", "--input", f, "--grid", "0:1")[0] == 2
        assert run("interp", "--method", "newton", "--input", f)[0] == 2

    def test_bad_flags(self):
        assert run("interp", "--method", "cubic", "--input", "x.csv")[0] == 2
        assert run("demo", "runge", "--degree", "0")[0] == 2
        assert run("demo", "runge", "--degree", "3", "--nodes", "random")[0] == 2

    def test_duplicate_nodes(self, write):
        f = write("dup.csv", "0,1\n0,2\n")
        code, out, _ = run("interp", "--method", "spline", "--input", f, "--grid", "0:1:3")
        assert (code, out) == (3, "")

    def test_too_few_points_for_spline(self, write):
        assert run("interp", "--method", "spline", "--input", write("one.csv", "0,1\n"), "--at", "0")[0] == 2

    def test_singular_fit(self, write):
        f = write("sing.csv", "1,1,1\n2,2,2\n3,3,5\n4,4,4\n")
        code, out, _ = run("fit", "--model", "multilinear", "--input", f)
        assert (code, out) == (4, "")
        assert run("fit", "--model", "line", "--input", write("v.csv", "1,1\n1,2\n"))[0] == 4

    def test_non_positive(self, write):
        f = write("neg.csv", "0,1\n1,-2\n")
        assert run("fit", "--model", "exp", "--input", f)[0] == 5
        assert run("fit", "--model", "power", "--input", write("x0.csv", "0,1\n1,2\n"))[0] == 5

    def test_bad_interval(self):
        assert run("nodes", "--n", "2", "--interval", "1,1")[0] == 2
        assert run("nodes", "--n", "2", "--interval", "1")[0] == 2


class TestFit:
    def test_line(self, write):
        f = write("l.csv", "0,1\n1,3\n2,5\n")
        code, out, _ = run("fit", "--model", "line", "--input", f)
        assert code == 0
        assert out == '{"model": "line", "theta": [1.0, 2.0], "sse": 0.0, "n_samples": 3}\n'

    def test_exp(self, write):
        x = np.array([0.0, 1.0, 2.0])
        f = write("e.csv", "".join(f"{float(a)!r},{float(b)!r}\n" for a, b in zip(x, 2 * np.exp(0.5 * x))))
        code, out, _ = run("fit", "--model", "exp", "--input", f)
        obj = json.loads(out)
        assert code == 0 and list(obj) == ["model", "theta", "sse", "n_samples"]
        assert obj["theta"] == pytest.approx([0.5, 2.0], abs=1e-9)
        assert obj["sse"] == pytest.approx(0.0, abs=1e-18)

    def test_multilinear_table2(self, write):
        f = write(
            "loans.csv",
            "income,age,credit,value\n3000,33,5,4500\n6500,30,2,12000\n3500,31,4,8500\n2800,28,5,4000\n",
        )
        code, out, _ = run("fit", "--model", "multilinear", "--input", f)
        obj = json.loads(out)
        assert code == 0 and obj["n_samples"] == 4
        np.testing.assert_allclose(obj["theta"], [1593000 / 47, -120 / 47, 9500 / 47, -267000 / 47], rtol=1e-6)


class TestDemoRunge:
    def _summary(self, out):
        last = out.splitlines()[-1]
        assert last.startswith("# max_err=")
        err, loc = last[len("# max_err="):].split(" at x=")
        return float(err), float(loc)

    def test_chebyshev_beats_equispaced(self):
        _, equi, _ = run("demo", "runge", "--degree", "10", "--nodes", "equispaced")
        _, cheb, _ = run("demo", "runge", "--degree", "10", "--nodes", "chebyshev")
        e, _ = self._summary(equi)
        c, _ = self._summary(cheb)
        assert c < e
        assert e == pytest.approx(RUNGE_EQUI_10, rel=1e-6)
        assert c == pytest.approx(RUNGE_CHEB_10, rel=1e-6)
        assert equi.splitlines()[0] == "x,f,p,abs_err"
        assert len(equi.splitlines()) == 2001 + 2

    @pytest.mark.parametrize("kind", ["equispaced", "chebyshev"])
    def test_degree_one_is_chord(self, kind):
        _, out, _ = run("demo", "runge", "--degree", "1", "--nodes", kind, "--grid-size", "201")
        data = parse_csv(out)
        x, f, p, e = data.T
        node = 1.0 if kind == "equispaced" else math.sqrt(2) / 2
        chord = 1 / (1 + 25 * node * node)  # symmetric nodes: the chord is constant
        np.testing.assert_allclose(p, chord, atol=1e-15)
        err, loc = self._summary(out)
        assert err == pytest.approx(1 - chord, abs=1e-15) and loc == 0.0
        np.testing.assert_allclose(e, np.abs(f - p), atol=0)

    def test_f_at_zero(self):
        _, out, _ = run("demo", "runge", "--degree", "4", "--grid-size", "5")
        rows = parse_csv(out)
        assert rows[2, 0] == 0.0 and rows[2, 1] == 1.0

    def test_deterministic(self):
        a = run("demo", "runge", "--degree", "6", "--nodes", "chebyshev", "--grid-size", "101")
        b = run("demo", "runge", "--degree", "6", "--nodes", "chebyshev", "--grid-size", "101")
        assert a == b


class TestNodes:
    def test_examples(self):
        assert run("nodes", "--n", "1", "--interval", "-1,1")[1] == "-0.7071067811865476\n0.7071067811865476\n"
        assert run("nodes", "--n", "0", "--interval", "-1,1")[1] == "0.0\n"
        lo, hi = (float(v) for v in run("nodes", "--n", "1", "--interval", "0,10")[1].split())
        h = 5 * math.sqrt(2) / 2
        assert lo == pytest.approx(5 - h, abs=1e-14) and hi == pytest.approx(5 + h, abs=1e-14)

    def test_ascending(self):
        vals = [float(v) for v in run("nodes", "--n", "9", "--interval", "-3,2")[1].split()]
        assert vals == sorted(vals) and len(vals) == 10


def test_read_points_header_detection(write):
    assert read_points(write("h.csv", "x,y\n1,2\n")).tolist() == [[1, 2]]
    assert read_points(write("n.csv", "1,2\n3,4\n\n")).tolist() == [[1, 2], [3, 4]]


def test_module_entry_point(write):
    f = write("two.csv", "0,0\n1,2\n")
    proc = subprocess.run(
        [sys.executable, "-m", "interpfit", "interp", "--method", "lagrange", "--input", f, "--grid", "0:1:3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "x,y\n0.0,0.0\n0.5,1.0\n1.0,2.0\n"


def test_lagrange_cli_matches_library(write, rng):
    x = np.sort(rng.uniform(-1, 1, 5))
    y = rng.normal(size=5)
    f = write("r.csv", "".join(f"{float(a)!r},{float(b)!r}\n" for a, b in zip(x, y)))
    out = run("interp", "--method", "lagrange", "--input", f, "--grid", "-1:1:11")[1]
    assert parse_csv(out)[:, 1].tolist() == lagrange_eval(SampleSet(x, y), np.linspace(-1, 1, 11)).tolist()
