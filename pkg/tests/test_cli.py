"""End-to-end CLI behaviour through main(argv): output, formats, exit codes."""

import numpy as np
import pytest

from abelianfft import fourier
from abelianfft.cli import main
from abelianfft.vecio import loads_json_vector, read_vector, write_vector

p = pytest.mark.parametrize


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def v6(tmp_path):
    path = tmp_path / "v6.json"
    write_vector(str(path), np.arange(1.0, 7.0))
    return str(path)


@pytest.fixture
def delta6(tmp_path):
    path = tmp_path / "d6.json"
    write_vector(str(path), [0.0, 1.0, 0.0, 0.0, 0.0, 0.0])
    return str(path)


class TestTransform:
    def test_analysis_then_synthesis_roundtrips(self, tmp_path, capsys, rng):
        x = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        src = tmp_path / "x.json"
        mid = tmp_path / "y.json"
        out = tmp_path / "z.json"
        write_vector(str(src), x)
        code, _, _ = run(capsys, "transform", "Z8", str(src), "-o", str(mid))
        assert code == 0
        code, _, _ = run(
            capsys, "transform", "Z8", str(mid), "--direction", "synthesis", "-o", str(out)
        )
        assert code == 0
        assert np.max(np.abs(read_vector(str(out)) - x)) < 1e-10

    def test_fast_and_naive_engines_agree(self, tmp_path, capsys, rng):
        x = rng.standard_normal(12)
        src = tmp_path / "x.json"
        write_vector(str(src), x)
        outs = []
        for engine in ("fast", "naive"):
            dst = tmp_path / f"{engine}.json"
            code, out, _ = run(
                capsys, "transform", "Z12", str(src), "--engine", engine, "-o", str(dst)
            )
            assert code == 0
            assert f"engine={engine}" in out
            outs.append(read_vector(str(dst)))
        assert np.max(np.abs(outs[0] - outs[1])) < 1e-10

    def test_stdout_carries_data_and_stderr_the_info_line(self, tmp_path, capsys):
        src = tmp_path / "x.json"
        write_vector(str(src), [1.0, 0.0, 0.0, 0.0])
        code, out, err = run(capsys, "transform", "Z4", str(src), "--direction", "synthesis")
        assert code == 0
        assert loads_json_vector(out).tolist() == [1.0, 1.0, 1.0, 1.0]
        assert "normalization=F" in err

    def test_analysis_info_mentions_normalization(self, tmp_path, capsys):
        src = tmp_path / "x.json"
        write_vector(str(src), np.ones(4))
        _, _, err = run(capsys, "transform", "Z4", str(src))
        assert "normalization=(1/4) F*" in err

    def test_byte_identical_across_runs(self, tmp_path, capsys, rng):
        src = tmp_path / "x.json"
        write_vector(str(src), rng.standard_normal(16))
        _, out1, _ = run(capsys, "transform", "Z16", str(src))
        _, out2, _ = run(capsys, "transform", "Z16", str(src))
        assert out1 == out2


class TestConvolve:
    def test_shifted_delta_permutes(self, v6, delta6, capsys):
        code, out, err = run(capsys, "convolve", "Z3xZ2", v6, delta6)
        assert code == 0
        assert "kernel=separable" in err
        got = loads_json_vector(out)
        assert np.max(np.abs(got - np.array([2.0, 1.0, 4.0, 3.0, 6.0, 5.0]))) < 1e-12

    def test_kernel_choice_reported(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        write_vector(str(a), np.ones(8))
        _, _, err = run(capsys, "convolve", "Z8", str(a), str(a))
        assert "kernel=radix2" in err
        _, _, err = run(capsys, "convolve", "Z8", str(a), str(a), "--engine", "naive")
        assert "kernel=naive" in err

    def test_engines_agree(self, v6, delta6, tmp_path, capsys, rng):
        b = tmp_path / "b.json"
        write_vector(str(b), rng.standard_normal(6))
        results = []
        for engine in ("fast", "naive"):
            code, out, _ = run(capsys, "convolve", "Z3xZ2", v6, str(b), "--engine", engine)
            assert code == 0
            results.append(loads_json_vector(out))
        assert np.max(np.abs(results[0] - results[1])) < 1e-10


class TestCharacters:
    def test_z4_table_pinned(self, capsys):
        code, out, _ = run(capsys, "characters", "Z4")
        assert code == 0
        assert out.splitlines() == [
            "chi(0): 1+0i  1+0i  1+0i  1+0i",
            "chi(1): 1+0i  0+1i  -1+0i  -0-1i",
            "chi(2): 1+0i  -1+0i  1+0i  -1+0i",
            "chi(3): 1+0i  -0-1i  -1+0i  0+1i",
        ]

    def test_single_element_of_product_group(self, capsys):
        code, out, _ = run(capsys, "characters", "Z3xZ2", "--element", "1,1")
        assert code == 0
        assert out.strip() == (
            "chi(1,1): 1+0i  -1+0i  -0.5+0.866025i  0.5-0.866025i  "
            "-0.5-0.866025i  0.5+0.866025i"
        )

    def test_porcelain_is_tab_separated(self, capsys):
        _, out, _ = run(capsys, "characters", "Z2", "--porcelain")
        assert out.splitlines() == ["0\t1+0i\t1+0i", "1\t1+0i\t-1+0i"]

    def test_bad_element_label(self, capsys):
        code, _, err = run(capsys, "characters", "Z4", "--element", "one")
        assert code == 2
        assert "error" in err


class TestCirculant:
    def test_materialize_rows(self, v6, capsys):
        code, out, _ = run(capsys, "circulant", "Z3xZ2", v6, "materialize")
        assert code == 0
        first = out.splitlines()[0]
        assert first == "1+0i  2+0i  5+0i  6+0i  3+0i  4+0i"

    def test_materialize_to_file_is_parseable_json(self, v6, tmp_path, capsys):
        dst = tmp_path / "m.json"
        code, out, _ = run(capsys, "circulant", "Z3xZ2", v6, "materialize", "-o", str(dst))
        assert code == 0
        assert "wrote 6x6 matrix" in out
        import json

        rows = json.loads(dst.read_text())
        mat = np.array([[complex(re, im) for re, im in row] for row in rows])
        assert np.array_equal(mat[:, 0], np.arange(1.0, 7.0))

    def test_blocks_listing(self, v6, capsys):
        code, out, _ = run(capsys, "circulant", "Z3xZ2", v6, "blocks")
        assert code == 0
        assert out.splitlines() == [
            "C_0 over Z2: 1+0i  2+0i",
            "C_1 over Z2: 3+0i  4+0i",
            "C_2 over Z2: 5+0i  6+0i",
        ]

    def test_spectrum_file_matches_library(self, v6, tmp_path, capsys):
        dst = tmp_path / "lam.json"
        code, _, _ = run(capsys, "circulant", "Z3xZ2", v6, "spectrum", "-o", str(dst))
        assert code == 0
        lam = read_vector(str(dst))
        want = fourier.g_circulant_eigenvalues("Z3xZ2", np.arange(1.0, 7.0))
        assert np.array_equal(lam, want)

    def test_check_passes(self, v6, capsys):
        code, out, _ = run(capsys, "circulant", "Z3xZ2", v6, "check")
        assert code == 0
        assert "PASS" in out


class TestVerifySubcommand:
    def test_core_scope_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "core")
        assert code == 0
        assert "all 4 checks passed" in out

    def test_porcelain_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "core", "--porcelain")
        assert code == 0
        lines = [l.split("\t") for l in out.splitlines() if l]
        assert len(lines) == 4
        for fields in lines:
            assert fields[0] == "core"
            assert fields[2] in ("ok", "fail", "warn")


class TestExitCodes:
    def test_parse_error_is_3(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("[1, 2")
        code, _, err = run(capsys, "transform", "Z2", str(bad))
        assert code == 3
        assert "error" in err

    def test_dimension_error_is_2(self, tmp_path, capsys):
        src = tmp_path / "x.json"
        write_vector(str(src), [1.0, 2.0, 3.0])
        code, _, _ = run(capsys, "transform", "Z4", str(src))
        assert code == 2

    def test_bad_group_spec_is_2(self, tmp_path, capsys):
        src = tmp_path / "x.json"
        write_vector(str(src), [1.0])
        code, _, _ = run(capsys, "transform", "Zx", str(src))
        assert code == 2

    def test_cap_exceeded_is_4(self, tmp_path, capsys):
        src = tmp_path / "x.json"
        write_vector(str(src), np.ones(8))
        code, _, _ = run(
            capsys, "circulant", "Z8", str(src), "materialize", "--oracle-cap", "4"
        )
        assert code == 4

    def test_missing_file_is_3(self, tmp_path, capsys):
        code, _, _ = run(capsys, "transform", "Z2", str(tmp_path / "nope.json"))
        assert code == 3

    def test_usage_errors_are_2(self, capsys):
        assert run(capsys, "transform")[0] == 2
        assert run(capsys)[0] == 2
        assert run(capsys, "no-such-command")[0] == 2

    def test_help_is_0(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_bench_exponent_out_of_range_is_2(self, capsys):
        code, _, _ = run(capsys, "bench", "--max-exponent", "25")
        assert code == 2

    def test_format_override(self, tmp_path, capsys):
        src = tmp_path / "vec.txt"
        src.write_text("1,0\n2,0\n")
        code, out, _ = run(
            capsys, "transform", "Z2", str(src), "--direction", "synthesis", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["3,0", "-1,0"]
