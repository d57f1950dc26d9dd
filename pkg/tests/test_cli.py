import io

import pytest

from incdfs.bench import read_csv
from incdfs.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBenchCommand:
    def test_csv_to_stdout(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--algo", "sdfs", "--n", "12", "--m", "30",
            "--sample-every", "10",
        )
        assert code == 0
        rows = read_csv(io.StringIO(out))
        assert rows[-1].m == 30

    def test_csv_to_file(self, tmp_path, capsys):
        out = tmp_path / "r.csv"
        code, _, _ = run_cli(
            capsys, "bench", "--algo", "adfs2", "--n", "20", "--m", "50",
            "--sample-every", "50", "--out", str(out),
        )
        assert code == 0
        with open(out) as fh:
            rows = read_csv(fh)
        assert len(rows) == 1 and rows[0].m == 50

    def test_directed_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "bench", "--algo", "fdfs", "--mode", "dag", "--n", "16",
            "--m", "40", "--sample-every", "40",
        )
        assert code == 0
        assert read_csv(io.StringIO(out))[-1].pc == 0.0


class TestBroomstickCommand:
    def test_reports_prediction(self, capsys):
        code, out, err = run_cli(
            capsys, "broomstick", "--algo", "sdfs2", "--n", "60", "--m", "600",
            "--sample-every", "100",
        )
        assert code == 0
        assert "predicted l_s>=" in err
        assert "measured l_s=" in err


class TestWorstcaseCommand:
    @pytest.mark.parametrize("algo,n,m", [
        ("adfs1", 64, 256), ("adfs2", 64, 256), ("fdfs", 32, 100),
        ("sdfs3", 64, 128),
    ])
    def test_families_run(self, capsys, algo, n, m):
        code, out, err = run_cli(
            capsys, "worstcase", "--algo", algo, "--n", str(n), "--m", str(m),
            "--sample-every", "1000",
        )
        assert code == 0
        assert "worstcase-" in err and "total=" in err

    def test_unknown_family(self, capsys):
        code, _, err = run_cli(capsys, "worstcase", "--algo", "sdfs")
        assert code == 2


class TestStreamCommand:
    def test_undirected_stream(self, capsys):
        code, out, _ = run_cli(
            capsys, "stream", "--n", "80", "--m", "800",
        )
        assert code == 0
        assert "peak_retained=" in out

    def test_directed_stream_scc_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "stream", "--mode", "directed", "--n", "50", "--m", "400",
        )
        assert code == 0
        assert "oracle_match=True" in out


class TestValidateCommand:
    @pytest.mark.parametrize("algo,mode", [
        ("sdfs", "undirected"), ("sdfs-int", "directed"), ("adfs1", "undirected"),
        ("sdfs2", "directed"), ("sdfs3", "undirected"), ("fdfs", "dag"),
    ])
    def test_algorithms_validate(self, capsys, algo, mode):
        code, out, _ = run_cli(
            capsys, "validate", "--algo", algo, "--mode", mode, "--n", "25",
            "--m", "90", "--seed", "3", "--sample-every", "10",
        )
        assert code == 0
        assert out.startswith("valid:")

    def test_dataset_input(self, tmp_path, capsys):
        path = tmp_path / "ds.txt"
        path.write_text("1 2\n2 3\n3 1\n1 4\n")
        code, out, _ = run_cli(
            capsys, "validate", "--algo", "sdfs", "--dataset", str(path),
        )
        assert code == 0
