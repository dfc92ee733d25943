import json
import subprocess
import sys

import pytest

from rulemeasures.cli import run


FIXTURE = "a b\na b\na c\n"


@pytest.fixture(scope="module")
def matrix_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "matrix.csv"
    assert run(["properties", "matrix", "--nmax", "12",
                "--out", str(path)]) == 0
    return path


def test_measures_eval_single(capsys):
    assert run(["measures", "eval", "--table", "40,10,20,30",
                "--measure", "confidence"]) == 0
    assert capsys.readouterr().out.strip() == "0.8"


def test_measures_eval_all_json(capsys):
    assert run(["measures", "eval", "--table", "40,10,20,30",
                "--format", "json"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["Confidence"] == "0.8"
    assert len(blob) == 60          # every context-free measure


def test_measures_list(capsys):
    assert run(["measures", "list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "id,name"
    assert len(lines) == 62


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 1


def test_input_error_exits_one(capsys):
    assert run(["measures", "eval", "--table", "1,2,3"]) == 1
    assert "error:" in capsys.readouterr().err


def test_matrix_then_encode_has_39_columns(matrix_csv, tmp_path):
    out = tmp_path / "enc.csv"
    assert run(["encode", "--matrix", str(matrix_csv),
                "--out", str(out)]) == 0
    header = out.read_text().splitlines()[0].split(",")
    assert len(header) == 40        # measure column + 39 indicators


def test_cluster_ahc_cut(matrix_csv, tmp_path):
    labels = tmp_path / "labels.csv"
    dend = tmp_path / "dend.json"
    assert run(["cluster", "ahc", "--matrix", str(matrix_csv), "--cut", "8",
                "--out", str(labels), "--dendrogram", str(dend)]) == 0
    rows = labels.read_text().strip().splitlines()[1:]
    assert len(rows) == 61
    assert len({r.rsplit(",", 1)[1] for r in rows}) == 8
    tree = json.loads(dend.read_text())
    assert len(tree["merges"]) == 60


def test_cluster_ahc_byte_identical_across_jobs(matrix_csv, tmp_path):
    outs = []
    for tag in ("one", "two"):
        labels = tmp_path / f"{tag}.csv"
        assert run(["cluster", "ahc", "--matrix", str(matrix_csv),
                    "--cut", "8", "--out", str(labels)]) == 0
        outs.append(labels.read_bytes())
    assert outs[0] == outs[1]


def test_cluster_kmeans_seeded(matrix_csv, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        assert run(["cluster", "kmeans", "--matrix", str(matrix_csv),
                    "--k", "8", "--seed", "42", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cluster_consensus(matrix_csv, tmp_path):
    out = tmp_path / "consensus.json"
    assert run(["cluster", "consensus", "--matrix", str(matrix_csv),
                "--k", "8", "--seed", "42", "--out", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert set(blob) == {"classes", "residue"}
    assert all(len(cls) >= 2 for cls in blob["classes"])


def test_profile_roundtrip(matrix_csv, tmp_path):
    labels = tmp_path / "labels.csv"
    prof = tmp_path / "profiles.csv"
    assert run(["cluster", "ahc", "--matrix", str(matrix_csv), "--cut", "4",
                "--out", str(labels)]) == 0
    assert run(["profile", "--matrix", str(matrix_csv),
                "--labels", str(labels), "--out", str(prof)]) == 0
    lines = prof.read_text().strip().splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("class,members,P1,")


def test_curves_outputs(tmp_path):
    out = tmp_path / "curve.csv"
    lm = tmp_path / "landmarks.json"
    assert run(["curves", "--measure", "Zhang", "--nx", "174", "--ny", "400",
                "--n", "600", "--out", str(out), "--landmarks", str(lm)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "n_xy,value"
    assert len(lines) == 176
    states = {e["state"] for e in json.loads(lm.read_text())}
    assert states == {"incompatibility", "independence", "equilibrium",
                      "implication"}


def test_curves_figure(tmp_path):
    out = tmp_path / "curve.csv"
    fig = tmp_path / "curve.png"
    assert run(["curves", "--measure", "Zhang", "--nx", "10", "--ny", "20",
                "--n", "40", "--out", str(out), "--figure", str(fig)]) == 0
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_mine_and_rank(tmp_path):
    baskets = tmp_path / "baskets.txt"
    baskets.write_text(FIXTURE)
    out = tmp_path / "rank.csv"
    assert run(["rank", "--input", str(baskets), "--minsupp", "0.3",
                "--minconf", "0.4", "--by", "Confidence",
                "--measures", "Support,Confidence", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "premise,conclusion,n_xy,n_xny,n_nxy,n_nxny,Support,Confidence"
    assert lines[1].startswith("b,a,2,0,1,0,") and lines[1].endswith(",1.0")


def test_mine_json_idempotent(tmp_path):
    baskets = tmp_path / "baskets.txt"
    baskets.write_text(FIXTURE)
    blobs = []
    for tag in ("one", "two"):
        out = tmp_path / f"{tag}.json"
        assert run(["mine", "--input", str(baskets), "--minsupp", "0.3",
                    "--minconf", "0.5", "--format", "json",
                    "--measures", "Support,Confidence,Jaccard",
                    "--out", str(out)]) == 0
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]
    assert json.loads(blobs[0])[0]["scores"]["Support"]


def test_dedup_command(tmp_path):
    out = tmp_path / "groups.json"
    assert run(["dedup", "--nmax", "8", "--out", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert any("Phi-coefficient" in g for g in blob["groups"])


def test_help_lists_evaluator_defaults():
    for argv in (["--help"], ["properties", "matrix", "--help"]):
        proc = subprocess.run(
            [sys.executable, "-m", "rulemeasures.cli", *argv],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "n_max=40" in proc.stdout
        assert "tol=1e-9" in proc.stdout
        assert "min_conf=0.5" in proc.stdout
        assert "k_max=4" in proc.stdout


def test_console_script_entry():
    proc = subprocess.run(["rulemeasures", "measures", "eval", "--table",
                           "40,10,20,30", "--measure", "Support"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0.4"
