import json
import subprocess
import sys

import pytest

from rqeqa.cli import main
from rqeqa.collection import Collection, load_collection
from rqeqa.resources import data_path

SAMPLE = str(data_path("sample_collection.json"))
MODEL = str(data_path("reference_model.txt"))


def cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def index_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("idx") / "sample.idx"
    assert main(["build-index", "--collection", SAMPLE, "-o", str(path)]) == 0
    return path


def test_build_index(capsys, tmp_path):
    code, out, _ = cli(capsys, "build-index", "--collection", SAMPLE, "-o", tmp_path / "i", "--json")
    assert code == 0 and json.loads(out)["N"] == 50
    code, _, err = cli(capsys, "build-index", "--collection", tmp_path / "nope.json", "-o", tmp_path / "i")
    assert code == 1 and "nope.json" in err
    bad = tmp_path / "bad.json"
    pairs = [p.to_dict() for p in load_collection(SAMPLE)][:2]
    pairs[1]["answer"] = ""
    bad.write_text(json.dumps({"pairs": pairs}))
    code, _, err = cli(capsys, "build-index", "--collection", bad, "-o", tmp_path / "i")
    assert code == 1 and "S002: answer" in err


def test_train_rqe(capsys, tmp_path):
    toy = tmp_path / "toy.tsv"
    toy.write_text("What causes gout?\tWhat causes gout?\t1\n"
                   "What are the treatments for acne?\tWhat are the treatments for acne?\t1\n"
                   "What causes gout?\tHow should Amlodipine be used?\t0\n"
                   "What are the treatments for acne?\tWhat is the dosage of Metformin?\t0\n")
    code, out, _ = cli(capsys, "train-rqe", "--pairs", toy, "-o", tmp_path / "m.txt", "--json")
    report = json.loads(out)
    assert code == 0 and report["train_accuracy"] == 1.0 and report["epochs"] > 0
    assert "final_loss" in report
    one = tmp_path / "one.tsv"
    one.write_text("a b?\tc d?\t1\ne f?\tg h?\t1\n")
    code, _, err = cli(capsys, "train-rqe", "--pairs", one, "-o", tmp_path / "m2.txt")
    assert code == 1 and "one class" in err


def test_eval_rqe(capsys):
    code, out, _ = cli(capsys, "eval-rqe", "--pairs", data_path("sample_rqe_pairs.tsv"), "--json")
    assert code == 0 and json.loads(out)["n"] == 88
    code, out, _ = cli(capsys, "eval-rqe", "--pairs", data_path("sample_rqe_pairs.tsv"), "--cv", 4)
    assert code == 0 and "4-fold" in out


def test_ask(capsys, index_file):
    q = "What is the outlook for Legionnaire disease?"
    code, out, _ = cli(capsys, "ask", q, "--index", index_file, "--collection", SAMPLE,
                       "--model", MODEL, "--json", "--explain")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and records[0]["pair_id"] == "S001" and records[0]["rank"] == 1
    assert records[0]["explanation"]["hybrid_score"] == records[0]["hybrid_score"]
    code, out, _ = cli(capsys, "ask", q)
    assert code == 0 and out.startswith(" 1. [S001]")
    code, out, _ = cli(capsys, "ask", "cheap concert tickets")
    assert code == 0 and "no answers" in out


def test_ask_refuses_stale_index(capsys, index_file, tmp_path):
    changed = tmp_path / "c.json"
    Collection(list(load_collection(SAMPLE))[:-1]).save(changed)
    args = ["ask", "What causes tinnitus?", "--index", index_file, "--collection", changed]
    code, _, err = cli(capsys, *args)
    assert code == 1 and "checksum" in err
    code, out, err = cli(capsys, *args, "--force")
    assert code == 0 and "S020" in out


def test_batch_eval(capsys, tmp_path):
    qs = data_path("sample_questions.tsv")
    code, out, _ = cli(capsys, "batch-eval", "--questions", qs, "--judgments",
                       data_path("sample_judgments.tsv"), "--run-out", tmp_path / "run", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["questions"] == 10 and rep["answered"] == 9
    assert set(rep) >= {"avg_score_0_3", "succ_at", "prec_at", "map_at_10", "mrr_at_10"}
    lines = (tmp_path / "run").read_text().splitlines()
    assert [ln.split()[0] for ln in lines] == sorted(ln.split()[0] for ln in lines)
    # judge every returned answer correct
    all_correct = tmp_path / "all.tsv"
    all_correct.write_text("".join(f"{ln.split()[0]}\t{ln.split()[2]}\t4\n" for ln in lines))
    answered = tmp_path / "answered.tsv"
    answered.write_text("".join(line for line in qs.read_text().splitlines(True) if not line.startswith("Q10")))
    code, out, _ = cli(capsys, "batch-eval", "--questions", answered, "--judgments", all_correct, "--json")
    assert code == 0 and json.loads(out)["map_at_10"] == 1.0
    empty = tmp_path / "empty.tsv"
    empty.write_text("")
    code, _, err = cli(capsys, "batch-eval", "--questions", empty, "--judgments", all_correct)
    assert code == 1 and "no questions" in err
    code, _, err = cli(capsys, "batch-eval", "--questions", qs, "--judgments", tmp_path / "missing.tsv")
    assert code == 1 and "missing.tsv" in err


def test_gen_collection_and_validate(capsys, tmp_path):
    out_file = tmp_path / "gen.json"
    code, out, _ = cli(capsys, "gen-collection", "--articles", data_path("sample_articles.json"),
                       "--patterns", data_path("sample_patterns.json"), "-o", out_file, "--json")
    assert code == 0 and json.loads(out) == {"output": str(out_file), "pairs": 11, "skipped_sections": 3}
    questions = [p.question for p in load_collection(out_file)]
    assert "What is the outlook for Acromegaly?" in questions
    assert cli(capsys, "validate", "--collection", out_file)[0] == 0

    zero = tmp_path / "zero.json"
    zero.write_text('{"rules": []}')
    code, out, _ = cli(capsys, "gen-collection", "--articles", data_path("sample_articles.json"),
                       "--patterns", zero, "-o", tmp_path / "z.json")
    assert code == 0 and "pairs=0" in out
    broken = tmp_path / "broken.json"
    broken.write_text('{"rules": [{"section": "x"}]}')
    code, _, err = cli(capsys, "gen-collection", "--articles", data_path("sample_articles.json"),
                       "--patterns", broken, "-o", tmp_path / "z.json")
    assert code == 1 and "pattern" in err

    bad = tmp_path / "bad.json"
    pairs = [p.to_dict() for p in load_collection(SAMPLE)][:3]
    pairs[0]["answer"] = " "
    pairs[2]["question_type"] = "DISEASE/Horoscope"
    bad.write_text(json.dumps({"pairs": pairs}))
    code, out, _ = cli(capsys, "validate", "--collection", bad, "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 1 and [r["pair_id"] for r in rows] == ["S001", "S003"]


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"top_k": 2, "alpha": 0.5, "beta": 0.5, "json": True}))
    q = "What is the outlook for Legionnaire disease?"
    code, out, err = cli(capsys, "ask", q, "--config", cfg, "--verbose")
    assert code == 0 and len(out.splitlines()) == 2
    assert '"top_k": 2' in err
    code, out, _ = cli(capsys, "ask", q, "--config", cfg, "--top-k", 1)
    assert len(out.splitlines()) == 1
    cfg.write_text(json.dumps({"topk": 2}))
    code, _, err = cli(capsys, "ask", q, "--config", cfg)
    assert code == 1 and "unknown config keys: topk" in err
    code, _, err = cli(capsys, "ask", q, "--alpha", 0.9)
    assert code == 1 and "alpha + beta" in err


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "rqeqa.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for cmd in ("build-index", "train-rqe", "eval-rqe", "ask", "batch-eval", "gen-collection", "validate"):
        assert cmd in out.stdout
