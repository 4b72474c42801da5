"""End-to-end checks of the command line front door.

Everything goes through cli.main(argv) so exit codes and stdout/stderr
are exercised exactly as a shell user would see them.
"""

import pytest

from phonotax.cli import SCORE_COLUMNS, main
from phonotax.plot import SVG_OPEN
from phonotax.train import load_model

from conftest import INVENTORY_TEXT, TOY_LEXICON

STIMULI = (
    "w1\tk æ1 t\n"
    "w2\ts æ1 t\n"
    "w3\td ʌ1 l\n"
    "w4\tʃ ɔɪ1 ʃ\n"
)


@pytest.fixture()
def model_path(tmp_path):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text(TOY_LEXICON, encoding="utf-8")
    out = tmp_path / "trained"
    assert main(["train", str(lex), "--out", str(out)]) == 0
    return out / "model.tsv"


def test_train_report(tmp_path, capsys):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text(TOY_LEXICON, encoding="utf-8")
    rc = main(["train", str(lex), "--out", str(tmp_path / "out")])
    captured = capsys.readouterr()
    assert rc == 0
    assert "lexicon entries: retained 7, skipped 0, downgraded 0" in captured.out
    assert "trained entries: 7" in captured.out
    assert "per-cell totals:" in captured.out
    assert captured.err == ""
    model = load_model((tmp_path / "out" / "model.tsv").read_text("utf-8"))
    assert model.table.total > 0


def test_train_is_deterministic(tmp_path):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text(TOY_LEXICON, encoding="utf-8")
    assert main(["train", str(lex), "--out", str(tmp_path / "a")]) == 0
    assert main(["train", str(lex), "--out", str(tmp_path / "b")]) == 0
    a = (tmp_path / "a" / "model.tsv").read_bytes()
    b = (tmp_path / "b" / "model.tsv").read_bytes()
    assert a == b


def test_missing_file_is_an_io_error(tmp_path, capsys):
    rc = main(["train", str(tmp_path / "nope.tsv"), "--out", str(tmp_path / "out")])
    assert rc == 1
    assert "error:" in capsys.readouterr().err


def test_empty_lexicon_is_a_domain_error(tmp_path, capsys):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text("# nothing here\n", encoding="utf-8")
    rc = main(["train", str(lex), "--out", str(tmp_path / "out")])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_bad_epsilon_rejected(tmp_path, capsys):
    lex = tmp_path / "lexicon.tsv"
    lex.write_text(TOY_LEXICON, encoding="utf-8")
    rc = main(["train", str(lex), "--out", str(tmp_path / "out"), "--epsilon", "0.5"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_score_stdout_and_file(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI + "badrow\n", encoding="utf-8")
    rc = main(["score", str(model_path), str(stim), "--out", str(tmp_path / "scored")])
    captured = capsys.readouterr()
    assert rc == 0
    lines = captured.out.splitlines()
    assert lines[0] == "\t".join(SCORE_COLUMNS)
    assert len(lines) == 6
    cells = lines[1].split("\t")
    assert cells[0] == "w1"
    assert 0 < float(cells[1]) < 1
    assert cells[6] == ""
    bad = lines[5].split("\t")
    assert bad[0] == "badrow"
    assert bad[1] == ""
    assert "EmptyTranscription" in bad[6]
    on_disk = (tmp_path / "scored" / "scores.tsv").read_text("utf-8")
    assert on_disk == captured.out


def test_score_empty_stimuli(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text("# only comments\n", encoding="utf-8")
    rc = main(["score", str(model_path), str(stim)])
    captured = capsys.readouterr()
    assert rc == 0
    assert captured.out == "\t".join(SCORE_COLUMNS) + "\n"
    assert "holds no rows" in captured.err


def test_inventory_digest_warning(model_path, tmp_path, capsys):
    inv = tmp_path / "inventory.tsv"
    inv.write_text(INVENTORY_TEXT, encoding="utf-8")
    stim = tmp_path / "stimuli.tsv"
    stim.write_text("w1\tk æ1 t\n", encoding="utf-8")
    rc = main(["score", str(model_path), str(stim), "--inventory", str(inv)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "inventory digest differs" in captured.err


def test_evaluate_synthetic(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI, encoding="utf-8")
    out = tmp_path / "eval"
    rc = main(["evaluate", str(model_path), str(stim), "--seed", "5", "--out", str(out)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "judgments: synthetic (seed 5, 4 records)" in captured.out
    assert "n = 4, df = 2" in captured.out
    for method in ("p(word)", "ln p(word)", "p(worst part)", "p(best part)"):
        assert method in captured.out
    assert captured.out.count(" r = ") == 4
    csv_text = (out / "scatter.csv").read_text("utf-8")
    assert csv_text.startswith("word_id,ln_p,votes\n")
    assert len(csv_text.splitlines()) == 5
    svg_text = (out / "scatter.svg").read_text("utf-8")
    assert svg_text.startswith(SVG_OPEN)
    assert svg_text.rstrip().endswith("</svg>")


def test_evaluate_synthetic_is_deterministic(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI, encoding="utf-8")
    assert main(["evaluate", str(model_path), str(stim), "--seed", "9"]) == 0
    first = capsys.readouterr().out
    assert main(["evaluate", str(model_path), str(stim), "--seed", "9"]) == 0
    assert capsys.readouterr().out == first


def test_evaluate_with_judgment_file(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI, encoding="utf-8")
    judge = tmp_path / "judgments.csv"
    judge.write_text(
        "word_id,votes_against\nw1,0\nw2,3\nw3,8\nw4,12\n", encoding="utf-8"
    )
    rc = main(["evaluate", str(model_path), str(stim), str(judge)])
    captured = capsys.readouterr()
    assert rc == 0
    assert f"judgments: {judge} (4 records)" in captured.out
    assert "n = 4, df = 2" in captured.out


def test_evaluate_disjoint_ids(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI, encoding="utf-8")
    judge = tmp_path / "judgments.csv"
    judge.write_text("word_id,votes_against\nq1,0\nq2,3\n", encoding="utf-8")
    rc = main(["evaluate", str(model_path), str(stim), str(judge)])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_evaluate_excludes_failed_stimuli(model_path, tmp_path, capsys):
    stim = tmp_path / "stimuli.tsv"
    stim.write_text(STIMULI + "w5\tə0 v ə0\n", encoding="utf-8")
    rc = main(["evaluate", str(model_path), str(stim), "--seed", "5"])
    captured = capsys.readouterr()
    assert rc == 0
    assert "1 stimuli failed to score" in captured.err
    assert "w5: UnsupportedStressPattern" in captured.err
    assert "n = 4" in captured.out


def test_tables_layout(model_path, capsys):
    rc = main(["tables", str(model_path), "--top", "2"])
    captured = capsys.readouterr()
    assert rc == 0
    lines = captured.out.splitlines()
    assert "Onsets" in lines
    assert "Rhymes" in lines
    header = lines[lines.index("Onsets") + 1]
    assert header.split() == ["Osi", "Osf", "Osif", "Owi", "Owf", "Owif"]
    # --top 2 caps each block at header + 2 terminal rows
    block = lines[lines.index("Onsets") + 1 : lines.index("")]
    assert len(block) <= 3


def test_import_mitton(tmp_path, capsys):
    src = tmp_path / "text710.dat"
    src.write_text("cat 'k&t K\nxyz\ncandle 'k&ndl K\n", encoding="utf-8")
    out = tmp_path / "imported"
    rc = main(["import-mitton", str(src), "--out", str(out)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "converted entries: 2" in captured.out
    assert "skipped: 1 (short-line 1)" in captured.out
    assert "note: syllabic-consonant-schwa on 1 entries" in captured.out
    text = (out / "lexicon.tsv").read_text("utf-8")
    assert text == "cat\tk æ1 t\ncandle\tk æ1 n d ə0 l\n"


def test_unknown_subcommand_exits_nonzero():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
