import pytest

from dcgf.cli import main
from dcgf.io_oeis import fixture_path

from oracles import affine_digits


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_gould_csv(capsys):
    code, out, _ = run(capsys, "gen", "--family", "t3", "--c", "2", "--n", "8", "--via", "gf", "--format", "csv")
    assert code == 0 and out.strip() == "1,2,2,4,2,4,4,8"


def test_gen_expression(capsys):
    code, out, _ = run(capsys, "gen", "--expr", "prod(k){1 - z^(2^k)}", "--n", "4", "--format", "csv")
    assert code == 0 and out.strip() == "1,-1,-1,1"


def test_gen_bfile_default(capsys):
    code, out, _ = run(capsys, "gen", "--family", "t1", "--c", "1", "--n", "4")
    assert code == 0 and out == "0 0\n1 1\n2 2\n3 1\n"


def test_gen_rejects_zero_c(capsys):
    code, _, err = run(capsys, "gen", "--family", "t1", "--c", "0", "--n", "8")
    assert code == 2 and "|c|>0" in err


def test_gen_bad_expression_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "--expr", "sum(k){ z^(2^j) }", "--n", "8")
    assert code == 2 and "unknown index" in err


def test_gen_evaluation_error(capsys):
    code, _, err = run(capsys, "gen", "--expr", "1/(2 - z)", "--n", "8")
    assert code == 1 and "constant term" in err


SPECS = [
    ["--family", "t1", "--c", "-2"],
    ["--family", "t2", "--c", "3"],
    ["--family", "t3", "--c", "-1"],
    ["--family", "t4", "--alpha", "-2", "--c", "1", "--d", "3"],
    ["--family", "t5", "--c", "2", "--tail", "1,-2"],
    ["--family", "t6", "--tail", "2,0,-1"],
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: " ".join(s))
@pytest.mark.parametrize("fmt", ["bfile", "csv"])
def test_gen_gf_and_rec_identical(capsys, spec, fmt):
    _, gf, _ = run(capsys, "gen", *spec, "--n", "200", "--via", "gf", "--format", fmt)
    _, rec, _ = run(capsys, "gen", *spec, "--n", "200", "--via", "rec", "--format", fmt)
    assert gf == rec and gf


def test_verify_stern(capsys):
    code, out, _ = run(capsys, "verify", "--family", "t5", "--c", "1", "--tail", "1", "--n", "512")
    assert code == 0 and out.strip().endswith("PASS")


def test_verify_t6_names_convention(capsys):
    code, out, _ = run(capsys, "verify", "--family", "t6", "--tail", "1,1", "--n", "512")
    assert code == 0 and "regularized" in out and out.strip().endswith("PASS")


def test_verify_rejects_zero_alpha(capsys):
    code, _, _ = run(capsys, "verify", "--family", "t4", "--alpha", "0", "--c", "1", "--d", "1")
    assert code == 2


def test_classify_ruler(capsys):
    code, out, _ = run(capsys, "classify", str(fixture_path("bfiles/b001511.txt")), "--terms", "64")
    assert code == 0
    assert "T1 c=1 align=1 len=64" in out.splitlines()


def test_classify_by_anumber(capsys):
    code, out, _ = run(capsys, "classify", "A001316", "--terms", "64")
    assert code == 0 and "T3 c=2 align=0 len=64" in out


def test_classify_norgard(capsys):
    code, out, _ = run(capsys, "classify", "A004718", "--terms", "64")
    assert code == 3 and "no match in bounds" in out


def test_classify_short_file(capsys, tmp_path):
    p = tmp_path / "four.txt"
    p.write_text("0 1\n1 1\n2 2\n3 1\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 2 and "sample too short" in err


def test_classify_unreadable(capsys, tmp_path):
    code, _, _ = run(capsys, "classify", str(tmp_path / "missing.txt"))
    assert code == 1
    p = tmp_path / "bad.txt"
    p.write_text("0 1\n5 1\n")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 1 and "gap" in err


def test_mahler_ones_count(capsys):
    code, out, _ = run(capsys, "mahler", "ones-count", "--family", "t4", "--alpha", "1", "--c", "0", "--d", "1")
    assert code == 0 and out.startswith("PASS")


def test_mahler_thue_morse(capsys):
    code, out, _ = run(capsys, "mahler", "thue-morse", "--family", "t3", "--c", "-1")
    assert code == 0 and out.startswith("PASS")


def test_mahler_two_pow_e0(capsys):
    code, out, _ = run(capsys, "mahler", "two-pow-e0", "--oracle", "two-pow-e0")
    assert code == 0 and out.startswith("PASS")


def test_mahler_mismatch(capsys):
    code, out, _ = run(capsys, "mahler", "thue-morse", "--family", "t3", "--c", "2")
    assert code == 1 and out.startswith("FAIL at z^")


def test_mahler_equation_file(capsys, tmp_path):
    good = tmp_path / "tm.eq"
    good.write_text("depth 1\nc0: 1\nc1: -1 1\n")
    code, out, _ = run(capsys, "mahler", str(good), "--oracle", "thue-morse")
    assert code == 0 and out.startswith("PASS")
    bad = tmp_path / "bad.eq"
    bad.write_text("depth 1\nc0: one\n")
    code, _, _ = run(capsys, "mahler", str(bad), "--oracle", "thue-morse")
    assert code == 1


def test_tworat_natural_numbers(capsys):
    code, out, _ = run(capsys, "tworat", "--alpha", "2", "--c", "0", "--d", "1", "--range", "0..8", "--check")
    lines = out.splitlines()
    assert code == 0
    assert lines[:-1] == [f"{n} {n}" for n in range(8)] and lines[-1] == "PASS"


def test_tworat_popcount(capsys):
    code, out, _ = run(capsys, "tworat", "--alpha", "1", "--c", "0", "--d", "1", "--range", "7..8")
    assert code == 0 and out == "7 3\n"


def test_tworat_alternating(capsys):
    code, out, _ = run(capsys, "tworat", "--alpha", "-1", "--c", "0", "--d", "1", "--range", "0..8", "--check")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "PASS"
    assert [int(l.split()[1]) for l in lines[:-1]] == [affine_digits(-1, 0, 1, n) for n in range(8)]


def test_tworat_zero_alpha(capsys):
    code, _, _ = run(capsys, "tworat", "--alpha", "0", "--range", "0..4")
    assert code == 2


def test_missing_subcommand(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
