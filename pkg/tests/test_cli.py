import io
import json
import subprocess
import sys

import pytest

from pwclone.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().strip()


ARRA_ARGS = "3^e 1^a;2^bb;2^b 1^a 3^a;1^c 2^c"


def test_superpose_arrangement_example():
    code, out = run("--monoid", "free:abc", "--clone", "arra:1", "superpose", "2^e 3^aa 1^b 4^ca", "--args", ARRA_ARGS)
    assert (code, out) == (0, "2^bb 1^aaa 3^aaa")


def test_superpose_in_p():
    code, out = run(
        "--monoid", "free:ab", "--clone", "p", "superpose", "2^ba 2^aa 4^baa 3^e", "--args", "2^b 1^aa;1^bbb 1^e 2^b;2^aa 2^a;_"
    )
    assert (code, out) == (0, "1^babbb 1^ba 2^bab 1^aabbb 1^aa 2^aab 2^aa 2^a")


def test_superpose_with_no_arguments_needs_their_arity():
    assert run("--monoid", "free:ab", "superpose", "_", "--args", "", "--arity", "0") == (2, "")
    assert run("--monoid", "free:ab", "superpose", "_", "--args", "", "--arity", "0", "--args-arity", "2") == (0, "_")


def test_superpose_arity_mismatch(capsys):
    code, _ = run("--monoid", "free:ab", "superpose", "1^a 2^b", "--args", "1^a")
    assert code == 2
    assert capsys.readouterr().err.count("\n") == 1


def test_dims():
    assert run("--monoid", "trivial", "--clone", "magn", "dims", "5") == (0, "17686")
    assert run("--clone", "stal:1", "dims", "2") == (0, "infinite")
    assert run("--clone", "arra:1", "dims", "3", "--brute-force") == (0, "16")
    code, out = run("--clone", "arra:2", "dims", "8", "--json")
    assert json.loads(out) == {"result": 229714292041, "clone": "arra:2", "monoid": "trivial"}


def test_dims_brute_force_agrees_with_formula():
    for clone, top in (("arra:1", 3), ("arra:2", 2), ("inc:2", 3), ("magn", 2)):
        for n in range(top + 1):
            assert run("--clone", clone, "dims", str(n)) == run("--clone", clone, "dims", str(n), "--brute-force")


def test_term_equiv_exit_codes():
    assert run("--monoid", "trivial", "--clone", "inc:1", "term-equiv", "m(x1,x1)", "x1") == (0, "true")
    assert run("--monoid", "trivial", "--clone", "arra:1", "term-equiv", "m(x1,x2)", "m(x2,x1)") == (1, "false")


def test_equiv_exit_codes():
    assert run("--clone", "winc", "equiv", "1^e 2^e", "2^e 1^e") == (0, "true")
    assert run("--clone", "arra:1", "equiv", "1^e 2^e", "2^e 1^e") == (1, "false")
    code, out = run("--clone", "arra:1", "equiv", "1^e", "1^e", "--arity", "2", "--json")
    assert code == 0 and json.loads(out)["result"] is True


def test_arities_are_not_silently_unified():
    assert run("--clone", "arra:1", "equiv", "1^e", "2^e")[0] == 2
    assert run("--clone", "arra:1", "equiv", "1^e", "2^e", "--arity", "2")[0] == 1
    assert run("--clone", "arra:1", "term-equiv", "x1", "x2")[0] == 2


def test_unsupported_variety(capsys):
    code, out = run("--monoid", "free:ab", "--clone", "inc:1", "normalize", "1^a")
    assert (code, out) == (2, "")
    err = capsys.readouterr().err
    assert err.startswith("pwclone: error: ") and "trivial" in err and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["normalize", "1^e 2"], "position 4"),
        (["--monoid", "free:ab", "normalize", "1^c"], "alphabet"),
        (["--clone", "magn:2,1", "normalize", "1^e"], "equivalence"),
        (["--monoid", "zmod:2", "--clone", "arra:1", "superpose", "1^1", "--args", "1^e;1^e"], "arguments"),
        (["frontier", "m(x1,"], "position"),
        (["--monoid", "zmod:x", "normalize", "1^e"], "zmod"),
        (["--clone", "nope", "normalize", "1^e"], "nope"),
        (["normalize"], "operand"),
        (["check"], "--suite"),
        (["dims", "two"], "integer"),
        (["--clone", "stal:1", "dims", "2", "--brute-force"], "length bound"),
    ],
)
def test_errors_exit_two_with_one_line(capsys, argv, fragment):
    code, out = run(*argv)
    assert code == 2 and out == ""
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and fragment in err


def test_normalize_frontier_rc():
    assert run("--monoid", "free:ab", "--clone", "magn", "normalize", "2^e 1^b 2^e 3^a 1^ba 1^b 3^e") == (
        0,
        "2^e 1^b 3^a 3^e",
    )
    assert run("--monoid", "free:ab", "frontier", "m(p{a}(m(x3,p{b}(x2))),m(x1,p{b}(x2)))") == (0, "3^a 2^ab 1^e 2^b")
    assert run("--monoid", "free:ab", "rc", "1^ab 3^aa 2^e 2^b") == (
        0,
        "m(p{ab}(x1),m(p{aa}(x3),m(p{e}(x2),m(p{b}(x2),u))))",
    )
    assert run("--monoid", "free:ab", "rc", "_", "--arity", "2") == (0, "u")


def test_output_round_trips():
    for clone, word in (("pill", "2^ab 2^a 4^b 4^b 2^e 4^ab"), ("stal:2", "1^b 1^a 2^e 1^e 1^a"), ("winc", "2^b 1^a")):
        code, out = run("--monoid", "free:ab", "--clone", clone, "normalize", word)
        assert code == 0
        assert run("--monoid", "free:ab", "--clone", clone, "normalize", out, "--arity", "4") == (0, out)


def test_check_suite():
    code, out = run("--clone", "magn", "check", "--suite", "reversion", "--max-len", "2", "--samples", "20", "--seed", "7")
    assert code == 0
    assert out.splitlines()[0] == "SUITE reversion clone=magn:1,1 monoid=trivial seed=7"
    code, out = run("--clone", "winc", "check", "--suite", "congruence", "--max-len", "2", "--samples", "20", "--json")
    data = json.loads(out)
    assert code == 0 and data["result"]["status"] == "PASS" and data["clone"] == "winc"


def test_table_monoid(tmp_path):
    path = tmp_path / "z2.txt"
    path.write_text("e s\ne\ne s\ns e\n")
    code, out = run("--monoid", f"table:{path}", "--clone", "arra:1", "dims", "2")
    assert (code, out) == (0, "13")
    code, out = run("--monoid", f"table:{path}", "superpose", "1^s", "--args", "1^s 2^e")
    assert (code, out) == (0, "1^e 2^s")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pwclone", "--clone", "magn", "dims", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "52"
