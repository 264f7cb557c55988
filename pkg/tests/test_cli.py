"""Command line behavior: output shapes and the frozen exit codes."""

import pytest

from annulink.cli import EXIT_CAP, EXIT_CHECK, EXIT_INPUT, EXIT_OK, main
from annulink.diagfile import load_diagram


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestValidate:
    def test_corpus_entry(self, capsys):
        rc, out, _ = run(capsys, "validate", "unknot")
        assert rc == EXIT_OK
        assert out.strip() == "OK"

    def test_recipe(self, capsys):
        rc, _, _ = run(capsys, "validate", "braid 3: s1 -s2")
        assert rc == EXIT_OK

    def test_unknown_target(self, capsys):
        rc, _, err = run(capsys, "validate", "no-such-thing")
        assert rc == EXIT_INPUT
        assert "not a file, corpus entry or recipe" in err

    def test_bad_file(self, capsys, tmp_path):
        path = tmp_path / "broken.diag"
        path.write_text("[nope]\n")
        rc, _, err = run(capsys, "validate", str(path))
        assert rc == EXIT_INPUT
        assert err.startswith("line 1:")


class TestBracket:
    def test_single_crossing(self, capsys):
        rc, out, _ = run(capsys, "bracket", "one_crossing")
        assert rc == EXIT_OK
        assert "bracket = -A^-3" in out
        assert "breadth = 0" in out

    def test_mirror(self, capsys):
        rc, out, _ = run(capsys, "--mirror", "bracket", "one_crossing")
        assert rc == EXIT_OK
        assert "bracket = -A^3" in out

    def test_jones_and_writhe(self, capsys):
        rc, out, _ = run(capsys, "bracket", "--jones", "braid 2: s1")
        assert rc == EXIT_OK
        assert "writhe = 1" in out
        assert "jones = A^-6" in out

    def test_moves_leave_jones_alone(self, capsys):
        # rmove_a is disk_trefoil after random kink and finger moves, so
        # bracket and writhe differ but the rescaled invariant agrees
        _, base, _ = run(capsys, "bracket", "--jones", "disk_trefoil")
        _, moved, _ = run(capsys, "bracket", "--jones", "rmove_a")
        assert base.splitlines()[-1] == moved.splitlines()[-1]
        assert base.splitlines()[0] != moved.splitlines()[0]

    def test_structured_format(self, capsys):
        rc, out, _ = run(capsys, "--format", "structured", "bracket", "braid 2: s1")
        assert rc == EXIT_OK
        assert out.strip() == "target=recipe bracket=-A^-3 breadth=0"

    def test_threads_do_not_change_output(self, capsys):
        _, single, _ = run(capsys, "bracket", "zigzag_m2")
        _, multi, _ = run(capsys, "--threads", "4", "bracket", "zigzag_m2")
        assert single == multi

    def test_crossing_cap(self, capsys):
        recipe = "braid 2: " + " ".join(["s1"] * 27)
        rc, _, err = run(capsys, "bracket", recipe)
        assert rc == EXIT_CAP
        assert "27" in err

    def test_bad_orientation(self, capsys):
        rc, _, err = run(
            capsys, "bracket", "--jones", "--orientation", "1,x", "one_crossing"
        )
        assert rc == EXIT_INPUT
        assert "orientation" in err


class TestProps:
    def test_profile_lines(self, capsys):
        rc, out, _ = run(capsys, "props", "one_crossing")
        assert rc == EXIT_OK
        lines = out.splitlines()
        assert "n = 1" in lines
        assert "alternating = 1" in lines
        assert "z2_class = 0" in lines
        assert "k_fig3 = 1" in lines
        assert "quasi_simple = 1" in lines
        assert "simple = 0" in lines
        assert "components = 1" in lines

    def test_disconnected_blanks_class_fields(self, capsys):
        rc, out, _ = run(capsys, "props", "braid 3: s1")
        assert rc == EXIT_OK
        assert "simple = -" in out
        assert "connected = 0" in out

    def test_structured_is_one_line(self, capsys):
        rc, out, _ = run(capsys, "--format", "structured", "props", "unknot")
        assert rc == EXIT_OK
        assert len(out.splitlines()) == 1
        assert out.startswith("target=unknot ")


class TestVerify:
    def test_single_entry_ok(self, capsys):
        rc, out, _ = run(capsys, "verify", "zigzag_m2")
        assert rc == EXIT_OK
        assert "fail" not in out

    def test_vanishing_entry_ok(self, capsys):
        rc, out, _ = run(capsys, "verify", "core")
        assert rc == EXIT_OK
        assert "vanishing_bracket: pass" in out

    def test_zero_bracket_entry_ok(self, capsys):
        rc, out, _ = run(capsys, "verify", "fig13")
        assert rc == EXIT_OK
        assert "expected_bracket: pass" in out

    def test_inconsistent_entry_dumps_state(self, capsys):
        rc, out, _ = run(capsys, "verify", "fig14")
        assert rc == EXIT_CHECK
        assert "diagnostic: fig14" in out
        assert "state table" in out
        assert "failed expected_bracket" in out

    def test_corpus_fails_on_the_known_entry(self, capsys):
        rc, out, _ = run(capsys, "verify", "corpus")
        assert rc == EXIT_CHECK
        assert "diagnostic: fig14" in out
        assert out.rstrip().splitlines()[-1] == "entries=21 pairs=4 status=failed"

    def test_corpus_threads_identical(self, capsys):
        _, single, _ = run(capsys, "verify", "corpus")
        _, multi, _ = run(capsys, "--threads", "3", "verify", "corpus")
        assert single == multi

    def test_recipe_with_assumptions(self, capsys):
        rc, out, _ = run(
            capsys, "verify", "braid 2: s1", "--assume", "non_h_split"
        )
        assert rc == EXIT_OK
        assert "non_h_split=True" in out

    def test_unknown_assumption(self, capsys):
        rc, _, err = run(capsys, "verify", "unknot", "--assume", "flat")
        assert rc == EXIT_INPUT
        assert "unknown assumption" in err


class TestGenerate:
    def test_writes_loadable_files(self, capsys, tmp_path):
        rc, out, _ = run(
            capsys, "--seed", "6", "generate", "alternating-braid-closures",
            "2", "--out", str(tmp_path),
        )
        assert rc == EXIT_OK
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == [
            "alternating-braid-closures-seed6-00.diag",
            "alternating-braid-closures-seed6-01.diag",
        ]
        d, meta = load_diagram(str(tmp_path / names[0]))
        assert d.validate() == []
        assert meta["family"] == "alternating-braid-closures"
        assert meta["seed"] == "6"
        assert meta["index"] == "0"

    def test_unknown_family(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "generate", "mystery", "2", "--out", str(tmp_path)
        )
        assert rc == EXIT_INPUT
        assert "unknown family" in err
