import json
import logging

import pytest

from src.cli.main import DEFAULT_SETTINGS, build_parser, load_settings, main


@pytest.fixture(autouse=True)
def reset_logging():
    """main() points a root handler at the captured stderr; drop it after each test."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(logging.WARNING)


@pytest.fixture
def config_file(tmp_path):
    """Write an hbraid.toml with the given body and return its path as a string."""
    def write(body):
        path = tmp_path / "hbraid.toml"
        path.write_text(body)
        return str(path)
    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    return code, json.loads(out), err


# -----------------------------------------------------------------------------
# equal
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "n, a, b, expected",
    [
        ("2", "s1 s1'", "", 0),
        ("4", "s1 s3", "s3 s1", 0),
        ("3", "r1 r2 r1 r2 r1 r2", "", 0),
        ("3", "r1 r2 r1 r2 r1 r2", "r1 r2 r1 r2", 1),
    ],
)
def test_equal(capsys, n, a, b, expected):
    code, doc, err = run_json(capsys, "equal", "-n", n, a, b)
    assert code == expected
    assert doc["command"] == "equal"
    assert doc["outcome"] == ("equal" if expected == 0 else "not-equal")
    assert f"equal: {doc['outcome']}" in err


def test_not_equal_has_certificate(capsys):
    code, doc, _ = run_json(capsys, "equal", "-n", "2", "s1", "r1")
    assert code == 1
    assert doc["certificate"]["index"] == 2


def test_parse_error_exit_code_and_position(capsys):
    code, doc, err = run_json(capsys, "equal", "-n", "2", "s1 q1", "")
    assert code == 2
    assert doc["position"] == 3
    assert "q1" in doc["error"]
    assert "hbraid equal" in err


# -----------------------------------------------------------------------------
# artin / magnus
# -----------------------------------------------------------------------------
@pytest.mark.parametrize(
    "n, word, images",
    [
        ("2", "s1", ["x2", "x2' x1 x2"]),
        ("3", "", ["x1", "x2", "x3"]),
        ("2", "s1 r1", ["x2' x1 x2", "x2"]),
    ],
)
def test_artin(capsys, n, word, images):
    code, doc, _ = run_json(capsys, "artin", "-n", n, word)
    assert code == 0
    assert doc["outcome"] == "report"
    assert doc["images"] == images


def test_artin_reports_permutation(capsys):
    _, doc, _ = run_json(capsys, "artin", "-n", "3", "r1 r2")
    assert doc["permutation"] == [3, 1, 2]


@pytest.mark.parametrize(
    "n, word, terms",
    [
        ("2", "x1 x2", [{"m": [], "c": "1"}, {"m": [1], "c": "1"},
                        {"m": [2], "c": "1"}, {"m": [1, 2], "c": "1"}]),
        ("1", "x1 x1", [{"m": [], "c": "1"}, {"m": [1], "c": "2"}]),
        ("2", "x1'", [{"m": [], "c": "1"}, {"m": [1], "c": "-1"}]),
    ],
)
def test_magnus(capsys, n, word, terms):
    code, doc, _ = run_json(capsys, "magnus", "-n", n, word)
    assert code == 0
    assert doc["terms"] == terms


def test_magnus_parse_error(capsys):
    code, doc, _ = run_json(capsys, "magnus", "-n", "2", "x1 x3")
    assert code == 2
    assert doc["position"] == 3


# -----------------------------------------------------------------------------
# obstruction
# -----------------------------------------------------------------------------
def test_obstruction_on_lambda(capsys):
    code, doc, _ = run_json(capsys, "obstruction", "-n", "3", "r1 r2")
    assert code == 1
    assert doc["outcome"] == "fails"
    assert doc["f_value"] == "1"
    assert doc["lambda_moves_it"] is True
    assert doc["classical_obstruction_holds"] is False
    assert doc["witness"] == "x2 x3 x1"


@pytest.mark.parametrize("n, word", [("3", "s1 s2 s1'"), ("2", "")])
def test_obstruction_holds(capsys, n, word):
    code, doc, _ = run_json(capsys, "obstruction", "-n", n, word)
    assert code == 0
    assert doc["outcome"] == "holds"
    assert doc["f_value"] == "1"


# -----------------------------------------------------------------------------
# torsion-check / fuzz
# -----------------------------------------------------------------------------
def test_torsion_check(capsys):
    code, doc, err = run_json(
        capsys, "torsion-check", "-p", "2", "--trials", "20", "--max-len", "8", "--seed", "1"
    )
    assert code == 0
    assert doc["outcome"] == "holds"
    assert doc["passed"] == 20
    assert "20/20" in err


def test_torsion_check_bad_p(capsys):
    code, doc, _ = run_json(capsys, "torsion-check", "-p", "1", "--trials", "3")
    assert code == 2
    assert "p >= 2" in doc["error"]


def test_fuzz_is_reproducible(capsys):
    argv = ("fuzz", "-n", "3", "--trials", "5", "--seed", "7")
    code, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert code == 0
    assert first == second
    assert json.loads(first)["holds"] is True


def test_fuzz_single_strand(capsys):
    code, doc, _ = run_json(capsys, "fuzz", "-n", "1", "--trials", "2")
    assert code == 0
    assert doc["holds"] is True


# -----------------------------------------------------------------------------
# delete / order
# -----------------------------------------------------------------------------
def test_delete(capsys):
    code, doc, _ = run_json(capsys, "delete", "-n", "3", "--keep", "1,2", "r1 r2 r1 r2 r1 r2")
    assert code == 0
    assert doc["strands"] == 2
    assert doc["word"] == "r1 r1"


def test_delete_cycle_of(capsys):
    code, doc, _ = run_json(capsys, "delete", "-n", "3", "--cycle-of", "2", "s2")
    assert code == 0
    assert doc["keep"] == [2, 3]
    assert doc["strands"] == 2
    assert doc["word"] == "s1"
    code, doc, _ = run_json(capsys, "delete", "-n", "3", "--cycle-of", "1", "s2")
    assert code == 0
    assert doc["keep"] == [1]
    assert doc["strands"] == 1
    assert doc["word"] == ""


def test_delete_cycle_of_out_of_range(capsys):
    code, doc, _ = run_json(capsys, "delete", "-n", "3", "--cycle-of", "5", "s2")
    assert code == 2
    assert "out of range" in doc["error"]


def test_delete_needs_exactly_one_selector(capsys):
    code, _, _ = run_cli(capsys, "delete", "-n", "3", "s2")
    assert code == 2
    code, _, _ = run_cli(capsys, "delete", "-n", "3", "--keep", "1", "--cycle-of", "1", "s2")
    assert code == 2


def test_delete_not_admissible(capsys):
    code, doc, _ = run_json(capsys, "delete", "-n", "2", "--keep", "1", "s1")
    assert code == 2
    assert "not invariant" in doc["error"]


def test_order(capsys):
    code, doc, _ = run_json(capsys, "order", "-n", "4", "r1 r2 r3")
    assert code == 0
    assert doc["order"] == 4
    code, doc, err = run_json(capsys, "order", "-n", "2", "--bound", "4", "s1")
    assert doc["order"] is None
    assert "none up to 4" in err


# -----------------------------------------------------------------------------
# usage and config
# -----------------------------------------------------------------------------
def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["equal", "-n", "2", "s1"]) == 2
    assert main(["delete", "-n", "2", "--keep", "a,b", "s1"]) == 2
    capsys.readouterr()


def test_parser_defaults():
    args = build_parser().parse_args(["torsion-check", "-p", "3"])
    assert args.trials is None
    assert args.config is None


def test_load_settings_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_settings() == DEFAULT_SETTINGS


def test_load_settings_from_file(config_file):
    settings = load_settings(config_file('[TORSION]\ntrials = 5\n\n[FUZZ]\nseed = 3\n'))
    assert settings["TORSION"]["trials"] == 5
    assert settings["TORSION"]["max_len"] == 12
    assert settings["FUZZ"]["seed"] == 3


def test_config_drives_torsion_check(capsys, config_file):
    """Values from the config file fill in flags that were not given."""
    config = config_file('[TORSION]\ntrials = 7\nmax_len = 5\n')
    code, doc, _ = run_json(capsys, "--config", config, "torsion-check", "-p", "3")
    assert code == 0
    assert doc["trials"] == 7
    assert doc["max_len"] == 5


def test_bad_config(capsys, config_file, tmp_path):
    config = config_file('[FUZZ]\ntrials = "many"\n')
    code, _, err = run_cli(capsys, "--config", config, "fuzz", "-n", "2")
    assert code == 2
    assert "Invalid FUZZ setting" in err
    config = config_file('[LOGGING]\nlevel = "LOUD"\n')
    code, _, err = run_cli(capsys, "--config", config, "fuzz", "-n", "2")
    assert code == 2
    assert "Invalid LOGGING setting" in err
    code, _, err = run_cli(capsys, "--config", str(tmp_path / "missing.toml"), "fuzz", "-n", "2")
    assert code == 2
    assert "not found" in err


@pytest.mark.parametrize("body", [
    "[FUZZ]\ntrials = 12.7\n",
    "[FUZZ]\ntrials = true\n",
    "[TORSION]\nseed = \"0\"\n",
    "[LOGGING]\nlevel = 10\n",
])
def test_config_type_mismatch_is_rejected(capsys, config_file, body):
    code, _, err = run_cli(capsys, "--config", config_file(body), "fuzz", "-n", "2")
    assert code == 2
    assert "Invalid" in err


def test_config_level_is_case_insensitive(config_file):
    settings = load_settings(config_file('[LOGGING]\nlevel = "info"\n'))
    assert settings["LOGGING"]["level"] == "INFO"
