import json
from fractions import Fraction

import pytest
from blockrb.audit import ClaimId
from blockrb.config import RunConfig, parse_config
from blockrb.config_file import ConfigFile
from blockrb.operators import Constant, Exponential
from blockrb.printed import LINE_VARIANTS, EquationId
from blockrb.scalars import ALPHA, Q, as_scalar
from blockrb.validators import ConfigError


def test_config_file_from_path(config_path):
    file = ConfigFile(config_path)
    assert file.path == config_path
    assert file["q"] == "1/3"
    assert file["missing"] is None
    assert "k" in file
    assert len(file) == 4


def test_config_file_from_env(config_path, monkeypatch):
    monkeypatch.setenv("BLOCKRB_CONFIG", str(config_path))
    file = ConfigFile()
    assert file.path == config_path
    assert file["profile"] == "exp:2"


def test_config_file_without_path(monkeypatch):
    monkeypatch.delenv("BLOCKRB_CONFIG", raising=False)
    file = ConfigFile()
    assert file.path is None
    assert len(file) == 0


@pytest.mark.parametrize("content", ["not json", "[1, 2]"])
def test_config_file_rejects_content(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(ConfigError) as excinfo:
        ConfigFile(path)
    assert excinfo.value.field == "config"


def test_config_file_missing(tmp_path):
    with pytest.raises(ConfigError):
        ConfigFile(tmp_path / "nope.json")


def test_defaults(monkeypatch):
    monkeypatch.delenv("BLOCKRB_CONFIG", raising=False)
    config = parse_config()
    assert config == RunConfig()
    assert config.q == Fraction(1, 2)
    assert config.variants == LINE_VARIANTS
    assert config.claims == tuple(ClaimId)
    assert config.operator().profile(-1, 7) == as_scalar(1)
    assert config.family() == Constant(1)
    assert list(config.search_range()) == [-3, -2, -1, 0, 1, 2, 3]


def test_file_then_flags(config_path):
    config = parse_config({"k": 1, "window": None}, config_path)
    assert config.q == Fraction(1, 3)
    assert config.k == 1
    assert config.window == 3
    assert config.family() == Exponential(2)
    assert config.operator().profile.line(-1) == Exponential(2)


def test_symbolic_parameters():
    config = parse_config({"q": "symbolic", "alpha": "symbolic"})
    params = config.params()
    assert params.alpha == ALPHA
    assert params.beta == Q
    assert config.audit_settings().q == Q


def test_multi_line_profile():
    config = parse_config({"profile": "-1@constant:1|0@kronecker:2:3", "k": 1})
    profile = config.operator().profile
    assert profile(-1, 5) == as_scalar(1)
    assert profile(0, 2) == as_scalar(3)


@pytest.mark.parametrize(
    "field, text, expected",
    [
        ("variants", "feq_plus", (EquationId.FEQ_PLUS,)),
        ("variants", "all", LINE_VARIANTS),
        ("claims", "TABLE_1, PRELIE_A1", (ClaimId.TABLE_1, ClaimId.PRELIE_A1)),
        ("claims", "all", tuple(ClaimId)),
        ("values", "0,1,1,-1/2", (Fraction(0), Fraction(1), Fraction(-1, 2))),
    ],
)
def test_list_options(field, text, expected):
    assert getattr(parse_config({field: text}), field) == expected


def test_options_round_trip():
    config = parse_config({"q": "-2/3", "k": 2, "kprime": 1, "profile": "poly:0,1", "variants": "KERNEL", "seed": 4})
    assert parse_config(config.to_options()) == config


def test_json_echo():
    echo = parse_config({"values": "0,2"}).to_json()
    assert echo["q"] == "1/2"
    assert echo["values"] == ["0", "2"]
    assert echo["variants"] == ["FEQ_NONRES", "FEQ_PLUS", "KERNEL"]
    assert "out" not in echo
    assert "verbose" not in echo


@pytest.mark.parametrize(
    "options, field",
    [
        ({"window": 0}, "window"),
        ({"witness_cap": 0}, "witness_cap"),
        ({"search_window": 5}, "search_window"),
        ({"values": "0,1,2,3,4"}, "values"),
        ({"feq_boundary": "wrap"}, "feq_boundary"),
        ({"seed": -1}, "seed"),
        ({"q": "abc"}, "q"),
        ({"k": 1.5}, "k"),
        ({"variants": "FOO"}, "variants"),
        ({"claims": "THEOREM_9"}, "claims"),
        ({"profile": "gaussian:1"}, "profile"),
        ({"k": 1, "profile": "constant:1|-1@exp:2"}, "profile"),
        ({"verbose": "maybe"}, "verbose"),
        ({"colour": "red"}, "colour"),
    ],
)
def test_invalid_options(options, field):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(options)
    assert excinfo.value.field == field
    assert str(excinfo.value).startswith(f"{field}: ")


def test_profile_lines_follow_k():
    config = parse_config({"k": 2, "profile": "constant:1|-1@exp:2"})
    assert config.operator().profile.line(-2) == Constant(1)
    assert config.operator().profile.line(-1) == Exponential(2)
    with pytest.raises(ConfigError, match="distinct m0"):
        parse_config({"k": 1, "profile": "constant:1|-1@exp:2"})


def test_unknown_field_in_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"depth": 3}))
    with pytest.raises(ConfigError) as excinfo:
        parse_config(config_file=path)
    assert excinfo.value.field == "depth"
