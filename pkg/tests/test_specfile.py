import pytest

from helpers import FIXTURES
from nchilbert.hilbert import IdealSpec, ModuleSpec
from nchilbert.regex import as_word
from nchilbert.specfile import SpecFileError, load_spec, parse_spec


def test_ideal_file():
    spec = parse_spec("alphabet = x y z\n# comment\nside = two-sided\ngen = y z   # trailing\ngen = x z x\n")
    assert isinstance(spec, IdealSpec)
    assert spec.side == "two-sided"
    assert spec.words() == [(1, 2), (0, 2, 0)]


def test_defaults():
    spec = parse_spec("alphabet = a b\ngen = a\n")
    assert spec.side == "right"
    assert parse_spec("alphabet = a b\n").generators == ()


def test_module_file():
    text = "alphabet = x y\nobject = module\nrank = 2\nside[2] = two-sided\ngen[1] = x\ngen[2] = y x\n"
    spec = parse_spec(text)
    assert isinstance(spec, ModuleSpec)
    assert spec.rank == 2
    assert [c.side for c in spec.components] == ["right", "two-sided"]
    assert as_word(spec.components[1].generators[0]) == (1, 0)


def test_module_with_empty_component():
    spec = parse_spec("alphabet = x\nrank = 3\ngen[2] = x x\n")
    assert [len(c.generators) for c in spec.components] == [0, 1, 0]


@pytest.mark.parametrize(
    "text, line",
    [
        ("gen = x\nalphabet = x\n", 1),
        ("alphabet = x\nalphabet = y\n", 2),
        ("alphabet = x\nside = left\n", 2),
        ("alphabet = x\nobject = ring\n", 2),
        ("alphabet = x\ngen = x (\n", 2),
        ("alphabet = x\ngen = q\n", 2),
        ("alphabet = x\nnonsense\n", 2),
        ("alphabet = x\ncolour = red\n", 2),
        ("alphabet = x x\n", 1),
        ("alphabet = x\nrank = 0\n", 2),
    ],
)
def test_errors_with_line(text, line):
    with pytest.raises(SpecFileError) as info:
        parse_spec(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        "gen = x\n",
        "alphabet = x\nobject = ideal\ngen[1] = x\n",
        "alphabet = x\nobject = module\ngen[1] = x\n",
        "alphabet = x\nrank = 1\ngen = x\n",
        "alphabet = x\nrank = 1\ngen[2] = x\n",
    ],
)
def test_structural_errors(text):
    with pytest.raises(SpecFileError):
        parse_spec(text)


def test_fixtures_load():
    assert len(load_spec(FIXTURES / "hecke_a.spec").generators) == 27
    assert len(load_spec(FIXTURES / "hecke_a_prime.spec").generators) == 27
    artin = load_spec(FIXTURES / "artin_example.spec")
    assert artin.side == "two-sided" and artin.alphabet.letters == ("x", "y", "z")
