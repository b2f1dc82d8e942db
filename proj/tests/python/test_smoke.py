import pathlib

import pytest

import nomaut

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def load(name, **kw):
    return nomaut.Automaton((FIXTURES / name).read_text(), **kw)


def test_alpha():
    assert nomaut.canonicalize("|bb") == "|aa"
    assert nomaut.alpha_eq("|ab", "|cb")
    assert not nomaut.alpha_eq("a|ab", "b|ba")
    assert nomaut.free_names("a|aba") == ["a", "b"]


def test_membership():
    ex1 = load("ex1.nofa")
    assert ex1.accepts("q0", "aa")
    assert not ex1.accepts("q0", "ab")
    assert load("ex2.rnna").accepts("q0", "|cc")


def test_routes_agree():
    ex3 = load("ex3.rnna", depth=4)
    expected = ["|a", "|aa", "|aaa", "|aaaa"]
    for via in ("kl", "em", "oracle"):
        assert ex3.language("q0", 4, via) == expected
    assert ex3.check_relation(3) == []
    assert ex3.check_trace_square(3) == []


def test_pool_and_states():
    ex1 = load("ex1.nofa", pool=2)
    assert ex1.pool == 2
    assert ex1.states() == ["q0", "q1(a)", "q1(b)", "q2"]
    assert ex1.determinize_step(["q0"]) == "(0, a -> {q1(a)}, b -> {q1(b)})"


def test_errors():
    with pytest.raises(nomaut.SpecViolation):
        load("bad_branching.rnna")
    with pytest.raises(nomaut.ParseError):
        nomaut.Automaton("nofa N\nstate q0\ntrans q0 --> q0\n")
    with pytest.raises(nomaut.PoolError):
        load("ex2.rnna", pool=1).language("q0", 2)
    findings = nomaut.validate_spec((FIXTURES / "bad_branching.rnna").read_text())
    assert findings and findings[0]["condition"] == "RNNA-(b)"


def test_selfcheck():
    suites = nomaut.selfcheck(seed=0, cases=20)
    assert len(suites) == 8
    assert all(s["failures"] == 0 for s in suites)
