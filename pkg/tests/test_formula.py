import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherentia.formula import Apply, FormulaSyntaxError, Letter, letters_of, parse_formula, render_formula, substitute
from coherentia.truth import builtin_logic, logic_from_dict

CL = builtin_logic("classical")
p, q, r = Letter("p"), Letter("q"), Letter("r")

# A logic with unusual tokens, two binary operators sharing a precedence and
# two prefix operators, to stress the grammar beyond the built-in shapes.
ODD = logic_from_dict(
    {
        "name": "odd",
        "truth_values": [{"label": "0", "load": "0"}, {"label": "1", "load": "1"}],
        "connectives": [
            {"name": "!", "arity": 1, "precedence": 9, "table": ["1", "0"]},
            {"name": "#", "arity": 1, "precedence": 9, "table": ["0", "1"]},
            {"name": "+", "arity": 2, "precedence": 1, "table": [["0", "1"], ["1", "0"]]},
            {"name": "-", "arity": 2, "precedence": 1, "table": [["0", "0"], ["1", "0"]]},
            {"name": "**", "arity": 2, "precedence": 5, "table": [["0", "0"], ["0", "1"]]},
            {"name": "=>", "arity": 2, "precedence": 0, "table": [["1", "1"], ["0", "1"]]},
        ],
        "consequence": [{"from": ["1"], "to": ["1"]}],
    }
)


def test_prefix_negation_of_group():
    assert parse_formula("~(p & q)", CL) == Apply("~", (Apply("&", (p, q)),))


def test_precedence_of_conjunction_over_disjunction():
    assert parse_formula("p & q | r", CL) == Apply("|", (Apply("&", (p, q)), r))


def test_left_associativity():
    assert parse_formula("p -> q -> r", CL) == Apply("->", (Apply("->", (p, q)), r))
    assert parse_formula("p + q - r", ODD) == Apply("-", (Apply("+", (p, q)), r))


def test_prefix_binds_tightest():
    assert parse_formula("~p & q", CL) == Apply("&", (Apply("~", (p,)), q))


def test_double_arrow_is_misuse_at_token_two():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("p -> -> q", CL)
    assert "arity/fixity misuse" in str(info.value)
    assert info.value.token_index == 2


@pytest.mark.parametrize("text", ["(p & q", "p & q)", "((p)", ")p("])
def test_unbalanced(text):
    with pytest.raises(FormulaSyntaxError, match="unbalanced parentheses"):
        parse_formula(text, CL)


@pytest.mark.parametrize("text", ["p ? q", "p & 3", "p @"])
def test_unknown_token(text):
    with pytest.raises(FormulaSyntaxError, match="unknown token"):
        parse_formula(text, CL)


@pytest.mark.parametrize("text", ["", "p q", "& p", "p ~", "~", "()"])
def test_other_malformed(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text, CL)


def test_hole_only_when_allowed():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("~_", CL)
    assert parse_formula("~_", CL, allow_hole=True) == Apply("~", (Letter("_"),))


def test_render_examples():
    assert render_formula(Apply("&", (p, Apply("~", (q,)))), CL) == "p & ~q"
    assert render_formula(Apply("|", (Apply("&", (p, q)), r)), CL) == "p & q | r"
    assert render_formula(p, CL) == "p"
    assert render_formula(Apply("&", (p, Apply("|", (q, r)))), CL) == "p & (q | r)"
    assert render_formula(Apply("->", (p, Apply("->", (q, r)))), CL) == "p -> (q -> r)"
    assert render_formula(Apply("~", (Apply("~", (p,)),)), CL) == "~~p"


def test_longest_token_match():
    assert parse_formula("p ** q", ODD) == Apply("**", (p, q))
    assert parse_formula("p=>q", ODD) == Apply("=>", (p, q))


def test_substitute_and_letters():
    f = parse_formula("X & ~Y | X", CL)
    g = substitute(f, {"X": p, "Y": Apply("&", (q, r))})
    assert render_formula(g, CL) == "p & ~(q & r) | p"
    assert letters_of(g) == ("p", "q", "r")


def formulas(spec, depth=5):
    letters = st.sampled_from(["p", "q", "r", "s1", "x_2"]).map(Letter)
    unary = [c.name for c in spec.connectives if c.arity == 1]
    binary = [c.name for c in spec.connectives if c.arity == 2]

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from(unary), children).map(lambda t: Apply(t[0], (t[1],))),
            st.tuples(st.sampled_from(binary), children, children).map(lambda t: Apply(t[0], (t[1], t[2]))),
        )

    return st.recursive(letters, extend, max_leaves=2**depth)


def depth(f):
    return 0 if isinstance(f, Letter) else 1 + max(depth(a) for a in f.args)


@settings(max_examples=300)
@given(formulas(CL))
def test_round_trip_classical(f):
    assert parse_formula(render_formula(f, CL), CL) == f


@settings(max_examples=300)
@given(formulas(ODD))
def test_round_trip_unusual_tokens(f):
    assert parse_formula(render_formula(f, ODD), ODD) == f


@settings(max_examples=300)
@given(st.text(alphabet="pq~&|->() ", max_size=14))
def test_parse_is_total_or_diagnosed(text):
    try:
        f = parse_formula(text, CL)
    except FormulaSyntaxError as exc:
        assert exc.reason and exc.position >= 0
    else:
        assert parse_formula(render_formula(f, CL), CL) == f


def test_generator_reaches_depth_five():
    # sanity check on the strategy itself: deep trees do occur
    found = []

    @settings(max_examples=400, database=None)
    @given(formulas(CL))
    def probe(f):
        found.append(depth(f))

    probe()
    assert max(found) >= 5
