import pytest
from hypothesis import given, strategies as st

from fibrometer import corpus
from fibrometer.errors import InputError, LimitError, NonCocycleError, NotAKnotError, ParseError
from fibrometer.presentation import (
    BraidWord,
    FreeWord,
    PhiMap,
    Presentation,
    braid_to_presentation,
    format_presentation,
    parse_braid_spec,
    parse_presentation,
    reduce_word,
    validate_phi,
)

X, Y = 0, 1

raw_words = st.lists(st.tuples(st.integers(0, 9), st.sampled_from([-2, -1, 1, 2])), max_size=50)


def test_parse_trefoil():
    p, phi = parse_presentation("gens x y\nrel x y x Y X Y\nphi x:1 y:1")
    assert p.generators == ("x", "y")
    assert p.relators == (FreeWord([(X, 1), (Y, 1), (X, 1), (Y, -1), (X, -1), (Y, -1)]),)
    assert phi.images == (1, 1)


def test_parse_baumslag_solitar():
    p, phi = parse_presentation("gens t a\nrel t a T A A\nphi t:1 a:0")
    assert p.relators[0].letters == ((0, 1), (1, 1), (0, -1), (1, -2))
    assert phi.images == (1, 0)


def test_parse_rejects_noncocycle():
    with pytest.raises(NonCocycleError) as info:
        parse_presentation("gens x\nrel x x\nphi x:1")
    assert info.value.relator_index == 0
    assert info.value.value == 2


@pytest.mark.parametrize("text, fragment", [
    ("gens x y\nrel x z\nphi x:1 y:1", "unknown generator 'z'"),
    ("gens x y\nrel x y X Y\nphi x:1 w:1", "unknown generator 'w'"),
    ("rel x\ngens x\nphi x:0", "'rel' before 'gens'"),
    ("gens x\ngens y\nphi x:0", "duplicate 'gens'"),
    ("gens x\nphi x:1\nphi x:1", "duplicate 'phi'"),
    ("gens x y\nphi x:1", "no value for y"),
    ("gens x\nrel x X\nphi x:0", "freely trivial"),
    ("gens x\nfoo\nphi x:0", "unknown directive"),
    ("gens x\nphi x=1", "expected NAME:INT"),
    ("gens x\n", "missing 'phi'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert fragment in str(info.value)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_presentation("gens x y\n\nrel x  q\nphi x:1 y:1")
    assert info.value.line == 3
    assert info.value.column == 8


def test_comments_and_multichar_names():
    p, phi = parse_presentation("# c\ngens a1 b2\nrel a1 b2 A1 B2\nphi a1:1 b2:0\n")
    assert p.generators == ("a1", "b2")
    assert phi.images == (1, 0)


def test_generator_limit():
    names = " ".join(f"g{i}" for i in range(65))
    phi = " ".join(f"g{i}:0" for i in range(65))
    with pytest.raises(LimitError):
        parse_presentation(f"gens {names}\nphi {phi}")


@pytest.mark.parametrize("raw, expected", [
    ([(X, 1), (X, -1)], ()),
    ([(X, 1), (Y, 1), (Y, -1), (X, -1)], ()),
    ([(X, 1), (X, 1), (Y, 1)], ((X, 2), (Y, 1))),
])
def test_reduce_word_examples(raw, expected):
    assert reduce_word(raw).letters == expected


def _free_group_value(letters):
    # brute-force reduction over single letters (independent of reduce_word)
    out = []
    for g, e in letters:
        s = 1 if e > 0 else -1
        for _ in range(abs(e)):
            if out and out[-1] == (g, -s):
                out.pop()
            else:
                out.append((g, s))
    return out


@given(raw_words)
def test_reduce_word_properties(raw):
    w = reduce_word(raw)
    assert reduce_word(w.letters) == w
    assert len(w) <= sum(abs(e) for _, e in raw)
    for a, b in zip(w.letters, w.letters[1:]):
        assert a[0] != b[0]
    assert w.expand() == _free_group_value(raw)


@given(raw_words)
def test_cyclic_reduction_is_conjugate(raw):
    w = reduce_word(raw)
    c = w.cyclically_reduce()
    assert len(c) <= len(w)
    if c.syllables() >= 2:
        assert c.letters[0][0] != c.letters[-1][0]
    # same cyclic word up to conjugation: equal free abelian image and length parity
    for g in range(10):
        assert c.exponent_sum(g) == w.exponent_sum(g)


def test_validate_phi():
    p, phi = corpus.load("trefoil")
    assert validate_phi(p, phi).primitive
    assert validate_phi(*corpus.load("bs12")).primitive
    check = validate_phi(p, PhiMap((2, 2)))
    assert not check.primitive and check.gcd == 2


def test_validate_phi_length_mismatch(trefoil):
    with pytest.raises(InputError):
        validate_phi(trefoil[0], PhiMap((1,)))


def test_round_trip_corpus(fixture_name):
    p, phi = corpus.load(fixture_name)
    assert parse_presentation(format_presentation(p, phi)) == (p, phi)


def test_braid_trefoil_raw():
    p, phi = braid_to_presentation(BraidWord(2, (1, 1, 1)))
    assert p.num_generators == 2 and len(p.relators) == 1
    assert phi.images == (1, 1)


def test_braid_unknot():
    p, phi = braid_to_presentation(BraidWord(2, (1,)))
    (r,) = p.relators
    assert sorted(r.letters) == [(0, -1), (1, 1)]


def test_braid_figure_eight_shape():
    p, phi = braid_to_presentation(BraidWord(3, (1, -2, 1, -2)))
    assert p.num_generators == 3 and len(p.relators) == 2


def test_braid_link_rejected():
    with pytest.raises(NotAKnotError):
        braid_to_presentation(BraidWord(2, (1, 1)))


@given(st.integers(2, 4).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(1, k - 1).flatmap(
        lambda i: st.sampled_from([i, -i])), min_size=1, max_size=8))))
def test_braid_output_satisfies_phi(data):
    k, word = data
    b = BraidWord(k, tuple(word))
    if not b.is_knot():
        return
    p, phi = braid_to_presentation(b)
    assert phi.images == (1,) * k
    validate_phi(p, phi)


def test_parse_braid_spec():
    b = parse_braid_spec("strands=3;word=1,-2,1,-2")
    assert b == BraidWord(3, (1, -2, 1, -2))
    with pytest.raises(InputError):
        parse_braid_spec("strands=3;word=1,3")
    with pytest.raises(ParseError):
        parse_braid_spec("word=1")


def test_presentation_rejects_bad_index():
    with pytest.raises(InputError):
        Presentation(("x",), (FreeWord([(1, 1)]),))
