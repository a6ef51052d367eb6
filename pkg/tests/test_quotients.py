import itertools

import pytest

from fibrometer import corpus
from fibrometer.errors import BudgetExhausted, LimitError, NotTransitiveError, RelatorViolation
from fibrometer.presentation import PhiMap, Presentation, parse_presentation
from fibrometer.quotients import (
    FiniteQuotientHom,
    Permutation,
    canonical_form,
    cyclic_cover_table,
    enumerate_homs,
    evaluate_word,
    regular_cover_table,
    search_homs,
)

SWAP, ID2 = Permutation((1, 0)), Permutation((0, 1))
FREE2 = Presentation(("x", "y"), ())


def brute_force_classes(p, k):
    """All homs p -> S_k by exhaustive search, grouped by conjugacy."""
    perms = [Permutation(x) for x in itertools.permutations(range(k))]
    classes = set()
    for images in itertools.product(perms, repeat=p.num_generators):
        if all(evaluate_word(r, images, k).is_identity() for r in p.relators):
            classes.add(canonical_form(images))
    return classes


def test_permutation_algebra():
    a, b = Permutation((1, 2, 0)), Permutation((1, 0, 2))
    assert (a * b)(0) == a(b(0))
    assert (a * a.inverse()).is_identity()
    assert a ** 3 == Permutation.identity(3)
    assert a ** -1 == a.inverse()
    assert a.order() == 3 and Permutation((1, 0, 3, 2, 4)).order() == 2
    assert Permutation((1, 2, 0, 4, 3)).cycle_type() == (3, 2)


def test_trefoil_s3(trefoil):
    p, _ = trefoil
    homs = enumerate_homs(p, 3, 10 ** 5)
    full = [h for h in homs if h.image_order == 6]
    assert len(full) == 1
    x, y = full[0].images
    assert x.cycle_type() == (2, 1) and y.cycle_type() == (2, 1) and x != y


def test_degree_one(fixture_name):
    p, _ = corpus.load(fixture_name)
    (h,) = enumerate_homs(p, 1, 100)
    assert h.is_trivial()


def test_free_group_degree_two():
    homs = enumerate_homs(FREE2, 2, 100)
    assert len(homs) == 4
    assert sum(1 for h in homs if not h.is_trivial()) == 3
    assert {tuple(x.images for x in h.images) for h in homs} == brute_force_classes(FREE2, 2)


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "bs12", "free2_10", "knot52"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_matches_brute_force(name, k):
    p, _ = corpus.load(name)
    homs = enumerate_homs(p, k, 10 ** 6)
    keys = [tuple(x.images for x in h.images) for h in homs]
    assert len(keys) == len(set(keys))
    assert set(keys) == brute_force_classes(p, k)
    for h in homs:
        for r in p.relators:
            assert h(r).is_identity()
    assert [h.sort_key() for h in homs] == sorted(h.sort_key() for h in homs)


def test_canonical_form_closed_under_conjugation(trefoil):
    p, _ = trefoil
    for h in enumerate_homs(p, 4, 10 ** 6):
        key = tuple(x.images for x in h.images)
        assert canonical_form(h.images) == key
        for c in itertools.permutations(range(4)):
            c = Permutation(c)
            conj = [c * x * c.inverse() for x in h.images]
            assert canonical_form(conj) == key


def test_budget_exhausted(trefoil):
    p, _ = trefoil
    with pytest.raises(BudgetExhausted) as info:
        search_homs(p, 4, 50)
    assert info.value.nodes <= 50
    full = search_homs(p, 4, 10 ** 6)
    assert set(info.value.partial) <= set(full.homs)


def test_degree_cap(trefoil):
    with pytest.raises(LimitError):
        search_homs(trefoil[0], 8, 10)


def test_search_deterministic(figure_eight):
    p, _ = figure_eight
    assert search_homs(p, 4, 10 ** 6) == search_homs(p, 4, 10 ** 6)


def test_from_images_checks_relators(trefoil):
    with pytest.raises(RelatorViolation):
        FiniteQuotientHom.from_images(trefoil[0], [Permutation((1, 2, 0)), Permutation((1, 0, 2))])


def test_cyclic_table_examples(trefoil):
    t = cyclic_cover_table(FREE2, PhiMap((1, 1)), 3)
    assert t.index == 3
    assert t.action == (Permutation((1, 2, 0)),) * 2
    t = cyclic_cover_table(trefoil[0], trefoil[1], 1)
    assert t.index == 1 and all(x.is_identity() for x in t.action)
    with pytest.raises(NotTransitiveError):
        cyclic_cover_table(trefoil[0], PhiMap((2, 2)), 2)


def test_cyclic_tables_transitive(fixture_name):
    p, phi = corpus.load(fixture_name)
    if phi.degenerate or phi.gcd != 1:
        return
    for n in range(1, 25):
        t = cyclic_cover_table(p, phi, n)
        assert t.is_transitive()
        assert t.relators_trivial(p)


def test_regular_table_examples(trefoil):
    trivial = FiniteQuotientHom.from_images(FREE2, [ID2, ID2])
    assert regular_cover_table(trivial).index == 1
    hom = FiniteQuotientHom.from_images(FREE2, [SWAP, ID2])
    t = regular_cover_table(hom)
    assert t.index == 2 and t.action == (SWAP, ID2)
    (s3,) = [h for h in enumerate_homs(trefoil[0], 3, 10 ** 5) if h.image_order == 6]
    t = regular_cover_table(s3)
    assert t.index == 6
    for x in t.action:
        assert x.cycle_type() == (2, 2, 2)


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "knot52", "free2_11"])
def test_regular_action_fixed_point_free(name):
    p, _ = corpus.load(name)
    for k in (2, 3, 4):
        for h in enumerate_homs(p, k, 10 ** 6):
            t = regular_cover_table(h)
            assert t.is_transitive() and t.relators_trivial(p)
            # every element of the image acts; only the identity has fixed points
            for g_index, g in enumerate(h.image_elements):
                word_perm = Permutation(tuple(
                    h.element_index()[(e * g).images] for e in h.image_elements))
                assert word_perm.fixed_points() == (t.index if g.is_identity() else 0)


def test_hom_json(trefoil):
    (s3,) = [h for h in enumerate_homs(trefoil[0], 3, 10 ** 5) if h.image_order == 6]
    data = s3.to_json()
    assert data["degree"] == 3 and data["image_order"] == 6
    assert FiniteQuotientHom.from_images(trefoil[0], data["images"]) == s3


def test_empty_relator_presentations():
    p, _ = parse_presentation("gens a b\nrel b\nphi a:1 b:0")
    assert len(enumerate_homs(p, 2, 100)) == 2
