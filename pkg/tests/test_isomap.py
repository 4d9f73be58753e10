import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from altsym.blackbox import RecognitionFailed
from altsym.isomap import (
    ImageEvaluator, InconsistentImage, Word, certify, evaluate_image, image_of_point,
    perm_to_standard_word, point_in_support, standard_relabeling,
)
from altsym.perm import (
    GroupSpec, Permutation, element_of, natural_oracle, perm_of, shroud, standard_generator_perms,
    uniform_random,
)
from altsym.recognizer import CycleBundle, StandardGenerators, recognise
from conftest import Lab


@pytest.fixture
def alt9():
    lab = Lab(9, 0, "alt")
    lab.bundle = CycleBundle(lab.E((1, 2, 3)), lab.E(tuple(range(1, 10))), 9)
    return lab


# -- words -------------------------------------------------------------------

def test_word_examples():
    assert perm_to_standard_word(Permutation.from_cycles((1, 2, 3), degree=9), 9) == Word("T")
    assert perm_to_standard_word(Permutation.identity(9), 9) == Word("")
    assert Word("SSt").inverse() == Word("Tss")
    with pytest.raises(ValueError):
        Word("SX")


def test_odd_permutation_needs_sym_reference():
    p = Permutation.from_cycles((1, 2), degree=9)
    with pytest.raises(ValueError):
        perm_to_standard_word(p, 9)
    with pytest.raises(ValueError):
        perm_to_standard_word(p, 9, "sym", Permutation.from_cycles((1, 2, 3), degree=9))
    ref = Permutation.from_cycles((1, 2, 3, 4), degree=9)
    w = perm_to_standard_word(p, 9, "sym", ref)
    assert w.to_perm(9) * ref == p


@pytest.mark.parametrize("n", [9, 12, 15])
def test_word_round_trip(n):
    rng = np.random.default_rng(n)
    for _ in range(1000):
        p = uniform_random("alt", n, rng)
        w = perm_to_standard_word(p, n)
        assert w.to_perm(n) == p
        assert len(w) <= 4 * n * n


@pytest.mark.parametrize("n", [10, 11])
def test_word_evaluates_in_the_oracle(n):
    lab = Lab(n, 1)
    s0, t0 = standard_generator_perms(n)
    s, t = element_of(lab.G, s0), element_of(lab.G, t0)
    rng = np.random.default_rng(2)
    for _ in range(50):
        p = uniform_random("alt", n, rng)
        assert lab.perm(perm_to_standard_word(p, n).evaluate(lab.G, s, t)) == p


@settings(max_examples=100, deadline=None)
@given(st.text("SsTt", max_size=30), st.text("SsTt", max_size=30), st.integers(5, 14))
def test_word_evaluation_is_a_homomorphism(a, b, n):
    u, v = Word(a), Word(b)
    assert (u + v).to_perm(n) == u.to_perm(n) * v.to_perm(n)
    assert u.inverse().to_perm(n) == u.to_perm(n).inverse()
    G = natural_oracle("sym", n)
    s0, t0 = standard_generator_perms(n)
    s, t = element_of(G, s0), element_of(G, t0)
    assert perm_of(G, (u + v).evaluate(G, s, t)) == u.to_perm(n) * v.to_perm(n)


# -- point evaluation --------------------------------------------------------

def test_point_in_support_examples(alt9):
    G, b, E = alt9.G, alt9.bundle, alt9.E
    assert point_in_support(G, b, 3, E((3, 5)))
    assert not point_in_support(G, b, 5, G.identity())
    assert not point_in_support(G, b, 7, E((1, 2, 3)))


def test_image_of_point_examples(alt9):
    G, b, E = alt9.G, alt9.bundle, alt9.E
    assert [image_of_point(G, b, G.identity(), j) for j in range(1, 10)] == list(range(1, 10))
    assert image_of_point(G, b, E((1, 2), (3, 4)), 3) == 4
    assert [image_of_point(G, b, b.g, j) for j in range(1, 10)] == list(range(2, 10)) + [1]


def test_evaluate_standard_t_is_window(alt9):
    assert evaluate_image(alt9.G, alt9.bundle, alt9.bundle.c) == alt9.P((1, 2, 3))


def test_evaluate_matches_natural_action(alt9):
    ev = ImageEvaluator(alt9.G, alt9.bundle)
    for _ in range(30):
        x = alt9.G.random()
        assert ev.evaluate(x) == alt9.perm(x)


def test_evaluation_with_parked_point():
    lab = Lab(10, 0, "alt")
    bundle = CycleBundle(lab.E((1, 2, 3)), lab.E(tuple(range(1, 10))), 9, parked=lab.E((1, 2, 10)))
    ev = ImageEvaluator(lab.G, bundle)
    for _ in range(30):
        x = lab.G.random()
        assert ev.evaluate(x) == lab.perm(x)
    assert standard_relabeling(bundle) == Permutation.from_images(list(range(2, 11)) + [1])


@pytest.mark.parametrize("c", [(1, 2, 4), (1, 3, 5), (2, 1, 3)])
def test_corrupted_bundle_is_inconsistent(c):
    # c does not sit on three consecutive points of g
    lab = Lab(9, 0, "alt")
    bundle = CycleBundle(lab.E(c), lab.E(tuple(range(1, 10))), 9)
    for _ in range(10):
        with pytest.raises(InconsistentImage):
            evaluate_image(lab.G, bundle, lab.G.random())


def test_short_bundle_rejected(alt9):
    with pytest.raises(RecognitionFailed):
        ImageEvaluator(alt9.G, CycleBundle(alt9.E((1, 2, 3)), alt9.E((1, 2, 3, 4, 5)), 5))


# -- certification -----------------------------------------------------------

@pytest.mark.parametrize("kind,n", [("alt", 9), ("sym", 9), ("alt", 12), ("sym", 13), ("sym", 16)])
def test_certified_outcomes(kind, n):
    G = shroud(GroupSpec(kind, n), 31 + n)
    out = recognise(G, 0.1, 32)
    assert out.success and (out.degree, out.kind) == (n, kind)
    ev = ImageEvaluator(G, out.bundle)
    s0, t0 = standard_generator_perms(n)
    assert ev.standard_image(out.standard_s) == s0
    assert ev.standard_image(out.standard_t) == t0
    for _ in range(50):
        x, y = G.random(), G.random()
        assert ev.evaluate(G.mul(x, y)) == ev.evaluate(x) * ev.evaluate(y)
    # the reported images are conjugate to the hidden permutations by one fixed relabeling
    truth = [perm_of(G, g) for g in G.generators]
    assert [sorted(map(len, p.cycles())) for p in out.generator_images] == \
        [sorted(map(len, p.cycles())) for p in truth]


def test_certify_rejects_generators_outside_the_copy():
    # Alt_9 standard generators inside Sym_10 whose generators move point 10
    lab = Lab(10, 0, "sym")
    c, g = lab.E((1, 2, 3)), lab.E(tuple(range(1, 10)))
    std = StandardGenerators(lab.G.mul(lab.G.mul(c, c), g), c, 9, CycleBundle(c, g, 9))
    with pytest.raises(RecognitionFailed):
        certify(lab.G, std)


def test_certify_rejects_failed_presentation(alt9):
    c, g = alt9.bundle.c, alt9.bundle.g
    with pytest.raises(RecognitionFailed):
        certify(alt9.G, StandardGenerators(g, c, 9, alt9.bundle))


def test_negative_controls_never_certified():
    for name in ("c30", "d20", "psl28", "m11"):
        for seed in range(10):
            assert recognise(shroud(GroupSpec.named(name), seed), 0.1, 16).status == "fail"
