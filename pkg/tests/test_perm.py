import json
from collections import Counter
from itertools import permutations

import numpy as np
import pytest

from altsym.perm import (
    NEGATIVE_CONTROLS, GroupSpec, Permutation, PermutationOracle, compose, cycle_type,
    enumerate_group, is_matching_cycle, load_group_spec, natural_oracle, perm_of, save_group_spec,
    shroud, standard_generator_perms, uniform_random,
)
from altsym.recognizer import check_carmichael_presentation, recognise


def P(*cycles, n=9):
    return Permutation.from_cycles(*cycles, degree=n)


def test_compose_right_action():
    p = compose(P((1, 2), n=3), P((2, 3), n=3))
    assert p == P((1, 3, 2), n=3)
    assert (p(1), p(3), p(2)) == (3, 2, 1)
    q = P((1, 4, 7), (2, 5))
    assert q * Permutation.identity(9) == q
    assert q * q.inverse() == Permutation.identity(9)
    with pytest.raises(ValueError):
        compose(P((1, 2), n=3), P((1, 2), n=4))


def test_inverse_of_product():
    rng = np.random.default_rng(3)
    for _ in range(200):
        p, q = uniform_random("sym", 8, rng), uniform_random("sym", 8, rng)
        assert (p * q).inverse() == q.inverse() * p.inverse()


def test_cycle_type_examples():
    assert sorted(cycle_type(P((1, 2), (3, 4, 5), n=6))) == [1, 2, 3]
    assert cycle_type(Permutation.identity(4)) == [1, 1, 1, 1]
    assert cycle_type(P(tuple(range(1, 10)))) == [9]


def test_conjugation_preserves_cycle_type():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        p, q = uniform_random("sym", 7, rng), uniform_random("sym", 7, rng)
        assert cycle_type(p.conjugate(q)) == cycle_type(p)


def test_constructors_and_images():
    p = Permutation.from_images([2, 3, 1, 4])
    assert p == P((1, 2, 3), n=4)
    assert p.images == (2, 3, 1, 4)
    assert p.support() == {1, 2, 3}
    assert p.order() == 3 and p.is_even()
    with pytest.raises(ValueError):
        Permutation.from_images([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation.from_cycles((1, 2), (2, 3))


def test_uniform_random_trivial_degree():
    assert uniform_random("sym", 1, np.random.default_rng(0)) == Permutation.identity(1)


def _chi_squared_ok(counts, cells, draws):
    # chi-squared critical values at significance 1e-3
    critical = {23: 49.73, 11: 31.26}[cells - 1]
    expected = draws / cells
    stat = sum((counts.get(c, 0) - expected) ** 2 / expected for c in range(cells))
    return stat < critical


def test_sym4_uniformity_chi_squared():
    rng = np.random.default_rng(11)
    index = {p: i for i, p in enumerate(permutations(range(4)))}
    draws = 100_000
    counts = Counter(index[uniform_random("sym", 4, rng)._img] for _ in range(draws))
    assert len(counts) == 24
    assert _chi_squared_ok(counts, 24, draws)


def test_alt4_uniformity_and_parity():
    rng = np.random.default_rng(12)
    evens = [p for p in permutations(range(4)) if Permutation(p).is_even()]
    index = {p: i for i, p in enumerate(evens)}
    draws = 60_000
    counts = Counter(index[uniform_random("alt", 4, rng)._img] for _ in range(draws))
    assert _chi_squared_ok(counts, 12, draws)
    assert all(uniform_random("alt", 7, rng).is_even() for _ in range(10_000))


@pytest.mark.parametrize("name,order", [("c30", 30), ("d20", 20), ("psl28", 504), ("m11", 7920)])
def test_negative_control_orders(name, order):
    assert len(enumerate_group(NEGATIVE_CONTROLS[name])) == order


def test_psl28_is_perfect_with_right_degree():
    gens = NEGATIVE_CONTROLS["psl28"]
    assert {g.degree for g in gens} == {9}
    elts = enumerate_group(gens)
    orders = Counter(p.order() for p in elts)
    # PSL(2,8) has element orders 1, 2, 3, 7, 9 only
    assert set(orders) == {1, 2, 3, 7, 9}


def test_group_spec_round_trip(tmp_path):
    spec = GroupSpec.named("m11", shroud_seed=5, padding=3)
    path = tmp_path / "g.json"
    save_group_spec(spec, path)
    back = load_group_spec(path)
    assert back.to_json() == spec.to_json()
    assert json.loads(path.read_text())["shroud"] == {"seed": 5, "padding": 3}
    with pytest.raises(ValueError):
        GroupSpec.from_json({"kind": "generators", "generators": []})
    with pytest.raises(ValueError):
        GroupSpec("alt", 0)
    with pytest.raises(ValueError):
        GroupSpec.named("foo-9")


def test_shroud_is_an_isomorphism():
    spec = GroupSpec("sym", 9, padding=4)
    G = shroud(spec, 99)
    for _ in range(1000):
        x, y = G.random(), G.random()
        assert perm_of(G, G.mul(x, y)) == perm_of(G, x) * perm_of(G, y)
    assert len(G.random()._h) == 13


def test_shrouded_generators_are_relabeled_originals():
    spec = GroupSpec("alt", 9)
    G = shroud(spec, 4)
    assert [perm_of(G, g) for g in G.generators] == spec.generators


def test_oracle_surface_is_the_contract():
    G = shroud(GroupSpec("alt", 9), 1)
    public = {name for name in dir(G) if not name.startswith("_") and callable(getattr(G, name))}
    assert public == {"mul", "inv", "eq", "random", "identity"}


def test_same_seed_same_stream():
    a, b = shroud(GroupSpec("sym", 10), 8), shroud(GroupSpec("sym", 10), 8)
    assert all(a.eq(a.random(), a.random()) == b.eq(b.random(), b.random()) for _ in range(20))
    a, b = shroud(GroupSpec("sym", 10), 8), shroud(GroupSpec("sym", 10), 8)
    assert [a.random()._h for _ in range(5)] == [b.random()._h for _ in range(5)]


def test_padding_is_invisible_to_recognition():
    G = shroud(GroupSpec("sym", 9, padding=12), 2024)
    out = recognise(G, 0.1, 32)
    assert out.success and out.degree == 9 and out.kind == "sym"


def test_is_matching_cycle_examples():
    g = P(tuple(range(1, 10)))
    assert is_matching_cycle(g, P((1, 2, 3)), 9)
    assert not is_matching_cycle(g, P((1, 3, 2)), 9)
    assert not is_matching_cycle(P((2, 1) + tuple(range(3, 10))), P((1, 2, 3)), 9)


def test_standard_generator_perms_satisfy_presentation():
    for n in range(5, 16):
        s, t = standard_generator_perms(n)
        G = natural_oracle("sym", n)
        from altsym.perm import element_of
        assert check_carmichael_presentation(G, element_of(G, s), element_of(G, t), n)


def test_product_replacement_fallback_stays_in_group():
    gens = [P((1, 2, 3)), P(tuple(range(1, 10)))]
    spec = GroupSpec("generators", 0, gens)
    G = PermutationOracle.__new__(PermutationOracle)
    import altsym.perm as perm_mod
    original = perm_mod.enumerate_group
    perm_mod.enumerate_group = lambda g, cap=0: None
    try:
        PermutationOracle.__init__(G, spec, np.random.default_rng(0))
    finally:
        perm_mod.enumerate_group = original
    for _ in range(200):
        assert perm_of(G, G.random()).is_even()
