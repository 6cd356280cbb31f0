import pytest

from brionatoms import coxeter as cx
from brionatoms import words as wd
from brionatoms.matchings import from_half_blocks


def test_dedup():
    assert wd.dedup([2, -1, 3, 3, 5, 4, 2, 5, 3, 4]) == (2, -1, 3, 5, 4)
    assert wd.dedup([4, 1, 3]) == (4, 1, 3)
    assert wd.dedup([1, 1, 1]) == (1,)
    assert wd.dedup([]) == ()


def test_assemble():
    pairs = {(2, 2), (3, 4), (1, 5)}
    assert wd.assemble(pairs, "des") == (2, 4, 3, 5, 1)
    assert wd.assemble(pairs, "asc") == (2, 3, 4, 1, 5)
    assert wd.assemble({(7, 7)}, "des") == (7,)
    with pytest.raises(ValueError):
        wd.assemble(pairs, "up")


def test_cyc_sets_unsigned():
    z = cx.WeylElement("A", (5, 2, 4, 3, 1))
    assert wd.cyc_sets(z) == frozenset({(2, 2), (3, 4), (1, 5)})
    ident = cx.identity("A", 2)
    assert wd.cyc_sets(ident) == frozenset({(1, 1), (2, 2), (3, 3)})
    with pytest.raises(ValueError):
        wd.cyc_sets(cx.WeylElement("A", (2, 3, 1)))


def test_cyc_sets_signed():
    z = cx.WeylElement("BC", (1, -2, 6, -5, -4, 3))
    assert wd.cyc_sets(z) == frozenset({(3, 6), (-4, 5), (1, 1)})
    with pytest.raises(ValueError):
        wd.cyc_sets(cx.identity("A", 2), from_half_blocks([1], [(-1, 1)]))


def test_cyc_sets_with_matching():
    z = cx.WeylElement("BC", (-1, -2))
    assert wd.cyc_sets(z) == frozenset()
    paired = from_half_blocks([1, 2], [(1, 2)])
    assert wd.cyc_sets(z, paired) == frozenset({(-2, 1)})
    trivial = from_half_blocks([1, 2], [(-1, 1), (-2, 2)])
    assert wd.cyc_sets(z, trivial) == frozenset()
    off_support = from_half_blocks([1], [(-1, 1)])
    with pytest.raises(ValueError):
        wd.cyc_sets(cx.WeylElement("BC", (1, -2)), off_support)


def test_twisted_cyc_sets():
    z = cx.longest_element("A", 2)
    m = from_half_blocks([1, 2, 3], [(1, 2), (-3, 3)])
    assert wd.twisted_cyc_sets(z, m) == frozenset({(1, 2)})
    with pytest.raises(ValueError):
        wd.twisted_cyc_sets(cx.identity("BC", 2), m)


def test_nested_descents():
    ndes, nres = wd.nested_descents((4, 5, 3, 6, 2))
    assert ndes == frozenset({(5, 3), (6, 2)})
    assert nres == frozenset({4})
    ndes, nres = wd.nested_descents((1, 6, -5, -2, 3, 4, 8, 7))
    assert ndes == frozenset({(6, -5), (1, -2), (8, 7)})
    assert nres == frozenset({3, 4})
    ndes, nres = wd.nested_descents((-6, -5, -1, -2, 3, 4, 8, 7))
    assert ndes == frozenset({(-1, -2), (8, 7)})
    assert nres == frozenset({-6, -5, 3, 4})
    with pytest.raises(ValueError):
        wd.nested_descents((1, 2, 1))


def test_ndes_pm():
    assert wd.ndes_pm((1, 6, -5, -2, 3, 4, 8, 7)) == frozenset(
        {(6, -5), (1, -2), (8, 7)}
    )
    assert wd.ndes_pm((-6, -5, -1, -2, 3, 4, 8, 7)) == frozenset(
        {(-1, -2), (8, 7), (-6, -5)}
    )
    assert wd.ndes_pm((-3, 2)) == frozenset({(-3, 2)})
    assert wd.ndes_pm((-2, 3)) == frozenset()


def test_rank_d():
    assert wd.rank_d((1, 6, -5, -2, 3, 4, 8, 7)) == 1
    assert wd.rank_d((-6, -5, -1, -2, 3, 4, 8, 7)) == 2
    assert wd.rank_d((1, 2, 3, 4)) == 0
    assert wd.rank_d((2, -1, 3), 1) == 1
    with pytest.raises(ValueError):
        wd.rank_d((1, -1, 2))


def test_standardize():
    assert wd.standardize((5, 2, 9)).oneline == (2, 1, 3)
    assert wd.standardize((2, 1, 3)).oneline == (2, 1, 3)
    with pytest.raises(ValueError):
        wd.standardize((1, 1))


def test_precsim_order():
    order = wd.WordOrder("precsim", 0)
    assert wd.order_leq(order, (2, 3, 1), (3, 1, 2))
    assert wd.order_leq(order, (2, 3, 1), (2, 3, 1))
    assert not wd.order_leq(order, (3, 1, 2), (2, 3, 1))
    assert not wd.order_leq(wd.WordOrder("precsim", 1), (2, 3, 1), (3, 1, 2))
    assert wd.moves_up(order, (1, 2, 3)) == set()
    with pytest.raises(ValueError):
        wd.order_leq(order, (1, 2), (1, 2, 3))


def test_precapprox_order():
    order = wd.WordOrder("precapprox", 0)
    assert wd.order_leq(order, (2, 3, 1, 4), (1, 4, 2, 3))
    # moves must start at positions of the right parity
    assert wd.moves_up(order, (1, 3, 4, 2, 5)) == set()
    universe = {(2, 3, 1, 4), (1, 4, 2, 3)}
    assert wd.up_set(wd.WordOrder("precapprox", 1), (2, 3, 1, 4), universe) == {
        (2, 3, 1, 4)
    }


def test_precapprox_graded_by_alternating_inversions():
    order = wd.WordOrder("precapprox", 0)
    start = (3, 5, 1, 6, 2, 4)

    def alt_inv(word, k=0):
        sub = [word[i] for i in range(k + 1, len(word), 2)]
        return wd.word_inversions(sub)

    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for w2 in wd.moves_up(order, w):
                assert alt_inv(w2) == alt_inv(w) + 1
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
        frontier = nxt
    assert len(seen) > 1


def test_precsim_d_order():
    order = wd.WordOrder("precsim_d", 0)
    assert wd.order_leq(order, (-2, 3, 1), (-3, 1, 2))
    assert wd.moves_up(order, (-2, 3, 1)) == {(-3, 1, 2)}
    assert wd.moves_down(order, (-3, 1, 2)) == {(-2, 3, 1)}
    # the sign move only applies at the start of the word
    assert wd.moves_up(order, (4, -2, 3, 1)) == set()
    with pytest.raises(ValueError):
        wd.WordOrder("precsim_d", 2)


def test_ll_d_order():
    order = wd.WordOrder("ll_d", 0)
    assert wd.order_leq(order, (1, -2, 3, -4), (1, -4, 2, -3))
    assert not wd.order_leq(wd.WordOrder("precsim_d", 0), (1, -2, 3, -4), (1, -4, 2, -3))
    assert wd.moves_down(order, (1, -4, 2, -3)) == {(1, -2, 3, -4)}
    # blocked when an intermediate letter is too large
    assert (5, -4, 1, 2, -3) not in wd.moves_up(order, (5, -2, 1, 3, -4))


def test_prec_aiii_order():
    order = wd.WordOrder("prec_aiii", 0)
    assert wd.order_leq(order, (1, 2, 4, 3), (2, 1, 3, 4))
    assert not wd.order_leq(wd.WordOrder("prec_aiii", 1), (1, 2, 4, 3), (2, 1, 3, 4))
    # the two swapped pairs sit at mirrored positions
    assert wd.moves_up(order, (5, 1, 2, 4, 3)) == set()


def test_precsim_di_order():
    order = wd.WordOrder("precsim_di", 2)
    assert wd.moves_up(order, (-3, 2, 1, 4)) == {(3, 2, -1, 4)}
    assert wd.moves_down(order, (3, 2, -1, 4)) == {(-3, 2, 1, 4)}
    assert wd.order_leq(order, (-3, 2, 1, 4), (3, 2, -1, 4))
    # k = 0 falls back to the unparametrized signed order
    zero = wd.WordOrder("precsim_di", 0)
    assert wd.moves_up(zero, (-2, 3, 1)) == {(-3, 1, 2)}


def test_up_set_identity_is_isolated():
    order = wd.WordOrder("precsim", 0)
    perms = [p.oneline for p in cx.elements("A", 3)]
    assert wd.up_set(order, (1, 2, 3, 4), perms) == {(1, 2, 3, 4)}


WELL_NESTED_FAMILY = [
    (4, 5, 3, 6, 2),
    (4, 5, 6, 2, 3),
    (4, 6, 2, 5, 3),
    (5, 3, 4, 6, 2),
    (5, 3, 6, 2, 4),
    (5, 6, 2, 3, 4),
    (6, 2, 4, 5, 3),
    (6, 2, 5, 3, 4),
]


def test_well_nested_check():
    assert wd.well_nested_check(WELL_NESTED_FAMILY)
    assert not wd.well_nested_check([(3, 2, 1)])
    assert wd.well_nested_check([(1, 2, 3)])
    assert not wd.well_nested_check([(2, 3, 1)])
    assert wd.has_consecutive_321((1, 5, 4, 3))
    assert not wd.has_consecutive_321((5, 1, 4, 3))


def test_any_descent_removal_matches_first_descent():
    # in a well-nested family the nested descents do not depend on which
    # descent is removed at each step
    for w in WELL_NESTED_FAMILY:
        ndes, nres = wd.nested_descents(w)
        stack = [(list(w), frozenset())]
        while stack:
            word, acc = stack.pop()
            descents = [j for j in range(len(word) - 1) if word[j] > word[j + 1]]
            if not descents:
                assert acc == ndes
                assert frozenset(word) == nres
                continue
            for j in descents:
                rest = word[:j] + word[j + 2 :]
                stack.append((rest, acc | {(word[j], word[j + 1])}))


def test_nested_descent_pairs_are_nested():
    # crossing descent pairs cannot occur inside a well-nested family
    for w in WELL_NESTED_FAMILY:
        ndes, _ = wd.nested_descents(w)
        pos = {a: i for i, a in enumerate(w)}
        for (wi, wj) in ndes:
            for (wk, wl) in ndes:
                if wi < wk and wj < wl:
                    assert pos[wi] < pos[wj] < pos[wk] < pos[wl]


def test_family_minimum_and_grading():
    order = wd.WordOrder("precsim", 0)

    def rank(w):
        ndes, _ = wd.nested_descents(w)
        right = {b for _, b in ndes}
        w_r = [a for a in w if a in right]
        w_l = [a for a in w if a not in right]
        return wd.word_inversions(w_l) - wd.word_inversions(w_r)

    for w in WELL_NESTED_FAMILY:
        ndes, nres = wd.nested_descents(w)
        pairs = {(b, a) for (a, b) in ndes} | {(c, c) for c in nres}
        bottom = wd.assemble(pairs, "des")
        assert wd.order_leq(order, bottom, w)
        for w2 in wd.moves_up(order, w):
            assert rank(w2) == rank(w) + 1


def test_standardized_family_is_one_atom_set():
    # brute-force oracle: atoms of an involution z are the minimal-length
    # permutations w whose Demazure product with their inverse equals z
    by_inv = {}
    for w in cx.elements("A", 4):
        z = cx.demazure(w, cx.invert(w))
        by_inv.setdefault(z, []).append(w)
    atom_sets = {}
    for z, pool in by_inv.items():
        low = min(cx.length(w) for w in pool)
        atom_sets[z] = {w.oneline for w in pool if cx.length(w) == low}
    std = {wd.standardize(w).oneline for w in WELL_NESTED_FAMILY}
    assert std in atom_sets.values()
