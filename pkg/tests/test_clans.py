import pytest

from brionatoms import clans as cl
from brionatoms import coxeter as cx


def test_clan_from_one_line_examples():
    g = cl.clan_from_one_line((1, 2, 3), (1, "+", 1))
    assert g.plus == frozenset({2})
    assert g.minus == frozenset()
    assert g.matching == frozenset({(1, 3)})

    g = cl.clan_from_one_line((1, 2), ("+", "-"))
    assert g.plus == frozenset({1})
    assert g.minus == frozenset({2})
    assert g.matching == frozenset()

    g = cl.clan_from_one_line((-2, -1, 1, 2), (1, 2, 2, 1))
    assert g.matching == frozenset({(-2, 2), (-1, 1)})


def test_one_line_round_trip():
    for base in [(1, 2, 3), (-2, -1, 1, 2), (-1, 0, 1)]:
        for g in cl.all_clans(base):
            assert cl.clan_from_one_line(base, cl.one_line(g)) == g


def test_one_line_errors():
    with pytest.raises(ValueError):
        cl.clan_from_one_line((1, 2, 3), (1, "+", 2))  # unpaired labels
    with pytest.raises(ValueError):
        cl.clan_from_one_line((1, 2, 3), (1, 1))  # length mismatch
    with pytest.raises(ValueError):
        cl.clan_from_one_line((1, 2, 3, 4), (1, 1, 1, 1))  # label used 4 times


def test_fourteen_clans_on_three_points():
    out = cl.all_clans((1, 2, 3))
    assert len(out) == 14
    lines = {cl.one_line(g) for g in out}
    assert (1, 1, "+") in lines
    assert (1, "+", 1) in lines
    assert ("-", 1, 1) in lines
    sign_words = {line for line in lines if all(s in ("+", "-") for s in line)}
    assert len(sign_words) == 8
    assert len(lines) == 14


def test_equivalent_ignores_label_names():
    a = cl.clan_from_one_line((1, 2, 3, 4), ("+", 1, 1, "-"))
    b = cl.clan_from_one_line((1, 2, 3, 4), ("+", 2, 2, "-"))
    assert cl.equivalent(a, b)


def test_conjugate_and_toggle():
    g = cl.clan_from_one_line((1, 2, 3), ("+", "-", "+"))
    assert cl.one_line(cl.conjugate(g)) == ("-", "+", "-")
    assert cl.one_line(cl.toggle(g, {2})) == ("+", "+", "+")
    assert cl.conjugate(cl.conjugate(g)) == g


def test_reversal_is_an_involution():
    for g in cl.all_clans((-2, -1, 1, 2)):
        assert cl.reversal(cl.reversal(g)) == g


def test_symmetry_predicates_on_base_pm1():
    g = cl.clan_from_one_line((-1, 1), ("+", "-"))
    assert not cl.is_symmetric_clan(g)
    assert cl.is_skew_symmetric_clan(g)


def test_dense_clan_predicates():
    for n in (2, 3, 4):
        d = cl.dense_clan(cl.SymSpace("CI", n))
        assert cl.is_symmetric_clan(d) and cl.is_skew_symmetric_clan(d)
        assert d.type == 0
    for n in (1, 3, 5):
        e = cl.dense_clan(cl.SymSpace("DIV", n))
        assert cl.is_even_strict(e) and cl.is_skew_symmetric_clan(e)
    for n in (2, 4):
        e = cl.dense_clan(cl.SymSpace("DIII", n))
        assert cl.is_even_strict(e) and cl.is_skew_symmetric_clan(e)


def test_dense_clan_one_lines():
    assert cl.one_line(cl.dense_clan(cl.SymSpace("AIII", 2, 2, 1))) == (1, "+", 1)
    assert cl.one_line(cl.dense_clan(cl.SymSpace("DIV", 3))) == (1, 2, "+", "-", 1, 2)
    d = cl.dense_clan(cl.SymSpace("BI", 1, 1, 2))
    assert d.base == (-1, 0, 1)
    assert cl.one_line(d) == (1, "-", 1)
    assert cl.one_line(cl.dense_clan(cl.SymSpace("CII", 3, 4, 2))) == (1, 2, "+", "+", 1, 2)
    assert cl.one_line(cl.dense_clan(cl.SymSpace("DIII", 4))) == (1, 2, 3, 4, 3, 4, 1, 2)


def test_dense_matching_pairs_extremes():
    d = cl.dense_clan(cl.SymSpace("BI", 4, 5, 4))
    assert d.matching == frozenset({(-4, 4), (-3, 3), (-2, 2), (-1, 1)})
    g = cl.dense_clan(cl.SymSpace("AIII", 3, 2, 2))
    assert g.matching == frozenset({(1, 4), (2, 3)})


def test_space_validation():
    with pytest.raises(ValueError):
        cl.SymSpace("AII", 2)
    with pytest.raises(ValueError):
        cl.SymSpace("CII", 3, 3, 3)
    with pytest.raises(ValueError):
        cl.SymSpace("DI", 3, 4, 2)  # p+n odd
    with pytest.raises(ValueError):
        cl.SymSpace("DII", 3, 3, 3)  # p+n even
    with pytest.raises(ValueError):
        cl.SymSpace("DIII", 3)
    with pytest.raises(ValueError):
        cl.SymSpace("DIV", 2)
    with pytest.raises(ValueError):
        cl.SymSpace("BI", 2, 2, 2)
    with pytest.raises(ValueError):
        cl.SymSpace("AI", 2, 2, 1)
    assert cl.make_space("BI", p=2, q=3).n == 2
    assert cl.make_space("AIII", p=2, q=2).n == 3


def _oracle_clans(space):
    """Filter the full clan list on the space's base by the defining
    predicates; validates the direct generators."""
    base = space.base_set
    out = []
    for g in cl.all_clans(base):
        if space.case == "AIII":
            ok = g.type == space.p - space.q
        elif space.case in ("BI", "DI", "DII"):
            ok = cl.is_symmetric_clan(g) and g.type == space.p - space.q
        elif space.case == "CII":
            ok = (
                cl.is_symmetric_clan(g)
                and g.type == space.p - space.q
                and cl.is_strict(g)
            )
        elif space.case == "CI":
            ok = cl.is_skew_symmetric_clan(g)
        else:  # DIII, DIV
            ok = cl.is_skew_symmetric_clan(g) and cl.is_even_strict(g)
        if ok:
            out.append(g)
    return out


@pytest.mark.parametrize(
    "case,n,p,q",
    [
        ("AIII", 2, 2, 1),
        ("AIII", 3, 2, 2),
        ("BI", 1, 2, 1),
        ("BI", 2, 3, 2),
        ("BI", 2, 4, 1),
        ("CI", 2, None, None),
        ("CI", 3, None, None),
        ("CII", 2, 2, 2),
        ("CII", 3, 4, 2),
        ("DI", 2, 2, 2),
        ("DI", 3, 3, 3),
        ("DI", 3, 5, 1),
        ("DII", 2, 3, 1),
        ("DII", 3, 4, 2),
        ("DIII", 2, None, None),
        ("DIII", 4, None, None),
        ("DIV", 1, None, None),
        ("DIV", 3, None, None),
    ],
)
def test_enumerate_clans_against_filter_oracle(case, n, p, q):
    space = cl.SymSpace(case, n, p, q)
    direct = cl.enumerate_clans(space)
    assert len(set(direct)) == len(direct)
    assert direct == _oracle_clans(space)


def test_enumerate_clans_type_a_cases():
    assert cl.enumerate_clans(cl.SymSpace("AI", 2)) == cx.involutions("A", 2)
    aii = cl.enumerate_clans(cl.SymSpace("AII", 1))
    assert aii == [cx.simple("A", 1, 1)]


def test_rs_map_examples():
    space = cl.SymSpace("AIII", 2, 2, 1)
    g = cl.clan_from_one_line((1, 2, 3), (1, 1, "+"))
    z = cl.rs_map(space, g)
    assert z.oneline == (2, 3, 1)
    assert cx.is_twisted_involution("star", z)

    space = cl.SymSpace("BI", 4, 5, 4)
    d = cl.dense_clan(space)
    assert cl.rs_map(space, d) == cx.named_element("BC", 4, "sigma", 0)


def test_rs_map_dense_equals_closed_form_image():
    cases = [
        ("AI", 3, None, None),
        ("AII", 3, None, None),
        ("AIII", 4, 3, 2),
        ("AIII", 4, 4, 1),
        ("BI", 3, 4, 3),
        ("BI", 3, 6, 1),
        ("CI", 4, None, None),
        ("CII", 3, 2, 4),
        ("CII", 4, 4, 4),
        ("DI", 4, 4, 4),
        ("DI", 4, 6, 2),
        ("DII", 4, 5, 3),
        ("DII", 2, 1, 3),
        ("DIII", 4, None, None),
        ("DIV", 5, None, None),
        ("DIV", 3, None, None),
    ]
    for case, n, p, q in cases:
        space = cl.SymSpace(case, n, p, q)
        d = cl.dense_clan(space)
        assert cl.rs_map(space, d) == cl.dense_image(space), space


def test_rs_image_counts():
    assert len(cl.rs_image(cl.SymSpace("AI", 2))) == 4
    assert len(cl.rs_image(cl.SymSpace("CI", 2))) == 6


def test_rs_image_matches_map_over_enumeration():
    cases = [
        ("AI", 3, None, None),
        ("AII", 3, None, None),
        ("AIII", 3, 2, 2),
        ("AIII", 3, 3, 1),
        ("BI", 2, 3, 2),
        ("BI", 2, 4, 1),
        ("CI", 3, None, None),
        ("CII", 2, 2, 2),
        ("CII", 3, 4, 2),
        ("DI", 3, 3, 3),
        ("DI", 3, 5, 1),
        ("DII", 3, 4, 2),
        ("DII", 2, 3, 1),
        ("DIII", 4, None, None),
        ("DIV", 3, None, None),
    ]
    for case, n, p, q in cases:
        space = cl.SymSpace(case, n, p, q)
        image = {cl.rs_map(space, g) for g in cl.enumerate_clans(space)}
        closed = set(cl.rs_image(space))
        assert image == closed, space
        theta = space.theta
        assert all(cx.is_twisted_involution(theta, z) for z in image)


def test_strictness_vs_fpf_on_skew_clans():
    for g in cl.enumerate_clans(cl.SymSpace("CI", 3)):
        z = cx.bar_negate(cl.sigma_of_clan(g))
        assert cl.is_strict(g) == (len(cx.fix_set(z)) == 0)


def test_clan_json_round_trip():
    for g in cl.all_clans((-2, -1, 1, 2)):
        assert cl.clan_from_json(cl.clan_to_json(g)) == g
