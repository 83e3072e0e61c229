from math import factorial, gcd

import pytest
import sympy

from codegree import catalog
from codegree.catalog import CatalogError, Family, alternating, lie, sporadic
from codegree.exact import FactoredInteger, factorize
from codegree.verifier import GridConfig, prime_powers, table1_grid


def psl2_order(q):
    return q * (q * q - 1) // gcd(2, q - 1)


def test_orders_of_small_groups():
    assert catalog.order_value(lie("An", n=1, q=5)) == 60
    assert catalog.order_value(lie("An", n=1, q=4)) == 60
    assert catalog.order_value(lie("An", n=1, q=7)) == 168
    assert catalog.order_value(lie("An", n=2, q=2)) == 168
    assert catalog.order_value(lie("G2", q=3)) == 3**6 * (3**6 - 1) * (3**2 - 1) == 4245696


def test_sporadic_orders_pinned():
    assert catalog.order(sporadic("Tits")).factors == {2: 11, 3: 3, 5: 2, 13: 1}
    assert catalog.order_value(sporadic("Tits")) == 17971200
    assert catalog.order(sporadic("Fi22")).factors == {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1}
    assert catalog.order_value(sporadic("Fi22")) == 64561751654400
    assert catalog.order_value(sporadic("ON")) == 460815505920


def test_sporadic_rows():
    on = catalog.sporadic_row("O'N")
    assert on.min_ext_degree == 10944 and on.char_label == "chi2"
    assert factorize(10944) == FactoredInteger({2: 6, 3: 2, 19: 1})
    assert catalog.sporadic_row("M11").min_ext_degree == 10
    assert catalog.sporadic_row("B").min_ext_degree == 4371
    assert catalog.sporadic_row("M").min_ext_degree == 196883
    assert catalog.sporadic_row("Fi22").min_ext_degree == 2**17 * 11
    assert len(catalog.sporadic_names()) == 26


def test_sporadic_orders_match_known_decimals():
    known = {
        "M11": 7920,
        "M12": 95040,
        "J1": 175560,
        "M22": 443520,
        "J2": 604800,
        "M23": 10200960,
        "HS": 44352000,
        "J3": 50232960,
        "M24": 244823040,
        "McL": 898128000,
        "He": 4030387200,
        "M": 808017424794512875886459904961710757005754368000000000,
    }
    for name, value in known.items():
        assert catalog.sporadic_row(name).order.value == value


def test_degrees_divide_orders():
    for name, row in catalog.sporadic_table().items():
        assert row.order.value % row.min_ext_degree == 0, name


def test_unknown_sporadic():
    with pytest.raises(CatalogError):
        catalog.sporadic_row("M13")


def test_theta1_examples():
    assert catalog.theta1_degree(lie("An", n=2, q=3)) == 12
    assert catalog.theta1_degree(lie("3D4", q=2)) == 26
    assert catalog.theta1_degree(lie("2B2", Q=8)) == 14
    assert catalog.theta1_degree(lie("2F4", Q=2**3)) > 1


def test_theta1_rejects_uncovered_families():
    for d in (lie("G2", q=4), lie("2G2", Q=27), lie("An", n=1, q=8), sporadic("ON")):
        with pytest.raises(CatalogError):
            catalog.theta1_degree(d)


def test_steinberg_examples():
    assert catalog.steinberg_degree(lie("An", n=1, q=7)) == 7
    assert catalog.steinberg_degree(lie("G2", q=3)) == 729
    assert catalog.steinberg_degree(lie("An", n=2, q=2)) == 8
    with pytest.raises(CatalogError):
        catalog.steinberg_degree(sporadic("M11"))


def test_alternating_theta():
    assert catalog.alternating_theta(5) == 4
    assert catalog.alternating_theta(6) == 9
    assert catalog.alternating_theta(10) == 35
    with pytest.raises(CatalogError):
        catalog.alternating_theta(4)


def test_out_bounds():
    assert catalog.out_bound(lie("G2", q=4)) == 4
    assert catalog.out_bound(lie("G2", q=3)) == 2
    assert catalog.out_bound(lie("2G2", Q=27)) == 3
    assert catalog.out_bound(sporadic("Fi22")) == 2
    assert catalog.out_bound(lie("An", n=1, q=9)) == 4
    with pytest.raises(CatalogError):
        catalog.out_bound(lie("E8", q=2))


@pytest.mark.parametrize(
    "make",
    [
        lambda: lie("An", n=1, q=2),
        lambda: lie("An", n=1, q=3),
        lambda: lie("2An", n=2, q=2),
        lambda: lie("Bn", n=2, q=2),
        lambda: lie("Cn", n=2, q=2),
        lambda: lie("G2", q=2),
        lambda: lie("An", n=2, q=6),
        lambda: lie("Dn", n=3, q=2),
        lambda: lie("2B2", Q=2),
        lambda: lie("2B2", Q=4),
        lambda: lie("2G2", Q=9),
        lambda: alternating(4),
    ],
)
def test_invalid_descriptors(make):
    with pytest.raises(CatalogError):
        make()


def test_twisted_parameters_accept_q_or_Q():
    assert lie("2Dn", n=4, q=2) == lie("2Dn", n=4, Q=4)
    assert lie("3D4", q=2).Q == 8


def test_bundled_atlas_orders():
    checks = catalog.lie_atlas_checks()
    assert len(checks) >= 20
    for c in checks:
        assert catalog.order_value(c.descriptor) == c.order.value, c.atlas


def test_psl2_formula_against_direct_count():
    for q in prime_powers(200, start=4):
        assert catalog.order_value(lie("An", n=1, q=q)) == psl2_order(q)


def test_alternating_order():
    for n in range(5, 31):
        assert catalog.order_value(alternating(n)) == factorial(n) // 2


def test_factorize_order_matches_sympy():
    for d in (lie("E6", q=3), lie("2E6", q=2), lie("Bn", n=5, q=7), lie("2F4", Q=8), lie("2G2", Q=3**5)):
        assert catalog.factorize_order(d).factors == sympy.factorint(catalog.order_value(d))


def test_bn_equals_cn_on_grid():
    for n in range(2, 13):
        for q in prime_powers(200):
            try:
                b = lie("Bn", n=n, q=q)
            except CatalogError:
                continue
            assert catalog.order_value(b) == catalog.order_value(lie("Cn", n=n, q=q))


def _lie_grid():
    cfg = GridConfig(q_max=64, n_max=8, m_max=5)
    yield from table1_grid(cfg)
    for q in prime_powers(64):
        if q > 3:
            yield lie("An", n=1, q=q)
        if q > 2:
            yield lie("G2", q=q)
    for m in range(1, 6):
        yield lie("2G2", Q=3 ** (2 * m + 1))


def test_steinberg_cube_bound_and_theta_window():
    seen = 0
    for d in _lie_grid():
        st = catalog.steinberg_degree(d)
        assert catalog.order_value(d) < st**3, d.label
        if d.family in catalog.TABLE1_FAMILIES and not (d.family is Family.A and d.n == 1):
            assert 1 < catalog.theta1_degree(d) < st, d.label
        seen += 1
    assert seen > 500


def test_theta1_divides_order():
    for d in table1_grid(GridConfig(q_max=32, n_max=6, m_max=4)):
        assert catalog.order_value(d) % catalog.theta1_degree(d) == 0, d.label


GOOD_ROW = '[[group]]\nname = "X"\norder = "2^2*3*5"\ndegree = 3\nchar_label = "chi2"\nout = 1\n'


def test_parse_sporadic_data_accepts_good_row():
    rows = catalog.parse_sporadic_data(GOOD_ROW)
    assert rows["X"].order.value == 60


@pytest.mark.parametrize(
    "text",
    [
        GOOD_ROW + GOOD_ROW,
        GOOD_ROW.replace('"2^2*3*5"', '"3*2^2"'),
        GOOD_ROW.replace("degree = 3", "degree = 7"),
        GOOD_ROW.replace("out = 1\n", ""),
        GOOD_ROW + "extra = 1\n",
        "[[group]\n",
    ],
)
def test_parse_sporadic_data_rejects(text):
    with pytest.raises(CatalogError):
        catalog.parse_sporadic_data(text)


def test_family_flags():
    assert Family.E8.is_lie and not Family.SPORADIC.is_lie
    assert Family.A.has_rank and not Family.G2.has_rank
