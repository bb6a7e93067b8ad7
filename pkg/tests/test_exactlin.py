"""Exact linear algebra kernel: fields, composition, Kronecker, inversion."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasibraid.errors import DomainMismatch, FieldError, NotInvertible
from quasibraid.exactlin import (
    K_LABELS,
    LinMap,
    PrimeField,
    QQ,
    compose,
    default_labels,
    field_from_name,
    invert,
    kron,
    kron_all,
    leg_perm,
    swap_map,
)

GF2 = PrimeField(2)
GF5 = PrimeField(5)


# -- fields -----------------------------------------------------------------


def test_rational_scalars_exact():
    third = QQ.div(QQ.one, QQ.scalar(3))
    assert QQ.mul(third, QQ.scalar(3)) == QQ.one
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert QQ.fmt(Fraction(5, 2)) == "5/2"


def test_gf_arithmetic():
    assert GF5.add(3, 4) == 2
    assert GF5.inv(2) == 3
    assert GF5.mul(GF5.inv(4), 4) == 1
    assert GF5.parse("4") == 4
    with pytest.raises(FieldError):
        GF5.parse("7")  # outside canonical range
    with pytest.raises(FieldError):
        GF5.inv(0)
    with pytest.raises(FieldError):
        QQ.div(QQ.one, QQ.zero)


def test_gf_requires_prime():
    with pytest.raises(FieldError):
        PrimeField(6)
    with pytest.raises(FieldError):
        PrimeField(1)
    PrimeField(2)
    PrimeField(97)


def test_field_tags():
    assert field_from_name("Q") == QQ
    assert field_from_name("GF:7") == PrimeField(7)
    with pytest.raises(FieldError):
        field_from_name("R")


# -- frozen examples ---------------------------------------------------------


def test_compose_identity():
    i3 = LinMap.identity(QQ, default_labels(3))
    assert compose(i3, i3) == i3


def test_compose_with_inverse_gives_identity():
    f = LinMap.from_rows(QQ, [[2, 1], [1, 1]])
    assert compose(f, invert(f)) == LinMap.identity(QQ, default_labels(2))


def test_compose_swap_squared_over_gf2():
    # by hand: [[0,1],[1,0]]^2 = [[1,0],[0,1]]
    swap = LinMap.from_rows(GF2, [[0, 1], [1, 0]])
    assert compose(swap, swap) == LinMap.identity(GF2, default_labels(2))


def test_kron_identities():
    i2 = LinMap.identity(QQ, default_labels(2, "a"))
    i3 = LinMap.identity(QQ, default_labels(3, "b"))
    i6 = kron(i2, i3)
    assert i6.rows == i6.cols == 6
    assert i6.entries == {(i, i): QQ.one for i in range(6)}


def test_kron_scalar_case():
    # by hand: [[2]] (x) [[3]] = [[6]]
    assert kron(
        LinMap.from_rows(QQ, [[2]]), LinMap.from_rows(QQ, [[3]])
    ).entries == {(0, 0): Fraction(6)}


def test_kron_defining_property_on_basis():
    f = LinMap.from_rows(QQ, [[1, 2], [0, 1], [3, 0]])
    g = LinMap.from_rows(QQ, [[0, 1], [1, 1]])
    fg = kron(f, g)
    for i in range(2):
        for j in range(2):
            col_f = f.column(i)
            col_g = g.column(j)
            expected = {
                (a * 2 + b): QQ.mul(u, v)
                for a, u in col_f.items()
                for b, v in col_g.items()
            }
            assert fg.column(i * 2 + j) == expected


def test_kron_label_concatenation():
    f = LinMap.identity(QQ, (("x",),))
    g = LinMap.identity(QQ, (("y", "z"),))
    assert kron(f, g).dom == (("x", "y", "z"),)
    # the ground field has the empty label, so k is a tensor unit on labels
    eps_like = LinMap.from_rows(QQ, [[1, 1]], dom=default_labels(2), cod=K_LABELS)
    i2 = LinMap.identity(QQ, default_labels(2))
    assert kron(eps_like, i2).cod == i2.cod


def test_invert_identity_and_permutation():
    i4 = LinMap.identity(QQ, default_labels(4))
    assert invert(i4) == i4
    perm = LinMap.from_permutation(QQ, [2, 0, 1], default_labels(3))
    assert invert(perm) == perm.transpose()


def test_invert_two_by_two_by_hand():
    # elimination by hand: [[1,1],[0,1]]^-1 = [[1,-1],[0,1]]
    f = LinMap.from_rows(QQ, [[1, 1], [0, 1]])
    assert invert(f) == LinMap.from_rows(QQ, [[1, -1], [0, 1]])


def test_invert_singular_reports_rank():
    f = LinMap.from_rows(QQ, [[1, 2], [2, 4]])
    with pytest.raises(NotInvertible) as err:
        invert(f)
    assert err.value.rank == 1


def test_compose_rejects_label_mismatch():
    f = LinMap.identity(QQ, default_labels(2, "a"))
    g = LinMap.identity(QQ, default_labels(2, "b"))
    with pytest.raises(DomainMismatch):
        compose(f, g)
    with pytest.raises(DomainMismatch):
        compose(f, LinMap.identity(QQ, default_labels(3, "a")))


def test_swap_map_is_self_inverse_after_flip():
    a = default_labels(2, "a")
    b = default_labels(3, "b")
    s = swap_map(QQ, a, b)
    s_back = swap_map(QQ, b, a)
    assert compose(s_back, s) == LinMap.identity(QQ, s.dom)


def test_leg_perm_matches_swap():
    a = default_labels(2, "a")
    b = default_labels(3, "b")
    assert leg_perm(QQ, [a, b], (1, 0)) == swap_map(QQ, a, b)
    ident = leg_perm(QQ, [a, b], (0, 1))
    assert ident == LinMap.identity(QQ, ident.dom)


def test_leg_perm_three_cycle():
    legs = [default_labels(2, "a"), default_labels(2, "b"), default_labels(2, "c")]
    rot = leg_perm(QQ, legs, (1, 2, 0))
    # multi-index (0,1,1) rotates to (1,1,0)
    assert rot.column(0b011) == {0b110: QQ.one}
    assert rot.dom[0b011] == ("a0", "b1", "c1")
    assert rot.cod[0b110] == ("b1", "c1", "a0")


def test_apply_and_column():
    f = LinMap.from_rows(QQ, [[1, 2], [3, 4]])
    assert f.column(1) == {0: Fraction(2), 1: Fraction(4)}
    out = f.apply({0: Fraction(1), 1: Fraction(-1)})
    assert out == {0: Fraction(-1), 1: Fraction(-1)}


# -- algebraic properties (hypothesis) ---------------------------------------

small_scalar = st.integers(min_value=-3, max_value=3)


def matrices(field, rows, cols):
    return st.lists(
        st.lists(small_scalar, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda data: LinMap.from_rows(field, data))


dims = st.integers(min_value=1, max_value=3)
fields = st.sampled_from([QQ, GF5])


@st.composite
def compose_triples(draw):
    field = draw(fields)
    a, b, c, d = (draw(dims) for _ in range(4))
    f = draw(matrices(field, a, b))
    g = draw(matrices(field, b, c))
    h = draw(matrices(field, c, d))
    return f, g, h


@settings(max_examples=60, deadline=None)
@given(compose_triples())
def test_compose_associative(fgh):
    f, g, h = fgh
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@st.composite
def interchange_quads(draw):
    field = draw(fields)
    a, b, c = draw(dims), draw(dims), draw(dims)
    d, e, f_ = draw(dims), draw(dims), draw(dims)
    return (
        draw(matrices(field, a, b)),
        draw(matrices(field, b, c)),
        draw(matrices(field, d, e)),
        draw(matrices(field, e, f_)),
    )


@settings(max_examples=60, deadline=None)
@given(interchange_quads())
def test_kron_interchange_law(quad):
    f, g, fp, gp = quad
    lhs = kron(compose(f, g), compose(fp, gp))
    rhs = compose(kron(f, fp), kron(g, gp))
    assert lhs.same_entries(rhs)


@st.composite
def square_matrices(draw):
    field = draw(fields)
    n = draw(dims)
    return draw(matrices(field, n, n))


@settings(max_examples=60, deadline=None)
@given(square_matrices())
def test_invert_round_trip(f):
    try:
        g = invert(f)
    except NotInvertible:
        return
    ident = LinMap.identity(f.field, f.dom)
    assert compose(f, g).same_entries(ident)
    assert compose(g, f).same_entries(ident)


@st.composite
def square_triples(draw):
    field = draw(fields)
    return tuple(draw(matrices(field, n, n)) for n in (draw(dims), draw(dims), draw(dims)))


@settings(max_examples=40, deadline=None)
@given(square_triples())
def test_kron_associative_on_entries(triple):
    a, b, c = triple
    assert kron(kron(a, b), c).same_entries(kron(a, kron(b, c)))


def test_kron_all_folds_left():
    a = LinMap.from_rows(QQ, [[2]])
    b = LinMap.from_rows(QQ, [[3]])
    c = LinMap.from_rows(QQ, [[5]])
    assert kron_all(a, b, c).entries == {(0, 0): Fraction(30)}
