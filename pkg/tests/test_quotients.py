import itertools

import pytest
from hypothesis import given, settings

from coverdeal import (
    HFamilySpec,
    Monomial,
    MonomialIdeal,
    QuotientCertificate,
    ResourceLimitError,
    UnsupportedConfiguration,
    betti_from_certificate,
    closed_form_cover_ideal_h,
    h_family_order,
    search_linear_quotients,
    verify_linear_quotients,
)
from coverdeal.quotients import SearchConfig, order_of_monomials, resolution_shape

from oracles import hochster_betti
from strategies import h_specs


def mono(*vs):
    return Monomial.of(*vs)


def test_example_29_certificate(ex29):
    i = closed_form_cover_ideal_h(ex29)
    order = order_of_monomials(i, [mono(2, 4, 6), mono(2, 4, 5), mono(2, 3, 6), mono(1, 4, 6)])
    cert = verify_linear_quotients(i, order)
    assert isinstance(cert, QuotientCertificate)
    assert cert.q_values == [1, 1, 1]
    assert cert.q == 1
    # each colon is the swapped-out centre
    assert cert.colon_vars == ((6,), (4,), (2,))


def test_principal_and_failure():
    single = MonomialIdeal.from_supports(3, [[1, 2]])
    cert = verify_linear_quotients(single, [0])
    assert cert.q_values == [] and cert.q == 0
    two = MonomialIdeal.from_supports(4, [[1, 2], [3, 4]])
    for order in ([0, 1], [1, 0]):
        fail = verify_linear_quotients(two, order)
        assert not fail
        assert fail.position == 2
        assert fail.witness.degree == 2
    # u1 = X3X4, u2 = X1X2: the colon is (X3X4)
    assert verify_linear_quotients(two, [1, 0]).witness == mono(3, 4)


def test_verify_rejects_non_permutation(ex29):
    i = closed_form_cover_ideal_h(ex29)
    with pytest.raises(ValueError):
        verify_linear_quotients(i, [0, 0, 1, 2])


def test_h_family_order_examples(ex29, ex16):
    i = closed_form_cover_ideal_h(ex29)
    assert [str(i.gens[k]) for k in h_family_order(ex29, i)] == ["X2*X4*X6", "X2*X4*X5", "X2*X3*X6", "X1*X4*X6"]

    i = closed_form_cover_ideal_h(ex16)
    order = h_family_order(ex16, i)
    assert [str(i.gens[k]) for k in order] == [
        "X2*X6*X8*X11", "X2*X6*X8*X9*X10", "X2*X6*X7*X11", "X2*X3*X4*X5*X8*X11", "X1*X6*X8*X11",
    ]
    cert = verify_linear_quotients(i, order)
    assert cert.q == 1 and cert.q_values == [1, 1, 1, 1]

    m2 = HFamilySpec(4, (2, 4), {2: [1], 4: [3]})
    i = closed_form_cover_ideal_h(m2)
    order = h_family_order(m2, i)
    assert [str(i.gens[k]) for k in order] == ["X2*X4", "X2*X3", "X1*X4"]
    assert verify_linear_quotients(i, order).q == 1


def test_m2_brute_force_orderings():
    # every ordering of (X2X4, X2X3, X1X4) checked directly
    i = MonomialIdeal.from_supports(4, [[2, 4], [2, 3], [1, 4]])
    good = [p for p in itertools.permutations(range(3)) if verify_linear_quotients(i, p)]
    target = tuple(order_of_monomials(i, [mono(2, 4), mono(2, 3), mono(1, 4)]))
    assert target in good
    # X2X3 and X1X4 share no variable, so they cannot be the first two
    a, b = order_of_monomials(i, [mono(2, 3), mono(1, 4)])
    assert all({p[0], p[1]} != {a, b} for p in good)
    assert len(good) == 4


def test_h_family_order_single_star_cases():
    # star at the first centre, starless elsewhere
    spec = HFamilySpec(5, (3, 4, 5), {3: [1, 2]})
    i = closed_form_cover_ideal_h(spec)
    order = h_family_order(spec, i)
    assert [i.gens[k].support for k in order] == [[3, 4], [3, 5], [1, 2, 4, 5]]
    assert verify_linear_quotients(i, order).q == 1
    # star at the last centre: the leafless generator must still come first
    spec = HFamilySpec(5, (1, 2, 5), {5: [3, 4]})
    i = closed_form_cover_ideal_h(spec)
    order = h_family_order(spec, i)
    assert [i.gens[k].support for k in order] == [[1, 5], [1, 2, 3, 4], [2, 5]]
    assert verify_linear_quotients(i, order).q == 1


def test_h_family_order_rejects_mixed():
    spec = HFamilySpec.from_counts([1, 1, 0, 0])
    with pytest.raises(UnsupportedConfiguration):
        h_family_order(spec, MonomialIdeal.from_supports(spec.n, [[1]]))


@settings(max_examples=150)
@given(h_specs(max_n=12))
def test_family_order_certifies_every_spec(spec):
    i = closed_form_cover_ideal_h(spec)
    cert = verify_linear_quotients(i, h_family_order(spec, i))
    assert cert
    assert cert.q_values == [1] * (len(i) - 1)
    shape = resolution_shape(i, cert)
    assert shape.length == cert.q + 1 == 2
    assert shape.betti[1] == len(i)


def test_search_examples(ex29):
    cert = search_linear_quotients(closed_form_cover_ideal_h(ex29))
    assert cert and cert.q == 1
    assert search_linear_quotients(MonomialIdeal.from_supports(1, [[1]])).q_values == []
    assert search_linear_quotients(MonomialIdeal.from_supports(4, [[1, 2], [3, 4]])) is None


def test_search_is_lex_first():
    i = MonomialIdeal.from_supports(4, [[2, 4], [2, 3], [1, 4]])
    good = sorted(p for p in itertools.permutations(range(3)) if verify_linear_quotients(i, p))
    assert search_linear_quotients(i).order == good[0]


def test_search_bound():
    i = MonomialIdeal.from_supports(13, [[k] for k in range(1, 14)])
    with pytest.raises(ResourceLimitError):
        search_linear_quotients(i)
    assert search_linear_quotients(i, SearchConfig(max_generators=13)).q == 12


@settings(max_examples=60, deadline=None)
@given(h_specs(max_n=8))
def test_q_independent_of_order(spec):
    i = closed_form_cover_ideal_h(spec)
    if len(i) > 6:
        return
    qs = {c.q for p in itertools.permutations(range(len(i))) if (c := verify_linear_quotients(i, p))}
    assert qs == {1}


def test_betti_examples(ex29, ex16):
    i = closed_form_cover_ideal_h(ex29)
    cert = verify_linear_quotients(i, h_family_order(ex29, i))
    shape = betti_from_certificate(cert, i.degrees())
    assert shape.betti == (1, 4, 3)
    assert shape.shifts == ((0,), (3, 3, 3, 3), (4, 4, 4))
    assert shape.render() == "0 -> R^3(-4) -> R^4(-3) -> R -> R/I -> 0"

    principal = MonomialIdeal.from_supports(5, [[1, 2, 3]])
    shape = resolution_shape(principal, verify_linear_quotients(principal, [0]))
    assert shape.betti == (1, 1) and shape.shifts == ((0,), (3,))

    i = closed_form_cover_ideal_h(ex16)
    shape = resolution_shape(i, verify_linear_quotients(i, h_family_order(ex16, i)))
    assert shape.betti == (1, 5, 4)
    assert shape.shifts[2] == (5, 5, 6, 7)
    assert shape.regularity() == 5


def _graded(shape):
    out = {}
    for i, ds in enumerate(shape.shifts):
        for d in ds:
            out[(i, d)] = out.get((i, d), 0) + 1
    return out


def test_betti_against_hochster_examples(ex29, ex16):
    for spec in (ex29, ex16):
        i = closed_form_cover_ideal_h(spec)
        shape = resolution_shape(i, verify_linear_quotients(i, h_family_order(spec, i)))
        assert _graded(shape) == hochster_betti(spec.n, i.supports)


@settings(max_examples=40, deadline=None)
@given(h_specs(max_n=8))
def test_betti_against_hochster(spec):
    i = closed_form_cover_ideal_h(spec)
    shape = resolution_shape(i, verify_linear_quotients(i, h_family_order(spec, i)))
    assert _graded(shape) == hochster_betti(spec.n, i.supports)
    if i.is_equigenerated():
        d = i.degrees()[0]
        assert all(s == d + k - 1 for k, ds in enumerate(shape.shifts) if k for s in ds)


def test_koszul_pair_by_hochster():
    # variables X1, X2 have linear quotients with q = 1: 0 -> R(-2) -> R^2(-1) -> R
    i = MonomialIdeal.from_supports(2, [[1], [2]])
    shape = resolution_shape(i, search_linear_quotients(i))
    assert _graded(shape) == hochster_betti(2, i.supports)
