import pytest

import oracles
from schubmin.errors import InvariantViolation, LimitsExceeded, OrderGatingError
from schubmin.generators import Minor, elusive_minors
from schubmin.perm import all_permutations, identity, is_vexillary, parse_permutation
from schubmin.poly import (
    ANTIDIAGONAL, DIAGONAL, Polynomial, initial_term,
    leading_monomial_of_minor, minor_polynomial, var,
)
from schubmin.verify import (
    BuchbergerLimits, WitnessPoint, buchberger_check, certify_minor,
    check_generation, elusive_basis, evaluate_minor, initial_term_cover,
    minimality_certificates, reduce, s_polynomial, witness_point,
)

M = Minor


def test_witness_point_examples(w3142, w_enum):
    assert witness_point(M((2, 3), (1, 2)), w3142).ones == ((2, 2), (3, 1))
    assert witness_point(M((1,), (5,)), w_enum).ones == ((1, 5),)
    assert witness_point(M((1, 2, 3), (5, 7, 8)), w_enum).ones == ((1, 8), (2, 7), (3, 5))
    with pytest.raises(ValueError):
        witness_point(M((1, 2), (1, 2)), w3142)


def test_witness_point_rejects_shared_rows():
    with pytest.raises(ValueError):
        WitnessPoint(3, ((1, 1), (1, 2)))


def test_evaluate_minor(w3142):
    p = witness_point(M((2, 3), (1, 2)), w3142)
    assert evaluate_minor(M((2, 3), (1, 2)), p) == -1
    assert evaluate_minor(M((1,), (1,)), p) == 0
    zero = WitnessPoint(4, ())
    assert all(evaluate_minor(M(I, J), zero) == 0
               for I, J in [((1,), (1,)), ((1, 2), (3, 4)), ((1, 2, 3), (1, 2, 3))])


def test_evaluate_matches_leibniz_and_polynomial():
    w = parse_permutation("619723458")
    for m in elusive_minors(w).elusive:
        p = witness_point(m, w)
        sub = [[p.entry(i, j) for j in m.J] for i in m.I]
        point = {(i, j): 1 for i, j in p.ones}
        assert evaluate_minor(m, p) == oracles.numeric_det(sub) == \
            minor_polynomial(m).evaluate(point)


def test_certificates_3142(w3142):
    certs = minimality_certificates(w3142)
    assert len(certs) == 3
    assert all(c.value_at_point in (1, -1) and c.vanishing_checked == 4 for c in certs)
    assert minimality_certificates(identity(5)) == []


def test_certificate_json(w3142):
    c = certify_minor(M((2, 3), (1, 2)), w3142)
    assert c.to_json() == {"minor": {"I": [2, 3], "J": [1, 2]}, "witness": [[2, 2], [3, 1]],
                           "value": -1, "vanishing_checked": 4}


def test_certificate_failure_is_loud(w3142):
    # feed a bogus "essential" list containing a minor that does not vanish there
    with pytest.raises(InvariantViolation) as info:
        certify_minor(M((2, 3), (1, 2)), w3142, [M((2, 3), (1, 2)), M((2,), (2,))])
    assert info.value.details["nonvanishing"] == {"I": [2], "J": [2]}


@pytest.mark.parametrize("n", range(1, 6))
def test_all_certificates_pass(n):
    for w in all_permutations(n):
        gens = elusive_minors(w)
        certs = minimality_certificates(w)
        assert len(certs) == len(gens.elusive)
        for c in certs:
            assert c.value_at_point in (1, -1)
            assert c.vanishing_checked == len(gens.essential) - 1


def test_reduce_examples(w3142):
    _, basis = elusive_basis(w3142)
    f = minor_polynomial(M((1, 2), (1, 2)))
    trace = reduce(f, basis, ANTIDIAGONAL)
    assert trace.remainder.is_zero()
    assert trace.reconstruct() == f
    empty = reduce(Polynomial(), basis, ANTIDIAGONAL)
    assert empty.remainder.is_zero() and empty.steps == []
    for order in (ANTIDIAGONAL, DIAGONAL):
        t = reduce(var(1, 1) + 1, [var(1, 1)], order)
        assert t.remainder == Polynomial.constant(1)


def test_reduce_remainder_is_reduced():
    basis = [var(1, 1) * var(2, 2) - var(1, 2), var(2, 1) - 3]
    f = var(1, 1) * var(2, 2) * var(2, 1) + 7 * var(2, 1) * var(1, 3) + var(3, 3)
    for order in (ANTIDIAGONAL, DIAGONAL):
        trace = reduce(f, basis, order)
        assert trace.reconstruct() == f
        leads = [initial_term(g, order)[0] for g in basis]
        for mono in trace.remainder:
            assert not any(lm.divides(mono) for lm in leads)


def test_reduce_rejects_non_unit_leading_coefficient():
    with pytest.raises(ValueError):
        reduce(var(1, 1), [2 * var(1, 1)], ANTIDIAGONAL)


@pytest.mark.parametrize("n", range(1, 6))
def test_generation(n):
    for w in all_permutations(n):
        assert check_generation(w, ANTIDIAGONAL) == []


def test_traces_reconstruct_on_s4():
    for w in all_permutations(4):
        minors, basis = elusive_basis(w)
        for em in elusive_minors(w).essential:
            f = minor_polynomial(em.minor)
            assert reduce(f, basis, ANTIDIAGONAL).reconstruct() == f


def test_cover_examples(w3142):
    cover = initial_term_cover(w3142, ANTIDIAGONAL)
    assert cover == {M((1, 2), (1, 2)): M((1,), (2,)), M((1, 3), (1, 2)): M((1,), (2,))}
    assert initial_term_cover(identity(3), ANTIDIAGONAL) == {}
    assert initial_term_cover(identity(3), DIAGONAL) == {}


def test_cover_gating():
    w = parse_permutation("2143")
    with pytest.raises(OrderGatingError):
        initial_term_cover(w, DIAGONAL)
    initial_term_cover(w, ANTIDIAGONAL)


@pytest.mark.parametrize("n", range(1, 7))
def test_cover_soundness(n):
    for w in all_permutations(n):
        orders = [ANTIDIAGONAL] + ([DIAGONAL] if is_vexillary(w) else [])
        gens = elusive_minors(w)
        elusive = set(gens.elusive)
        for order in orders:
            cover = initial_term_cover(w, order)
            assert set(cover) == {em.minor for em in gens.essential} - elusive
            for m, e in cover.items():
                assert e in elusive
                lead_m = initial_term(minor_polynomial(m), order)[0]
                lead_e = initial_term(minor_polynomial(e), order)[0]
                assert lead_e.divides(lead_m)


def test_s_polynomial_examples(w3142):
    _, basis = elusive_basis(w3142)
    for order in (ANTIDIAGONAL, DIAGONAL):
        s = s_polynomial(var(1, 1), var(1, 2), order)
        assert reduce(s, [var(1, 1), var(1, 2)], order).remainder.is_zero()
        f = minor_polynomial(M((1, 2), (1, 2)))
        assert s_polynomial(f, f, order).is_zero()
    a = minor_polynomial(M((1, 2), (1, 2)))
    b = minor_polynomial(M((1, 3), (1, 2)))
    s = s_polynomial(a, b, ANTIDIAGONAL)
    lm = initial_term(a, ANTIDIAGONAL)[0].lcm(initial_term(b, ANTIDIAGONAL)[0])
    assert s.coefficient(lm) == 0
    assert reduce(s, basis, ANTIDIAGONAL).remainder.is_zero()


def test_buchberger_detects_a_non_groebner_set():
    # {x11*x22 - x12*x21, x11*x23 - x13*x21} under the diagonal order: the
    # S-pair leads with x12*x21*x23, which neither initial term divides
    f = minor_polynomial(M((1, 2), (1, 2)))
    g = minor_polynomial(M((1, 2), (1, 3)))
    s = s_polynomial(f, g, DIAGONAL)
    assert not reduce(s, [f, g], DIAGONAL).remainder.is_zero()


def test_buchberger_examples(w3142):
    r = buchberger_check(w3142, ANTIDIAGONAL)
    assert r.passed and r.basis_size == 3
    assert r.to_json()["passed"] is True


def test_buchberger_exhaustive_s4():
    checked = 0
    for w in all_permutations(4):
        r = buchberger_check(w, ANTIDIAGONAL)
        assert r.passed, r.to_json()
        checked += r.pairs_total - r.pairs_skipped
        if is_vexillary(w):
            r = buchberger_check(w, DIAGONAL)
            assert r.passed, r.to_json()
    assert checked > 0


def test_buchberger_gating_and_limits():
    with pytest.raises(OrderGatingError):
        buchberger_check(parse_permutation("2143"), DIAGONAL)
    buchberger_check(parse_permutation("2143"), DIAGONAL, force=True)
    with pytest.raises(LimitsExceeded):
        buchberger_check(parse_permutation("13865742"), ANTIDIAGONAL,
                         BuchbergerLimits(max_n=8, max_basis=50))
    with pytest.raises(LimitsExceeded):
        buchberger_check(parse_permutation("1432"), ANTIDIAGONAL, BuchbergerLimits(max_n=3))


def test_leading_monomial_shortcut_in_cover(w_enum):
    for m, e in initial_term_cover(w_enum, ANTIDIAGONAL).items():
        assert leading_monomial_of_minor(e, ANTIDIAGONAL).divides(
            leading_monomial_of_minor(m, ANTIDIAGONAL))


def test_buchberger_exhaustive_s5():
    for w in all_permutations(5):
        assert buchberger_check(w, ANTIDIAGONAL).passed
        if is_vexillary(w):
            assert buchberger_check(w, DIAGONAL).passed


def test_diagonal_order_fails_for_2143():
    # not vexillary: x11 and the 3x3 leading minor are not a Gröbner basis
    # under the diagonal order
    r = buchberger_check(parse_permutation("2143"), DIAGONAL, force=True)
    assert not r.passed
    assert r.failure[:2] == (M((1,), (1,)), M((1, 2, 3), (1, 2, 3)))
    assert buchberger_check(parse_permutation("2143"), ANTIDIAGONAL).passed


@pytest.mark.parametrize("n", range(1, 6))
def test_constructive_chain_suffices(n):
    from schubmin.diagram import essential_set
    from schubmin.verify import _chain_cover
    for w in all_permutations(n):
        gens = elusive_minors(w)
        elusive, ess = set(gens.elusive), essential_set(w)
        for order in [ANTIDIAGONAL] + ([DIAGONAL] if is_vexillary(w) else []):
            for em in gens.essential:
                if em.minor in elusive:
                    continue
                found = _chain_cover(em.minor, w, order, ess, elusive)
                assert found in elusive
                assert leading_monomial_of_minor(found, order).divides(
                    leading_monomial_of_minor(em.minor, order))
