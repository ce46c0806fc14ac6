"""Monomial maps: closed-form criteria, brute-force verdicts, composition."""

import pytest

from skewalg.ff import finite_field
from skewalg.ground import (AutMap, CapExceeded, frobenius_context,
                            function_field_context)
from skewalg.petit import PetitAlgebra
from skewalg import morphism as mo

CTX4 = frobenius_context(2, 1, 2)
OMEGA = CTX4.field.gen()
A16 = PetitAlgebra(CTX4, 2, OMEGA)
SIGMA = CTX4.sigma
IDENT = AutMap("ff", CTX4.field, 0)


def rf_context():
    cf = finite_field(2, 2)
    ctx = function_field_context(4, cf.gen(), 3)
    ctx.register_tau("frob", AutMap("rf", ctx.field, 1))
    return ctx


def test_monomial_map_validation():
    with pytest.raises(ValueError):
        mo.MonomialMap(SIGMA, CTX4.zero(), 1, mo.ANTI_ENDO, A16)
    with pytest.raises(ValueError):
        mo.MonomialMap(SIGMA, CTX4.one(), 0, mo.ANTI_ENDO, A16)
    with pytest.raises(ValueError):
        mo.MonomialMap(SIGMA, CTX4.one(), 1, mo.ISO_BETWEEN, A16)
    with pytest.raises(ValueError):
        mo.MonomialMap(SIGMA, CTX4.one(), 1, mo.ANTI_ENDO, A16,
                       target_b=CTX4.one())


def test_codomain_is_opposite_presentation():
    m = mo.MonomialMap(SIGMA, CTX4.one(), 1, mo.ANTI_ENDO, A16)
    assert m.codomain().a == OMEGA.inverse()


def test_classify_semifield_three_involutions():
    # the order-16 semifield: exactly three maps over tau = sigma, none over id
    res = mo.classify(A16, SIGMA)
    assert len(res) == 3
    assert {m.alpha for m, _ in res} == set(CTX4.units())
    assert all(cert.valid for _, cert in res)
    for m, _ in res:
        inv, cert = mo.is_involution(m)
        assert inv and cert.valid
        assert mo.order_of(m) == 2
    empty = mo.classify(A16, IDENT)
    assert len(empty) == 0
    assert empty.note == "norm equation unsolvable"


def test_classify_split_case_has_six_maps():
    A = PetitAlgebra(CTX4, 2, CTX4.one())
    maps = list(mo.classify(A, SIGMA)) + list(mo.classify(A, IDENT))
    assert len(maps) == 6
    assert all(cert.valid for _, cert in maps)
    assert any(m.tau.is_identity() and m.alpha == CTX4.one() for m, _ in maps)


def test_conditions_agree_with_exhaustive_verdict():
    # every (tau, alpha) on the semifield: closed form == brute force
    for tau in (IDENT, SIGMA):
        for alpha in CTX4.units():
            m = mo.MonomialMap(tau, alpha, 1, mo.ANTI_ENDO, A16)
            cond = mo.check_anti_conditions(tau, alpha, 1, 2, OMEGA, CTX4)
            direct = mo.verify_map(m, mode="exhaustive")
            assert cond.valid == direct.valid


def test_invalid_map_reports_witness():
    m = mo.MonomialMap(IDENT, CTX4.one(), 1, mo.ANTI_ENDO, A16)
    cert = mo.verify_map(m, mode="exhaustive")
    assert not cert.valid
    assert cert.witness is not None
    j = cert.to_json()
    assert j["verdict"] == "Invalid"
    assert "witness" in j


def test_iso_between_quotients():
    # N_2(omega) = 1, so t -> omega*t with tau = sigma lands in constant
    # b = sigma(omega) = omega^2
    b = SIGMA(OMEGA)
    m = mo.MonomialMap(SIGMA, OMEGA, 1, mo.ISO_BETWEEN, A16, target_b=b)
    assert mo.check_conditions(m).valid
    assert mo.verify_map(m, mode="exhaustive").valid
    bad = mo.MonomialMap(SIGMA, OMEGA, 1, mo.ISO_BETWEEN, A16,
                         target_b=OMEGA)
    assert not mo.check_conditions(bad).valid
    assert not mo.verify_map(bad, mode="exhaustive").valid


def test_compose_parameter_law():
    maps = [m for m, _ in mo.classify(A16, SIGMA)]
    basis = A16.basis()
    for g1 in maps:
        for g2 in maps:
            comp = mo.compose(g2, g1)
            assert comp.tau == g2.tau.compose(g1.tau)
            assert comp.alpha == g2.tau(g1.alpha) * g2.alpha
            assert comp.role == mo.ISO_BETWEEN  # anti after anti
            for e in basis:
                step1 = mo.apply(g1, e)
                lifted = g1.codomain().elem(list(step1.coeffs))
                # g2's source carrier is A16; reinterpret coefficientwise
                relift = A16.elem(list(lifted.coeffs))
                step2 = mo.apply(g2, relift)
                assert mo.apply(comp, e).coeffs == step2.coeffs


def test_compose_rejects_higher_degree():
    ctx = rf_context()
    x = ctx.field.x()
    A = PetitAlgebra(ctx, 3, x ** 3)
    tau = ctx.taus["frob"]
    m = mo.MonomialMap(tau, x ** 3, 2, mo.ANTI_ENDO, A)
    with pytest.raises(ValueError):
        mo.compose(m, m)


def test_order_closed_form_matches_iteration():
    for m, _ in mo.classify(A16, SIGMA):
        ell = mo.order_of(m)
        # independent oracle: iterate the raw tuple formula on a basis,
        # alternating the reduction constant a^{-1}, a, ...
        start = [e.coeffs for e in A16.basis()]
        cur = list(start)
        const = A16.a
        hits = None
        for step in range(1, 17):
            const = const.inverse()
            cur = [mo.tuple_apply(m, c, const) for c in cur]
            if cur == start and const == A16.a:
                hits = step
                break
        assert ell == hits


def test_is_involution_negative_cases():
    ok, cert = mo.is_involution(
        mo.MonomialMap(IDENT, CTX4.one(), 1, mo.ANTI_ENDO, A16))
    assert not ok
    assert cert.reason == "nonidentity"


def test_search_alpha_exhaustive():
    # all units of GF(4) have 2-fold twisted norm 1
    sols = mo.search_alpha(CTX4, CTX4.one(), conjugates=2)
    assert set(sols) == set(CTX4.units())
    assert mo.search_alpha(CTX4, OMEGA, conjugates=2) == []


def test_function_field_degree_two_instance():
    ctx = rf_context()
    K = ctx.field
    x = K.x()
    a = x ** 3
    tau = ctx.taus["frob"]
    A = PetitAlgebra(ctx, 3, a)
    good = mo.MonomialMap(tau, a, 2, mo.ANTI_ENDO, A)
    assert mo.check_conditions(good).valid
    assert mo.verify_map(good, mode="sampled", count=60, seed=1).valid
    for alpha in (x ** 2, x ** 4, A.a * K.from_const(K.cfield.gen()) + x):
        bad = mo.MonomialMap(tau, alpha, 2, mo.ANTI_ENDO, A)
        cond = mo.check_conditions(bad)
        direct = mo.verify_map(bad, mode="sampled", count=60, seed=1)
        assert cond.valid == direct.valid == False
    # wrong degree for this tau
    bad_k = mo.MonomialMap(tau, a, 1, mo.ANTI_ENDO, A)
    assert not mo.check_conditions(bad_k).valid
    assert not mo.verify_map(bad_k, mode="sampled", count=60, seed=1).valid


def test_classify_function_field_blockers():
    ctx = rf_context()
    x = ctx.field.x()
    tau = ctx.taus["frob"]        # forces k = 2
    res = mo.classify(PetitAlgebra(ctx, 2, x ** 2), tau)
    assert len(res) == 0 and "n > m" in res.note
    res = mo.classify(PetitAlgebra(ctx, 3, x), tau)
    assert len(res) == 0 and "central constant" in res.note


def test_enumeration_oracle_matches_classify():
    found = mo.enumerate_all_antiautomorphisms(A16)
    assert len(found) == 3
    expected = {mo.map_matrix(m) for m, _ in mo.classify(A16, SIGMA)}
    assert set(found) == expected
    assert all(mo.matrix_fixes_K(A16, M) for M in found)


def test_enumeration_split_case_contains_identity():
    A = PetitAlgebra(CTX4, 2, CTX4.one())
    found = mo.enumerate_all_antiautomorphisms(A)
    ident = tuple(tuple(A.to_vector(e)) for e in A.basis())
    assert ident in found
    expected = {mo.map_matrix(m) for t in (SIGMA, IDENT)
                for m, _ in mo.classify(A, t)}
    assert expected <= set(found)


def test_enumeration_cap():
    ctx = frobenius_context(2, 1, 4)
    big = PetitAlgebra(ctx, 4, ctx.field.gen())
    with pytest.raises(CapExceeded):
        mo.enumerate_all_antiautomorphisms(big)
