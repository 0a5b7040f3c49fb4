"""Trace codes: construction, transform dual routes, closed-form families."""

from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homring.codes import (WeightEnumerator, build_code, closed_form_enumerator,
                           closed_form_spectrum, code_spectrum,
                           distinct_weights, frank_map, function_from_spec,
                           power_map, random_teich_permutation,
                           sigma_quadratic_map, transform_W, weight_enumerator)
from homring.errors import (InvalidParameter, OutOfRange, ParseError,
                            UnknownPreset, ValidationFailed, WrongRingFamily)
from homring.rings import named_automorphism, ring_from_spec, z4x_conjugation
from homring.traces import (fxy_sum_trace, galois_trace, identity_trace,
                            table_trace, trace_from_spec)
from homring.weights import hamming_table, hom_weight

F = Fraction


def _code(ring_spec, sub_spec, trace_spec, f_spec, seed=None):
    R = ring_from_spec(ring_spec)
    S = ring_from_spec(sub_spec)
    tr = trace_from_spec(R, S, trace_spec)
    f = function_from_spec(R, f_spec, seed=seed)
    return build_code(R, S, tr, f)


SMALL_CODES = [
    ("Zm:5", "Zm:5", "identity", "pow:3"),
    ("Zm:7", "Zm:7", "identity", "pow:4"),
    ("Zm:10", "Zm:10", "identity", "pow:3"),
    ("GR:2,2,2", "Zm:4", "galois", "frank:id"),
    ("GR:2,2,2", "GR:2,2,2", "identity", "frank:id"),
    ("FXY:2", "Zm:2", "fxy-sum", "sigmaquad:swapxy"),
    ("Z4X", "Zm:4", "z4x:0,1", "pow:2"),
]


# ---------------------------------------------------------------------------
# function specs


def test_power_map():
    R = ring_from_spec("Zm:7")
    f = power_map(R, 3)
    assert f.table == tuple(pow(x, 3, 7) for x in range(7))
    assert power_map(R, 1).table == tuple(range(7))
    with pytest.raises(OutOfRange):
        power_map(R, 0)


def test_frank_map_constraints():
    with pytest.raises(WrongRingFamily):
        frank_map(ring_from_spec("Zm:4"))
    with pytest.raises(WrongRingFamily):
        frank_map(ring_from_spec("GR:2,1,2"))
    with pytest.raises(WrongRingFamily):
        frank_map(ring_from_spec("GR:2,3,2"))
    f = frank_map(ring_from_spec("GR:2,2,2"))
    assert f.tag == "frank:id"
    assert f.table[0] == 0


def test_frank_map_lands_in_p_times_teichmuller_products():
    R = ring_from_spec("GR:3,2,2")
    f = frank_map(R)
    p = R.element_from_int(3)
    t = R.teichmuller()
    for x in range(R.order):
        x0, x1 = R.padic_digits(x)
        assert f.table[x] == R.mul(p, R.mul(x0, x1))


def test_random_teich_permutation_is_seeded():
    R = ring_from_spec("GR:2,2,2")
    p1 = random_teich_permutation(R, 9)
    assert p1 == random_teich_permutation(R, 9)
    assert p1[0] == 0
    assert sorted(p1) == [0, 1, 2, 3]


def test_function_spec_grammar(tmp_path):
    R = ring_from_spec("GR:2,2,2")
    assert function_from_spec(R, "pow:2").tag == "pow:2"
    fr = function_from_spec(R, "frank:rand", seed=3)
    assert fr.tag == "frank:rand:3" and fr.seed == 3
    assert function_from_spec(R, "frank:rand").seed == 0
    assert function_from_spec(R, "frank:rand:5").seed == 5
    explicit = function_from_spec(R, "frank:0,2,1,3")
    assert explicit.perm == (0, 2, 1, 3)
    path = tmp_path / "f.txt"
    path.write_text("".join(f"{x} {x}\n" for x in range(R.order)))
    assert function_from_spec(R, f"table:{path}").table == tuple(range(R.order))
    with pytest.raises(ParseError):
        function_from_spec(R, "pow:two")
    with pytest.raises(UnknownPreset):
        function_from_spec(R, "sigmaquad:swapxy")
    with pytest.raises(UnknownPreset):
        function_from_spec(R, "shuffle:1")


# ---------------------------------------------------------------------------
# code construction invariants


@pytest.mark.parametrize("ring_spec,sub_spec,trace_spec,f_spec", SMALL_CODES)
def test_code_invariants(ring_spec, sub_spec, trace_spec, f_spec):
    code = _code(ring_spec, sub_spec, trace_spec, f_spec)
    S = code.sub
    # all codewords are distinct, length |R|, first is zero
    assert len(set(code.codewords)) == code.size
    assert all(len(cw) == code.ring.order for cw in code.codewords)
    assert code.codewords[0] == (0,) * code.ring.order
    assert code.provenance[code.codewords[0]] == (0, 0)
    # S-linearity: closed under scalar action and addition
    cws = set(code.codewords)
    sample = code.codewords[:: max(1, code.size // 8)]
    for cw in sample:
        for s in range(S.order):
            assert tuple(S.mul(s, v) for v in cw) in cws
    for cw1 in sample[:3]:
        for cw2 in sample[:3]:
            assert tuple(S.add(a, b) for a, b in zip(cw1, cw2)) in cws


@pytest.mark.parametrize("ring_spec,sub_spec,trace_spec,f_spec", SMALL_CODES)
def test_transform_and_weights_are_two_views_of_one_thing(
        ring_spec, sub_spec, trace_spec, f_spec):
    code = _code(ring_spec, sub_spec, trace_spec, f_spec)
    n = code.ring.order
    wt = hom_weight(code.sub, 1)
    den, scaled = wt.scaled()
    lam = code_spectrum(code)
    weights = distinct_weights(code, wt)
    # weights and spectrum determine each other via w = |R| - W
    assert {n - v for v in lam} == set(weights)
    enum = weight_enumerator(code, wt)
    assert enum.total == code.size
    assert enum[0] == 1


def test_transform_W_matches_the_enumerated_code():
    R = ring_from_spec("GR:2,2,2")
    S = ring_from_spec("Zm:4")
    tr = galois_trace(R, S)
    f = frank_map(R)
    code = build_code(R, S, tr, f)
    wt = hom_weight(S, 1)
    den, scaled = wt.scaled()
    for cw, (alpha, beta) in sorted(code.provenance.items())[:12]:
        w = F(sum(scaled[s] for s in cw), den)
        assert transform_W(R, S, tr, f, alpha, beta) == R.order - w


def test_frank_pair_dedup_classes():
    # c(a,b) == c(a',b') exactly when a == a' and b - b' lies in pR
    for ring_spec, sub_spec, trace_spec in (
            ("GR:2,2,2", "Zm:4", "galois"), ("GR:3,2,2", "Zm:9", "galois")):
        R = ring_from_spec(ring_spec)
        S = ring_from_spec(sub_spec)
        tr = trace_from_spec(R, S, trace_spec)
        f = frank_map(R)
        p = R.element_from_int(R.p)
        pR = {R.mul(p, a) for a in range(R.order)}
        by_cw = {}
        for alpha in range(R.order):
            for beta in range(R.order):
                cw = tuple(tr.values[R.add(R.mul(alpha, x), R.mul(beta, f.table[x]))]
                           for x in range(R.order))
                by_cw.setdefault(cw, []).append((alpha, beta))
        code = build_code(R, S, tr, f)
        assert set(by_cw) == set(code.codewords)
        assert code.size == R.order * (R.order // len(pR))
        for pairs in by_cw.values():
            alphas = {a for a, _ in pairs}
            betas = [b for _, b in pairs]
            assert len(alphas) == 1
            for b in betas:
                assert R.sub(b, betas[0]) in pR
            assert len(betas) == len(pR)


def test_min_lex_provenance():
    code = _code("GR:2,2,2", "Zm:4", "galois", "frank:id")
    R = code.ring
    tr = code.trace
    f = code.func
    for cw, (alpha, beta) in code.provenance.items():
        rebuilt = tuple(tr.values[R.add(R.mul(alpha, x), R.mul(beta, f.table[x]))]
                        for x in range(R.order))
        assert rebuilt == cw


def test_sigma_check_rejects_unfixed_characters():
    Z = ring_from_spec("Z4X")
    with pytest.raises(ValidationFailed) as err:
        build_code(Z, Z, identity_trace(Z),
                   sigma_quadratic_map(Z, z4x_conjugation(Z)))
    assert err.value.primary == "CharacterNotSigmaInvariant"

    # a unit-twisted trace on FXY:2 breaks the swap-xy symmetry
    R = ring_from_spec("FXY:2")
    S = ring_from_spec("Zm:2")
    base = fxy_sum_trace(R, S)
    twisted = table_trace(R, S, [base.values[R.mul(3, a)] for a in range(16)],
                          tag="twisted")
    sq = sigma_quadratic_map(R, named_automorphism(R, "swap-xy"))
    with pytest.raises(ValidationFailed):
        build_code(R, S, twisted, sq)
    # while the symmetric coefficient-sum trace is accepted
    assert build_code(R, S, base, sq).size == 32


# ---------------------------------------------------------------------------
# closed forms vs brute force


def test_frank_subring_closed_form_matches_brute_force():
    for q, k, ring_spec, sub_spec in ((2, 2, "GR:2,2,2", "Zm:4"),
                                      (3, 2, "GR:3,2,2", "Zm:9")):
        code = _code(ring_spec, sub_spec, "galois", "frank:id")
        brute = weight_enumerator(code, hom_weight(code.sub, 1))
        assert brute == closed_form_enumerator("frank-subring", (q, k))
        assert code_spectrum(code) == closed_form_spectrum("frank-subring", (q, k))


def test_frank_self_closed_form_matches_brute_force():
    for p, r in ((2, 2), (3, 2)):
        code = _code(f"GR:{p},2,{r}", f"GR:{p},2,{r}", "identity", "frank:id")
        brute = weight_enumerator(code, hom_weight(code.sub, 1))
        assert brute == closed_form_enumerator("frank-self", (p, r))
        assert code_spectrum(code) == closed_form_spectrum("frank-self", (p, r))


@pytest.mark.parametrize("p,d", [(5, 3), (7, 4), (11, 3), (13, 5)])
def test_zp_power_closed_form_matches_brute_force(p, d):
    code = _code(f"Zm:{p}", f"Zm:{p}", "identity", f"pow:{d}")
    brute = weight_enumerator(code, hamming_table(code.sub, 1))
    assert brute == closed_form_enumerator("zp-power", (p, d))
    with pytest.raises(InvalidParameter):
        closed_form_spectrum("zp-power", (p, d))


@pytest.mark.parametrize("p,d", [(5, 3), (7, 4)])
def test_z2p_power_closed_form_matches_brute_force(p, d):
    code = _code(f"Zm:{2 * p}", f"Zm:{2 * p}", "identity", f"pow:{d}")
    brute = weight_enumerator(code, hom_weight(code.sub, 1))
    assert brute == closed_form_enumerator("z2p-power", (p, d))
    assert code_spectrum(code) == closed_form_spectrum("z2p-power", (p, d))


def test_sigma_quadratic_closed_form_over_residue_field_of_two():
    # Z_4 and Z_8 presented as Galois rings, so frobenius is the identity
    for spec in ("GR:2,2,1", "GR:2,3,1"):
        code = _code(spec, spec, "identity", "sigmaquad:frobenius")
        brute = weight_enumerator(code, hom_weight(code.sub, 1))
        assert brute == closed_form_enumerator("sigma-quadratic", code.ring)


def test_sigma_quadratic_closed_form_deviates_for_larger_residue_fields():
    # For residue fields with more than two elements the recorded table
    # over-counts the second-smallest weight by |K| - 1 and under-counts the
    # top weight by the same amount; brute force is authoritative.
    for spec, f_spec in (("GR:2,3,2", "sigmaquad:frobenius"),
                         ("FXY:3", "sigmaquad:swapxy")):
        code = _code(spec, spec, "identity", f_spec)
        R = code.ring
        k = R.residue_size()
        assert k > 2
        brute = weight_enumerator(code, hom_weight(R, 1))
        closed = closed_form_enumerator("sigma-quadratic", R)
        low = F(R.order - len(R.nonunits()))
        top = F(R.order)
        assert closed[low] - brute[low] == k - 1
        assert brute[top] - closed[top] == k - 1
        rest = set(brute.counts) - {low, top}
        assert all(brute[w] == closed[w] for w in rest)
        # the spectrum itself is unaffected
        assert code_spectrum(code) == closed_form_spectrum("sigma-quadratic", R)


def test_closed_form_dispatch_errors():
    with pytest.raises(UnknownPreset):
        closed_form_enumerator("mystery", (2, 2))
    with pytest.raises(OutOfRange):
        closed_form_enumerator("frank-subring", (4, 2))
    with pytest.raises(OutOfRange):
        closed_form_enumerator("frank-self", (2, 1))
    with pytest.raises(OutOfRange):
        closed_form_enumerator("zp-power", (5, 9))


# ---------------------------------------------------------------------------
# enumerator / spectrum containers


def test_weight_enumerator_rendering():
    e = WeightEnumerator({F(0): 1, F(3, 2): 2, F(4): 1})
    assert e.poly_str() == "1+2X^{3/2}+X^4"
    assert e.to_records() == [
        {"weight": "0/1", "count": 1},
        {"weight": "3/2", "count": 2},
        {"weight": "4/1", "count": 1},
    ]
    assert e[F(3, 2)] == 2 and e["3/2"] == 2 and e[7] == 0
    assert e.total == 4


def test_spectrum_set_semantics():
    lam = code_spectrum(_code("GR:2,2,2", "Zm:4", "galois", "frank:id"))
    assert list(lam) == [16, 4, 0, -4]
    assert lam == {16, 4, 0, -4}
    assert lam == [F(4), 16, -4, 0]
    assert 4 in lam and 5 not in lam
    assert repr(lam) == "{16/1, 4/1, 0/1, -4/1}"


@lru_cache(maxsize=1)
def _gr_frank_setting():
    R = ring_from_spec("GR:2,2,2")
    S = ring_from_spec("Zm:4")
    tr = galois_trace(R, S)
    f = frank_map(R)
    return R, S, tr, f, code_spectrum(build_code(R, S, tr, f))


@given(st.integers(min_value=0, max_value=15), st.integers(min_value=0, max_value=15))
@settings(max_examples=40, deadline=None)
def test_transform_W_is_defined_for_every_pair(alpha, beta):
    R, S, tr, f, lam = _gr_frank_setting()
    assert transform_W(R, S, tr, f, alpha, beta) in lam


def test_transform_W_rejects_out_of_range_pairs():
    R, S, tr, f, _ = _gr_frank_setting()
    with pytest.raises(InvalidParameter):
        transform_W(R, S, tr, f, 16, 0)
    with pytest.raises(InvalidParameter):
        transform_W(R, S, tr, f, 0, -1)
