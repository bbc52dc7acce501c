import pytest

from domain.algebra.almost_cyclic_analysis import (
    check_abelian_corollary,
    check_center_lemma,
    check_central_subgroup_cyclic,
    check_class_count_bound,
    check_conjugate_intersection,
    check_cyclic_quotient_lemmas,
    check_exponent_property,
    check_finite_ac_iff_cyclic,
    check_normal_closure_generates,
    check_normal_intersection,
    check_prime_order_conjgen,
    check_product_factors,
    check_quotient_conjgen,
    check_union_of_conjugates,
    conjugate_generators,
    fold_results,
    is_almost_cyclic,
    is_conjugate_generator,
    least_power_in,
    require_conjugate_generator,
    sweep_group,
)
from domain.algebra.finite_group_core import (
    all_subgroups,
    center,
    conjugate_element,
    conjugates_of_subgroup,
    cyclic_subgroup,
    direct_product,
    element_order,
    normal_subgroups,
    trivial_subgroup,
)
from domain.algebra.standard_groups import cyclic_group
from domain.entities.lemma_check import ConjGenCertificate, LemmaCheckResult, LemmaId
from domain.errors import NotConjugateGenerator, NotNormal, QuotientNotCyclic, TrivialSubgroup


class TestConjugateGenerators:
    def test_klein_group_is_not_almost_cyclic(self, z2xz2):
        assert conjugate_generators(z2xz2) == []
        assert not is_almost_cyclic(z2xz2)

    def test_generators_of_z6(self, z6):
        assert conjugate_generators(z6) == [1, 5]
        assert is_almost_cyclic(z6)

    @pytest.mark.parametrize("fixture", ["s3", "q8", "d4", "a4", "z7_z3"])
    def test_noncyclic_groups_have_none(self, request, fixture):
        assert not is_almost_cyclic(request.getfixturevalue(fixture))

    @pytest.mark.parametrize("fixture", ["z6", "s3", "q8", "d4", "a4", "z7_z3"])
    def test_generator_set_is_closed_under_conjugation_and_inversion(self, request, fixture):
        G = request.getfixturevalue(fixture)
        for H in (G, cyclic_group(G.order)):
            gens = set(conjugate_generators(H))
            assert gens == {x for x in H.elements if is_conjugate_generator(H, x) is not None}
            for x in gens:
                assert H.inverses[x] in gens
                assert all(conjugate_element(H, g, x) in gens for g in H.elements)

    def test_certificate_is_lexicographically_first(self, z6):
        cert = is_conjugate_generator(z6, 1)
        assert cert is not None
        assert cert.witness_for(4) == (0, 4)
        assert cert.replay(z6)

    def test_non_generator_has_no_certificate(self, z6):
        assert is_conjugate_generator(z6, 2) is None
        with pytest.raises(NotConjugateGenerator) as err:
            require_conjugate_generator(z6, 2)
        assert err.value.missed == 1

    def test_tampered_certificate_fails_replay(self, z6):
        cert = is_conjugate_generator(z6, 1)
        witnesses = list(cert.witnesses)
        witnesses[3] = (0, 2)
        tampered = ConjGenCertificate(generator=1, witnesses=tuple(witnesses))
        assert tampered.first_failure(z6) == 3
        assert not tampered.replay(z6)
        short = ConjGenCertificate(generator=1, witnesses=cert.witnesses[:4])
        assert short.first_failure(z6) == 4

    def test_least_power(self, z6):
        assert least_power_in(z6, 1, cyclic_subgroup(z6, 3)) == 3
        assert least_power_in(z6, 5, cyclic_subgroup(z6, 2)) == 2


class TestGroupLevelChecks:
    def test_center_lemma(self, z6, q8):
        assert check_center_lemma(z6).status == "pass"
        assert check_center_lemma(q8).status == "vacuous"

    def test_union_of_conjugates_in_s3(self, s3):
        t = next(a for a in s3.elements if element_order(s3, a) == 2)
        H = cyclic_subgroup(s3, t)
        conjugates = conjugates_of_subgroup(s3, H)
        union = set().union(*(K.member_set for K in conjugates))
        assert len(union) == 4 == 3 * 2 - 2
        result = check_union_of_conjugates(s3, "S3")
        assert result.passed and not result.vacuous
        assert result.group_descriptor == "S3"

    def test_union_of_conjugates_for_trivial_group(self):
        assert check_union_of_conjugates(cyclic_group(1)).status == "vacuous"

    @pytest.mark.parametrize("fixture", ["z6", "z2xz2", "s3", "q8", "d4", "a4", "z7_z3"])
    def test_finite_almost_cyclic_iff_cyclic(self, request, fixture):
        assert check_finite_ac_iff_cyclic(request.getfixturevalue(fixture)).status == "pass"

    def test_prime_order_generators(self, z2, z6):
        five = check_prime_order_conjgen(cyclic_group(5))
        assert five.status == "pass"
        assert five.witness == {"prime": 5}
        assert check_prime_order_conjgen(z2).status == "pass"
        assert check_prime_order_conjgen(z6).status == "vacuous"

    def test_exponent(self, z6, s3):
        result = check_exponent_property(z6)
        assert result.status == "pass"
        assert result.witness["exponent"] == 6
        assert check_exponent_property(s3).status == "vacuous"

    def test_supplementary_checks_on_cyclic_group(self, z6):
        for check in (check_abelian_corollary, check_central_subgroup_cyclic,
                      check_normal_closure_generates, check_class_count_bound):
            assert check(z6).status == "pass", check.__name__

    def test_supplementary_checks_are_vacuous_without_generator(self, z2xz2):
        for check in (check_abelian_corollary, check_central_subgroup_cyclic,
                      check_normal_closure_generates, check_class_count_bound):
            assert check(z2xz2).status == "vacuous", check.__name__

    def test_product_factors(self, z2):
        Z3 = cyclic_group(3)
        assert check_product_factors(direct_product(z2, Z3), z2, Z3).status == "pass"
        assert check_product_factors(direct_product(z2, z2), z2, z2).status == "vacuous"


class TestInstanceChecks:
    def test_quotient_conjgen(self, z6):
        for N in normal_subgroups(z6):
            assert check_quotient_conjgen(z6, N).passed

    def test_quotient_conjgen_needs_normal_subgroup(self, s3):
        t = next(a for a in s3.elements if element_order(s3, a) == 2)
        with pytest.raises(NotNormal):
            check_quotient_conjgen(s3, cyclic_subgroup(s3, t))

    def test_conjugate_intersection(self, z6):
        result = check_conjugate_intersection(z6, cyclic_subgroup(z6, 3), 1)
        assert result.status == "pass"
        with pytest.raises(TrivialSubgroup):
            check_conjugate_intersection(z6, trivial_subgroup(z6), 1)
        with pytest.raises(NotConjugateGenerator):
            check_conjugate_intersection(z6, cyclic_subgroup(z6, 3), 2)

    def test_normal_intersection(self, z6):
        result = check_normal_intersection(z6, cyclic_subgroup(z6, 2), 1)
        assert result.status == "pass"
        assert result.witness == {"m": 2}
        with pytest.raises(TrivialSubgroup):
            check_normal_intersection(z6, trivial_subgroup(z6), 1)

    def test_cyclic_quotient_lemmas(self, z6):
        for N in normal_subgroups(z6):
            if not N.is_trivial():
                assert check_cyclic_quotient_lemmas(z6, N).passed

    def test_cyclic_quotient_preconditions(self, d4, s3):
        with pytest.raises(QuotientNotCyclic):
            check_cyclic_quotient_lemmas(d4, center(d4))
        A3 = next(N for N in normal_subgroups(s3) if N.size == 3)
        assert check_cyclic_quotient_lemmas(s3, A3).status == "vacuous"

    def test_instances_in_z12(self):
        Z12 = cyclic_group(12)
        order_three = cyclic_subgroup(Z12, 4)
        order_four = cyclic_subgroup(Z12, 3)
        assert (order_three.size, order_four.size) == (3, 4)

        meet = check_normal_intersection(Z12, order_three, 1)
        assert meet.status == "pass"
        assert meet.witness == {"m": 4}

        lemmas = check_cyclic_quotient_lemmas(Z12, order_four)
        assert lemmas.status == "pass"
        assert lemmas.witness["quotient_order"] == 3
        assert lemmas.witness["least_powers"] == {1: 3, 5: 3, 7: 3, 11: 3}

        conjugate = check_conjugate_intersection(Z12, order_four, 1)
        assert conjugate.status == "pass"
        assert conjugate.witness["conjugator"] == 0
        assert conjugate.witness["element"] in order_four.member_set - {0}


class TestResults:
    def test_failed_result_needs_counterexample(self):
        with pytest.raises(ValueError):
            LemmaCheckResult(LemmaId.CENTER, "G", passed=False)
        with pytest.raises(ValueError):
            LemmaCheckResult(LemmaId.CENTER, "G", passed=False, vacuous=True, counterexample={"x": 1})

    def test_fold(self):
        ok = LemmaCheckResult(LemmaId.EXPONENT, "instance", True)
        empty = LemmaCheckResult(LemmaId.EXPONENT, "instance", True, vacuous=True)
        bad = LemmaCheckResult(LemmaId.EXPONENT, "instance", False, counterexample={"element": 3})
        assert fold_results(LemmaId.EXPONENT, "G", []).status == "vacuous"
        assert fold_results(LemmaId.EXPONENT, "G", [empty, empty]).status == "vacuous"
        assert fold_results(LemmaId.EXPONENT, "G", [empty, ok]).status == "pass"
        folded = fold_results(LemmaId.EXPONENT, "G", [ok, bad])
        assert folded.status == "fail"
        assert folded.group_descriptor == "G"
        assert folded.counterexample == {"element": 3}

    def test_to_dict_keys(self):
        record = LemmaCheckResult(LemmaId.CENTER, "Z6", True).to_dict()
        assert record == {"lemma": "center", "group": "Z6", "passed": True, "vacuous": False,
                          "counterexample": None}


class TestSweepGroup:
    @pytest.mark.parametrize("fixture", ["z6", "s3", "q8", "d4", "a4", "z7_z3", "z2xz2"])
    def test_every_lemma_holds(self, request, fixture):
        G = request.getfixturevalue(fixture)
        results = sweep_group(G, fixture)
        assert [r.lemma_id.value for r in results] == sorted(lemma.value for lemma in LemmaId)
        assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]

    def test_product_lemma_uses_factors(self, z2):
        Z4 = cyclic_group(4)
        P = direct_product(z2, Z4)
        plain = {r.lemma_id: r for r in sweep_group(P, "Z2xZ4")}
        with_factors = {r.lemma_id: r for r in sweep_group(P, "Z2xZ4", factors=(z2, Z4))}
        assert plain[LemmaId.PRODUCT_FACTORS].status == "vacuous"
        # Z2 x Z4 is not cyclic, so the hypothesis fails either way
        assert with_factors[LemmaId.PRODUCT_FACTORS].status == "vacuous"

        Z3 = cyclic_group(3)
        cyclic_product = {r.lemma_id: r for r in sweep_group(direct_product(z2, Z3), "Z2xZ3", factors=(z2, Z3))}
        assert cyclic_product[LemmaId.PRODUCT_FACTORS].status == "pass"

    def test_cyclic_group_has_no_vacuous_hypothesis_checks(self):
        from domain.entities.lemma_check import ALMOST_CYCLIC_HYPOTHESIS
        for n in range(1, 13):
            results = sweep_group(cyclic_group(n), f"Z{n}")
            vacuous = [r.lemma_id for r in results if r.vacuous and r.lemma_id in ALMOST_CYCLIC_HYPOTHESIS]
            assert vacuous == [], n

    def test_subgroup_count_in_sweep_matches_lattice(self, a4):
        results = {r.lemma_id: r for r in sweep_group(a4, "A4")}
        proper = len(all_subgroups(a4)) - 1
        assert results[LemmaId.UNION_OF_CONJUGATES].witness == {"subgroups": proper}
