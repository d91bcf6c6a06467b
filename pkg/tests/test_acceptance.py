"""Acceptance suite: every criterion is exact (tolerance identically zero).

Each test prints one PASS/FAIL line, tagged with its number and elapsed
time.  Degree bounds and configurations are pinned here; the claim checks
themselves live in mui.verify.
"""

import random

from mui import Ring, l_n, power_op, run_claim
from mui.essential import maximal_subgroups, restrict
from mui.invariants import minor, mui
from mui.steenrod import bockstein
from helpers import criterion, homogeneous_pairs, rand_element, rand_homogeneous

R32 = Ring(3, 2)
R33 = Ring(3, 3)
R52 = Ring(5, 2)


def _assert_claim(claim_id, ring, max_degree):
    report = run_claim(claim_id, ring, max_degree)
    assert report.passed, (
        f"{claim_id} at (p={ring.p}, n={ring.n}, D={max_degree}): "
        + "; ".join(f"{c.id}: expected {c.expected}, got {c.actual}"
                    for c in report.failures()[:3])
    )


def test_criterion_01_determinant_equals_monic_product():
    with criterion(1, "L_n determinant = monic linear form product"):
        for p, n in [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)]:
            _assert_claim("lemma:eqnLn", Ring(p, n), 0)


def test_criterion_02_rank_one_invariants_are_essential():
    with criterion(2, "restrict(M_s, H) = 0 for every s and H"):
        assert len(maximal_subgroups(R33)) == 13
        for ring in (R32, R33, R52):
            _assert_claim("lemma:Mns", ring, 0)


def test_criterion_03_subset_product_rule_exhaustive():
    with criterion(3, "M_S M_T product rule over all subset pairs, n <= 3"):
        for n in (1, 2, 3):
            _assert_claim("eq:MnST", Ring(3, n), 0)


def test_criterion_04_essential_square():
    with criterion(4, "Ess^2 = L_n Ess degreewise"):
        _assert_claim("lemma:EssSquared", R32, 20)
        _assert_claim("lemma:EssSquared", R33, 26)


def test_criterion_05_joint_annihilators():
    with criterion(5, "joint annihilator kernels per degree"):
        for ring in (R32, R33):
            _assert_claim("lemma:jointAnn", ring, 16)
            _assert_claim("coroll:jointAnn2", ring, 16)


def test_criterion_06_free_module_decomposition():
    with criterion(6, "free module on the subset invariants"):
        _assert_claim("thm:free", R32, 20)
        _assert_claim("thm:free", R33, 20)


def test_criterion_07_operation_identities():
    with criterion(7, "Bockstein/power values and the five interaction laws"):
        for ring in (R32, R33, R52):
            _assert_claim("eq:betaMns", ring, 0)
            _assert_claim("eq:rPMnS", ring, 0)
            _assert_claim("lemma:SteenrodMnS", ring, 0)


def test_criterion_08_steenrod_closure():
    with criterion(8, "Ess is the Steenrod closure of the top exterior class"):
        _assert_claim("thm:Steenrod", R32, 20)
        _assert_claim("thm:Steenrod", R33, 26)


def test_criterion_09_fundamental_equation():
    with criterion(9, "P^(p^(n-1)) on M_s via Dickson coefficients"):
        _assert_claim("remark:fundamental", R32, 0)
        _assert_claim("remark:fundamental", R33, 0)
        assert power_op(3, mui(R32, 2)).is_zero()
        assert power_op(9, mui(R33, 3)).is_zero()


def test_criterion_10_mod2_principal_ideal():
    with criterion(10, "p=2: Ess is principal on L_n and its Steenrod closure"):
        for n in (2, 3, 4):
            _assert_claim("lemma:p2", Ring(2, n), 15)


def test_criterion_11_property_soaks():
    cases = 1000
    with criterion(11, f"property suites, {cases} randomized cases each"):
        rng = random.Random(97)

        # Bockstein squares to zero
        for _ in range(cases):
            assert bockstein(bockstein(rand_element(R32, rng))).is_zero()

        # Cartan formula
        for _ in range(cases):
            u = rand_element(R32, rng, max_terms=3, max_exp=2)
            v = rand_element(R32, rng, max_terms=3, max_exp=2)
            k = rng.randrange(5)
            total = R32.zero()
            for i in range(k + 1):
                total = total + power_op(i, u) * power_op(k - i, v)
            assert power_op(k, u * v) == total

        # graded commutativity on homogeneous pairs
        for u, v in homogeneous_pairs(R32, rng, cases):
            sign = -1 if (u.total_degree() % 2 and v.total_degree() % 2) else 1
            assert u * v == sign * (v * u)

        # adjugate contraction: random power-row combinations f(X) with
        # f(X) = sum_t c_t X^(p^(t-1)) satisfy
        # sum_i (-1)^(s+i) minor(s,i) f(x_i) = c_s L_n
        big_l = l_n(R32)
        for _ in range(cases):
            s = rng.randrange(1, 3)
            coeffs = [rng.randrange(3) for _ in range(2)]
            total = R32.zero()
            for i in (1, 2):
                f_xi = R32.zero()
                for t, c in enumerate(coeffs, start=1):
                    f_xi = f_xi + c * R32.x(i) ** (3 ** (t - 1))
                term = minor(R32, s, i) * f_xi
                if (s + i) % 2:
                    term = -term
                total = total + term
            assert total == coeffs[s - 1] * big_l

        # instability: P^k vanishes above half the degree
        for _ in range(cases):
            d = rng.randrange(1, 9)
            y = rand_homogeneous(R32, rng, d)
            assert power_op(d // 2 + rng.randrange(1, 4), y).is_zero()

        # restriction commutes with the operations
        subs = maximal_subgroups(R32)
        for _ in range(cases):
            y = rand_element(R32, rng)
            H = subs[rng.randrange(len(subs))]
            if rng.randrange(2):
                assert restrict(bockstein(y), H) == bockstein(restrict(y, H))
            else:
                k = rng.randrange(1, 4)
                assert restrict(power_op(k, y), H) == power_op(k, restrict(y, H))

        # print/parse round trip on canonical forms
        for _ in range(cases):
            y = rand_element(R32, rng)
            assert R32.parse(str(y)) == y
