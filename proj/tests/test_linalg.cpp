#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("rank at points and generic rank")
{
    const RingPtr r = ring_q();
    const MatrixLocal sp = mat(r, {{"0", "t"}, {"-t", "0"}});
    CHECK(rank_at(sp, fe(r, 0)) == 0);
    CHECK(rank_at(sp, fe(r, 1)) == 2);
    CHECK(rank_at(mat(r, {{"t", "t^2"}}), fe(r, 3)) == 1);
    CHECK(rank_generic(mat(r, {{"t"}})) == 1);
    CHECK(rank_generic(sp) == 2);
    CHECK(rank_generic(zero_matrix(3, 3, r)) == 0);
    CHECK(rank_generic(mat(r, {{"1/(t+1)", "t/(t+1)"}, {"t", "t^2"}})) == 1);
}

TEST_CASE("rank agrees with naive oracles")
{
    Rng rng(21);
    for (const RingPtr& r : {ring_q(), ring_p(5), ring_p(3)}) {
        for (int k = 0; k < 150; ++k) {
            const auto rows = static_cast<std::size_t>(rng.uniform(0, 4));
            const auto cols = static_cast<std::size_t>(rng.uniform(0, 4));
            // low-rank products are the interesting cases
            const auto inner = static_cast<std::size_t>(rng.uniform(0, 3));
            const MatrixLocal a = random_matrix(r, rows, inner, rng) * random_matrix(r, inner, cols, rng);
            const FieldElem s = fe(r, rng.uniform(-3, 3));
            const MatrixField as = evaluate(a, s);
            CHECK(rank(as) == rank_naive(as));
            CHECK(rank_at(a, s) <= rank_generic(a));
        }
    }
}

TEST_CASE("determinant against Leibniz expansion")
{
    Rng rng(5);
    for (const RingPtr& r : {ring_q(), ring_p(7)}) {
        for (int k = 0; k < 40; ++k) {
            const auto n = static_cast<std::size_t>(rng.uniform(0, 5));
            const MatrixLocal a = random_matrix(r, n, n, rng);
            CHECK(determinant(a) == determinant_leibniz(a));
            const MatrixField f = evaluate(a, fe(r, 2));
            CHECK(determinant(f) == determinant_leibniz(f));
        }
    }
}

TEST_CASE("smith normal form examples")
{
    const RingPtr r = ring_q();
    CHECK(smith_normal_form(mat(r, {{"t"}})).exponents == std::vector<std::size_t>{1});
    const SmithDecomposition d = smith_normal_form(mat(r, {{"1", "t"}, {"t", "t^2"}}));
    CHECK(d.exponents == std::vector<std::size_t>{0});
    CHECK(smith_normal_form(identity_matrix(2, r)).exponents == std::vector<std::size_t>{0, 0});
    CHECK(smith_normal_form(mat(r, {{"0", "t"}, {"-t", "0"}})).exponents == std::vector<std::size_t>{1, 1});
    CHECK(smith_normal_form(zero_matrix(2, 3, r)).exponents.empty());
}

TEST_CASE("smith decomposition reconstructs and matches determinantal divisors")
{
    Rng rng(8);
    for (const RingPtr& r : {ring_q(), ring_q(1), ring_p(5)}) {
        for (int k = 0; k < 60; ++k) {
            const auto rows = static_cast<std::size_t>(rng.uniform(0, 4));
            const auto cols = static_cast<std::size_t>(rng.uniform(0, 4));
            const auto inner = static_cast<std::size_t>(rng.uniform(0, 3));
            MatrixLocal a = random_matrix(r, rows, inner, rng) * random_matrix(r, inner, cols, rng);
            if (rows > 0 && cols > 0)
                a.scale_row(0, LocalScalar::uniformizer(r));
            const SmithDecomposition d = smith_normal_form(a);
            CHECK(d.u * a * d.v == d.diagonal(rows, cols));
            CHECK(determinant(d.u).is_unit());
            CHECK(determinant(d.v).is_unit());
            CHECK(std::is_sorted(d.exponents.begin(), d.exponents.end()));
            CHECK(d.exponents == smith_exponents_oracle(a));
            CHECK(d.rank() == rank_generic(a));
        }
    }
}

TEST_CASE("skewness")
{
    const RingPtr r = ring_q();
    CHECK(is_skew(mat(r, {{"0", "t"}, {"-t", "0"}})));
    CHECK_FALSE(is_skew(mat(r, {{"0", "t"}, {"t", "0"}})));
    CHECK_FALSE(is_skew(mat(ring_p(2), {{"1"}})));
    CHECK_THROWS_AS(is_skew(zero_matrix(1, 2, r)), Error);
    CHECK(skew_rank(mat(r, {{"0", "t"}, {"-t", "0"}}), fe(r, 0)) == 0);
    CHECK(skew_rank(mat(r, {{"0", "t"}, {"-t", "0"}}), fe(r, 5)) == 2);
    CHECK(skew_rank(mat(r, {{"0", "1", "0"}, {"-1", "0", "0"}, {"0", "0", "0"}}), fe(r, 9)) == 2);
    try {
        (void)skew_rank(mat(r, {{"0", "t"}, {"t", "0"}}), fe(r, 1));
        FAIL("expected NotSkew");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSkew);
    }
}

TEST_CASE("pfaffian")
{
    const RingPtr r = ring_q();
    CHECK(pfaffian(mat(r, {{"0", "t"}, {"-t", "0"}})) == sc(r, "t"));
    MatrixLocal block = zero_matrix(4, 4, r);
    block(0, 1) = block(2, 3) = LocalScalar::one(r);
    block(1, 0) = block(3, 2) = -LocalScalar::one(r);
    CHECK(pfaffian(block) == LocalScalar::one(r));
    CHECK(pfaffian(zero_matrix(0, 0, r)) == LocalScalar::one(r));
    CHECK_THROWS_AS(pfaffian(zero_matrix(3, 3, r)), Error);

    // closed form for 4x4: a01 a23 - a02 a13 + a03 a12
    Rng rng(4);
    for (int k = 0; k < 20; ++k) {
        const MatrixLocal a = random_skew(r, 4, rng);
        CHECK(pfaffian(a) == a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));
    }
}

TEST_CASE("invert_unit")
{
    const RingPtr r = ring_q();
    CHECK(invert_unit(mat(r, {{"1+t"}})) == mat(r, {{"1/(1+t)"}}));
    CHECK(invert_unit(identity_matrix(3, r)) == identity_matrix(3, r));
    try {
        (void)invert_unit(mat(r, {{"t"}}));
        FAIL("expected NotUnitDeterminant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotUnitDeterminant);
    }
    Rng rng(2);
    for (int k = 0; k < 20; ++k) {
        const Unimodular u = random_unimodular(4, r, 10, 2, rng);
        CHECK(u.matrix * u.inverse == identity_matrix(4, r));
        CHECK(invert_unit(u.matrix) == u.inverse);
    }
}

TEST_CASE("residue field tools")
{
    const BaseField q = BaseField::rationals();
    const RingPtr r = ring_q();
    const MatrixField a = evaluate(mat(r, {{"1", "2", "3"}, {"2", "4", "6"}}), fe(r, 0));
    const MatrixField k = kernel_basis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    const MatrixField b = evaluate(mat(r, {{"2", "1"}, {"1", "1"}}), fe(r, 0));
    CHECK(b * inverse(b) == MatrixField::identity(2, FieldElem::zero(q)));
    const MatrixField rhs = evaluate(mat(r, {{"1"}, {"0"}}), fe(r, 0));
    CHECK(b * solve(b, rhs) == rhs);
    CHECK(rref(a).pivots == std::vector<std::size_t>{0});
}
