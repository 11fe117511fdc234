#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<std::size_t> torsion_of(const HomologyDegree& h) { return h.torsion; }

long euler_char(const std::vector<std::size_t>& dims)
{
    long chi = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dims[i]);
    return chi;
}

}  // namespace

TEST_CASE("validate")
{
    const RingPtr r = ring_q();
    CHECK_NOTHROW(validate(f_id(r)));
    CHECK_NOTHROW(validate(f_sp1(r)));
    const FreeComplex bad(r, {1, 1, 1}, {mat(r, {{"1"}}), mat(r, {{"1"}})});
    try {
        validate(bad);
        FAIL("expected NotAComplex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAComplex);
        CHECK(e.degree() == 0);
        CHECK(std::string(e.what()).rfind("NotAComplex at degree 0", 0) == 0);
    }
    CHECK_THROWS_AS(FreeComplex(r, {1, 2}, {mat(r, {{"1"}})}), Error);
}

TEST_CASE("dual_twist")
{
    const RingPtr r = ring_q();
    const FreeComplex d = dual_twist(f_id(r), 1);
    CHECK(d.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(d.diff(0) == mat(r, {{"-1"}}));

    const FreeComplex c121(r, {1, 2, 1}, {mat(r, {{"1"}, {"0"}}), mat(r, {{"0", "1"}})});
    validate(c121);
    CHECK(dual_twist(c121, 2).ranks() == std::vector<std::size_t>{1, 2, 1});
    CHECK(dual_twist(FreeComplex::zero(r, 3), 3) == FreeComplex::zero(r, 3));
    CHECK_THROWS_AS(dual_twist(c121, 1), Error);

    Rng rng(1);
    for (int k = 0; k < 30; ++k) {
        const FreeComplex c = random_complex(r, 3, 3, rng);
        const FreeComplex dd = dual_twist(dual_twist(c, 3), 3);
        CHECK_NOTHROW(validate(dual_twist(c, 3)));
        CHECK_NOTHROW(validate(dual_twist(c, 4)));
        // twice: sign (-1)^{n+1} on every differential
        CHECK(dd == c);
        const FreeComplex d4 = dual_twist(dual_twist(c, 4), 4);
        for (long i = 0; i < 3; ++i)
            CHECK(d4.diff(i) == c.diff(i).signed_by(-1));
    }
}

TEST_CASE("tensor products")
{
    const RingPtr r = ring_q();
    const FreeComplex ii = tensor(f_id(r), f_id(r));
    CHECK(ii.ranks() == std::vector<std::size_t>{1, 2, 1});
    CHECK_NOTHROW(validate(ii));
    CHECK(is_acyclic(ii));
    CHECK(tensor(f_sp1(r), FreeComplex::point(r)) == f_sp1(r));
    CHECK(tensor(f_sp1(r), f_sp1(r)).rank(1) == 8);

    // Kunneth over a field fiber: h^q(A (x) B) = sum_{i+j=q} h^i(A) h^j(B)
    Rng rng(17);
    for (const RingPtr& rr : {ring_q(), ring_p(5)}) {
        for (int k = 0; k < 15; ++k) {
            const FreeComplex a = random_complex(rr, 2, 2, rng);
            const FreeComplex b = random_complex(rr, 2, 2, rng);
            const FreeComplex ab = tensor(a, b);
            CHECK_NOTHROW(validate(ab));
            const FieldElem s = fe(rr, rng.uniform(-2, 2));
            const auto ha = fiber_cohomology(a, s), hb = fiber_cohomology(b, s), hab = fiber_cohomology(ab, s);
            for (std::size_t q = 0; q < hab.size(); ++q) {
                std::size_t expected = 0;
                for (std::size_t i = 0; i <= q; ++i)
                    if (i < ha.size() && q - i < hb.size())
                        expected += ha[i] * hb[q - i];
                CHECK(hab[q] == expected);
            }
        }
    }
}

TEST_CASE("tau")
{
    const RingPtr r = ring_q();
    const FreeComplex a = f_sp1(r);
    const TensorLayout lay(a, a);
    const ChainMap t = tau(a);
    // a (x) b with deg a = deg b = 1 goes to -(b (x) a)
    const MatrixLocal t2 = t.at(2);
    CHECK(t2(lay.index(1, 1, 1, 0), lay.index(1, 0, 1, 1)) == LocalScalar(r, -1L));
    // deg a = 0 carries no sign
    const MatrixLocal t1 = t.at(1);
    CHECK(t1(lay.index(1, 1, 0, 0), lay.index(0, 0, 1, 1)) == LocalScalar::one(r));
    CHECK(t1(lay.index(0, 0, 1, 1), lay.index(1, 1, 0, 0)) == LocalScalar::one(r));

    CHECK(is_chain_map(t));
    const ChainMap tt = compose(t, t);
    for (long q = 0; q <= 2; ++q)
        CHECK(tt.at(q) == identity_matrix(lay.rank(static_cast<std::size_t>(q)), r));

    Rng rng(23);
    for (int k = 0; k < 10; ++k) {
        const FreeComplex c = random_complex(r, 2, 2, rng);
        const ChainMap tc = tau(c);
        CHECK(is_chain_map(tc));
        const ChainMap sq = compose(tc, tc);
        for (long q = 0; q <= 4; ++q)
            CHECK(sq.at(q) == identity_matrix(tensor(c, c).rank(q), r));
    }
}

TEST_CASE("mapping cones")
{
    const RingPtr r = ring_q();
    CHECK(is_acyclic(mapping_cone(identity_map(f_sp1(r)))));
    CHECK(is_acyclic(mapping_cone(zero_map(FreeComplex::zero(r, 1), f_id(r)))));
    const FreeComplex cone = mapping_cone(zero_map(FreeComplex::zero(r, 1), f_ce(r)));
    CHECK_NOTHROW(validate(cone));
    const HomologyProfile h = homology(cone);
    // cone degree 1 is stored one degree up
    CHECK(torsion_of(h[1 + kConeShift]) == std::vector<std::size_t>{1});
    CHECK(h[1 + kConeShift].free_rank == 0);

    Rng rng(2);
    for (int k = 0; k < 10; ++k) {
        const FreeComplex c = random_complex(r, 3, 3, rng);
        CHECK_NOTHROW(validate(mapping_cone(identity_map(c))));
        CHECK_NOTHROW(validate(mapping_cone(zero_map(c, c))));
    }
}

TEST_CASE("homology over O")
{
    const RingPtr r = ring_q();
    for (const auto& h : homology(f_id(r)))
        CHECK(h.is_zero());
    const HomologyProfile ce = homology(f_ce(r));
    CHECK(ce[0].is_zero());
    CHECK(ce[1].free_rank == 0);
    CHECK(ce[1].torsion == std::vector<std::size_t>{1});
    const HomologyProfile sp = homology(f_sp1(r));
    CHECK(sp[0].is_zero());
    CHECK(sp[1].torsion == std::vector<std::size_t>{1, 1});
}

TEST_CASE("fiber cohomology and psi")
{
    const RingPtr r = ring_q();
    CHECK(fiber_cohomology(f_sp1(r), fe(r, 0)) == std::vector<std::size_t>{2, 2});
    CHECK(fiber_cohomology(f_sp1(r), fe(r, 1)) == std::vector<std::size_t>{0, 0});
    CHECK(fiber_cohomology(f_ce(r), fe(r, 0)) == std::vector<std::size_t>{1, 1});
    CHECK(fiber_cohomology(f_ce(r), fe(r, 1)) == std::vector<std::size_t>{0, 0});
    CHECK(semi_euler(f_sp1(r), fe(r, 0)) == 2);
    CHECK(semi_euler(f_sp1(r), fe(r, 1)) == 0);
    CHECK(semi_euler(f_ce(r), fe(r, 0)) == 1);
    CHECK(semi_euler(f_ce(r), fe(r, 1)) == 0);
    CHECK(generic_cohomology(f_ce(r)) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("semicontinuity, Euler characteristic and the brute-force oracle")
{
    Rng rng(99);
    for (const RingPtr& r : {ring_q(), ring_p(5)}) {
        for (int k = 0; k < 25; ++k) {
            const FreeComplex c = random_complex(r, 3, 3, rng);
            const auto generic = generic_cohomology(c);
            for (const long sv : {-2L, 0L, 1L, 3L}) {
                const FieldElem s = fe(r, sv);
                const auto dims = fiber_cohomology(c, s);
                CHECK(dims == fiber_dims_oracle(c, s));
                CHECK(euler_char(dims) == euler_char(generic));
                for (std::size_t i = 0; i < dims.size(); ++i)
                    CHECK(dims[i] >= generic[i]);
            }
        }
    }
}

TEST_CASE("quasi-isomorphisms")
{
    const RingPtr r = ring_q();
    CHECK(is_quasi_iso(identity_map(f_sp1(r))));
    CHECK(is_quasi_iso(identity_map(f_ce(r))));
    CHECK_FALSE(is_quasi_iso(zero_map(f_sp1(r), f_sp1(r))));
    CHECK(is_quasi_iso(sum_inclusion_first(f_sp1(r), f_id(r))));
    CHECK(is_quasi_iso(sum_projection_first(f_sp1(r), f_id(r))));
    // t acts as zero on H^1 = O/pi
    const FreeComplex ce = f_ce(r);
    const ChainMap tmul{ce, ce, {mat(r, {{"t"}}), mat(r, {{"t"}})}};
    CHECK(is_chain_map(tmul));
    CHECK_FALSE(is_quasi_iso(tmul));
    const ChainMap unit{ce, ce, {mat(r, {{"t+1"}}), mat(r, {{"t+1"}})}};
    CHECK(is_quasi_iso(unit));
}

TEST_CASE("chain map validation")
{
    const RingPtr r = ring_q();
    const FreeComplex sp = f_sp1(r);
    const ChainMap bad{sp, sp, {identity_matrix(2, r), zero_matrix(2, 2, r)}};
    try {
        validate_chain_map(bad);
        FAIL("expected NotAChainMap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAChainMap);
        CHECK(e.degree() == 0);
    }
}

TEST_CASE("cohomology bases and induced maps")
{
    const RingPtr r = ring_q();
    const FreeComplex sp = f_sp1(r);
    const auto basis = cohomology_basis(sp, fe(r, 0));
    CHECK(basis[0].cols() == 2);
    CHECK(basis[1].cols() == 2);
    const auto induced = induced_on_cohomology(identity_map(sp), fe(r, 0));
    CHECK(induced[0] == MatrixField::identity(2, FieldElem::zero(r->field())));

    Rng rng(6);
    for (int k = 0; k < 10; ++k) {
        const FreeComplex c = random_complex(r, 2, 3, rng);
        const FieldElem s = fe(r, 0);
        const auto b = cohomology_basis(c, s);
        const auto dims = fiber_cohomology(c, s);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            CHECK(b[i].cols() == dims[i]);
            if (i < c.length())
                CHECK((evaluate(c.diff(static_cast<long>(i)), s) * b[i]).is_zero());
        }
    }
}
