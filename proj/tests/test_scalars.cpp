#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("base fields")
{
    CHECK(BaseField::rationals().descriptor() == "Q");
    CHECK(BaseField::prime(5).descriptor() == "F5");
    CHECK_THROWS_AS(BaseField::prime(4), Error);
    CHECK_THROWS_AS(BaseField::prime(1), Error);
    CHECK_FALSE(BaseField::prime(2).two_is_unit());
    CHECK(BaseField::prime(3).two_is_unit());
}

TEST_CASE("field elements over F_p reduce and invert")
{
    const BaseField f = BaseField::prime(7);
    const FieldElem a(f, -1L);
    CHECK(a.residue() == 6);
    CHECK((a * a).is_one());
    CHECK((FieldElem(f, 3L) * FieldElem(f, 3L).inverse()).is_one());
    CHECK(FieldElem(f, mpq_class(1, 2)) == FieldElem(f, 4L));
    CHECK_THROWS_AS(FieldElem(f, 0L).inverse(), Error);
    CHECK_THROWS_AS(FieldElem(f, mpq_class(1, 7)), Error);
}

TEST_CASE("local scalar arithmetic")
{
    const RingPtr r = ring_q();
    CHECK(sc(r, "t/(t+1)") + sc(r, "1/(t+1)") == LocalScalar::one(r));
    CHECK(sc(r, "t") * sc(r, "t") == sc(r, "t^2"));
    try {
        (void)(LocalScalar::one(r) / sc(r, "t"));
        FAIL("expected DivisionByNonUnit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByNonUnit);
    }
    CHECK((sc(r, "t^2-1") / sc(r, "t-1")).to_string() == "t+1");
    CHECK((sc(r, "t^2") / sc(r, "t-1")).to_string() == "(t^2)/(t-1)");
    CHECK(sc(r, "(t^2-1)/(t+1)").to_string() == "t-1");
}

TEST_CASE("evaluation")
{
    const RingPtr r = ring_q();
    CHECK(sc(r, "t^2+1").eval_at(fe(r, 2)) == fe(r, 5));
    CHECK(sc(r, "1/(t-1)").eval_at(fe(r, 0)) == fe(r, -1));
    try {
        (void)sc(r, "1/(t-1)").eval_at(fe(r, 1));
        FAIL("expected PoleAtPoint");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleAtPoint);
    }
}

TEST_CASE("valuation and units")
{
    const RingPtr r = ring_q();
    CHECK(sc(r, "t^2*(t+1)").valuation() == 2);
    CHECK(LocalScalar::zero(r).valuation() == kInfiniteValuation);
    CHECK(sc(r, "3/(t-2)").valuation() == 0);
    CHECK(sc(r, "t+1").is_unit());
    CHECK_FALSE(sc(r, "t").is_unit());
    CHECK_FALSE(LocalScalar(ring_p(2), 2L).is_unit());

    const RingPtr r3 = ring_q(3);
    CHECK(sc(r3, "t").is_unit());
    CHECK(sc(r3, "(t-3)^2*t").valuation() == 2);
    CHECK(LocalScalar::uniformizer(r3) == sc(r3, "t-3"));
}

TEST_CASE("quotient divides by non-units when the valuation allows")
{
    const RingPtr r = ring_q();
    CHECK(quotient(sc(r, "t^3+t^2"), sc(r, "t")) == sc(r, "t^2+t"));
    CHECK(quotient(sc(r, "t^2"), sc(r, "t*(t+2)")) == sc(r, "t/(t+2)"));
    CHECK_THROWS_AS(quotient(sc(r, "t"), sc(r, "t^2")), Error);
    CHECK_THROWS_AS(quotient(sc(r, "1"), LocalScalar::zero(r)), Error);
}

TEST_CASE("parser")
{
    const RingPtr r = ring_q();
    CHECK(sc(r, " -3/2 * t + t^2 + 1").to_string() == "t^2-3/2*t+1");
    CHECK(sc(r, "-(t)").to_string() == "-t");
    CHECK(sc(r, "3*t").to_string() == "3*t");
    CHECK(sc(r, "(t+1)^0") == LocalScalar::one(r));
    for (const char* bad : {"", "t+", "2**t", "(t", "t^t", "x", "1/t", "1/0"}) {
        CAPTURE(bad);
        try {
            (void)sc(r, bad);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
    try {
        (void)sc(r, "t + $");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("column 5") != std::string::npos);
    }
    CHECK(parse_field_elem(BaseField::rationals(), "-1/2") == FieldElem(BaseField::rationals(), mpq_class(-1, 2)));
    CHECK_THROWS_AS(parse_field_elem(BaseField::rationals(), "t"), Error);
}

TEST_CASE("to_string round-trips through the parser")
{
    Rng rng(11);
    for (const RingPtr& r : {ring_q(), ring_q(2), ring_p(5), ring_p(7, 3)}) {
        for (int k = 0; k < 200; ++k) {
            const Poly num = random_poly(r->field(), 3, rng);
            Poly den = random_poly(r->field(), 2, rng);
            if (den.is_zero() || den.eval(r->base_point()).is_zero())
                continue;
            const LocalScalar x(r, num, den);
            CAPTURE(x.to_string());
            CHECK(parse_scalar(r, x.to_string()) == x);
        }
    }
}

TEST_CASE("ring axioms on random scalars")
{
    Rng rng(3);
    for (const RingPtr& r : {ring_q(), ring_p(5)}) {
        for (int k = 0; k < 100; ++k) {
            const LocalScalar a(r, random_poly(r->field(), 2, rng));
            const LocalScalar b(r, random_poly(r->field(), 2, rng), Poly::constant(r->field(), 1) +
                                                                        Poly::variable(r->field()) *
                                                                            Poly::constant(r->field(), 2));
            const LocalScalar c(r, random_poly(r->field(), 2, rng));
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK(a - a == LocalScalar::zero(r));
            if (b.is_unit())
                CHECK((a / b) * b == a);
            if (!a.is_zero() && !c.is_zero())
                CHECK((a * c).valuation() == a.valuation() + c.valuation());
        }
    }
}

TEST_CASE("polynomial division and gcd")
{
    const BaseField q = BaseField::rationals();
    const Poly t = Poly::variable(q);
    const Poly one = Poly::constant(q, 1);
    const Poly a = (t + one) * (t - one) * t;
    Poly quo(q), rem(q);
    a.divmod(t * t + one, quo, rem);
    CHECK(quo * (t * t + one) + rem == a);
    CHECK(rem.degree() < 2);
    CHECK(gcd(a, (t + one) * (t + one)) == t + one);
    CHECK(gcd(Poly(q), Poly(q)).is_zero());
}
