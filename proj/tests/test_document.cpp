#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace testing;

namespace {

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(SEMIEULER_FIXTURES) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string parse_error_of(const std::string& text)
{
    try {
        (void)read_document(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        return e.what();
    }
    FAIL("expected ParseError");
    return {};
}

}  // namespace

TEST_CASE("fixtures load")
{
    const ComplexDocument sp = read_document(fixture("f_sp1.json"));
    CHECK(sp.complex == f_sp1(ring_q()));
    REQUIRE(sp.pairing);
    CHECK(sp.pairing->components == taut_sp1(ring_q()).components);
    CHECK(sp.name == "F_SP1");
    CHECK(read_document(fixture("f_ce.json")).complex == f_ce(ring_q()));
    CHECK_FALSE(read_document(fixture("f_id.json")).pairing);
}

TEST_CASE("write then read then write is byte-identical")
{
    for (const char* name : {"f_sp1.json", "f_ce.json", "f_id.json"}) {
        const std::string once = write_document(read_document(fixture(name)));
        CHECK(write_document(read_document(once)) == once);
    }
    for (const BaseField f : {BaseField::rationals(), BaseField::prime(5)}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GenParams gp;
            gp.n = 1 + 2 * (seed % 3);
            gp.max_rank = 3;
            gp.field = f;
            gp.base_point = 2;
            gp.seed = seed;
            const GeneratedInstance g = gen_special(gp);
            const Scrambled s = scramble(g.complex, g.pairing, seed);
            const ComplexDocument doc{s.complex, s.pairing, "x", seed};
            const std::string once = write_document(doc);
            const ComplexDocument back = read_document(once);
            CHECK(back.complex == s.complex);
            CHECK(back.pairing->components == s.pairing.components);
            CHECK(write_document(back) == once);
        }
    }
    const ComplexDocument empty{FreeComplex::zero(ring_q(), 1), std::nullopt, std::nullopt, std::nullopt};
    CHECK(write_document(read_document(write_document(empty))) == write_document(empty));
}

TEST_CASE("positioned errors")
{
    CHECK(parse_error_of("{\n  \"schema\": 1,\n  oops\n}").find("line 3") != std::string::npos);
    const std::string base = fixture("f_sp1.json");
    std::string bad = base;
    bad.replace(bad.find("\"-t\""), 4, "\"-t+\"");
    const std::string msg = parse_error_of(bad);
    CHECK(msg.find("/diffs/0/1/0") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);

    CHECK(parse_error_of(R"({"schema": 1, "field": "R", "base_point": "0", "ranks": [1], "diffs": []})")
              .find("/field") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 2, "field": "Q", "base_point": "0", "ranks": [1], "diffs": []})")
              .find("/schema") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 1, "field": {"Fp": 6}, "base_point": "0", "ranks": [1], "diffs": []})")
              .find("/field/Fp") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 1, "field": "Q", "base_point": "0", "ranks": [1, 1], "diffs": [[["1", "2"]]]})")
              .find("/diffs/0/0") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 1, "field": "Q", "base_point": "0", "ranks": [1, 1], "diffs": [[["1/t"]]]})")
              .find("vanishes") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 1, "field": "Q", "base_point": "0", "ranks": [1, 1], "diffs": [[[1]]]})")
              .find("strings") != std::string::npos);
    CHECK(parse_error_of(R"({"schema": 1, "field": "Q", "base_point": "0", "ranks": [1, 1, 1],
        "diffs": [[["0"]], [["0"]]], "pairing": {"n": 2, "m": 0, "components": []}})")
              .find("/pairing/m") != std::string::npos);
}

TEST_CASE("structure only: axioms are not checked on load")
{
    const std::string text = R"({"schema": 1, "field": "Q", "base_point": "0", "ranks": [1, 1, 1],
        "diffs": [[["1"]], [["1"]]]})";
    const ComplexDocument doc = read_document(text);
    CHECK_THROWS_AS(validate(doc.complex), Error);
}

TEST_CASE("report formats")
{
    CHECK(parse_report_format("json") == ReportFormat::Json);
    CHECK_THROWS_AS(parse_report_format("xml"), Error);
    const RingPtr r = ring_q();
    const FiberReport ce = fiber_scan(f_ce(r), {fe(r, 0), fe(r, 1)});
    CHECK(format_fiber_report(ce, ReportFormat::Csv) ==
          "point,h0,h1,psi,parity,jump_flags\n0,1,1,1,1,11\n1,0,0,0,0,00\n");
    CHECK(format_fiber_report(ce, ReportFormat::Text).find("psi parity constant: no") != std::string::npos);

    const PipelineResult res = special_form_pipeline(f_sp1(r), taut_sp1(r), {fe(r, 1)});
    const FiberReport scan = fiber_scan(f_sp1(r), {fe(r, 0), fe(r, 1)});
    const std::string text = format_pipeline_report(res, scan, ReportFormat::Text);
    CHECK(text.find("psi parity constant: yes") != std::string::npos);
    CHECK(text.find("smith exponents (1,1)") != std::string::npos);
    const std::string json = format_pipeline_report(res, scan, ReportFormat::Json);
    CHECK(json.find("\"psi_parity_constant\": true") != std::string::npos);
    CHECK(format_homology(f_sp1(r), fe(r, 0), ReportFormat::Text).find("H^1 = O/(pi) + O/(pi)") != std::string::npos);
}
