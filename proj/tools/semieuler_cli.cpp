// semieuler: command-line front end over the library.
//
// Exit codes: 0 ok, 1 an axiom or check failed, 2 input unreadable,
// 3 malformed document or argument, 4 usage, 5 pipeline hypothesis failed,
// 6 pole at a requested point, 7 output not writable, 70 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "semieuler/document.hpp"

using namespace semieuler;

namespace {

enum Exit : int {
    kOk = 0,
    kCheckFailed = 1,
    kUnreadable = 2,
    kMalformed = 3,
    kUsage = 4,
    kHypothesis = 5,
    kPole = 6,
    kUnwritable = 7,
    kInternal = 70,
};

struct Failure {
    int code;
    std::string reason;
};

[[noreturn]] void fail(int code, const std::string& reason) { throw Failure{code, reason}; }

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(kUnreadable, "cannot read input " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ComplexDocument load(const std::string& path)
{
    if (path.empty())
        fail(kUsage, "UsageError --input is required");
    return read_document(read_file(path));
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text) || !out.flush())
        fail(kUnwritable, "cannot write output " + out_path);
}

int exit_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::EvenTwist:
    case ErrorCode::InfeasibleRanks: return kMalformed;
    case ErrorCode::NotPerfectOnCohomology:
    case ErrorCode::NotPerfect:
    case ErrorCode::SkewnessViolation: return kHypothesis;
    case ErrorCode::PoleAtPoint: return kPole;
    case ErrorCode::Internal: return kInternal;
    default: return kCheckFailed;
    }
}

BaseField field_from_flag(const std::string& text)
{
    if (text == "Q")
        return BaseField::rationals();
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
        try {
            return BaseField::prime(std::stoull(text.substr(1)));
        } catch (const std::logic_error&) {
        }
    }
    throw Error(ErrorCode::ParseError, "--field expects Q or F<p>, got \"" + text + "\"");
}

FieldElem point_from_flag(const ComplexDocument& doc, const std::string& text)
{
    if (text.empty())
        return doc.complex.ring()->base_point();
    return parse_field_elem(doc.complex.ring()->field(), text);
}

std::vector<FieldElem> scan_points(const ComplexDocument& doc, const std::vector<std::string>& explicit_points,
                                   std::size_t samples, std::uint64_t seed)
{
    std::vector<FieldElem> points;
    if (!explicit_points.empty()) {
        for (const auto& p : explicit_points)
            points.push_back(point_from_flag(doc, p));
        return points;
    }
    points.push_back(doc.complex.ring()->base_point());
    for (auto& s : sample_points({doc.complex}, samples, seed))
        points.push_back(std::move(s));
    return points;
}

const Pairing& require_pairing(const ComplexDocument& doc)
{
    if (!doc.pairing)
        fail(kHypothesis, "NoPairing the document has no pairing block");
    return *doc.pairing;
}

struct Options {
    std::string input;
    std::string out;
    std::string format = "text";
    std::vector<std::string> points;
    std::size_t samples = 20;
    std::uint64_t seed = 0;
    std::string field = "Q";
    std::string base_point = "0";
    bool force_scan = false;
    std::size_t n = 1;
    std::optional<std::size_t> rank;
    std::size_t max_rank = 2;
};

int cmd_check(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    validate(doc.complex);
    std::cout << "complex: ok, ranks";
    for (auto r : doc.complex.ranks())
        std::cout << ' ' << r;
    std::cout << '\n';
    if (!doc.pairing)
        return kOk;
    const Pairing& p = *doc.pairing;
    check_chain(p);
    std::cout << "pairing chain compatibility: ok\n";
    if (!doc.complex.ring()->field().two_is_unit())
        throw Error(ErrorCode::CharTwo, "the symmetry check needs 2 to be a unit");
    check_symmetry(p);
    std::cout << "pairing (-1)^" << p.m << "-symmetry: ok\n";
    const FieldElem s0 = doc.complex.ring()->base_point();
    check_perfection_on_cohomology(p, s0);
    std::cout << "perfect on cohomology at t=" << s0.to_string() << ": ok\n";
    try {
        perfection_at_point(p, s0);
        std::cout << "perfect termwise at t=" << s0.to_string() << ": yes\n";
    } catch (const Error&) {
        std::cout << "perfect termwise at t=" << s0.to_string() << ": no\n";
    }
    return kOk;
}

int cmd_homology(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    validate(doc.complex);
    emit(o.out, format_homology(doc.complex, point_from_flag(doc, o.points.empty() ? "" : o.points.front()),
                                parse_report_format(o.format)));
    return kOk;
}

int cmd_psi(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    validate(doc.complex);
    std::string text;
    if (o.points.empty())
        text = std::to_string(semi_euler(doc.complex, doc.complex.ring()->base_point())) + "\n";
    for (const auto& p : o.points)
        text += std::to_string(semi_euler(doc.complex, point_from_flag(doc, p))) + "\n";
    emit(o.out, text);
    return kOk;
}

int cmd_normalize(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    validate(doc.complex);
    const NormalizationResult r = normalize_at_point(doc.complex);
    verify_normalization(doc.complex, r);
    ComplexDocument out{r.minimal, std::nullopt, doc.name, doc.seed};
    if (doc.pairing)
        out.pairing = transport(*doc.pairing, r.to_original);
    emit(o.out, write_document(out));
    return kOk;
}

int cmd_specialize(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    const PipelineResult r = special_form_pipeline(doc.complex, require_pairing(doc), {}, {false});
    const SpecialComplex& s = r.specialization.special;
    ComplexDocument out{full_complex(s), canonical_pairing(s), doc.name, doc.seed};
    emit(o.out, write_document(out));
    return kOk;
}

int cmd_pipeline(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    const ReportFormat format = parse_report_format(o.format);
    validate(doc.complex);
    const auto samples = sample_points({doc.complex}, o.samples, o.seed);
    std::vector<FieldElem> points{doc.complex.ring()->base_point()};
    points.insert(points.end(), samples.begin(), samples.end());
    const FiberReport scan = fiber_scan(doc.complex, points);

    if (!doc.pairing) {
        if (!o.force_scan)
            fail(kHypothesis, "NoPairing the document has no pairing block (use --force-scan for a bare fiber scan)");
        std::cerr << "warning: no pairing, the parity statement does not apply; fiber scan only\n";
        emit(o.out, format_fiber_report(scan, format));
        return kOk;
    }
    try {
        const PipelineResult r = special_form_pipeline(doc.complex, *doc.pairing, samples);
        emit(o.out, format_pipeline_report(r, scan, format));
    } catch (const Error& e) {
        if (!o.force_scan || exit_for(e.code()) != kHypothesis)
            throw;
        std::cerr << "warning: " << e.what() << "; fiber scan only\n";
        emit(o.out, format_fiber_report(scan, format));
    }
    return kOk;
}

int cmd_scan(const Options& o)
{
    const ComplexDocument doc = load(o.input);
    validate(doc.complex);
    const FiberReport r = fiber_scan(doc.complex, scan_points(doc, o.points, o.samples, o.seed));
    emit(o.out, format_fiber_report(r, parse_report_format(o.format)));
    return kOk;
}

int cmd_gen(const Options& o)
{
    GenParams params;
    params.n = o.n;
    params.min_rank = o.rank ? *o.rank : 0;
    params.max_rank = o.rank ? *o.rank : o.max_rank;
    params.field = field_from_flag(o.field);
    params.base_point = 0;
    params.seed = o.seed;
    const FieldElem s0 = parse_field_elem(params.field, o.base_point);
    if (s0.value().get_den() != 1)
        throw Error(ErrorCode::ParseError, "--base-point must be an integer");
    params.base_point = s0.value().get_num().get_si();

    ComplexDocument doc{FreeComplex::zero(LocalRing::make(params.field, params.base_point), 0), std::nullopt,
                        "generated n=" + std::to_string(o.n), o.seed};
    if (params.field.two_is_unit()) {
        GeneratedInstance g = gen_special(params);
        check_chain(g.pairing);
        check_symmetry(g.pairing);
        perfection_at_point(g.pairing, g.complex.ring()->base_point());
        doc.complex = g.complex;
        doc.pairing = g.pairing;
    } else {
        std::cerr << "warning: characteristic 2, no symmetric pairing; writing the complex alone\n";
        doc.complex = full_complex(gen_special_complex(params));
    }
    validate(doc.complex);
    emit(o.out, write_document(doc));
    return kOk;
}

int cmd_demo(const Options& o)
{
    const BaseField field = field_from_flag(o.field);
    const RingPtr ring = LocalRing::make(field, 0);
    MatrixLocal d = zero_matrix(1, 1, ring);
    d(0, 0) = LocalScalar::variable(ring);
    const FreeComplex ce(ring, {1, 1}, {d});

    std::vector<FieldElem> points{FieldElem(field, 0L), FieldElem(field, 1L)};
    for (auto& s : sample_points({ce}, o.samples, o.seed))
        points.push_back(std::move(s));
    const FiberReport scan = fiber_scan(ce, points);

    std::ostringstream text;
    text << format_fiber_report(scan, parse_report_format(o.format));
    if (o.format == "text") {
        for (const long c : {1L, -1L}) {
            MatrixLocal r0 = zero_matrix(1, 1, ring), r1 = zero_matrix(1, 1, ring);
            r0(0, 0) = LocalScalar(ring, c);
            r1(0, 0) = LocalScalar(ring, 1L);
            try {
                special_form_pipeline(ce, Pairing::make(ce, {r0, r1}), {});
                text << "candidate R=(" << c << ",1): accepted\n";
            } catch (const Error& e) {
                text << "candidate R=(" << c << ",1): " << error_name(e.code()) << '\n';
            }
        }
    }
    emit(o.out, text.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact semi-Euler characteristic toolkit"};
    app.require_subcommand(1);
    Options o;

    const auto add_input = [&](CLI::App* c) { c->add_option("--input", o.input, "Complex document (JSON)"); };
    const auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output path (default stdout)"); };
    const auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, csv or text")->capture_default_str();
    };
    const auto add_sampling = [&](CLI::App* c) {
        c->add_option("--samples", o.samples, "Sample points besides the base point")->capture_default_str();
        c->add_option("--seed", o.seed, "Seed for sample points")->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "Verify complex and pairing axioms");
    add_input(check);
    auto* hom = app.add_subcommand("homology", "Homology over O and fiber dimensions");
    add_input(hom);
    add_out(hom);
    add_format(hom);
    hom->add_option("--point", o.points, "Fiber point (default base point)");
    auto* psi = app.add_subcommand("psi", "Semi-Euler characteristic at points");
    add_input(psi);
    add_out(psi);
    psi->add_option("--point", o.points, "Fiber points (default base point)");
    auto* norm = app.add_subcommand("normalize", "Minimal complex at the base point");
    add_input(norm);
    add_out(norm);
    auto* spec = app.add_subcommand("specialize", "Rewrite into special form");
    add_input(spec);
    add_out(spec);
    auto* pipe = app.add_subcommand("pipeline", "Full special-form pipeline with parity report");
    add_input(pipe);
    add_out(pipe);
    add_format(pipe);
    add_sampling(pipe);
    pipe->add_flag("--force-scan", o.force_scan, "Fall back to a fiber scan when the hypotheses fail");
    auto* scan = app.add_subcommand("scan", "Fiber cohomology scan");
    add_input(scan);
    add_out(scan);
    add_format(scan);
    add_sampling(scan);
    scan->add_option("--point", o.points, "Explicit points (replaces sampling)");
    auto* gen = app.add_subcommand("gen", "Generate a random special complex document");
    add_out(gen);
    gen->add_option("--n", o.n, "Odd length n = 2m + 1")->capture_default_str();
    gen->add_option("--rank", o.rank, "Exact rank of every lower term");
    gen->add_option("--max-rank", o.max_rank, "Upper bound on lower ranks")->capture_default_str();
    gen->add_option("--seed", o.seed)->capture_default_str();
    gen->add_option("--field", o.field, "Q or F<p>")->capture_default_str();
    gen->add_option("--base-point", o.base_point)->capture_default_str();
    auto* demo = app.add_subcommand("demo-counterexample", "Parity jump of O -t-> O without a pairing");
    add_out(demo);
    add_format(demo);
    add_sampling(demo);
    demo->add_option("--field", o.field, "Q or F<p>")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: UsageError " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*check) return cmd_check(o);
        if (*hom) return cmd_homology(o);
        if (*psi) return cmd_psi(o);
        if (*norm) return cmd_normalize(o);
        if (*spec) return cmd_specialize(o);
        if (*pipe) return cmd_pipeline(o);
        if (*scan) return cmd_scan(o);
        if (*gen) return cmd_gen(o);
        if (*demo) return cmd_demo(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.reason << '\n';
        return f.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: Internal " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
