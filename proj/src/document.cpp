#include "semieuler/document.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

namespace semieuler {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what)
{
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const Json& member(const Json& obj, const char* key, const std::string& where)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        schema_fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t natural(const Json& v, const std::string& where)
{
    if (!v.is_number_unsigned())
        schema_fail(where, "expected a non-negative integer");
    return v.get<std::size_t>();
}

BaseField read_field(const Json& v)
{
    if (v.is_string() && v.get<std::string>() == "Q")
        return BaseField::rationals();
    if (v.is_object() && v.size() == 1 && v.contains("Fp")) {
        const std::size_t p = natural(v["Fp"], "/field/Fp");
        try {
            return BaseField::prime(p);
        } catch (const Error& e) {
            schema_fail("/field/Fp", e.detail());
        }
    }
    schema_fail("/field", "expected \"Q\" or {\"Fp\": p}");
}

Json write_field(const BaseField& f)
{
    if (f.is_rationals())
        return "Q";
    Json j = Json::object();
    j["Fp"] = f.characteristic();
    return j;
}

MatrixLocal read_matrix(const Json& v, std::size_t rows, std::size_t cols, const RingPtr& ring,
                        const std::string& where)
{
    if (!v.is_array() || v.size() != rows)
        schema_fail(where, "expected " + std::to_string(rows) + " rows");
    MatrixLocal out = zero_matrix(rows, cols, ring);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_where = where + "/" + std::to_string(r);
        if (!v[r].is_array() || v[r].size() != cols)
            schema_fail(row_where, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string at = row_where + "/" + std::to_string(c);
            const Json& e = v[r][c];
            if (!e.is_string())
                schema_fail(at, "scalars are written as strings");
            try {
                out(r, c) = parse_scalar(ring, e.get<std::string>());
            } catch (const Error& err) {
                schema_fail(at, err.detail());
            }
        }
    }
    return out;
}

Json write_matrix(const MatrixLocal& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename F>
auto rewrap(const std::string& where, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError)
            throw;
        schema_fail(where, std::string(e.what()));
    }
}

ComplexDocument read_json(const Json& j)
{
    if (!j.is_object())
        schema_fail("/", "expected an object");
    if (natural(member(j, "schema", "/"), "/schema") != static_cast<std::size_t>(kSchemaVersion))
        schema_fail("/schema", "unsupported schema version");
    const BaseField field = read_field(member(j, "field", "/"));
    const Json& bp = member(j, "base_point", "/");
    if (!bp.is_string())
        schema_fail("/base_point", "expected a string");
    FieldElem s0;
    try {
        s0 = parse_field_elem(field, bp.get<std::string>());
    } catch (const Error& e) {
        schema_fail("/base_point", e.detail());
    }
    const RingPtr ring = LocalRing::make(field, s0);

    const Json& jr = member(j, "ranks", "/");
    if (!jr.is_array() || jr.empty())
        schema_fail("/ranks", "expected a non-empty array");
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < jr.size(); ++i)
        ranks.push_back(natural(jr[i], "/ranks/" + std::to_string(i)));

    const Json& jd = member(j, "diffs", "/");
    if (!jd.is_array() || jd.size() + 1 != ranks.size())
        schema_fail("/diffs", "expected " + std::to_string(ranks.size() - 1) + " differentials");
    std::vector<MatrixLocal> diffs;
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
        diffs.push_back(read_matrix(jd[i], ranks[i + 1], ranks[i], ring, "/diffs/" + std::to_string(i)));

    ComplexDocument doc{FreeComplex(ring, ranks, std::move(diffs)), std::nullopt, std::nullopt, std::nullopt};

    if (const auto it = j.find("name"); it != j.end()) {
        if (!it->is_string())
            schema_fail("/name", "expected a string");
        doc.name = it->get<std::string>();
    }
    if (const auto it = j.find("seed"); it != j.end())
        doc.seed = natural(*it, "/seed");

    if (const auto it = j.find("pairing"); it != j.end()) {
        const Json& jp = *it;
        if (!jp.is_object())
            schema_fail("/pairing", "expected an object");
        const std::size_t n = natural(member(jp, "n", "/pairing"), "/pairing/n");
        const std::size_t m = natural(member(jp, "m", "/pairing"), "/pairing/m");
        if (n != doc.complex.length())
            schema_fail("/pairing/n", "twist must equal the complex length " + std::to_string(doc.complex.length()));
        if (n != 2 * m + 1)
            schema_fail("/pairing/m", "expected n = 2m + 1");
        const Json& jc = member(jp, "components", "/pairing");
        if (!jc.is_array() || jc.size() != n + 1)
            schema_fail("/pairing/components", "expected " + std::to_string(n + 1) + " components");
        std::vector<MatrixLocal> comps;
        for (std::size_t p = 0; p <= n; ++p)
            comps.push_back(read_matrix(jc[p], ranks[n - p], ranks[p], ring,
                                        "/pairing/components/" + std::to_string(p)));
        doc.pairing = rewrap("/pairing", [&] { return Pairing::make(doc.complex, std::move(comps)); });
    }
    return doc;
}

}  // namespace

ComplexDocument read_document(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::ParseError,
                    "invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return read_json(j);
}

std::string write_document(const ComplexDocument& doc)
{
    const FreeComplex& c = doc.complex;
    Json j = Json::object();
    j["schema"] = kSchemaVersion;
    if (doc.name)
        j["name"] = *doc.name;
    if (doc.seed)
        j["seed"] = *doc.seed;
    j["field"] = write_field(c.ring()->field());
    j["base_point"] = c.ring()->base_point().to_string();
    j["ranks"] = c.ranks();
    Json diffs = Json::array();
    for (const auto& d : c.diffs())
        diffs.push_back(write_matrix(d));
    j["diffs"] = std::move(diffs);
    if (doc.pairing) {
        Json p = Json::object();
        p["n"] = doc.pairing->n;
        p["m"] = doc.pairing->m;
        Json comps = Json::array();
        for (const auto& r : doc.pairing->components)
            comps.push_back(write_matrix(r));
        p["components"] = std::move(comps);
        j["pairing"] = std::move(p);
    }
    return j.dump(2) + "\n";
}

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "text")
        return ReportFormat::Text;
    throw Error(ErrorCode::ParseError, "unknown format \"" + std::string(name) + "\" (json, csv, text)");
}

namespace {

std::string jump_flags(const std::vector<bool>& jumps)
{
    std::string s;
    for (bool b : jumps)
        s += b ? '1' : '0';
    return s;
}

std::string fiber_csv(const FiberReport& r)
{
    std::ostringstream out;
    out << "point";
    for (std::size_t i = 0; i <= r.length; ++i)
        out << ",h" << i;
    out << ",psi,parity,jump_flags\n";
    for (const auto& row : r.rows) {
        out << row.point.to_string();
        for (auto d : row.dims)
            out << ',' << d;
        out << ',' << row.psi << ',' << row.parity << ',' << jump_flags(row.jumps) << '\n';
    }
    return out.str();
}

Json fiber_json(const FiberReport& r)
{
    Json j = Json::object();
    j["length"] = r.length;
    j["generic_dims"] = r.generic_dims;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e = Json::object();
        e["point"] = row.point.to_string();
        e["dims"] = row.dims;
        e["psi"] = row.psi;
        e["parity"] = row.parity;
        e["jump_flags"] = jump_flags(row.jumps);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["parity_constant"] = r.parity_constant();
    j["any_jump"] = r.any_jump();
    return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

}  // namespace

std::string format_fiber_report(const FiberReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::Json: return fiber_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return fiber_csv(report);
    case ReportFormat::Text: break;
    }
    std::ostringstream out;
    out << "generic dims: " << join(report.generic_dims) << '\n';
    for (const auto& row : report.rows)
        out << "s=" << row.point.to_string() << "  dims " << join(row.dims) << "  psi " << row.psi << "  parity "
            << row.parity << "  jumps " << jump_flags(row.jumps) << '\n';
    out << "psi parity constant: " << yes_no(report.parity_constant()) << '\n';
    return out.str();
}

std::string format_pipeline_report(const PipelineResult& result, const FiberReport& scan, ReportFormat format)
{
    const PipelineReport& r = result.report;
    const SpecialComplex& s = result.specialization.special;
    const bool constant = r.parity_constant() && scan.parity_constant();
    if (format == ReportFormat::Csv)
        return fiber_csv(scan);
    if (format == ReportFormat::Json) {
        Json j = Json::object();
        j["n"] = r.n;
        j["m"] = r.m;
        j["input_ranks"] = r.input_ranks;
        j["minimal_ranks"] = r.minimal_ranks;
        j["split_count"] = r.split_count;
        Json sj = Json::object();
        sj["lower_ranks"] = s.lower_ranks;
        Json alphas = Json::array();
        for (const auto& a : s.alphas)
            alphas.push_back(write_matrix(a));
        sj["alphas"] = std::move(alphas);
        sj["beta"] = write_matrix(s.beta);
        j["special"] = std::move(sj);
        j["beta_exponents"] = r.beta_exponents;
        j["beta_skew"] = r.beta_skew;
        if (r.quasi_iso_verified)
            j["quasi_iso_verified"] = *r.quasi_iso_verified;
        j["expected_parity"] = r.expected_parity;
        Json samples = Json::array();
        for (const auto& rec : r.samples) {
            Json e = Json::object();
            e["point"] = rec.point.to_string();
            e["psi_input"] = rec.psi_input;
            e["psi_formula"] = rec.psi_formula ? Json(*rec.psi_formula) : Json(nullptr);
            e["psi_special"] = rec.psi_special ? Json(*rec.psi_special) : Json(nullptr);
            e["parity"] = rec.parity;
            e["in_neighborhood"] = rec.in_neighborhood;
            e["dims_agree"] = rec.dims_agree;
            samples.push_back(std::move(e));
        }
        j["samples"] = std::move(samples);
        j["fiber_scan"] = fiber_json(scan);
        j["psi_parity_constant"] = constant;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "n " << r.n << "  m " << r.m << '\n';
    out << "input ranks: " << join(r.input_ranks) << '\n';
    out << "minimal ranks: " << join(r.minimal_ranks) << '\n';
    out << "split pairs per degree: " << join(r.split_count) << '\n';
    out << "beta: " << s.beta.rows() << "x" << s.beta.cols() << "  skew " << yes_no(r.beta_skew)
        << "  smith exponents " << join(r.beta_exponents) << '\n';
    if (r.quasi_iso_verified)
        out << "quasi-isomorphism to special complex: " << yes_no(*r.quasi_iso_verified) << '\n';
    out << "expected parity: " << r.expected_parity << '\n';
    for (const auto& rec : r.samples)
        out << "s=" << rec.point.to_string() << "  psi " << rec.psi_input << "  formula "
            << (rec.psi_formula ? std::to_string(*rec.psi_formula) : "pole") << "  parity " << rec.parity << '\n';
    out << "psi parity constant: " << yes_no(constant) << '\n';
    return out.str();
}

std::string format_homology(const FreeComplex& c, const FieldElem& point, ReportFormat format)
{
    const HomologyProfile h = homology(c);
    const auto dims = fiber_cohomology(c, point);
    if (format == ReportFormat::Json) {
        Json j = Json::object();
        Json hj = Json::array();
        for (const auto& d : h) {
            Json e = Json::object();
            e["free_rank"] = d.free_rank;
            e["torsion"] = d.torsion;
            hj.push_back(std::move(e));
        }
        j["homology"] = std::move(hj);
        j["point"] = point.to_string();
        j["fiber_dims"] = dims;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "degree,free_rank,torsion,fiber_dim\n";
        for (std::size_t i = 0; i < h.size(); ++i) {
            out << i << ',' << h[i].free_rank << ',';
            for (std::size_t k = 0; k < h[i].torsion.size(); ++k)
                out << (k ? ";" : "") << h[i].torsion[k];
            out << ',' << dims[i] << '\n';
        }
        return out.str();
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        out << "H^" << i << " = ";
        std::vector<std::string> parts;
        if (h[i].free_rank > 0)
            parts.push_back(h[i].free_rank == 1 ? "O" : "O^" + std::to_string(h[i].free_rank));
        for (auto e : h[i].torsion)
            parts.push_back(e == 1 ? "O/(pi)" : "O/(pi^" + std::to_string(e) + ")");
        if (parts.empty())
            out << "0";
        for (std::size_t k = 0; k < parts.size(); ++k)
            out << (k ? " + " : "") << parts[k];
        out << "    dim at t=" << point.to_string() << ": " << dims[i] << '\n';
    }
    return out.str();
}

}  // namespace semieuler
