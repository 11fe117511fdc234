#pragma once

// JSON documents holding a complex and an optional pairing, plus the report
// formats emitted by the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "semieuler/lab.hpp"

namespace semieuler {

inline constexpr int kSchemaVersion = 1;

struct ComplexDocument {
    FreeComplex complex;
    std::optional<Pairing> pairing;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
};

/// Structural parsing only (shapes, scalar syntax, field); the axioms are left
/// to the caller. Every failure is a ParseError whose message carries a
/// line/column or a JSON pointer.
ComplexDocument read_document(std::string_view text);

/// Canonical form: fixed key order, two-space indent, trailing newline.
std::string write_document(const ComplexDocument& doc);

enum class ReportFormat { Json, Csv, Text };
/// Throws ParseError on anything but json, csv, text.
ReportFormat parse_report_format(std::string_view name);

std::string format_fiber_report(const FiberReport& report, ReportFormat format);

std::string format_pipeline_report(const PipelineResult& result, const FiberReport& scan, ReportFormat format);

std::string format_homology(const FreeComplex& c, const FieldElem& point, ReportFormat format);

}  // namespace semieuler
