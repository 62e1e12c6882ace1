#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "invmaxian/instance.hpp"
#include "invmaxian/report.hpp"

namespace invmaxian {

/// Reads the JSON instance format (see docs/instance.schema.json).
/// Syntax problems throw Error{Parse} naming the line or the field; broken
/// trees, unknown ids, non-leaf targets and negative data throw the
/// corresponding validation error.
[[nodiscard]] InverseInstance parse_instance_text(std::string_view text);
[[nodiscard]] InverseInstance parse_instance(const std::filesystem::path& path);

/// Inverse of parse_instance_text; numbers are written as exact strings.
[[nodiscard]] std::string serialize_instance(const InverseInstance& inst);

/// Machine-readable report. Every objective produces the same top-level
/// fields; only the "certificate" object differs by kind.
[[nodiscard]] std::string report_to_json(const InverseInstance& inst, const SolveReport& report);

/// Reads back the fields `verify_solution` needs: status, objective, pair,
/// plan amounts and the stated cost.
[[nodiscard]] SolveReport parse_report(const InverseInstance& inst, std::string_view json_text);

/// Human-readable report; rationals printed as "p/q (decimal)".
void write_text_report(std::ostream& out, const InverseInstance& inst, const SolveReport& report);

[[nodiscard]] std::string exact_and_decimal(const Rational& r);

}  // namespace invmaxian
