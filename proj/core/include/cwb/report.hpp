#pragma once

#include <span>
#include <string>
#include <string_view>

#include "cwb/theorem_one.hpp"

namespace cwb::harness {

enum class ReportFormat : std::uint8_t { Table, Records };

std::optional<ReportFormat> report_format_from_name(std::string_view name);

struct RunRecord {
  TheoremOneInstance instance;
  TheoremOneRun run;
};

// Numbers longer than 24 digits become "<first 10>...[N digits]".
std::string abbreviate(const Natural& n);

// The y*/x column of the table.
std::string certificate_summary(const Verdict& v);

// Table: one aligned row per run under a header. Records: one JSON object
// per line with the full certificate. Both are byte-stable.
std::string emit_report(std::span<const RunRecord> runs, ReportFormat format);

}  // namespace cwb::harness
