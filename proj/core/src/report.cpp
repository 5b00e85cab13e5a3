#include "cwb/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace cwb::harness {

namespace {

using Json = nlohmann::ordered_json;

Json certificate_json(const Verdict& v) {
  Json c = Json::object();
  if (const auto* z = std::get_if<ZeroFound>(&v)) {
    c["y"] = to_string(z->y);
    Json trace = Json::array();
    for (const auto& [y, value] : z->trace) trace.push_back({to_string(y), to_string(value)});
    c["values"] = std::move(trace);
  } else if (const auto* s = std::get_if<SelfTerminationDetected>(&v)) {
    c["y"] = to_string(s->y);
    c["first"] = s->first;
    c["repeat"] = s->repeat;
  } else if (const auto* p = std::get_if<ProofFound>(&v)) {
    c["x"] = to_string(p->x);
  } else {
    const auto& u = std::get<Undetermined>(v);
    c["t1"] = u.t1;
    c["t2"] = u.t2;
  }
  return c;
}

std::string record_line(const RunRecord& r) {
  const TheoremOneInstance& inst = r.instance;
  Json j;
  j["instance"] = inst.name;
  j["digest"] = digest(inst);
  j["backend"] = std::string(backend_name(inst.backend));
  j["a"] = to_string(inst.a);
  j["verdict"] = std::string(verdict_name(r.run.verdict));
  j["case"] = std::string(case_label(r.run.verdict));
  j["certificate"] = certificate_json(r.run.verdict);
  j["t1_steps"] = r.run.t1_steps;
  j["t2_steps"] = r.run.t2_steps;
  j["ticks"] = r.run.ticks;
  j["budgets"] = {{"t1_steps", inst.budgets.t1_steps},
                  {"t2_candidates", inst.budgets.t2_candidates},
                  {"slice", inst.budgets.slice},
                  {"ticks", inst.budgets.ticks},
                  {"tm_memory_cap", inst.budgets.tm_memory_cap}};
  j["t2_mode"] = std::string(arith::enumeration_name(inst.t2_mode));
  return j.dump();
}

}  // namespace

std::optional<ReportFormat> report_format_from_name(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "records") return ReportFormat::Records;
  return std::nullopt;
}

std::string abbreviate(const Natural& n) {
  std::string s = to_string(n);
  if (s.size() <= 24) return s;
  return s.substr(0, 10) + "...[" + std::to_string(s.size()) + " digits]";
}

std::string certificate_summary(const Verdict& v) {
  if (const auto* z = std::get_if<ZeroFound>(&v)) return "y*=" + to_string(z->y);
  if (const auto* s = std::get_if<SelfTerminationDetected>(&v)) {
    return "y=" + to_string(s->y) + " first=" + std::to_string(s->first) +
           " repeat=" + std::to_string(s->repeat);
  }
  if (const auto* p = std::get_if<ProofFound>(&v)) return "x=" + abbreviate(p->x);
  return "-";
}

std::string emit_report(std::span<const RunRecord> runs, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Records) {
    for (const RunRecord& r : runs) out << record_line(r) << '\n';
    return out.str();
  }

  using Row = std::array<std::string, 7>;
  std::vector<Row> rows;
  rows.push_back({"instance", "digest", "verdict", "y*/x", "t1-steps", "t2-steps", "ticks"});
  for (const RunRecord& r : runs) {
    rows.push_back({r.instance.name, digest(r.instance), std::string(verdict_name(r.run.verdict)),
                    certificate_summary(r.run.verdict), std::to_string(r.run.t1_steps),
                    std::to_string(r.run.t2_steps), std::to_string(r.run.ticks)});
  }
  std::array<std::size_t, 7> width{};
  for (const Row& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const Row& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace cwb::harness
