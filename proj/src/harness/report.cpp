#include "modsym/harness/report.hpp"

#include <sstream>
#include <stdexcept>

namespace modsym::harness {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::recorded: return "recorded";
    case Status::partial: return "partial";
  }
  return "fail";
}

Status judge(const json& expected, const json& computed, bool partial_coverage) {
  if (expected.is_null() || expected != computed) return Status::fail;
  return partial_coverage ? Status::partial : Status::pass;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

Summary summarize(const std::vector<Claim>& claims) {
  Summary s;
  for (const auto& c : claims) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::recorded: ++s.recorded; break;
      case Status::partial: ++s.partial; break;
    }
  }
  return s;
}

json claim_json(const Claim& c, bool timings) {
  json j{{"claim_id", c.id},       {"reference", c.reference}, {"inputs", c.inputs},
         {"expected", c.expected}, {"computed", c.computed},   {"status", status_name(c.status)}};
  if (!c.detail.is_null()) j["detail"] = c.detail;
  if (timings) j["runtime_ms"] = c.runtime_ms;
  return j;
}

json report_json(const std::string& suite, const SuiteConfig& cfg, const std::vector<Claim>& claims) {
  json arr = json::array();
  for (const auto& c : claims) arr.push_back(claim_json(c, cfg.timings));
  const Summary s = summarize(claims);
  return json{{"suite", suite},
              {"config", {{"max_n", cfg.max_n}, {"enum_cap", cfg.enum_cap}, {"seed", cfg.seed}}},
              {"claims", std::move(arr)},
              {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"recorded", s.recorded}, {"partial", s.partial}}}};
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string compact(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
}  // namespace

std::string to_csv(const std::vector<Claim>& claims, bool timings) {
  std::ostringstream out;
  out << "claim_id,reference,inputs,expected,computed,status" << (timings ? ",runtime_ms" : "") << "\n";
  for (const auto& c : claims) {
    out << csv_field(c.id) << ',' << csv_field(c.reference) << ',' << csv_field(c.inputs.dump()) << ','
        << csv_field(compact(c.expected)) << ',' << csv_field(compact(c.computed)) << ',' << status_name(c.status);
    if (timings) out << ',' << c.runtime_ms;
    out << "\n";
  }
  return out.str();
}

std::string to_markdown(const std::string& suite, const std::vector<Claim>& claims, bool timings) {
  std::ostringstream out;
  const Summary s = summarize(claims);
  out << "# " << suite << "\n\n";
  out << "pass " << s.pass << ", fail " << s.fail << ", recorded " << s.recorded << ", partial " << s.partial
      << "\n\n";
  out << "| claim | expected | computed | status |" << (timings ? " ms |" : "") << "\n";
  out << "|---|---|---|---|" << (timings ? "---|" : "") << "\n";
  for (const auto& c : claims) {
    out << "| " << md_cell(c.id) << " | " << md_cell(compact(c.expected)) << " | " << md_cell(compact(c.computed))
        << " | " << status_name(c.status) << " |";
    if (timings) out << ' ' << c.runtime_ms << " |";
    out << "\n";
  }
  return out.str();
}

std::string to_text(const std::string& suite, const std::vector<Claim>& claims, bool timings) {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << c.id << ": expected " << compact(c.expected) << ", computed " << compact(c.computed) << ", "
        << status_name(c.status);
    if (timings) out << " (" << c.runtime_ms << " ms)";
    out << "\n";
  }
  const Summary s = summarize(claims);
  out << suite << ": " << s.pass << " pass, " << s.fail << " fail, " << s.recorded << " recorded, " << s.partial
      << " partial\n";
  return out.str();
}

std::string render(const std::string& suite, const SuiteConfig& cfg, const std::vector<Claim>& claims) {
  switch (cfg.format) {
    case Format::json: return report_json(suite, cfg, claims).dump(2) + "\n";
    case Format::csv: return to_csv(claims, cfg.timings);
    case Format::md: return to_markdown(suite, claims, cfg.timings);
    case Format::text: return to_text(suite, claims, cfg.timings);
  }
  return {};
}

json matrix_json(const la::Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<std::uint32_t>(m.row(r).begin(), m.row(r).end()));
  return rows;
}

json field_json(const gf::Field& f) {
  json j{{"p", f.p()}, {"r", f.r()}, {"q", f.q()}};
  if (!f.is_prime()) j["modulus"] = std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
  return j;
}

json representation_json(const rep::Representation& r) {
  json gens = json::array();
  for (const auto& g : r.group.gens) gens.push_back(g.to_cycles());
  json images = json::array();
  for (const auto& m : r.images) images.push_back(matrix_json(m));
  json j{{"label", r.label},     {"field", field_json(r.field)}, {"degree", r.group.degree},
         {"group", r.group.label}, {"generators", gens},           {"dim", r.dim},
         {"images", images}};
  if (r.faithful) j["faithful"] = *r.faithful;
  return j;
}

json module_json(const modrep::GModule& m) {
  json gens = json::array();
  json images = json::array();
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    gens.push_back("(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")");
    images.push_back(matrix_json(m.gens[i]));
  }
  return json{{"label", m.label}, {"field", field_json(m.field)}, {"degree", m.n},
              {"group", "S_" + std::to_string(m.n)}, {"generators", gens}, {"dim", m.dim},
              {"images", images}};
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::ostringstream out;
  out << "family,m,q,computed,closed_form,match,root_span,rp_reference,scope\n";
  for (const auto& r : rows)
    out << lietype::family_name(r.family) << ',' << r.m << ',' << r.q << ',' << r.result.computed << ','
        << r.result.closed_form << ',' << (r.result.match ? "true" : "false") << ',' << r.result.root_span << ','
        << r.result.rp_reference << ',' << (r.nonstandard ? "outside scope" : "standard") << "\n";
  return out.str();
}

std::string grid_markdown(const std::vector<GridRow>& rows) {
  std::ostringstream out;
  out << "| family | m | q | computed | closed form | match | root span | r_p/r | scope |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << lietype::family_name(r.family) << " | " << r.m << " | " << r.q << " | " << r.result.computed
        << " | " << r.result.closed_form << " | " << (r.result.match ? "yes" : "no") << " | " << r.result.root_span
        << " | " << r.result.rp_reference << " | " << (r.nonstandard ? "outside scope" : "standard") << " |\n";
  return out.str();
}

}  // namespace modsym::harness
