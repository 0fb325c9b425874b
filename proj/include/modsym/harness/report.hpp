#pragma once

// Verification records, suite configuration and their serialized forms.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "modsym/grp.hpp"
#include "modsym/lietype.hpp"
#include "modsym/modrep.hpp"
#include "modsym/rep.hpp"

namespace modsym::harness {

using json = nlohmann::json;

enum class Status { pass, fail, recorded, partial };
const char* status_name(Status s);

struct Claim {
  std::string id;         // e.g. "dickson/parabolic/S8"
  std::string reference;  // what the value is checked against
  json inputs = json::object();
  json expected;          // "recorded-only" for recorded claims
  json computed;
  json detail;            // optional supporting values
  Status status = Status::fail;
  std::int64_t runtime_ms = 0;
};

// pass iff computed == expected; partial_coverage turns a pass into partial.
Status judge(const json& expected, const json& computed, bool partial_coverage = false);

enum class Format { json, csv, md, text };
Format parse_format(const std::string& s);  // throws std::invalid_argument

struct SuiteConfig {
  std::size_t max_n = 12;
  std::uint64_t enum_cap = grp::kDefaultEnumCap;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  Format format = Format::json;
  bool timings = false;  // include runtime_ms
};

struct Summary {
  std::size_t pass = 0, fail = 0, recorded = 0, partial = 0;
};
Summary summarize(const std::vector<Claim>& claims);

json claim_json(const Claim& c, bool timings);
json report_json(const std::string& suite, const SuiteConfig& cfg, const std::vector<Claim>& claims);

// Serialized report in the configured format, LF line endings.
std::string render(const std::string& suite, const SuiteConfig& cfg, const std::vector<Claim>& claims);

std::string to_csv(const std::vector<Claim>& claims, bool timings);
std::string to_markdown(const std::string& suite, const std::vector<Claim>& claims, bool timings);
std::string to_text(const std::string& suite, const std::vector<Claim>& claims, bool timings);

// Objects.
json matrix_json(const la::Mat& m);
json field_json(const gf::Field& f);
json representation_json(const rep::Representation& r);
json module_json(const modrep::GModule& m);

struct GridRow {
  lietype::Family family;
  std::size_t m = 0;
  std::uint64_t q = 0;
  lietype::IntersectionResult result;
  bool nonstandard = false;
};
std::string grid_csv(const std::vector<GridRow>& rows);
std::string grid_markdown(const std::vector<GridRow>& rows);

}  // namespace modsym::harness
