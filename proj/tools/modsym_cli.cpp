// modsym: verification suites, tables, oracles and object dumps.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modsym/dickson.hpp"
#include "modsym/harness/oracle.hpp"
#include "modsym/harness/report.hpp"
#include "modsym/harness/suites.hpp"

using namespace modsym;
using harness::json;

namespace {

int write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  f << text;
  return f ? 0 : 2;
}

std::vector<la::Mat> builtin_module(const std::string& name, std::size_t& order) {
  const auto F = gf::Field::make(2);
  const la::Mat j = la::Mat::from_rows(F, {{1, 1}, {0, 1}});
  const la::Mat i2 = la::Mat::identity(F, 2);
  if (name == "regular-c2") {
    order = 2;
    return {j};
  }
  if (name == "regular-c2xc2") {
    order = 4;
    return {la::kron(j, i2), la::kron(i2, j)};
  }
  if (name == "trivial2-c2") {
    order = 2;
    return {i2};
  }
  throw std::invalid_argument("unknown builtin module: " + name);
}

std::vector<la::Mat> module_from_json(const std::string& path, std::size_t& order) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  const json j = json::parse(f);
  order = j.at("group_order").get<std::size_t>();
  std::vector<la::Mat> gens;
  for (const auto& m : j.at("gens")) gens.push_back(la::Mat::from_rows(gf::Field::make(2), m.get<std::vector<std::vector<std::int64_t>>>()));
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular representation and parabolic subgroup verification"};
  app.require_subcommand(1);

  harness::SuiteConfig cfg;
  std::string format = "json", out;
  harness::GridBounds grid;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.max_n, "Largest degree n in sweeps")->capture_default_str();
    sub->add_option("--enum-cap", cfg.enum_cap, "Group enumeration cap")->capture_default_str();
    sub->add_option("--format", format, "json, csv, md or text")->capture_default_str();
    sub->add_option("--out", out, "Output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sub->add_flag("--timings", cfg.timings, "Include runtime_ms in reports");
  };

  auto* verify = app.add_subcommand("verify", "Run a claim suite");
  std::string suite, theorem;
  verify->add_option("suite", suite, "dickson, lietype, appendix or all")->required();
  verify->add_option("--theorem", theorem, "Restrict the appendix suite to one claim family");
  verify->add_option("--max-m", grid.max_m, "Largest rank m in the lietype grid")->capture_default_str();
  verify->add_option("--q", grid.qs, "Field orders in the lietype grid");
  verify->add_flag("--nonstandard", grid.nonstandard, "Add SO_2m rows for m = 2, 3 (recorded only)");
  add_common(verify);

  auto* table = app.add_subcommand("table", "Print a computed table");
  std::string table_name;
  table->add_option("name", table_name, "lietype or parabolic")->required();
  table->add_option("--max-m", grid.max_m, "Largest rank m in the lietype grid")->capture_default_str();
  table->add_option("--q", grid.qs, "Field orders in the lietype grid");
  table->add_flag("--nonstandard", grid.nonstandard, "Add SO_2m rows for m = 2, 3 (recorded only)");
  add_common(table);

  auto* orc = app.add_subcommand("oracle", "Run a brute-force oracle");
  std::string kind, partition, builtin, matrices;
  std::size_t on = 6;
  bool alt = false;
  orc->add_option("kind", kind, "enum_parabolic, decompose_small_module or tableau_count")->required();
  orc->add_option("--n", on, "Degree for enum_parabolic")->capture_default_str();
  orc->add_flag("--alt", alt, "Use A_n for enum_parabolic");
  orc->add_option("--partition", partition, "Partition for tableau_count, e.g. 5,2");
  orc->add_option("--builtin", builtin, "regular-c2, regular-c2xc2 or trivial2-c2");
  orc->add_option("--matrices", matrices, "JSON file {group_order, gens} over GF(2)");
  add_common(orc);

  auto* dump = app.add_subcommand("dump", "Serialize an object");
  std::string object;
  std::size_t dn = 8;
  std::uint32_t dp = 2;
  bool specht = false;
  dump->add_option("object", object, "perm_irrep, module or lietype")->required();
  dump->add_option("--n", dn, "Degree for perm_irrep")->capture_default_str();
  dump->add_option("--p", dp, "Characteristic")->capture_default_str();
  dump->add_option("--partition", partition, "Partition for module");
  dump->add_flag("--specht", specht, "Dump the Specht module instead of D^lambda");
  dump->add_option("--max-m", grid.max_m, "Largest rank m in the lietype grid")->capture_default_str();
  dump->add_option("--q", grid.qs, "Field orders in the lietype grid");
  dump->add_flag("--nonstandard", grid.nonstandard, "Add SO_2m rows for m = 2, 3 (recorded only)");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.format = harness::parse_format(format);
    if (cfg.jobs == 0) throw std::invalid_argument("--jobs must be positive");

    if (*verify) {
      std::vector<harness::Claim> claims;
      int rc = 0;
      if (!theorem.empty()) {
        if (suite != "appendix") throw std::invalid_argument("--theorem applies to the appendix suite");
        claims = harness::verify_appendix(theorem, cfg);
        rc = harness::summarize(claims).fail ? 1 : 0;
      } else {
        auto r = harness::run_suite(suite, cfg, grid);
        claims = std::move(r.claims);
        rc = r.exit_code;
      }
      const int wr = write_out(out, harness::render(suite, cfg, claims));
      return wr ? wr : rc;
    }

    if (*table) {
      if (table_name == "lietype") {
        const auto rows = harness::lietype_grid(grid);
        std::string text;
        if (cfg.format == harness::Format::md) {
          text = harness::grid_markdown(rows);
        } else if (cfg.format == harness::Format::json) {
          json arr = json::array();
          for (const auto& r : rows)
            arr.push_back({{"family", lietype::family_name(r.family)}, {"m", r.m}, {"q", r.q},
                           {"computed", r.result.computed}, {"closed_form", r.result.closed_form},
                           {"match", r.result.match}, {"root_span", r.result.root_span},
                           {"rp_reference", r.result.rp_reference},
                           {"scope", r.nonstandard ? "outside scope" : "standard"}});
          text = arr.dump(2) + "\n";
        } else {
          text = harness::grid_csv(rows);
        }
        return write_out(out, text);
      }
      if (table_name == "parabolic") {
        auto tasks = harness::dickson_tasks(cfg);
        auto claims = harness::run_tasks(tasks, cfg.jobs);
        std::erase_if(claims, [](const harness::Claim& c) { return c.id.rfind("dickson/parabolic/", 0) != 0; });
        return write_out(out, harness::render("parabolic", cfg, claims));
      }
      throw std::invalid_argument("unknown table: " + table_name);
    }

    if (*orc) {
      json result;
      if (kind == "enum_parabolic") {
        const auto r = harness::oracle::enum_parabolic(on, alt);
        json els = json::array();
        for (const auto& g : r.elements) els.push_back(g.to_cycles());
        result = {{"kind", kind}, {"n", on}, {"group", alt ? "A_n" : "S_n"}, {"order", r.order}, {"rank", r.rank},
                  {"elementary_abelian", r.elementary_abelian}, {"elements", els}};
      } else if (kind == "decompose_small_module") {
        std::size_t order = 0;
        std::vector<la::Mat> gens;
        if (!matrices.empty()) gens = module_from_json(matrices, order);
        else gens = builtin_module(builtin.empty() ? "regular-c2xc2" : builtin, order);
        const auto d = harness::oracle::decompose_small_module(gens, order);
        result = {{"kind", kind}, {"group_order", order}, {"summand_dims", d.summand_dims},
                  {"free_count", d.free_count}, {"submodules", d.submodules}};
      } else if (kind == "tableau_count") {
        const auto l = modrep::Partition::parse(partition.empty() ? "5,2" : partition);
        result = {{"kind", kind}, {"partition", l.str()}, {"count", harness::oracle::tableau_count(l)}};
      } else {
        throw std::invalid_argument("unknown oracle: " + kind);
      }
      return write_out(out, result.dump(2) + "\n");
    }

    if (*dump) {
      if (object == "perm_irrep") return write_out(out, harness::representation_json(dickson::perm_irrep(dn, dp)).dump(2) + "\n");
      if (object == "module") {
        if (partition.empty()) throw std::invalid_argument("--partition is required");
        const auto l = modrep::Partition::parse(partition);
        const auto m = specht ? modrep::specht_module(l, dp) : modrep::irreducible_D(l, dp);
        return write_out(out, harness::module_json(m).dump(2) + "\n");
      }
      if (object == "lietype") {
        const auto rows = harness::lietype_grid(grid);
        return write_out(out, cfg.format == harness::Format::md ? harness::grid_markdown(rows) : harness::grid_csv(rows));
      }
      throw std::invalid_argument("unknown object: " + object);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
