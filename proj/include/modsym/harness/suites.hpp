#pragma once

// Claim suites. Each suite is a list of independent tasks; results come back
// in task order whatever the number of worker threads.

#include <functional>
#include <string>
#include <vector>

#include "modsym/harness/report.hpp"

namespace modsym::harness {

using Task = std::function<Claim()>;

// Grid and sweep bounds beyond SuiteConfig::max_n.
struct GridBounds {
  std::size_t max_m = 5;
  std::vector<std::uint64_t> qs{2, 3, 4, 5};
  // Also list SO_2m for m = 2, 3; those rows are recorded, not asserted.
  bool nonstandard = false;
};

std::vector<Task> dickson_tasks(const SuiteConfig& cfg);
std::vector<Task> lietype_tasks(const SuiteConfig& cfg, const GridBounds& grid = {});

// Names accepted by appendix_tasks, in report order.
const std::vector<std::string>& appendix_theorems();
// theorem empty: all of them. Throws std::invalid_argument for unknown names.
std::vector<Task> appendix_tasks(const std::string& theorem, const SuiteConfig& cfg);

// Runs tasks on cfg.jobs threads; a task that throws becomes a failed claim.
std::vector<Claim> run_tasks(const std::vector<Task>& tasks, std::size_t jobs);

std::vector<Claim> verify_appendix(const std::string& theorem, const SuiteConfig& cfg);

struct SuiteResult {
  std::vector<Claim> claims;
  int exit_code = 0;  // 0 all pass/recorded/partial, 1 any fail
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg, const GridBounds& grid = {});

std::vector<GridRow> lietype_grid(const GridBounds& grid);

}  // namespace modsym::harness
