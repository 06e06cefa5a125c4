#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repkit/constructions.hpp"
#include "repkit/serialize.hpp"

namespace repkit {

struct CheckRecord {
  std::string name;
  std::string anchor;  // the claim being checked, in words
  bool pass = false;
  Json data;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  int r = 3;
  std::vector<CheckRecord> checks;

  bool passed() const;
  Json to_json() const;
  std::string dump() const;  // sorted keys, two-space indent, trailing newline
};

// Per-cell seed: FNV-1a of the cell name mixed with the run seed.
std::uint64_t cell_seed(std::uint64_t seed, const std::string& name);

struct SuiteOptions {
  int r = 3;
  std::uint64_t seed = 0;
  std::optional<int> window;  // rank-width radius, default m + 6
};

void verify_hom_projectives(Report& rep, const SuiteOptions& opt);
void verify_euler(Report& rep, const SuiteOptions& opt, int pairs = 100);
void verify_tau_dims(Report& rep, const SuiteOptions& opt, int count = 50);
void verify_inj_equivalence(Report& rep, const SuiteOptions& opt, int count = 50);
void verify_glue(Report& rep, const SuiteOptions& opt, int pairs = 20);
void verify_named_widths(Report& rep, const SuiteOptions& opt);
// Construction, recomputed width, dims and quasi-simplicity for one m. Only
// r = 3 is supported (std::invalid_argument otherwise).
WidthComponent verify_width_component(Report& rep, int m, const SuiteOptions& opt);
// Rank window of radius opt.window (default m + 6) around the representative.
void verify_rank_window(Report& rep, const WidthComponent& wc, const SuiteOptions& opt);
void verify_rank_width_m(Report& rep, int m, const SuiteOptions& opt);
void verify_small_trees(Report& rep, const SuiteOptions& opt);
void verify_stability(Report& rep, const SuiteOptions& opt);

// Suite names: euler, tau-dims, inj-equivalence, glue, rank-width, stability, all.
Report run_verify(const std::string& suite, const SuiteOptions& opt, std::optional<int> m = std::nullopt);

}  // namespace repkit
