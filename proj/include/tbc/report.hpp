#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace tbc {

struct CheckEntry {
  std::string name;
  std::string anchor;
  double residual = std::numeric_limits<double>::quiet_NaN();
  double tolerance = std::numeric_limits<double>::quiet_NaN();
  std::string expected;
  std::string observed;
  bool pass = true;
};

struct CheckReport {
  std::string suite;
  std::string model_id;
  int N = 0;
  std::string representation;
  std::vector<CheckEntry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  CheckEntry& add(const std::string& name, const std::string& anchor) {
    entries.push_back(CheckEntry{name, anchor});
    return entries.back();
  }
};

/// Per-mode kernel contribution; s = -1 marks a graded (total-degree) row.
struct TableRow {
  std::vector<int> mode;
  int r = 0;
  int s = -1;
  int dim = 0;
};

struct CohomologyTable {
  std::string model_id;
  std::string flavor;  // "B" | "T" | "kappa"
  int N = 0, q = 0, n = 0;
  std::vector<int> graded;                 // size q+1
  std::vector<std::vector<int>> bigraded;  // (n+1) x (n+1)
  double kernel_tol = 0;
  double spectral_gap = std::numeric_limits<double>::infinity();
  int mode_cutoff = -1;  // -1: no a-priori bound recorded
  bool hodge_sum_ok = true;
  std::vector<TableRow> contributions;

  int graded_dim(int r) const { return graded.at(r); }
  int bigraded_dim(int r, int s) const { return bigraded.at(r).at(s); }
};

nlohmann::ordered_json to_json(const CheckEntry& e);
nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const CohomologyTable& t);
std::string to_csv(const CheckReport& r);
std::string to_csv(const CohomologyTable& t);

/// One row of a convergence sweep.
struct ConvergenceRow {
  std::string model_id;
  int N = 0;
  std::string flavor;
  int r = 0;
  int s = -1;
  int dim = 0;
  double gap = 0;
  double residual_max = 0;
};
std::string to_csv(const std::vector<ConvergenceRow>& rows);
nlohmann::ordered_json to_json(const std::vector<ConvergenceRow>& rows,
                               int stable_from);

}  // namespace tbc
