#include "tbc/report.hpp"

#include <cmath>
#include <cstdio>

namespace tbc {

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

std::string mode_str(const std::vector<int>& mode) {
  std::string s;
  for (size_t i = 0; i < mode.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(mode[i]);
  }
  return s;
}

}  // namespace

nlohmann::ordered_json to_json(const CheckEntry& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["anchor"] = e.anchor;
  if (!std::isnan(e.residual)) j["residual"] = e.residual;
  if (!std::isnan(e.tolerance)) j["tolerance"] = e.tolerance;
  if (!e.expected.empty()) j["expected"] = e.expected;
  if (!e.observed.empty()) j["observed"] = e.observed;
  j["pass"] = e.pass;
  return j;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["report"] = r.suite;
  j["model"] = r.model_id;
  j["modes"] = r.N;
  j["representation"] = r.representation;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) j["checks"].push_back(to_json(e));
  j["pass"] = r.pass();
  return j;
}

nlohmann::ordered_json to_json(const CohomologyTable& t) {
  nlohmann::ordered_json j;
  j["report"] = "table";
  j["model"] = t.model_id;
  j["modes"] = t.N;
  j["flavor"] = t.flavor;
  j["kernel_tolerance"] = t.kernel_tol;
  j["graded"] = t.graded;
  j["bigraded"] = t.bigraded;
  j["spectral_gap"] = std::isfinite(t.spectral_gap) ? t.spectral_gap : -1.0;
  j["mode_cutoff"] = t.mode_cutoff;
  j["hodge_sum_ok"] = t.hodge_sum_ok;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.contributions) {
    nlohmann::ordered_json rj;
    rj["mode"] = row.mode;
    rj["r"] = row.r;
    if (row.s >= 0) rj["s"] = row.s;
    rj["dim"] = row.dim;
    rows.push_back(rj);
  }
  j["per_mode"] = rows;
  return j;
}

std::string to_csv(const CheckReport& r) {
  std::string out =
      "suite,model,modes,check,anchor,residual,tolerance,expected,observed,"
      "pass\n";
  for (const auto& e : r.entries) {
    out += r.suite + "," + r.model_id + "," + std::to_string(r.N) + "," +
           e.name + "," + e.anchor + "," + fmt(e.residual) + "," +
           fmt(e.tolerance) + "," + e.expected + "," + e.observed + "," +
           (e.pass ? "1" : "0") + "\n";
  }
  return out;
}

std::string to_csv(const CohomologyTable& t) {
  std::string out = "model,modes,flavor,r,s,dim,gap,cutoff\n";
  auto gap = fmt(std::isfinite(t.spectral_gap) ? t.spectral_gap : -1.0);
  for (int r = 0; r < int(t.graded.size()); ++r)
    out += t.model_id + "," + std::to_string(t.N) + "," + t.flavor + "," +
           std::to_string(r) + ",," + std::to_string(t.graded[r]) + "," + gap +
           "," + std::to_string(t.mode_cutoff) + "\n";
  for (int r = 0; r < int(t.bigraded.size()); ++r)
    for (int s = 0; s < int(t.bigraded[r].size()); ++s)
      out += t.model_id + "," + std::to_string(t.N) + "," + t.flavor + "," +
             std::to_string(r) + "," + std::to_string(s) + "," +
             std::to_string(t.bigraded[r][s]) + "," + gap + "," +
             std::to_string(t.mode_cutoff) + "\n";
  return out;
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "model,N,flavor,r,s,dim,gap,residual_max\n";
  for (const auto& row : rows) {
    out += row.model_id + "," + std::to_string(row.N) + "," + row.flavor +
           "," + std::to_string(row.r) + "," +
           (row.s >= 0 ? std::to_string(row.s) : std::string()) + "," +
           std::to_string(row.dim) + "," + fmt(row.gap) + "," +
           fmt(row.residual_max) + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const std::vector<ConvergenceRow>& rows,
                               int stable_from) {
  nlohmann::ordered_json j;
  j["report"] = "convergence";
  j["stable_from_N"] = stable_from;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json rj;
    rj["model"] = row.model_id;
    rj["N"] = row.N;
    rj["flavor"] = row.flavor;
    rj["r"] = row.r;
    if (row.s >= 0) rj["s"] = row.s;
    rj["dim"] = row.dim;
    rj["gap"] = row.gap;
    rj["residual_max"] = row.residual_max;
    arr.push_back(rj);
  }
  j["rows"] = arr;
  return j;
}

}  // namespace tbc
