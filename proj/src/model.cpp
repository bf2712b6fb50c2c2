#include "tbc/model.hpp"

#include <cmath>
#include <cstdio>

namespace tbc {

namespace {

constexpr double kMeanTol = 1e-14;

std::string format_factor(const SuspensionFactor& f) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "suspension(c=%.12g", f.c);
  std::string s(buf);
  if (!f.p.is_zero()) {
    s += ",p=[";
    bool first = true;
    for (int k = 1; k <= f.p.order(); ++k) {
      cd ck = f.p.coeff(k);
      if (ck == cd(0, 0)) continue;
      if (!first) s += ";";
      std::snprintf(buf, sizeof(buf), "%d:%.12g%+.12gi", k, ck.real(),
                    ck.imag());
      s += buf;
      first = false;
    }
    s += "]";
  }
  return s + ")";
}

}  // namespace

ModelSpec ModelSpec::carriere(int trace_a) {
  if (trace_a <= 2)
    throw InvalidModel("carriere: trace must be at least 3 for hyperbolicity");
  double lambda = (trace_a + std::sqrt(double(trace_a) * trace_a - 4.0)) / 2.0;
  ModelSpec m;
  m.factors_.push_back({std::log(lambda), FourierScalar()});
  m.id_ = "carriere(trace=" + std::to_string(trace_a) + ")";
  return m;
}

ModelSpec ModelSpec::taut() {
  ModelSpec m;
  m.factors_.push_back({0.0, FourierScalar()});
  m.id_ = "taut";
  return m;
}

ModelSpec ModelSpec::suspension(double c, const FourierScalar& p) {
  if (!p.is_real())
    throw InvalidModel("suspension: periodic part must be real");
  if (std::abs(p.mean()) > kMeanTol)
    throw InvalidModel("suspension: periodic part must have zero mean");
  ModelSpec m;
  m.factors_.push_back({c, p});
  m.id_ = format_factor(m.factors_[0]);
  return m;
}

ModelSpec ModelSpec::product(const ModelSpec& a, const ModelSpec& b) {
  ModelSpec m;
  m.factors_ = a.factors_;
  m.factors_.insert(m.factors_.end(), b.factors_.begin(), b.factors_.end());
  m.id_ = "product(" + a.id_ + "," + b.id_ + ")";
  return m;
}

bool ModelSpec::mode_diagonal() const {
  for (const auto& f : factors_)
    if (!f.p.is_zero()) return false;
  return true;
}

int ModelSpec::bandwidth() const {
  int bw = 0;
  for (const auto& f : factors_) bw = std::max(bw, f.p.bandwidth());
  return bw;
}

FourierScalar FrameGeometry::kappa_norm_sq() const {
  if (h_prime_sq.size() == 1) return h_prime_sq[0];
  FourierScalar total;
  for (const auto& sq : h_prime_sq) {
    if (!sq.is_constant())
      throw std::logic_error(
          "kappa_norm_sq: multi-factor norm mixes variables; use the "
          "per-factor list");
    total = total + sq;
  }
  return total;
}

FrameGeometry geometry(const ModelSpec& m) {
  FrameGeometry g;
  for (const auto& f : m.factors()) {
    FourierScalar hp = f.h_prime();
    FourierScalar hpp = differentiate(hp);
    int sq_order = 2 * hp.bandwidth();
    FourierScalar hp2 = multiply(hp, hp, sq_order);
    g.h_prime.push_back(hp);
    g.h_second.push_back(hpp);
    g.gauss_curvature.push_back(-(hpp.truncated(sq_order) + hp2));
    g.h_prime_sq.push_back(hp2);
  }
  return g;
}

bool is_taut(const ModelSpec& m) {
  for (const auto& f : m.factors())
    if (f.c != 0.0) return false;
  return true;
}

}  // namespace tbc
