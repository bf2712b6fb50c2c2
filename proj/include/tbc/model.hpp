#pragma once

#include <string>
#include <vector>

#include "tbc/fourier.hpp"

namespace tbc {

/// One suspension factor of a model flow.  The transverse metric on the
/// (s, t)-cylinder is e^{2h(t)} ds^2 + dt^2 with h'(t) = c + p(t); c is the
/// mean of h' and p a zero-mean real periodic part.  The mean curvature of
/// the flow is h'(t) dt.
struct SuspensionFactor {
  double c = 0.0;
  FourierScalar p;  // real, zero mean

  FourierScalar h_prime() const { return FourierScalar::constant(c) + p; }
};

struct InvalidModel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A model foliation: a single suspension flow or a finite product of them.
/// Products are kept flattened; the complex codimension n equals the number
/// of factors and the real codimension is q = 2n.
class ModelSpec {
 public:
  static ModelSpec carriere(int trace_a);
  static ModelSpec taut();
  static ModelSpec suspension(double c, const FourierScalar& p);
  static ModelSpec product(const ModelSpec& a, const ModelSpec& b);

  int n() const { return static_cast<int>(factors_.size()); }
  int codim() const { return 2 * n(); }
  const std::vector<SuspensionFactor>& factors() const { return factors_; }
  const std::string& id() const { return id_; }

  /// True iff every factor has a constant h' (no mode coupling anywhere).
  bool mode_diagonal() const;
  /// Max bandwidth of the periodic parts over all factors.
  int bandwidth() const;

 private:
  std::vector<SuspensionFactor> factors_;
  std::string id_;
};

/// Derived coframe data shared by every operator construction.
/// Per factor: h', h'', the Gauss curvature K = -(h'' + h'^2) of the
/// transverse metric, and h'^2.  Connection coefficients in the orthonormal
/// frame {S, T} are fixed: grad_S S = -h' T, grad_S T = h' S,
/// grad_T S = grad_T T = 0.
struct FrameGeometry {
  std::vector<FourierScalar> h_prime;
  std::vector<FourierScalar> h_second;
  std::vector<FourierScalar> gauss_curvature;
  std::vector<FourierScalar> h_prime_sq;

  /// |kappa_B|^2 = sum_j h_j'^2 as a single series.  Only representable as
  /// one scalar when there is a single factor or every factor is constant.
  FourierScalar kappa_norm_sq() const;
};

FrameGeometry geometry(const ModelSpec& m);

/// Tautness criterion: the mean of h' vanishes in every factor, i.e. the
/// basic class of the mean curvature form is zero.
bool is_taut(const ModelSpec& m);

}  // namespace tbc
