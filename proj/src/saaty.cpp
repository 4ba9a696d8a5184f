#include "nsset/saaty.hpp"

#include <cmath>
#include <string>

#include "nsset/errors.hpp"
#include "nsset/kernels.hpp"

namespace nsset {

SaatyMatrix::SaatyMatrix(ParameterSet parameters, std::vector<double> entries)
    : parameters_(std::move(parameters)), entries_(std::move(entries)) {
  const std::size_t n = parameters_.size();
  if (entries_.size() != n * n) {
    throw ValidationError("saaty",
                          "expected " + std::to_string(n * n) + " entries, got " +
                              std::to_string(entries_.size()));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double v = entries_[r * n + c];
      if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError("saaty[" + std::to_string(r + 1) + "][" +
                                  std::to_string(c + 1) + "]",
                              "entries must be strictly positive");
      }
    }
    if (std::fabs(entries_[r * n + r] - 1.0) > 1e-12) {
      throw ValidationError("saaty[" + std::to_string(r + 1) + "][" +
                                std::to_string(r + 1) + "]",
                            "diagonal must be 1");
    }
  }
}

std::vector<SaatyMatrix::ReciprocityViolation> SaatyMatrix::reciprocity_violations(
    double eps) const {
  std::vector<ReciprocityViolation> out;
  const std::size_t n = size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const double product = at(r, c) * at(c, r);
      if (std::fabs(product - 1.0) > eps) {
        out.push_back({r, c, product});
      }
    }
  }
  return out;
}

std::vector<std::size_t> SaatyMatrix::off_scale_entries(double eps) const {
  auto on_scale = [eps](double v) {
    for (int k = 1; k <= 9; ++k) {
      if (std::fabs(v - k) <= eps) return true;
      if (std::fabs(v - 1.0 / k) <= eps) return true;
    }
    return false;
  };
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!on_scale(entries_[k])) out.push_back(k);
  }
  return out;
}

std::vector<double> row_scores(const SaatyMatrix& d) {
  const std::size_t n = d.size();
  std::vector<double> scores(n);
  kernels::active_ops().row_sums(d.entries().data(), n, n, scores.data());
  return scores;
}

NormalizedMatrix normalize(const SaatyMatrix& d) {
  const std::size_t n = d.size();
  const std::vector<double> scores = row_scores(d);
  std::vector<double> entries(n * n);
  kernels::active_ops().row_divide(d.entries().data(), n, n, scores.data(),
                                   entries.data());
  return NormalizedMatrix{d.parameters(), std::move(entries)};
}

ParameterWeights parameter_weights(const NormalizedMatrix& normalized,
                                   std::vector<double> scores) {
  const std::size_t n = normalized.parameters.size();
  std::vector<double> weights(n);
  kernels::active_ops().col_means(normalized.entries.data(), n, n, weights.data());
  return ParameterWeights{normalized.parameters, std::move(scores), std::move(weights)};
}

ParameterWeights parameter_weights(const SaatyMatrix& d) {
  return parameter_weights(normalize(d), row_scores(d));
}

}  // namespace nsset
