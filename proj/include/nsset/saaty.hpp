#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsset/domain.hpp"

namespace nsset {

/// Pairwise relative-importance matrix over the parameter set. Entries are
/// strictly positive with a unit diagonal. Reciprocity (d_ij * d_ji = 1) is
/// expected of hand-filled matrices but not enforced here: arithmetic-mean
/// matrices of a panel are generally not reciprocal. Callers that want
/// strictness use reciprocity_violations().
class SaatyMatrix {
 public:
  /// Row-major n x n entries.
  SaatyMatrix(ParameterSet parameters, std::vector<double> entries);

  const ParameterSet& parameters() const { return parameters_; }
  std::size_t size() const { return parameters_.size(); }
  double at(std::size_t r, std::size_t c) const { return entries_[r * size() + c]; }
  const std::vector<double>& entries() const { return entries_; }

  struct ReciprocityViolation {
    std::size_t row, col;
    double product;  // d_ij * d_ji
  };
  std::vector<ReciprocityViolation> reciprocity_violations(double eps = 1e-9) const;

  /// Entries off the Saaty scale {1..9} ∪ {1/2..1/9}; advisory only.
  std::vector<std::size_t> off_scale_entries(double eps = 1e-9) const;

 private:
  ParameterSet parameters_;
  std::vector<double> entries_;
};

/// Row-stochastic matrix d̂ with d̂_ij = d_ij / c_i.
struct NormalizedMatrix {
  ParameterSet parameters;
  std::vector<double> entries;

  double at(std::size_t r, std::size_t c) const {
    return entries[r * parameters.size() + c];
  }
};

/// Row scores c_i and column-mean weights w(e_j); the weights sum to 1.
struct ParameterWeights {
  ParameterSet parameters;
  std::vector<double> scores;
  std::vector<double> weights;
};

/// c_i = sum_j d_ij.
std::vector<double> row_scores(const SaatyMatrix& d);

NormalizedMatrix normalize(const SaatyMatrix& d);

/// w(e_j) = (1/|E|) sum_i d̂_ij.
ParameterWeights parameter_weights(const NormalizedMatrix& normalized,
                                   std::vector<double> scores);
ParameterWeights parameter_weights(const SaatyMatrix& d);

}  // namespace nsset
