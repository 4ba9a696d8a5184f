#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsset/fixture.hpp"
#include "nsset/ns_set.hpp"
#include "nsset/saaty.hpp"

namespace nsset {

/// Pairwise element-dominance matrix for one parameter. Entries satisfy
/// x_ii = 0.5 exactly and x_ij + x_ji = 1 (within 1e-12); each entry lies in
/// [-1, 2]. No clamping.
struct CompareMatrix {
  std::string parameter;
  std::size_t m = 0;
  std::vector<double> entries;  // row-major m x m

  double at(std::size_t r, std::size_t c) const { return entries[r * m + c]; }
};

/// x_ij = (Δ_T + Δ_I + Δ_F + 1)/2 with Δ_T = T(x_i)-T(x_j),
/// Δ_I = I(x_j)-I(x_i), Δ_F = F(x_j)-F(x_i).
CompareMatrix compare_matrix(const NsSet& f, std::string_view parameter);

/// W(x_j) = (1/|X|) sum_i x_ij  (column means).
std::vector<double> element_weights(const CompareMatrix& cm);

/// Fuzzy decision set over the universe: final score per alternative and the
/// argmax (ties broken toward the first element in universe order).
struct DecisionSet {
  std::vector<std::string> elements;
  std::vector<double> scores;
  std::size_t optimum_index = 0;
  std::string optimum;
};

/// F(x_j) = (1/|E|) sum_k w(e_k) * W_{f(e_k)}(x_j). The 1/|E| prefactor is
/// kept as printed; it rescales every score identically.
DecisionSet decision_set(const ParameterWeights& weights,
                         const std::vector<std::vector<double>>& element_weights_by_parameter,
                         const Universe& universe);

/// Everything Algorithm 1 produces, inputs echoed for reporting.
struct DecisionReport {
  NsSet ns_set;
  SaatyMatrix saaty;
  std::vector<double> scores;  // c_i
  NormalizedMatrix normalized;
  ParameterWeights weights;
  std::vector<CompareMatrix> compare;                       // parameter order
  std::vector<std::vector<double>> element_weights;         // parameter order
  DecisionSet decision;
  std::optional<FixtureComparison> fixture;
};

/// Steps 1-7 of Algorithm 1. f and d must share the parameter set.
DecisionReport decide(const NsSet& f, const SaatyMatrix& d);

/// Compares a report's intermediates against printed reference values and
/// stores the findings on the report.
void apply_fixture(DecisionReport& report, const ReferenceFixture& fixture);

}  // namespace nsset
