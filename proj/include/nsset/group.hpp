#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsset/decision.hpp"
#include "nsset/ns_set.hpp"
#include "nsset/saaty.hpp"

namespace nsset {

/// One decision maker's contribution. All makers of a panel share one
/// universe and one parameter set.
struct DecisionMakerInput {
  std::string id;
  NsSet ns_set;
  SaatyMatrix saaty;
};

/// Entrywise arithmetic mean of the panel's relative parameter matrices.
/// The diagonal stays 1; reciprocity is not guaranteed (a mean of reciprocal
/// matrices need not be reciprocal) and is not asserted.
struct MeanMatrix {
  ParameterSet parameters;
  std::vector<double> entries;

  double at(std::size_t r, std::size_t c) const {
    return entries[r * parameters.size() + c];
  }
  SaatyMatrix as_saaty() const { return SaatyMatrix(parameters, entries); }
};

MeanMatrix mean_matrix(std::span<const DecisionMakerInput> panel);

/// Componentwise (min T, max I, max F) across all makers: the ns-set
/// intersection folded over the panel.
NsSet aggregate_ns_sets(std::span<const DecisionMakerInput> panel);

struct GroupDecisionReport {
  std::vector<DecisionMakerInput> makers;  // panel echo, canonical order
  MeanMatrix mean;
  NsSet aggregate;
  /// Algorithm 1 machinery applied to (aggregate, mean); its fixture
  /// comparison covers the shared sections plus mean and aggregate.
  DecisionReport decision;
};

/// Steps 1-9 of Algorithm 2.
GroupDecisionReport group_decide(std::span<const DecisionMakerInput> panel);

void apply_fixture(GroupDecisionReport& report, const ReferenceFixture& fixture);

}  // namespace nsset
