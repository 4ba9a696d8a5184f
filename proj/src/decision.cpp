#include "nsset/decision.hpp"

#include <cmath>
#include <string>

#include "fixture_check.hpp"
#include "nsset/errors.hpp"
#include "nsset/kernels.hpp"

namespace nsset {
namespace {

// Invariants of the construction; a violation would be a kernel defect, not
// bad input.
void check_compare_invariants(const CompareMatrix& cm) {
  const std::size_t m = cm.m;
  for (std::size_t r = 0; r < m; ++r) {
    if (cm.at(r, r) != 0.5) {
      throw InternalError("compare matrix diagonal entry is not exactly 0.5");
    }
    for (std::size_t c = 0; c < m; ++c) {
      const double v = cm.at(r, c);
      if (v < -1.0 - 1e-12 || v > 2.0 + 1e-12) {
        throw InternalError("compare matrix entry outside [-1, 2]");
      }
      if (std::fabs(cm.at(r, c) + cm.at(c, r) - 1.0) > 1e-12) {
        throw InternalError("compare matrix violates x_ij + x_ji = 1");
      }
    }
  }
}

}  // namespace

CompareMatrix compare_matrix(const NsSet& f, std::string_view parameter) {
  const auto p = f.parameters().index_of(parameter);
  if (!p) {
    throw UnknownParameterError("unknown parameter '" + std::string(parameter) + "'");
  }
  const std::size_t m = f.element_count();
  CompareMatrix cm{std::string(parameter), m, std::vector<double>(m * m)};
  kernels::active_ops().pairwise_compare(f.truth_row(*p).data(),
                                         f.indeterminacy_row(*p).data(),
                                         f.falsity_row(*p).data(), m,
                                         cm.entries.data());
  check_compare_invariants(cm);
  return cm;
}

std::vector<double> element_weights(const CompareMatrix& cm) {
  std::vector<double> weights(cm.m);
  kernels::active_ops().col_means(cm.entries.data(), cm.m, cm.m, weights.data());
  return weights;
}

DecisionSet decision_set(
    const ParameterWeights& weights,
    const std::vector<std::vector<double>>& element_weights_by_parameter,
    const Universe& universe) {
  const std::size_t n = weights.parameters.size();
  const std::size_t m = universe.size();
  if (element_weights_by_parameter.size() != n) {
    throw DomainMismatchError("element-weight maps do not cover the parameter set");
  }
  for (const auto& w : element_weights_by_parameter) {
    if (w.size() != m) {
      throw DomainMismatchError("element-weight map does not cover the universe");
    }
  }

  const auto& ops = kernels::active_ops();
  std::vector<double> acc(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    ops.vaxpy(weights.weights[k], element_weights_by_parameter[k].data(), acc.data(), m);
  }
  std::vector<double> scores(m);
  ops.vdivs(acc.data(), static_cast<double>(n), scores.data(), m);

  std::size_t best = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (scores[j] > scores[best]) best = j;  // ties keep the earlier element
  }
  return DecisionSet{universe.elements(), std::move(scores), best, universe.at(best)};
}

DecisionReport decide(const NsSet& f, const SaatyMatrix& d) {
  if (!(f.parameters() == d.parameters())) {
    throw DomainMismatchError(
        "ns-set and relative parameter matrix have different parameter sets");
  }

  std::vector<double> scores = row_scores(d);
  NormalizedMatrix normalized = normalize(d);
  ParameterWeights weights = parameter_weights(normalized, scores);
  DecisionReport report{f,  d, std::move(scores), std::move(normalized),
                        std::move(weights), {}, {}, DecisionSet{}, std::nullopt};

  report.compare.reserve(f.parameter_count());
  report.element_weights.reserve(f.parameter_count());
  for (const auto& parameter : f.parameters().parameters()) {
    report.compare.push_back(compare_matrix(f, parameter));
    report.element_weights.push_back(element_weights(report.compare.back()));
  }
  report.decision = decision_set(report.weights, report.element_weights, f.universe());
  return report;
}

// --- fixture comparison -----------------------------------------------------

const Erratum* ReferenceFixture::erratum_at(const std::string& location) const {
  for (const auto& erratum : errata) {
    if (erratum.location == location) return &erratum;
  }
  return nullptr;
}

bool FixtureComparison::has_deviation_at(const std::string& location) const {
  for (const auto& finding : findings) {
    if (finding.location == location && !finding.ok) return true;
  }
  return false;
}

void apply_fixture(DecisionReport& report, const ReferenceFixture& fixture) {
  FixtureComparison comparison{fixture.origin, fixture.tolerance, {}, std::nullopt, true};
  detail::FixtureChecker check(fixture, comparison);
  const std::size_t n = report.saaty.size();
  const std::size_t m = report.ns_set.element_count();

  if (fixture.scores) check.vector("scores", *fixture.scores, report.scores);
  if (fixture.normalized) {
    check.matrix("normalized", *fixture.normalized, n, n, report.normalized.entries);
  }
  if (fixture.weights) check.vector("weights", *fixture.weights, report.weights.weights);
  for (const auto& [parameter, printed] : fixture.compare) {
    const auto p = report.ns_set.parameters().index_of(parameter);
    if (!p) {
      throw ValidationError(fixture.origin + "#compare[" + parameter + "]",
                            "fixture references an unknown parameter");
    }
    check.matrix("compare[" + parameter + "]", printed, m, m,
                 report.compare[*p].entries);
  }
  for (const auto& [parameter, printed] : fixture.element_weights) {
    const auto p = report.ns_set.parameters().index_of(parameter);
    if (!p) {
      throw ValidationError(fixture.origin + "#element_weights[" + parameter + "]",
                            "fixture references an unknown parameter");
    }
    check.vector("element_weights[" + parameter + "]", printed,
                 report.element_weights[*p]);
  }
  if (fixture.decision) {
    check.vector("decision", *fixture.decision, report.decision.scores);
  }
  if (fixture.optimum) {
    comparison.fixture_optimum = *fixture.optimum;
    comparison.optimum_agrees = (*fixture.optimum == report.decision.optimum);
  }
  report.fixture = std::move(comparison);
}

}  // namespace nsset
