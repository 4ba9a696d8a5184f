#include "nsset/group.hpp"

#include <string>

#include "fixture_check.hpp"
#include "nsset/errors.hpp"
#include "nsset/kernels.hpp"

namespace nsset {
namespace {

void require_valid_panel(std::span<const DecisionMakerInput> panel) {
  if (panel.empty()) throw EmptyPanelError("panel");
  const auto& first = panel.front();
  for (const auto& maker : panel) {
    if (!(maker.ns_set.universe() == first.ns_set.universe())) {
      throw DomainMismatchError("maker '" + maker.id +
                                "' uses a different universe than '" + first.id + "'");
    }
    if (!(maker.ns_set.parameters() == first.ns_set.parameters())) {
      throw DomainMismatchError("maker '" + maker.id +
                                "' uses a different parameter set than '" + first.id +
                                "'");
    }
    if (!(maker.saaty.parameters() == maker.ns_set.parameters())) {
      throw DomainMismatchError("maker '" + maker.id +
                                "' has mismatched ns-set and matrix parameter sets");
    }
  }
}

}  // namespace

MeanMatrix mean_matrix(std::span<const DecisionMakerInput> panel) {
  require_valid_panel(panel);
  const auto& ops = kernels::active_ops();
  const std::size_t n = panel.front().saaty.size();
  std::vector<double> acc(n * n, 0.0);
  for (const auto& maker : panel) {
    ops.vaxpy(1.0, maker.saaty.entries().data(), acc.data(), n * n);
  }
  std::vector<double> entries(n * n);
  ops.vdivs(acc.data(), static_cast<double>(panel.size()), entries.data(), n * n);
  return MeanMatrix{panel.front().saaty.parameters(), std::move(entries)};
}

NsSet aggregate_ns_sets(std::span<const DecisionMakerInput> panel) {
  require_valid_panel(panel);
  NsSet aggregate = panel.front().ns_set;
  for (std::size_t k = 1; k < panel.size(); ++k) {
    aggregate = ns_intersection(aggregate, panel[k].ns_set);
  }
  return aggregate;
}

GroupDecisionReport group_decide(std::span<const DecisionMakerInput> panel) {
  MeanMatrix mean = mean_matrix(panel);
  NsSet aggregate = aggregate_ns_sets(panel);
  DecisionReport decision = decide(aggregate, mean.as_saaty());
  return GroupDecisionReport{{panel.begin(), panel.end()}, std::move(mean),
                             std::move(aggregate), std::move(decision)};
}

void apply_fixture(GroupDecisionReport& report, const ReferenceFixture& fixture) {
  apply_fixture(report.decision, fixture);
  detail::FixtureChecker check(fixture, *report.decision.fixture);

  const std::size_t n = report.mean.parameters.size();
  if (fixture.mean) {
    check.matrix("mean", *fixture.mean, n, n, report.mean.entries);
  }
  for (const auto& [parameter, by_element] : fixture.aggregate) {
    for (const auto& [element, printed] : by_element) {
      const Triple computed = report.aggregate.at(parameter, element);
      const std::string base = "aggregate[" + parameter + "][" + element + "]";
      check.value(base + ".t", printed.t, computed.t);
      check.value(base + ".i", printed.i, computed.i);
      check.value(base + ".f", printed.f, computed.f);
    }
  }
}

}  // namespace nsset
