#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsset/domain.hpp"
#include "nsset/triple.hpp"

namespace nsset::maji {

/// A parameter of a Maji soft set; `negated` marks the NOT-set flag toggled
/// by not_set / complement.
struct Parameter {
  std::string id;
  bool negated = false;

  bool operator==(const Parameter&) const = default;
};

/// "¬id" when negated, plain id otherwise.
std::string display_name(const Parameter& p);

/// The NOT set: same parameters with every negation flag flipped. Involutive.
std::vector<Parameter> not_set(std::vector<Parameter> parameters);

/// Maji's neutrosophic soft set (F,A): a grid over an ordered parameter
/// subset A of some parent set, total on A x X. Unlike the redefined ns-set,
/// A may be empty (the result of intersecting disjoint-parameter sets).
class MajiNsSet {
 public:
  MajiNsSet(Universe universe, std::vector<Parameter> parameters,
            std::vector<Triple> grid);

  /// All triples (0,0,0) over the given parameters.
  static MajiNsSet null_set(Universe universe, std::vector<Parameter> parameters);

  const Universe& universe() const { return universe_; }
  const std::vector<Parameter>& parameters() const { return parameters_; }
  std::size_t parameter_count() const { return parameters_.size(); }
  std::size_t element_count() const { return universe_.size(); }
  std::optional<std::size_t> index_of(const Parameter& p) const;

  Triple at(std::size_t p, std::size_t x) const { return grid_[p * universe_.size() + x]; }

 private:
  Universe universe_;
  std::vector<Parameter> parameters_;
  std::vector<Triple> grid_;
};

/// Def 2.6: A ⊆ B and T_h <= T_g, I_h <= I_g, F_h >= F_g on A x X (Maji's
/// indeterminacy direction, opposite to the redefined order).
bool is_subset(const MajiNsSet& h, const MajiNsSet& g, double eps = kEqualityEpsilon);

bool equal(const MajiNsSet& h, const MajiNsSet& g, double eps = kEqualityEpsilon);

/// Def 2.8: parameters negated, per entry (T,I,F) -> (F,I,T). The
/// indeterminacy is untouched, unlike the redefined complement.
MajiNsSet complement_of(const MajiNsSet& h);

/// Def 2.10: on A-B copy h, on B-A copy g, on A∩B
/// (max T, (I_h+I_g)/2, min F). Result ordered: h's parameters then g's
/// remaining ones.
MajiNsSet union_of(const MajiNsSet& h, const MajiNsSet& g);

/// Def 2.11: on A∩B (min T, (I_h+I_g)/2, max F). Disjoint parameter sets
/// yield the empty-parameter set.
MajiNsSet intersection_of(const MajiNsSet& h, const MajiNsSet& g);

/// Def 2.12 / 2.13 over A x B pairs.
MajiNsSet and_product(const MajiNsSet& h, const MajiNsSet& g);
MajiNsSet or_product(const MajiNsSet& h, const MajiNsSet& g);

/// Example 2.2's (F,A): the houses fixture used by the counterexamples.
MajiNsSet example_houses();

/// Status of one of Maji's propositions after fixture + random search.
struct PropositionFinding {
  std::string id;         // e.g. "2.1(5)"
  std::string statement;  // short algebraic form
  bool holds = true;
  std::string witness;    // first violation found; empty when holds
};

struct PropositionReport {
  std::vector<PropositionFinding> findings;
  std::size_t random_trials = 0;
  std::uint64_t seed = 0;

  const PropositionFinding& find(std::string_view id) const;
};

struct VerifyOptions {
  /// Random instances per proposition; universe <= 5, parameters <= 4,
  /// component values on a 0.05 grid for reproducible, readable witnesses.
  std::size_t trials = 1000;
  std::uint64_t seed = 0x5eedu;
};

/// Checks Prop 2.1(1)-(7) and Prop 2.2(1)-(4) against the Example 2.2
/// fixture and random instances. 2.1(5) and 2.1(6) fail with the
/// counterexample witnesses from the paper's notes.
PropositionReport verify_propositions(const VerifyOptions& options = {});

}  // namespace nsset::maji
