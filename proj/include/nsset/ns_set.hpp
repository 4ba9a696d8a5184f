#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nsset/domain.hpp"
#include "nsset/triple.hpp"

namespace nsset {

/// Neutrosophic soft set: a total map (parameter, element) -> Triple over a
/// finite universe and parameter set. Stored dense; the entry (0,1,1) is the
/// canonical "absent" value and is omitted only at serialization.
///
/// Values are immutable after construction and every operation is a pure
/// function, so instances are safe to share across threads.
class NsSet {
 public:
  /// Grid is row-major by parameter: grid[p * |X| + x].
  NsSet(Universe universe, ParameterSet parameters, std::vector<Triple> grid);

  /// All entries (0,1,1); bottom of the subset order.
  static NsSet null_set(Universe universe, ParameterSet parameters);
  /// All entries (1,0,0); top of the subset order.
  static NsSet universal_set(Universe universe, ParameterSet parameters);
  /// Entry at (p, x) produced by fill(p, x).
  static NsSet build(Universe universe, ParameterSet parameters,
                     const std::function<Triple(std::size_t, std::size_t)>& fill);

  const Universe& universe() const { return universe_; }
  const ParameterSet& parameters() const { return parameters_; }
  std::size_t parameter_count() const { return parameters_.size(); }
  std::size_t element_count() const { return universe_.size(); }

  Triple at(std::size_t p, std::size_t x) const;
  Triple at(std::string_view parameter, std::string_view element) const;

  // Contiguous degree arrays, one value per (parameter, element) pair in
  // row-major parameter order. These feed the kernels.
  std::span<const double> truth() const { return t_; }
  std::span<const double> indeterminacy() const { return i_; }
  std::span<const double> falsity() const { return f_; }
  std::span<const double> truth_row(std::size_t p) const;
  std::span<const double> indeterminacy_row(std::size_t p) const;
  std::span<const double> falsity_row(std::size_t p) const;

 private:
  NsSet(Universe universe, ParameterSet parameters, std::vector<double> t,
        std::vector<double> i, std::vector<double> f);

  Universe universe_;
  ParameterSet parameters_;
  std::vector<double> t_, i_, f_;

  friend NsSet ns_union(const NsSet&, const NsSet&);
  friend NsSet ns_intersection(const NsSet&, const NsSet&);
  friend NsSet ns_complement(const NsSet&);
  friend NsSet ns_difference(const NsSet&, const NsSet&);
  friend NsSet or_product(const NsSet&, const NsSet&);
  friend NsSet and_product(const NsSet&, const NsSet&);
};

/// Def 3.2 order: T_f <= T_g, I_f >= I_g, F_f >= F_g at every entry (note the
/// indeterminacy direction). Comparisons carry the eps slack so that mutual
/// subsethood coincides with per-entry equality within eps.
bool is_subset(const NsSet& f, const NsSet& g, double eps = kEqualityEpsilon);

/// Mutual subsethood; per-entry triple equality within eps.
bool ns_equal(const NsSet& f, const NsSet& g, double eps = kEqualityEpsilon);

/// Per entry (T_f v T_g, I_f ^ I_g, F_f ^ F_g).
NsSet ns_union(const NsSet& f, const NsSet& g);

/// Per entry (T_f ^ T_g, I_f v I_g, F_f v F_g).
NsSet ns_intersection(const NsSet& f, const NsSet& g);

/// Per entry (T,I,F) -> (F, 1-I, T). Parameters are not renamed.
NsSet ns_complement(const NsSet& f);

/// Per entry, clausewise: T = max(T_f-T_g, 0), I = max(I_g-I_f, 0),
/// F = max(F_g-F_f, 0).
NsSet ns_difference(const NsSet& f, const NsSet& g);

/// Result over ordered pairs (e,e'); entry = (T_f(e) v T_g(e'), I ^, F ^).
NsSet or_product(const NsSet& f, const NsSet& g);

/// Dual of or_product: (T ^, I v, F v) over ordered pairs.
NsSet and_product(const NsSet& f, const NsSet& g);

}  // namespace nsset
