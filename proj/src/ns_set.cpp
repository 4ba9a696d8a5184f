#include "nsset/ns_set.hpp"

#include <cmath>
#include <string>

#include "nsset/errors.hpp"
#include "nsset/kernels.hpp"

namespace nsset {
namespace {

void require_same_domain(const NsSet& f, const NsSet& g) {
  if (!(f.universe() == g.universe())) {
    throw DomainMismatchError("operands have different universes");
  }
  if (!(f.parameters() == g.parameters())) {
    throw DomainMismatchError("operands have different parameter sets");
  }
}

void require_same_universe(const NsSet& f, const NsSet& g) {
  if (!(f.universe() == g.universe())) {
    throw DomainMismatchError("operands have different universes");
  }
}

ParameterSet pair_parameters(const ParameterSet& a, const ParameterSet& b) {
  std::vector<std::string> ids;
  ids.reserve(a.size() * b.size());
  for (const auto& left : a.parameters()) {
    for (const auto& right : b.parameters()) {
      ids.push_back(pair_id(left, right));
    }
  }
  return ParameterSet(std::move(ids));
}

}  // namespace

NsSet::NsSet(Universe universe, ParameterSet parameters, std::vector<Triple> grid)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  const std::size_t cells = parameters_.size() * universe_.size();
  if (grid.size() != cells) {
    throw ValidationError("ns-set grid",
                          "expected " + std::to_string(cells) + " entries, got " +
                              std::to_string(grid.size()));
  }
  t_.resize(cells);
  i_.resize(cells);
  f_.resize(cells);
  for (std::size_t k = 0; k < cells; ++k) {
    t_[k] = grid[k].t;
    i_[k] = grid[k].i;
    f_[k] = grid[k].f;
  }
}

NsSet::NsSet(Universe universe, ParameterSet parameters, std::vector<double> t,
             std::vector<double> i, std::vector<double> f)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      t_(std::move(t)),
      i_(std::move(i)),
      f_(std::move(f)) {}

NsSet NsSet::null_set(Universe universe, ParameterSet parameters) {
  const std::size_t cells = parameters.size() * universe.size();
  return NsSet(std::move(universe), std::move(parameters),
               std::vector<double>(cells, 0.0), std::vector<double>(cells, 1.0),
               std::vector<double>(cells, 1.0));
}

NsSet NsSet::universal_set(Universe universe, ParameterSet parameters) {
  const std::size_t cells = parameters.size() * universe.size();
  return NsSet(std::move(universe), std::move(parameters),
               std::vector<double>(cells, 1.0), std::vector<double>(cells, 0.0),
               std::vector<double>(cells, 0.0));
}

NsSet NsSet::build(Universe universe, ParameterSet parameters,
                   const std::function<Triple(std::size_t, std::size_t)>& fill) {
  std::vector<Triple> grid;
  grid.reserve(parameters.size() * universe.size());
  for (std::size_t p = 0; p < parameters.size(); ++p) {
    for (std::size_t x = 0; x < universe.size(); ++x) {
      grid.push_back(fill(p, x));
    }
  }
  return NsSet(std::move(universe), std::move(parameters), std::move(grid));
}

Triple NsSet::at(std::size_t p, std::size_t x) const {
  const std::size_t k = p * universe_.size() + x;
  return Triple{t_[k], i_[k], f_[k]};
}

Triple NsSet::at(std::string_view parameter, std::string_view element) const {
  const auto p = parameters_.index_of(parameter);
  if (!p) {
    throw UnknownParameterError("unknown parameter '" + std::string(parameter) + "'");
  }
  const auto x = universe_.index_of(element);
  if (!x) {
    throw DomainMismatchError("unknown element '" + std::string(element) + "'");
  }
  return at(*p, *x);
}

std::span<const double> NsSet::truth_row(std::size_t p) const {
  return {t_.data() + p * universe_.size(), universe_.size()};
}
std::span<const double> NsSet::indeterminacy_row(std::size_t p) const {
  return {i_.data() + p * universe_.size(), universe_.size()};
}
std::span<const double> NsSet::falsity_row(std::size_t p) const {
  return {f_.data() + p * universe_.size(), universe_.size()};
}

bool is_subset(const NsSet& f, const NsSet& g, double eps) {
  require_same_domain(f, g);
  const auto tf = f.truth(), tg = g.truth();
  const auto fi = f.indeterminacy(), gi = g.indeterminacy();
  const auto ff = f.falsity(), gf = g.falsity();
  for (std::size_t k = 0; k < tf.size(); ++k) {
    if (!(tf[k] <= tg[k] + eps)) return false;
    if (!(fi[k] + eps >= gi[k])) return false;
    if (!(ff[k] + eps >= gf[k])) return false;
  }
  return true;
}

bool ns_equal(const NsSet& f, const NsSet& g, double eps) {
  require_same_domain(f, g);
  const auto tf = f.truth(), tg = g.truth();
  const auto fi = f.indeterminacy(), gi = g.indeterminacy();
  const auto ff = f.falsity(), gf = g.falsity();
  for (std::size_t k = 0; k < tf.size(); ++k) {
    if (std::fabs(tf[k] - tg[k]) > eps) return false;
    if (std::fabs(fi[k] - gi[k]) > eps) return false;
    if (std::fabs(ff[k] - gf[k]) > eps) return false;
  }
  return true;
}

NsSet ns_union(const NsSet& f, const NsSet& g) {
  require_same_domain(f, g);
  const auto& ops = kernels::active_ops();
  const std::size_t n = f.t_.size();
  std::vector<double> t(n), i(n), v(n);
  ops.vmax(f.t_.data(), g.t_.data(), t.data(), n);
  ops.vmin(f.i_.data(), g.i_.data(), i.data(), n);
  ops.vmin(f.f_.data(), g.f_.data(), v.data(), n);
  return NsSet(f.universe_, f.parameters_, std::move(t), std::move(i), std::move(v));
}

NsSet ns_intersection(const NsSet& f, const NsSet& g) {
  require_same_domain(f, g);
  const auto& ops = kernels::active_ops();
  const std::size_t n = f.t_.size();
  std::vector<double> t(n), i(n), v(n);
  ops.vmin(f.t_.data(), g.t_.data(), t.data(), n);
  ops.vmax(f.i_.data(), g.i_.data(), i.data(), n);
  ops.vmax(f.f_.data(), g.f_.data(), v.data(), n);
  return NsSet(f.universe_, f.parameters_, std::move(t), std::move(i), std::move(v));
}

NsSet ns_complement(const NsSet& f) {
  const auto& ops = kernels::active_ops();
  const std::size_t n = f.t_.size();
  std::vector<double> i(n);
  ops.vone_minus(f.i_.data(), i.data(), n);
  // Truth and falsity swap; no arithmetic.
  return NsSet(f.universe_, f.parameters_, f.f_, std::move(i), f.t_);
}

NsSet ns_difference(const NsSet& f, const NsSet& g) {
  require_same_domain(f, g);
  const auto& ops = kernels::active_ops();
  const std::size_t n = f.t_.size();
  std::vector<double> t(n), i(n), v(n);
  ops.vsub_clamp0(f.t_.data(), g.t_.data(), t.data(), n);
  ops.vsub_clamp0(g.i_.data(), f.i_.data(), i.data(), n);
  ops.vsub_clamp0(g.f_.data(), f.f_.data(), v.data(), n);
  return NsSet(f.universe_, f.parameters_, std::move(t), std::move(i), std::move(v));
}

namespace {

struct ProductGrids {
  std::vector<double> t, i, f;
};

// Shared by the OR/AND products: rows of the result are op(f row e, g row e')
// over all ordered pairs. max_truth selects (max T, min I, min F) vs the dual.
ProductGrids product_grids(const NsSet& f, const NsSet& g, bool max_truth) {
  require_same_universe(f, g);
  const auto& ops = kernels::active_ops();
  const std::size_t m = f.element_count();
  const std::size_t nf = f.parameter_count(), ng = g.parameter_count();
  ProductGrids out{std::vector<double>(nf * ng * m), std::vector<double>(nf * ng * m),
                   std::vector<double>(nf * ng * m)};
  auto truth_op = max_truth ? ops.vmax : ops.vmin;
  auto rest_op = max_truth ? ops.vmin : ops.vmax;
  for (std::size_t a = 0; a < nf; ++a) {
    for (std::size_t b = 0; b < ng; ++b) {
      const std::size_t offset = (a * ng + b) * m;
      truth_op(f.truth_row(a).data(), g.truth_row(b).data(), out.t.data() + offset, m);
      rest_op(f.indeterminacy_row(a).data(), g.indeterminacy_row(b).data(),
              out.i.data() + offset, m);
      rest_op(f.falsity_row(a).data(), g.falsity_row(b).data(), out.f.data() + offset, m);
    }
  }
  return out;
}

}  // namespace

NsSet or_product(const NsSet& f, const NsSet& g) {
  ProductGrids grids = product_grids(f, g, true);
  return NsSet(f.universe_, pair_parameters(f.parameters_, g.parameters_),
               std::move(grids.t), std::move(grids.i), std::move(grids.f));
}

NsSet and_product(const NsSet& f, const NsSet& g) {
  ProductGrids grids = product_grids(f, g, false);
  return NsSet(f.universe_, pair_parameters(f.parameters_, g.parameters_),
               std::move(grids.t), std::move(grids.i), std::move(grids.f));
}

}  // namespace nsset
