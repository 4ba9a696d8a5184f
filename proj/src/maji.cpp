#include "nsset/maji.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <tuple>
#include <utility>

#include "nsset/errors.hpp"

namespace nsset::maji {
namespace {

void require_same_universe(const MajiNsSet& h, const MajiNsSet& g) {
  if (!(h.universe() == g.universe())) {
    throw DomainMismatchError("operands have different universes");
  }
}

std::string triple_text(const Triple& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "<%.6g, %.6g, %.6g>", v.t, v.i, v.f);
  return buf;
}

}  // namespace

std::string display_name(const Parameter& p) {
  return p.negated ? "¬" + p.id : p.id;
}

std::vector<Parameter> not_set(std::vector<Parameter> parameters) {
  for (auto& p : parameters) p.negated = !p.negated;
  return parameters;
}

MajiNsSet::MajiNsSet(Universe universe, std::vector<Parameter> parameters,
                     std::vector<Triple> grid)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      grid_(std::move(grid)) {
  for (std::size_t a = 0; a < parameters_.size(); ++a) {
    for (std::size_t b = a + 1; b < parameters_.size(); ++b) {
      if (parameters_[a] == parameters_[b]) {
        throw ValidationError("maji parameters",
                              "duplicate parameter '" + display_name(parameters_[a]) + "'");
      }
    }
  }
  if (grid_.size() != parameters_.size() * universe_.size()) {
    throw ValidationError("maji grid", "grid size does not match |A| x |X|");
  }
}

MajiNsSet MajiNsSet::null_set(Universe universe, std::vector<Parameter> parameters) {
  const std::size_t cells = parameters.size() * universe.size();
  return MajiNsSet(std::move(universe), std::move(parameters),
                   std::vector<Triple>(cells, Triple{0.0, 0.0, 0.0}));
}

std::optional<std::size_t> MajiNsSet::index_of(const Parameter& p) const {
  for (std::size_t k = 0; k < parameters_.size(); ++k) {
    if (parameters_[k] == p) return k;
  }
  return std::nullopt;
}

bool is_subset(const MajiNsSet& h, const MajiNsSet& g, double eps) {
  require_same_universe(h, g);
  const std::size_t m = h.element_count();
  for (std::size_t p = 0; p < h.parameter_count(); ++p) {
    const auto q = g.index_of(h.parameters()[p]);
    if (!q) return false;  // A is not contained in B
    for (std::size_t x = 0; x < m; ++x) {
      const Triple a = h.at(p, x), b = g.at(*q, x);
      if (!(a.t <= b.t + eps)) return false;
      if (!(a.i <= b.i + eps)) return false;
      if (!(a.f + eps >= b.f)) return false;
    }
  }
  return true;
}

bool equal(const MajiNsSet& h, const MajiNsSet& g, double eps) {
  require_same_universe(h, g);
  if (h.parameter_count() != g.parameter_count()) return false;
  const std::size_t m = h.element_count();
  for (std::size_t p = 0; p < h.parameter_count(); ++p) {
    const auto q = g.index_of(h.parameters()[p]);
    if (!q) return false;
    for (std::size_t x = 0; x < m; ++x) {
      if (!approx_equal(h.at(p, x), g.at(*q, x), eps)) return false;
    }
  }
  return true;
}

MajiNsSet complement_of(const MajiNsSet& h) {
  const std::size_t m = h.element_count();
  std::vector<Triple> grid;
  grid.reserve(h.parameter_count() * m);
  for (std::size_t p = 0; p < h.parameter_count(); ++p) {
    for (std::size_t x = 0; x < m; ++x) {
      const Triple v = h.at(p, x);
      grid.push_back(Triple{v.f, v.i, v.t});
    }
  }
  return MajiNsSet(h.universe(), not_set(h.parameters()), std::move(grid));
}

MajiNsSet union_of(const MajiNsSet& h, const MajiNsSet& g) {
  require_same_universe(h, g);
  const std::size_t m = h.element_count();
  std::vector<Parameter> params = h.parameters();
  for (const auto& p : g.parameters()) {
    if (!h.index_of(p)) params.push_back(p);
  }
  std::vector<Triple> grid;
  grid.reserve(params.size() * m);
  for (const auto& p : params) {
    const auto a = h.index_of(p), b = g.index_of(p);
    for (std::size_t x = 0; x < m; ++x) {
      if (a && b) {
        const Triple u = h.at(*a, x), v = g.at(*b, x);
        grid.push_back(Triple{std::max(u.t, v.t), (u.i + v.i) * 0.5, std::min(u.f, v.f)});
      } else if (a) {
        grid.push_back(h.at(*a, x));
      } else {
        grid.push_back(g.at(*b, x));
      }
    }
  }
  return MajiNsSet(h.universe(), std::move(params), std::move(grid));
}

MajiNsSet intersection_of(const MajiNsSet& h, const MajiNsSet& g) {
  require_same_universe(h, g);
  const std::size_t m = h.element_count();
  std::vector<Parameter> params;
  for (const auto& p : h.parameters()) {
    if (g.index_of(p)) params.push_back(p);
  }
  std::vector<Triple> grid;
  grid.reserve(params.size() * m);
  for (const auto& p : params) {
    const auto a = *h.index_of(p), b = *g.index_of(p);
    for (std::size_t x = 0; x < m; ++x) {
      const Triple u = h.at(a, x), v = g.at(b, x);
      grid.push_back(Triple{std::min(u.t, v.t), (u.i + v.i) * 0.5, std::max(u.f, v.f)});
    }
  }
  // Disjoint parameter sets produce the empty-parameter set.
  return MajiNsSet(h.universe(), std::move(params), std::move(grid));
}

namespace {

MajiNsSet pair_product(const MajiNsSet& h, const MajiNsSet& g, bool min_truth) {
  require_same_universe(h, g);
  const std::size_t m = h.element_count();
  const std::size_t pairs = h.parameter_count() * g.parameter_count();
  std::vector<Parameter> params;
  std::vector<Triple> grid;
  params.reserve(pairs);
  grid.reserve(pairs * m);
  for (std::size_t a = 0; a < h.parameter_count(); ++a) {
    for (std::size_t b = 0; b < g.parameter_count(); ++b) {
      params.push_back(Parameter{
          pair_id(display_name(h.parameters()[a]), display_name(g.parameters()[b])),
          false});
      for (std::size_t x = 0; x < m; ++x) {
        const Triple u = h.at(a, x), v = g.at(b, x);
        const double avg_i = (u.i + v.i) * 0.5;
        if (min_truth) {
          grid.push_back(Triple{std::min(u.t, v.t), avg_i, std::max(u.f, v.f)});
        } else {
          grid.push_back(Triple{std::max(u.t, v.t), avg_i, std::min(u.f, v.f)});
        }
      }
    }
  }
  return MajiNsSet(h.universe(), std::move(params), std::move(grid));
}

}  // namespace

MajiNsSet and_product(const MajiNsSet& h, const MajiNsSet& g) {
  return pair_product(h, g, true);
}

MajiNsSet or_product(const MajiNsSet& h, const MajiNsSet& g) {
  return pair_product(h, g, false);
}

MajiNsSet example_houses() {
  Universe universe({"h1", "h2", "h3", "h4", "h5"});
  std::vector<Parameter> params{
      {"beautiful"}, {"wooden"}, {"costly"}, {"moderate"}};
  const std::vector<Triple> grid{
      {.5, .6, .3}, {.4, .7, .6}, {.6, .2, .3}, {.7, .3, .2}, {.8, .2, .3},
      {.6, .3, .5}, {.7, .4, .3}, {.8, .1, .2}, {.7, .1, .3}, {.8, .3, .6},
      {.7, .4, .3}, {.6, .7, .2}, {.7, .2, .5}, {.5, .2, .6}, {.7, .3, .4},
      {.8, .6, .4}, {.7, .9, .6}, {.7, .6, .4}, {.7, .8, .6}, {.9, .5, .7},
  };
  return MajiNsSet(std::move(universe), std::move(params), grid);
}

const PropositionFinding& PropositionReport::find(std::string_view id) const {
  for (const auto& finding : findings) {
    if (finding.id == id) return finding;
  }
  throw InternalError("no proposition '" + std::string(id) + "' in report");
}

namespace {

// Grid-valued random instances keep witnesses reproducible and readable.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : eng_(seed) {}

  double grid_value() {
    return static_cast<double>(std::uniform_int_distribution<int>(0, 20)(eng_)) / 20.0;
  }

  Universe universe() {
    const int m = std::uniform_int_distribution<int>(1, 5)(eng_);
    std::vector<std::string> ids;
    for (int k = 1; k <= m; ++k) ids.push_back("x" + std::to_string(k));
    return Universe(std::move(ids));
  }

  // Nonempty subset of the 4-parameter pool.
  std::vector<Parameter> parameter_subset() {
    std::vector<Parameter> out;
    while (out.empty()) {
      out.clear();
      for (int k = 1; k <= 4; ++k) {
        if (std::uniform_int_distribution<int>(0, 1)(eng_) == 1) {
          out.push_back(Parameter{"e" + std::to_string(k), false});
        }
      }
    }
    return out;
  }

  MajiNsSet set_over(const Universe& u, std::vector<Parameter> params) {
    std::vector<Triple> grid;
    grid.reserve(params.size() * u.size());
    for (std::size_t k = 0; k < params.size() * u.size(); ++k) {
      grid.push_back(Triple{grid_value(), grid_value(), grid_value()});
    }
    return MajiNsSet(u, std::move(params), std::move(grid));
  }

 private:
  std::mt19937_64 eng_;
};

// First entry where lhs and rhs disagree, rendered for the report. Parameter
// sets differing as sets is reported as such.
std::string first_mismatch(const MajiNsSet& lhs, const MajiNsSet& rhs, double eps) {
  if (lhs.parameter_count() != rhs.parameter_count()) {
    return "parameter sets differ: |lhs|=" + std::to_string(lhs.parameter_count()) +
           " |rhs|=" + std::to_string(rhs.parameter_count());
  }
  for (std::size_t p = 0; p < lhs.parameter_count(); ++p) {
    const auto q = rhs.index_of(lhs.parameters()[p]);
    if (!q) {
      return "parameter '" + display_name(lhs.parameters()[p]) + "' missing from rhs";
    }
    for (std::size_t x = 0; x < lhs.element_count(); ++x) {
      const Triple a = lhs.at(p, x), b = rhs.at(*q, x);
      if (!approx_equal(a, b, eps)) {
        return "(" + display_name(lhs.parameters()[p]) + ", " +
               lhs.universe().at(x) + "): lhs " + triple_text(a) + " != rhs " +
               triple_text(b);
      }
    }
  }
  return {};
}

struct Checker {
  PropositionReport report;
  double eps = 1e-9;

  void run(const std::string& id, const std::string& statement, std::size_t trials,
           InstanceGen& gen,
           const std::function<std::pair<MajiNsSet, MajiNsSet>(InstanceGen&)>& make,
           const std::function<std::string()>& fixture_check) {
    PropositionFinding finding{id, statement, true, ""};
    if (auto witness = fixture_check(); !witness.empty()) {
      finding.holds = false;
      finding.witness = witness;
    }
    for (std::size_t k = 0; finding.holds && k < trials; ++k) {
      auto [lhs, rhs] = make(gen);
      if (auto witness = first_mismatch(lhs, rhs, eps); !witness.empty()) {
        finding.holds = false;
        finding.witness = witness;
      }
    }
    report.findings.push_back(std::move(finding));
  }
};

}  // namespace

PropositionReport verify_propositions(const VerifyOptions& options) {
  InstanceGen gen(options.seed);
  Checker checker;
  checker.report.random_trials = options.trials;
  checker.report.seed = options.seed;

  const MajiNsSet fixture = example_houses();
  const MajiNsSet phi = MajiNsSet::null_set(fixture.universe(), fixture.parameters());
  const double eps = checker.eps;

  auto fixture_pair = [&](const MajiNsSet& lhs, const MajiNsSet& rhs) {
    return first_mismatch(lhs, rhs, eps);
  };

  auto one_set = [](InstanceGen& g) {
    const Universe u = g.universe();
    return g.set_over(u, g.parameter_subset());
  };
  auto two_sets = [](InstanceGen& g) {
    const Universe u = g.universe();
    return std::pair{g.set_over(u, g.parameter_subset()),
                     g.set_over(u, g.parameter_subset())};
  };
  auto three_sets = [](InstanceGen& g) {
    const Universe u = g.universe();
    return std::tuple{g.set_over(u, g.parameter_subset()),
                      g.set_over(u, g.parameter_subset()),
                      g.set_over(u, g.parameter_subset())};
  };

  checker.run(
      "2.1(1)", "(H,A) u (H,A) = (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto h = one_set(g);
        return std::pair{union_of(h, h), h};
      },
      [&] { return fixture_pair(union_of(fixture, fixture), fixture); });

  checker.run(
      "2.1(2)", "(H,A) u (G,B) = (G,B) u (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto [h, s] = two_sets(g);
        return std::pair{union_of(h, s), union_of(s, h)};
      },
      [&] { return fixture_pair(union_of(fixture, phi), union_of(phi, fixture)); });

  checker.run(
      "2.1(3)", "(H,A) n (H,A) = (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto h = one_set(g);
        return std::pair{intersection_of(h, h), h};
      },
      [&] { return fixture_pair(intersection_of(fixture, fixture), fixture); });

  checker.run(
      "2.1(4)", "(H,A) n (G,B) = (G,B) n (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto [h, s] = two_sets(g);
        return std::pair{intersection_of(h, s), intersection_of(s, h)};
      },
      [&] {
        return fixture_pair(intersection_of(fixture, phi), intersection_of(phi, fixture));
      });

  checker.run(
      "2.1(5)", "(H,A) u Phi = (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto h = one_set(g);
        const auto null_h = MajiNsSet::null_set(h.universe(), h.parameters());
        return std::pair{union_of(h, null_h), h};
      },
      [&] { return fixture_pair(union_of(fixture, phi), fixture); });

  checker.run(
      "2.1(6)", "(H,A) n Phi = Phi", options.trials, gen,
      [&](InstanceGen& g) {
        auto h = one_set(g);
        const auto null_h = MajiNsSet::null_set(h.universe(), h.parameters());
        return std::pair{intersection_of(h, null_h), null_h};
      },
      [&] { return fixture_pair(intersection_of(fixture, phi), phi); });

  checker.run(
      "2.1(7)", "((H,A)^c)^c = (H,A)", options.trials, gen,
      [&](InstanceGen& g) {
        auto h = one_set(g);
        return std::pair{complement_of(complement_of(h)), h};
      },
      [&] { return fixture_pair(complement_of(complement_of(fixture)), fixture); });

  checker.run(
      "2.2(1)", "(H,A) u [(G,B) u (K,C)] = [(H,A) u (G,B)] u (K,C)", options.trials,
      gen,
      [&](InstanceGen& g) {
        auto [h, s, k] = three_sets(g);
        return std::pair{union_of(h, union_of(s, k)), union_of(union_of(h, s), k)};
      },
      [&] {
        return fixture_pair(union_of(fixture, union_of(phi, fixture)),
                            union_of(union_of(fixture, phi), fixture));
      });

  checker.run(
      "2.2(2)", "(H,A) n [(G,B) n (K,C)] = [(H,A) n (G,B)] n (K,C)", options.trials,
      gen,
      [&](InstanceGen& g) {
        auto [h, s, k] = three_sets(g);
        return std::pair{intersection_of(h, intersection_of(s, k)),
                         intersection_of(intersection_of(h, s), k)};
      },
      [&] {
        return fixture_pair(intersection_of(fixture, intersection_of(phi, fixture)),
                            intersection_of(intersection_of(fixture, phi), fixture));
      });

  checker.run(
      "2.2(3)", "(H,A) u [(G,B) n (K,C)] = [(H,A) u (G,B)] n [(H,A) u (K,C)]",
      options.trials, gen,
      [&](InstanceGen& g) {
        auto [h, s, k] = three_sets(g);
        return std::pair{union_of(h, intersection_of(s, k)),
                         intersection_of(union_of(h, s), union_of(h, k))};
      },
      [&] {
        return fixture_pair(union_of(fixture, intersection_of(phi, fixture)),
                            intersection_of(union_of(fixture, phi), union_of(fixture, fixture)));
      });

  checker.run(
      "2.2(4)", "(H,A) n [(G,B) u (K,C)] = [(H,A) n (G,B)] u [(H,A) n (K,C)]",
      options.trials, gen,
      [&](InstanceGen& g) {
        auto [h, s, k] = three_sets(g);
        return std::pair{intersection_of(h, union_of(s, k)),
                         union_of(intersection_of(h, s), intersection_of(h, k))};
      },
      [&] {
        return fixture_pair(intersection_of(fixture, union_of(phi, fixture)),
                            union_of(intersection_of(fixture, phi),
                                     intersection_of(fixture, fixture)));
      });

  return checker.report;
}

}  // namespace nsset::maji
