#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "nsset/decision.hpp"
#include "nsset/errors.hpp"
#include "nsset/io.hpp"
#include "nsset/kernels.hpp"
#include "nsset/report.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace nsset;

namespace {

NsSet load_blouse_set() {
  const auto path = std::string(NSSET_DATA_DIR) + "/blouse.nsset.json";
  return io::parse_ns_set(io::read_file(path), path);
}

SaatyMatrix load_blouse_saaty() {
  const auto path = std::string(NSSET_DATA_DIR) + "/blouse.saaty.csv";
  return io::parse_saaty_csv(io::read_file(path), path).matrix;
}

oracle::TripleRow triple_row(const NsSet& f, std::size_t p) {
  oracle::TripleRow out;
  for (std::size_t x = 0; x < f.element_count(); ++x) {
    const Triple v = f.at(p, x);
    out.push_back({v.t, v.i, v.f});
  }
  return out;
}

oracle::Matrix saaty_rows(const SaatyMatrix& d) {
  oracle::Matrix out(d.size());
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < d.size(); ++c) out[r].push_back(d.at(r, c));
  }
  return out;
}

}  // namespace

TEST_CASE("saaty matrix validation") {
  const auto params = testgen::parameters(2);
  CHECK_NOTHROW(SaatyMatrix(params, {1, 3, 1.0 / 3, 1}));
  CHECK_THROWS_AS(SaatyMatrix(params, {1, -3, 3, 1}), ValidationError);
  CHECK_THROWS_AS(SaatyMatrix(params, {1, 0, 3, 1}), ValidationError);
  CHECK_THROWS_AS(SaatyMatrix(params, {2, 3, 3, 1}), ValidationError);  // diagonal
  CHECK_THROWS_AS(SaatyMatrix(params, {1, 3, 3}), ValidationError);     // shape

  const SaatyMatrix reciprocal(params, {1, 4, 0.25, 1});
  CHECK(reciprocal.reciprocity_violations().empty());
  const SaatyMatrix skewed(params, {1, 4, 0.5, 1});
  CHECK(skewed.reciprocity_violations().size() == 1);

  CHECK(reciprocal.off_scale_entries().empty());
  const SaatyMatrix offscale(params, {1, 3.67, 1.0 / 3.67, 1});
  CHECK(offscale.off_scale_entries().size() == 2);
}

TEST_CASE("row scores of the worked example") {
  const SaatyMatrix d = load_blouse_saaty();
  const std::vector<double> c = row_scores(d);
  REQUIRE(c.size() == 4);
  CHECK(format_fixed(c[0], 2) == "6.67");
  CHECK(c[1] == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(c[2] == doctest::Approx(3.7).epsilon(1e-12));
  // The paper prints 4.88; the row sums to 29/6 and the printed normalized
  // row (.62 .07 .10 .21) is only consistent with that.
  CHECK(std::fabs(c[3] - 29.0 / 6.0) < 1e-12);
  CHECK(format_fixed(c[3], 2) == "4.83");

  const SaatyMatrix ones(testgen::parameters(3), std::vector<double>(9, 1.0));
  for (const double score : row_scores(ones)) CHECK(score == 3.0);
}

TEST_CASE("normalization matches the printed rows") {
  const NormalizedMatrix normalized = normalize(load_blouse_saaty());
  const double want_row1[] = {0.15, 0.05, 0.75, 0.05};
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(std::fabs(normalized.at(0, c) - want_row1[c]) < 5e-3);
  }
  const double want_row4[] = {0.62, 0.07, 0.10, 0.21};
  for (std::size_t c = 0; c < 4; ++c) {
    CHECK(std::fabs(normalized.at(3, c) - want_row4[c]) < 5e-3);
  }
  for (std::size_t r = 0; r < 4; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < 4; ++c) sum += normalized.at(r, c);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  const SaatyMatrix ones(testgen::parameters(3), std::vector<double>(9, 1.0));
  const NormalizedMatrix third = normalize(ones);
  for (double v : third.entries) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-15));

  // Group example, mean matrix row 3 to two decimals.
  const SaatyMatrix group_like(
      testgen::parameters(4),
      {1, 3.67, 0.23, 2.67, 0.29, 1, 1.28, 4.06, 5, 1.78, 1, 0.34, 0.42, 4.06, 3.33, 1});
  const NormalizedMatrix gnorm = normalize(group_like);
  CHECK(format_fixed(gnorm.at(2, 0), 2) == "0.62");
  CHECK(format_fixed(gnorm.at(2, 1), 2) == "0.22");
  CHECK(format_fixed(gnorm.at(2, 2), 2) == "0.12");
  CHECK(format_fixed(gnorm.at(2, 3), 2) == "0.04");
}

TEST_CASE("parameter weights are column means and sum to one") {
  const ParameterWeights weights = parameter_weights(load_blouse_saaty());
  const double printed[] = {0.29, 0.09, 0.34, 0.28};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::fabs(weights.weights[k] - printed[k]) < 5e-3);
    CHECK(weights.weights[k] >= 0.0);
  }
  const double total =
      std::accumulate(weights.weights.begin(), weights.weights.end(), 0.0);
  CHECK(std::fabs(total - 1.0) < 1e-9);

  const SaatyMatrix ones(testgen::parameters(3), std::vector<double>(9, 1.0));
  for (const double w : parameter_weights(ones).weights) {
    CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-15));
  }
}

TEST_CASE("weights are invariant under uniform row scaling") {
  // The row score divides the row, so a common factor cancels. Checked at
  // the kernel level because the matrix type insists on a unit diagonal.
  const auto& ops = kernels::active_ops();
  testgen::Rng rng;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.between(2, 6));
    std::vector<double> m(n * n), scaled(n * n);
    for (auto& v : m) v = 0.1 + 9.0 * rng.unit();
    scaled = m;
    const double factor = 0.5 + 7.0 * rng.unit();
    for (std::size_t c = 0; c < n; ++c) scaled[1 * n + c] *= factor;

    std::vector<double> sums(n), norm(n * n), weights(n);
    ops.row_sums(m.data(), n, n, sums.data());
    ops.row_divide(m.data(), n, n, sums.data(), norm.data());
    ops.col_means(norm.data(), n, n, weights.data());

    std::vector<double> sums2(n), norm2(n * n), weights2(n);
    ops.row_sums(scaled.data(), n, n, sums2.data());
    ops.row_divide(scaled.data(), n, n, sums2.data(), norm2.data());
    ops.col_means(norm2.data(), n, n, weights2.data());

    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::fabs(weights[k] - weights2[k]) < 1e-12);
    }
  }
}

TEST_CASE("compare matrix on worked entries") {
  const NsSet blouse = load_blouse_set();
  const CompareMatrix bright = compare_matrix(blouse, "bright");
  CHECK(bright.at(1, 0) == doctest::Approx(0.45).epsilon(1e-12));
  // The paper prints .10 at (1,2); the formula and x_ij + x_ji = 1 give .55.
  CHECK(bright.at(0, 1) == doctest::Approx(0.55).epsilon(1e-12));

  const auto u = testgen::universe(4);
  const auto e = testgen::parameters(1);
  const NsSet uniform = NsSet::build(
      u, e, [](std::size_t, std::size_t) { return Triple(0.3, 0.7, 0.2); });
  const CompareMatrix flat = compare_matrix(uniform, "e1");
  for (double v : flat.entries) CHECK(v == 0.5);

  // Group example: I_fd(e1) row 1 col 2.
  const NsSet agg(testgen::universe(2), e,
                  {Triple(0.4, 0.5, 0.7), Triple(0.3, 0.6, 0.6)});
  CHECK(compare_matrix(agg, "e1").at(0, 1) == doctest::Approx(0.55).epsilon(1e-12));

  CHECK_THROWS_AS(compare_matrix(blouse, "nonexistent"), UnknownParameterError);
}

TEST_CASE("compare matrix invariants hold on random sets, without clamping") {
  testgen::Rng rng;
  bool saw_outside_unit_interval = false;
  for (int trial = 0; trial < 1000; ++trial) {
    const NsSet f = testgen::random_set(rng);
    for (const auto& parameter : f.parameters().parameters()) {
      const CompareMatrix cm = compare_matrix(f, parameter);
      const std::size_t m = cm.m;
      for (std::size_t r = 0; r < m; ++r) {
        CHECK(cm.at(r, r) == 0.5);
        for (std::size_t c = 0; c < m; ++c) {
          CHECK(std::fabs(cm.at(r, c) + cm.at(c, r) - 1.0) <= 1e-12);
          CHECK(cm.at(r, c) >= -1.0);
          CHECK(cm.at(r, c) <= 2.0);
          if (cm.at(r, c) < 0.0 || cm.at(r, c) > 1.0) saw_outside_unit_interval = true;
        }
      }
      const std::vector<double> w = element_weights(cm);
      const double total = std::accumulate(w.begin(), w.end(), 0.0);
      CHECK(std::fabs(total - static_cast<double>(m) / 2.0) <= 1e-9);
    }
  }
  CHECK(saw_outside_unit_interval);  // the definition does not clamp
}

TEST_CASE("element weights of the worked example") {
  const NsSet blouse = load_blouse_set();
  const std::vector<double> bright = element_weights(compare_matrix(blouse, "bright"));
  CHECK(std::fabs(bright[0] - 0.67) < 5e-3);
  // Column 2 with the corrected (1,2) entry; the paper prints .63 via its
  // erratum.
  CHECK(std::fabs(bright[1] - 0.72) < 5e-3);
  const std::vector<double> cheap = element_weights(compare_matrix(blouse, "cheap"));
  CHECK(std::fabs(cheap[0] - 0.67) < 5e-3);

  const auto u = testgen::universe(3);
  const auto e = testgen::parameters(1);
  const NsSet uniform = NsSet::build(
      u, e, [](std::size_t, std::size_t) { return Triple(0.9, 0.4, 0.1); });
  for (const double w : element_weights(compare_matrix(uniform, "e1"))) {
    CHECK(w == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("decision set from the paper's printed intermediates") {
  // Feeding the printed weights and element weights reproduces the printed
  // decision sets.
  const ParameterWeights w4{testgen::parameters(4), {}, {0.29, 0.09, 0.34, 0.28}};
  const std::vector<std::vector<double>> paper_w4 = {
      {0.67, 0.63, 0.42, 0.37, 0.32},
      {0.80, 0.57, 0.33, 0.42, 0.52},
      {0.48, 0.39, 0.49, 0.55, 0.42},
      {0.65, 0.40, 0.50, 0.65, 0.30}};
  const DecisionSet d4 = decision_set(w4, paper_w4, testgen::universe(5));
  const double printed4[] = {0.15, 0.12, 0.11, 0.13, 0.09};
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::fabs(d4.scores[j] - printed4[j]) < 5e-3);
  CHECK(d4.optimum == "x1");

  const ParameterWeights w5{testgen::parameters(4), {}, {0.21, 0.33, 0.18, 0.28}};
  const std::vector<std::vector<double>> paper_w5 = {
      {0.57, 0.56, 0.37, 0.40, 0.66},
      {0.61, 0.48, 0.71, 0.39, 0.31},
      {0.32, 0.57, 0.47, 0.61, 0.53},
      {0.49, 0.50, 0.52, 0.35, 0.64}};
  const DecisionSet d5 = decision_set(w5, paper_w5, testgen::universe(5));
  const double printed5[] = {0.126, 0.130, 0.136, 0.105, 0.129};
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(std::fabs(d5.scores[j] - printed5[j]) < 1e-2);
  }
  CHECK(std::fabs(d5.scores[2] - 0.136) < 5e-3);
  CHECK(d5.optimum == "x3");

  // Equal element weights everywhere: scores tie and the first element wins.
  const std::vector<std::vector<double>> flat(4, std::vector<double>(5, 0.5));
  const DecisionSet tied = decision_set(w4, flat, testgen::universe(5));
  for (std::size_t j = 1; j < 5; ++j) CHECK(tied.scores[j] == tied.scores[0]);
  CHECK(tied.optimum == "x1");
  CHECK(tied.optimum_index == 0);

  CHECK_THROWS_AS(decision_set(w4, flat, testgen::universe(3)), DomainMismatchError);
  CHECK_THROWS_AS(
      decision_set(w4, std::vector<std::vector<double>>(2), testgen::universe(5)),
      DomainMismatchError);
}

TEST_CASE("decide runs the full pipeline on the blouse example") {
  const DecisionReport report = decide(load_blouse_set(), load_blouse_saaty());
  CHECK(report.decision.optimum == "x1");
  CHECK(std::fabs(report.decision.scores[0] - 0.15) < 1e-2);

  // Universal set: every compare entry is .5, all scores equal, first wins.
  const auto u = testgen::universe(4);
  const auto e = testgen::parameters(3);
  const DecisionReport flat = decide(
      NsSet::universal_set(u, e),
      SaatyMatrix(e, {1, 2, 4, 0.5, 1, 2, 0.25, 0.5, 1}));
  for (std::size_t j = 1; j < 4; ++j) {
    CHECK(flat.decision.scores[j] == doctest::Approx(flat.decision.scores[0]));
  }
  CHECK(flat.decision.optimum == "x1");

  // One parameter, two elements: the larger compare-column mean wins.
  const NsSet two(testgen::universe(2), testgen::parameters(1),
                  {Triple(0.9, 0.1, 0.1), Triple(0.2, 0.8, 0.9)});
  const DecisionReport duel = decide(two, SaatyMatrix(testgen::parameters(1), {1}));
  CHECK(duel.decision.scores[0] == doctest::Approx(-0.05).epsilon(1e-12));
  CHECK(duel.decision.scores[1] == doctest::Approx(1.05).epsilon(1e-12));
  CHECK(duel.decision.optimum == "x2");

  // Parameter sets must agree between the ns-set and the matrix.
  CHECK_THROWS_AS(decide(two, load_blouse_saaty()), DomainMismatchError);
}

TEST_CASE("pipeline reproduces the independent oracle to 1e-12") {
  testgen::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(1, 5);
    const auto e = testgen::parameters(n);
    const auto u = testgen::universe(rng.between(1, 6));
    const NsSet f = testgen::random_set(rng, u, e);
    std::vector<double> entries(static_cast<std::size_t>(n) * n, 1.0);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (r != c) entries[r * n + c] = 0.1 + 9.0 * rng.unit();
      }
    }
    const SaatyMatrix d(e, entries);
    const DecisionReport report = decide(f, d);

    const oracle::Matrix od = saaty_rows(d);
    const auto oc = oracle::row_scores(od);
    const auto onorm = oracle::normalize(od);
    const auto ow = oracle::parameter_weights(onorm);
    for (int k = 0; k < n; ++k) {
      CHECK(std::fabs(report.scores[k] - oc[k]) <= 1e-12);
      CHECK(std::fabs(report.weights.weights[k] - ow[k]) <= 1e-12);
      for (int c = 0; c < n; ++c) {
        CHECK(std::fabs(report.normalized.at(k, c) - onorm[k][c]) <= 1e-12);
      }
    }
    oracle::Matrix oW;
    for (int p = 0; p < n; ++p) {
      const auto ocm = oracle::compare_matrix(triple_row(f, p));
      for (std::size_t r = 0; r < u.size(); ++r) {
        for (std::size_t c = 0; c < u.size(); ++c) {
          CHECK(std::fabs(report.compare[p].at(r, c) - ocm[r][c]) <= 1e-12);
        }
      }
      oW.push_back(oracle::element_weights(ocm));
      for (std::size_t x = 0; x < u.size(); ++x) {
        CHECK(std::fabs(report.element_weights[p][x] - oW[p][x]) <= 1e-12);
      }
    }
    const auto oscores = oracle::decision_scores(ow, oW, u.size());
    for (std::size_t x = 0; x < u.size(); ++x) {
      CHECK(std::fabs(report.decision.scores[x] - oscores[x]) <= 1e-12);
    }
    CHECK(report.decision.optimum_index == oracle::argmax_first(oscores));
  }
}

TEST_CASE("pipeline is deterministic and permutation-consistent") {
  const NsSet blouse = load_blouse_set();
  const SaatyMatrix d = load_blouse_saaty();
  const DecisionReport a = decide(blouse, d);
  const DecisionReport b = decide(blouse, d);
  CHECK(render_json(a) == render_json(b));  // bit-identical reports

  // Reversing the universe order permutes the scores and maps the optimum.
  const auto& elements = blouse.universe().elements();
  std::vector<std::string> reversed(elements.rbegin(), elements.rend());
  const Universe ru{reversed};
  const std::size_t m = elements.size();
  const NsSet flipped = NsSet::build(ru, blouse.parameters(),
                                     [&](std::size_t p, std::size_t x) {
                                       return blouse.at(p, m - 1 - x);
                                     });
  const DecisionReport c = decide(flipped, d);
  for (std::size_t x = 0; x < m; ++x) {
    CHECK(std::fabs(c.decision.scores[x] - a.decision.scores[m - 1 - x]) <= 1e-12);
  }
  CHECK(c.decision.optimum == a.decision.optimum);
}
