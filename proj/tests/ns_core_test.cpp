#include <cmath>
#include <vector>

#include "doctest.h"
#include "nsset/errors.hpp"
#include "nsset/ns_set.hpp"
#include "support/generators.hpp"

using namespace nsset;

namespace {

NsSet singleton(const Triple& v) {
  return NsSet(testgen::universe(1), testgen::parameters(1), {v});
}

bool triple_close(const Triple& a, const Triple& b, double eps = 1e-12) {
  return std::fabs(a.t - b.t) <= eps && std::fabs(a.i - b.i) <= eps &&
         std::fabs(a.f - b.f) <= eps;
}

}  // namespace

TEST_CASE("triple validates components at construction") {
  CHECK_THROWS_AS(Triple(1.2, 0.0, 0.0), ValidationError);
  CHECK_THROWS_AS(Triple(0.0, -0.1, 0.0), ValidationError);
  CHECK_THROWS_AS(Triple(0.0, 0.0, 1.0000001), ValidationError);
  CHECK(Triple(0.0, 1.0, 1.0) == Triple::null());
  CHECK(Triple(1.0, 0.0, 0.0) == Triple::universal());
}

TEST_CASE("null and universal sets bound the subset order") {
  const auto u = testgen::universe(5, "h");
  const auto e = testgen::parameters(4);
  const NsSet null = NsSet::null_set(u, e);
  const NsSet universal = NsSet::universal_set(u, e);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t x = 0; x < 5; ++x) {
      CHECK(null.at(p, x) == Triple::null());
      CHECK(universal.at(p, x) == Triple::universal());
    }
  }
  CHECK(ns_equal(ns_complement(universal), null));
  CHECK(ns_equal(ns_complement(null), universal));

  testgen::Rng rng;
  for (int k = 0; k < 50; ++k) {
    const NsSet g = testgen::random_set(rng, u, e);
    CHECK(is_subset(null, g));
    CHECK(is_subset(g, universal));
  }
}

TEST_CASE("subset order on single entries") {
  const NsSet f = singleton(Triple(0.3, 0.6, 0.5));
  const NsSet g = singleton(Triple(0.5, 0.2, 0.1));
  CHECK(is_subset(f, g));
  CHECK(!is_subset(g, f));
  CHECK(is_subset(f, f));
}

TEST_CASE("equality is mutual subsethood within tolerance") {
  const auto u = testgen::universe(3);
  const auto e = testgen::parameters(2);
  const NsSet null = NsSet::null_set(u, e);
  const NsSet universal = NsSet::universal_set(u, e);
  CHECK(ns_equal(null, null));
  CHECK(!ns_equal(null, universal));

  testgen::Rng rng;
  const NsSet f = testgen::random_set(rng, u, e);
  const NsSet nudged = NsSet::build(u, e, [&](std::size_t p, std::size_t x) {
    Triple v = f.at(p, x);
    return Triple(std::min(1.0, v.t + 1e-12), v.i, v.f);
  });
  CHECK(ns_equal(f, nudged));
  CHECK(is_subset(f, nudged));
  CHECK(is_subset(nudged, f));
}

TEST_CASE("union and intersection on worked entries") {
  const NsSet a = singleton(Triple(0.4, 0.2, 0.7));
  const NsSet b = singleton(Triple(0.5, 0.2, 0.3));
  const NsSet c = singleton(Triple(0.4, 0.5, 0.7));
  CHECK(ns_union(a, b).at(0, 0) == Triple(0.5, 0.2, 0.3));
  // Step 5 of the group example: the three makers' (e1, x1) entries meet at
  // (.4, .5, .7).
  CHECK(ns_intersection(ns_intersection(a, b), c).at(0, 0) == Triple(0.4, 0.5, 0.7));
}

TEST_CASE("union/intersection identities with the bounds") {
  testgen::Rng rng;
  for (int k = 0; k < 200; ++k) {
    const NsSet f = testgen::random_set(rng);
    const NsSet null = NsSet::null_set(f.universe(), f.parameters());
    const NsSet universal = NsSet::universal_set(f.universe(), f.parameters());
    CHECK(ns_equal(ns_union(f, null), f));
    CHECK(ns_equal(ns_union(f, universal), universal));
    CHECK(ns_equal(ns_intersection(f, null), null));
    CHECK(ns_equal(ns_intersection(f, universal), f));
    CHECK(ns_equal(ns_intersection(f, f), f));
    CHECK(ns_equal(ns_union(f, f), f));
  }
}

TEST_CASE("complement reflects and does not rename parameters") {
  const NsSet f = singleton(Triple(0.5, 0.6, 0.3));
  const NsSet fc = ns_complement(f);
  CHECK(triple_close(fc.at(0, 0), Triple(0.3, 0.4, 0.5), 0.0));
  CHECK(fc.parameters() == f.parameters());
}

TEST_CASE("difference evaluates its clauses") {
  const NsSet f = singleton(Triple(0.7, 0.2, 0.1));
  const NsSet g = singleton(Triple(0.4, 0.5, 0.6));
  CHECK(triple_close(ns_difference(f, g).at(0, 0), Triple(0.3, 0.3, 0.5), 1e-15));

  const NsSet a = singleton(Triple(0.2, 0.9, 0.9));
  const NsSet b = singleton(Triple(0.6, 0.1, 0.2));
  CHECK(ns_difference(a, b).at(0, 0) == Triple(0.0, 0.0, 0.0));

  testgen::Rng rng;
  for (int k = 0; k < 100; ++k) {
    const NsSet h = testgen::random_set(rng);
    const NsSet zero = ns_difference(h, h);
    for (std::size_t p = 0; p < h.parameter_count(); ++p) {
      for (std::size_t x = 0; x < h.element_count(); ++x) {
        CHECK(zero.at(p, x) == Triple(0.0, 0.0, 0.0));
      }
    }
  }
}

TEST_CASE("products run over ordered parameter pairs") {
  const auto u = testgen::universe(1);
  const auto e = testgen::parameters(2);
  testgen::Rng rng;
  const NsSet f = testgen::random_set(rng, u, e);
  const NsSet g = testgen::random_set(rng, u, e);

  const NsSet disjunction = or_product(f, g);
  CHECK(disjunction.parameter_count() == 4);
  CHECK(disjunction.parameters().parameters() ==
        std::vector<std::string>{"(e1,e1)", "(e1,e2)", "(e2,e1)", "(e2,e2)"});

  // f(e1)(x) = <.5,.6,.3>, g(e2)(x) = <.6,.3,.5>
  const NsSet a = NsSet(u, e, {Triple(0.5, 0.6, 0.3), Triple(0.1, 0.2, 0.3)});
  const NsSet b = NsSet(u, e, {Triple(0.9, 0.9, 0.9), Triple(0.6, 0.3, 0.5)});
  CHECK(or_product(a, b).at("(e1,e2)", "x1") == Triple(0.6, 0.3, 0.3));
  CHECK(and_product(a, b).at("(e1,e2)", "x1") == Triple(0.5, 0.6, 0.5));

  const NsSet null = NsSet::null_set(u, e);
  const NsSet null_product = or_product(null, null);
  CHECK(ns_equal(null_product,
                 NsSet::null_set(u, null_product.parameters())));

  // Diagonal of f AND f is f re-indexed.
  const NsSet conjunction = and_product(f, f);
  for (std::size_t p = 0; p < 2; ++p) {
    const std::string pair = "(" + e.at(p) + "," + e.at(p) + ")";
    CHECK(conjunction.at(pair, "x1") == f.at(p, 0));
  }
}

TEST_CASE("operations reject mismatched domains") {
  testgen::Rng rng;
  const NsSet f = testgen::random_set(rng, testgen::universe(2), testgen::parameters(2));
  const NsSet g = testgen::random_set(rng, testgen::universe(3), testgen::parameters(2));
  const NsSet h = testgen::random_set(rng, testgen::universe(2), testgen::parameters(3));
  CHECK_THROWS_AS(ns_union(f, g), DomainMismatchError);
  CHECK_THROWS_AS(ns_intersection(f, h), DomainMismatchError);
  CHECK_THROWS_AS(ns_difference(f, g), DomainMismatchError);
  CHECK_THROWS_AS(is_subset(f, g), DomainMismatchError);
  CHECK_THROWS_AS(ns_equal(f, h), DomainMismatchError);
  CHECK_THROWS_AS(or_product(f, g), DomainMismatchError);   // universes differ
  CHECK_NOTHROW(or_product(f, h));                          // parameter sets may differ
}

// --- property suites ---------------------------------------------------------

namespace {
constexpr int kPropertyCases = 1000;
constexpr double kEps = 1e-9;
}  // namespace

TEST_CASE("order: reflexive, transitive, bounded") {
  testgen::Rng rng;
  for (int k = 0; k < kPropertyCases; ++k) {
    const NsSet f = testgen::random_set(rng);
    const auto& u = f.universe();
    const auto& e = f.parameters();
    const NsSet g = ns_union(f, testgen::random_set(rng, u, e));
    const NsSet h = ns_union(g, testgen::random_set(rng, u, e));
    CHECK(is_subset(f, f));
    CHECK(is_subset(f, g));  // f is below any union with f
    CHECK(is_subset(g, h));
    CHECK(is_subset(f, h));  // transitivity along the constructed chain
    CHECK(is_subset(NsSet::null_set(u, e), f));
    CHECK(is_subset(f, NsSet::universal_set(u, e)));
  }
}

TEST_CASE("lattice laws hold on random sets") {
  testgen::Rng rng;
  for (int k = 0; k < kPropertyCases; ++k) {
    const NsSet f = testgen::random_set(rng);
    const auto& u = f.universe();
    const auto& e = f.parameters();
    const NsSet g = testgen::random_set(rng, u, e);
    const NsSet h = testgen::random_set(rng, u, e);

    // idempotence
    CHECK(ns_equal(ns_union(f, f), f, kEps));
    CHECK(ns_equal(ns_intersection(f, f), f, kEps));
    // commutativity
    CHECK(ns_equal(ns_union(f, g), ns_union(g, f), kEps));
    CHECK(ns_equal(ns_intersection(f, g), ns_intersection(g, f), kEps));
    // identity / absorption with the bounds
    const NsSet null = NsSet::null_set(u, e);
    const NsSet universal = NsSet::universal_set(u, e);
    CHECK(ns_equal(ns_intersection(f, null), null, kEps));
    CHECK(ns_equal(ns_intersection(f, universal), f, kEps));
    CHECK(ns_equal(ns_union(f, null), f, kEps));
    CHECK(ns_equal(ns_union(f, universal), universal, kEps));
    // associativity
    CHECK(ns_equal(ns_union(f, ns_union(g, h)), ns_union(ns_union(f, g), h), kEps));
    CHECK(ns_equal(ns_intersection(f, ns_intersection(g, h)),
                   ns_intersection(ns_intersection(f, g), h), kEps));
    // distributivity
    CHECK(ns_equal(ns_intersection(f, ns_union(g, h)),
                   ns_union(ns_intersection(f, g), ns_intersection(f, h)), kEps));
    CHECK(ns_equal(ns_union(f, ns_intersection(g, h)),
                   ns_intersection(ns_union(f, g), ns_union(f, h)), kEps));
  }
}

TEST_CASE("complement involution is exact up to the 1-I rounding bound") {
  // T and F swap twice with no arithmetic: bitwise equal. The indeterminacy
  // passes through 1-(1-i), whose single rounding is bounded by 2^-54; assert
  // 2^-53, seven orders tighter than the equality tolerance.
  constexpr double kInvolutionBound = 0x1p-53;
  testgen::Rng rng;
  for (int k = 0; k < kPropertyCases; ++k) {
    const NsSet f = testgen::random_set(rng);
    const NsSet back = ns_complement(ns_complement(f));
    for (std::size_t p = 0; p < f.parameter_count(); ++p) {
      for (std::size_t x = 0; x < f.element_count(); ++x) {
        const Triple a = f.at(p, x), b = back.at(p, x);
        CHECK(a.t == b.t);
        CHECK(a.f == b.f);
        CHECK(std::fabs(a.i - b.i) <= kInvolutionBound);
      }
    }
  }
}

TEST_CASE("De Morgan laws, both duals, including products") {
  testgen::Rng rng;
  for (int k = 0; k < kPropertyCases; ++k) {
    const NsSet f = testgen::random_set(rng);
    const NsSet g = testgen::random_set(rng, f.universe(), f.parameters());
    CHECK(ns_equal(ns_complement(ns_union(f, g)),
                   ns_intersection(ns_complement(f), ns_complement(g)), kEps));
    CHECK(ns_equal(ns_complement(ns_intersection(f, g)),
                   ns_union(ns_complement(f), ns_complement(g)), kEps));
    CHECK(ns_equal(ns_complement(or_product(f, g)),
                   and_product(ns_complement(f), ns_complement(g)), kEps));
    CHECK(ns_equal(ns_complement(and_product(f, g)),
                   or_product(ns_complement(f), ns_complement(g)), kEps));
  }
}

TEST_CASE("all operation outputs stay inside [0,1]") {
  testgen::Rng rng;
  auto all_in_range = [](const NsSet& s) {
    for (std::size_t p = 0; p < s.parameter_count(); ++p) {
      for (std::size_t x = 0; x < s.element_count(); ++x) {
        const Triple v = s.at(p, x);  // construction revalidates the range
        if (!(v.t >= 0.0 && v.t <= 1.0 && v.i >= 0.0 && v.i <= 1.0 && v.f >= 0.0 &&
              v.f <= 1.0)) {
          return false;
        }
      }
    }
    return true;
  };
  for (int k = 0; k < kPropertyCases; ++k) {
    const NsSet f = testgen::random_set(rng);
    const NsSet g = testgen::random_set(rng, f.universe(), f.parameters());
    CHECK(all_in_range(ns_union(f, g)));
    CHECK(all_in_range(ns_intersection(f, g)));
    CHECK(all_in_range(ns_complement(f)));
    CHECK(all_in_range(ns_difference(f, g)));
    CHECK(all_in_range(or_product(f, g)));
    CHECK(all_in_range(and_product(f, g)));
  }
}
