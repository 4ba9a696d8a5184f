#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsset/triple.hpp"

namespace nsset {

/// A value printed in the reference material that contradicts its own
/// formulas; the comparison checks the computed value against `corrected`
/// instead of `printed`.
struct Erratum {
  std::string location;
  double printed = 0.0;
  double corrected = 0.0;
};

/// Reference values transcribed from printed tables, for regression
/// comparison against pipeline output. Sections are optional; only present
/// ones are compared. Vectors follow the declaration order of the inputs
/// they are compared against.
struct ReferenceFixture {
  std::string origin;  // file path or "<input>"
  double tolerance = 0.01;

  std::optional<std::vector<double>> scores;                   // c_i
  std::optional<std::vector<std::vector<double>>> normalized;  // d̂
  std::optional<std::vector<double>> weights;                  // w(e_j)
  std::map<std::string, std::vector<std::vector<double>>> compare;
  std::map<std::string, std::vector<double>> element_weights;
  std::optional<std::vector<double>> decision;  // F(x_j)
  std::optional<std::string> optimum;

  // Group pipeline sections.
  std::optional<std::vector<std::vector<double>>> mean;
  std::map<std::string, std::map<std::string, Triple>> aggregate;

  std::vector<Erratum> errata;

  const Erratum* erratum_at(const std::string& location) const;
};

/// One compared location that deviated from the printed value (or is a known
/// erratum, which is always listed).
struct FixtureFinding {
  std::string location;
  double printed = 0.0;
  double computed = 0.0;
  bool known_erratum = false;
  std::optional<double> corrected;
  bool ok = false;  // known erratum whose computed value matches corrected

  bool operator==(const FixtureFinding&) const = default;
};

struct FixtureComparison {
  std::string fixture;
  double tolerance = 0.01;
  std::vector<FixtureFinding> findings;
  std::optional<std::string> fixture_optimum;
  bool optimum_agrees = true;

  bool has_deviation_at(const std::string& location) const;
};

}  // namespace nsset
