#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nsset/errors.hpp"
#include "nsset/fixture.hpp"

namespace nsset::detail {

/// Compares computed values against a fixture's printed ones. Known errata
/// are checked against their corrected value and always listed; everything
/// else is listed only when it deviates beyond the fixture tolerance.
class FixtureChecker {
 public:
  FixtureChecker(const ReferenceFixture& fixture, FixtureComparison& out)
      : fixture_(fixture), out_(out) {}

  void value(const std::string& location, double printed, double computed) {
    FixtureFinding finding{location, printed, computed, false, std::nullopt, false};
    if (const Erratum* erratum = fixture_.erratum_at(location)) {
      finding.known_erratum = true;
      finding.printed = erratum->printed;
      finding.corrected = erratum->corrected;
      finding.ok = std::fabs(computed - erratum->corrected) <= fixture_.tolerance;
      out_.findings.push_back(std::move(finding));
      return;
    }
    if (std::fabs(computed - printed) > fixture_.tolerance) {
      out_.findings.push_back(std::move(finding));
    }
  }

  void vector(const std::string& name, const std::vector<double>& printed,
              const std::vector<double>& computed) {
    require(printed.size() == computed.size(), name);
    for (std::size_t k = 0; k < printed.size(); ++k) {
      value(name + "[" + std::to_string(k + 1) + "]", printed[k], computed[k]);
    }
  }

  void matrix(const std::string& name, const std::vector<std::vector<double>>& printed,
              std::size_t rows, std::size_t cols, const std::vector<double>& computed) {
    require(printed.size() == rows, name);
    for (std::size_t r = 0; r < rows; ++r) {
      require(printed[r].size() == cols, name);
      for (std::size_t c = 0; c < cols; ++c) {
        value(name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]",
              printed[r][c], computed[r * cols + c]);
      }
    }
  }

 private:
  void require(bool ok, const std::string& name) const {
    if (!ok) {
      throw ValidationError(fixture_.origin + "#" + name,
                            "fixture section shape does not match the inputs");
    }
  }

  const ReferenceFixture& fixture_;
  FixtureComparison& out_;
};

}  // namespace nsset::detail
