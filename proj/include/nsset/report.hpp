#pragma once

#include <string>

#include "nsset/decision.hpp"
#include "nsset/group.hpp"
#include "nsset/maji.hpp"

namespace nsset {

/// Rounds half away from zero to `precision` decimals; the display rule for
/// all report text. Stored values keep full precision.
std::string format_fixed(double value, int precision);

/// Human-readable report, numbers at the given display precision.
std::string render_text(const DecisionReport& report, int precision = 2);
std::string render_text(const GroupDecisionReport& report, int precision = 2);
std::string render_text(const maji::PropositionReport& report);

/// Machine-readable report: JSON with full-precision values, stable key
/// order. Same inputs produce identical bytes.
std::string render_json(const DecisionReport& report);
std::string render_json(const GroupDecisionReport& report);
std::string render_json(const maji::PropositionReport& report);

}  // namespace nsset
