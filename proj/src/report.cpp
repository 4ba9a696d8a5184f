#include "nsset/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "nsset/errors.hpp"

namespace nsset {

using json = nlohmann::ordered_json;

std::string format_fixed(double value, int precision) {
  if (precision < 0 || precision > 12) {
    throw InternalError("display precision out of range");
  }
  double scale = 1.0;
  for (int k = 0; k < precision; ++k) scale *= 10.0;
  const long long scaled = std::llround(std::fabs(value) * scale);
  const long long whole = scaled / static_cast<long long>(scale);
  const long long frac = scaled % static_cast<long long>(scale);
  std::string out = (value < 0 && scaled != 0) ? "-" : "";
  out += std::to_string(whole);
  if (precision > 0) {
    std::string digits = std::to_string(frac);
    out += "." + std::string(precision - digits.size(), '0') + digits;
  }
  return out;
}

namespace {

// Column-aligned table rendering; every cell already formatted.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void emit(std::ostringstream& out, const std::string& indent) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      if (widths.size() < row.size()) widths.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    for (const auto& row : rows_) {
      out << indent;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << "  ";
        out << std::string(widths[c] - row[c].size(), ' ') << row[c];
      }
      out << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit_matrix(std::ostringstream& out, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels,
                 const std::vector<double>& entries, int precision) {
  Table table;
  std::vector<std::string> header{""};
  header.insert(header.end(), col_labels.begin(), col_labels.end());
  table.row(std::move(header));
  const std::size_t cols = col_labels.size();
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    std::vector<std::string> cells{row_labels[r]};
    for (std::size_t c = 0; c < cols; ++c) {
      cells.push_back(format_fixed(entries[r * cols + c], precision));
    }
    table.row(std::move(cells));
  }
  table.emit(out, "  ");
}

void emit_fixture(std::ostringstream& out, const FixtureComparison& fixture,
                  int precision) {
  out << "fixture comparison: " << fixture.fixture << " (tolerance "
      << format_fixed(fixture.tolerance, precision) << ")\n";
  if (fixture.findings.empty()) {
    out << "  all compared values within tolerance\n";
  }
  for (const auto& finding : fixture.findings) {
    out << "  ";
    if (finding.known_erratum) {
      out << "known erratum " << finding.location << ": printed "
          << format_fixed(finding.printed, precision) << ", computed "
          << format_fixed(finding.computed, precision) << ", corrected "
          << format_fixed(*finding.corrected, precision)
          << (finding.ok ? " (computed matches corrected)"
                         : " (computed DOES NOT match corrected)");
    } else {
      out << "deviation " << finding.location << ": printed "
          << format_fixed(finding.printed, precision) << ", computed "
          << format_fixed(finding.computed, precision);
    }
    out << "\n";
  }
  if (fixture.fixture_optimum) {
    out << "  fixture optimum: " << *fixture.fixture_optimum
        << (fixture.optimum_agrees ? " (agrees with computed optimum)"
                                   : " (computed optimum differs)")
        << "\n";
  }
}

void emit_triple_grid(std::ostringstream& out, const NsSet& f, int precision) {
  Table table;
  std::vector<std::string> header{""};
  for (const auto& x : f.universe().elements()) header.push_back(x);
  table.row(std::move(header));
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    std::vector<std::string> cells{f.parameters().at(p)};
    for (std::size_t x = 0; x < f.element_count(); ++x) {
      const Triple v = f.at(p, x);
      cells.push_back("<" + format_fixed(v.t, precision) + "," +
                      format_fixed(v.i, precision) + "," +
                      format_fixed(v.f, precision) + ">");
    }
    table.row(std::move(cells));
  }
  table.emit(out, "  ");
}

void emit_decision_body(std::ostringstream& out, const DecisionReport& report,
                        int precision) {
  const auto& params = report.ns_set.parameters().parameters();
  const auto& elements = report.ns_set.universe().elements();

  out << "row scores c:\n";
  Table scores;
  for (std::size_t k = 0; k < params.size(); ++k) {
    scores.row({params[k], format_fixed(report.scores[k], precision)});
  }
  scores.emit(out, "  ");

  out << "normalized matrix:\n";
  emit_matrix(out, params, params, report.normalized.entries, precision);

  out << "parameter weights:\n";
  Table weights;
  for (std::size_t k = 0; k < params.size(); ++k) {
    weights.row({params[k], format_fixed(report.weights.weights[k], precision)});
  }
  weights.emit(out, "  ");

  for (std::size_t p = 0; p < params.size(); ++p) {
    out << "compare matrix [" << params[p] << "]:\n";
    emit_matrix(out, elements, elements, report.compare[p].entries, precision);
    out << "element weights [" << params[p] << "]:\n";
    Table ew;
    for (std::size_t x = 0; x < elements.size(); ++x) {
      ew.row({elements[x], format_fixed(report.element_weights[p][x], precision)});
    }
    ew.emit(out, "  ");
  }

  out << "decision set:\n";
  Table decision;
  for (std::size_t x = 0; x < elements.size(); ++x) {
    decision.row({elements[x], format_fixed(report.decision.scores[x], precision)});
  }
  decision.emit(out, "  ");
  out << "optimal decision: " << report.decision.optimum << "\n";

  if (report.fixture) emit_fixture(out, *report.fixture, precision);
}

json ns_set_values_json(const NsSet& f) {
  json values = json::object();
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    json row = json::object();
    for (std::size_t x = 0; x < f.element_count(); ++x) {
      const Triple v = f.at(p, x);
      if (v == Triple::null()) continue;
      row[f.universe().at(x)] = json::array({v.t, v.i, v.f});
    }
    if (!row.empty()) values[f.parameters().at(p)] = std::move(row);
  }
  return values;
}

json matrix_json(const std::vector<double>& entries, std::size_t rows,
                 std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(entries[r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

json fixture_json(const FixtureComparison& fixture) {
  json out;
  out["path"] = fixture.fixture;
  out["tolerance"] = fixture.tolerance;
  json findings = json::array();
  for (const auto& finding : fixture.findings) {
    json entry;
    entry["location"] = finding.location;
    entry["printed"] = finding.printed;
    entry["computed"] = finding.computed;
    entry["known_erratum"] = finding.known_erratum;
    if (finding.corrected) entry["corrected"] = *finding.corrected;
    entry["ok"] = finding.ok;
    findings.push_back(std::move(entry));
  }
  out["findings"] = std::move(findings);
  if (fixture.fixture_optimum) {
    out["optimum"] = *fixture.fixture_optimum;
    out["optimum_agrees"] = fixture.optimum_agrees;
  }
  return out;
}

json decision_body_json(const DecisionReport& report) {
  const std::size_t n = report.ns_set.parameter_count();
  const std::size_t m = report.ns_set.element_count();
  json out;
  out["universe"] = report.ns_set.universe().elements();
  out["parameters"] = report.ns_set.parameters().parameters();
  out["ns_set"] = ns_set_values_json(report.ns_set);
  out["saaty"] = matrix_json(report.saaty.entries(), n, n);
  out["row_scores"] = report.scores;
  out["normalized"] = matrix_json(report.normalized.entries, n, n);
  out["weights"] = report.weights.weights;
  json compare = json::object();
  json element_weights = json::object();
  for (std::size_t p = 0; p < n; ++p) {
    const auto& name = report.ns_set.parameters().at(p);
    compare[name] = matrix_json(report.compare[p].entries, m, m);
    element_weights[name] = report.element_weights[p];
  }
  out["compare"] = std::move(compare);
  out["element_weights"] = std::move(element_weights);
  json decision = json::object();
  for (std::size_t x = 0; x < m; ++x) {
    decision[report.ns_set.universe().at(x)] = report.decision.scores[x];
  }
  out["decision"] = std::move(decision);
  out["optimum"] = report.decision.optimum;
  if (report.fixture) out["fixture"] = fixture_json(*report.fixture);
  return out;
}

}  // namespace

std::string render_text(const DecisionReport& report, int precision) {
  std::ostringstream out;
  out << "== decision report ==\n";
  out << "universe:";
  for (const auto& x : report.ns_set.universe().elements()) out << " " << x;
  out << "\nparameters:";
  for (const auto& e : report.ns_set.parameters().parameters()) out << " " << e;
  out << "\n";
  out << "input ns-set:\n";
  emit_triple_grid(out, report.ns_set, precision);
  out << "relative parameter matrix:\n";
  emit_matrix(out, report.ns_set.parameters().parameters(),
              report.ns_set.parameters().parameters(), report.saaty.entries(),
              precision);
  emit_decision_body(out, report, precision);
  return std::move(out).str();
}

std::string render_text(const GroupDecisionReport& report, int precision) {
  std::ostringstream out;
  out << "== group decision report ==\n";
  out << "decision makers:";
  for (const auto& maker : report.makers) out << " " << maker.id;
  out << "\nuniverse:";
  for (const auto& x : report.aggregate.universe().elements()) out << " " << x;
  out << "\nparameters:";
  for (const auto& e : report.aggregate.parameters().parameters()) out << " " << e;
  out << "\n";

  const auto& params = report.mean.parameters.parameters();
  for (const auto& maker : report.makers) {
    out << "maker " << maker.id << " ns-set:\n";
    emit_triple_grid(out, maker.ns_set, precision);
    out << "maker " << maker.id << " relative parameter matrix:\n";
    emit_matrix(out, params, params, maker.saaty.entries(), precision);
  }
  out << "arithmetic mean matrix:\n";
  emit_matrix(out, params, params, report.mean.entries, precision);

  out << "aggregate ns-set (intersection across makers):\n";
  Table aggregate;
  {
    std::vector<std::string> header{""};
    for (const auto& x : report.aggregate.universe().elements()) header.push_back(x);
    aggregate.row(std::move(header));
    for (std::size_t p = 0; p < report.aggregate.parameter_count(); ++p) {
      std::vector<std::string> cells{params[p]};
      for (std::size_t x = 0; x < report.aggregate.element_count(); ++x) {
        const Triple v = report.aggregate.at(p, x);
        cells.push_back("<" + format_fixed(v.t, precision) + "," +
                        format_fixed(v.i, precision) + "," +
                        format_fixed(v.f, precision) + ">");
      }
      aggregate.row(std::move(cells));
    }
  }
  aggregate.emit(out, "  ");

  emit_decision_body(out, report.decision, precision);
  return std::move(out).str();
}

std::string render_text(const maji::PropositionReport& report) {
  std::ostringstream out;
  out << "== maji proposition report ==\n";
  out << "random trials per proposition: " << report.random_trials
      << " (seed " << report.seed << ")\n";
  for (const auto& finding : report.findings) {
    out << (finding.holds ? "HOLDS " : "FAILS ") << finding.id << "  "
        << finding.statement << "\n";
    if (!finding.holds) out << "      witness: " << finding.witness << "\n";
  }
  return std::move(out).str();
}

std::string render_json(const DecisionReport& report) {
  json out;
  out["kind"] = "decision";
  out.update(decision_body_json(report));
  return out.dump(2) + "\n";
}

std::string render_json(const GroupDecisionReport& report) {
  json out;
  out["kind"] = "group-decision";
  const std::size_t n = report.mean.parameters.size();
  json makers = json::array();
  for (const auto& maker : report.makers) {
    json entry;
    entry["id"] = maker.id;
    entry["ns_set"] = ns_set_values_json(maker.ns_set);
    entry["saaty"] = matrix_json(maker.saaty.entries(), n, n);
    makers.push_back(std::move(entry));
  }
  out["makers"] = std::move(makers);
  out["mean"] = matrix_json(report.mean.entries, n, n);
  out["aggregate"] = ns_set_values_json(report.aggregate);
  out.update(decision_body_json(report.decision));
  return out.dump(2) + "\n";
}

std::string render_json(const maji::PropositionReport& report) {
  json out;
  out["kind"] = "maji-propositions";
  out["random_trials"] = report.random_trials;
  out["seed"] = report.seed;
  json propositions = json::array();
  for (const auto& finding : report.findings) {
    json entry;
    entry["id"] = finding.id;
    entry["statement"] = finding.statement;
    entry["holds"] = finding.holds;
    if (!finding.holds) entry["witness"] = finding.witness;
    propositions.push_back(std::move(entry));
  }
  out["propositions"] = std::move(propositions);
  return out.dump(2) + "\n";
}

}  // namespace nsset
