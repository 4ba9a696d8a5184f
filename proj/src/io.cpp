#include "nsset/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "nsset/errors.hpp"

namespace nsset::io {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kNegationMark = "¬";

std::string at(std::string_view origin, const std::string& path) {
  return std::string(origin) + "#" + path;
}

/// Parses JSON rejecting duplicate object keys (nlohmann keeps the last one
/// silently, which would hide data-entry mistakes).
json parse_json(std::string_view text, std::string_view origin) {
  std::vector<std::unordered_set<std::string>> open_objects;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event,
                                   json& parsed) -> bool {
    switch (event) {
      case json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case json::parse_event_t::object_end:
        open_objects.pop_back();
        break;
      case json::parse_event_t::key: {
        auto key = parsed.get<std::string>();
        if (!open_objects.back().insert(key).second && !duplicate) duplicate = key;
        break;
      }
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(origin) + ":byte " + std::to_string(e.byte),
                     e.what());
  }
  if (duplicate) {
    throw ParseError(std::string(origin), "duplicate key '" + *duplicate + "'");
  }
  return doc;
}

void check_identifier(const std::string& id, const std::string& locus) {
  if (id.empty()) throw ValidationError(locus, "identifier is empty");
  if (id.find(',') != std::string::npos) {
    throw ValidationError(locus, "identifier '" + id + "' may not contain ','");
  }
  if (id.starts_with(kNegationMark)) {
    throw ValidationError(locus,
                          "identifier '" + id + "' may not start with '" +
                              kNegationMark + "'");
  }
}

std::vector<std::string> read_id_array(const json& doc, const char* key,
                                       std::string_view origin,
                                       bool allow_negation = false) {
  if (!doc.contains(key)) {
    throw ValidationError(at(origin, key), "missing required key");
  }
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ValidationError(at(origin, key), "expected an array");
  std::vector<std::string> ids;
  ids.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string locus = at(origin, std::string(key) + "[" + std::to_string(k) + "]");
    if (!arr[k].is_string()) throw ValidationError(locus, "expected a string");
    auto id = arr[k].get<std::string>();
    if (allow_negation && id.starts_with(kNegationMark)) {
      check_identifier(id.substr(2), locus);  // the mark is two bytes of UTF-8
    } else {
      check_identifier(id, locus);
    }
    ids.push_back(std::move(id));
  }
  return ids;
}

void reject_unknown_keys(const json& doc, std::initializer_list<const char*> known,
                         std::string_view origin) {
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ValidationError(at(origin, key), "unknown key");
  }
}

Triple read_triple(const json& value, const std::string& locus) {
  if (!value.is_array() || value.size() != 3 || !value[0].is_number() ||
      !value[1].is_number() || !value[2].is_number()) {
    throw ValidationError(locus, "expected an array of three numbers [t, i, f]");
  }
  try {
    return Triple(value[0].get<double>(), value[1].get<double>(),
                  value[2].get<double>());
  } catch (const ValidationError& e) {
    throw ValidationError(locus, e.what());
  }
}

json triple_to_json(const Triple& v) { return json::array({v.t, v.i, v.f}); }

}  // namespace

NsSet parse_ns_set(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) {
    throw ValidationError(std::string(origin), "expected a JSON object");
  }
  if (doc.contains("maji")) {
    throw ValidationError(at(origin, "maji"),
                          "this is a maji document; use the maji operations");
  }
  reject_unknown_keys(doc, {"universe", "parameters", "values"}, origin);

  Universe universe(read_id_array(doc, "universe", origin));
  ParameterSet parameters(read_id_array(doc, "parameters", origin));

  const std::size_t m = universe.size();
  std::vector<Triple> grid(parameters.size() * m, Triple::null());
  if (!doc.contains("values")) {
    throw ValidationError(at(origin, "values"), "missing required key");
  }
  const json& values = doc.at("values");
  if (!values.is_object()) {
    throw ValidationError(at(origin, "values"), "expected an object");
  }
  for (const auto& [pname, row] : values.items()) {
    const auto p = parameters.index_of(pname);
    if (!p) {
      throw ValidationError(at(origin, "values." + pname),
                            "parameter not declared in 'parameters'");
    }
    if (!row.is_object()) {
      throw ValidationError(at(origin, "values." + pname), "expected an object");
    }
    for (const auto& [xname, entry] : row.items()) {
      const auto x = universe.index_of(xname);
      if (!x) {
        throw ValidationError(at(origin, "values." + pname + "." + xname),
                              "element not declared in 'universe'");
      }
      grid[*p * m + *x] =
          read_triple(entry, at(origin, "values." + pname + "." + xname));
    }
  }
  return NsSet(std::move(universe), std::move(parameters), std::move(grid));
}

std::string serialize_ns_set(const NsSet& f) {
  json doc;
  doc["universe"] = f.universe().elements();
  doc["parameters"] = f.parameters().parameters();
  json values = json::object();
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    json row = json::object();
    for (std::size_t x = 0; x < f.element_count(); ++x) {
      const Triple v = f.at(p, x);
      if (v == Triple::null()) continue;  // absent entries are omitted
      row[f.universe().at(x)] = triple_to_json(v);
    }
    if (!row.empty()) values[f.parameters().at(p)] = std::move(row);
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

maji::MajiNsSet parse_maji(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) {
    throw ValidationError(std::string(origin), "expected a JSON object");
  }
  if (!doc.contains("maji") || !doc.at("maji").is_boolean() ||
      !doc.at("maji").get<bool>()) {
    throw ValidationError(at(origin, "maji"),
                          "maji documents must carry \"maji\": true");
  }
  reject_unknown_keys(doc, {"maji", "universe", "parameters", "values"}, origin);

  Universe universe(read_id_array(doc, "universe", origin));
  std::vector<std::string> names =
      read_id_array(doc, "parameters", origin, /*allow_negation=*/true);
  std::vector<maji::Parameter> parameters;
  parameters.reserve(names.size());
  for (auto& name : names) {
    if (name.starts_with(kNegationMark)) {
      parameters.push_back(maji::Parameter{name.substr(2), true});
    } else {
      parameters.push_back(maji::Parameter{std::move(name), false});
    }
  }

  const std::size_t m = universe.size();
  std::vector<Triple> grid(parameters.size() * m);
  if (!doc.contains("values")) {
    throw ValidationError(at(origin, "values"), "missing required key");
  }
  const json& values = doc.at("values");
  if (!values.is_object()) {
    throw ValidationError(at(origin, "values"), "expected an object");
  }
  // Maji grids are total on A x X: every entry must be present.
  for (std::size_t p = 0; p < parameters.size(); ++p) {
    const std::string pname = maji::display_name(parameters[p]);
    if (!values.contains(pname)) {
      throw ValidationError(at(origin, "values"),
                            "missing values for parameter '" + pname + "'");
    }
    const json& row = values.at(pname);
    if (!row.is_object()) {
      throw ValidationError(at(origin, "values." + pname), "expected an object");
    }
    for (std::size_t x = 0; x < m; ++x) {
      const std::string& xname = universe.at(x);
      if (!row.contains(xname)) {
        throw ValidationError(at(origin, "values." + pname),
                              "missing entry for element '" + xname + "'");
      }
      grid[p * m + x] =
          read_triple(row.at(xname), at(origin, "values." + pname + "." + xname));
    }
    if (row.size() != m) {
      throw ValidationError(at(origin, "values." + pname),
                            "contains entries outside the universe");
    }
  }
  for (const auto& [pname, row] : values.items()) {
    bool declared = false;
    for (const auto& p : parameters) declared = declared || maji::display_name(p) == pname;
    if (!declared) {
      throw ValidationError(at(origin, "values." + pname),
                            "parameter not declared in 'parameters'");
    }
  }
  return maji::MajiNsSet(std::move(universe), std::move(parameters), std::move(grid));
}

std::string serialize_maji(const maji::MajiNsSet& h) {
  json doc;
  doc["maji"] = true;
  doc["universe"] = h.universe().elements();
  json names = json::array();
  for (const auto& p : h.parameters()) names.push_back(maji::display_name(p));
  doc["parameters"] = std::move(names);
  json values = json::object();
  for (std::size_t p = 0; p < h.parameter_count(); ++p) {
    json row = json::object();
    for (std::size_t x = 0; x < h.element_count(); ++x) {
      row[h.universe().at(x)] = triple_to_json(h.at(p, x));
    }
    values[maji::display_name(h.parameters()[p])] = std::move(row);
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

// --- Saaty CSV ---------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, const std::string& locus) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(locus, "malformed number '" + std::string(field) + "'");
  }
  return value;
}

/// Decimal or fraction literal "a/b" (reciprocals such as 1/3, 1/5).
double parse_entry(std::string_view field, const std::string& locus) {
  if (field.empty()) throw ParseError(locus, "empty entry");
  const std::size_t slash = field.find('/');
  if (slash == std::string_view::npos) return parse_number(field, locus);
  const double numerator = parse_number(trim(field.substr(0, slash)), locus);
  const double denominator = parse_number(trim(field.substr(slash + 1)), locus);
  if (denominator == 0.0) throw ParseError(locus, "fraction with zero denominator");
  return numerator / denominator;
}

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

SaatyParseResult parse_saaty_csv(std::string_view text, std::string_view origin,
                                 const SaatyParseOptions& options) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(std::string(origin) + ":1", "empty document");

  auto line_locus = [&](std::size_t k) {
    return std::string(origin) + ":" + std::to_string(k + 1);
  };

  std::vector<std::string> ids;
  for (const auto field : split_csv(lines[0])) {
    std::string id(field);
    check_identifier(id, line_locus(0));
    ids.push_back(std::move(id));
  }
  const std::size_t n = ids.size();
  if (lines.size() != n + 1) {
    throw ParseError(line_locus(lines.size() - 1),
                     "expected " + std::to_string(n) + " rows after the header, got " +
                         std::to_string(lines.size() - 1));
  }

  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto fields = split_csv(lines[r + 1]);
    if (fields.size() != n) {
      throw ParseError(line_locus(r + 1),
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(fields.size()));
    }
    for (const auto field : fields) {
      entries.push_back(parse_entry(field, line_locus(r + 1)));
    }
  }

  ParameterSet parameters(std::move(ids));
  SaatyMatrix matrix = [&] {
    try {
      return SaatyMatrix(std::move(parameters), std::move(entries));
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(origin), e.what());
    }
  }();

  std::vector<Diagnostic> warnings;
  for (const auto& violation : matrix.reciprocity_violations(options.reciprocity_eps)) {
    const std::string message =
        "entries (" + std::to_string(violation.row + 1) + "," +
        std::to_string(violation.col + 1) + ") and (" +
        std::to_string(violation.col + 1) + "," + std::to_string(violation.row + 1) +
        ") are not reciprocal (product " + number_text(violation.product) + ")";
    if (options.strict_reciprocity) {
      throw ValidationError(std::string(origin), message);
    }
    warnings.push_back({std::string(origin), message});
  }
  for (const std::size_t k : matrix.off_scale_entries()) {
    const std::size_t r = k / matrix.size(), c = k % matrix.size();
    if (r == c) continue;
    warnings.push_back({std::string(origin),
                        "entry (" + std::to_string(r + 1) + "," +
                            std::to_string(c + 1) + ") = " +
                            number_text(matrix.entries()[k]) +
                            " is not on the Saaty scale (advisory)"});
  }
  return SaatyParseResult{std::move(matrix), std::move(warnings)};
}

// --- panel -------------------------------------------------------------------

Panel load_panel(const std::filesystem::path& config_path,
                 const SaatyParseOptions& options) {
  const std::string origin = config_path.string();
  const json doc = parse_json(read_file(config_path), origin);
  if (!doc.is_object()) throw ValidationError(origin, "expected a JSON object");
  reject_unknown_keys(doc, {"makers"}, origin);
  if (!doc.contains("makers") || !doc.at("makers").is_array()) {
    throw ValidationError(at(origin, "makers"), "missing required array");
  }
  const json& makers = doc.at("makers");
  if (makers.empty()) throw EmptyPanelError(at(origin, "makers"));

  const std::filesystem::path base = config_path.parent_path();
  Panel panel;
  std::unordered_set<std::string> seen_ids;
  for (std::size_t k = 0; k < makers.size(); ++k) {
    const std::string locus = at(origin, "makers[" + std::to_string(k) + "]");
    const json& maker = makers[k];
    if (!maker.is_object()) throw ValidationError(locus, "expected an object");
    reject_unknown_keys(maker, {"id", "nsset", "saaty"}, locus);
    for (const char* key : {"id", "nsset", "saaty"}) {
      if (!maker.contains(key) || !maker.at(key).is_string()) {
        throw ValidationError(locus + "." + key, "missing required string");
      }
    }
    auto id = maker.at("id").get<std::string>();
    if (id.empty()) throw ValidationError(locus + ".id", "identifier is empty");
    if (!seen_ids.insert(id).second) {
      throw ValidationError(locus + ".id", "duplicate maker id '" + id + "'");
    }
    const auto ns_path = base / maker.at("nsset").get<std::string>();
    const auto saaty_path = base / maker.at("saaty").get<std::string>();
    NsSet ns_set = parse_ns_set(read_file(ns_path), ns_path.string());
    SaatyParseResult saaty =
        parse_saaty_csv(read_file(saaty_path), saaty_path.string(), options);
    for (auto& warning : saaty.warnings) panel.warnings.push_back(std::move(warning));
    panel.makers.push_back(
        DecisionMakerInput{std::move(id), std::move(ns_set), std::move(saaty.matrix)});
  }

  // Validated at assembly: one universe and one parameter set per panel.
  const auto& first = panel.makers.front();
  for (const auto& maker : panel.makers) {
    if (!(maker.ns_set.universe() == first.ns_set.universe()) ||
        !(maker.ns_set.parameters() == first.ns_set.parameters())) {
      throw DomainMismatchError("maker '" + maker.id + "' uses a different domain than '" +
                                first.id + "'");
    }
    if (!(maker.saaty.parameters() == maker.ns_set.parameters())) {
      throw DomainMismatchError("maker '" + maker.id +
                                "' has mismatched ns-set and matrix parameter sets");
    }
  }
  return panel;
}

// --- fixture -----------------------------------------------------------------

namespace {

std::vector<double> read_number_array(const json& value, const std::string& locus) {
  if (!value.is_array()) throw ValidationError(locus, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (const auto& v : value) {
    if (!v.is_number()) throw ValidationError(locus, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> read_number_matrix(const json& value,
                                                    const std::string& locus) {
  if (!value.is_array()) throw ValidationError(locus, "expected an array of rows");
  std::vector<std::vector<double>> out;
  out.reserve(value.size());
  for (std::size_t r = 0; r < value.size(); ++r) {
    out.push_back(read_number_array(value[r], locus + "[" + std::to_string(r) + "]"));
  }
  return out;
}

}  // namespace

ReferenceFixture parse_fixture(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) {
    throw ValidationError(std::string(origin), "expected a JSON object");
  }
  reject_unknown_keys(doc,
                      {"tolerance", "scores", "normalized", "weights", "compare",
                       "element_weights", "decision", "optimum", "mean", "aggregate",
                       "errata"},
                      origin);

  ReferenceFixture fixture;
  fixture.origin = std::string(origin);
  if (doc.contains("tolerance")) {
    if (!doc.at("tolerance").is_number() || doc.at("tolerance").get<double>() <= 0.0) {
      throw ValidationError(at(origin, "tolerance"), "expected a positive number");
    }
    fixture.tolerance = doc.at("tolerance").get<double>();
  }
  if (doc.contains("scores")) {
    fixture.scores = read_number_array(doc.at("scores"), at(origin, "scores"));
  }
  if (doc.contains("normalized")) {
    fixture.normalized =
        read_number_matrix(doc.at("normalized"), at(origin, "normalized"));
  }
  if (doc.contains("weights")) {
    fixture.weights = read_number_array(doc.at("weights"), at(origin, "weights"));
  }
  if (doc.contains("compare")) {
    const json& compare = doc.at("compare");
    if (!compare.is_object()) {
      throw ValidationError(at(origin, "compare"), "expected an object");
    }
    for (const auto& [parameter, matrix] : compare.items()) {
      fixture.compare[parameter] =
          read_number_matrix(matrix, at(origin, "compare." + parameter));
    }
  }
  if (doc.contains("element_weights")) {
    const json& ew = doc.at("element_weights");
    if (!ew.is_object()) {
      throw ValidationError(at(origin, "element_weights"), "expected an object");
    }
    for (const auto& [parameter, weights] : ew.items()) {
      fixture.element_weights[parameter] =
          read_number_array(weights, at(origin, "element_weights." + parameter));
    }
  }
  if (doc.contains("decision")) {
    fixture.decision = read_number_array(doc.at("decision"), at(origin, "decision"));
  }
  if (doc.contains("optimum")) {
    if (!doc.at("optimum").is_string()) {
      throw ValidationError(at(origin, "optimum"), "expected a string");
    }
    fixture.optimum = doc.at("optimum").get<std::string>();
  }
  if (doc.contains("mean")) {
    fixture.mean = read_number_matrix(doc.at("mean"), at(origin, "mean"));
  }
  if (doc.contains("aggregate")) {
    const json& aggregate = doc.at("aggregate");
    if (!aggregate.is_object()) {
      throw ValidationError(at(origin, "aggregate"), "expected an object");
    }
    for (const auto& [parameter, row] : aggregate.items()) {
      if (!row.is_object()) {
        throw ValidationError(at(origin, "aggregate." + parameter),
                              "expected an object");
      }
      for (const auto& [element, entry] : row.items()) {
        fixture.aggregate[parameter][element] =
            read_triple(entry, at(origin, "aggregate." + parameter + "." + element));
      }
    }
  }
  if (doc.contains("errata")) {
    const json& errata = doc.at("errata");
    if (!errata.is_array()) {
      throw ValidationError(at(origin, "errata"), "expected an array");
    }
    for (std::size_t k = 0; k < errata.size(); ++k) {
      const std::string locus = at(origin, "errata[" + std::to_string(k) + "]");
      const json& entry = errata[k];
      if (!entry.is_object()) throw ValidationError(locus, "expected an object");
      reject_unknown_keys(entry, {"location", "printed", "corrected"}, locus);
      if (!entry.contains("location") || !entry.at("location").is_string() ||
          !entry.contains("printed") || !entry.at("printed").is_number() ||
          !entry.contains("corrected") || !entry.at("corrected").is_number()) {
        throw ValidationError(locus, "expected {location, printed, corrected}");
      }
      fixture.errata.push_back(Erratum{entry.at("location").get<std::string>(),
                                       entry.at("printed").get<double>(),
                                       entry.at("corrected").get<double>()});
    }
  }
  return fixture;
}

// --- files --------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) throw IoError("cannot read '" + path.string() + "'");
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot write '" + path.string() + "'");
  stream.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!stream) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace nsset::io
