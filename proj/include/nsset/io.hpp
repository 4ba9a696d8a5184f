#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nsset/fixture.hpp"
#include "nsset/group.hpp"
#include "nsset/maji.hpp"
#include "nsset/ns_set.hpp"
#include "nsset/saaty.hpp"

namespace nsset::io {

/// Non-fatal advisory attached to a parsed document.
struct Diagnostic {
  std::string locus;
  std::string message;
};

// ---------------------------------------------------------------------------
// ns-set documents: JSON with "universe", "parameters" and a nested
// "values" map parameter -> element -> [t, i, f]. Omitted pairs mean the
// absent entry (0,1,1); (0,1,1) entries are omitted when serializing.
// Identifiers may not contain ',' (the product-pair delimiter) or start
// with '¬' (the Maji negation marker).
// ---------------------------------------------------------------------------

NsSet parse_ns_set(std::string_view text, std::string_view origin = "<input>");

/// Canonical form: declaration order, absent entries omitted, two-space
/// indentation, shortest round-trip number rendering. serialize ∘ parse is
/// the identity on values and a byte-level fixpoint.
std::string serialize_ns_set(const NsSet& f);

// Maji documents: same shape plus "maji": true; negated parameters carry a
// "¬" prefix; the grid must be complete (Maji's null is (0,0,0), so nothing
// is omitted).
maji::MajiNsSet parse_maji(std::string_view text, std::string_view origin = "<input>");
std::string serialize_maji(const maji::MajiNsSet& h);

// ---------------------------------------------------------------------------
// Saaty matrices: CSV with a parameter-id header row and n rows of n
// entries; entries are decimals or fraction literals "a/b".
// ---------------------------------------------------------------------------

struct SaatyParseResult {
  SaatyMatrix matrix;
  std::vector<Diagnostic> warnings;  // reciprocity / off-scale advisories
};

struct SaatyParseOptions {
  /// Escalate reciprocity violations from warning to error.
  bool strict_reciprocity = false;
  double reciprocity_eps = 1e-9;
};

SaatyParseResult parse_saaty_csv(std::string_view text,
                                 std::string_view origin = "<input>",
                                 const SaatyParseOptions& options = {});

// ---------------------------------------------------------------------------
// Panel configuration: JSON {"makers": [{"id", "nsset", "saaty"}...]} with
// paths resolved relative to the config file.
// ---------------------------------------------------------------------------

struct Panel {
  std::vector<DecisionMakerInput> makers;
  std::vector<Diagnostic> warnings;
};

Panel load_panel(const std::filesystem::path& config_path,
                 const SaatyParseOptions& options = {});

ReferenceFixture parse_fixture(std::string_view text,
                               std::string_view origin = "<input>");

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace nsset::io
