#include "nsset/cli.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsset/decision.hpp"
#include "nsset/errors.hpp"
#include "nsset/group.hpp"
#include "nsset/io.hpp"
#include "nsset/maji.hpp"
#include "nsset/ns_set.hpp"
#include "nsset/report.hpp"

namespace nsset::cli {
namespace {

void emit_warnings(const std::vector<io::Diagnostic>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w.locus << ": " << w.message << "\n";
}

void write_result(const std::string& content, const std::string& output_path,
                  std::ostream& out) {
  if (output_path.empty()) {
    out << content;
  } else {
    io::write_file(output_path, content);
  }
}

std::string detect_type(const std::filesystem::path& path, const std::string& text) {
  if (path.extension() == ".csv") return "saaty";
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.is_object()) {
      if (doc.contains("makers")) return "panel";
      if (doc.contains("maji")) return "maji";
      if (doc.contains("values") || doc.contains("universe")) return "nsset";
    }
  } catch (const nlohmann::json::parse_error&) {
    return "saaty";
  }
  throw ValidationError(path.string(), "cannot determine document type");
}

int do_validate(const std::string& file, std::string type, bool strict,
                std::ostream& out, std::ostream& err) {
  const std::filesystem::path path(file);
  const std::string text = io::read_file(path);
  if (type == "auto") type = detect_type(path, text);

  io::SaatyParseOptions options;
  options.strict_reciprocity = strict;
  if (type == "nsset") {
    io::parse_ns_set(text, file);
  } else if (type == "maji") {
    io::parse_maji(text, file);
  } else if (type == "saaty") {
    emit_warnings(io::parse_saaty_csv(text, file, options).warnings, err);
  } else if (type == "panel") {
    emit_warnings(io::load_panel(path, options).warnings, err);
  } else {
    throw ValidationError("--type", "unknown document type '" + type + "'");
  }
  out << file << ": valid " << type << " document\n";
  return kExitOk;
}

int do_op(const std::string& op, const std::vector<std::string>& files,
          const std::string& output, const std::string& format, std::ostream& out,
          std::ostream& err) {
  auto expect_files = [&](std::size_t n) {
    if (files.size() != n) {
      throw ValidationError("op " + op,
                            "expects " + std::to_string(n) + " file argument(s), got " +
                                std::to_string(files.size()));
    }
  };
  auto load_ns = [&](std::size_t k) {
    return io::parse_ns_set(io::read_file(files[k]), files[k]);
  };
  auto load_maji = [&](std::size_t k) {
    return io::parse_maji(io::read_file(files[k]), files[k]);
  };
  // Domain mismatches name the offending files.
  auto with_locus = [&](auto&& compute) -> decltype(compute()) {
    try {
      return compute();
    } catch (const DomainMismatchError& e) {
      std::string locus;
      for (const auto& file : files) locus += (locus.empty() ? "" : ", ") + file;
      throw DomainMismatchError(locus + ": " + e.what());
    }
  };

  if (op == "union" || op == "intersection" || op == "difference" || op == "and" ||
      op == "or") {
    expect_files(2);
    const NsSet result = with_locus([&] {
      const NsSet f = load_ns(0);
      const NsSet g = load_ns(1);
      return op == "union"          ? ns_union(f, g)
             : op == "intersection" ? ns_intersection(f, g)
             : op == "difference"   ? ns_difference(f, g)
             : op == "and"          ? and_product(f, g)
                                    : or_product(f, g);
    });
    write_result(io::serialize_ns_set(result), output, out);
    return kExitOk;
  }
  if (op == "complement") {
    expect_files(1);
    write_result(io::serialize_ns_set(ns_complement(load_ns(0))), output, out);
    return kExitOk;
  }
  if (op == "maji-union" || op == "maji-intersection") {
    expect_files(2);
    const maji::MajiNsSet result = with_locus([&] {
      const maji::MajiNsSet h = load_maji(0);
      const maji::MajiNsSet g = load_maji(1);
      return op == "maji-union" ? maji::union_of(h, g) : maji::intersection_of(h, g);
    });
    write_result(io::serialize_maji(result), output, out);
    return kExitOk;
  }
  if (op == "maji-complement") {
    expect_files(1);
    write_result(io::serialize_maji(maji::complement_of(load_maji(0))), output, out);
    return kExitOk;
  }
  if (op == "verify-maji") {
    expect_files(0);
    const maji::PropositionReport report = maji::verify_propositions();
    write_result(format == "structured" ? render_json(report) : render_text(report),
                 output, out);
    return kExitOk;
  }
  (void)err;
  throw ValidationError("op", "unknown operation '" + op + "'");
}

int do_decide(const std::string& nsset_path, const std::string& saaty_path,
              const std::string& fixture_path, const std::string& format,
              int precision, bool strict, std::ostream& out, std::ostream& err) {
  const NsSet f = io::parse_ns_set(io::read_file(nsset_path), nsset_path);
  io::SaatyParseOptions options;
  options.strict_reciprocity = strict;
  io::SaatyParseResult saaty =
      io::parse_saaty_csv(io::read_file(saaty_path), saaty_path, options);
  emit_warnings(saaty.warnings, err);

  DecisionReport report = [&] {
    try {
      return decide(f, saaty.matrix);
    } catch (const DomainMismatchError& e) {
      throw DomainMismatchError(nsset_path + ", " + saaty_path + ": " + e.what());
    }
  }();
  if (!fixture_path.empty()) {
    apply_fixture(report, io::parse_fixture(io::read_file(fixture_path), fixture_path));
  }
  out << (format == "structured" ? render_json(report) : render_text(report, precision));
  return kExitOk;
}

int do_group_decide(const std::string& panel_path, const std::string& fixture_path,
                    const std::string& format, int precision, bool strict,
                    std::ostream& out, std::ostream& err) {
  io::SaatyParseOptions options;
  options.strict_reciprocity = strict;
  io::Panel panel = [&] {
    try {
      return io::load_panel(panel_path, options);
    } catch (const DomainMismatchError& e) {
      throw DomainMismatchError(panel_path + ": " + e.what());
    }
  }();
  emit_warnings(panel.warnings, err);

  GroupDecisionReport report = group_decide(panel.makers);
  if (!fixture_path.empty()) {
    apply_fixture(report, io::parse_fixture(io::read_file(fixture_path), fixture_path));
  }
  out << (format == "structured" ? render_json(report) : render_text(report, precision));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"neutrosophic soft set algebra and decision making"};
  app.require_subcommand(1);

  std::string validate_file, validate_type = "auto";
  bool validate_strict = false;
  CLI::App* validate = app.add_subcommand("validate", "check a document, exit 0/1");
  validate->add_option("file", validate_file, "document to check")->required();
  validate->add_option("--type", validate_type, "document type")
      ->check(CLI::IsMember({"auto", "nsset", "maji", "saaty", "panel"}));
  validate->add_flag("--strict-reciprocity", validate_strict,
                     "treat reciprocity violations as errors");

  std::string op_name, op_output, op_format = "text";
  std::vector<std::string> op_files;
  CLI::App* op = app.add_subcommand("op", "apply a set operation to documents");
  op->add_option("operation", op_name, "operation name")
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "complement", "difference",
                             "and", "or", "maji-union", "maji-intersection",
                             "maji-complement", "verify-maji"}));
  op->add_option("files", op_files, "input documents");
  op->add_option("-o,--output", op_output, "write the result to a file");
  op->add_option("--format", op_format, "verify-maji report format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string decide_nsset, decide_saaty, decide_fixture, decide_format = "text";
  int decide_precision = 2;
  bool decide_strict = false;
  CLI::App* decide_cmd = app.add_subcommand("decide", "single decision maker ranking");
  decide_cmd->add_option("--nsset", decide_nsset, "ns-set document")->required();
  decide_cmd->add_option("--saaty", decide_saaty, "relative parameter matrix CSV")
      ->required();
  decide_cmd->add_option("--fixture", decide_fixture, "reference fixture to compare");
  decide_cmd->add_option("--format", decide_format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  decide_cmd->add_option("--precision", decide_precision, "display decimals")
      ->check(CLI::Range(0, 12));
  decide_cmd->add_flag("--strict-reciprocity", decide_strict,
                       "treat reciprocity violations as errors");

  std::string group_panel, group_fixture, group_format = "text";
  int group_precision = 2;
  bool group_strict = false;
  CLI::App* group_cmd = app.add_subcommand("group-decide", "decision maker panel ranking");
  group_cmd->add_option("--panel", group_panel, "panel configuration")->required();
  group_cmd->add_option("--fixture", group_fixture, "reference fixture to compare");
  group_cmd->add_option("--format", group_format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  group_cmd->add_option("--precision", group_precision, "display decimals")
      ->check(CLI::Range(0, 12));
  group_cmd->add_flag("--strict-reciprocity", group_strict,
                      "treat reciprocity violations as errors");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nsset");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(validate)) {
      return do_validate(validate_file, validate_type, validate_strict, out, err);
    }
    if (app.got_subcommand(op)) {
      return do_op(op_name, op_files, op_output, op_format, out, err);
    }
    if (app.got_subcommand(decide_cmd)) {
      return do_decide(decide_nsset, decide_saaty, decide_fixture, decide_format,
                       decide_precision, decide_strict, out, err);
    }
    return do_group_decide(group_panel, group_fixture, group_format, group_precision,
                           group_strict, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const DomainMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainMismatch;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace nsset::cli
