#include "circact/cli.hpp"

#include "circact/classifier.hpp"
#include "circact/io.hpp"
#include "circact/localization.hpp"
#include "circact/multigraph.hpp"
#include "circact/report.hpp"
#include "circact/surgery.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace circact::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string out_path;
  std::uint64_t seed = 0;
  bool quiet = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

class Emitter {
 public:
  Emitter(const Globals& globals, std::ostream& out) : globals_(globals), out_(out) {}

  void report(const json& doc) const {
    if (!globals_.out_path.empty()) {
      write_file(globals_.out_path, doc.dump(2) + "\n");
    } else {
      stdout_only(doc);
    }
  }

  void stdout_only(const json& doc) const {
    if (!globals_.quiet) out_ << doc.dump(2) << "\n";
  }

 private:
  const Globals& globals_;
  std::ostream& out_;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Range parse_range(const std::string& flag, const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    auto r = parse_rational(s);
    if (!r || !is_integer(*r)) throw UsageError(flag + ": expected an integer range, got \"" + text + "\"");
    auto v = to_int64(numerator(*r));
    if (!v) throw UsageError(flag + ": value out of range");
    return *v;
  };
  Range range;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.lo = range.hi = parse_int(text);
  } else {
    range.lo = parse_int(text.substr(0, dots));
    range.hi = parse_int(text.substr(dots + 2));
  }
  if (range.lo > range.hi) throw UsageError(flag + ": empty range \"" + text + "\"");
  return range;
}

const std::vector<std::string> kInvariants = {"c1_cubed", "todd", "c1c2", "euler"};

Rational invariant_value(const ChernReport& report, const std::string& name) {
  if (name == "c1_cubed") return report.c1_cubed;
  if (name == "todd") return report.todd;
  if (name == "c1c2") return report.c1c2;
  return report.euler;
}

json error_document(const Error& e) {
  json violations = json::array();
  for (const auto& v : e.violations()) violations.push_back(to_json(v));
  return json{{"error", to_string(e.kind())}, {"message", e.what()}, {"violations", violations}};
}

int run_sweep(const std::string& case_text, const std::map<std::string, std::string>& range_text,
              const std::vector<std::string>& assertions, const Emitter& emit) {
  const auto tag = parse_case_tag(case_text);
  if (!tag) throw UsageError("--case: unknown case \"" + case_text + "\"");
  const auto names = param_names(*tag);
  for (const auto& [flag, text] : range_text) {
    if (std::find(names.begin(), names.end(), flag) == names.end()) {
      throw UsageError("--" + flag + ": case " + std::string(to_string(*tag)) + " has no such parameter");
    }
  }
  std::vector<Range> ranges;
  for (const auto& name : names) {
    auto it = range_text.find(name);
    if (it == range_text.end()) throw UsageError("--" + name + " is required for case " + std::string(to_string(*tag)));
    ranges.push_back(parse_range("--" + name, it->second));
  }

  std::vector<std::pair<std::string, Rational>> expected;
  for (const auto& a : assertions) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) throw UsageError("--assert: expected NAME=VALUE, got \"" + a + "\"");
    const auto name = a.substr(0, eq);
    if (std::find(kInvariants.begin(), kInvariants.end(), name) == kInvariants.end()) {
      throw UsageError("--assert: unknown invariant \"" + name + "\"");
    }
    auto value = parse_rational(a.substr(eq + 1));
    if (!value) throw UsageError("--assert: \"" + a.substr(eq + 1) + "\" is not an exact integer or p/q");
    expected.emplace_back(name, *value);
  }

  std::map<std::string, std::set<Rational>> seen;
  json failures = json::array();
  std::size_t failure_count = 0, checked = 0, skipped = 0;
  auto record_failure = [&](json f) {
    ++failure_count;
    if (failures.size() < 100) failures.push_back(std::move(f));
  };

  std::vector<std::int64_t> params;
  for (const auto& r : ranges) params.push_back(r.lo);
  while (true) {
    JangCase kase{*tag, params};
    bool admissible = true;
    try {
      check_params(kase);
    } catch (const Error&) {
      admissible = false;
    }
    if (!admissible) {
      ++skipped;
    } else {
      ++checked;
      try {
        const auto report = chern_report(gen_family(kase));
        for (const auto& name : kInvariants) seen[name].insert(invariant_value(report, name));
        for (const auto& [name, value] : expected) {
          const auto actual = invariant_value(report, name);
          if (actual != value) {
            record_failure({{"params", params}, {"invariant", name},
                            {"expected", to_string(value)}, {"actual", to_string(actual)}});
          }
        }
      } catch (const Error& e) {
        record_failure({{"params", params}, {"error", to_string(e.kind())}, {"message", e.what()}});
      }
    }
    // Lexicographic order: the last parameter varies fastest.
    std::size_t i = params.size();
    while (i > 0 && params[i - 1] == ranges[i - 1].hi) {
      params[i - 1] = ranges[i - 1].lo;
      --i;
    }
    if (i == 0) break;
    ++params[i - 1];
  }

  json values = json::object();
  for (const auto& [name, set] : seen) {
    json list = json::array();
    for (const auto& v : set) list.push_back(to_string(v));
    values[name] = std::move(list);
  }
  emit.report({{"case", to_string(*tag)},
               {"checked", checked},
               {"skipped", skipped},
               {"distinct_values", values},
               {"failure_count", failure_count},
               {"failures", failures},
               {"passed", failure_count == 0}});
  return failure_count == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localized invariants, classification, multigraphs and fibred sums for\n"
               "fixed-point data of circle actions on almost complex 6-manifolds."};
  app.name("circact");
  Globals globals;
  app.add_option("--out", globals.out_path, "Write the report to FILE instead of standard output");
  app.add_option("--seed", globals.seed, "Seed for pseudo-random sampling");
  app.add_flag("--quiet", globals.quiet, "Suppress the report; only the exit code is produced");
  app.fallthrough();
  app.require_subcommand(1);

  std::string file, file2;

  auto* validate_cmd = app.add_subcommand("validate", "Check a dataset document against every invariant");
  validate_cmd->add_option("file", file, "Dataset document")->required();

  bool lenient = false;
  auto* localize_cmd = app.add_subcommand("localize", "Localized Chern numbers and chi_y coefficients");
  localize_cmd->add_option("file", file, "Dataset document")->required();
  localize_cmd->add_flag("--lenient", lenient, "Report a non-integral c1^3 instead of failing");

  auto* classify_cmd = app.add_subcommand("classify", "Match 4-point data against the six weight families");
  classify_cmd->add_option("file", file, "Dataset document")->required();

  std::string case_text;
  std::vector<std::int64_t> gen_params;
  auto* generate_cmd = app.add_subcommand("generate", "Emit the dataset of a weight family");
  generate_cmd->add_option("case", case_text, "Case letter A-F or full tag, e.g. F_BlC_S6")->required();
  generate_cmd->add_option("params", gen_params, "Integer parameters a b [c d]")->required();

  std::string dot_path;
  std::size_t cap = kDefaultPairingCap;
  bool ignore_provenance = false;
  auto* graph_cmd = app.add_subcommand("graph", "Multigraphs from opposite-weight pairings");
  graph_cmd->add_option("file", file, "Dataset document")->required();
  graph_cmd->add_option("--dot", dot_path, "Also write every multigraph to FILE in DOT format");
  graph_cmd->add_option("--cap", cap, "Abort when more pairings than this exist")->default_val(kDefaultPairingCap);
  graph_cmd->add_flag("--ignore-provenance", ignore_provenance,
                      "Pair weights across summands of a composed dataset");

  auto* sum_cmd = app.add_subcommand("sum", "Fibred connected sum along free orbits of two datasets");
  sum_cmd->add_option("file1", file, "First summand")->required();
  sum_cmd->add_option("file2", file2, "Second summand")->required();

  std::int64_t dim_n = 0, dim_k = 0;
  auto* admissible_cmd = app.add_subcommand("admissible", "Existence and uniqueness of the invariant structure");
  admissible_cmd->add_option("n", dim_n, "Half-dimension")->required();
  admissible_cmd->add_option("k", dim_k, "Torus dimension")->required();

  std::int64_t fa = 0, fb = 0;
  auto* framing_cmd = app.add_subcommand("framing", "Framing class of a free orbit of the S^6 action");
  framing_cmd->add_option("a", fa, "Weight a >= 1")->required();
  framing_cmd->add_option("b", fb, "Weight b >= 1")->required();

  GluingCheckOptions gluing;
  auto* gluing_cmd = app.add_subcommand("verify-gluing", "Numerically check that the framing twist commutes with the collar reflection");
  gluing_cmd->add_option("--samples", gluing.samples, "Number of sample points")->default_val(1000);
  gluing_cmd->add_option("--tol", gluing.tolerance, "Relative tolerance")->default_val(1e-9);

  std::map<std::string, std::string> sweep_ranges;
  std::vector<std::string> assertions;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate invariants over a parameter grid of one family");
  sweep_cmd->add_option("--case", case_text, "Case letter A-F or full tag")->required();
  for (const char* p : {"a", "b", "c", "d"}) {
    sweep_cmd->add_option_function<std::string>(
        std::string("--") + p, [&sweep_ranges, p](const std::string& v) { sweep_ranges[p] = v; },
        "Inclusive range LO..HI or a single value");
  }
  sweep_cmd->add_option("--assert", assertions, "NAME=VALUE with NAME in c1_cubed, todd, c1c2, euler; VALUE exact");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "circact: " << e.what() << "\n";
    return 2;
  }

  const Emitter emit(globals, out);
  try {
    if (validate_cmd->parsed()) {
      const auto ds = load(std::filesystem::path(file), LoadMode::Unchecked);
      const auto violations = validate(ds);
      json list = json::array();
      for (const auto& v : violations) list.push_back(to_json(v));
      emit.report({{"valid", violations.empty()}, {"violations", list}});
      return violations.empty() ? 0 : 1;
    }
    if (localize_cmd->parsed()) {
      const auto ds = load(std::filesystem::path(file));
      if (lenient) {
        const auto value = c1_cubed(ds.data);
        const auto profile = chi_y_profile(ds.data);
        emit.report({{"c1_cubed", to_string(value)},
                     {"integral", is_integer(value)},
                     {"todd", profile.front()},
                     {"c1c2", 24 * profile.front()},
                     {"euler", ds.data.size()},
                     {"chi_y", profile}});
        return 0;
      }
      emit.report(to_json(chern_report(ds.data)));
      return 0;
    }
    if (classify_cmd->parsed()) {
      const auto ds = load(std::filesystem::path(file));
      emit.report(to_json(classify(ds.data), ds.data));
      return 0;
    }
    if (generate_cmd->parsed()) {
      const auto tag = parse_case_tag(case_text);
      if (!tag) throw UsageError("unknown case \"" + case_text + "\"");
      JangCase kase{*tag, gen_params};
      Dataset ds{gen_family(kase), std::nullopt, {}};
      std::string params;
      for (auto p : gen_params) params += (params.empty() ? "" : ",") + std::to_string(p);
      ds.labels["case"] = std::string(to_string(*tag));
      ds.labels["params"] = params;
      emit.report(to_json(ds));
      return 0;
    }
    if (graph_cmd->parsed()) {
      const auto ds = load(std::filesystem::path(file));
      PairingOptions options;
      options.cap = cap;
      if (!ignore_provenance) options.blocks = summand_blocks(ds);
      const auto graphs = build_multigraphs(ds.data, options);
      if (!dot_path.empty()) {
        std::string dot;
        for (std::size_t i = 0; i < graphs.size(); ++i) dot += to_dot(graphs[i], "matching_" + std::to_string(i));
        write_file(dot_path, dot);
      }
      json doc{{"graphs", to_json(std::span<const Multigraph>(graphs))},
               {"verdict", to_string(connectivity_verdict(graphs))},
               {"pairing", options.blocks.empty() ? "all" : "within_summands"}};
      if (!summand_blocks(ds).empty()) doc["exoticness_obstruction"] = exoticness_obstruction(graphs);
      emit.report(doc);
      return 0;
    }
    if (sum_cmd->parsed()) {
      const auto result = kustarev_sum(load(std::filesystem::path(file)), load(std::filesystem::path(file2)));
      if (globals.out_path.empty()) {
        emit.stdout_only(to_json(result.dataset));
      } else {
        save(result.dataset, std::filesystem::path(globals.out_path));
        json report = to_json(result.report);
        report["fixed_points"] = result.dataset.data.size();
        report["homology"] = to_json(*result.dataset.homology);
        emit.stdout_only(report);
      }
      return 0;
    }
    if (admissible_cmd->parsed()) {
      const DimensionPair dims{dim_n, dim_k};
      const auto a = kustarev_admissible(dims);
      emit.report({{"n", dim_n}, {"k", dim_k}, {"slice_dimension", dims.slice_dimension()},
                   {"exists", a.exists}, {"unique", a.unique}});
      return 0;
    }
    if (framing_cmd->parsed()) {
      const auto normal = equivariant_normal_framing_class(fa, fb);
      const std::int64_t speeds[] = {-fa, fb, fa + fb};
      emit.report({{"a", fa}, {"b", fb},
                   {"tangent_loop_class", rotation_loop_class(speeds).value},
                   {"normal_framing_class", normal.value},
                   {"nontrivial", !normal.trivial()}});
      return 0;
    }
    if (gluing_cmd->parsed()) {
      if (!(gluing.tolerance > 0)) throw UsageError("--tol must be positive");
      gluing.seed = globals.seed;
      const auto check = verify_framing_reversal_identity(gluing);
      json doc = to_json(check);
      doc["seed"] = globals.seed;
      doc["tolerance"] = gluing.tolerance;
      emit.report(doc);
      return check.passed ? 0 : 1;
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(case_text, sweep_ranges, assertions, emit);
    }
  } catch (const UsageError& e) {
    err << "circact: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_document(e).dump(2) << "\n";
    err << "circact: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "circact: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace circact::cli
