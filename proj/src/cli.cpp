#include "trivalent/cli.hpp"

#include <CLI11.hpp>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "trivalent/characterize.hpp"
#include "trivalent/closure.hpp"
#include "trivalent/error.hpp"
#include "trivalent/parse.hpp"
#include "trivalent/scheme.hpp"
#include "trivalent/semantics.hpp"
#include "trivalent/verify.hpp"

namespace trivalent {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsageError = 2;
constexpr int kResourceError = 3;

struct Globals {
  std::string format = "text";
  bool allow_non_bnm = false;

  bool json() const { return format == "json"; }
};

Json to_json(const Valuation& v) {
  Json out = Json::object();
  for (const auto& [atom, value] : v.assignment()) out[atom] = std::string(1, to_char(value));
  return out;
}

Json to_json(const Counterexample& c) {
  Json out;
  out["check"] = c.check;
  if (c.inference) out["inference"] = to_string(*c.inference);
  if (c.scheme) out["scheme"] = *c.scheme;
  if (c.standard) out["standard"] = *c.standard;
  if (c.valuation) out["valuation"] = to_json(*c.valuation);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

void print_counterexample(std::ostream& out, const Counterexample& c) {
  out << "    " << c.check;
  if (c.inference) out << ": " << *c.inference;
  if (c.scheme) out << " [" << *c.scheme << (c.standard ? "/" + *c.standard : "") << "]";
  if (c.valuation) out << " at " << to_string(*c.valuation);
  if (!c.detail.empty()) out << " (" << c.detail << ")";
  out << '\n';
}

std::vector<Scheme> resolve_schemes(const std::vector<std::string>& selectors, const Globals& g) {
  std::vector<Scheme> out;
  for (const auto& s : selectors) {
    if (s == "all") {
      for (const auto& x : enumerate_bnm_schemes()) out.push_back(x);
    } else {
      out.push_back(resolve_scheme(s, g.allow_non_bnm));
    }
  }
  return out;
}

std::string table_row(const Scheme::BinaryTable& t, std::size_t row) {
  std::string out;
  for (std::size_t j = 0; j < 3; ++j) out += to_char(t[row][j]);
  return out;
}

std::string compact_tables(const Scheme& s) {
  std::string neg;
  for (TruthValue v : kTruthValues) neg += to_char(s.neg(v));
  std::string conj, disj;
  for (std::size_t i = 0; i < 3; ++i) {
    conj += (i ? "/" : "") + table_row(s.conj_table(), i);
    disj += (i ? "/" : "") + table_row(s.disj_table(), i);
  }
  return "not=" + neg + " and=" + conj + " or=" + disj;
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::set<std::string> split_atoms(const std::string& text) {
  return UniverseParams::parse_header("atoms=" + text).atoms;
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::vector<std::string> schemes{"strong"};
  std::vector<std::string> standards{"st"};
  std::string inference;
  std::size_t atom_cap = kDefaultAtomCap;
};

int cmd_check(const CheckOptions& o, const Globals& g, std::ostream& out) {
  const Inference inf = parse_inference(o.inference);
  const auto schemes = resolve_schemes(o.schemes, g);
  std::vector<Standard> standards;
  for (const auto& s : o.standards) standards.push_back(Standard::parse(s));

  bool all_valid = true;
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& s : schemes) {
    for (const auto& standard : standards) {
      const LogicSpec logic(s, standard, {}, g.allow_non_bnm);
      const auto cv = find_countervaluation(logic, inf, o.atom_cap);
      all_valid = all_valid && !cv;
      Json r;
      r["scheme"] = scheme_label(s);
      r["standard"] = standard.name();
      r["valid"] = !cv;
      if (cv) r["countervaluation"] = to_json(*cv);
      results.push_back(r);
      text << logic.label() << ": " << (cv ? "invalid" : "valid");
      if (cv) text << ", countervaluation " << to_string(*cv);
      text << '\n';
    }
  }
  if (g.json()) {
    Json doc;
    doc["inference"] = to_string(inf);
    doc["results"] = results;
    doc["status"] = all_valid ? "valid" : "invalid";
    out << doc.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return all_valid ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct DeriveOptions {
  std::string tt_scheme = "strong";
  std::string ss_scheme = "strong";
  std::string inference;
};

int cmd_derive(const DeriveOptions& o, const Globals& g, std::ostream& out) {
  const Inference inf = parse_inference(o.inference);
  const LogicSpec tt(resolve_scheme(o.tt_scheme, g.allow_non_bnm), Standard::tt(), {}, g.allow_non_bnm);
  const LogicSpec ss(resolve_scheme(o.ss_scheme, g.allow_non_bnm), Standard::ss(), {}, g.allow_non_bnm);
  const auto witness = derive_classical(inf, tt, ss);
  const bool replayed = witness && replay_witness(inf, *witness);
  const bool found = witness && witness->accepted() && replayed;

  if (g.json()) {
    Json doc;
    doc["inference"] = to_string(inf);
    doc["classically_valid"] = witness.has_value();
    if (witness) {
      Json delta = Json::array();
      for (const auto& d : witness->delta) delta.push_back(to_string(d));
      doc["delta"] = delta;
      Json steps = Json::array();
      for (const auto& c : witness->tt_checks) {
        steps.push_back({{"inference", to_string(c.inference)}, {"logic", tt.label()}, {"valid", c.holds}});
      }
      doc["tt_steps"] = steps;
      doc["ss_step"] = {{"inference", to_string(witness->ss_check.inference)},
                        {"logic", ss.label()},
                        {"valid", witness->ss_check.holds}};
      doc["replayed"] = replayed;
    }
    doc["status"] = found ? "witness" : (witness ? "failed" : "not classically valid");
    out << doc.dump(2) << '\n';
    return found ? 0 : 1;
  }

  out << "inference: " << inf << '\n';
  if (!witness) {
    out << "not classically valid\n";
    return 1;
  }
  out << "delta: {";
  for (std::size_t i = 0; i < witness->delta.size(); ++i) out << (i ? ", " : "") << witness->delta[i];
  out << "}\n";
  out << "tt steps (" << tt.label() << "):\n";
  for (const auto& c : witness->tt_checks) out << "  " << c.inference << "  " << (c.holds ? "valid" : "INVALID") << '\n';
  out << "ss step (" << ss.label() << "):\n";
  out << "  " << witness->ss_check.inference << "  " << (witness->ss_check.holds ? "valid" : "INVALID") << '\n';
  out << "replay through transitive closure: " << (replayed ? "derived" : "not derived") << '\n';
  out << (found ? "witness found\n" : "witness failed\n");
  return found ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct SchemesOptions {
  bool named = false;
  std::string check_file;
};

int cmd_schemes(const SchemesOptions& o, const Globals& g, std::ostream& out) {
  if (!o.check_file.empty()) {
    const Scheme s = parse_scheme_document(read_file(o.check_file), true);
    const auto normal = find_normality_violation(s);
    const auto monotone = find_monotonicity_violation(s);
    const auto code = bnm_code(s);
    if (g.json()) {
      Json doc;
      doc["file"] = o.check_file;
      doc["boolean_normal"] = !normal;
      doc["monotonic"] = !monotone;
      if (normal) doc["normality_violation"] = describe(*normal);
      if (monotone) doc["monotonicity_violation"] = describe(*monotone);
      if (code) doc["id"] = code_label(*code);
      doc["status"] = (!normal && !monotone) ? "bnm" : "rejected";
      out << doc.dump(2) << '\n';
    } else {
      if (normal) out << "not Boolean normal: " << describe(*normal) << '\n';
      if (monotone) out << "not monotonic: " << describe(*monotone) << '\n';
      if (!normal && !monotone) out << "BNM scheme " << code_label(*code) << '\n';
    }
    return (!normal && !monotone) ? 0 : 1;
  }

  const auto name_of = [&](const Scheme& s) -> std::string {
    for (const char* n : {"strong", "weak", "middle"}) {
      if (preset(n) == s) return n;
    }
    return {};
  };
  const auto all = enumerate_bnm_schemes();
  if (g.json()) {
    Json rows = Json::array();
    for (const auto& s : all) {
      Json r;
      r["id"] = scheme_label(s);
      if (o.named && !name_of(s).empty()) r["name"] = name_of(s);
      r["tables"] = compact_tables(s);
      rows.push_back(r);
    }
    Json doc;
    doc["count"] = all.size();
    doc["schemes"] = rows;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& s : all) {
      out << scheme_label(s) << "  " << compact_tables(s);
      if (o.named && !name_of(s).empty()) out << "  " << name_of(s);
      out << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ClosureOptions {
  std::string file;
  std::string mode = "t";
  std::string atoms;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> cap;
  std::optional<std::string> reserve;
};

int cmd_closure(const ClosureOptions& o, const Globals& g, std::ostream& out) {
  std::istringstream in(read_file(o.file));
  const auto doc = read_inference_set(in);
  UniverseParams params = doc.universe.value_or(UniverseParams{});
  if (!o.atoms.empty()) params.atoms = split_atoms(o.atoms);
  if (o.depth) params.depth = *o.depth;
  if (o.cap) params.premise_cap = *o.cap;
  if (o.reserve) params.reserve = o.reserve->empty() ? std::set<std::string>{} : split_atoms(*o.reserve);

  const Universe u = Universe::enumerated(params);
  const UniverseSet base = u.encode(doc.inferences);
  UniverseSet result;
  std::string name;
  if (o.mode == "t") {
    result = transitive_closure(base, u);
    name = "transitive closure";
  } else if (o.mode == "td") {
    result = dual_transitive_closure(base, u);
    name = "dual transitive closure";
  } else {
    result = tarskian_closure(base, u);
    name = "Tarskian closure";
  }
  const InferenceSet members = u.decode(result);

  if (g.json()) {
    Json j;
    j["mode"] = o.mode;
    j["relative"] = true;
    j["universe"] = params.to_header();
    j["input_count"] = doc.inferences.size();
    j["count"] = members.size();
    Json list = Json::array();
    for (const auto& inf : members) list.push_back(to_string(inf));
    j["inferences"] = list;
    out << j.dump(2) << '\n';
  } else {
    out << "# " << name << " relative to the universe; " << members.size() << " of " << u.inference_count()
        << " inferences\n";
    write_inference_set(out, members, params);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyCliOptions {
  std::uint64_t seed = 42;
  std::vector<std::string> only;
  std::string schemes = "all-pairs";
  std::size_t corpus_size = 10'000;
  std::size_t reduced_size = 500;
  std::size_t law_samples = 100;
  bool no_timestamp = false;
};

int cmd_verify(const VerifyCliOptions& o, const Globals& g, std::ostream& out) {
  VerifyOptions options;
  options.seed = o.seed;
  options.corpus_size = o.corpus_size;
  options.reduced_size = o.reduced_size;
  options.law_samples = o.law_samples;
  options.theorem4_pairs = o.schemes == "named" ? SchemePairs::kNamed : SchemePairs::kAllPairs;
  for (const auto& item : o.only) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) options.only.push_back(id);
    }
  }
  const VerifyResult result = run_verification(options);

  if (g.json()) {
    Json claims = Json::array();
    for (const auto& c : result.claims) {
      Json j;
      j["claim"] = c.id;
      j["status"] = c.report.passed() ? "pass" : "fail";
      j["instances"] = c.report.instances;
      if (!c.report.failures.empty()) j["counterexample"] = to_json(c.report.failures.front());
      if (!c.report.passed()) j["failures"] = c.report.failure_count;
      j["runtime_ms"] = o.no_timestamp ? 0 : static_cast<std::int64_t>(c.runtime_ms + 0.5);
      claims.push_back(j);
    }
    Json doc;
    doc["claims"] = claims;
    doc["seed"] = o.seed;
    doc["status"] = result.passed() ? "pass" : "fail";
    if (!o.no_timestamp) doc["timestamp"] = timestamp();
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : result.claims) {
      out << (c.report.passed() ? "PASS " : "FAIL ") << std::left << std::setw(16) << c.id << c.description << " ("
          << c.report.instances << " instances";
      if (!o.no_timestamp) out << ", " << static_cast<std::int64_t>(c.runtime_ms + 0.5) << " ms";
      out << ")\n";
      if (!c.report.passed()) {
        out << "  " << c.report.failure_count << " failures; first " << c.report.failures.size() << ":\n";
        for (const auto& f : c.report.failures) print_counterexample(out, f);
      }
    }
    out << (result.passed() ? "all claims pass\n" : "some claims fail\n");
  }
  return result.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-valued validity, closures and lattice checks for ss, tt, st and ts logics", "trivalent"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read option values from a TOML or INI file");

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--allow-non-bnm", g.allow_non_bnm, "Accept schemes that are not Boolean normal and monotonic");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide validity of an inference");
  check_cmd->add_option("--scheme", check.schemes, "strong|weak|middle|id:<code>|all|<file> (repeatable)")
      ->capture_default_str();
  check_cmd->add_option("--standard", check.standards, "ss|tt|st|ts|X:Y (repeatable)")->capture_default_str();
  check_cmd->add_option("--atom-cap", check.atom_cap, "Largest atom count to enumerate")->capture_default_str();
  check_cmd->add_option("inference", check.inference, "Inference, e.g. \"p, q => p & q\"")->required();

  DeriveOptions derive;
  auto* derive_cmd = app.add_subcommand("derive", "Build the two-step cut derivation of a classical inference");
  derive_cmd->add_option("--tt-scheme", derive.tt_scheme, "Scheme of the tt logic")->capture_default_str();
  derive_cmd->add_option("--ss-scheme", derive.ss_scheme, "Scheme of the ss logic")->capture_default_str();
  derive_cmd->add_option("inference", derive.inference, "Inference")->required();

  SchemesOptions schemes;
  auto* schemes_cmd = app.add_subcommand("schemes", "List the BNM schemes or check a scheme file");
  schemes_cmd->add_flag("--named", schemes.named, "Mark the strong, weak and middle presets");
  schemes_cmd->add_option("--check", schemes.check_file, "Scheme document to test against the BNM conditions");

  ClosureOptions closure;
  auto* closure_cmd = app.add_subcommand("closure", "Close an inference set relative to a finite universe");
  closure_cmd->add_option("file", closure.file, "Inference-set file, - for standard input")->required();
  closure_cmd->add_option("--mode", closure.mode, "t, td or tar")
      ->check(CLI::IsMember({"t", "td", "tar"}))
      ->capture_default_str();
  closure_cmd->add_option("--atoms", closure.atoms, "Universe atoms, comma separated");
  closure_cmd->add_option("--depth", closure.depth, "Universe formula depth");
  closure_cmd->add_option("--cap", closure.cap, "Premise-set size cap");
  closure_cmd->add_option("--reserve", closure.reserve, "Reserve atoms, comma separated");

  VerifyCliOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--seed", verify.seed, "Random corpus seed")->capture_default_str();
  verify_cmd->add_option("--only", verify.only, "Claim ids to run (comma separated or repeated)");
  verify_cmd->add_option("--schemes", verify.schemes, "Scheme pairs for theorem4")
      ->check(CLI::IsMember({"all-pairs", "named"}))
      ->capture_default_str();
  verify_cmd->add_option("--corpus-size", verify.corpus_size, "Random corpus size")->capture_default_str();
  verify_cmd->add_option("--reduced-size", verify.reduced_size, "Corpus prefix used for all scheme pairs")
      ->capture_default_str();
  verify_cmd->add_option("--law-samples", verify.law_samples, "Operator-law samples per universe")
      ->capture_default_str();
  verify_cmd->add_flag("--no-timestamp", verify.no_timestamp, "Omit the timestamp and zero the runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*check_cmd) return cmd_check(check, g, out);
    if (*derive_cmd) return cmd_derive(derive, g, out);
    if (*schemes_cmd) return cmd_schemes(schemes, g, out);
    if (*closure_cmd) return cmd_closure(closure, g, out);
    if (*verify_cmd) return cmd_verify(verify, g, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace trivalent
