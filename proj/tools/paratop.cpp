// Command-line front end: load finite spaces, query properties and
// memberships, run the exhaustive suites, export graphs.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "paratop/json_io.hpp"
#include "paratop/parabase.hpp"
#include "paratop/space.hpp"
#include "paratop/verify.hpp"
#include "paratop/words.hpp"

namespace {

using namespace paratop;

enum Exit : int {
  kOk = 0,
  kNegative = 1,  // NonMember, not separable, counterexamples found
  kParse = 2,
  kInvalidSpace = 3,
  kUnknown = 4,
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATopology:
    case ErrorCode::EmptyCarrier:
    case ErrorCode::CarrierTooLarge:
    case ErrorCode::NotT0:
      return kInvalidSpace;
    default:
      return kParse;
  }
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Inline JSON when the argument starts with '{', otherwise a file path.
FiniteSpace load_space(const std::string& input) {
  const std::string trimmed = trim(input);
  if (!trimmed.empty() && trimmed.front() == '{') return parse_space(trimmed);
  std::ifstream file(input);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read '" + input + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_space(buffer.str());
}

AbelianVector load_abelian(const std::string& text, const FiniteSpace& space) {
  const std::string trimmed = trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    try {
      return abelian_from_json(Json::parse(trimmed), space);
    } catch (const Json::parse_error& e) {
      throw SyntaxError(e.byte, "invalid JSON vector");
    }
  }
  return parse_abelian(text, space);
}

struct Output {
  std::string format = "json";
  bool json() const { return format == "json"; }
};

void emit(const Output& out, const Json& doc, const std::string& text) {
  if (out.json()) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict_text(const MembershipVerdict& verdict, const FiniteSpace& space) {
  std::ostringstream s;
  s << to_string(verdict.kind);
  if (verdict.is_non_member()) s << " (" << to_string(verdict.obstruction) << ")";
  if (verdict.kind == VerdictKind::Unknown) s << " (search bound " << verdict.bound << ")";
  s << "\n";
  for (const auto& f : verdict.factors) {
    const std::string g = format_word(f.conjugator, space);
    s << "  " << (g.empty() ? "" : g + " . ") << "(" << space.point(f.generator.from).label() << "^-1 "
      << space.point(f.generator.to).label() << ")" << (g.empty() ? "" : " . (" + g + ")^-1") << "\n";
  }
  for (const auto& use : verdict.flow) {
    s << "  " << use.count << " x (" << space.point(use.to).label() << " - " << space.point(use.from).label()
      << ")\n";
  }
  return s.str();
}

int exit_for(const MembershipVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::Member: return kOk;
    case VerdictKind::NonMember: return kNegative;
    case VerdictKind::Unknown: return kUnknown;
  }
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free paratopological groups over finite Alexandroff spaces"};
  app.require_subcommand(1);
  Output out;
  int status = kOk;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  std::string space_arg;
  auto add_space = [&](CLI::App* cmd) {
    cmd->add_option("space", space_arg, "Space JSON file, or inline JSON")->required();
  };

  // props
  auto* props = app.add_subcommand("props", "Separation and partition properties of a space");
  add_space(props);
  add_format(props);
  props->callback([&] {
    const FiniteSpace space = load_space(space_arg);
    const Json doc{{"points", space.size()},
                   {"t0", is_T0(space)},
                   {"discrete", is_discrete(space)},
                   {"indiscrete", is_indiscrete(space)},
                   {"partition", is_partition(space)},
                   {"gens", gens(space).pairs.size()}};
    std::ostringstream text;
    for (const auto& [key, value] : doc.items()) text << key << ": " << value.dump() << "\n";
    emit(out, doc, text.str());
  });

  // member
  std::string element;
  std::string group = "fp";
  int depth = 3;
  auto* member_cmd = app.add_subcommand("member", "Decide membership in N_F or N_A");
  add_space(member_cmd);
  member_cmd->add_option("element", element, "Word (fp) or signed sum / JSON vector (ap)");
  member_cmd->add_option("--group", group, "fp or ap")->check(CLI::IsMember({"fp", "ap"}));
  member_cmd->add_option("--depth", depth, "Conjugator length bound for the free search");
  add_format(member_cmd);
  member_cmd->callback([&] {
    if (depth < 0) throw Error(ErrorCode::NegativeBound, "depth must be nonnegative");
    const FiniteSpace space = load_space(space_arg);
    MembershipVerdict verdict;
    Json doc;
    if (group == "ap") {
      const AbelianVector v = load_abelian(element, space);
      verdict = member_NA(space, v);
      doc = verdict_to_json(verdict, space);
      doc["element"] = abelian_to_json(v, space);
    } else {
      const FreeWord w = parse_word(element, space);
      verdict = member_NF(space, w, depth);
      doc = verdict_to_json(verdict, space);
      doc["element"] = format_word(w, space);
    }
    doc["group"] = group;
    emit(out, doc, verdict_text(verdict, space));
    status = exit_for(verdict);
  });

  // separate
  std::string g_text;
  std::string h_text;
  auto* separate = app.add_subcommand("separate", "Find an open coset of AP(X) separating two elements");
  add_space(separate);
  separate->add_option("first", g_text, "Element g")->required();
  separate->add_option("second", h_text, "Element h")->required();
  add_format(separate);
  separate->callback([&] {
    const FiniteSpace space = load_space(space_arg);
    const AbelianVector g = load_abelian(g_text, space);
    const AbelianVector h = load_abelian(h_text, space);
    const Separation sep = separate_AP(space, g, h);
    const std::string text = sep.separable ? "separated by the coset " + format_abelian(sep.center, space) + " + N_A\n"
                                           : "not separable\n";
    emit(out, separation_to_json(sep, space), text);
    status = sep.separable ? kOk : kNegative;
  });

  // mu
  std::vector<std::string> chosen_names;
  auto* mu = app.add_subcommand("mu", "Continuous map into R_n injective on the chosen points");
  add_space(mu);
  mu->add_option("points", chosen_names, "Points to separate")->required();
  add_format(mu);
  mu->callback([&] {
    const FiniteSpace space = load_space(space_arg);
    std::vector<PointIndex> chosen;
    for (const auto& name : chosen_names) chosen.push_back(space.index_of(name));
    const ContinuousMap map = mu_embedding(space, chosen);
    const std::string target = "R_" + std::to_string(map.codomain.size());
    Json table = Json::object();
    std::vector<PointIndex> order(space.size());
    for (PointIndex i = 0; i < space.size(); ++i) {
      order[i] = i;
      table[space.point(i).label()] = map.codomain.point(map.assignment[i]).label();
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](PointIndex a, PointIndex b) { return map.assignment[a] < map.assignment[b]; });
    std::string text;
    for (const PointIndex i : order) {
      if (!text.empty()) text += ", ";
      text += space.point(i).label() + "↦" + map.codomain.point(map.assignment[i]).label();
    }
    emit(out, Json{{"target", target}, {"map", table}, {"continuous", is_continuous(map)}},
         text + " into " + target + "\n");
  });

  // suite
  std::size_t carrier = 3;
  std::uint64_t seed = 0;
  bool timing = false;
  auto* suite = app.add_subcommand("suite", "Run the structural checks on every topology of a carrier");
  suite->add_option("n", carrier, "Carrier size (1..5)")->required();
  suite->add_option("--depth", depth);
  suite->add_option("--seed", seed)->required();
  suite->add_flag("--timing", timing, "Include wall time in the report");
  add_format(suite);
  suite->callback([&] {
    if (depth < 0) throw Error(ErrorCode::NegativeBound, "depth must be nonnegative");
    SuiteOptions options;
    options.depth_bound = depth;
    options.rng_seed = seed;
    const SuiteReport report = run_suite(carrier, options);
    emit(out, report_to_json(report, timing), report_to_text(report, timing));
    status = report.clean() ? kOk : kNegative;
  });

  // battery
  std::size_t length = 4;
  std::size_t cap = 10000;
  auto* battery = app.add_subcommand("battery", "T0 separation battery over short words");
  battery->add_option("n", carrier, "Carrier size (1..4)")->required();
  battery->add_option("--length", length, "Word length bound (1..6)");
  battery->add_option("--cap", cap, "Words per space before sampling");
  battery->add_option("--depth", depth);
  battery->add_option("--seed", seed)->required();
  battery->add_flag("--timing", timing);
  add_format(battery);
  battery->callback([&] {
    if (depth < 0) throw Error(ErrorCode::NegativeBound, "depth must be nonnegative");
    BatteryOptions options;
    options.word_length_bound = length;
    options.census_cap = cap;
    options.depth_bound = depth;
    options.rng_seed = seed;
    const SuiteReport report = t0_word_battery(carrier, options);
    emit(out, report_to_json(report, timing), report_to_text(report, timing));
    status = report.clean() ? kOk : kNegative;
  });

  // basep
  std::size_t samples = 200;
  auto* basep = app.add_subcommand("basep", "Sample the neighbourhood-base axioms for N_A and N_F");
  add_space(basep);
  basep->add_option("--samples", samples);
  basep->add_option("--seed", seed)->required();
  basep->add_option("--depth", depth);
  add_format(basep);
  basep->callback([&] {
    const FiniteSpace space = load_space(space_arg);
    SearchOptions options;
    options.depth_bound = depth;
    const BasepReport report = verify_basep(space, samples, seed, options);
    std::ostringstream text;
    text << report.checks << " checks, " << report.violations.size() << " violations, " << report.unresolved
         << " unresolved\n";
    for (const auto& v : report.violations) text << "  " << v << "\n";
    emit(out, basep_to_json(report), text.str());
    status = report.violations.empty() ? kOk : kNegative;
  });

  // saturate
  int radius = 4;
  std::vector<std::string> seeds;
  auto* saturate = app.add_subcommand("saturate", "Open saturation of seed vectors inside an l1 ball");
  add_space(saturate);
  saturate->add_option("--radius", radius);
  saturate->add_option("seeds", seeds, "Seed vectors (default: 0)");
  add_format(saturate);
  saturate->callback([&] {
    const FiniteSpace space = load_space(space_arg);
    std::vector<AbelianVector> seed_vectors;
    for (const auto& s : seeds) seed_vectors.push_back(load_abelian(s, space));
    if (seed_vectors.empty()) seed_vectors.emplace_back();
    const auto ball = saturate_ball(space, seed_vectors, radius);
    Json doc = Json::array();
    std::string text;
    for (const auto& v : ball) {
      doc.push_back(abelian_to_json(v, space));
      text += format_abelian(v, space) + "\n";
    }
    emit(out, doc, text);
  });

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Specialization digraph in Graphviz format");
  add_space(dot);
  dot->callback([&] { std::cout << to_dot(load_space(space_arg)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e.code());
  }
  return status;
}
