#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "gpsw/analysis.hpp"
#include "gpsw/closure.hpp"
#include "gpsw/error.hpp"
#include "gpsw/gps.hpp"
#include "gpsw/report_json.hpp"
#include "gpsw/thue_morse.hpp"
#include "gpsw/verifier.hpp"

namespace gpsw::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

std::size_t length_cap() {
  if (const char* env = std::getenv("CLOSURE_MAX_LEN")) {
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
      throw ParseError("CLOSURE_MAX_LEN must be a positive integer");
    }
    return value;
  }
  return kDefaultLengthCap;
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected B,M, got '" + text + "'");
  auto number = [&](std::string_view s) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("malformed number in '" + text + "'");
    return v;
  };
  const std::string_view view(text);
  return {number(view.substr(0, comma)), number(view.substr(comma + 1))};
}

struct Options {
  std::uint32_t b = 0;
  std::uint32_t m = 0;
  std::size_t length = 0;
  std::string via = "digits";
  std::string word;
  std::string anti;
  std::string delta;
  std::string theta;
  std::size_t steps = 0;
  std::size_t max_chains = 4096;
  std::size_t complexity = 0;
  bool census = false;
  bool overlap = false;
  std::string cell;
  std::string grid;
  std::string suite = "theorem";
  unsigned levels = 4;
  std::size_t prefix = 2000;
  bool stable = false;
};

int gen(const Options& o, std::ostream& out) {
  const TbmParams p(o.b, o.m);
  const auto cap = length_cap();
  const Word w = o.via == "phi" ? phi_fixed_point_prefix(p, o.length, cap) : tbm_prefix(p, o.length, cap);
  out << format_word(w) << '\n';
  return kOk;
}

int closure_cmd(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word, o.m);
  out << format_word(closure(w, parse_antimorphism(o.anti, o.m))) << '\n';
  return kOk;
}

int gps_cmd(const Options& o, const CLI::App& sub, std::ostream& out) {
  if (!sub.count("--len") && !sub.count("--steps")) throw CLI::ValidationError("gps needs --steps or --len");
  const auto d = make_bisequence(o.delta, o.theta, o.m);
  if (sub.count("--len")) {
    out << format_word(gps_prefix(d, o.length, length_cap())) << '\n';
    return kOk;
  }
  const auto cap = length_cap();
  for (const auto& step : gps_steps(d, o.steps).steps) {
    if (step.word.size() > cap) throw ResourceError("trace word exceeds the length cap");
    out << step.n << ' ' << step.delta << ' ' << antimorphism_name(step.theta) << ' ' << format_word(step.word)
        << '\n';
  }
  return kOk;
}

int infer_cmd(const Options& o, std::ostream& out) {
  out << to_json(infer_bisequence(parse_word(o.word, o.m), o.max_chains)).dump(2) << '\n';
  return kOk;
}

int analyze_cmd(const Options& o, const CLI::App& sub, std::ostream& out) {
  const bool from_word = sub.count("--word") > 0;
  if (from_word == (sub.count("--b") > 0)) throw CLI::ValidationError("analyze needs exactly one of --word or --b/--len");
  if (!from_word && !sub.count("--len")) throw CLI::ValidationError("--b requires --len");
  if (!o.complexity && !o.census && !o.overlap) throw CLI::ValidationError("nothing to do: pass --complexity, --census or --overlap");
  std::optional<TbmParams> params;
  if (!from_word) params.emplace(o.b, o.m);
  const Word w = from_word ? parse_word(o.word, o.m) : tbm_prefix(*params, o.length, length_cap());

  std::optional<ComplexityProfile> profile;
  if (o.complexity) profile = factor_complexity(w, o.complexity);
  if (profile && !o.census && !o.overlap) {
    out << (params ? complexity_csv(complexity_bounds(*profile, *params)) : complexity_csv(*profile));
    return kOk;
  }
  nlohmann::ordered_json j;
  j["length"] = w.size();
  if (profile) {
    auto rows = nlohmann::ordered_json::array();
    if (params) {
      for (const auto& r : complexity_bounds(*profile, *params)) {
        rows.push_back({{"n", r.n}, {"C", r.count}, {"lower_bound", r.lower}, {"upper_bound", r.upper},
                        {"lower_holds", r.lower_holds}, {"upper_holds", r.upper_holds}});
      }
    } else {
      for (std::size_t n = 1; n <= profile->n_max(); ++n) rows.push_back({{"n", n}, {"C", profile->at(n)}});
    }
    j["complexity"] = std::move(rows);
  }
  if (o.census) j["census"] = to_json(palindrome_census(w));
  if (o.overlap) j["overlap"] = to_json(find_overlap(w));
  out << j.dump(2) << '\n';
  return kOk;
}

void run_suites(const Options& o, const TbmParams& p, std::vector<VerificationReport>& reports) {
  const bool all = o.suite == "all";
  if (all || o.suite == "theorem") {
    reports.push_back(verify_canonical_prefix(p, o.length));
    reports.push_back(verify_theorem(p, o.length));
  }
  if (all || o.suite == "lemmas") {
    for (auto& r : verify_lemma_suite(p, o.levels, length_cap())) reports.push_back(std::move(r));
  }
  if (all || o.suite == "properties") {
    for (auto& r : verify_properties(p, o.prefix)) reports.push_back(std::move(r));
  }
}

int verify_cmd(const Options& o, const CLI::App& sub, std::ostream& out) {
  if ((sub.count("--cell") > 0) == (sub.count("--grid") > 0)) {
    throw CLI::ValidationError("verify needs exactly one of --cell or --grid");
  }
  if (o.length > length_cap()) throw ResourceError("--len exceeds the length cap");
  std::vector<VerificationReport> reports;
  if (sub.count("--cell")) {
    const auto [b, m] = parse_pair(o.cell);
    run_suites(o, TbmParams(b, m), reports);
  } else {
    const auto [b_max, m_max] = parse_pair(o.grid);
    if (b_max < 2 || m_max < 2) throw ParseError("grid bounds must be at least 2");
    if (o.suite == "theorem") {
      reports = theorem_grid(2, b_max, 2, m_max, o.length).cells;
    } else {
      for (std::uint32_t b = 2; b <= b_max; ++b) {
        for (std::uint32_t m = 2; m <= m_max; ++m) run_suites(o, TbmParams(b, m), reports);
      }
    }
  }
  const bool refuted = std::any_of(reports.begin(), reports.end(),
                                   [](const VerificationReport& r) { return r.verdict == Verdict::refuted; });
  if (reports.size() == 1) {
    out << to_json(reports.front(), o.stable).dump(2) << '\n';
  } else {
    out << to_json(reports, o.stable).dump(2) << '\n';
  }
  return refuted ? kRefuted : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudopalindromic closure and generalized Thue-Morse words", "gpsw"};
  app.require_subcommand(1);
  Options o;

  auto* gen_cmd = app.add_subcommand("gen", "Prefix of t_{b,m}");
  gen_cmd->add_option("--b", o.b, "base")->required();
  gen_cmd->add_option("--m", o.m, "modulus")->required();
  gen_cmd->add_option("--len", o.length, "prefix length")->required();
  gen_cmd->add_option("--via", o.via, "generator")->check(CLI::IsMember({"digits", "phi"}));

  auto* closure_sub = app.add_subcommand("closure", "Pseudopalindromic closure of a word");
  closure_sub->add_option("--m", o.m, "modulus")->required();
  closure_sub->add_option("--word", o.word, "word")->required();
  closure_sub->add_option("--anti", o.anti, "antimorphism psi:x (R/E when m = 2)")->required();

  auto* gps_sub = app.add_subcommand("gps", "Generalized pseudostandard word from a directive bisequence");
  gps_sub->add_option("--m", o.m, "modulus")->required();
  gps_sub->add_option("--delta", o.delta, "letters, e.g. 0(101)")->required();
  gps_sub->add_option("--theta", o.theta, "antimorphisms, e.g. (R E)")->required();
  auto* steps_opt = gps_sub->add_option("--steps", o.steps, "print the first N closure steps");
  auto* len_opt = gps_sub->add_option("--len", o.length, "print the length-L prefix");
  steps_opt->excludes(len_opt);

  auto* infer_sub = app.add_subcommand("infer", "Directive chains that generate a finite word");
  infer_sub->add_option("--m", o.m, "modulus")->required();
  infer_sub->add_option("--word", o.word, "word")->required();
  infer_sub->add_option("--max-chains", o.max_chains, "maximum number of chains listed");

  auto* analyze_sub = app.add_subcommand("analyze", "Factor complexity, palindrome census, overlaps");
  analyze_sub->add_option("--m", o.m, "modulus")->required();
  analyze_sub->add_option("--word", o.word, "word");
  analyze_sub->add_option("--b", o.b, "analyze a prefix of t_{b,m}");
  analyze_sub->add_option("--len", o.length, "prefix length for --b");
  analyze_sub->add_option("--complexity", o.complexity, "C(n) for n = 1..N");
  analyze_sub->add_flag("--census", o.census, "distinct pseudopalindromes per antimorphism");
  analyze_sub->add_flag("--overlap", o.overlap, "leftmost shortest overlap x v x v x");

  auto* verify_sub = app.add_subcommand("verify", "Executable checks on t_{b,m}");
  verify_sub->add_option("--cell", o.cell, "single cell B,M");
  verify_sub->add_option("--grid", o.grid, "all cells 2..Bmax x 2..Mmax");
  verify_sub->add_option("--len", o.length, "compared prefix length")->default_val(4096);
  verify_sub->add_option("--suite", o.suite, "checks to run")
      ->check(CLI::IsMember({"theorem", "lemmas", "properties", "all"}));
  verify_sub->add_option("--levels", o.levels, "lemma levels n = 0..N");
  verify_sub->add_option("--prefix", o.prefix, "prefix length for property checks");
  verify_sub->add_flag("--stable", o.stable, "omit timing metadata");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return gen(o, out);
    if (closure_sub->parsed()) return closure_cmd(o, out);
    if (gps_sub->parsed()) return gps_cmd(o, *gps_sub, out);
    if (infer_sub->parsed()) return infer_cmd(o, out);
    if (analyze_sub->parsed()) return analyze_cmd(o, *analyze_sub, out);
    if (verify_sub->parsed()) return verify_cmd(o, *verify_sub, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gpsw::cli
