#include "wmu/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "wmu/classes.hpp"
#include "wmu/error.hpp"
#include "wmu/mc.hpp"
#include "wmu/surfaces.hpp"
#include "wmu/trace.hpp"
#include "wmu/weingarten.hpp"

namespace wmu::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::vector<std::string> words;
  std::string file;
  int rank = 0;  // 0: infer
  int laurent_depth = kDefaultLaurentDepth;
  std::uint64_t pair_cap = kDefaultPairCap;
  int threads = 0;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool no_cyclic_reduce = false;

  EnumerationConfig enumeration() const {
    EnumerationConfig c;
    c.pair_cap = pair_cap;
    c.threads = threads;
    c.cyclic_reduce = !no_cyclic_reduce;
    return c;
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

json integer_json(const BigInt& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return json(z.get_si());
  return json(z.get_str());
}

json rational_json(const BigRational& q) {
  return json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

json polynomial_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(rational_json(c));
  return a;
}

json function_json(const RationalFunction& f) {
  return json{{"num", polynomial_json(f.numerator())}, {"den", polynomial_json(f.denominator())}};
}

json laurent_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(rational_json(c));
  return json{{"zero", s.identically_zero},
              {"leading_exponent", s.leading_exponent},
              {"coefficients", coeffs},
              {"truncation_order", s.truncation_order}};
}

json chi_json(int chi) {
  if (chi == kMinusInfinity) return json("-inf");
  return json(chi);
}

std::string chi_text(int chi) { return chi == kMinusInfinity ? "-inf" : std::to_string(chi); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

WordTuple tuple_from_texts(const std::vector<std::string>& texts, int rank) {
  std::vector<Word> words;
  for (const auto& text : texts) words.push_back(rank > 0 ? parse(text, rank) : parse(text));
  if (rank > 0) return WordTuple(std::move(words), rank);
  return WordTuple(std::move(words));
}

// One tuple from -w, or one per line of --file.
std::vector<WordTuple> load_tuples(const RunConfig& cfg) {
  std::vector<WordTuple> out;
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw UsageError("cannot open " + cfg.file);
    int rank = cfg.rank;
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.rfind("rank=", 0) == 0) {
        try {
          rank = std::stoi(line.substr(5));
        } catch (const std::exception&) {
          throw UsageError("bad rank header: " + line);
        }
        if (rank < 1) throw UsageError("rank must be positive");
        continue;
      }
      std::vector<std::string> parts;
      std::stringstream ss(line);
      std::string part;
      while (std::getline(ss, part, ';')) parts.push_back(trim(part));
      out.push_back(tuple_from_texts(parts, rank));
    }
  }
  if (!cfg.words.empty()) out.push_back(tuple_from_texts(cfg.words, cfg.rank));
  if (out.empty()) throw UsageError("no words given (use -w or --file)");
  return out;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-w,--word", cfg.words, "word of the tuple (repeatable)")->allow_extra_args(false);
  sub->add_option("--file", cfg.file, "word list: one tuple per line, ';' between words");
  sub->add_option("--rank", cfg.rank, "number of generators")->check(CLI::PositiveNumber);
  sub->add_flag("--no-cyclic-reduce", cfg.no_cyclic_reduce, "use the words as written");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--pair-cap", cfg.pair_cap, "maximum number of matching pairs")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--json", cfg.json, "emit JSON");
}

json envelope(const std::string& command, json results) {
  return json{{"schema_version", "1"}, {"command", command}, {"results", std::move(results)}};
}

void run_trace(const RunConfig& cfg, std::ostream& out) {
  TraceOptions opts;
  opts.enumeration = cfg.enumeration();
  opts.laurent_depth = cfg.laurent_depth;
  json results = json::array();
  for (const auto& t : load_tuples(cfg)) {
    const TraceResult r = trace_exact(t, opts);
    const LeadingTerm lead = trace_leading(t, opts.enumeration);
    const bool parity = parity_report(r, static_cast<int>(t.size()));
    if (cfg.json) {
      json j{{"tuple", t.to_string()},
             {"balanced", r.balanced},
             {"function", function_json(r.function)},
             {"text", r.function.to_string()},
             {"validity_threshold", r.validity_threshold},
             {"laurent", laurent_json(r.laurent)},
             {"ch", chi_json(lead.exponent)},
             {"ch_coefficient", integer_json(lead.coefficient)},
             {"degenerate", lead.degenerate},
             {"parity", parity}};
      if (!r.function.is_zero()) {
        j["leading"] = json{{"exponent", r.leading_exponent},
                            {"coefficient", rational_json(r.leading_coefficient)}};
      }
      results.push_back(std::move(j));
      continue;
    }
    out << "tuple: " << t.to_string() << "\n";
    if (!r.balanced) {
      out << "Tr(n) = 0 (unbalanced)\n";
      continue;
    }
    out << "Tr(n) = " << r.function.to_string() << "\n";
    out << "valid for n >= " << r.validity_threshold << "\n";
    out << "laurent: " << r.laurent.to_string() << "\n";
    if (r.function.is_zero()) {
      out << "leading: none (identically zero)\n";
    } else {
      out << "leading: " << r.leading_coefficient.get_str() << " n^" << r.leading_exponent << "\n";
    }
    out << "ch = " << lead.exponent << ", coefficient at n^ch = " << lead.coefficient.get_str()
        << (lead.degenerate ? " (degenerate)" : "") << "\n";
  }
  if (cfg.json) out << envelope("trace", std::move(results)).dump() << "\n";
}

void run_chi(const RunConfig& cfg, bool histogram, std::ostream& out) {
  json results = json::array();
  for (const auto& t : load_tuples(cfg)) {
    const EulerSummary s = max_euler(t, cfg.enumeration());
    const bool single = t.size() == 1;
    const int cl = !s.balanced ? kInfiniteLength : (1 - s.ch) / 2;
    if (cfg.json) {
      json j{{"tuple", t.to_string()},
             {"balanced", s.balanced},
             {"ch", chi_json(s.ch)},
             {"diagonal_ch", chi_json(s.diagonal_ch)},
             {"pairs", s.pairs},
             {"achieving_pairs", s.argmax.size()}};
      if (single) j["cl"] = s.balanced ? json(cl) : json("inf");
      if (histogram) {
        json h = json::object();
        for (const auto& [chi, count] : s.histogram) h[std::to_string(chi)] = count;
        j["histogram"] = h;
      }
      results.push_back(std::move(j));
      continue;
    }
    out << "tuple: " << t.to_string() << "\n";
    out << "ch = " << chi_text(s.ch);
    if (single) out << ", cl = " << (s.balanced ? std::to_string(cl) : "inf");
    if (!s.balanced) {
      out << " (unbalanced)\n";
      continue;
    }
    out << "\n";
    out << "achieving pairs: " << s.argmax.size() << " of " << s.pairs << "\n";
    out << "diagonal ch = " << chi_text(s.diagonal_ch) << "\n";
    if (histogram) {
      for (auto it = s.histogram.rbegin(); it != s.histogram.rend(); ++it) {
        out << "  chi " << it->first << ": " << it->second << "\n";
      }
    }
  }
  if (cfg.json) out << envelope("chi", std::move(results)).dump() << "\n";
}

void run_classes(const RunConfig& cfg, std::ostream& out) {
  json results = json::array();
  for (const auto& t : load_tuples(cfg)) {
    const ClassReport report = solution_classes(t, cfg.enumeration());
    const LeadingTerm lead = leading_via_classes(report);
    json classes = json::array();
    if (!cfg.json) {
      out << "tuple: " << t.to_string() << "\n";
      if (!report.balanced) {
        out << "no solutions (unbalanced)\n";
        continue;
      }
      out << "ch = " << report.ch << ", classes = " << report.classes.size() << "\n";
    }
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
      const SolutionClass& c = report.classes[k];
      std::map<int, int> ranks;
      for (int r : c.pmp.rank) ++ranks[r];
      const auto& rep = c.pmp.elements.front();
      const int abel = abelianization_rank(c.pi1);
      if (cfg.json) {
        json rh = json::object();
        for (const auto& [r, n] : ranks) rh[std::to_string(r)] = n;
        classes.push_back(json{
            {"size", c.pmp.elements.size()},
            {"rank_histogram", rh},
            {"f_vector", json::array({c.complex.vertices, c.complex.edges.size(), c.complex.triangles.size()})},
            {"euler_characteristic", integer_json(c.complex_euler)},
            {"mobius_sum", integer_json(c.mobius_sum)},
            {"pi1_generators", c.pi1.generators},
            {"pi1_relators", c.pi1.relators.size()},
            {"pi1_abelian_rank", abel},
            {"representative", json{{"sigma", render_matching(report.occ, rep.sigma)},
                                    {"tau", render_matching(report.occ, rep.tau)}}}});
        continue;
      }
      out << "class " << k + 1 << ": size " << c.pmp.elements.size() << ", ranks";
      for (const auto& [r, n] : ranks) out << " " << r << ":" << n;
      out << ", V=" << c.complex.vertices << " E=" << c.complex.edges.size()
          << " T=" << c.complex.triangles.size() << ", chi = " << c.complex_euler.get_str()
          << ", mobius sum = " << c.mobius_sum.get_str() << ", pi1: " << c.pi1.generators
          << " generators, " << c.pi1.relators.size() << " relators, abelian rank " << abel << "\n";
      out << "  sigma = " << render_matching(report.occ, rep.sigma) << "\n";
      out << "  tau   = " << render_matching(report.occ, rep.tau) << "\n";
    }
    if (cfg.json) {
      results.push_back(json{{"tuple", t.to_string()},
                             {"balanced", report.balanced},
                             {"ch", chi_json(report.ch)},
                             {"classes", classes},
                             {"leading_coefficient", integer_json(lead.coefficient)},
                             {"two_layer_agrees", report.two_layer_agrees}});
      continue;
    }
    out << "leading coefficient = " << lead.coefficient.get_str() << "\n";
    out << "bottom-two-layer partition agrees: " << (report.two_layer_agrees ? "yes" : "no") << "\n";
  }
  if (cfg.json) out << envelope("classes", std::move(results)).dump() << "\n";
}

void run_incompressible(const RunConfig& cfg, const std::string& sigma_text,
                        const std::string& tau_text, std::ostream& out) {
  const auto tuples = load_tuples(cfg);
  if (tuples.size() != 1) throw UsageError("incompressible takes exactly one tuple");
  const WordTuple& t = tuples.front();
  if (!is_balanced(t)) throw UsageError("tuple is not balanced; it has no matchings");
  const PreparedTuple prep = prepare(t, !cfg.no_cyclic_reduce);
  const OccurrenceTable occ = occurrences(prep.core);
  const MatchingPair p = analyze_pair(occ, parse_matching(occ, sigma_text), parse_matching(occ, tau_text));
  const bool ok = is_incompressible(occ, p, cfg.pair_cap);
  const int chi = p.euler_char + prep.empty_words;
  if (cfg.json) {
    json j{{"tuple", prep.core.to_string()},
           {"chi", chi},
           {"block_count", p.block_count},
           {"z_disc_count", p.z_disc_count},
           {"incompressible", ok}};
    out << envelope("incompressible", json::array({j})).dump() << "\n";
    return;
  }
  out << "tuple: " << prep.core.to_string() << "\n";
  out << "B = " << p.block_count << ", z = " << p.z_disc_count << ", chi = " << chi << "\n";
  out << "incompressible: " << (ok ? "yes" : "no") << "\n";
}

void run_scl(const RunConfig& cfg, int budget, std::ostream& out) {
  json results = json::array();
  for (const auto& t : load_tuples(cfg)) {
    if (t.size() != 1) throw UsageError("scl takes one word per tuple");
    const BigRational bound = scl_upper_bound(t[0], budget, cfg.enumeration());
    if (cfg.json) {
      results.push_back(json{{"word", t[0].to_string()}, {"budget", budget}, {"bound", rational_json(bound)}});
      continue;
    }
    out << "word: " << t[0].to_string() << "\n";
    out << "scl <= " << bound.get_str() << " (budget " << budget << ")\n";
  }
  if (cfg.json) out << envelope("scl", std::move(results)).dump() << "\n";
}

void run_wg(const RunConfig& cfg, int L, bool check, int inversion_limit, std::ostream& out) {
  const WeingartenTable table = wg_table(L);
  bool agrees = true;
  if (check) {
    const WeingartenTable oracle = wg_inversion(L, inversion_limit);
    agrees = oracle.entries == table.entries;
  }
  if (cfg.json) {
    json entries = json::array();
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
      const auto [e, c] = wg_leading(it->first);
      entries.push_back(json{{"cycle_type", it->first.parts()},
                             {"function", function_json(it->second)},
                             {"text", it->second.to_string()},
                             {"leading", json{{"exponent", e}, {"coefficient", integer_json(c)}}}});
    }
    json j{{"L", L}, {"entries", entries}};
    if (check) j["inversion_agrees"] = agrees;
    out << envelope("wg", json::array({j})).dump() << "\n";
  } else {
    for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
      out << "Wg" << it->first.to_string() << " = " << it->second.to_string() << "\n";
    }
    if (check) out << "inversion check: " << (agrees ? "ok" : "MISMATCH") << "\n";
  }
  if (!agrees) throw Error("character formula and inversion disagree");
}

void run_mc(const RunConfig& cfg, int n, std::uint64_t samples, std::ostream& out) {
  json results = json::array();
  for (const auto& t : load_tuples(cfg)) {
    const McEstimate e = estimate(t, n, samples, cfg.seed, cfg.threads);
    TraceOptions opts;
    opts.enumeration = cfg.enumeration();
    opts.laurent_depth = 1;
    const TraceResult exact = trace_exact(t, opts);
    std::optional<BigRational> value;
    std::string note;
    try {
      value = evaluate_trace(exact, n);
    } catch (const Error& ex) {
      note = ex.what();
    }
    const double exact_d = value ? value->get_d() : 0.0;
    const double dev = e.std_error > 0 ? std::abs(e.mean - std::complex<double>(exact_d, 0)) / e.std_error : 0.0;
    if (cfg.json) {
      json j{{"tuple", t.to_string()},
             {"n", n},
             {"samples", samples},
             {"seed", e.seed},
             {"mean", json::array({e.mean.real(), e.mean.imag()})},
             {"stderr", e.std_error}};
      if (value) {
        j["exact"] = rational_json(*value);
        j["deviation_sigma"] = dev;
      } else {
        j["exact_unavailable"] = note;
      }
      results.push_back(std::move(j));
      continue;
    }
    std::ostringstream line;
    line << std::setprecision(6);
    line << "tuple: " << t.to_string() << "\n";
    line << "n = " << n << ", samples = " << samples << ", seed = " << e.seed << "\n";
    line << "mean = " << e.mean.real() << (e.mean.imag() < 0 ? " - " : " + ")
         << std::abs(e.mean.imag()) << "i, stderr = " << e.std_error << "\n";
    if (value) {
      line << "exact = " << value->get_str() << " (" << exact_d << "), deviation = " << dev << " stderr\n";
    } else {
      line << "exact: unavailable (" << note << ")\n";
    }
    out << line.str();
  }
  if (cfg.json) out << envelope("verify-mc", std::move(results)).dump() << "\n";
}

template <class T>
T env_or(const char* name, T fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return static_cast<T>(std::stoull(v));
  } catch (const std::exception&) {
    throw UsageError(std::string("bad value for ") + name);
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact word measures on unitary groups", "wmu"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.seed = env_or<std::uint64_t>("WMU_SEED", kDefaultSeed);
    cfg.threads = env_or<int>("WMU_THREADS", 0);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* trace = app.add_subcommand("trace", "exact expected product of traces");
  add_input_options(trace, cfg);
  add_common_options(trace, cfg);
  trace->add_option("--laurent", cfg.laurent_depth, "Laurent terms")->check(CLI::PositiveNumber);

  bool histogram = false;
  auto* chi = app.add_subcommand("chi", "maximal Euler characteristic and commutator length");
  add_input_options(chi, cfg);
  add_common_options(chi, cfg);
  chi->add_flag("--histogram", histogram, "print the full chi histogram");

  auto* classes = app.add_subcommand("classes", "solution classes and their complexes");
  add_input_options(classes, cfg);
  add_common_options(classes, cfg);

  std::string sigma_text, tau_text;
  auto* incompressible = app.add_subcommand("incompressible", "check one matching pair");
  add_input_options(incompressible, cfg);
  add_common_options(incompressible, cfg);
  incompressible->add_option("--sigma", sigma_text, "matching, e.g. \"1->3 2->4\"")->required();
  incompressible->add_option("--tau", tau_text, "matching")->required();

  int budget = 0;
  auto* scl = app.add_subcommand("scl", "upper bound on stable commutator length");
  add_input_options(scl, cfg);
  add_common_options(scl, cfg);
  scl->add_option("--budget", budget, "maximal total power")->required()->check(CLI::PositiveNumber);

  int L = 0;
  bool check = false;
  int inversion_limit = kDefaultInversionLimit;
  auto* wg = app.add_subcommand("wg", "Weingarten table");
  wg->add_option("--L", L, "degree")->required()->check(CLI::PositiveNumber);
  wg->add_flag("--check", check, "compare with the class-algebra inversion");
  wg->add_option("--inversion-limit", inversion_limit, "largest L for the inversion")
      ->check(CLI::PositiveNumber);
  wg->add_flag("--json", cfg.json, "emit JSON");

  int n = 0;
  std::uint64_t samples = 100000;
  auto* mc = app.add_subcommand("verify-mc", "Monte-Carlo check against the exact value");
  add_input_options(mc, cfg);
  add_common_options(mc, cfg);
  mc->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  mc->add_option("--samples", samples, "sample count")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  mc->add_option("--seed", cfg.seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (trace->parsed()) run_trace(cfg, out);
    else if (chi->parsed()) run_chi(cfg, histogram, out);
    else if (classes->parsed()) run_classes(cfg, out);
    else if (incompressible->parsed()) run_incompressible(cfg, sigma_text, tau_text, out);
    else if (scl->parsed()) run_scl(cfg, budget, out);
    else if (wg->parsed()) run_wg(cfg, L, check, inversion_limit, out);
    else if (mc->parsed()) run_mc(cfg, n, samples, out);
  } catch (const LimitError& e) {
    err << "limit exceeded (" << e.cap_name() << "): " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace wmu::cli
