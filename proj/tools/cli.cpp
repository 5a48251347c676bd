#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "crossing/constructions.hpp"
#include "crossing/graph6.hpp"
#include "crossing/harness.hpp"
#include "crossing/io.hpp"
#include "crossing/solver.hpp"

namespace crossing::cli {
namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

// "3/2", "0.25" or "2" as an exact rational.
Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) throw ConfigError("too many decimals in " + text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
    return Rational(whole * scale + (text[0] == '-' ? -part : part), scale);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("not a number: " + text);
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int lo = std::stoi(item.substr(0, dash)), hi = std::stoi(item.substr(dash + 1));
        for (int x = lo; x <= hi; ++x) out.push_back(x);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::exception&) {
      throw ConfigError("bad list item: " + item);
    }
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::vector<std::pair<Rational, int>> parse_grid(const std::string& text) {
  // "a:n,a:n"
  std::vector<std::pair<Rational, int>> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("grid items look like a:n, got " + item);
    out.push_back({parse_rational(item.substr(0, colon)), parse_list(item.substr(colon + 1)).front()});
  }
  return out;
}

struct Common {
  int workers = 0;
  std::int64_t budget = 0;
  std::string json_path;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string command;
  std::string config_hash;
  std::optional<std::uint64_t> seed;

  Json meta() const {
    Json m{{"tool", "crossing"}, {"command", command}, {"config_hash", config_hash}};
    m["seed"] = seed ? Json(*seed) : Json(nullptr);
    m["timestamp"] = now_utc();
    return m;
  }

  // Writes {"meta": ..., "data": ...} to path, or stdout when path is empty.
  void emit(const std::string& path, const Json& data) const {
    Json doc{{"meta", meta()}, {"data", data}};
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      out << text;
    } else {
      write_text(path, text);
      out << "wrote " << path << "\n";
    }
  }
};

Graph read_graph(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    std::string body = slurp(file);
    const auto end = body.find_first_of("\r\n");
    return from_graph6(body.substr(0, end));
  }
  if (text.empty()) throw ConfigError("a graph (graph6 text or --file) is required");
  return from_graph6(text);
}

HarnessOptions harness_options(const Common& c) {
  HarnessOptions o;
  o.workers = c.workers;
  if (c.budget > 0) o.node_budget = c.budget;
  return o;
}

// Certificate from a file, or the best drawing the solver finds for a graph.
DrawingCertificate load_certificate(const std::string& certificate_path, const std::string& graph,
                                    const std::string& file, const Common& c, Context& ctx) {
  if (!certificate_path.empty()) {
    const Json doc = Json::parse(slurp(certificate_path));
    return certificate_from_json(doc.contains("data") ? doc["data"] : doc);
  }
  const Graph g = read_graph(graph, file);
  SolverOptions so;
  so.workers = c.workers;
  if (c.budget > 0) so.node_budget = c.budget;
  SolveResult r = solve(g, so);
  if (r.status != SolveResult::Status::Exact)
    ctx.err << "note: drawing with " << r.upper << " crossings is not proven optimal (lower bound " << r.lower
            << ")\n";
  return std::move(*r.certificate);
}

void add_common(CLI::App* sub, Common& c, std::int64_t default_budget) {
  c.budget = default_budget;
  sub->add_option("--workers", c.workers, "OpenMP threads (0 = all available)")->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", c.budget, "search nodes per solver call (0 = unlimited)")->check(CLI::NonNegativeNumber);
  sub->add_option("--json", c.json_path, "JSON output path (default: stdout)");
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossing numbers of small graphs, kappa tables and the blow-up and sampling constructions", "crossing"};
  app.set_config("--config", "", "TOML/INI file with option values (command line wins)");
  app.require_subcommand(1);

  // cr
  Common cr_c;
  std::string cr_graph, cr_file, cr_cert;
  auto* cr = app.add_subcommand("cr", "exact crossing number of one graph");
  cr->add_option("graph", cr_graph, "graph6 text");
  cr->add_option("--file", cr_file, "file whose first line is graph6");
  cr->add_option("--certificate", cr_cert, "write the drawing certificate here");
  add_common(cr, cr_c, 0);

  // kappa
  Common kp_c;
  std::string kp_class = "All", kp_csv;
  int kp_n = 0, kp_n_max = 0, kp_e = -1;
  auto* kp = app.add_subcommand("kappa", "kappa(n, e) tables");
  kp->add_option("--class", kp_class, "class, e.g. Bipartite or Intersection(KtFree(4),LColorable(3))");
  kp->add_option("--n", kp_n, "single vertex count");
  kp->add_option("--n-max", kp_n_max, "all n from 1 to this");
  kp->add_option("--e", kp_e, "single edge count (requires --n)");
  kp->add_option("--csv", kp_csv, "CSV output path");
  add_common(kp, kp_c, 2'000'000);

  // gamma
  Common gm_c;
  std::string gm_class = "All", gm_a, gm_ns;
  auto* gm = app.add_subcommand("gamma", "kappa(n, ceil(a n)) / n series");
  gm->add_option("--class", gm_class, "class");
  gm->add_option("--a", gm_a, "edge density, e.g. 3/2")->required();
  gm->add_option("--n", gm_ns, "vertex counts, e.g. 5,6,7 or 4-8")->required();
  add_common(gm, gm_c, 2'000'000);

  // audit
  Common au_c;
  std::string au_table, au_grid, au_class = "All", au_sandwich_a;
  int au_sandwich_n = 0;
  auto* au = app.add_subcommand("audit", "subadditivity, crossing lemma and monotonicity audits");
  au->add_option("--table", au_table, "kappa table (.json or .csv)");
  au->add_option("--class", au_class, "class for --sandwich-* and --d-grid");
  au->add_option("--sandwich-a", au_sandwich_a, "density a >= 4 of a sandwich point");
  au->add_option("--sandwich-n", au_sandwich_n, "vertex count of a sandwich point");
  au->add_option("--d-grid", au_grid, "D estimate grid, e.g. 3:7,5/2:6");
  add_common(au, au_c, 2'000'000);

  // blowup
  Common bu_c;
  std::string bu_graph, bu_file, bu_cert;
  int bu_t = 0, bu_L = 2, bu_K = 1;
  auto* bu = app.add_subcommand("blowup", "split to bounded degree, clone L times, K copies");
  bu->add_option("graph", bu_graph, "graph6 text");
  bu->add_option("--file", bu_file, "file whose first line is graph6");
  bu->add_option("--certificate", bu_cert, "input drawing (JSON) instead of a graph");
  bu->add_option("--threshold", bu_t, "degree threshold t (0 = no splitting)")->check(CLI::NonNegativeNumber);
  bu->add_option("--L", bu_L, "clones per vertex")->check(CLI::PositiveNumber);
  bu->add_option("--K", bu_K, "disjoint copies")->check(CLI::PositiveNumber);
  add_common(bu, bu_c, 2'000'000);

  // sample
  Common sm_c;
  std::string sm_graph, sm_file, sm_cert, sm_p;
  std::int64_t sm_trials = 100000;
  std::uint64_t sm_seed = 0;
  bool sm_exact = false;
  auto* sm = app.add_subcommand("sample", "random induced subgraphs of a drawing");
  sm->add_option("graph", sm_graph, "graph6 text");
  sm->add_option("--file", sm_file, "file whose first line is graph6");
  sm->add_option("--certificate", sm_cert, "input drawing (JSON) instead of a graph");
  sm->add_option("--p", sm_p, "inclusion probability, e.g. 0.5 or 1/2")->required();
  sm->add_option("--trials", sm_trials, "number of trials")->check(CLI::PositiveNumber);
  sm->add_option("--seed", sm_seed, "RNG seed")->required();
  sm->add_flag("--exact", sm_exact, "also report exact expectations");
  add_common(sm, sm_c, 2'000'000);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Context ctx{out, err, chosen->get_name(), fnv1a_hex(chosen->get_name() + "\n" + chosen->config_to_str(true, false)),
              std::nullopt};
  try {
    if (chosen == cr) {
      const Graph g = read_graph(cr_graph, cr_file);
      SolverOptions so;
      so.workers = cr_c.workers;
      if (cr_c.budget > 0) so.node_budget = cr_c.budget;
      const SolveResult r = solve(g, so);
      if (!cr_cert.empty() && r.certificate)
        write_text(cr_cert, Json{{"meta", ctx.meta()}, {"data", to_json(*r.certificate)}}.dump(2) + "\n");
      if (r.status != SolveResult::Status::Exact) {
        out << "cr>=" << r.lower << " cr<=" << r.upper << " (budget exceeded after " << r.nodes << " nodes)\n";
        return kBudget;
      }
      if (!verify_certificate(*r.certificate)) throw InvariantFailure("solver certificate failed verification");
      out << "cr=" << r.upper << "\n";
      if (!cr_cert.empty()) out << "certificate=" << cr_cert << "\n";
      if (!cr_c.json_path.empty())
        ctx.emit(cr_c.json_path, Json{{"graph", to_json(g)}, {"cr", r.upper}, {"nodes", r.nodes},
                                      {"certificate", to_json(*r.certificate)}});
      return kOk;
    }
    if (chosen == kp) {
      const ClassSpec spec = ClassSpec::parse(kp_class);
      const HarnessOptions o = harness_options(kp_c);
      std::vector<KappaRecord> records;
      if (kp_e >= 0) {
        if (kp_n < 1) throw ConfigError("--e needs --n");
        records.push_back(kappa(spec, kp_n, kp_e, o));
      } else if (kp_n > 0) {
        records = kappa_row(spec, kp_n, 0, o);
      } else if (kp_n_max > 0) {
        records = kappa_table(spec, kp_n_max, o);
      } else {
        throw ConfigError("kappa needs --n, --n-max or --n with --e");
      }
      for (const auto& r : records)
        if (r.certificate && !verify_certificate(*r.certificate))
          throw InvariantFailure("kappa witness certificate failed verification");
      for (const auto& r : records)
        out << "n=" << r.n << " e=" << r.e << " kappa=" << r.kappa << (r.exact ? "" : " (lower " + std::to_string(r.lower) + ")")
            << "\n";
      if (!kp_csv.empty()) {
        std::ostringstream csv;
        write_kappa_csv(csv, records, "config_hash " + ctx.config_hash + "\nseed none\ntimestamp " + now_utc());
        write_text(kp_csv, csv.str());
        out << "wrote " << kp_csv << "\n";
      }
      if (!kp_c.json_path.empty()) ctx.emit(kp_c.json_path, to_json(records));
      bool all_exact = true;
      for (const auto& r : records) all_exact = all_exact && r.exact;
      return all_exact ? kOk : kBudget;
    }
    if (chosen == gm) {
      const auto series = gamma_series(ClassSpec::parse(gm_class), parse_rational(gm_a), parse_list(gm_ns),
                                       harness_options(gm_c));
      for (const auto& p : series.points)
        out << "n=" << p.n << " e=" << p.e << " kappa=" << p.kappa << " gamma=" << p.value << (p.exact ? "" : " (upper)")
            << "\n";
      ctx.emit(gm_c.json_path, to_json(series));
      return kOk;
    }
    if (chosen == au) {
      Json report = Json::object();
      bool failed = false;
      if (!au_table.empty()) {
        std::vector<KappaRecord> table;
        if (std::filesystem::path(au_table).extension() == ".csv") {
          std::ifstream in(au_table);
          if (!in) throw ConfigError("cannot read " + au_table);
          table = read_kappa_csv(in);
        } else {
          Json doc = Json::parse(slurp(au_table));
          table = kappa_records_from_json(doc.contains("data") ? doc["data"] : doc);
        }
        const auto sub = subadditivity_audit(table);
        const auto lemma = crossing_lemma_audit(table);
        const auto mono = monotonicity_audit(table);
        int exact = 0;
        for (const auto& r : table) exact += r.exact;
        report["records"] = table.size();
        report["exact_records"] = exact;
        report["subadditivity"] = to_json(sub);
        report["crossing_lemma"] = to_json(lemma);
        report["monotonicity"] = to_json(mono);
        failed = !sub.empty() || !lemma.empty() || !mono.empty();
        out << "records=" << table.size() << " exact=" << exact << " subadditivity_violations=" << sub.size()
            << " crossing_lemma_violations=" << lemma.size() << " monotonicity_violations=" << mono.size() << "\n";
      }
      const ClassSpec spec = ClassSpec::parse(au_class);
      if (!au_sandwich_a.empty()) {
        const auto s = sandwich_audit(spec, parse_rational(au_sandwich_a), au_sandwich_n, harness_options(au_c));
        report["sandwich"] = to_json(s);
        failed = failed || s.lower_side == SideStatus::Violated || s.upper_side == SideStatus::Violated;
        out << "sandwich lower=" << report["sandwich"]["lower_side"].get<std::string>()
            << " upper=" << report["sandwich"]["upper_side"].get<std::string>() << "\n";
      }
      if (!au_grid.empty()) {
        const auto d = d_estimate(spec, parse_grid(au_grid), harness_options(au_c));
        report["d_estimate"] = to_json(d);
        out << "d=" << d.d_value << " window_ok=" << (d.window_ok ? "true" : "false") << " (finite scale)\n";
      }
      if (report.empty()) throw ConfigError("audit needs --table, --sandwich-a/--sandwich-n or --d-grid");
      ctx.emit(au_c.json_path, report);
      return failed ? kInvariant : kOk;
    }
    if (chosen == bu) {
      DrawingCertificate c = load_certificate(bu_cert, bu_graph, bu_file, bu_c, ctx);
      if (bu_t > 0) c = split_to_max_degree(c, bu_t);
      const BlowupParams params{bu_t > 0 ? bu_t : std::max(1, c.base.max_degree()), bu_L, bu_K};
      const BlowupResult r = blow_up(c, params);
      if (!verify_certificate(r.certificate)) throw InvariantFailure("blow-up certificate failed verification");
      out << "n=" << r.certificate.base.order() << " e=" << r.certificate.base.size() << " counted=" << r.counted
          << " bound=" << r.bound << "\n";
      if (r.counted > r.bound) err << "note: counted crossings exceed the bound (possible for L >= 3)\n";
      ctx.emit(bu_c.json_path, to_json(r, params));
      return kOk;
    }
    if (chosen == sm) {
      ctx.seed = sm_seed;
      const Rational p = parse_rational(sm_p);
      const DrawingCertificate c = load_certificate(sm_cert, sm_graph, sm_file, sm_c, ctx);
      const double pd = static_cast<double>(p.numerator()) / static_cast<double>(p.denominator());
      const SampleStats s = sample_induced(c, pd, sm_trials, sm_seed, sm_c.workers);
      Json data = to_json(s);
      data["graph"] = to_json(c.base);
      data["crossing_count"] = c.crossing_count();
      if (sm_exact) {
        const auto x = exact_expectations(c, p);
        data["exact"] = {{"nu", to_json(x.nu)}, {"eta", to_json(x.eta)}, {"xi", to_json(x.xi)}};
      }
      out << "nu_mean=" << s.nu_mean << " eta_mean=" << s.eta_mean << " xi_mean=" << s.xi_mean << "\n";
      ctx.emit(sm_c.json_path, data);
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantFailure& e) {
    err << "invariant: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::logic_error& e) {
    // Precondition failures, bad class strings, empty classes and other
    // invalid input are usage errors.
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace crossing::cli
