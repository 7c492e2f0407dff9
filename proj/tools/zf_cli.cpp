// Command-line front end: graph6 in, JSON-lines or CSV out.
//
// Subcommands: exact, complement-exact, predict, bounds, verify, gen.
// Inputs are read from a file or stdin, one graph6 string per line; every
// input line yields one output record in input order. Parse failures are
// reported per line and processing continues.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "zf/forcing.hpp"
#include "zf/gen.hpp"
#include "zf/graph.hpp"
#include "zf/predict.hpp"
#include "zf/structure.hpp"

using json = nlohmann::ordered_json;

namespace {

enum class Cmd { Exact, ComplementExact, Predict, Bounds, Verify };

struct Options {
  std::string input = "-";
  std::string format = "json";
  int jobs = 0;  // 0 = library default
  std::uint64_t budget = 0;
  int max_n = 16;
  bool timing = false;
  // verify enumeration mode
  std::string family;
  int family_n = 0;
};

struct LineReport {
  int line_no = 0;
  std::string error;
  std::string graph6;
  int n = 0;
  std::optional<int> z_exact;
  std::optional<std::pair<int, int>> z_interval;
  std::optional<int> zc_exact;
  std::optional<std::pair<int, int>> zc_interval;
  std::optional<zf::Prediction> pred;
  std::optional<zf::KrsBound> krs;
  std::optional<int> min_degree_bound;
  std::optional<bool> forbidden;
  std::optional<bool> agree;
  bool budget_exhausted = false;
  double elapsed_ms = 0.0;

  bool ok() const { return error.empty(); }
};

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::string line;
  if (path == "-" || path.empty()) {
    while (std::getline(std::cin, line)) lines.push_back(line);
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    while (std::getline(in, line)) lines.push_back(line);
  }
  // tolerate CRLF input
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

void fill_exact(LineReport& rep, const zf::Graph& g, const Options& opts, bool on_complement) {
  if (g.order() > opts.max_n) {
    rep.error = "n exceeds --max-n guard (" + std::to_string(opts.max_n) +
                "); raise --max-n to solve exactly";
    return;
  }
  const bool inner_parallel = opts.jobs == 1;
  const zf::ZfResult r =
      zf::zero_forcing_number(on_complement ? g.complement() : g, {opts.budget, inner_parallel});
  auto& exact = on_complement ? rep.zc_exact : rep.z_exact;
  auto& interval = on_complement ? rep.zc_interval : rep.z_interval;
  if (r.exact()) {
    exact = r.value();
  } else {
    interval = {r.lo, r.hi};
    rep.budget_exhausted = true;
  }
}

void fill_bounds(LineReport& rep, const zf::Graph& g) {
  rep.krs = zf::krs_free_bound(g);
  const zf::Graph comp = g.complement();
  rep.min_degree_bound = comp.min_degree();
  if (g.order() >= 3) rep.forbidden = zf::forbidden_induced_test(comp);
}

LineReport process_line(Cmd cmd, const std::string& line, int line_no, const Options& opts) {
  LineReport rep;
  rep.line_no = line_no;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const zf::Graph g = zf::parse_graph6(line);
    rep.graph6 = zf::to_graph6(g);
    rep.n = g.order();
    switch (cmd) {
      case Cmd::Exact:
        fill_exact(rep, g, opts, false);
        break;
      case Cmd::ComplementExact:
        fill_exact(rep, g, opts, true);
        break;
      case Cmd::Predict:
        rep.pred = zf::predict_complement_zf(g);
        break;
      case Cmd::Bounds:
        fill_bounds(rep, g);
        break;
      case Cmd::Verify: {
        rep.pred = zf::predict_complement_zf(g);
        fill_exact(rep, g, opts, true);
        if (rep.zc_exact && rep.pred->exact())
          rep.agree = *rep.zc_exact == rep.pred->lo;
        break;
      }
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json to_json(const LineReport& rep, const Options& opts, const std::string& raw) {
  json j;
  if (!rep.ok()) {
    j["line"] = rep.line_no;
    j["input"] = raw;
    j["error"] = rep.error;
    return j;
  }
  j["graph6"] = rep.graph6;
  j["n"] = rep.n;
  if (rep.z_exact) j["z_exact"] = *rep.z_exact;
  if (rep.z_interval) j["z_interval"] = {{"lo", rep.z_interval->first}, {"hi", rep.z_interval->second}};
  if (rep.zc_exact) j["z_complement_exact"] = *rep.zc_exact;
  if (rep.zc_interval)
    j["z_complement_interval"] = {{"lo", rep.zc_interval->first}, {"hi", rep.zc_interval->second}};
  if (rep.pred)
    j["prediction"] = {{"lo", rep.pred->lo},
                       {"hi", rep.pred->hi},
                       {"rule", std::string(zf::rule_name(rep.pred->rule))},
                       {"notes", rep.pred->notes}};
  if (rep.krs)
    j["bounds"] = {{"krs_bound", rep.krs->bound},
                   {"r", rep.krs->r},
                   {"s", rep.krs->s},
                   {"min_degree_bound", *rep.min_degree_bound},
                   {"forbidden_test", rep.forbidden ? json(*rep.forbidden) : json()}};
  if (rep.agree) j["agree"] = *rep.agree;
  if (rep.budget_exhausted) j["budget_exhausted"] = true;
  if (opts.timing) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* kCsvHeader =
    "graph6,n,status,z_exact,z_lo,z_hi,z_complement_exact,zc_lo,zc_hi,"
    "pred_lo,pred_hi,rule,notes,krs_bound,krs_r,krs_s,min_degree_bound,"
    "forbidden_test,agree,elapsed_ms,error";

std::string to_csv(const LineReport& rep, const Options& opts, const std::string& raw) {
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
  std::ostringstream out;
  out << csv_escape(rep.ok() ? rep.graph6 : raw) << ',';
  out << (rep.ok() ? std::to_string(rep.n) : "") << ',';
  out << (rep.ok() ? (rep.budget_exhausted ? "budget_exhausted" : "ok") : "error") << ',';
  out << opt_int(rep.z_exact) << ',';
  out << (rep.z_interval ? std::to_string(rep.z_interval->first) : "") << ',';
  out << (rep.z_interval ? std::to_string(rep.z_interval->second) : "") << ',';
  out << opt_int(rep.zc_exact) << ',';
  out << (rep.zc_interval ? std::to_string(rep.zc_interval->first) : "") << ',';
  out << (rep.zc_interval ? std::to_string(rep.zc_interval->second) : "") << ',';
  out << (rep.pred ? std::to_string(rep.pred->lo) : "") << ',';
  out << (rep.pred ? std::to_string(rep.pred->hi) : "") << ',';
  out << (rep.pred ? std::string(zf::rule_name(rep.pred->rule)) : "") << ',';
  out << (rep.pred ? csv_escape(rep.pred->notes) : "") << ',';
  out << (rep.krs ? std::to_string(rep.krs->bound) : "") << ',';
  out << (rep.krs ? std::to_string(rep.krs->r) : "") << ',';
  out << (rep.krs ? std::to_string(rep.krs->s) : "") << ',';
  out << opt_int(rep.min_degree_bound) << ',';
  out << (rep.forbidden ? (*rep.forbidden ? "true" : "false") : "") << ',';
  out << (rep.agree ? (*rep.agree ? "true" : "false") : "") << ',';
  out << (opts.timing ? std::to_string(rep.elapsed_ms) : "") << ',';
  out << csv_escape(rep.error);
  return out.str();
}

int run_pipeline(Cmd cmd, const Options& opts) {
#ifdef _OPENMP
  if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
#endif
  std::vector<std::string> lines;
  if (cmd == Cmd::Verify && !opts.family.empty()) {
    zf::enumerate_family(opts.family, opts.family_n,
                         [&](const zf::Graph& g) { lines.push_back(zf::to_graph6(g)); });
  } else {
    lines = read_lines(opts.input);
  }
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i)
    if (!lines[i].empty()) keep.push_back(i);

  std::vector<LineReport> reports(keep.size());
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(keep.size()); ++idx) {
    const int i = keep[static_cast<std::size_t>(idx)];
    reports[static_cast<std::size_t>(idx)] =
        process_line(cmd, lines[static_cast<std::size_t>(i)], i + 1, opts);
  }

  const bool csv = opts.format == "csv";
  if (csv) std::cout << kCsvHeader << '\n';
  bool any_ok = false;
  bool any_disagree = false;
  for (std::size_t idx = 0; idx < reports.size(); ++idx) {
    const LineReport& rep = reports[idx];
    const std::string& raw = lines[static_cast<std::size_t>(keep[idx])];
    any_ok = any_ok || rep.ok();
    if (rep.agree && !*rep.agree) any_disagree = true;
    std::cout << (csv ? to_csv(rep, opts, raw) : to_json(rep, opts, raw).dump()) << '\n';
  }
  if (cmd == Cmd::Verify && any_disagree) return 1;
  if (!any_ok && !reports.empty()) return 3;
  return 0;
}

int run_gen(const std::string& family, int n, std::uint64_t seed, int count, int pages,
            int girth, double edge_prob, double cycle_bias) {
  static const std::vector<std::pair<std::string, zf::GenFamily>> kFamilies = {
      {"path", zf::GenFamily::Path},
      {"cycle", zf::GenFamily::Cycle},
      {"star", zf::GenFamily::Star},
      {"complete", zf::GenFamily::Complete},
      {"star_plus_edge", zf::GenFamily::StarPlusEdge},
      {"sunlet", zf::GenFamily::Sunlet},
      {"book", zf::GenFamily::Book},
      {"random_tree", zf::GenFamily::RandomTree},
      {"random_unicyclic", zf::GenFamily::RandomUnicyclic},
      {"random_cactus", zf::GenFamily::RandomCactus},
      {"random_graph", zf::GenFamily::RandomGraph},
  };
  for (const auto& [name, fam] : kFamilies) {
    if (name != family) continue;
    for (int i = 0; i < count; ++i) {
      zf::GenSpec spec{fam, n, seed + static_cast<std::uint64_t>(i), pages, girth, edge_prob,
                       cycle_bias};
      std::cout << zf::to_graph6(zf::generate(spec)) << '\n';
    }
    return 0;
  }
  // fall through to the exhaustive enumerations
  zf::enumerate_family(family, n, [](const zf::Graph& g) { std::cout << zf::to_graph6(g) << '\n'; });
  return 0;
}

void add_common(CLI::App* sub, Options& opts, bool exact_flags) {
  sub->add_option("input", opts.input, "graph6 input file, '-' for stdin")->default_str("-");
  sub->add_option("--format", opts.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_str("json");
  sub->add_option("--jobs", opts.jobs, "worker threads across input lines (default: all cores)");
  sub->add_flag("--timing", opts.timing, "include elapsed_ms in reports");
  if (exact_flags) {
    sub->add_option("--budget", opts.budget,
                    "max closures per exact solve; exceeding it degrades to an interval");
    sub->add_option("--max-n", opts.max_n, "refuse exact solving above this order")
        ->default_str("16");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing numbers of graphs and of their complements"};
  app.require_subcommand(1);

  Options eo, co, po, bo, vo;
  std::string gen_family;
  int gen_n = 5, gen_count = 1, gen_pages = 2, gen_girth = 0;
  std::uint64_t gen_seed = 0;
  double gen_p = 0.5, gen_bias = 0.6;

  CLI::App* exact = app.add_subcommand("exact", "exact Z(G) per input graph");
  add_common(exact, eo, true);
  CLI::App* cexact =
      app.add_subcommand("complement-exact", "exact Z of the complement per input graph");
  add_common(cexact, co, true);
  CLI::App* predict =
      app.add_subcommand("predict", "closed-form prediction of Z(complement)");
  add_common(predict, po, false);
  CLI::App* bounds = app.add_subcommand("bounds", "lower-bound report for Z(complement)");
  add_common(bounds, bo, false);
  CLI::App* verify = app.add_subcommand(
      "verify", "predict and solve Z(complement); exit 1 on any disagreement");
  add_common(verify, vo, true);
  verify->add_option("--family", vo.family,
                     "enumerate a family instead of reading input: "
                     "trees|unicyclic|all_graphs|connected_graphs");
  verify->add_option("--n", vo.family_n, "order for --family enumeration");

  CLI::App* gen = app.add_subcommand("gen", "emit graph6 for generated graphs");
  gen->add_option("--family", gen_family,
                  "path|cycle|star|complete|star_plus_edge|sunlet|book|random_tree|"
                  "random_unicyclic|random_cactus|random_graph or an enumeration family")
      ->required();
  gen->add_option("--n", gen_n, "order (sunlet: base cycle length)")->required();
  gen->add_option("--count", gen_count, "number of graphs; seeds advance by one");
  gen->add_option("--seed", gen_seed, "base seed");
  gen->add_option("--pages", gen_pages, "book: leaf matching size");
  gen->add_option("--girth", gen_girth, "random_unicyclic: target cycle length");
  gen->add_option("--p", gen_p, "random_graph: edge probability");
  gen->add_option("--cycle-bias", gen_bias, "random_cactus: cycle growth probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (exact->parsed()) return run_pipeline(Cmd::Exact, eo);
    if (cexact->parsed()) return run_pipeline(Cmd::ComplementExact, co);
    if (predict->parsed()) return run_pipeline(Cmd::Predict, po);
    if (bounds->parsed()) return run_pipeline(Cmd::Bounds, bo);
    if (verify->parsed()) return run_pipeline(Cmd::Verify, vo);
    if (gen->parsed())
      return run_gen(gen_family, gen_n, gen_seed, gen_count, gen_pages, gen_girth, gen_p,
                     gen_bias);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
