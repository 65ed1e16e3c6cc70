// zdg — zero-divisor graphs of small finite commutative rings.
//
// Subcommands: ring, mdim, survey, verify, export, eqsearch, catalog.
// Exit codes: 0 success, 3 Unknown verdict (budget), 64 usage / expression
// errors, 65 data errors (axiom violations, bad input files, disconnected
// graphs), 70 internal errors. Stdout is byte-deterministic for a given
// command line; timings go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdg/zdg.hpp"

namespace {

constexpr int kExitUnknown = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::pair<int, int> parse_range(const std::string& range) {
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("range", "expected <from>..<to>, e.g. 2..60");
  try {
    int from = std::stoi(range.substr(0, dots));
    int to = std::stoi(range.substr(dots + 2));
    return {from, to};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected <from>..<to>, e.g. 2..60");
  }
}

std::string verdict_line(const zdg::MdimVerdict& v, const zdg::Graph& g) {
  using K = zdg::MdimVerdict::Kind;
  switch (v.kind) {
    case K::Defined:
      return "Mdim = " + std::to_string(v.value) + ", witness " +
             zdg::label_set(g, v.witness);
    case K::Infinite:
      if (v.proof == zdg::MdimVerdict::Proof::TwinTriple)
        return "Mdim = ∞ (twin triple " +
               zdg::label_set(g, {v.triple.u, v.triple.v, v.triple.w}) + ")";
      return "Mdim = ∞ (exhaustion, " + std::to_string(v.subsets_checked) +
             " subsets)";
    case K::Undefined:
      return "Mdim undefined (empty graph)";
    case K::Unknown:
      return "Mdim unknown (" + v.note + ")";
  }
  return "Mdim unknown";
}

std::string ring_info(const zdg::FiniteRing& R) {
  std::vector<int> zd = zdg::zero_divisors(R);
  std::vector<int> un = zdg::units(R);
  std::ostringstream os;
  os << "descriptor: " << R.descriptor() << "\n";
  os << "order: " << R.order() << "\n";
  os << "units: " << un.size() << "\n";
  os << "zero divisors: " << zd.size();
  if (!zd.empty() && zd.size() <= 40) {
    os << "  {";
    for (std::size_t i = 0; i < zd.size(); ++i) {
      if (i) os << ", ";
      os << R.label(zd[i]);
    }
    os << "}";
  }
  os << "\n";
  os << "integral domain: " << (zd.empty() ? "yes" : "no") << "\n";
  os << "all zero divisors nilpotent: "
     << (zdg::all_zd_nilpotent(R) ? "yes" : "no") << "\n";
  os << "L(R)^2 = {0}: " << (zdg::zd_square_zero(R) ? "yes" : "no") << "\n";
  os << "axioms: " << (zdg::validate_ring_axioms(R).all_passed()
                           ? "all pass (exhaustive)"
                           : "FAILED")
     << "\n";
  return os.str();
}

zdg::Graph load_graph_file(const std::string& path) {
  std::string text = read_file(path);
  std::size_t i = 0;
  while (i < text.size() &&
         (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
          text[i] == '\r'))
    ++i;
  if (i < text.size() && text[i] == '{') return zdg::import_graph_json(text);
  return zdg::import_graph_edge_list(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-divisor graphs of small finite commutative rings: "
               "construction, invariants, exact multiset dimension"};
  app.require_subcommand(1);

  zdg::RunConfig cfg;
  std::string out_path;
  app.add_option("--budget", cfg.budget,
                 "max graph order for exhaustive subset scans (1..30)")
      ->envname("ZDG_BUDGET");
  app.add_option("--workers", cfg.workers, "worker thread count")
      ->envname("ZDG_WORKERS");
  app.add_option("--seed", cfg.seed, "seed for sampled search corpora");
  app.add_option("--out", out_path, "write output to this file");

  auto* ring_cmd =
      app.add_subcommand("ring", "build a ring and print its basic data");
  std::string ring_expr;
  ring_cmd->add_option("expr", ring_expr,
                       "ring expression (Zn:<n>, gauss:<n>, poly:..., "
                       "prod:..., catalog:<name>, file:<path>)")
      ->required();

  auto* mdim_cmd = app.add_subcommand(
      "mdim", "multiset dimension of a zero-divisor graph or graph file");
  std::string mdim_expr, mdim_graph;
  mdim_cmd->add_option("expr", mdim_expr, "ring expression");
  mdim_cmd->add_option("--graph", mdim_graph,
                       "read the graph from a JSON or edge-list file");

  auto* survey_cmd =
      app.add_subcommand("survey", "survey Z(Z_n) over a range of n");
  std::string survey_range;
  survey_cmd->add_option("range", survey_range, "range, e.g. 2..60")
      ->required();
  survey_cmd
      ->add_option("--format", cfg.format, "csv (default), md, or json")
      ->check(CLI::IsMember({"csv", "md", "markdown", "json"}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "check the claim catalog against brute-force computation");
  std::vector<std::string> verify_ids;
  verify_cmd->add_option("claims", verify_ids,
                         "claim ids (default: all); see README for the list");

  auto* export_cmd =
      app.add_subcommand("export", "export a zero-divisor graph");
  std::string export_expr, export_fmt;
  export_cmd->add_option("expr", export_expr, "ring expression")->required();
  export_cmd->add_option("format", export_fmt, "dot, json, or edges")
      ->required();

  auto* eq_cmd = app.add_subcommand(
      "eqsearch", "search for graphs attaining the diameter bound at Mdim 3");
  int eq_zn_max = 60, eq_samples = 20;
  eq_cmd->add_option("--zn-max", eq_zn_max, "survey Z_n up to this n");
  eq_cmd->add_option("--samples", eq_samples, "seeded random product count");

  auto* cat_cmd = app.add_subcommand("catalog", "list catalog ring names");
  std::string cat_dump;
  cat_cmd->add_option("--dump", cat_dump,
                      "print the presentation file of one entry");

  // Accept the global flags after a subcommand too.
  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.check();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*ring_cmd) {
      zdg::FiniteRing R = zdg::build_ring_expr(ring_expr, cfg);
      write_output(out_path, ring_info(R));
      return 0;
    }

    if (*mdim_cmd) {
      if (mdim_expr.empty() == mdim_graph.empty())
        throw CLI::ValidationError(
            "mdim", "give exactly one of <expr> or --graph <file>");
      auto t0 = std::chrono::steady_clock::now();
      zdg::Graph g = mdim_graph.empty()
                         ? zdg::zd_graph(zdg::build_ring_expr(mdim_expr, cfg))
                         : load_graph_file(mdim_graph);
      if (g.n() > 1 && !zdg::is_connected(g)) {
        std::cerr << "error: the input graph is disconnected; multiset "
                     "dimension is computed for connected graphs only\n";
        return kExitData;
      }
      zdg::MdimOptions mo;
      mo.budget = cfg.budget;
      mo.workers = cfg.workers;
      zdg::MdimVerdict v = zdg::mdim(g, mo);
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
      write_output(out_path, verdict_line(v, g) + "\n");
      std::cerr << "elapsed: " << secs << " s\n";
      return v.kind == zdg::MdimVerdict::Kind::Unknown ? kExitUnknown : 0;
    }

    if (*survey_cmd) {
      auto [from, to] = parse_range(survey_range);
      auto rows = zdg::survey_zn(from, to, cfg);
      std::string text;
      if (cfg.format == "md" || cfg.format == "markdown")
        text = zdg::survey_markdown(rows);
      else if (cfg.format == "json")
        text = zdg::survey_json(rows);
      else
        text = zdg::survey_csv(rows);
      write_output(out_path, text);
      return 0;
    }

    if (*verify_cmd) {
      auto reports = zdg::verify_claims(verify_ids, cfg);
      write_output(out_path, zdg::claims_to_jsonl(reports));
      int pass = 0, disc = 0, fail = 0;
      for (const auto& r : reports) {
        if (r.status == zdg::claims::kPass) ++pass;
        else if (r.status == zdg::claims::kDiscrepancy) ++disc;
        else ++fail;
      }
      std::cerr << "claims: " << reports.size() << " records, " << pass
                << " pass, " << disc << " documented discrepancies, " << fail
                << " failures\n";
      return fail ? 1 : 0;
    }

    if (*export_cmd) {
      auto fmt = zdg::graph_format_from_token(export_fmt);
      if (!fmt)
        throw CLI::ValidationError("export",
                                   "format must be dot, json, or edges");
      zdg::FiniteRing R = zdg::build_ring_expr(export_expr, cfg);
      write_output(out_path, zdg::export_graph(zdg::zd_graph(R), *fmt));
      return 0;
    }

    if (*eq_cmd) {
      auto res = zdg::equality_search_thm42(cfg, eq_zn_max, eq_samples);
      write_output(out_path, zdg::equality_search_text(res));
      return 0;
    }

    if (*cat_cmd) {
      if (!cat_dump.empty()) {
        write_output(out_path, zdg::catalog_file(cat_dump));
        return 0;
      }
      std::string text;
      for (const auto& name : zdg::catalog_names()) {
        zdg::FiniteRing R = zdg::catalog(name);
        text += name + "  (order " + std::to_string(R.order()) + ")\n";
      }
      write_output(out_path, text);
      return 0;
    }

    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zdg::RingExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zdg::AxiomViolation& e) {
    std::cerr << "error: " << e.what() << "\n" << e.report.summary();
    return kExitData;
  } catch (const zdg::RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
