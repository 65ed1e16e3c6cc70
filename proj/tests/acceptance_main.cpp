// Acceptance suite. Runs every acceptance criterion at its stated tolerance
// and prints exactly one [PASS]/[FAIL] line per criterion (details indented).
// The process exits with the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "naive_oracle.hpp"
#include "zdg/zdg.hpp"

#ifndef ZDG_CLI_PATH
#error "ZDG_CLI_PATH must point at the built CLI"
#endif

namespace {

using namespace zdg;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(ZDG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int phi(int n) {
  int out = 0;
  for (int k = 1; k <= n; ++k) {
    int a = k, b = n;
    while (b) {
      int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++out;
  }
  return out;
}

struct Criterion {
  bool pass = true;
  std::string headline;
  std::vector<std::string> details;
  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
};

// --- criterion 1: the survey over 2..60 -------------------------------------

Criterion criterion1() {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  CliResult r = run_cli("survey 2..60");
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (r.exit_code != 0) c.fail("survey exited with " + std::to_string(r.exit_code));
  if (secs >= 60.0) c.fail("survey took " + std::to_string(secs) + " s");

  std::map<int, std::string> mdim_of;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != 9) {
      c.fail("malformed CSV row: " + line);
      continue;
    }
    mdim_of[std::stoi(cells[0])] = cells[7];
  }
  for (int n = 2; n <= 60; ++n) {
    auto it = mdim_of.find(n);
    if (it == mdim_of.end()) {
      c.fail("missing row n=" + std::to_string(n));
      continue;
    }
    const std::string& got = it->second;
    if (got == "unknown") c.fail("Unknown verdict at n=" + std::to_string(n));
    std::string want;
    if (n == 4) want = "0";
    else if (n == 6 || n == 8 || n == 9) want = "1";
    else if (is_prime(n)) want = "undef";
    else want = "inf";
    if (got != want)
      c.fail("n=" + std::to_string(n) + ": computed Mdim " + got +
             ", criterion expects " + want);
  }
  // Independent confirmation for the known deviation: the published table
  // (and the criterion following it) list n = 12 as infinite, but full
  // enumeration finds a 3-element resolving set.
  {
    Graph g12 = zd_graph(make_zn(12));
    oracle::NaiveVerdict nv = oracle::naive_mdim(oracle::from_graph(g12));
    if (nv.resolvable && nv.k == 3)
      c.details.push_back(
          "note: naive all-subset enumeration over all 127 subsets confirms "
          "Mdim(Z(Z_12)) = 3, witness {2, 3, 4}; the published value is "
          "refuted, so this criterion cannot pass as stated");
  }
  std::ostringstream hl;
  hl << "survey 2..60 against the classical per-class predictions (" << secs
     << " s, exact match)";
  c.headline = hl.str();
  return c;
}

// --- criterion 2: structure columns up to 100 --------------------------------

Criterion criterion2() {
  Criterion c;
  c.headline = "structure columns for applicable n <= 100";
  for (int n = 4; n <= 100; ++n) {
    std::string cls = survey_class(n);
    if (cls != "p^2" && cls != "pq" && cls != "2^2p") continue;
    Graph g = zd_graph(make_zn(n));
    DistanceMatrix dm = all_pairs_distances(g);
    auto diam = diameter(g, dm);
    auto gi = girth(g);
    int p = 0, q = 0;
    for (int f = 2; f <= n; ++f)
      if (n % f == 0 && is_prime(f)) {
        if (!p) p = f;
        else if (!q && n % (f) == 0 && f != p) q = f;
      }
    if (cls == "p^2") {
      if (!(g.n() == p - 1 &&
            (unsigned long long)g.edge_count() == binom(p - 1, 2) &&
            diam == 1 && gi == 3 &&
            classify_family(g).kind == FamilyClass::Kind::Complete))
        c.fail("p^2 structure fails at n=" + std::to_string(n));
    } else if (cls == "pq") {
      bool ok = g.n() == p + q - 2 && g.edge_count() == (p - 1) * (q - 1) &&
                diam == 2;
      if (n == 6) {
        ok = ok && classify_family(g).kind == FamilyClass::Kind::Path &&
             classify_family(g).a == 3;
      } else {
        auto sides = complete_bipartite_sides(g);
        ok = ok && sides && sides->first == std::min(p, q) - 1 &&
             sides->second == std::max(p, q) - 1;
      }
      if (std::min(p, q) - 1 >= 2)
        ok = ok && gi == 4;
      else
        ok = ok && !gi.has_value();
      if (!ok) c.fail("pq structure fails at n=" + std::to_string(n));
    } else {  // 2^2p
      q = n / 4;
      if (!(g.n() == 2 * q + 1 && g.edge_count() == 4 * q - 4 && diam == 3 &&
            gi == 4))
        c.fail("2^2p structure fails at n=" + std::to_string(n));
    }
  }
  return c;
}

// --- criterion 3: the catalog claim suites -----------------------------------

Criterion criterion3() {
  Criterion c;
  c.headline = "catalog suites (path rings, cycle rings, dimension-3 rings, "
               "cut-vertex rings)";
  MdimOptions mo;

  for (const auto& name : prop31_rings()) {
    Graph g = zd_graph(catalog(name));
    FamilyClass f = classify_family(g);
    MdimVerdict v = mdim(g, mo);
    if (!(f.kind == FamilyClass::Kind::Path && (f.a == 2 || f.a == 3) &&
          v.is_defined() && v.value == 1))
      c.fail("path suite fails at " + name);
  }

  for (const auto& name : prop32_rings()) {
    Graph g = zd_graph(catalog(name));
    MdimVerdict v = mdim(g, mo);
    bool ok = is_cycle_graph(g) && (g.n() == 3 || g.n() == 4) &&
              v.is_infinite();
    if (g.n() == 4)
      ok = ok && v.proof == MdimVerdict::Proof::Exhaustion &&
           v.subsets_checked <= 16;
    if (!ok) c.fail("cycle suite fails at " + name);
  }

  for (const auto& name : thm32_rings()) {
    Graph g = zd_graph(catalog(name));
    MdimVerdict v = mdim(g, mo);
    if (!(v.is_defined() && v.value == 3)) {
      c.fail("dimension-3 suite fails at " + name);
    } else {
      c.details.push_back(name + ": Mdim = 3, witness " +
                          label_set(g, v.witness));
    }
  }

  std::vector<std::string> cor = cor31_rings();
  for (std::size_t i = 0; i < cor.size(); ++i) {
    Graph g = zd_graph(catalog(cor[i]));
    MdimVerdict v = mdim(g, mo);
    if (!v.is_infinite()) c.fail("cut-vertex suite: " + cor[i] + " not infinite");
    if (i < 4) {
      if (cut_vertices(g).empty() || min_degree(g) < 2)
        c.fail("cut-vertex suite: " + cor[i] +
               " lacks a cut vertex or has min degree < 2");
    } else {
      // Criterion expects family Complete(3) here.
      if (!(is_complete_graph(g) && g.n() == 3))
        c.fail(cor[i] + ": expected K_3, computed a " +
               std::to_string(g.n()) + "-vertex " +
               classify_family(g).to_string() +
               " graph (friendship graph: three triangles on a cut vertex); "
               "the published remark is refuted by the oracle");
    }
  }
  return c;
}

// --- criterion 4: oracle equivalence on random graphs ------------------------

Criterion criterion4() {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(12345);
  int agree = 0;
  const int total = 500;
  for (int it = 0; it < total; ++it) {
    Graph g = oracle::random_connected_graph(rng, 2, 8);
    MdimVerdict v = mdim(g);
    oracle::NaiveVerdict nv = oracle::naive_mdim(oracle::from_graph(g));
    bool same = nv.resolvable
                    ? (v.is_defined() && v.value == nv.k &&
                       v.witness == nv.witness)
                    : v.is_infinite();
    if (same) ++agree;
    else c.fail("disagreement on random graph #" + std::to_string(it));
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs >= 30.0) c.fail("took " + std::to_string(secs) + " s (budget 30)");
  std::ostringstream hl;
  hl << "oracle equivalence on " << total << " random graphs (" << agree
     << "/" << total << " agree, " << secs << " s)";
  c.headline = hl.str();
  return c;
}

// --- criterion 5: bound properties -------------------------------------------

Criterion criterion5() {
  Criterion c;
  c.headline = "counting and diameter bounds on every corpus instance";
  std::vector<std::pair<std::string, Graph>> corpus;
  for (const auto& name : catalog_names())
    corpus.emplace_back(name, zd_graph(catalog(name)));
  for (int n = 2; n <= 60; ++n)
    corpus.emplace_back("Z" + std::to_string(n), zd_graph(make_zn(n)));
  for (int n = 2; n <= 6; ++n)
    corpus.emplace_back("Z" + std::to_string(n) + "[i]",
                        zd_graph(make_gaussian_mod(n)));

  for (auto& [name, g] : corpus) {
    MdimVerdict v = mdim(g);
    if (!v.is_defined() || g.n() < 2) continue;
    DistanceMatrix dm = all_pairs_distances(g);
    int diam = std::max(1, *diameter(g, dm));
    if (v.value < lower_bound_f(g.n(), diam))
      c.fail(name + ": Mdim below the counting bound");
    if (v.value == 3 && g.n() > thm42_max_order(diam))
      c.fail(name + ": order exceeds the diameter bound at Mdim 3");
  }

  for (int k = 1; k <= 10; ++k) {
    unsigned long long direct = 0;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int l = j; l <= k; ++l) ++direct;
    unsigned long long formula = (1ULL * k * k * (k + 3) + 2 * k) / 6;
    if (representation_count(3, k) != direct ||
        representation_count(3, k) != formula)
      c.fail("representation count mismatch at d=" + std::to_string(k));
  }
  return c;
}

// --- criterion 6: exhaustive ring validation ---------------------------------

Criterion criterion6() {
  Criterion c;
  c.headline = "exhaustive axiom validation of constructors and catalog";
  auto check = [&](const std::string& name, const FiniteRing& r) {
    if (!validate_ring_axioms(r).all_passed())
      c.fail(name + " failed validation");
  };
  for (int n : {2, 6, 12, 30, 60, 97}) check("Z" + std::to_string(n), make_zn(n));
  for (int n : {2, 3, 5, 6}) check("gauss", make_gaussian_mod(n));
  check("poly", make_quotient_poly(make_zn(3), {0, 0, 1}));
  check("tower", make_quotient_poly(
                     make_quotient_poly(make_zn(2), {1, 1, 1}), {0, 0, 1}));
  check("product", make_product({make_zn(2), make_zn(4), make_zn(3)}));
  for (const auto& name : catalog_names()) check(name, catalog(name));

  RingPresentation broken;
  broken.additive_orders = {4, 2};
  broken.structure[{2, 2}] = {1, 0};
  bool caught = false;
  try {
    make_presented(broken);
  } catch (const AxiomViolation& e) {
    for (const auto& chk : e.report.checks)
      if (chk.axiom == "distributivity" && !chk.passed && chk.witness[0] >= 0 &&
          chk.witness[1] >= 0 && chk.witness[2] >= 0)
        caught = true;
  }
  if (!caught)
    c.fail("broken presentation did not fail with a witness triple");
  return c;
}

// --- criterion 7: zero-divisor graph invariants -------------------------------

Criterion criterion7() {
  Criterion c;
  c.headline = "zero-divisor graphs: connected, diameter <= 3, |V| = n-1-phi(n)";
  auto check_graph = [&](const std::string& name, const Graph& g) {
    if (g.n() <= 1) return;
    DistanceMatrix dm = all_pairs_distances(g);
    auto diam = diameter(g, dm);
    if (!diam) c.fail(name + ": disconnected");
    else if (*diam > 3) c.fail(name + ": diameter " + std::to_string(*diam));
  };
  for (const auto& name : catalog_names())
    check_graph(name, zd_graph(catalog(name)));
  for (int n = 2; n <= 100; ++n) {
    Graph g = zd_graph(make_zn(n));
    check_graph("Z" + std::to_string(n), g);
    if (!is_prime(n) && g.n() != n - 1 - phi(n))
      c.fail("vertex count fails at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 6; ++n)
    check_graph("gauss", zd_graph(make_gaussian_mod(n)));
  return c;
}

// --- criterion 8: verify all -------------------------------------------------

Criterion criterion8() {
  Criterion c;
  c.headline = "verify all: exit 0 and exactly the expected documented "
               "discrepancies";
  CliResult r = run_cli("verify all");
  if (r.exit_code != 0)
    c.fail("verify exited with " + std::to_string(r.exit_code));

  std::set<std::string> discrepancies;
  bool thm33b_ok = false;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (...) {
      c.fail("non-JSON line in verify output");
      continue;
    }
    std::string status = j.value("status", "");
    std::string claim = j.value("claim", "");
    if (status == "FAIL") c.fail("claim FAIL: " + claim);
    if (status == "DISCREPANCY-DOCUMENTED") {
      discrepancies.insert(claim);
      if (claim == "Thm3.3b") {
        std::string comp = j.value("computed", "");
        thm33b_ok = comp.find("Z16") != std::string::npos &&
                    comp.find("twin triple {2, 6, 10}") != std::string::npos &&
                    comp.find("127") != std::string::npos;
      }
    }
  }
  const std::set<std::string> expected = {
      "Thm3.3b",          "Cor3.1(K3-remark)",   "Thm3.4",
      "Table1(refuted-cells)", "Lemma4.1(statement)", "Cor4.1(strict)"};
  if (discrepancies != expected) {
    std::string got;
    for (const auto& d : discrepancies) got += d + " ";
    c.fail("discrepancy set differs; got: " + got);
  }
  if (!thm33b_ok)
    c.fail("Thm3.3b record must refute at Z16 via twin triple {2, 6, 10} and "
           "the 127-subset exhaustion");
  return c;
}

// --- criterion 9: worker-count determinism -----------------------------------

Criterion criterion9() {
  Criterion c;
  c.headline = "byte-identical survey CSV for --workers 1 and --workers 8";
  CliResult a = run_cli("--workers 1 survey 2..60");
  CliResult b = run_cli("--workers 8 survey 2..60");
  if (a.exit_code != 0 || b.exit_code != 0) c.fail("survey exited nonzero");
  if (a.out != b.out) c.fail("outputs differ");
  if (a.out.empty()) c.fail("empty output");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion (*)()> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c = criteria[i]();
    std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1)
              << ": " << c.headline << "\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) +
                                    " criterion(s) failed; see the notes "
                                    "above and the project README")
            << "\n";
  return failures;
}
