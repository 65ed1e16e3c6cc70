#pragma once

// Exact multiset-dimension solver.
//
// A probe set W m-resolves G when the multisets {d(v,w) : w in W} are
// pairwise distinct over all vertices v. The solver returns one of
//   Defined(k, witness)   lexicographically least resolving set of minimum
//                         cardinality
//   Infinite(proof)       twin-triple certificate, or full exhaustion of all
//                         2^n - 1 nonempty subsets
//   Undefined             empty graph
//   Unknown               graph order exceeds the exhaustion budget and no
//                         twin triple exists
//
// Twin-triple soundness: for distance-similar twins u,v every resolving set
// contains exactly one of them (otherwise their codes coincide), and three
// mutual twins make those pair constraints unsatisfiable.
//
// The cardinality scan starts at the counting lower bound f(n,d) (at most
// C(k+d-1,d-1) codes avoid 0 and at most k contain it). That start is an
// optimization only: before an Infinite verdict is issued the skipped small
// cardinalities are scanned as well, so the exhaustion certificate really
// covers every nonempty subset.

#include <atomic>
#include <climits>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr unsigned long long kBinomSaturated = 1ULL << 62;

/// Exact binomial coefficient, saturating at kBinomSaturated.
inline unsigned long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > kBinomSaturated / (unsigned long long)(n - k + i))
      return kBinomSaturated;
    r = r * (unsigned long long)(n - k + i) / (unsigned long long)i;
  }
  return r;
}

/// Least k >= 1 with C(k+d-1, d-1) + k >= n.
inline int lower_bound_f(int n, int d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("lower_bound_f requires n >= 1, d >= 1");
  for (int k = 1;; ++k) {
    unsigned long long c = binom(k + d - 1, d - 1);
    if (c + (unsigned long long)k >= (unsigned long long)n) return k;
  }
}

/// (k^2(k+3) + 2(k+6)) / 6, the order cap for a diameter-k graph of multiset
/// dimension 3. Integral for every k (k(k+1)(k+2) + 12 is divisible by 6).
inline long long thm42_max_order(int k) {
  if (k < 1) throw std::invalid_argument("thm42_max_order requires k >= 1");
  long long num = 1LL * k * k * (k + 3) + 2LL * (k + 6);
  if (num % 6 != 0)
    throw std::logic_error("thm42_max_order: numerator not divisible by 6");
  return num / 6;
}

/// Number of multisets of size k over the values {1..d}.
inline unsigned long long representation_count(int k, int d) {
  if (k < 1 || d < 1)
    throw std::invalid_argument("representation_count requires k,d >= 1");
  return binom(k + d - 1, k);
}

// ---------------------------------------------------------------------------
// Codes
// ---------------------------------------------------------------------------

using MultisetCode = std::vector<int>;

/// Sorted multiset {d(v,w) : w in W}. Requires every w reachable from v.
inline MultisetCode multiset_representation(const Graph& g,
                                            const DistanceMatrix& dm, int v,
                                            const std::vector<int>& W) {
  if (W.empty())
    throw std::invalid_argument("multiset representation of an empty set");
  MultisetCode code;
  code.reserve(W.size());
  for (int w : W) {
    int d = dm.at(v, w);
    if (d < 0)
      throw std::invalid_argument(
          "multiset representation undefined for unreachable vertices");
    code.push_back(d);
  }
  std::sort(code.begin(), code.end());
  return code;
}

namespace detail {

/// Decides is_m_resolving for many subsets of one graph. When every distance
/// fits in 8 distance buckets the per-vertex code is packed into a uint64
/// histogram; otherwise a sorted-vector comparison is used.
class ResolveChecker {
 public:
  ResolveChecker(const Graph& g, const DistanceMatrix& dm)
      : g_(g), dm_(dm), n_(g.n()) {
    int maxd = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) maxd = std::max(maxd, dm.at(u, v));
    packed_ = (maxd <= 7) && (n_ <= 255);
  }

  bool resolves(const std::vector<int>& W) const {
    if (packed_) {
      thread_local std::vector<std::uint64_t> keys;
      keys.assign(n_, 0);
      for (int v = 0; v < n_; ++v) {
        std::uint64_t key = 0;
        for (int w : W) key += std::uint64_t(1) << (8 * dm_.at(v, w));
        keys[v] = key;
      }
      std::sort(keys.begin(), keys.end());
      for (int v = 0; v + 1 < n_; ++v)
        if (keys[v] == keys[v + 1]) return false;
      return true;
    }
    thread_local std::vector<std::vector<int>> codes;
    codes.assign(n_, {});
    for (int v = 0; v < n_; ++v)
      codes[v] = multiset_representation(g_, dm_, v, W);
    std::sort(codes.begin(), codes.end());
    for (int v = 0; v + 1 < n_; ++v)
      if (codes[v] == codes[v + 1]) return false;
    return true;
  }

 private:
  const Graph& g_;
  const DistanceMatrix& dm_;
  int n_;
  bool packed_;
};

inline bool next_combination(std::vector<int>& c, int n) {
  const int k = int(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

/// Lexicographic unranking via the combinatorial number system.
inline std::vector<int> unrank_combination(int n, int k,
                                           unsigned long long rank) {
  std::vector<int> out;
  out.reserve(k);
  int v = 0;
  for (int slot = 0; slot < k; ++slot) {
    while (true) {
      unsigned long long block = binom(n - v - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out.push_back(v);
    ++v;
  }
  return out;
}

/// First (lex-least) resolving k-subset, if any, together with its rank.
inline std::optional<std::pair<std::vector<int>, unsigned long long>>
scan_cardinality(int n, int k, const ResolveChecker& checker, int workers) {
  const unsigned long long total = binom(n, k);
  if (workers <= 1 || total < 4096) {
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    unsigned long long rank = 0;
    do {
      if (checker.resolves(combo)) return std::make_pair(combo, rank);
      ++rank;
    } while (next_combination(combo, n));
    return std::nullopt;
  }

  std::atomic<unsigned long long> best{ULLONG_MAX};
  const unsigned long long chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (int t = 0; t < workers; ++t) {
    unsigned long long lo = chunk * t;
    if (lo >= total) break;
    unsigned long long hi = std::min(total, lo + chunk);
    threads.emplace_back([&, lo, hi] {
      std::vector<int> combo = unrank_combination(n, k, lo);
      for (unsigned long long r = lo; r < hi; ++r) {
        if (r >= best.load(std::memory_order_relaxed)) return;
        if (checker.resolves(combo)) {
          unsigned long long cur = best.load(std::memory_order_relaxed);
          while (r < cur &&
                 !best.compare_exchange_weak(cur, r,
                                             std::memory_order_relaxed)) {
          }
          return;
        }
        next_combination(combo, n);
      }
    });
  }
  for (auto& th : threads) th.join();
  unsigned long long r = best.load();
  if (r == ULLONG_MAX) return std::nullopt;
  return std::make_pair(unrank_combination(n, k, r), r);
}

}  // namespace detail

/// True iff the multiset codes of all vertices w.r.t. W are pairwise
/// distinct. W must be a nonempty set of valid vertices.
inline bool is_m_resolving(const Graph& g, const DistanceMatrix& dm,
                           const std::vector<int>& W) {
  if (W.empty()) throw std::invalid_argument("empty probe set");
  for (int w : W)
    if (w < 0 || w >= g.n())
      throw std::invalid_argument("probe vertex out of range");
  detail::ResolveChecker checker(g, dm);
  return checker.resolves(W);
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

struct TwinTriple {
  int u = -1, v = -1, w = -1;
};

struct MdimVerdict {
  enum class Kind { Defined, Infinite, Undefined, Unknown };
  enum class Proof { None, TwinTriple, Exhaustion };

  Kind kind = Kind::Unknown;
  int value = -1;                 // Defined: the dimension
  std::vector<int> witness;       // Defined: lex-least minimum resolving set
  Proof proof = Proof::None;      // Infinite: which certificate
  TwinTriple triple;              // Infinite via twins
  unsigned long long subsets_checked = 0;
  std::string note;               // Unknown: why

  bool is_defined() const { return kind == Kind::Defined; }
  bool is_infinite() const { return kind == Kind::Infinite; }

  /// "0", "1", ..., "inf", "undef", "unknown" — the CSV rendering.
  std::string to_token() const {
    switch (kind) {
      case Kind::Defined: return std::to_string(value);
      case Kind::Infinite: return "inf";
      case Kind::Undefined: return "undef";
      case Kind::Unknown: return "unknown";
    }
    return "unknown";
  }
};

/// Three lowest members of the first twin class of size >= 3, if any.
inline std::optional<TwinTriple> mdim_infinite_by_twins(
    const Graph& g, const DistanceMatrix& dm) {
  for (const auto& cls : twin_classes(g, dm))
    if (cls.size() >= 3) return TwinTriple{cls[0], cls[1], cls[2]};
  return std::nullopt;
}

struct MdimOptions {
  int budget = 22;        // max graph order for exhaustive scans (cap 30)
  int workers = 1;
  bool force_exhaustion = false;  // skip the twin shortcut
};

inline MdimVerdict mdim(const Graph& g, const MdimOptions& opt = {}) {
  if (opt.budget < 1 || opt.budget > 30)
    throw std::invalid_argument("budget must be in 1..30");
  MdimVerdict out;
  const int n = g.n();
  if (n == 0) {
    out.kind = MdimVerdict::Kind::Undefined;
    return out;
  }
  if (n == 1) {
    out.kind = MdimVerdict::Kind::Defined;
    out.value = 0;
    return out;
  }

  DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.all_reachable())
    throw std::invalid_argument(
        "multiset dimension requires a connected graph");

  if (!opt.force_exhaustion) {
    if (auto triple = mdim_infinite_by_twins(g, dm)) {
      out.kind = MdimVerdict::Kind::Infinite;
      out.proof = MdimVerdict::Proof::TwinTriple;
      out.triple = *triple;
      return out;
    }
  }

  if (n > opt.budget) {
    out.kind = MdimVerdict::Kind::Unknown;
    out.note = "graph order " + std::to_string(n) +
               " exceeds the exhaustion budget " + std::to_string(opt.budget) +
               " and no twin triple exists";
    return out;
  }

  const int diam = *diameter(g, dm);
  const int start = std::max(1, lower_bound_f(n, diam));
  detail::ResolveChecker checker(g, dm);

  // Cardinalities start..n, then the skipped 1..start-1 so that a negative
  // outcome has examined every nonempty subset.
  std::vector<int> order;
  for (int k = start; k <= n; ++k) order.push_back(k);
  for (int k = 1; k < start; ++k) order.push_back(k);

  unsigned long long scanned = 0;
  for (int k : order) {
    auto hit = detail::scan_cardinality(n, k, checker, opt.workers);
    if (hit) {
      out.kind = MdimVerdict::Kind::Defined;
      out.value = k;
      out.witness = hit->first;
      out.subsets_checked = scanned + hit->second + 1;
      return out;
    }
    scanned += binom(n, k);
  }

  out.kind = MdimVerdict::Kind::Infinite;
  out.proof = MdimVerdict::Proof::Exhaustion;
  out.subsets_checked = scanned;  // = 2^n - 1
  return out;
}

// ---------------------------------------------------------------------------
// Classic metric dimension (ordered distance vectors), for comparison
// ---------------------------------------------------------------------------

/// Least |W| whose distance vectors are pairwise distinct; nullopt for the
/// empty graph, 0 for a single vertex. Requires a connected graph.
inline std::optional<int> metric_dimension(const Graph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  if (n == 1) return 0;
  DistanceMatrix dm = all_pairs_distances(g);
  if (!dm.all_reachable())
    throw std::invalid_argument("metric dimension requires a connected graph");

  std::vector<std::vector<int>> vecs(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    do {
      for (int v = 0; v < n; ++v) {
        vecs[v].clear();
        for (int w : combo) vecs[v].push_back(dm.at(v, w));
      }
      std::sort(vecs.begin(), vecs.end());
      bool distinct = true;
      for (int v = 0; v + 1 < n; ++v)
        if (vecs[v] == vecs[v + 1]) {
          distinct = false;
          break;
        }
      if (distinct) return k;
    } while (detail::next_combination(combo, n));
  }
  return n;  // unreachable: W = V always has distinct vectors
}

}  // namespace zdg
