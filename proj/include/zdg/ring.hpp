#pragma once

// Small finite commutative rings with unity, stored as exhaustive operation
// tables over dense element ids 0..order-1. Element 0 is always the additive
// zero. Every constructor runs the full axiom validation before handing the
// ring out; an inconsistent presentation cannot produce a FiniteRing.
//
// Canonical element enumeration (all determinism downstream relies on it):
//   make_zn          id = residue
//   make_quotient_poly  id = sum a_t * B^t where a_t is the coefficient of
//                        x^t and B the base order (coefficient tuples in
//                        lexicographic order, degree m-1 most significant)
//   make_product     mixed radix, first factor most significant
//   make_presented   mixed radix over (a_1..a_k), a_1 most significant

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdg {

inline constexpr int kMaxRingOrder = 4096;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of the exhaustive axiom check. One entry per axiom; a failed
/// entry carries the first counterexample triple found (unused slots -1).
struct ValidationReport {
  struct Check {
    std::string axiom;
    bool passed = true;
    std::array<int, 3> witness{-1, -1, -1};
  };
  std::vector<Check> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.passed ? "pass  " : "FAIL  ") << c.axiom;
      if (!c.passed)
        os << "  witness (" << c.witness[0] << "," << c.witness[1] << ","
           << c.witness[2] << ")";
      os << '\n';
    }
    return os.str();
  }
};

class AxiomViolation : public RingError {
 public:
  AxiomViolation(const std::string& msg, ValidationReport rep)
      : RingError(msg), report(std::move(rep)) {}
  ValidationReport report;
};

namespace detail {

inline ValidationReport validate_tables(int n,
                                        const std::vector<std::uint16_t>& add,
                                        const std::vector<std::uint16_t>& mul,
                                        int one) {
  ValidationReport rep;
  auto A = [&](int a, int b) { return int(add[std::size_t(a) * n + b]); };
  auto M = [&](int a, int b) { return int(mul[std::size_t(a) * n + b]); };
  auto record = [&](const char* ax, bool ok, int a = -1, int b = -1,
                    int c = -1) {
    rep.checks.push_back({ax, ok, {a, b, c}});
  };

  {
    bool ok = true;
    int wa = -1;
    for (int a = 0; a < n && ok; ++a)
      if (A(0, a) != a || A(a, 0) != a) ok = false, wa = a;
    record("additive identity (0)", ok, wa);
  }
  {
    bool ok = true;
    int wa = -1, wb = -1;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n; ++b)
        if (A(a, b) != A(b, a)) {
          ok = false, wa = a, wb = b;
          break;
        }
    record("additive commutativity", ok, wa, wb);
  }
  {
    bool ok = true;
    int wa = -1, wb = -1, wc = -1;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const std::uint16_t* rb = add.data() + std::size_t(b) * n;
        int ab = A(a, b);
        const std::uint16_t* rab = add.data() + std::size_t(ab) * n;
        const std::uint16_t* ra = add.data() + std::size_t(a) * n;
        for (int c = 0; c < n; ++c)
          if (rab[c] != ra[rb[c]]) {
            ok = false, wa = a, wb = b, wc = c;
            break;
          }
      }
    record("additive associativity", ok, wa, wb, wc);
  }
  {
    bool ok = true;
    int wa = -1;
    for (int a = 0; a < n && ok; ++a) {
      bool found = false;
      for (int b = 0; b < n; ++b)
        if (A(a, b) == 0) {
          found = true;
          break;
        }
      if (!found) ok = false, wa = a;
    }
    record("additive inverses", ok, wa);
  }
  {
    bool ok = true;
    int wa = -1;
    for (int a = 0; a < n && ok; ++a)
      if (M(one, a) != a || M(a, one) != a) ok = false, wa = a;
    record("multiplicative identity (1)", ok, wa);
  }
  {
    bool ok = true;
    int wa = -1, wb = -1;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n; ++b)
        if (M(a, b) != M(b, a)) {
          ok = false, wa = a, wb = b;
          break;
        }
    record("multiplicative commutativity", ok, wa, wb);
  }
  {
    bool ok = true;
    int wa = -1, wb = -1, wc = -1;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const std::uint16_t* rb = mul.data() + std::size_t(b) * n;
        int ab = M(a, b);
        const std::uint16_t* rab = mul.data() + std::size_t(ab) * n;
        const std::uint16_t* ra = mul.data() + std::size_t(a) * n;
        for (int c = 0; c < n; ++c)
          if (rab[c] != ra[rb[c]]) {
            ok = false, wa = a, wb = b, wc = c;
            break;
          }
      }
    record("multiplicative associativity", ok, wa, wb, wc);
  }
  {
    bool ok = true;
    int wa = -1, wb = -1, wc = -1;
    for (int a = 0; a < n && ok; ++a) {
      const std::uint16_t* ma = mul.data() + std::size_t(a) * n;
      for (int b = 0; b < n && ok; ++b) {
        const std::uint16_t* rb = add.data() + std::size_t(b) * n;
        int amb = ma[b];
        const std::uint16_t* radd = add.data() + std::size_t(amb) * n;
        for (int c = 0; c < n; ++c)
          if (ma[rb[c]] != radd[ma[c]]) {
            ok = false, wa = a, wb = b, wc = c;
            break;
          }
      }
    }
    record("distributivity", ok, wa, wb, wc);
  }
  record("unity distinct from zero", one != 0, one);
  return rep;
}

}  // namespace detail

class FiniteRing {
 public:
  /// Takes ownership of fully built tables and validates them exhaustively.
  /// Throws AxiomViolation (carrying the report) if any axiom fails.
  FiniteRing(int order, std::vector<std::uint16_t> add,
             std::vector<std::uint16_t> mul, int one, std::string descriptor,
             std::vector<std::string> labels)
      : n_(order),
        one_(one),
        add_(std::move(add)),
        mul_(std::move(mul)),
        descriptor_(std::move(descriptor)),
        labels_(std::move(labels)) {
    if (n_ < 2) throw RingError("ring order must be at least 2");
    if (n_ > kMaxRingOrder)
      throw RingError("ring order " + std::to_string(n_) +
                      " exceeds the supported cap " +
                      std::to_string(kMaxRingOrder));
    if (add_.size() != std::size_t(n_) * n_ ||
        mul_.size() != std::size_t(n_) * n_)
      throw RingError("operation table size mismatch");
    for (std::uint16_t v : add_)
      if (v >= n_) throw RingError("addition table entry out of range");
    for (std::uint16_t v : mul_)
      if (v >= n_) throw RingError("multiplication table entry out of range");
    if (one_ < 0 || one_ >= n_) throw RingError("unity id out of range");
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (int(labels_.size()) != n_) throw RingError("label count mismatch");

    ValidationReport rep = detail::validate_tables(n_, add_, mul_, one_);
    if (!rep.all_passed()) {
      const auto* f = rep.first_failure();
      throw AxiomViolation(descriptor_ + ": axiom check failed: " + f->axiom +
                               " at (" + std::to_string(f->witness[0]) + "," +
                               std::to_string(f->witness[1]) + "," +
                               std::to_string(f->witness[2]) + ")",
                           std::move(rep));
    }
    neg_.resize(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (add_[std::size_t(a) * n_ + b] == 0) {
          neg_[a] = std::uint16_t(b);
          break;
        }
  }

  int order() const noexcept { return n_; }
  int zero() const noexcept { return 0; }
  int one() const noexcept { return one_; }
  int add(int a, int b) const { return add_[std::size_t(a) * n_ + b]; }
  int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  int pow(int x, int e) const {
    int acc = one_;
    for (int i = 0; i < e; ++i) acc = mul(acc, x);
    return acc;
  }

  const std::string& descriptor() const noexcept { return descriptor_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  int n_;
  int one_;
  std::vector<std::uint16_t> add_, mul_, neg_;
  std::string descriptor_;
  std::vector<std::string> labels_;
};

/// Re-runs the exhaustive axiom check on a constructed ring. Always passes
/// for rings built by this module (construction enforces it); exposed so
/// callers can produce the full report.
inline ValidationReport validate_ring_axioms(const FiniteRing& R) {
  int n = R.order();
  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = std::uint16_t(R.add(a, b));
      mul[std::size_t(a) * n + b] = std::uint16_t(R.mul(a, b));
    }
  return detail::validate_tables(n, add, mul, R.one());
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

inline FiniteRing make_zn(int n) {
  if (n < 2) throw RingError("Z_n requires n >= 2");
  if (n > kMaxRingOrder)
    throw RingError("Z_n order exceeds cap " + std::to_string(kMaxRingOrder));
  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
      mul[std::size_t(a) * n + b] = std::uint16_t((a * b) % n);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteRing(n, std::move(add), std::move(mul), 1,
                    "Z_" + std::to_string(n), std::move(labels));
}

namespace detail {

inline bool label_needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find(' ') != std::string::npos;
}

/// c0 + c1*x + ... rendered ascending, coefficient labels from the base ring.
inline std::string poly_label(const FiniteRing& base,
                              const std::vector<int>& coeffs,
                              const std::string& var) {
  std::string out;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t] == base.zero()) continue;
    std::string c = base.label(coeffs[t]);
    std::string term;
    if (t == 0) {
      term = c;
    } else {
      if (c == base.label(base.one()))
        term = "";
      else if (label_needs_parens(c))
        term = "(" + c + ")";
      else
        term = c;
      term += var;
      if (t > 1) term += "^" + std::to_string(t);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  if (out.empty()) out = "0";
  return out;
}

/// Descending rendering used for the modulus in descriptors, e.g. "x^2+x+1".
inline std::string poly_descriptor(const FiniteRing& base,
                                   const std::vector<int>& coeffs,
                                   const std::string& var) {
  std::string out;
  for (int t = int(coeffs.size()) - 1; t >= 0; --t) {
    if (coeffs[t] == base.zero()) continue;
    std::string c = base.label(coeffs[t]);
    std::string term;
    if (t == 0) {
      term = c;
    } else {
      if (c == base.label(base.one()))
        term = "";
      else if (label_needs_parens(c))
        term = "(" + c + ")";
      else
        term = c;
      term += var;
      if (t > 1) term += "^" + std::to_string(t);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  if (out.empty()) out = "0";
  return out;
}

inline FiniteRing quotient_poly(const FiniteRing& base,
                                const std::vector<int>& modulus,
                                const std::string& var,
                                std::string descriptor) {
  if (modulus.size() < 2)
    throw RingError("quotient modulus must have degree >= 1");
  const int m = int(modulus.size()) - 1;
  for (int c : modulus)
    if (c < 0 || c >= base.order())
      throw RingError("modulus coefficient id out of range");
  if (modulus.back() != base.one())
    throw RingError("quotient modulus must be monic");

  long long order = 1;
  for (int t = 0; t < m; ++t) {
    order *= base.order();
    if (order > kMaxRingOrder)
      throw RingError("quotient ring order exceeds cap " +
                      std::to_string(kMaxRingOrder));
  }
  const int n = int(order);
  const int B = base.order();

  auto decode = [&](int id) {
    std::vector<int> c(m);
    for (int t = 0; t < m; ++t) {
      c[t] = id % B;
      id /= B;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int id = 0;
    for (int t = m - 1; t >= 0; --t) id = id * B + c[t];
    return id;
  };

  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  std::vector<std::vector<int>> coeffs(n);
  for (int id = 0; id < n; ++id) coeffs[id] = decode(id);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> s(m);
      for (int t = 0; t < m; ++t) s[t] = base.add(coeffs[a][t], coeffs[b][t]);
      add[std::size_t(a) * n + b] = std::uint16_t(encode(s));

      std::vector<int> p(2 * m - 1, base.zero());
      for (int i = 0; i < m; ++i) {
        if (coeffs[a][i] == base.zero()) continue;
        for (int j = 0; j < m; ++j)
          p[i + j] =
              base.add(p[i + j], base.mul(coeffs[a][i], coeffs[b][j]));
      }
      for (int d = 2 * m - 2; d >= m; --d) {
        int c = p[d];
        if (c == base.zero()) continue;
        int nc = base.neg(c);
        for (int j = 0; j < m; ++j)
          p[d - m + j] = base.add(p[d - m + j], base.mul(nc, modulus[j]));
        p[d] = base.zero();
      }
      p.resize(m);
      mul[std::size_t(a) * n + b] = std::uint16_t(encode(p));
    }

  std::vector<std::string> labels(n);
  for (int id = 0; id < n; ++id) labels[id] = poly_label(base, coeffs[id], var);

  if (descriptor.empty())
    descriptor = base.descriptor() + "[" + var + "]/(" +
                 poly_descriptor(base, modulus, var) + ")";

  std::vector<int> one(m, base.zero());
  one[0] = base.one();
  return FiniteRing(n, std::move(add), std::move(mul), encode(one),
                    std::move(descriptor), std::move(labels));
}

}  // namespace detail

/// Quotient base[x]/(modulus). Coefficients are base element ids in
/// ascending degree order; the modulus must be monic of degree >= 1.
inline FiniteRing make_quotient_poly(const FiniteRing& base,
                                     const std::vector<int>& modulus,
                                     const std::string& var = "x") {
  return detail::quotient_poly(base, modulus, var, "");
}

/// Z_n[i] = Z_n[x]/(x^2+1).
inline FiniteRing make_gaussian_mod(int n) {
  FiniteRing base = make_zn(n);
  return detail::quotient_poly(base, {1 % n, 0, 1}, "i",
                               "Z_" + std::to_string(n) + "[i]");
}

inline FiniteRing make_product(const std::vector<FiniteRing>& factors) {
  if (factors.empty()) throw RingError("product of zero rings");
  const int k = int(factors.size());
  long long order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > kMaxRingOrder)
      throw RingError("product ring order exceeds cap " +
                      std::to_string(kMaxRingOrder));
  }
  const int n = int(order);

  std::vector<int> weight(k);
  weight[k - 1] = 1;
  for (int t = k - 2; t >= 0; --t)
    weight[t] = weight[t + 1] * factors[t + 1].order();

  auto decode = [&](int id) {
    std::vector<int> c(k);
    for (int t = 0; t < k; ++t) {
      c[t] = id / weight[t];
      id %= weight[t];
    }
    return c;
  };

  std::vector<std::vector<int>> comps(n);
  for (int id = 0; id < n; ++id) comps[id] = decode(id);

  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ai = 0, mi = 0;
      for (int t = 0; t < k; ++t) {
        ai += factors[t].add(comps[a][t], comps[b][t]) * weight[t];
        mi += factors[t].mul(comps[a][t], comps[b][t]) * weight[t];
      }
      add[std::size_t(a) * n + b] = std::uint16_t(ai);
      mul[std::size_t(a) * n + b] = std::uint16_t(mi);
    }

  std::vector<std::string> labels(n);
  for (int id = 0; id < n; ++id) {
    std::string s = "(";
    for (int t = 0; t < k; ++t) {
      if (t) s += ",";
      s += factors[t].label(comps[id][t]);
    }
    s += ")";
    labels[id] = s;
  }

  int one = 0;
  for (int t = 0; t < k; ++t) one += factors[t].one() * weight[t];

  std::string desc;
  for (int t = 0; t < k; ++t) {
    if (t) desc += " x ";
    desc += factors[t].descriptor();
  }
  return FiniteRing(n, std::move(add), std::move(mul), one, std::move(desc),
                    std::move(labels));
}

// ---------------------------------------------------------------------------
// Presented rings
// ---------------------------------------------------------------------------

/// Generators e_1..e_k with additive orders d_1..d_k; e_1 is unity and d_1 the
/// characteristic. Elements are coefficient tuples (a_1..a_k), a_t in Z_{d_t};
/// multiplication extends the generator products bilinearly. Products with
/// e_1 are implied; all e_i*e_j with 2 <= i <= j must be given.
struct RingPresentation {
  std::string name;
  std::vector<int> additive_orders;
  std::map<std::pair<int, int>, std::vector<int>> structure;
};

namespace detail {
inline std::string gen_name(int t) {  // t is 2-based generator index
  static const char* names[] = {"r", "s", "t", "u", "v", "w"};
  if (t - 2 < 6) return names[t - 2];
  return "g" + std::to_string(t);
}
}  // namespace detail

inline FiniteRing make_presented(const RingPresentation& p) {
  const int k = int(p.additive_orders.size());
  if (k < 1) throw RingError("presentation needs at least one generator");
  if (p.additive_orders[0] < 2)
    throw RingError("characteristic (additive order of unity) must be >= 2");
  for (int d : p.additive_orders)
    if (d < 1) throw RingError("additive orders must be >= 1");

  long long order = 1;
  for (int d : p.additive_orders) {
    order *= d;
    if (order > kMaxRingOrder)
      throw RingError("presented ring order exceeds cap " +
                      std::to_string(kMaxRingOrder));
  }
  const int n = int(order);
  if (n < 2) throw RingError("presented ring must have order >= 2");

  auto sc = [&](int i, int j) -> std::vector<int> {
    if (i == 1) {
      std::vector<int> v(k, 0);
      v[j - 1] = 1;
      return v;
    }
    if (j == 1) {
      std::vector<int> v(k, 0);
      v[i - 1] = 1;
      return v;
    }
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = p.structure.find(key);
    if (it == p.structure.end())
      throw RingError("presentation missing structure constants for e" +
                      std::to_string(key.first) + "*e" +
                      std::to_string(key.second));
    return it->second;
  };
  for (const auto& [key, vec] : p.structure) {
    if (key.first < 2 || key.first > k || key.second < key.first ||
        key.second > k)
      throw RingError("structure constant indices out of range");
    if (int(vec.size()) != k)
      throw RingError("structure constant vector length must equal the "
                      "generator count");
    for (int t = 0; t < k; ++t)
      if (vec[t] < 0 || vec[t] >= p.additive_orders[t])
        throw RingError("structure constant coefficient out of range");
  }

  std::vector<int> weight(k);
  weight[k - 1] = 1;
  for (int t = k - 2; t >= 0; --t)
    weight[t] = weight[t + 1] * p.additive_orders[t + 1];

  auto decode = [&](int id) {
    std::vector<int> c(k);
    for (int t = 0; t < k; ++t) {
      c[t] = id / weight[t];
      id %= weight[t];
    }
    return c;
  };

  std::vector<std::vector<int>> coeff(n);
  for (int id = 0; id < n; ++id) coeff[id] = decode(id);

  std::vector<std::uint16_t> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ai = 0;
      for (int t = 0; t < k; ++t)
        ai += ((coeff[a][t] + coeff[b][t]) % p.additive_orders[t]) * weight[t];
      add[std::size_t(a) * n + b] = std::uint16_t(ai);

      std::vector<long long> acc(k, 0);
      for (int i = 1; i <= k; ++i) {
        if (coeff[a][i - 1] == 0) continue;
        for (int j = 1; j <= k; ++j) {
          if (coeff[b][j - 1] == 0) continue;
          long long m = 1LL * coeff[a][i - 1] * coeff[b][j - 1];
          std::vector<int> v = sc(i, j);
          for (int t = 0; t < k; ++t)
            acc[t] = (acc[t] + m * v[t]) % p.additive_orders[t];
        }
      }
      int mi = 0;
      for (int t = 0; t < k; ++t) mi += int(acc[t]) * weight[t];
      mul[std::size_t(a) * n + b] = std::uint16_t(mi);
    }

  std::vector<std::string> labels(n);
  for (int id = 0; id < n; ++id) {
    std::string s;
    const auto& c = coeff[id];
    if (c[0] != 0) s = std::to_string(c[0]);
    for (int t = 2; t <= k; ++t) {
      if (c[t - 1] == 0) continue;
      std::string term = (c[t - 1] == 1 ? "" : std::to_string(c[t - 1])) +
                         detail::gen_name(t);
      if (!s.empty()) s += "+";
      s += term;
    }
    labels[id] = s.empty() ? "0" : s;
  }

  std::string desc = p.name;
  if (desc.empty()) {
    desc = "R(";
    for (int t = 0; t < k; ++t) {
      if (t) desc += ",";
      desc += std::to_string(p.additive_orders[t]);
    }
    desc += ")";
  }
  return FiniteRing(n, std::move(add), std::move(mul), weight[0],
                    std::move(desc), std::move(labels));
}

// ---------------------------------------------------------------------------
// Presentation file format
// ---------------------------------------------------------------------------
//
//   name = "Z4[r]/(2r,r^2-2)"
//   orders = [4, 2]
//   sc.2.2 = [2, 0]
//
// '#' starts a comment; blank lines are ignored; unknown keys are rejected.
// Symmetric entries (sc.3.2 when sc.2.3 is given) may be omitted.

inline RingPresentation parse_presentation(std::string_view text) {
  RingPresentation p;
  bool have_orders = false;
  int lineno = 0;
  std::size_t pos = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw RingError("presentation line " + std::to_string(lineno) + ": " +
                    msg);
  };
  auto parse_int_list = [&](std::string_view v) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= v.size() || v[i] != '[') fail("expected '['");
    ++i;
    while (true) {
      skip_ws();
      if (i < v.size() && v[i] == ']') {
        ++i;
        break;
      }
      bool negv = false;
      if (i < v.size() && v[i] == '-') negv = true, ++i;
      if (i >= v.size() || v[i] < '0' || v[i] > '9') fail("expected integer");
      long val = 0;
      while (i < v.size() && v[i] >= '0' && v[i] <= '9') {
        val = val * 10 + (v[i] - '0');
        if (val > kMaxRingOrder) fail("integer too large");
        ++i;
      }
      out.push_back(int(negv ? -val : val));
      skip_ws();
      if (i < v.size() && v[i] == ',') {
        ++i;
        continue;
      }
      if (i < v.size() && v[i] == ']') {
        ++i;
        break;
      }
      fail("expected ',' or ']'");
    }
    skip_ws();
    if (i != v.size()) fail("trailing characters after list");
    return out;
  };

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    std::string_view key = line.substr(0, eq);
    std::string_view val = line.substr(eq + 1);
    auto trim = [](std::string_view s) {
      auto a = s.find_first_not_of(" \t");
      if (a == std::string_view::npos) return std::string_view{};
      auto b = s.find_last_not_of(" \t");
      return s.substr(a, b - a + 1);
    };
    key = trim(key);
    val = trim(val);

    if (key == "name") {
      if (val.size() < 2 || val.front() != '"' || val.back() != '"')
        fail("name must be a double-quoted string");
      p.name = std::string(val.substr(1, val.size() - 2));
    } else if (key == "orders") {
      if (have_orders) fail("duplicate 'orders'");
      p.additive_orders = parse_int_list(val);
      for (int d : p.additive_orders)
        if (d < 1) fail("additive orders must be positive");
      have_orders = true;
    } else if (key.size() > 3 && key.substr(0, 3) == "sc.") {
      std::string_view rest = key.substr(3);
      std::size_t dot = rest.find('.');
      if (dot == std::string_view::npos) fail("expected sc.<i>.<j>");
      int i = 0, j = 0;
      for (char ch : rest.substr(0, dot)) {
        if (ch < '0' || ch > '9') fail("bad generator index");
        i = i * 10 + (ch - '0');
      }
      for (char ch : rest.substr(dot + 1)) {
        if (ch < '0' || ch > '9') fail("bad generator index");
        j = j * 10 + (ch - '0');
      }
      auto keypair = std::make_pair(std::min(i, j), std::max(i, j));
      std::vector<int> vec = parse_int_list(val);
      auto it = p.structure.find(keypair);
      if (it != p.structure.end()) {
        if (it->second != vec)
          fail("conflicting entries for sc." + std::to_string(keypair.first) +
               "." + std::to_string(keypair.second));
      } else {
        p.structure.emplace(keypair, std::move(vec));
      }
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }

  if (!have_orders) throw RingError("presentation is missing 'orders'");
  return p;
}

inline std::string format_presentation(const RingPresentation& p) {
  std::ostringstream os;
  if (!p.name.empty()) os << "name = \"" << p.name << "\"\n";
  os << "orders = [";
  for (std::size_t t = 0; t < p.additive_orders.size(); ++t) {
    if (t) os << ", ";
    os << p.additive_orders[t];
  }
  os << "]\n";
  for (const auto& [key, vec] : p.structure) {
    os << "sc." << key.first << "." << key.second << " = [";
    for (std::size_t t = 0; t < vec.size(); ++t) {
      if (t) os << ", ";
      os << vec[t];
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Zero divisors and friends
// ---------------------------------------------------------------------------

/// Nonzero x such that x*y = 0 for some nonzero y, in ascending id order.
inline std::vector<int> zero_divisors(const FiniteRing& R) {
  std::vector<int> out;
  const int n = R.order();
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (R.mul(x, y) == 0) {
        out.push_back(x);
        break;
      }
  return out;
}

inline std::vector<int> units(const FiniteRing& R) {
  std::vector<int> out;
  const int n = R.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (R.mul(x, y) == R.one()) {
        out.push_back(x);
        break;
      }
  return out;
}

inline bool is_integral_domain(const FiniteRing& R) {
  return zero_divisors(R).empty();
}

inline bool is_nilpotent(const FiniteRing& R, int x) {
  int acc = x;
  for (int t = 1; t <= R.order(); ++t) {
    if (acc == 0) return true;
    acc = R.mul(acc, x);
  }
  return false;
}

inline bool all_zd_nilpotent(const FiniteRing& R) {
  for (int x : zero_divisors(R))
    if (!is_nilpotent(R, x)) return false;
  return true;
}

/// True iff x*y = 0 for every pair x,y of zero divisors (L(R)^2 = {0}).
inline bool zd_square_zero(const FiniteRing& R) {
  std::vector<int> zd = zero_divisors(R);
  for (int x : zd)
    for (int y : zd)
      if (R.mul(x, y) != 0) return false;
  return true;
}

}  // namespace zdg
