#pragma once

// Ring expression mini-grammar, the CLI's stable way to name a ring:
//
//   expr   := "Zn:" uint
//           | "gauss:" uint
//           | "poly:" expr ":" coeffs      coeffs ascending, monic
//           | "prod:" expr ("," expr)+
//           | "catalog:" name
//           | "file:" path
//           | "(" expr ")"
//   coeffs := uint ("," uint)*             base-ring element ids
//
// Commas inside balanced (), [] do not split prod lists, so catalog names
// like catalog:Z4[r]/(2r,r^2-2) work unquoted. Errors carry byte offsets.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/catalog.hpp"
#include "zdg/config.hpp"
#include "zdg/ring.hpp"

namespace zdg {

class RingExprError : public RingError {
 public:
  RingExprError(std::size_t offset, const std::string& what)
      : RingError("ring expression error at byte " + std::to_string(offset) +
                  ": " + what),
        offset(offset) {}
  std::size_t offset;
};

namespace detail {

class RingExprParser {
 public:
  RingExprParser(std::string_view text, const RunConfig& cfg)
      : text_(text), cfg_(cfg) {}

  FiniteRing parse_all() {
    FiniteRing r = parse_expr();
    if (pos_ != text_.size())
      throw RingExprError(pos_, "unexpected trailing characters");
    return r;
  }

 private:
  std::string_view text_;
  const RunConfig& cfg_;
  std::size_t pos_ = 0;

  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  int parse_uint() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxRingOrder * 2) throw RingExprError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) throw RingExprError(pos_, "expected a number");
    return int(v);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw RingExprError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  /// Consumes until a top-level ',' or ')' (or end of input), tracking
  /// balanced () and [].
  std::string parse_token() {
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    if (pos_ == start) throw RingExprError(start, "expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void check_cap(const FiniteRing& r, std::size_t at) {
    if (r.order() > cfg_.order_cap)
      throw RingExprError(at, "ring order " + std::to_string(r.order()) +
                                  " exceeds the configured cap " +
                                  std::to_string(cfg_.order_cap));
  }

  FiniteRing parse_expr() {
    std::size_t at = pos_;
    if (starts_with("(")) {
      ++pos_;
      FiniteRing r = parse_expr();
      expect(')');
      return r;
    }
    if (starts_with("Zn:")) {
      pos_ += 3;
      int n = parse_uint();
      if (n < 2) throw RingExprError(at, "Zn requires n >= 2");
      if (n > cfg_.order_cap)
        throw RingExprError(at, "order exceeds the configured cap " +
                                    std::to_string(cfg_.order_cap));
      return make_zn(n);
    }
    if (starts_with("gauss:")) {
      pos_ += 6;
      int n = parse_uint();
      if (n < 2) throw RingExprError(at, "gauss requires n >= 2");
      if (1LL * n * n > cfg_.order_cap)
        throw RingExprError(at, "order n^2 exceeds the configured cap " +
                                    std::to_string(cfg_.order_cap));
      return make_gaussian_mod(n);
    }
    if (starts_with("poly:")) {
      pos_ += 5;
      FiniteRing base = parse_expr();
      expect(':');
      std::vector<int> coeffs;
      coeffs.push_back(parse_uint());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        // A comma is part of the coefficient list only if a digit follows.
        if (pos_ + 1 >= text_.size() || text_[pos_ + 1] < '0' ||
            text_[pos_ + 1] > '9')
          break;
        ++pos_;
        coeffs.push_back(parse_uint());
      }
      try {
        FiniteRing r = make_quotient_poly(base, coeffs);
        check_cap(r, at);
        return r;
      } catch (const AxiomViolation&) {
        throw;
      } catch (const RingExprError&) {
        throw;
      } catch (const RingError& e) {
        throw RingExprError(at, e.what());
      }
    }
    if (starts_with("prod:")) {
      pos_ += 5;
      std::vector<FiniteRing> factors;
      factors.push_back(parse_expr());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        factors.push_back(parse_expr());
      }
      try {
        FiniteRing r = make_product(factors);
        check_cap(r, at);
        return r;
      } catch (const RingError& e) {
        throw RingExprError(at, e.what());
      }
    }
    if (starts_with("catalog:")) {
      pos_ += 8;
      std::string name = parse_token();
      try {
        return catalog(name);
      } catch (const RingError& e) {
        throw RingExprError(at, e.what());
      }
    }
    if (starts_with("file:")) {
      pos_ += 5;
      std::string path = parse_token();
      std::ifstream in(path, std::ios::binary);
      if (!in) throw RingExprError(at, "cannot open '" + path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        FiniteRing r = make_presented(parse_presentation(buf.str()));
        check_cap(r, at);
        return r;
      } catch (const AxiomViolation&) {
        throw;
      } catch (const RingError& e) {
        throw RingExprError(at, e.what());
      }
    }
    throw RingExprError(
        pos_, "expected one of Zn:, gauss:, poly:, prod:, catalog:, file:");
  }
};

}  // namespace detail

inline FiniteRing build_ring_expr(std::string_view expr,
                                  const RunConfig& cfg = {}) {
  return detail::RingExprParser(expr, cfg).parse_all();
}

}  // namespace zdg
