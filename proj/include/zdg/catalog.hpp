#pragma once

// Named catalog of the small rings the claim checker works with. Every entry
// carries a presentation file (embedded below, loadable from disk through the
// same parser) and is built through its natural constructor: Z_n rings via
// make_zn, direct products via make_product, polynomial quotients via
// make_quotient_poly, and genuinely presented rings via make_presented.
//
// Notation-ambiguity entries, resolved here and cross-checked by the claim
// suite:
//   "GF4[r]/(r^2)"        reading of K_4(r)/(r^2): GF(4) is the 4-element
//                         field, built as a tower quotient.
//   "Z4[r]/(2r,r^2)"      reading of Z_4(r)/(2r,r)^2.
//   "Z2xZ4[x]/(x^2)"      alias of Z2x(Z2[x]/(x^2)); the alternative
//                         precedence Z2x(Z4[x]/(x^2)) is its own entry.

#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

struct CatalogEntry {
  const char* name;
  const char* file;  // presentation file text (equivalent construction)
};

namespace detail {

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      // Path-graph rings
      {"Z6", "name = \"Z6\"\norders = [6]\n"},
      {"Z8", "name = \"Z8\"\norders = [8]\n"},
      {"Z9", "name = \"Z9\"\norders = [9]\n"},
      {"Z2xZ2", "name = \"Z2xZ2\"\norders = [2, 2]\nsc.2.2 = [0, 1]\n"},
      {"Z3[r]/(r^2)",
       "name = \"Z3[r]/(r^2)\"\norders = [3, 3]\nsc.2.2 = [0, 0]\n"},
      {"Z2[r]/(r^3)",
       "name = \"Z2[r]/(r^3)\"\norders = [2, 2, 2]\n"
       "sc.2.2 = [0, 0, 1]\nsc.2.3 = [0, 0, 0]\nsc.3.3 = [0, 0, 0]\n"},
      {"Z4[r]/(2r,r^2-2)",
       "name = \"Z4[r]/(2r,r^2-2)\"\norders = [4, 2]\nsc.2.2 = [2, 0]\n"},

      // Cycle-graph rings
      {"Z3xZ3", "name = \"Z3xZ3\"\norders = [3, 3]\nsc.2.2 = [0, 1]\n"},
      {"GF4[r]/(r^2)",
       "name = \"GF4[r]/(r^2)\"\norders = [2, 2, 2, 2]\n"
       "sc.2.2 = [1, 1, 0, 0]\nsc.2.3 = [0, 0, 0, 1]\nsc.2.4 = [0, 0, 1, 1]\n"
       "sc.3.3 = [0, 0, 0, 0]\nsc.3.4 = [0, 0, 0, 0]\nsc.4.4 = [0, 0, 0, 0]\n"},
      {"Z4[r]/(r^2+r+1)",
       "name = \"Z4[r]/(r^2+r+1)\"\norders = [4, 4]\nsc.2.2 = [3, 3]\n"},
      {"Z4[r]/(2r,r^2)",
       "name = \"Z4[r]/(2r,r^2)\"\norders = [4, 2]\nsc.2.2 = [0, 0]\n"},
      {"Z2[r,s]/(r,s)^2",
       "name = \"Z2[r,s]/(r,s)^2\"\norders = [2, 2, 2]\n"
       "sc.2.2 = [0, 0, 0]\nsc.2.3 = [0, 0, 0]\nsc.3.3 = [0, 0, 0]\n"},

      // Mdim-3 rings
      {"Z2xZ4", "name = \"Z2xZ4\"\norders = [4, 2]\nsc.2.2 = [0, 1]\n"},
      {"Z2x(Z2[x]/(x^2))",
       "name = \"Z2x(Z2[x]/(x^2))\"\norders = [2, 2, 2]\n"
       "sc.2.2 = [0, 1, 0]\nsc.2.3 = [0, 0, 0]\nsc.3.3 = [0, 0, 0]\n"},
      {"Z2x(Z4[x]/(x^2))",
       "name = \"Z2x(Z4[x]/(x^2))\"\norders = [4, 2, 4]\n"
       "sc.2.2 = [0, 1, 0]\nsc.2.3 = [0, 0, 0]\nsc.3.3 = [0, 0, 0]\n"},
      {"Z2xZ2xZ2",
       "name = \"Z2xZ2xZ2\"\norders = [2, 2, 2]\n"
       "sc.2.2 = [0, 1, 0]\nsc.2.3 = [0, 0, 0]\nsc.3.3 = [0, 0, 1]\n"},

      // Cut-vertex rings (order 16 each)
      {"Z2[r,s]/(r^2,s^2-rs)",
       "name = \"Z2[r,s]/(r^2,s^2-rs)\"\norders = [2, 2, 2, 2]\n"
       "sc.2.2 = [0, 0, 0, 0]\nsc.2.3 = [0, 0, 0, 1]\nsc.2.4 = [0, 0, 0, 0]\n"
       "sc.3.3 = [0, 0, 0, 1]\nsc.3.4 = [0, 0, 0, 0]\nsc.4.4 = [0, 0, 0, 0]\n"},
      {"Z4[r]/(r^2+2r)",
       "name = \"Z4[r]/(r^2+2r)\"\norders = [4, 4]\nsc.2.2 = [0, 2]\n"},
      {"Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)",
       "name = \"Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)\"\norders = [4, 2, 2]\n"
       "sc.2.2 = [0, 0, 0]\nsc.2.3 = [2, 0, 0]\nsc.3.3 = [2, 0, 0]\n"},
      {"Z8[r]/(2r,r^2+4)",
       "name = \"Z8[r]/(2r,r^2+4)\"\norders = [8, 2]\nsc.2.2 = [4, 0]\n"},
      {"Z2[r,s]/(r^2,s^2)",
       "name = \"Z2[r,s]/(r^2,s^2)\"\norders = [2, 2, 2, 2]\n"
       "sc.2.2 = [0, 0, 0, 0]\nsc.2.3 = [0, 0, 0, 1]\nsc.2.4 = [0, 0, 0, 0]\n"
       "sc.3.3 = [0, 0, 0, 0]\nsc.3.4 = [0, 0, 0, 0]\nsc.4.4 = [0, 0, 0, 0]\n"},
      {"Z4[r]/(r^2)",
       "name = \"Z4[r]/(r^2)\"\norders = [4, 4]\nsc.2.2 = [0, 0]\n"},
      {"Z4[r,s]/(r^2,s^2,rs-2,2r,2s)",
       "name = \"Z4[r,s]/(r^2,s^2,rs-2,2r,2s)\"\norders = [4, 2, 2]\n"
       "sc.2.2 = [0, 0, 0]\nsc.2.3 = [2, 0, 0]\nsc.3.3 = [0, 0, 0]\n"},
  };
  return entries;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::catalog_entries()) out.push_back(e.name);
  return out;
}

/// Presentation file text for a catalog entry (also what `catalog --dump`
/// prints; the result round-trips through parse_presentation).
inline std::string catalog_file(const std::string& name) {
  std::string key = name == "Z2xZ4[x]/(x^2)" ? "Z2x(Z2[x]/(x^2))" : name;
  for (const auto& e : detail::catalog_entries())
    if (key == e.name) return e.file;
  throw RingError("unknown catalog ring '" + name + "'");
}

inline FiniteRing catalog(const std::string& name) {
  // Natural constructions where one exists; the presentation files stay the
  // canonical written form and are checked against these in the test suite.
  if (name == "Z6") return make_zn(6);
  if (name == "Z8") return make_zn(8);
  if (name == "Z9") return make_zn(9);
  if (name == "Z2xZ2") return make_product({make_zn(2), make_zn(2)});
  if (name == "Z3xZ3") return make_product({make_zn(3), make_zn(3)});
  if (name == "Z2xZ4") return make_product({make_zn(2), make_zn(4)});
  if (name == "Z2xZ2xZ2")
    return make_product({make_zn(2), make_zn(2), make_zn(2)});
  if (name == "Z3[r]/(r^2)")
    return make_quotient_poly(make_zn(3), {0, 0, 1}, "r");
  if (name == "Z2[r]/(r^3)")
    return make_quotient_poly(make_zn(2), {0, 0, 0, 1}, "r");
  if (name == "Z4[r]/(r^2+r+1)")
    return make_quotient_poly(make_zn(4), {1, 1, 1}, "r");
  if (name == "Z4[r]/(r^2)")
    return make_quotient_poly(make_zn(4), {0, 0, 1}, "r");
  if (name == "GF4[r]/(r^2)") {
    FiniteRing gf4 = make_quotient_poly(make_zn(2), {1, 1, 1}, "w");
    return make_quotient_poly(gf4, {0, 0, gf4.one()}, "r");
  }
  if (name == "Z2x(Z2[x]/(x^2))" || name == "Z2xZ4[x]/(x^2)")
    return make_product(
        {make_zn(2), make_quotient_poly(make_zn(2), {0, 0, 1}, "x")});
  if (name == "Z2x(Z4[x]/(x^2))")
    return make_product(
        {make_zn(2), make_quotient_poly(make_zn(4), {0, 0, 1}, "x")});
  return make_presented(parse_presentation(catalog_file(name)));
}

// Ring lists backing the claim suites, in source order.

inline std::vector<std::string> prop31_rings() {
  return {"Z6",           "Z8",           "Z9",
          "Z2xZ2",        "Z3[r]/(r^2)",  "Z2[r]/(r^3)",
          "Z4[r]/(2r,r^2-2)"};
}

inline std::vector<std::string> prop32_rings() {
  return {"Z3xZ3", "GF4[r]/(r^2)", "Z4[r]/(r^2+r+1)", "Z4[r]/(2r,r^2)",
          "Z2[r,s]/(r,s)^2"};
}

inline std::vector<std::string> thm32_rings() {
  return {"Z2xZ4", "Z2x(Z2[x]/(x^2))", "Z2xZ2xZ2"};
}

inline std::vector<std::string> cor31_rings() {
  return {"Z2[r,s]/(r^2,s^2-rs)",
          "Z4[r]/(r^2+2r)",
          "Z4[r,s]/(r^2,s^2-rs,rs-2,2r,2s)",
          "Z8[r]/(2r,r^2+4)",
          "Z2[r,s]/(r^2,s^2)",
          "Z4[r]/(r^2)",
          "Z4[r,s]/(r^2,s^2,rs-2,2r,2s)"};
}

}  // namespace zdg
