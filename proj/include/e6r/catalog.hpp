/**
 * @file catalog.hpp
 * @brief The closed list of buildable models, by name.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "e6r/chevalley.hpp"
#include "e6r/sp8.hpp"
#include "e6r/tits.hpp"

namespace e6r {

struct NamedModel {
  std::string name;
  std::string description;
  LieAlgebra<Rational> lie;
};

inline const std::vector<std::string>& model_names() {
  static const std::vector<std::string> n{"tits-o-m3r",        "tits-rr-albert",      "tits-rr-albert-split",
                                          "tits-c-albert",     "tits-c-albert-split", "tits-rr-splitalbert",
                                          "tits-c-splitalbert", "sp8-e6",             "chevalley-e6"};
  return n;
}

/// "albert" is H3(O, I), "albert-split" is H3(O, diag(1,-1,1)) and
/// "splitalbert" is H3(Os, I).
inline NamedModel build_model(const std::string& name) {
  auto from_tits = [&](const std::string& c, const std::string& o, const Gamma& g) {
    auto t = tits(hurwitz(c), h3(hurwitz(o), g));
    return NamedModel{name, t.name, std::move(t.lie)};
  };
  if (name == "tits-o-m3r") {
    auto t = tits(hurwitz("O"), m3r());
    return {name, t.name, std::move(t.lie)};
  }
  if (name == "tits-rr-albert") return from_tits("RR", "O", {1, 1, 1});
  if (name == "tits-rr-albert-split") return from_tits("RR", "O", {1, -1, 1});
  if (name == "tits-c-albert") return from_tits("C", "O", {1, 1, 1});
  if (name == "tits-c-albert-split") return from_tits("C", "O", {1, -1, 1});
  if (name == "tits-rr-splitalbert") return from_tits("RR", "Os", {1, 1, 1});
  if (name == "tits-c-splitalbert") return from_tits("C", "Os", {1, 1, 1});
  if (name == "sp8-e6") {
    return {name, "sp8 + ker c", assemble_e6().lie};
  }
  if (name == "chevalley-e6") return {name, "Chevalley basis of split e6", e6_chevalley().lie};
  throw std::invalid_argument("unknown model: " + name);
}

}  // namespace e6r
