/**
 * @file models.hpp
 * @brief The named models of e6 and the gradings carried by them.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "e6r/chevalley.hpp"
#include "e6r/grading.hpp"
#include "e6r/sp8.hpp"
#include "e6r/tits.hpp"

namespace e6r {

/// A grading together with the algebra carrying it.
struct ModelGrading {
  std::string name;
  std::string carrier;
  LieAlgebra<Rational> lie;
  GradedDecomposition<Rational> grading;
};

/// Z2^6 grading on Der(J) + J0, J = H3(O, diag(1,-1,1)): the Z2 split times
/// the Z2^2 x Z2^3 grading of J.
inline ModelGrading gamma7() {
  const auto j = h3(hurwitz("O"), {1, -1, 1});
  const auto l = derj_j0_model(j);
  const auto gj = intersect_gradings(jordan_z22_grading(j), jordan_z23_grading(j));
  return {"gamma7", l.name, l.lie, combine(rr_z2_grading(l.c), gj, l)};
}

/// Z x Z2^4 grading on the same model from the Z grading of J refined by Z2^3.
inline ModelGrading gamma8() {
  const auto j = h3(hurwitz("O"), {1, -1, 1});
  const auto l = derj_j0_model(j);
  const auto gj = intersect_gradings(jordan_z_grading(j), jordan_z23_grading(j));
  return {"gamma8", l.name, l.lie, combine(rr_z2_grading(l.c), gj, l).canonical()};
}

/// Z^2 x Z2^3 grading on T(O, Mat3(R)+) from Z2^3 on O and Z^2 on Mat3(R).
inline ModelGrading gamma4() {
  const auto t = tits(hurwitz("O"), m3r());
  return {"gamma4", t.name, t.lie, combine(octonion_z23_grading(t.c), m3r_z2_grading(t.j), t).canonical()};
}

/// Z4 x Z2^4 grading of the sp8 model, carried by its conjugated form of signature -26.
inline ModelGrading gamma11() {
  const auto m = assemble_e6();
  auto cf = conjugated_form(m);
  return {"gamma11", "L'(sp8 + ker c)", std::move(cf.lie), gamma11_grading(m)};
}

/// Z2^7 grading from omega and the order-two torus, carried by the split form.
inline ModelGrading gamma13() {
  auto cb = e6_chevalley();
  auto g = gamma13_grading(cb);
  return {"gamma13", "chevalley-e6", std::move(cb.lie), std::move(g)};
}

inline ModelGrading grading_by_name(const std::string& name) {
  if (name == "gamma4") return gamma4();
  if (name == "gamma7") return gamma7();
  if (name == "gamma8") return gamma8();
  if (name == "gamma11") return gamma11();
  if (name == "gamma13") return gamma13();
  throw std::invalid_argument("unknown grading: " + name);
}

inline const std::vector<std::string>& grading_names() {
  static const std::vector<std::string> n{"gamma4", "gamma7", "gamma8", "gamma11", "gamma13"};
  return n;
}

}  // namespace e6r
