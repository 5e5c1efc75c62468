/**
 * @file json_io.hpp
 * @brief Canonical JSON for algebras and gradings.
 *
 * Keys are sorted (nlohmann::json objects are ordered maps) and rationals
 * are written as canonical "p" or "p/q" strings, so equal inputs give
 * byte-identical documents.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "e6r/algebra.hpp"
#include "e6r/grading.hpp"

namespace e6r {

using Json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string field_name(const Rational&) { return "Q"; }
inline std::string field_name(const GaussRational&) { return "Qi"; }

inline Json scalar_json(const Rational& q) { return q.str(); }
inline Json scalar_json(const GaussRational& q) { return q.str(); }

template <class S>
Json vec_json(const Vec<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

/// {"field", "dim", "basis", "sc": [[i, j, k, "c"], ...], "provenance"}.
/// Entries are listed in (i, j, k) order; zero constants are omitted.
template <class S>
Json algebra_json(const StructAlgebra<S>& a) {
  Json sc = Json::array();
  auto entries = a.entries();
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  for (const auto& e : entries) sc.push_back(Json::array({e.i, e.j, e.k, scalar_json(e.c)}));
  Json prov = Json::object();
  for (const auto& [k, v] : a.provenance()) prov[k] = v;
  return Json{{"field", field_name(S{})}, {"dim", a.dim()}, {"basis", a.labels()}, {"sc", sc}, {"provenance", prov}};
}

inline Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw JsonFormatError("expected a rational string");
  auto q = Rational::parse(j.get<std::string>());
  if (!q) throw JsonFormatError("malformed rational: " + j.get<std::string>());
  return *q;
}

/// Inverse of algebra_json for the field Q.
inline StructAlgebra<Rational> algebra_from_json(const Json& j) {
  if (j.value("field", "") != "Q") throw JsonFormatError("only field Q is supported for reading");
  const auto n = j.at("dim").get<size_t>();
  auto labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.size() != n) throw JsonFormatError("basis length differs from dim");
  StructAlgebra<Rational> a(std::move(labels));
  for (const auto& e : j.at("sc")) {
    if (!e.is_array() || e.size() != 4) throw JsonFormatError("sc entries are [i, j, k, c]");
    const auto i = e[0].get<size_t>(), jj = e[1].get<size_t>(), k = e[2].get<size_t>();
    if (i >= n || jj >= n || k >= n) throw JsonFormatError("sc index out of range");
    a.add_entry(i, jj, k, parse_rational(e[3]));
  }
  if (j.contains("provenance"))
    for (const auto& [k, v] : j.at("provenance").items()) a.provenance()[k] = v.get<std::string>();
  return a;
}

/// {"group": {"free_rank", "torsion", "moduli"}, "components": [{"degree", "vectors"}]}.
/// "moduli" gives the coordinate order of degrees (0 for a free coordinate).
template <class S>
Json grading_json(const GradedDecomposition<S>& g) {
  Json comps = Json::array();
  for (const auto& [d, vs] : g.components()) {
    Json vecs = Json::array();
    for (const auto& v : vs) vecs.push_back(vec_json(v));
    comps.push_back(Json{{"degree", d}, {"vectors", vecs}});
  }
  return Json{{"group", {{"free_rank", g.group().free_rank()}, {"torsion", g.group().torsion()}, {"moduli", g.group().moduli()}}},
              {"components", comps}};
}

inline GradedDecomposition<Rational> grading_from_json(const Json& j, size_t ambient) {
  const FinAbGroup grp(j.at("group").at("moduli").get<std::vector<int64_t>>());
  GradedDecomposition<Rational> g(grp, ambient);
  for (const auto& c : j.at("components")) {
    const auto d = c.at("degree").get<Degree>();
    for (const auto& v : c.at("vectors")) {
      if (v.size() != ambient) throw JsonFormatError("vector length differs from the ambient dimension");
      Vec<Rational> x;
      for (const auto& e : v) x.push_back(parse_rational(e));
      g.add(d, std::move(x));
    }
  }
  return g;
}

/// Two-space indented dump with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace e6r
