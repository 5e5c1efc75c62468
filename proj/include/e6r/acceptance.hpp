/**
 * @file acceptance.hpp
 * @brief The end-to-end checks run by `e6tool verify-all` and the acceptance
 *        binary. Every check recomputes its inputs from scratch.
 */
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "e6r/chevalley.hpp"
#include "e6r/json_io.hpp"
#include "e6r/models.hpp"
#include "e6r/parallel.hpp"
#include "e6r/sp8.hpp"
#include "e6r/tits.hpp"

namespace e6r {

struct CheckItem {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct CheckResult {
  int id = 0;
  std::string title;
  std::vector<CheckItem> items;
  bool passed() const {
    for (const auto& i : items)
      if (!i.ok) return false;
    return !items.empty();
  }
};

struct AcceptanceOptions {
  std::set<int> only;       // empty means all
  bool flip_gamma = false;  // mutation: diag(1,-1,1) replaced by I in the Jacobson table
};

inline constexpr int kCriteria = 14;

namespace detail {

template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) {
    std::call_once(flag_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  std::once_flag flag_;
  std::optional<T> value_;
};

template <class T>
std::string tuple_str(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

inline std::string group_str(const FinAbGroup& g) {
  std::ostringstream os;
  auto t = g.torsion();
  std::sort(t.begin(), t.end());
  os << "Z^" << g.free_rank();
  for (auto m : t) os << " x Z" << m;
  return os.str();
}

inline std::string opt_str(const std::optional<Rational>& q) { return q ? q->str() : "not proportional"; }

template <class A, class B>
CheckItem item(std::string name, const A& expected, const B& computed) {
  std::ostringstream e, c;
  e << expected;
  c << computed;
  return {std::move(name), e.str(), c.str(), e.str() == c.str()};
}

inline CheckItem flag(std::string name, bool ok) { return {std::move(name), "true", ok ? "true" : "false", ok}; }

/// Models shared between checks of one run.
struct Context {
  explicit Context(AcceptanceOptions o) : opts(std::move(o)) {}
  AcceptanceOptions opts;

  struct Graded {
    ModelGrading m;
    Matrix<Rational> k;
  };

  Lazy<TitsAlgebra> o_m3r_;
  Lazy<Matrix<Rational>> o_m3r_k_;
  Lazy<TitsAlgebra> albert_, albert_twisted_;
  Lazy<Matrix<Rational>> albert_k_;
  Lazy<std::vector<JacobsonCell>> table_;
  Lazy<Sp31Decomposition> sp31_;
  Lazy<Sp8Model> sp8_;
  Lazy<Matrix<Rational>> sp8_k_;
  Lazy<ConjugatedForm> conj_;
  Lazy<ChevalleyBasis> chev_;
  Lazy<std::vector<TorusRow>> torus_;
  std::map<std::string, std::unique_ptr<Lazy<Graded>>> graded_;
  std::mutex graded_mutex_;

  const TitsAlgebra& o_m3r() { return o_m3r_.get([] { return tits(hurwitz("O"), m3r()); }); }
  const Matrix<Rational>& o_m3r_k() { return o_m3r_k_.get([&] { return killing_matrix(o_m3r().lie); }); }
  const TitsAlgebra& albert() { return albert_.get([] { return derj_j0_model(h3(hurwitz("O"), {1, 1, 1})); }); }
  const TitsAlgebra& albert_twisted() {
    return albert_twisted_.get([] { return derj_j0_model(h3(hurwitz("O"), {1, -1, 1})); });
  }
  const Matrix<Rational>& albert_k() { return albert_k_.get([&] { return killing_matrix(albert().lie); }); }
  const std::vector<JacobsonCell>& table() {
    return table_.get([&] { return jacobson_table(opts.flip_gamma ? Gamma{1, 1, 1} : Gamma{1, -1, 1}); });
  }
  const Sp31Decomposition& sp31() { return sp31_.get([&] { return sp31_decomposition(albert(), albert_k()); }); }
  const Sp8Model& sp8() { return sp8_.get([] { return assemble_e6(); }); }
  const Matrix<Rational>& sp8_k() { return sp8_k_.get([&] { return killing_matrix(sp8().lie); }); }
  const ConjugatedForm& conj() { return conj_.get([&] { return conjugated_form(sp8()); }); }
  const ChevalleyBasis& chev() { return chev_.get([] { return e6_chevalley(); }); }
  const std::vector<TorusRow>& torus() { return torus_.get([&] { return torus_table(chev()); }); }
  const Graded& graded(const std::string& name) {
    Lazy<Graded>* slot;
    {
      std::lock_guard<std::mutex> lock(graded_mutex_);
      auto& p = graded_[name];
      if (!p) p = std::make_unique<Lazy<Graded>>();
      slot = p.get();
    }
    return slot->get([&] {
      auto m = grading_by_name(name);
      auto k = killing_matrix(m.lie);
      return Graded{std::move(m), std::move(k)};
    });
  }
};

inline std::string jacobi_str(const LieAlgebra<Rational>& l) { return jacobi_defect(l, 1).empty() ? "ok" : "defect"; }

inline CheckResult check_dimensions(Context& c) {
  CheckResult r{1, "dimensions", {}};
  const auto o = hurwitz("O");
  r.items.push_back(item("dim Der(O)", 14, derivations(o.alg()).size()));
  r.items.push_back(item("dim Der(H3(O,I))", 52, c.albert().layout.der_j_dim));
  r.items.push_back(item("dim Der(H3(O,diag(1,-1,1)))", 52, c.albert_twisted().layout.der_j_dim));
  r.items.push_back(item("dim Der(Mat3(R)+)", 8, c.o_m3r().layout.der_j_dim));
  r.items.push_back(item("dim T(O,Mat3(R))", 78, c.o_m3r().dim()));
  for (const auto& cell : c.table())
    if (cell.c_name == "RR" && cell.j_name.find("Os") == std::string::npos)
      r.items.push_back(item("dim T(RR," + cell.j_name + ")", 78, cell.dim));
  return r;
}

inline CheckResult check_jacobi(Context& c) {
  CheckResult r{2, "jacobi", {}};
  for (const auto& cell : c.table())
    r.items.push_back(item("T(" + cell.c_name + "," + cell.j_name + ")", "ok", cell.jacobi_ok ? "ok" : "defect"));
  r.items.push_back(item("T(O,Mat3(R))", "ok", jacobi_str(c.o_m3r().lie)));
  r.items.push_back(item(c.albert().name, "ok", jacobi_str(c.albert().lie)));
  r.items.push_back(item(c.albert_twisted().name, "ok", jacobi_str(c.albert_twisted().lie)));
  r.items.push_back(item("sp8-e6", "ok", jacobi_str(c.sp8().lie)));
  r.items.push_back(item("sp8-e6 conjugated", "ok", jacobi_str(c.conj().lie)));
  r.items.push_back(item("chevalley-e6", "ok", jacobi_str(c.chev().lie)));
  return r;
}

inline CheckResult check_jacobson_table(Context& c) {
  CheckResult r{3, "jacobson signature table", {}};
  const std::vector<long> expect{-78, -14, 2, -26, -26, 6};
  const auto& t = c.table();
  for (size_t i = 0; i < t.size(); ++i)
    r.items.push_back(item("sign T(" + t[i].c_name + "," + t[i].j_name + ")", expect[i], t[i].signature));
  return r;
}

inline CheckResult check_o_m3r(Context& c) {
  CheckResult r{4, "signature of T(O,Mat3(R))", {}};
  r.items.push_back(item("sign T(O,Mat3(R))", -26, inertia(c.o_m3r_k()).signature()));
  return r;
}

inline CheckResult check_constants(Context& c) {
  CheckResult r{5, "proportionality constants", {}};
  const auto pc = tits_constants(c.o_m3r(), c.o_m3r_k());
  r.items.push_back(item("k/tr on Der(O)", "12", opt_str(pc.c_der_c)));
  r.items.push_back(item("k/tr on Der(Mat3(R))", "8", opt_str(pc.c_der_j)));
  r.items.push_back(item("alpha", "-60", opt_str(pc.alpha)));
  const auto& d = c.sp31();
  r.items.push_back(item("delta", "12/5", opt_str(d.delta)));
  return r;
}

inline CheckResult check_sp31(Context& c) {
  CheckResult r{6, "sp(3,1) decomposition and twist identity", {}};
  const auto& d = c.sp31();
  r.items.push_back(flag("nu' is an automorphism", d.nu_prime_is_automorphism));
  r.items.push_back(item("dim even part", 36, d.even_dim));
  r.items.push_back(item("dim fix(theta) cap fix(nu)", 24, d.fix_theta_and_nu_dim));
  r.items.push_back(item("sign of k on even part", -12, d.even_signature));
  const auto& l = c.albert();
  const long s = inertia(c.albert_k()).signature();
  const long st = killing_signature(twist(l.lie, l.der_even_split(), Rational(-1)));
  const long se = inertia(restrict_form(c.albert_k(), l.der_j_basis())).signature();
  r.items.push_back(item("sign L", -26, s));
  r.items.push_back(item("sign L twisted by -1", -78, st));
  r.items.push_back(item("sign k on Der(J)", -52, se));
  r.items.push_back(flag("sign L + sign L^- = 2 sign k|even", s + st == 2 * se));
  r.items.push_back(flag("identity along nu'", s + d.twisted_signature == 2 * d.even_signature));
  return r;
}

struct GradingExpect {
  std::string name;
  std::string group;
  std::vector<size_t> type;
  size_t e_dim;
};

inline const std::vector<GradingExpect>& grading_expectations() {
  static const std::vector<GradingExpect> e{
      {"gamma4", "Z^2 x Z2 x Z2 x Z2", {48, 1, 0, 7}, 2},
      {"gamma7", "Z^0 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2", {48, 1, 0, 7}, 0},
      {"gamma8", "Z^1 x Z2 x Z2 x Z2 x Z2", {57, 0, 7}, 1},
      {"gamma11", "Z^0 x Z2 x Z2 x Z2 x Z2 x Z4", {48, 13, 0, 1}, 0},
      {"gamma13", "Z^0 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2", {72, 0, 0, 0, 0, 1}, 0},
  };
  return e;
}

inline CheckResult check_grading_types(Context& c) {
  CheckResult r{7, "grading verification and types", {}};
  for (const auto& e : grading_expectations()) {
    const auto& g = c.graded(e.name);
    r.items.push_back(item(e.name + " group", e.group, group_str(g.m.grading.group())));
    r.items.push_back(item(e.name + " type", tuple_str(e.type), tuple_str(g.m.grading.type_vector())));
    const auto rep = g.m.grading.verify(g.m.lie.alg());
    r.items.push_back(flag(e.name + " closure and direct sum", rep.ok()));
  }
  return r;
}

inline CheckResult check_e_dims(Context& c) {
  CheckResult r{8, "identity component dimensions", {}};
  for (const auto& e : grading_expectations())
    r.items.push_back(item(e.name + " dim L_e", e.e_dim, c.graded(e.name).m.grading.e_dim()));
  return r;
}

inline CheckResult check_orthogonality(Context& c) {
  CheckResult r{9, "killing orthogonality", {}};
  for (const auto& e : grading_expectations()) {
    const auto& g = c.graded(e.name);
    r.items.push_back(item(e.name + " violating pairs", 0, orthogonality_violations(g.m.grading, g.k).size()));
  }
  return r;
}

inline CheckResult check_bound(Context& c) {
  CheckResult r{10, "signature bound", {}};
  for (const auto& e : grading_expectations()) {
    const auto& g = c.graded(e.name);
    const auto b = signature_bound(g.m.grading, inertia(g.k).signature());
    std::ostringstream os;
    os << "|" << b.signature << " - " << b.dim_e << "| <= " << b.d;
    r.items.push_back({e.name + " bound", "holds", (b.holds ? "holds: " : "fails: ") + os.str(), b.holds});
  }
  return r;
}

inline CheckResult check_sp8(Context& c) {
  CheckResult r{11, "sp8 model", {}};
  r.items.push_back(item("eigenspace type on sp8", "(24,6)", tuple_str(sp8_eigen_grading().type_vector())));
  r.items.push_back(item("dim ker c", 42, kernel_basis(contraction_matrix()).size()));
  const Matrix<QI> form = lift(symplectic_form());
  const auto a = grading_matrices();
  for (size_t i = 0; i < a.size(); ++i)
    r.items.push_back(flag("A" + std::to_string(i + 1) + " C A" + std::to_string(i + 1) + "^t = C",
                           a[i] * form * a[i].transpose() == form));
  const auto& cf = c.conj();
  r.items.push_back(item("dim fix Ad(C A1A2A3) on sp8", 24, cf.fix_ad_c_a123));
  r.items.push_back(item("even-part signature", 4, inertia(restrict_form(c.sp8_k(), c.sp8().even_basis())).signature()));
  r.items.push_back(item("conjugated even-part signature", -12, cf.even_signature));
  const std::vector<long> both{std::min(cf.full_signature, cf.twisted_signature),
                               std::max(cf.full_signature, cf.twisted_signature)};
  r.items.push_back(item("{full, twisted}", "(-26,2)", tuple_str(both)));
  r.items.push_back(item("full + twisted", -24, cf.full_signature + cf.twisted_signature));
  return r;
}

inline CheckResult check_chevalley(Context& c) {
  CheckResult r{12, "chevalley", {}};
  const auto& cb = c.chev();
  r.items.push_back(item("roots", 72, cb.roots.size()));
  r.items.push_back(item("split signature", 6, killing_signature(cb.lie)));
  r.items.push_back(item("dim fix(omega)", 36, fixed_subspace(omega(cb)).dim()));
  std::set<size_t> fix_wt, fix_t;
  for (size_t k = 0; k < c.torus().size(); ++k) {
    fix_wt.insert(c.torus()[k].fix_omega_t);
    if (k) fix_t.insert(c.torus()[k].fix_t);
  }
  r.items.push_back(item("dim fix(omega t) over 64 t", "(36)", tuple_str(std::vector<size_t>(fix_wt.begin(), fix_wt.end()))));
  r.items.push_back(item("dim fix(t) over 63 t", "(38,46)", tuple_str(std::vector<size_t>(fix_t.begin(), fix_t.end()))));
  const auto s = inheriting_signatures(c.torus());
  r.items.push_back(item("inheriting signatures", "(-78,-14,2,6)", tuple_str(std::vector<long>(s.begin(), s.end()))));
  r.items.push_back(flag("-26 absent", s.count(-26) == 0));
  return r;
}

inline CheckResult check_main_theorem(Context& c) {
  CheckResult r{13, "four gradings on the -26 form", {}};
  for (const std::string n : {"gamma4", "gamma7", "gamma8", "gamma11"}) {
    const auto& g = c.graded(n);
    r.items.push_back(item(n + " carrier signature", -26, inertia(g.k).signature()));
    r.items.push_back(flag(n + " verifies on it", g.m.grading.verify(g.m.lie.alg()).ok()));
  }
  const auto& g13 = c.graded("gamma13");
  r.items.push_back(flag("gamma13 verifies on the split form", g13.m.grading.verify(g13.m.lie.alg()).ok()));
  r.items.push_back(item("gamma13 carrier signature", 6, inertia(g13.k).signature()));
  r.items.push_back(flag("no inheriting form has signature -26", inheriting_signatures(c.torus()).count(-26) == 0));
  return r;
}

inline Json check_json(const CheckResult& r) {
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back(Json{{"name", i.name}, {"expected", i.expected}, {"computed", i.computed}, {"ok", i.ok}});
  return Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"items", items}};
}

inline std::vector<CheckResult> run_numbered(const AcceptanceOptions& opts, const std::set<int>& ids) {
  using Fn = CheckResult (*)(Context&);
  static const std::vector<Fn> fns{check_dimensions, check_jacobi,      check_jacobson_table, check_o_m3r,
                                   check_constants,  check_sp31,        check_grading_types,  check_e_dims,
                                   check_orthogonality, check_bound,    check_sp8,            check_chevalley,
                                   check_main_theorem};
  Context ctx(opts);
  std::vector<int> todo(ids.begin(), ids.end());
  std::vector<CheckResult> out(todo.size());
  parallel_for(todo.size(), [&](size_t i) { out[i] = fns[static_cast<size_t>(todo[i] - 1)](ctx); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

inline Json results_json(const std::vector<CheckResult>& rs, const AcceptanceOptions& opts) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : rs) {
    arr.push_back(check_json(r));
    all = all && r.passed();
  }
  return Json{{"criteria", arr}, {"passed", all}, {"mutation", opts.flip_gamma ? "flip-gamma" : "none"}};
}

}  // namespace detail

using detail::check_json;

/// Runs the selected checks. Check 14 runs checks 1..13 twice with fresh
/// state and compares the JSON documents byte for byte.
inline std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts = {}) {
  for (int i : opts.only)
    if (i < 1 || i > kCriteria) throw std::invalid_argument("criterion ids are 1..14");
  std::set<int> ids;
  for (int i = 1; i <= kCriteria; ++i)
    if (opts.only.empty() || opts.only.count(i)) ids.insert(i);
  const bool want14 = ids.erase(kCriteria) > 0;
  auto out = detail::run_numbered(opts, ids);
  if (want14) {
    std::set<int> all;
    for (int i = 1; i < kCriteria; ++i) all.insert(i);
    const auto a = dump(detail::results_json(detail::run_numbered(opts, all), opts));
    const auto b = dump(detail::results_json(detail::run_numbered(opts, all), opts));
    CheckResult r{kCriteria, "determinism", {}};
    r.items.push_back(detail::flag("two runs give byte-identical JSON", a == b));
    r.items.push_back(detail::item("document bytes", a.size(), b.size()));
    out.push_back(std::move(r));
  }
  return out;
}

inline Json acceptance_json(const std::vector<CheckResult>& rs, const AcceptanceOptions& opts) {
  return detail::results_json(rs, opts);
}

}  // namespace e6r
