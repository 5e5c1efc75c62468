/**
 * @file e6tool_app.hpp
 * @brief The e6tool driver. `run` takes argv without the program name and
 *        returns the exit code: 0 success, 1 verification failure, 2 usage.
 */
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "e6r/e6r.hpp"

namespace e6tool {

using e6r::Json;
using e6r::Rational;

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("cannot write " + path);
}

/// Gradings whose construction basis is the catalog model's basis.
inline std::vector<std::string> gradings_on(const std::string& model) {
  if (model == "tits-o-m3r") return {"gamma4"};
  if (model == "chevalley-e6") return {"gamma13"};
  return {};
}

inline Json grading_summary(const e6r::ModelGrading& g, bool verified) {
  return Json{{"name", g.name},
              {"group", {{"free_rank", g.grading.group().free_rank()}, {"torsion", g.grading.group().torsion()}}},
              {"type_vector", g.grading.type_vector()},
              {"verified", verified}};
}

inline int cmd_build(const std::string& model, const std::string& out_path, bool json, std::ostream& out) {
  if (std::find(e6r::model_names().begin(), e6r::model_names().end(), model) == e6r::model_names().end())
    throw UsageError("unknown model: " + model);
  const auto m = e6r::build_model(model);
  const bool jacobi = e6r::jacobi_defect(m.lie, 1).empty();
  const long sig = e6r::killing_signature(m.lie);
  if (!out_path.empty()) write_file(out_path, e6r::dump(e6r::algebra_json(m.lie.alg())));
  Json grads = Json::array();
  bool all_ok = jacobi;
  for (const auto& gn : gradings_on(model)) {
    const auto g = e6r::grading_by_name(gn);
    const bool ok = g.grading.verify(m.lie.alg()).ok();
    all_ok = all_ok && ok;
    grads.push_back(grading_summary(g, ok));
  }
  if (json) {
    Json j{{"model", m.name},
           {"description", m.description},
           {"dim", m.lie.dim()},
           {"jacobi_ok", jacobi},
           {"killing_signature", sig},
           {"gradings", grads}};
    if (model == "tits-o-m3r") {
      const auto t = e6r::tits(e6r::hurwitz("O"), e6r::m3r());
      const auto pc = e6r::tits_constants(t, e6r::killing_matrix(t.lie));
      using e6r::detail::opt_str;
      j["constants"] = Json{{"k_over_tr_der_c", opt_str(pc.c_der_c)},
                            {"k_over_tr_der_j", opt_str(pc.c_der_j)},
                            {"alpha", opt_str(pc.alpha)}};
    }
    out << e6r::dump(j);
  } else {
    out << m.name << ": dim " << m.lie.dim() << ", jacobi " << (jacobi ? "ok" : "FAILED") << ", signature " << sig
        << "\n";
    if (!out_path.empty()) out << "wrote " << out_path << "\n";
  }
  return all_ok ? kOk : kFailed;
}

inline int cmd_grading(const std::string& name, bool verify, bool type_only, bool json, const std::string& out_path,
                       std::ostream& out) {
  const auto& names = e6r::grading_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown grading: " + name);
  const auto g = e6r::grading_by_name(name);
  const std::string type = e6r::detail::tuple_str(g.grading.type_vector());
  bool direct_sum = true, closure = true, orthogonal = true, bound = true;
  long sig = 0;
  if (verify) {
    const auto rep = g.grading.verify(g.lie.alg());
    direct_sum = rep.direct_sum;
    closure = rep.closure;
    const auto k = e6r::killing_matrix(g.lie);
    orthogonal = e6r::orthogonality_violations(g.grading, k).empty();
    sig = e6r::inertia(k).signature();
    bound = e6r::signature_bound(g.grading, sig).holds;
  }
  const bool ok = direct_sum && closure && orthogonal && bound;
  if (!out_path.empty()) write_file(out_path, e6r::dump(e6r::grading_json(g.grading)));
  if (json) {
    Json comps = Json::array();
    for (const auto& d : g.grading.support()) comps.push_back(Json{{"degree", d}, {"dim", g.grading.dim(d)}});
    Json j = grading_summary(g, verify && ok);
    j["carrier"] = g.carrier;
    j["e_dim"] = g.grading.e_dim();
    j["components"] = comps;
    if (verify)
      j["verification"] = Json{{"direct_sum", direct_sum},
                               {"closure", closure},
                               {"killing_orthogonal", orthogonal},
                               {"signature_bound", bound},
                               {"carrier_signature", sig}};
    out << e6r::dump(j);
  } else if (type_only) {
    out << type << "\n";
    if (verify && !ok) out << "verification FAILED\n";
  } else {
    out << name << " on " << g.carrier << "\n";
    out << "group " << e6r::detail::group_str(g.grading.group()) << "\n";
    out << "type " << type << "\n";
    out << "dim L_e " << g.grading.e_dim() << "\n";
    for (const auto& d : g.grading.support()) out << "  " << e6r::detail::tuple_str(d) << " " << g.grading.dim(d) << "\n";
    if (verify)
      out << "verify: direct sum " << direct_sum << ", closure " << closure << ", orthogonal " << orthogonal
          << ", bound " << bound << ", carrier signature " << sig << "\n";
  }
  return ok ? kOk : kFailed;
}

inline int cmd_killing(const std::string& model, bool json, std::ostream& out) {
  if (std::find(e6r::model_names().begin(), e6r::model_names().end(), model) == e6r::model_names().end())
    throw UsageError("unknown model: " + model);
  const auto m = e6r::build_model(model);
  const auto in = e6r::inertia(e6r::killing_matrix(m.lie));
  if (json)
    out << e6r::dump(Json{{"model", model},
                          {"n_plus", in.n_plus},
                          {"n_minus", in.n_minus},
                          {"n_zero", in.n_zero},
                          {"signature", in.signature()}});
  else
    out << model << ": n+ " << in.n_plus << ", n- " << in.n_minus << ", n0 " << in.n_zero << ", signature "
        << in.signature() << "\n";
  return kOk;
}

inline int cmd_constants(bool json, std::ostream& out) {
  const auto t = e6r::tits(e6r::hurwitz("O"), e6r::m3r());
  const auto pc = e6r::tits_constants(t, e6r::killing_matrix(t.lie));
  const auto l = e6r::derj_j0_model(e6r::h3(e6r::hurwitz("O"), {1, 1, 1}));
  const auto d = e6r::sp31_decomposition(l, e6r::killing_matrix(l.lie));
  using e6r::detail::opt_str;
  if (json)
    out << e6r::dump(Json{{"model", t.name},
                          {"k_over_tr_der_c", opt_str(pc.c_der_c)},
                          {"k_over_tr_der_j", opt_str(pc.c_der_j)},
                          {"alpha", opt_str(pc.alpha)},
                          {"delta", opt_str(d.delta)}});
  else
    out << "k/tr on Der(O) " << opt_str(pc.c_der_c) << "\n"
        << "k/tr on Der(Mat3(R)) " << opt_str(pc.c_der_j) << "\n"
        << "alpha (against n(a,b) t(x.y), t(1) = 1) " << opt_str(pc.alpha) << "\n"
        << "delta on sp(3,1) " << opt_str(d.delta) << "\n";
  return (pc.c_der_c && pc.c_der_j && pc.alpha && d.delta) ? kOk : kFailed;
}

inline int cmd_chevalley(const std::string& csv_path, bool json, std::ostream& out) {
  const auto cb = e6r::e6_chevalley();
  const auto rows = e6r::torus_table(cb);
  const auto sigs = e6r::inheriting_signatures(rows);
  const auto csv = e6r::torus_csv(rows);
  if (!csv_path.empty()) write_file(csv_path, csv);
  const long split = e6r::killing_signature(cb.lie);
  if (json) {
    Json r = Json::array();
    for (const auto& row : rows)
      r.push_back(Json{{"s", row.s},
                       {"dim_fix_t", row.fix_t},
                       {"dim_fix_omega_t", row.fix_omega_t},
                       {"signature_omega_t", row.sig_from_t},
                       {"signature_t", row.sig_from_omega_t}});
    out << e6r::dump(Json{{"roots", cb.roots.size()},
                          {"split_signature", split},
                          {"dim_fix_omega", e6r::fixed_subspace(e6r::omega(cb)).dim()},
                          {"inheriting_signatures", sigs},
                          {"torus", r}});
  } else if (csv_path.empty()) {
    out << csv;
  } else {
    out << "roots " << cb.roots.size() << ", split signature " << split << ", inheriting signatures "
        << e6r::detail::tuple_str(std::vector<long>(sigs.begin(), sigs.end())) << "\nwrote " << csv_path << "\n";
  }
  return kOk;
}

inline int cmd_verify_all(const std::vector<int>& only, const std::string& mutation, bool json, std::ostream& out) {
  e6r::AcceptanceOptions opts;
  opts.only = std::set<int>(only.begin(), only.end());
  if (mutation == "flip-gamma")
    opts.flip_gamma = true;
  else if (!mutation.empty() && mutation != "none")
    throw UsageError("unknown mutation: " + mutation);
  std::vector<e6r::CheckResult> rs;
  try {
    rs = e6r::run_acceptance(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : rs) all = all && r.passed();
  if (json) {
    out << e6r::dump(e6r::acceptance_json(rs, opts));
  } else {
    for (const auto& r : rs) {
      out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << "\n";
      for (const auto& i : r.items)
        if (!i.ok) out << "       " << i.name << ": expected " << i.expected << ", computed " << i.computed << "\n";
    }
  }
  return all ? kOk : kFailed;
}

inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact-arithmetic workbench for real forms and gradings of e6"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string model, out_path, grading, csv_path, mutation;
  bool verify = false, type_only = false;
  std::vector<int> only;

  auto* build = app.add_subcommand("build", "Build a model, check Jacobi, optionally write its JSON");
  build->add_option("model", model, "Model name")->required()->check(CLI::IsMember(e6r::model_names()));
  build->add_option("--out", out_path, "Write the algebra JSON to this path");
  build->add_flag("--json", json);

  auto* grad = app.add_subcommand("grading", "Build and inspect a named grading");
  grad->add_option("name", grading, "Grading name")->required()->check(CLI::IsMember(e6r::grading_names()));
  grad->add_flag("--verify", verify, "Check closure, direct sum, orthogonality and the signature bound");
  grad->add_flag("--type", type_only, "Print only the type vector");
  grad->add_option("--out", out_path, "Write the grading JSON to this path");
  grad->add_flag("--json", json);

  auto* kill = app.add_subcommand("killing", "Inertia of the Killing form of a model");
  kill->add_option("model", model, "Model name")->required()->check(CLI::IsMember(e6r::model_names()));
  kill->add_flag("--json", json);

  auto* cons = app.add_subcommand("constants", "Killing-form proportionality constants");
  cons->add_flag("--json", json);

  auto* chev = app.add_subcommand("chevalley", "Torus table of the split form as CSV");
  chev->add_option("--csv", csv_path, "Write the CSV to this path");
  chev->add_flag("--json", json);

  auto* all = app.add_subcommand("verify-all", "Run every acceptance criterion");
  all->add_option("--only", only, "Run only these criteria (1..14)")->delimiter(',');
  all->add_option("--mutation", mutation, "Deliberate convention change")->check(CLI::IsMember({"none", "flip-gamma"}));
  all->add_flag("--json", json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*build) return cmd_build(model, out_path, json, out);
    if (*grad) return cmd_grading(grading, verify, type_only, json, out_path, out);
    if (*kill) return cmd_killing(model, json, out);
    if (*cons) return cmd_constants(json, out);
    if (*chev) return cmd_chevalley(csv_path, json, out);
    if (*all) return cmd_verify_all(only, mutation, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace e6tool
