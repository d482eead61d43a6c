// Python bindings over the exact-arithmetic core.  Every entry point speaks
// JSON text, so the module needs no numpy and no wrapper classes: rationals
// are "p/q" strings and matrices / solution bundles use the same schema as
// the CLI's files.  Functions raise ValueError on malformed input.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "psmat/classify.hpp"
#include "psmat/construct.hpp"
#include "psmat/ncpoly.hpp"
#include "psmat/nilflag.hpp"
#include "psmat/quat.hpp"
#include "psmat/serialize.hpp"
#include "psmat/verify.hpp"

namespace py = pybind11;
using namespace psmat;

namespace {

// ---------- option helpers ----------

std::string sopt(const Json& o, const char* key, const char* dflt) {
  return o.contains(key) ? o.at(key).get<std::string>() : std::string(dflt);
}

int iopt(const Json& o, const char* key, int dflt) {
  return o.contains(key) ? o.at(key).get<int>() : dflt;
}

bool bopt(const Json& o, const char* key) {
  return o.contains(key) && o.at(key).get<bool>();
}

std::optional<Mat<Rat>> mopt(const Json& o, const char* key) {
  if (!o.contains(key)) return std::nullopt;
  return mat_rat_from_json(o.at(key));
}

// assignments: either "012,120,201" or [[0,1,2],[1,2,0],[2,0,1]]
std::vector<std::array<int, 3>> assign_opt(const Json& o, const char* key, const char* dflt) {
  Json spec = o.contains(key) ? o.at(key) : Json(std::string(dflt));
  std::vector<std::array<int, 3>> out;
  if (spec.is_string()) {
    std::stringstream ss(spec.get<std::string>());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.size() != 3)
        throw std::invalid_argument("assignment tokens are 3 digits, got '" + tok + "'");
      std::array<int, 3> p{};
      for (int i = 0; i < 3; ++i) {
        if (tok[i] < '0' || tok[i] > '2')
          throw std::invalid_argument("assignment digits must be 0, 1, or 2");
        p[static_cast<std::size_t>(i)] = tok[i] - '0';
      }
      out.push_back(p);
    }
    return out;
  }
  for (const Json& row : spec) {
    std::array<int, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) p[i] = row.at(i).get<int>();
    out.push_back(p);
  }
  return out;
}

// ---------- classify ----------

std::string classify_json(const std::string& alpha, const std::string& beta,
                          const std::string& gamma) {
  Params<Rat> p{rat_parse(alpha), rat_parse(beta), rat_parse(gamma)};
  Analysis<Rat> an = analyze(p);
  CubicRoots roots = cubic_roots(an.r);
  Json j;
  j["tag"] = case_tag_name(an.tag);
  j["delta"] = rat_str(an.delta);
  j["dis"] = rat_str(an.dis);
  j["sigma"] = rat_str(an.sigma);
  j["tau"] = rat_str(an.tau);
  Json r = Json::array();
  for (const Rat& c : an.r) r.push_back(rat_str(c));
  j["r"] = std::move(r);
  if (roots.exact) {
    Json ex = Json::array();
    for (const NFElem& x : roots.exact_roots) ex.push_back(nf_str(x));
    j["roots"]["exact"] = std::move(ex);
  } else {
    j["roots"]["exact"] = nullptr;
  }
  Json num = Json::array();
  for (const Cplx& z : roots.numeric) num.push_back(Json::array({z.real(), z.imag()}));
  j["roots"]["numeric"] = std::move(num);
  if (an.tag == CaseTag::MultipleRoot) {
    Normalization nm = normalize_multiple_root(p);
    j["normalization"] = Json{{"field", poly_str(nm.field->c)},
                              {"h", nf_str(nm.h)},
                              {"shift", nf_str(nm.shift)},
                              {"unity_twist", nm.unity_twist},
                              {"root_choice", nm.root_choice},
                              {"star", Json::array({nf_str(nm.star.alpha), nf_str(nm.star.beta),
                                                    nf_str(nm.star.gamma)})}};
  }
  return j.dump();
}

// ---------- construct ----------

std::string construct_json(const std::string& kase, const std::string& options) {
  Json o = options.empty() ? Json::object() : Json::parse(options);
  Json bundle;
  if (kase == "generic") {
    Params<Rat> p{rat_parse(sopt(o, "alpha", "0")), rat_parse(sopt(o, "beta", "0")),
                  rat_parse(sopt(o, "gamma", "0"))};
    auto assign = assign_opt(o, "assign", "012,120,201");
    auto conj = mopt(o, "conj");
    bundle = bopt(o, "numeric") ? triple_to_json(construct_generic_numeric(p, assign, conj))
                                : triple_to_json(construct_generic(p, assign, conj));
  } else if (kase == "t2") {
    Theorem2Shape sh;
    sh.phi = iopt(o, "phi", 0);
    sh.psi = iopt(o, "psi", 0);
    sh.theta = iopt(o, "theta", 0);
    sh.alphaN = mopt(o, "alphaN").value_or(mat_zeros<Rat>(sh.psi, sh.psi));
    sh.betaN = mopt(o, "betaN").value_or(mat_zeros<Rat>(sh.theta, sh.theta));
    sh.gammaN = mopt(o, "gammaN").value_or(mat_zeros<Rat>(sh.phi, sh.phi));
    bundle = triple_to_json(construct_theorem2(sh));
  } else if (kase == "t3") {
    Theorem3Shape sh;
    sh.m = iopt(o, "m", 0);
    sh.sigma = rat_parse(sopt(o, "sigma", "3"));
    sh.f_assign = assign_opt(o, "f_assign", "");
    sh.conjugator = mopt(o, "conj");
    bundle = bopt(o, "numeric") ? triple_to_json(construct_theorem3_numeric(sh))
                                : triple_to_json(construct_theorem3(sh));
  } else if (kase == "nil-n2") {
    bundle = triple_to_json(
        construct_nilpotent_n2(rat_parse(sopt(o, "x", "1")), rat_parse(sopt(o, "y", "1"))));
  } else if (kase == "nil-n3") {
    bundle = triple_to_json(
        construct_nilpotent_n3(rat_parse(sopt(o, "x", "1")), rat_parse(sopt(o, "y", "1"))));
  } else if (kase == "nil-n9") {
    bundle = triple_to_json(construct_nilpotent_n9());
  } else if (kase == "real-even") {
    int m = iopt(o, "m", 1);
    if (m <= 0) m = 1;
    if (bopt(o, "numeric")) {
      Params<Rat> p{rat_parse(sopt(o, "alpha", "0")), rat_parse(sopt(o, "beta", "0")),
                    rat_parse(sopt(o, "gamma", "0"))};
      bundle = triple_to_json(construct_real_even_params(p, m));
    } else {
      bundle = triple_to_json(construct_real_even(rat_parse(sopt(o, "u", "0")),
                                                  rat_parse(sopt(o, "v", "0")),
                                                  rat_parse(sopt(o, "w", "0")), m));
    }
  } else if (kase == "solve-u") {
    if (!o.contains("rhs") || !o.at("rhs").is_array() || o.at("rhs").size() != 3)
      throw std::invalid_argument("solve-u needs \"rhs\": [M, M, M]");
    std::array<Mat<double>, 3> rhs = {mat_zeros<double>(0, 0), mat_zeros<double>(0, 0),
                                      mat_zeros<double>(0, 0)};
    for (std::size_t k = 0; k < 3; ++k) {
      AnyMat m = mat_from_json(o.at("rhs")[k]);
      if (auto* d = std::get_if<Mat<double>>(&m))
        rhs[k] = *d;
      else if (auto* q = std::get_if<Mat<Rat>>(&m))
        rhs[k] = mat_double_of(*q);
      else
        throw std::invalid_argument("rhs matrices must be real (field kind R or Q)");
    }
    bundle = usolve_to_json(solve_in_U(rhs[0], rhs[1], rhs[2]));
  } else if (kase == "sigma-71") {
    auto conj = mopt(o, "conj");
    Rat u = rat_parse(sopt(o, "u", "0")), v = rat_parse(sopt(o, "v", "0")),
        w = rat_parse(sopt(o, "w", "0"));
    bundle = bopt(o, "numeric") ? quad_to_json(construct_sigma_generic_numeric(u, v, w, conj))
                                : quad_to_json(construct_sigma_generic(u, v, w, conj));
  } else if (kase == "sigma-72") {
    bundle = quad_to_json(construct_sigma_pattern2());
  } else if (kase == "sigma-nonnil") {
    bundle = quad_to_json(construct_sigma_nonnilpotent());
  } else if (kase == "tsys") {
    int m = iopt(o, "m", 1);
    if (m <= 0) m = 1;
    Mat<Rat> z = mopt(o, "z").value_or(mat_zeros<Rat>(m, m));
    Mat<Rat> q = mopt(o, "q").value_or(mat_zeros<Rat>(m, m));
    bundle = pair_to_json(construct_tsys(m, z, q));
  } else {
    throw std::invalid_argument("unknown construction case: " + kase);
  }
  return bundle.dump();
}

// ---------- verify ----------

template <class K>
Mat<K> context_as(const AnyMat& m);

template <>
Mat<Rat> context_as<Rat>(const AnyMat& m) {
  if (auto* q = std::get_if<Mat<Rat>>(&m)) return *q;
  throw std::invalid_argument("context matrices must be rational for a rational solution");
}

template <>
Mat<NFElem> context_as<NFElem>(const AnyMat& m) {
  if (auto* q = std::get_if<Mat<Rat>>(&m)) {
    Mat<NFElem> out = mat_zeros<NFElem>(q->nr, q->nc);
    for (std::size_t i = 0; i < q->e.size(); ++i) out.e[i] = NFElem(q->e[i]);
    return out;
  }
  if (auto* x = std::get_if<Mat<NFElem>>(&m)) return *x;
  throw std::invalid_argument("context matrices must be exact for an exact solution");
}

template <>
Mat<double> context_as<double>(const AnyMat& m) {
  if (auto* q = std::get_if<Mat<Rat>>(&m)) return mat_double_of(*q);
  if (auto* d = std::get_if<Mat<double>>(&m)) return *d;
  throw std::invalid_argument("context matrices must be real for a numeric solution");
}

template <>
Mat<Cplx> context_as<Cplx>(const AnyMat& m) {
  if (auto* q = std::get_if<Mat<Rat>>(&m)) {
    Mat<Cplx> out = mat_zeros<Cplx>(q->nr, q->nc);
    for (std::size_t i = 0; i < q->e.size(); ++i) out.e[i] = Cplx(rat_double(q->e[i]), 0);
    return out;
  }
  if (auto* d = std::get_if<Mat<double>>(&m)) {
    Mat<Cplx> out = mat_zeros<Cplx>(d->nr, d->nc);
    for (std::size_t i = 0; i < d->e.size(); ++i) out.e[i] = Cplx(d->e[i], 0);
    return out;
  }
  if (auto* z = std::get_if<Mat<Cplx>>(&m)) return *z;
  throw std::invalid_argument("context matrices must be numeric for a complex solution");
}

bool context_is_nf(const LoadedContext& lc) {
  auto is_nf = [](const std::optional<AnyMat>& m) {
    return m && std::holds_alternative<Mat<NFElem>>(*m);
  };
  return is_nf(lc.u) || is_nf(lc.v);
}

SolutionTriple<NFElem> lift_triple(const SolutionTriple<Rat>& t) {
  SolutionTriple<NFElem> out;
  auto lift = [](const Mat<Rat>& m) {
    Mat<NFElem> o = mat_zeros<NFElem>(m.nr, m.nc);
    for (std::size_t i = 0; i < m.e.size(); ++i) o.e[i] = NFElem(m.e[i]);
    return o;
  };
  out.a = lift(t.a);
  out.b = lift(t.b);
  out.c = lift(t.c);
  out.params = {NFElem(t.params.alpha), NFElem(t.params.beta), NFElem(t.params.gamma)};
  out.kind = t.kind;
  out.tag = t.tag;
  return out;
}

template <class K>
Json report_json(const Report<K>& rep) {
  Json lines = Json::array();
  for (const CheckLine<K>& line : rep.lines)
    lines.push_back(
        Json{{"name", line.name}, {"pass", line.pass}, {"residual_norm", line.residual_norm}});
  return Json{{"lines", std::move(lines)}, {"notes", rep.notes}, {"pass", rep.pass}};
}

template <class K>
Json verify_triple_json(const SolutionTriple<K>& t, const std::optional<std::string>& relations,
                        const LoadedContext& lc) {
  RelationContext<K> ctx;
  if (lc.u) ctx.u = context_as<K>(*lc.u);
  if (lc.v) ctx.v = context_as<K>(*lc.v);
  Report<K> rep;
  if (!relations || *relations == "SYS") {
    rep = check_system(t);
  } else {
    rep = check_relations(t, relation_set_of(*relations), ctx);
  }
  rep.notes.push_back(commutator_nilpotency(t).note);
  return report_json(rep);
}

std::string verify_json(const std::string& solution, const std::string& relations,
                        const std::string& context) {
  LoadedSolution ls = solution_from_json(Json::parse(solution));
  LoadedContext lc;
  if (!context.empty()) lc = context_from_json(Json::parse(context));
  std::optional<std::string> rel;
  if (!relations.empty()) rel = relations;

  Json j;
  if (ls.kind == "triple") {
    if (ls.rhs && (!rel || *rel == "SYS")) {
      const auto& t = std::get<SolutionTriple<double>>(*ls.triple);
      j = report_json(check_system_rhs(t.a, t.b, t.c, *ls.rhs));
    } else if (std::holds_alternative<SolutionTriple<Rat>>(*ls.triple) && context_is_nf(lc)) {
      j = verify_triple_json(lift_triple(std::get<SolutionTriple<Rat>>(*ls.triple)), rel, lc);
    } else {
      j = std::visit([&](const auto& t) { return verify_triple_json(t, rel, lc); }, *ls.triple);
    }
  } else if (ls.kind == "quad") {
    RelationSet rs = rel ? relation_set_of(*rel) : RelationSet::SIGMA;
    j = std::visit([&](const auto& q) { return report_json(check_relations(q, rs)); }, *ls.quad);
  } else {
    RelationSet rs = rel ? relation_set_of(*rel) : RelationSet::TSYS;
    j = report_json(check_relations(*ls.pair, rs));
  }
  return j.dump();
}

// ---------- flag ----------

Json columns_json(const Mat<Rat>& v) {
  Json cols = Json::array();
  for (int j = 0; j < v.nc; ++j) {
    Json col = Json::array();
    for (int i = 0; i < v.nr; ++i) col.push_back(rat_str(v.at(i, j)));
    cols.push_back(std::move(col));
  }
  return cols;
}

std::string flag_json(const std::string& solution) {
  LoadedSolution ls = solution_from_json(Json::parse(solution));
  if (ls.kind != "triple" || !ls.triple ||
      !std::holds_alternative<SolutionTriple<Rat>>(*ls.triple))
    throw std::invalid_argument("flag analysis needs an exact rational triple");
  const auto& t = std::get<SolutionTriple<Rat>>(*ls.triple);

  Flag f = semigroup_flag(t);
  AlgebraBasis alg = algebra_basis(t);
  AlgebraBasis cen = center_basis(t, alg);
  Json j;
  j["length"] = f.length();
  Json subs = Json::array();
  for (const auto& v : f.subspaces) subs.push_back(columns_json(v));
  j["subspaces"] = std::move(subs);
  j["signature"] = flag_signature(f);
  j["algebra"] = Json{{"dimension", alg.dimension}, {"words", alg.words}};
  j["center"] = Json{{"dimension", cen.dimension}, {"words", cen.words}};
  try {
    j["varpi"] = rat_str(varpi(t));
  } catch (const std::invalid_argument&) {
    // not in the canonical diag(J5, J3, 0) shape; varpi does not apply
  }
  j["triangularizing_basis"] = columns_json(triangularizing_basis(t));
  return j.dump();
}

// ---------- ncgb ----------

std::string ncgb_json(const std::string& system, int maxdeg,
                      const std::vector<std::string>& reduce) {
  PresetSystem ps = preset_system(system);
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, maxdeg);
  Json j;
  j["system"] = system;
  j["degree_bound"] = gb.degree_bound;
  j["complete_below_bound"] = gb.complete_below_bound;
  j["basis_size"] = gb.basis.size();
  Json counts = Json::object();
  for (const auto& [d, n] : gb.count_by_degree) counts[std::to_string(d)] = n;
  j["count_by_degree"] = std::move(counts);
  Json basis = Json::array();
  for (const NCPoly& p : gb.basis) basis.push_back(ps.ctx.str(p));
  j["basis"] = std::move(basis);

  Json reductions = Json::array();
  for (const std::string& text : reduce) {
    NCPoly p = ps.ctx.parse(text);
    NCPoly nf = normal_form(ps.ctx, p, gb.basis);
    bool zero = nf.zero();
    Json rj{{"input", text}, {"reduces_to_zero", zero}};
    if (!zero) rj["normal_form"] = ps.ctx.str(nf);
    // s3: the commutator itself stays nonzero while its u^2 products die;
    // report those memberships alongside any failed reduction
    if (!zero && system == "s3") {
      Json caveats = Json::array();
      Word uw = ps.ctx.word_of("u");
      struct Pad {
        Word left, right;
        const char* fmt;
      };
      const Pad pads[] = {{uw + uw, Word{}, "u^2*(%s)"},
                          {Word{}, uw + uw, "(%s)*u^2"},
                          {uw, uw, "u*(%s)*u"}};
      for (const Pad& pad : pads) {
        NCPoly prod = ps.ctx.mul_word(pad.left, p, pad.right);
        bool pz = normal_form(ps.ctx, prod, gb.basis).zero();
        std::string label(pad.fmt);
        label.replace(label.find("%s"), 2, text);
        caveats.push_back(Json{{"product", label}, {"reduces_to_zero", pz}});
      }
      rj["u2_multiples"] = std::move(caveats);
    }
    reductions.push_back(std::move(rj));
  }
  j["reductions"] = std::move(reductions);
  return j.dump();
}

// ---------- quat ----------

Json quat_components(const Quaternion& q) {
  return Json::array({q.x1, q.x2, q.x3, q.x4});
}

std::string quat_region_json(double v1, double v2) {
  RegionVerdict rv = region_verdict(v1, v2);
  Json j;
  j["delta"] = rv.delta_value;
  j["separator"] = rv.separator_value;
  j["exists_noncommuting"] = rv.exists_noncommuting;
  j["on_boundary"] = rv.on_boundary;
  try {
    j["v2_threshold"] = l_threshold(v1);
  } catch (const std::domain_error&) {
    // delta is positive for every v2 > 0 at this v1; no threshold to report
  }
  return j.dump();
}

std::string quat_solve_json(double v1, double v2, int attempts, std::uint64_t seed) {
  std::vector<NCSolution> sols = find_noncommuting(v1, v2, attempts, seed);
  Json arr = Json::array();
  for (const NCSolution& s : sols)
    arr.push_back(Json{{"a", quat_components(s.a)},
                       {"b", quat_components(s.b)},
                       {"c", quat_components(s.c)},
                       {"residual", s.residual}});
  return Json{{"v1", v1}, {"v2", v2}, {"solutions", std::move(arr)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_psmat, m) {
  m.doc() = "exact-arithmetic solver and verifier for three-matrix power-sum systems";

  m.def("classify", &classify_json, py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        "Classify parameters (rational strings); returns a JSON report with the "
        "case tag, delta, dis, the cubic r, and its roots.");
  m.def("construct", &construct_json, py::arg("case"), py::arg("options") = "{}",
        "Build a solution bundle (JSON text).  Cases: generic, t2, t3, nil-n2, "
        "nil-n3, nil-n9, real-even, solve-u, sigma-71, sigma-72, sigma-nonnil, tsys.");
  m.def("verify", &verify_json, py::arg("solution"), py::arg("relations") = "",
        py::arg("context") = "",
        "Check a solution bundle (JSON text) against the system or a named "
        "relation set; returns a JSON report with per-line pass flags.");
  m.def("flag_report", &flag_json, py::arg("solution"),
        "Semigroup flag, signature, algebra/center dimensions, varpi, and the "
        "triangularizing basis of an exact nilpotent triple (JSON text).");
  m.def("ncgb", &ncgb_json, py::arg("system"), py::arg("maxdeg"),
        py::arg("reduce") = std::vector<std::string>{},
        "Degree-truncated basis completion for a named preset system, plus "
        "normal-form reductions of the given polynomials (JSON text).");
  m.def("quat_region", &quat_region_json, py::arg("v1"), py::arg("v2"),
        "Existence verdict for noncommuting quaternion solutions at v1 + v2*i.");
  m.def("quat_solve", &quat_solve_json, py::arg("v1"), py::arg("v2"),
        py::arg("attempts") = 400, py::arg("seed") = 0,
        "Multistart search for noncommuting quaternion solutions; deterministic "
        "for a fixed seed.");
}
