// Command-line front end: classification, constructors, verification, flag
// analysis, the truncated Groebner engine, quaternion search, and cubic root
// reporting, with JSON file interchange.
//
// Exit codes: 0 success / all checks pass; 1 a verification or existence
// check failed; 2 malformed input or a violated precondition (every thrown
// error is reported as one line on stderr).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "psmat/ncpoly.hpp"
#include "psmat/nilflag.hpp"
#include "psmat/quat.hpp"
#include "psmat/serialize.hpp"
#include "psmat/verify.hpp"

namespace {

using namespace psmat;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_cplx(const Cplx& z) {
  return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         fmt_double(std::abs(z.imag())) + "i";
}

// ---------- shared option payloads ----------

struct ParamOpts {
  std::string alpha, beta, gamma;
  Params<Rat> parse() const {
    return {rat_parse(alpha), rat_parse(beta), rat_parse(gamma)};
  }
};

void add_param_opts(CLI::App* cmd, ParamOpts& p) {
  cmd->add_option("--alpha", p.alpha, "alpha as a rational literal p/q")->required();
  cmd->add_option("--beta", p.beta, "beta as a rational literal p/q")->required();
  cmd->add_option("--gamma", p.gamma, "gamma as a rational literal p/q")->required();
}

std::vector<std::array<int, 3>> parse_assign(const std::string& s) {
  std::vector<std::array<int, 3>> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 3) throw std::invalid_argument("each assignment must be three digits, got: " + tok);
    std::array<int, 3> a{};
    for (int i = 0; i < 3; ++i) {
      if (tok[static_cast<std::size_t>(i)] < '0' || tok[static_cast<std::size_t>(i)] > '2')
        throw std::invalid_argument("assignment digits must be 0, 1, or 2: " + tok);
      a[static_cast<std::size_t>(i)] = tok[static_cast<std::size_t>(i)] - '0';
    }
    out.push_back(a);
  }
  if (out.empty()) throw std::invalid_argument("empty assignment list");
  return out;
}

Mat<Rat> load_rat_matrix(const std::string& path) {
  return mat_rat_from_json(json_parse_file(path));
}

// ---------- report printing ----------

template <class K>
bool print_report(const Report<K>& rep, bool as_json, Json* out) {
  if (as_json) {
    Json lines = Json::array();
    for (const auto& l : rep.lines)
      lines.push_back(Json{{"name", l.name}, {"pass", l.pass}, {"residual_norm", l.residual_norm}});
    (*out)["lines"] = std::move(lines);
    (*out)["notes"] = rep.notes;
    (*out)["pass"] = rep.pass;
  } else {
    for (const auto& l : rep.lines)
      std::cout << (l.pass ? "  ok   " : "  FAIL ") << l.name
                << (l.pass ? "" : "  (max entry " + fmt_double(l.residual_norm) + ")") << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass;
}

// ---------- classify / roots ----------

Json analysis_json(const Analysis<Rat>& an) {
  Json j;
  j["tag"] = case_tag_name(an.tag);
  j["delta"] = rat_str(an.delta);
  j["dis"] = rat_str(an.dis);
  j["sigma"] = rat_str(an.sigma);
  j["tau"] = rat_str(an.tau);
  Json r = Json::array();
  for (const Rat& c : an.r) r.push_back(rat_str(c));
  j["r"] = std::move(r);
  return j;
}

std::string cubic_str(const std::array<Rat, 4>& r) {
  auto term = [](const Rat& c) {
    return c < 0 ? " - " + rat_str(rat_abs(c)) : " + " + rat_str(c);
  };
  return rat_str(r[0]) + "x^3" + term(r[1]) + "x^2" + term(r[2]) + "x" + term(r[3]);
}

int run_classify(const ParamOpts& po, bool as_json) {
  Analysis<Rat> an = analyze(po.parse());
  CubicRoots roots = cubic_roots(an.r);
  if (as_json) {
    Json j = analysis_json(an);
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
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "tag: " << case_tag_name(an.tag) << "\n";
    std::cout << "delta: " << rat_str(an.delta) << "\n";
    std::cout << "dis: " << rat_str(an.dis) << "\n";
    std::cout << "sigma: " << rat_str(an.sigma) << ", tau: " << rat_str(an.tau) << "\n";
    std::cout << "r(x) = " << cubic_str(an.r) << "\n";
    if (roots.exact) {
      std::cout << "exact roots:";
      for (const NFElem& x : roots.exact_roots) std::cout << " " << nf_str(x);
      std::cout << "\n";
    } else {
      std::cout << "exact roots: (cubic does not split over Q or a quadratic extension)\n";
    }
    std::cout << "numeric roots:";
    for (const Cplx& z : roots.numeric) std::cout << " " << fmt_cplx(z);
    std::cout << "\n";
  }
  return 0;
}

int run_roots(const ParamOpts& po, int root_choice, bool as_json) {
  Params<Rat> p = po.parse();
  Analysis<Rat> an = analyze(p);
  CubicRoots roots = cubic_roots(an.r);
  Json j;
  if (as_json) {
    j = analysis_json(an);
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
  } else {
    std::cout << "r(x) = " << cubic_str(an.r) << "  [" << case_tag_name(an.tag) << "]\n";
    if (roots.exact) {
      std::cout << "exact roots:";
      for (const NFElem& x : roots.exact_roots) std::cout << " " << nf_str(x);
      std::cout << "\n";
    } else {
      std::cout << "exact roots: (cubic does not split over Q or a quadratic extension)\n";
    }
    std::cout << "numeric roots:";
    for (const Cplx& z : roots.numeric) std::cout << " " << fmt_cplx(z);
    std::cout << "\n";
  }
  if (an.tag == CaseTag::MultipleRoot) {
    Normalization nm = normalize_multiple_root(p, root_choice);
    if (as_json) {
      j["normalization"] = Json{{"field", poly_str(nm.field->c)},
                                {"h", nf_str(nm.h)},
                                {"shift", nf_str(nm.shift)},
                                {"unity_twist", nm.unity_twist},
                                {"root_choice", nm.root_choice},
                                {"star", Json::array({nf_str(nm.star.alpha), nf_str(nm.star.beta),
                                                      nf_str(nm.star.gamma)})}};
    } else {
      std::cout << "normalization to the star form (0, s, 1), field " << poly_str(nm.field->c)
                << " = 0:\n";
      std::cout << "  h = " << nf_str(nm.h) << ", shift = " << nf_str(nm.shift)
                << ", unity twist = " << nm.unity_twist << ", root choice = " << nm.root_choice
                << "\n";
    }
  }
  if (as_json) std::cout << j.dump(1) << "\n";
  return 0;
}

// ---------- construct ----------

struct ConstructOpts {
  std::string kase;
  std::string alpha = "0", beta = "0", gamma = "0";
  std::string assign = "012,120,201";
  std::string f_assign;
  std::string conj_file, out_file, rhs_file;
  std::string x = "1", y = "1";
  std::string u = "0", v = "0", w = "0", sigma = "3";
  std::string alphaN_file, betaN_file, gammaN_file;
  std::string z_file, q_file;
  int phi = 0, psi = 0, theta = 0;
  int m = 0;
  bool numeric = false;
  bool as_json = false;
};

std::optional<Mat<Rat>> maybe_matrix(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load_rat_matrix(path);
}

Json build_bundle(const ConstructOpts& o) {
  const std::string& c = o.kase;
  if (c == "generic") {
    Params<Rat> p{rat_parse(o.alpha), rat_parse(o.beta), rat_parse(o.gamma)};
    auto assign = parse_assign(o.assign);
    auto conj = maybe_matrix(o.conj_file);
    if (o.numeric) return triple_to_json(construct_generic_numeric(p, assign, conj));
    return triple_to_json(construct_generic(p, assign, conj));
  }
  if (c == "t2") {
    Theorem2Shape sh;
    sh.phi = o.phi;
    sh.psi = o.psi;
    sh.theta = o.theta;
    sh.alphaN = o.alphaN_file.empty() ? mat_zeros<Rat>(sh.psi, sh.psi) : load_rat_matrix(o.alphaN_file);
    sh.betaN = o.betaN_file.empty() ? mat_zeros<Rat>(sh.theta, sh.theta) : load_rat_matrix(o.betaN_file);
    sh.gammaN = o.gammaN_file.empty() ? mat_zeros<Rat>(sh.phi, sh.phi) : load_rat_matrix(o.gammaN_file);
    return triple_to_json(construct_theorem2(sh));
  }
  if (c == "t3") {
    Theorem3Shape sh;
    sh.m = o.m;
    sh.sigma = rat_parse(o.sigma);
    if (!o.f_assign.empty()) sh.f_assign = parse_assign(o.f_assign);
    sh.conjugator = maybe_matrix(o.conj_file);
    if (o.numeric) return triple_to_json(construct_theorem3_numeric(sh));
    return triple_to_json(construct_theorem3(sh));
  }
  if (c == "nil-n2") return triple_to_json(construct_nilpotent_n2(rat_parse(o.x), rat_parse(o.y)));
  if (c == "nil-n3") return triple_to_json(construct_nilpotent_n3(rat_parse(o.x), rat_parse(o.y)));
  if (c == "nil-n9") return triple_to_json(construct_nilpotent_n9());
  if (c == "real-even") {
    if (o.numeric) {
      Params<Rat> p{rat_parse(o.alpha), rat_parse(o.beta), rat_parse(o.gamma)};
      return triple_to_json(construct_real_even_params(p, o.m > 0 ? o.m : 1));
    }
    return triple_to_json(
        construct_real_even(rat_parse(o.u), rat_parse(o.v), rat_parse(o.w), o.m > 0 ? o.m : 1));
  }
  if (c == "solve-u") {
    if (o.rhs_file.empty()) throw std::invalid_argument("solve-u needs --rhs FILE");
    Json rj = json_parse_file(o.rhs_file);
    const Json& arr = rj.is_object() && rj.contains("rhs") ? rj.at("rhs") : rj;
    if (!arr.is_array() || arr.size() != 3)
      throw std::invalid_argument("--rhs must hold an array of three matrices");
    std::array<Mat<double>, 3> rhs = {mat_zeros<double>(0, 0), mat_zeros<double>(0, 0),
                                      mat_zeros<double>(0, 0)};
    for (int k = 0; k < 3; ++k) {
      AnyMat m = mat_from_json(arr[static_cast<std::size_t>(k)]);
      if (auto* d = std::get_if<Mat<double>>(&m)) rhs[static_cast<std::size_t>(k)] = *d;
      else if (auto* q = std::get_if<Mat<Rat>>(&m)) rhs[static_cast<std::size_t>(k)] = mat_double_of(*q);
      else throw std::invalid_argument("rhs matrices must be real (field kind R or Q)");
    }
    return usolve_to_json(solve_in_U(rhs[0], rhs[1], rhs[2]));
  }
  if (c == "sigma-71") {
    auto conj = maybe_matrix(o.conj_file);
    if (o.numeric)
      return quad_to_json(construct_sigma_generic_numeric(rat_parse(o.u), rat_parse(o.v),
                                                          rat_parse(o.w), conj));
    return quad_to_json(construct_sigma_generic(rat_parse(o.u), rat_parse(o.v), rat_parse(o.w), conj));
  }
  if (c == "sigma-72") return quad_to_json(construct_sigma_pattern2());
  if (c == "sigma-nonnil") return quad_to_json(construct_sigma_nonnilpotent());
  if (c == "tsys") {
    int m = o.m > 0 ? o.m : 1;
    Mat<Rat> z = o.z_file.empty() ? mat_zeros<Rat>(m, m) : load_rat_matrix(o.z_file);
    Mat<Rat> q = o.q_file.empty() ? mat_zeros<Rat>(m, m) : load_rat_matrix(o.q_file);
    return pair_to_json(construct_tsys(m, z, q));
  }
  throw std::invalid_argument("unknown construction case: " + c);
}

int run_construct(const ConstructOpts& o) {
  Json j = build_bundle(o);
  if (!o.out_file.empty()) {
    json_write_file(o.out_file, j);
    if (!o.as_json) {
      std::string what = j.at("kind").get<std::string>();
      if (j.contains("constructor")) what += " (" + j.at("constructor").get<std::string>() + ")";
      std::cout << "wrote " << what << " to " << o.out_file << "\n";
    }
  }
  if (o.as_json || o.out_file.empty()) std::cout << j.dump(1) << "\n";
  return 0;
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
bool verify_triple(const SolutionTriple<K>& t, const std::optional<std::string>& relations,
                   const LoadedContext& lc, bool as_json, Json* jout) {
  RelationContext<K> ctx;
  if (lc.u) ctx.u = context_as<K>(*lc.u);
  if (lc.v) ctx.v = context_as<K>(*lc.v);
  Report<K> rep;
  if (!relations || *relations == "SYS") {
    rep = check_system(t);
  } else {
    rep = check_relations(t, relation_set_of(*relations), ctx);
  }
  auto verdict = commutator_nilpotency(t);
  rep.notes.push_back(verdict.note);
  return print_report(rep, as_json, jout);
}

int run_verify(const std::string& in_file, std::string relations, const std::string& ctx_file,
               bool as_json) {
  LoadedSolution ls = solution_from_json(json_parse_file(in_file));
  LoadedContext lc;
  if (!ctx_file.empty()) lc = context_from_json(json_parse_file(ctx_file));
  std::optional<std::string> rel;
  if (!relations.empty()) rel = relations;

  Json j;
  bool pass = false;
  if (ls.kind == "triple") {
    if (ls.rhs && (!rel || *rel == "SYS")) {
      const auto& t = std::get<SolutionTriple<double>>(*ls.triple);
      Report<double> rep = check_system_rhs(t.a, t.b, t.c, *ls.rhs);
      pass = print_report(rep, as_json, &j);
    } else if (std::holds_alternative<SolutionTriple<Rat>>(*ls.triple) && context_is_nf(lc)) {
      pass = verify_triple(lift_triple(std::get<SolutionTriple<Rat>>(*ls.triple)), rel, lc,
                           as_json, &j);
    } else {
      pass = std::visit([&](const auto& t) { return verify_triple(t, rel, lc, as_json, &j); },
                        *ls.triple);
    }
  } else if (ls.kind == "quad") {
    RelationSet rs = rel ? relation_set_of(*rel) : RelationSet::SIGMA;
    pass = std::visit(
        [&](const auto& q) { return print_report(check_relations(q, rs), as_json, &j); },
        *ls.quad);
  } else {
    RelationSet rs = rel ? relation_set_of(*rel) : RelationSet::TSYS;
    pass = print_report(check_relations(*ls.pair, rs), as_json, &j);
  }
  if (as_json) std::cout << j.dump(1) << "\n";
  return pass ? 0 : 1;
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

std::string column_str(const Mat<Rat>& v, int j) {
  std::string s = "[";
  for (int i = 0; i < v.nr; ++i) s += (i ? " " : "") + rat_str(v.at(i, j));
  return s + "]";
}

int run_flag(const std::string& in_file, bool as_json) {
  LoadedSolution ls = solution_from_json(json_parse_file(in_file));
  if (ls.kind != "triple" || !ls.triple ||
      !std::holds_alternative<SolutionTriple<Rat>>(*ls.triple))
    throw std::invalid_argument("flag analysis needs an exact rational triple");
  const auto& t = std::get<SolutionTriple<Rat>>(*ls.triple);

  Flag f = semigroup_flag(t);
  auto sig = flag_signature(f);
  AlgebraBasis alg = algebra_basis(t);
  AlgebraBasis cen = center_basis(t, alg);
  std::optional<Rat> w;
  try {
    w = varpi(t);
  } catch (const std::invalid_argument&) {
    // not in the canonical diag(J5, J3, 0) shape; varpi does not apply
  }
  Mat<Rat> p = triangularizing_basis(t);

  if (as_json) {
    Json j;
    j["length"] = f.length();
    Json subs = Json::array();
    for (const auto& v : f.subspaces) subs.push_back(columns_json(v));
    j["subspaces"] = std::move(subs);
    j["signature"] = sig;
    j["algebra"] = Json{{"dimension", alg.dimension}, {"words", alg.words}};
    j["center"] = Json{{"dimension", cen.dimension}, {"words", cen.words}};
    if (w) j["varpi"] = rat_str(*w);
    j["triangularizing_basis"] = columns_json(p);
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "nilpotency class: " << f.length() << "\n";
    for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
      const auto& v = f.subspaces[i];
      std::cout << "V" << i << ": dim " << v.nc;
      for (int c = 0; c < v.nc; ++c) std::cout << " " << column_str(v, c);
      std::cout << "\n";
    }
    std::cout << "signature:";
    for (int s : sig) std::cout << " " << s;
    std::cout << "\n";
    std::cout << "algebra dimension " << alg.dimension << ":";
    for (const auto& word : alg.words) std::cout << " " << word;
    std::cout << "\n";
    std::cout << "center dimension " << cen.dimension << ":";
    for (const auto& word : cen.words) std::cout << " " << word;
    std::cout << "\n";
    if (w) std::cout << "varpi = " << rat_str(*w) << "\n";
    std::cout << "triangularizing basis (columns):";
    for (int c = 0; c < p.nc; ++c) std::cout << " " << column_str(p, c);
    std::cout << "\n";
  }
  return 0;
}

// ---------- ncgb ----------

int run_ncgb(const std::string& system, int maxdeg, const std::string& reduce_file,
             bool as_json) {
  PresetSystem ps = preset_system(system);
  GBResult gb = truncated_buchberger(ps.ctx, ps.generators, maxdeg);

  Json j;
  bool all_zero = true;
  std::vector<std::string> lines;
  if (!reduce_file.empty()) {
    std::ifstream in(reduce_file);
    if (!in) throw std::invalid_argument("cannot open " + reduce_file);
    std::string line;
    while (std::getline(in, line)) {
      std::string trimmed;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
      if (trimmed.empty() || trimmed[0] == '#') continue;
      lines.push_back(trimmed);
    }
  }

  if (as_json) {
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
  } else {
    std::cout << "system " << system << ", degree bound " << gb.degree_bound
              << (gb.complete_below_bound ? " (complete below bound)" : "") << "\n";
    std::cout << "basis elements: " << gb.basis.size() << "\n";
    for (const auto& [d, n] : gb.count_by_degree)
      std::cout << "  degree " << d << ": " << n << "\n";
  }

  Json reductions = Json::array();
  for (const std::string& text : lines) {
    NCPoly p = ps.ctx.parse(text);
    NCPoly nf = normal_form(ps.ctx, p, gb.basis);
    bool zero = nf.zero();
    all_zero = all_zero && zero;
    Json rj{{"input", text}, {"reduces_to_zero", zero}};
    if (!as_json) {
      if (zero) {
        std::cout << text << " reduces to 0\n";
      } else {
        std::cout << text << " does not reduce to 0; normal form: " << ps.ctx.str(nf) << "\n";
      }
    } else if (!zero) {
      rj["normal_form"] = ps.ctx.str(nf);
    }
    // For the s3 preset the commutator itself stays nonzero while its
    // products with u^2 die; report those memberships so a failed reduction
    // is not mistaken for an engine defect.
    if (!zero && system == "s3") {
      Json caveats = Json::array();
      Word uw = ps.ctx.word_of("u");
      for (const char* shape : {"left", "right", "split"}) {
        NCPoly prod;
        std::string label;
        if (std::string(shape) == "left") {
          prod = ps.ctx.mul_word(Word{uw + uw}, p, Word{});
          label = "u^2*(" + text + ")";
        } else if (std::string(shape) == "right") {
          prod = ps.ctx.mul_word(Word{}, p, Word{uw + uw});
          label = "(" + text + ")*u^2";
        } else {
          prod = ps.ctx.mul_word(Word{uw}, p, Word{uw});
          label = "u*(" + text + ")*u";
        }
        bool pz = normal_form(ps.ctx, prod, gb.basis).zero();
        if (!as_json)
          std::cout << "  note: " << label << (pz ? " reduces to 0" : " does not reduce to 0")
                    << "\n";
        caveats.push_back(Json{{"product", label}, {"reduces_to_zero", pz}});
      }
      rj["u2_multiples"] = std::move(caveats);
    }
    reductions.push_back(std::move(rj));
  }
  if (as_json) {
    j["reductions"] = std::move(reductions);
    std::cout << j.dump(1) << "\n";
  }
  return all_zero ? 0 : 1;
}

// ---------- quat ----------

Json quat_json(const Quaternion& q) {
  return Json::array({q.x1, q.x2, q.x3, q.x4});
}

std::string quat_str_(const Quaternion& q) {
  return "(" + fmt_double(q.x1) + ", " + fmt_double(q.x2) + ", " + fmt_double(q.x3) + ", " +
         fmt_double(q.x4) + ")";
}

int run_quat(double v1, double v2, bool solve, int attempts, std::uint64_t seed, bool as_json) {
  RegionVerdict rv = region_verdict(v1, v2);
  std::optional<double> threshold;
  try {
    threshold = l_threshold(v1);
  } catch (const std::domain_error&) {
    // delta is positive for every v2 > 0 at this v1; no threshold to report
  }
  std::vector<NCSolution> sols;
  if (solve) sols = find_noncommuting(v1, v2, attempts, seed);

  if (as_json) {
    Json j;
    j["delta"] = rv.delta_value;
    j["separator"] = rv.separator_value;
    j["exists_noncommuting"] = rv.exists_noncommuting;
    j["on_boundary"] = rv.on_boundary;
    if (threshold) j["v2_threshold"] = *threshold;
    if (solve) {
      Json arr = Json::array();
      for (const auto& s : sols)
        arr.push_back(Json{{"a", quat_json(s.a)},
                           {"b", quat_json(s.b)},
                           {"c", quat_json(s.c)},
                           {"residual", s.residual}});
      j["solutions"] = std::move(arr);
    }
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "delta = " << fmt_double(rv.delta_value)
              << ", separator = " << fmt_double(rv.separator_value) << "\n";
    std::cout << "exists noncommuting: " << (rv.exists_noncommuting ? "yes" : "no")
              << (rv.on_boundary ? " (on boundary: verdict not reliable)" : "") << "\n";
    if (threshold)
      std::cout << "v2 threshold (delta = 0 at this v1): " << fmt_double(*threshold) << "\n";
    if (solve) {
      std::cout << "found " << sols.size() << " noncommuting solution(s)\n";
      for (const auto& s : sols)
        std::cout << "  a=" << quat_str_(s.a) << " b=" << quat_str_(s.b)
                  << " residual=" << fmt_double(s.residual) << "\n";
      if (!rv.exists_noncommuting && !sols.empty())
        std::cout << "contradiction: solutions found outside the existence region\n";
    }
  }
  bool ok = rv.exists_noncommuting && (!solve || !sols.empty());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and verifier for matrix power-sum systems"};
  app.require_subcommand(1);

  ParamOpts classify_p;
  bool classify_json = false;
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify parameters (alpha, beta, gamma)");
  add_param_opts(classify_cmd, classify_p);
  classify_cmd->add_flag("--json", classify_json, "emit JSON");

  ParamOpts roots_p;
  bool roots_json = false;
  int root_choice = -1;
  CLI::App* roots_cmd = app.add_subcommand("roots", "cubic roots and repeated-root normalization");
  add_param_opts(roots_cmd, roots_p);
  roots_cmd->add_option("--root-choice", root_choice, "embedding index for the normalization");
  roots_cmd->add_flag("--json", roots_json, "emit JSON");

  ConstructOpts co;
  CLI::App* construct_cmd = app.add_subcommand("construct", "emit a canonical solution bundle");
  construct_cmd
      ->add_option("--case", co.kase,
                   "generic|t2|t3|nil-n2|nil-n3|nil-n9|real-even|solve-u|sigma-71|sigma-72|"
                   "sigma-nonnil|tsys")
      ->required();
  construct_cmd->add_option("--alpha", co.alpha, "alpha (rational literal)");
  construct_cmd->add_option("--beta", co.beta, "beta (rational literal)");
  construct_cmd->add_option("--gamma", co.gamma, "gamma (rational literal)");
  construct_cmd->add_option("--assign", co.assign, "root assignment per coordinate, e.g. 012,120");
  construct_cmd->add_option("--f-assign", co.f_assign, "F-part eigenvalue assignment, e.g. 012,120");
  construct_cmd->add_option("--conj", co.conj_file, "conjugator matrix JSON file");
  construct_cmd->add_option("--x", co.x, "first nilpotent family parameter");
  construct_cmd->add_option("--y", co.y, "second nilpotent family parameter");
  construct_cmd->add_option("--u", co.u, "real root / first quadratic coefficient");
  construct_cmd->add_option("--v", co.v, "complex-pair real part / second coefficient");
  construct_cmd->add_option("--w", co.w, "complex-pair imaginary part / third coefficient");
  construct_cmd->add_option("--sigma", co.sigma, "sigma for the E(+)F family");
  construct_cmd->add_option("--phi", co.phi, "phi block size");
  construct_cmd->add_option("--psi", co.psi, "psi block size");
  construct_cmd->add_option("--theta", co.theta, "theta block size");
  construct_cmd->add_option("--m", co.m, "block-count parameter (E dimension / copies / half-size)");
  construct_cmd->add_option("--alphaN", co.alphaN_file, "psi x psi square-zero block JSON");
  construct_cmd->add_option("--betaN", co.betaN_file, "theta x theta square-zero block JSON");
  construct_cmd->add_option("--gammaN", co.gammaN_file, "phi x phi square-zero block JSON");
  construct_cmd->add_option("--z", co.z_file, "z block JSON for the pair system");
  construct_cmd->add_option("--q", co.q_file, "q block JSON for the pair system");
  construct_cmd->add_option("--rhs", co.rhs_file, "right-hand sides JSON (three matrices)");
  construct_cmd->add_option("--out", co.out_file, "output bundle path");
  construct_cmd->add_flag("--numeric", co.numeric, "numeric (double) variant");
  construct_cmd->add_flag("--json", co.as_json, "print the bundle JSON to stdout");

  std::string verify_in, verify_rel, verify_ctx;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution bundle against a relation set");
  verify_cmd->add_option("--in", verify_in, "solution bundle JSON")->required();
  verify_cmd->add_option("--relations", verify_rel,
                         "SYS|R21|R41|R51|THM4_DEG4|THM4_DEG5|SIGMA|PATTERN_721|TSYS");
  verify_cmd->add_option("--context", verify_ctx, "context JSON with matrices u (and v)");
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  std::string flag_in;
  bool flag_json = false;
  CLI::App* flag_cmd = app.add_subcommand("flag", "semigroup flag analysis of a nilpotent triple");
  flag_cmd->add_option("--in", flag_in, "solution bundle JSON")->required();
  flag_cmd->add_flag("--json", flag_json, "emit JSON");

  std::string ncgb_system, ncgb_reduce;
  int ncgb_maxdeg = 0;
  bool ncgb_json = false;
  CLI::App* ncgb_cmd = app.add_subcommand("ncgb", "truncated Groebner basis of a preset system");
  ncgb_cmd->add_option("--system", ncgb_system, "s4|s2|s3|s21|remark121")->required();
  ncgb_cmd->add_option("--maxdeg", ncgb_maxdeg, "degree bound")->required();
  ncgb_cmd->add_option("--reduce", ncgb_reduce, "file of polynomials to reduce, one per line");
  ncgb_cmd->add_flag("--json", ncgb_json, "emit JSON");

  double qv1 = 0, qv2 = 0;
  bool quat_solve = false, quat_json_flag = false;
  int quat_attempts = 400;
  std::uint64_t quat_seed = 0;
  CLI::App* quat_cmd = app.add_subcommand("quat", "quaternion existence region and solution search");
  quat_cmd->add_option("--v1", qv1, "real part of v")->required();
  quat_cmd->add_option("--v2", qv2, "imaginary part of v (positive)")->required();
  quat_cmd->add_flag("--solve", quat_solve, "run the multistart Newton search");
  quat_cmd->add_option("--attempts", quat_attempts, "number of random starts");
  quat_cmd->add_option("--seed", quat_seed, "random seed");
  quat_cmd->add_flag("--json", quat_json_flag, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_p, classify_json);
    if (roots_cmd->parsed()) return run_roots(roots_p, root_choice, roots_json);
    if (construct_cmd->parsed()) return run_construct(co);
    if (verify_cmd->parsed()) return run_verify(verify_in, verify_rel, verify_ctx, verify_json);
    if (flag_cmd->parsed()) return run_flag(flag_in, flag_json);
    if (ncgb_cmd->parsed()) return run_ncgb(ncgb_system, ncgb_maxdeg, ncgb_reduce, ncgb_json);
    if (quat_cmd->parsed()) return run_quat(qv1, qv2, quat_solve, quat_attempts, quat_seed, quat_json_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
