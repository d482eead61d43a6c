#include "psmat/serialize.hpp"

#include <fstream>
#include <functional>
#include <stdexcept>

namespace psmat {

namespace {

void require_key(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + " is missing the \"" + key + "\" key");
}

int get_dim(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw std::invalid_argument(std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<int>();
}

Rat parse_rat_elem(const Json& e) {
  if (!e.is_string())
    throw std::invalid_argument("a rational entry must be a string like \"p/q\"");
  return rat_parse(e.get<std::string>());
}

double parse_real_elem(const Json& e) {
  if (!e.is_number()) throw std::invalid_argument("a real entry must be a JSON number");
  return e.get<double>();
}

Cplx parse_cplx_elem(const Json& e) {
  if (e.is_number()) return Cplx(e.get<double>(), 0);
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw std::invalid_argument("a complex entry must be a [re, im] pair");
  return Cplx(e[0].get<double>(), e[1].get<double>());
}

std::vector<Rat> parse_coeff_list(const Json& e, const char* what) {
  if (!e.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Rat> c;
  c.reserve(e.size());
  for (const Json& x : e) c.push_back(parse_rat_elem(x));
  return c;
}

NFElem parse_nf_elem(const Json& e, const Field& f) {
  std::vector<Rat> c = parse_coeff_list(e, "a number-field entry");
  if (static_cast<int>(c.size()) > f->degree())
    throw std::invalid_argument("a number-field entry has more coefficients than the field degree");
  return NFElem(f, std::move(c));
}

Json field_json(const char* kind) { return Json{{"kind", kind}}; }

// The shared field of a number-field matrix; null when every entry is
// rational.  Entries carrying distinct minimal polynomials are rejected.
Field common_entry_field(const Mat<NFElem>& m) {
  Field f;
  for (const NFElem& x : m.e) {
    if (!x.f) continue;
    if (!f) f = x.f;
    else if (f != x.f && f->c != x.f->c)
      throw std::invalid_argument("matrix entries lie in different number fields");
  }
  return f;
}

Json nf_coeffs_json(const NFElem& x, int d) {
  Json a = Json::array();
  for (int i = 0; i < d; ++i) {
    Rat ci = i < static_cast<int>(x.c.size()) ? x.c[static_cast<std::size_t>(i)] : Rat(0);
    a.push_back(rat_str(ci));
  }
  return a;
}

Json rows_json(int nr, int nc, const std::function<Json(int, int)>& cell) {
  Json rows = Json::array();
  for (int i = 0; i < nr; ++i) {
    Json row = Json::array();
    for (int j = 0; j < nc; ++j) row.push_back(cell(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json mat_shell(Json field, int nr, int nc, Json entries) {
  return Json{{"field", std::move(field)},
              {"nrows", nr},
              {"ncols", nc},
              {"entries", std::move(entries)}};
}

std::string field_kind_of(const Json& m) {
  require_key(m, "field", "a matrix");
  const Json& f = m.at("field");
  require_key(f, "kind", "a field descriptor");
  if (!f.at("kind").is_string())
    throw std::invalid_argument("the field \"kind\" must be a string");
  return f.at("kind").get<std::string>();
}

// Validates shape and iterates entries.
template <class K, class ParseEntry>
Mat<K> decode_matrix(const Json& j, ParseEntry parse) {
  require_key(j, "nrows", "a matrix");
  require_key(j, "ncols", "a matrix");
  require_key(j, "entries", "a matrix");
  int nr = get_dim(j, "nrows"), nc = get_dim(j, "ncols");
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != nr)
    throw std::invalid_argument("\"entries\" must be an array of nrows rows");
  Mat<K> m = mat_zeros<K>(nr, nc);
  for (int i = 0; i < nr; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != nc)
      throw std::invalid_argument("each matrix row must be an array of ncols entries");
    for (int c = 0; c < nc; ++c) m.at(i, c) = parse(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Field field_from_json(const Json& fj) {
  require_key(fj, "min_poly", "an NF field descriptor");
  std::vector<Rat> mp = parse_coeff_list(fj.at("min_poly"), "\"min_poly\"");
  return make_field(mp);
}

}  // namespace

Json mat_to_json(const Mat<Rat>& m) {
  return mat_shell(field_json("Q"), m.nr, m.nc,
                   rows_json(m.nr, m.nc, [&](int i, int j) { return Json(rat_str(m.at(i, j))); }));
}

Json mat_to_json(const Mat<NFElem>& m) {
  Field f = common_entry_field(m);
  if (!f) {
    Mat<Rat> q = mat_zeros<Rat>(m.nr, m.nc);
    for (std::size_t i = 0; i < m.e.size(); ++i) q.e[i] = m.e[i].c[0];
    return mat_to_json(q);
  }
  int d = f->degree();
  Json fj = field_json("NF");
  Json mp = Json::array();
  for (const Rat& c : f->c) mp.push_back(rat_str(c));
  fj["min_poly"] = std::move(mp);
  return mat_shell(std::move(fj), m.nr, m.nc, rows_json(m.nr, m.nc, [&](int i, int j) {
                     return nf_coeffs_json(m.at(i, j), d);
                   }));
}

Json mat_to_json(const Mat<double>& m) {
  return mat_shell(field_json("R"), m.nr, m.nc,
                   rows_json(m.nr, m.nc, [&](int i, int j) { return Json(m.at(i, j)); }));
}

Json mat_to_json(const Mat<Cplx>& m) {
  return mat_shell(field_json("C"), m.nr, m.nc, rows_json(m.nr, m.nc, [&](int i, int j) {
                     return Json::array({m.at(i, j).real(), m.at(i, j).imag()});
                   }));
}

AnyMat mat_from_json(const Json& j) {
  std::string kind = field_kind_of(j);
  if (kind == "Q") return decode_matrix<Rat>(j, parse_rat_elem);
  if (kind == "NF") {
    Field f = field_from_json(j.at("field"));
    return decode_matrix<NFElem>(j, [&](const Json& e) { return parse_nf_elem(e, f); });
  }
  if (kind == "R") return decode_matrix<double>(j, parse_real_elem);
  if (kind == "C") return decode_matrix<Cplx>(j, parse_cplx_elem);
  throw std::invalid_argument("unknown field kind: " + kind);
}

Mat<Rat> mat_rat_from_json(const Json& j) {
  AnyMat m = mat_from_json(j);
  if (auto* q = std::get_if<Mat<Rat>>(&m)) return std::move(*q);
  throw std::invalid_argument("expected a rational matrix (field kind \"Q\")");
}

namespace {

Json scalar_json(const Rat& q) { return Json(rat_str(q)); }
Json scalar_json(double x) { return Json(x); }
Json scalar_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }
Json scalar_json(const NFElem& x) {
  if (!x.f) return Json(rat_str(x.c[0]));
  return nf_coeffs_json(x, x.f->degree());
}

template <class K>
Json triple_json_impl(const SolutionTriple<K>& t) {
  Json j;
  j["kind"] = "triple";
  if (!t.kind.empty()) j["constructor"] = t.kind;
  if (t.tag) j["case"] = case_tag_name(*t.tag);
  j["params"] = Json{{"alpha", scalar_json(t.params.alpha)},
                     {"beta", scalar_json(t.params.beta)},
                     {"gamma", scalar_json(t.params.gamma)}};
  j["matrices"] =
      Json{{"a", mat_to_json(t.a)}, {"b", mat_to_json(t.b)}, {"c", mat_to_json(t.c)}};
  return j;
}

template <class K>
Json quad_json_impl(const SolutionQuad<K>& q) {
  Json j;
  j["kind"] = "quad";
  if (!q.kind.empty()) j["constructor"] = q.kind;
  Json al = Json::array();
  for (const K& x : q.alphas) al.push_back(scalar_json(x));
  j["alphas"] = std::move(al);
  j["matrices"] = Json{{"a", mat_to_json(q.a)},
                       {"b", mat_to_json(q.b)},
                       {"c", mat_to_json(q.c)},
                       {"d", mat_to_json(q.d)}};
  return j;
}

}  // namespace

Json triple_to_json(const SolutionTriple<Rat>& t) { return triple_json_impl(t); }
Json triple_to_json(const SolutionTriple<NFElem>& t) { return triple_json_impl(t); }
Json triple_to_json(const SolutionTriple<double>& t) { return triple_json_impl(t); }
Json triple_to_json(const SolutionTriple<Cplx>& t) { return triple_json_impl(t); }
Json quad_to_json(const SolutionQuad<Rat>& q) { return quad_json_impl(q); }
Json quad_to_json(const SolutionQuad<NFElem>& q) { return quad_json_impl(q); }
Json quad_to_json(const SolutionQuad<Cplx>& q) { return quad_json_impl(q); }

Json pair_to_json(const SolutionPair<Rat>& p) {
  Json j;
  j["kind"] = "pair";
  if (!p.kind.empty()) j["constructor"] = p.kind;
  j["matrices"] = Json{{"a", mat_to_json(p.a)}, {"b", mat_to_json(p.b)}};
  return j;
}

Json usolve_to_json(const USolveResult& u) {
  SolutionTriple<double> t;
  t.a = u.a;
  t.b = u.b;
  t.c = u.c;
  t.kind = "solve_in_U";
  Json j = triple_json_impl(t);
  j.erase("params");  // the right-hand sides are matrices, not scalars
  Json rhs = Json::array();
  for (const Mat<double>& m : u.rhs) rhs.push_back(mat_to_json(m));
  j["rhs"] = std::move(rhs);
  Json roots = Json::array();
  for (const Cplx& r : u.roots) roots.push_back(scalar_json(r));
  j["roots"] = std::move(roots);
  Json vals = Json::array();
  for (const Cplx& v : u.rhs_values) vals.push_back(scalar_json(v));
  j["rhs_values"] = std::move(vals);
  return j;
}

namespace {

CaseTag case_tag_parse(const std::string& s) {
  for (CaseTag t : {CaseTag::Generic, CaseTag::MultipleRoot, CaseTag::HalfSum,
                    CaseTag::Nilpotent})
    if (case_tag_name(t) == s) return t;
  throw std::invalid_argument("unknown case tag: " + s);
}

// Per-kind scalar decoding for params/alphas.
Rat scalar_rat(const Json& e) { return parse_rat_elem(e); }

NFElem scalar_nf(const Json& e, const Field& f) {
  if (e.is_string()) return NFElem(rat_parse(e.get<std::string>()));
  return parse_nf_elem(e, f);
}

// The matrices of one bundle must agree on the scalar kind; rational
// matrices inside a number-field bundle are lifted.
struct MatrixGroup {
  std::string kind;            // "Q" | "NF" | "R" | "C"
  Field f;                     // set when kind == "NF"
  std::vector<Json> raw;
};

MatrixGroup group_matrices(const Json& j, const std::vector<const char*>& names) {
  require_key(j, "matrices", "a solution bundle");
  const Json& ms = j.at("matrices");
  MatrixGroup g;
  g.kind = "Q";
  for (const char* n : names) {
    require_key(ms, n, "\"matrices\"");
    const Json& mj = ms.at(n);
    std::string k = field_kind_of(mj);
    if (k == "NF") {
      Field f = field_from_json(mj.at("field"));
      if (g.f && g.f->c != f->c)
        throw std::invalid_argument("matrices lie in different number fields");
      g.f = f;
      g.kind = "NF";
    } else if (k == "R" || k == "C") {
      if (g.kind != "Q" && g.kind != k)
        throw std::invalid_argument("matrices mix exact and numeric fields");
      g.kind = k;
    } else if (k != "Q") {
      throw std::invalid_argument("unknown field kind: " + k);
    }
    g.raw.push_back(mj);
  }
  if (g.kind == "NF")
    for (const char* n : names) {
      std::string k = field_kind_of(ms.at(n));
      if (k != "Q" && k != "NF")
        throw std::invalid_argument("matrices mix exact and numeric fields");
    }
  return g;
}

Mat<NFElem> decode_as_nf(const Json& mj, const Field& f) {
  if (field_kind_of(mj) == "Q") return mat_lift(mat_rat_from_json(mj), f);
  return decode_matrix<NFElem>(mj, [&](const Json& e) { return parse_nf_elem(e, f); });
}

template <class K, class ScalarParse>
void decode_params(const Json& j, SolutionTriple<K>& t, ScalarParse parse) {
  if (!j.contains("params")) return;
  const Json& p = j.at("params");
  require_key(p, "alpha", "\"params\"");
  require_key(p, "beta", "\"params\"");
  require_key(p, "gamma", "\"params\"");
  t.params.alpha = parse(p.at("alpha"));
  t.params.beta = parse(p.at("beta"));
  t.params.gamma = parse(p.at("gamma"));
}

template <class K>
void decode_common(const Json& j, SolutionTriple<K>& t) {
  if (j.contains("constructor")) t.kind = j.at("constructor").get<std::string>();
  if (j.contains("case")) t.tag = case_tag_parse(j.at("case").get<std::string>());
}

LoadedSolution decode_triple(const Json& j) {
  MatrixGroup g = group_matrices(j, {"a", "b", "c"});
  LoadedSolution out;
  out.kind = "triple";
  if (g.kind == "Q") {
    SolutionTriple<Rat> t;
    t.a = mat_rat_from_json(g.raw[0]);
    t.b = mat_rat_from_json(g.raw[1]);
    t.c = mat_rat_from_json(g.raw[2]);
    decode_params(j, t, scalar_rat);
    decode_common(j, t);
    out.triple = std::move(t);
  } else if (g.kind == "NF") {
    SolutionTriple<NFElem> t;
    t.a = decode_as_nf(g.raw[0], g.f);
    t.b = decode_as_nf(g.raw[1], g.f);
    t.c = decode_as_nf(g.raw[2], g.f);
    decode_params(j, t, [&](const Json& e) { return scalar_nf(e, g.f); });
    decode_common(j, t);
    out.triple = std::move(t);
  } else if (g.kind == "R") {
    SolutionTriple<double> t;
    t.a = decode_matrix<double>(g.raw[0], parse_real_elem);
    t.b = decode_matrix<double>(g.raw[1], parse_real_elem);
    t.c = decode_matrix<double>(g.raw[2], parse_real_elem);
    decode_params(j, t, parse_real_elem);
    decode_common(j, t);
    out.triple = std::move(t);
    if (j.contains("rhs")) {
      const Json& r = j.at("rhs");
      if (!r.is_array() || r.size() != 3)
        throw std::invalid_argument("\"rhs\" must be an array of three matrices");
      std::array<Mat<double>, 3> rhs = {mat_zeros<double>(0, 0), mat_zeros<double>(0, 0),
                                        mat_zeros<double>(0, 0)};
      for (int k = 0; k < 3; ++k) {
        const Json& mk = r[static_cast<std::size_t>(k)];
        if (field_kind_of(mk) != "R")
          throw std::invalid_argument("\"rhs\" matrices must have field kind \"R\"");
        rhs[static_cast<std::size_t>(k)] = decode_matrix<double>(mk, parse_real_elem);
      }
      out.rhs = std::move(rhs);
    }
  } else {
    SolutionTriple<Cplx> t;
    t.a = decode_matrix<Cplx>(g.raw[0], parse_cplx_elem);
    t.b = decode_matrix<Cplx>(g.raw[1], parse_cplx_elem);
    t.c = decode_matrix<Cplx>(g.raw[2], parse_cplx_elem);
    decode_params(j, t, parse_cplx_elem);
    decode_common(j, t);
    out.triple = std::move(t);
  }
  if (j.contains("rhs") && !out.rhs)
    throw std::invalid_argument("\"rhs\" is only supported for numeric (kind \"R\") triples");
  return out;
}

template <class K, class ScalarParse>
void decode_alphas(const Json& j, SolutionQuad<K>& q, ScalarParse parse) {
  if (!j.contains("alphas")) return;
  const Json& a = j.at("alphas");
  if (!a.is_array() || a.size() != 4)
    throw std::invalid_argument("\"alphas\" must be an array of four scalars");
  for (int k = 0; k < 4; ++k)
    q.alphas[static_cast<std::size_t>(k)] = parse(a[static_cast<std::size_t>(k)]);
}

LoadedSolution decode_quad(const Json& j) {
  MatrixGroup g = group_matrices(j, {"a", "b", "c", "d"});
  LoadedSolution out;
  out.kind = "quad";
  if (g.kind == "Q") {
    SolutionQuad<Rat> q;
    q.a = mat_rat_from_json(g.raw[0]);
    q.b = mat_rat_from_json(g.raw[1]);
    q.c = mat_rat_from_json(g.raw[2]);
    q.d = mat_rat_from_json(g.raw[3]);
    decode_alphas(j, q, scalar_rat);
    if (j.contains("constructor")) q.kind = j.at("constructor").get<std::string>();
    out.quad = std::move(q);
  } else if (g.kind == "NF") {
    SolutionQuad<NFElem> q;
    q.a = decode_as_nf(g.raw[0], g.f);
    q.b = decode_as_nf(g.raw[1], g.f);
    q.c = decode_as_nf(g.raw[2], g.f);
    q.d = decode_as_nf(g.raw[3], g.f);
    decode_alphas(j, q, [&](const Json& e) { return scalar_nf(e, g.f); });
    if (j.contains("constructor")) q.kind = j.at("constructor").get<std::string>();
    out.quad = std::move(q);
  } else if (g.kind == "C") {
    SolutionQuad<Cplx> q;
    q.a = decode_matrix<Cplx>(g.raw[0], parse_cplx_elem);
    q.b = decode_matrix<Cplx>(g.raw[1], parse_cplx_elem);
    q.c = decode_matrix<Cplx>(g.raw[2], parse_cplx_elem);
    q.d = decode_matrix<Cplx>(g.raw[3], parse_cplx_elem);
    decode_alphas(j, q, parse_cplx_elem);
    if (j.contains("constructor")) q.kind = j.at("constructor").get<std::string>();
    out.quad = std::move(q);
  } else {
    throw std::invalid_argument("four-matrix bundles support field kinds Q, NF, C");
  }
  return out;
}

LoadedSolution decode_pair(const Json& j) {
  MatrixGroup g = group_matrices(j, {"a", "b"});
  if (g.kind != "Q")
    throw std::invalid_argument("pair bundles are handled exactly over the rationals");
  LoadedSolution out;
  out.kind = "pair";
  SolutionPair<Rat> p;
  p.a = mat_rat_from_json(g.raw[0]);
  p.b = mat_rat_from_json(g.raw[1]);
  if (j.contains("constructor")) p.kind = j.at("constructor").get<std::string>();
  out.pair = std::move(p);
  return out;
}

}  // namespace

LoadedSolution solution_from_json(const Json& j) {
  require_key(j, "kind", "a solution bundle");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "triple") return decode_triple(j);
  if (kind == "quad") return decode_quad(j);
  if (kind == "pair") return decode_pair(j);
  throw std::invalid_argument("unknown solution kind: " + kind);
}

LoadedContext context_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("a context file must hold a JSON object");
  LoadedContext out;
  if (j.contains("u")) out.u = mat_from_json(j.at("u"));
  if (j.contains("v")) out.v = mat_from_json(j.at("v"));
  return out;
}

Json json_parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
}

void json_write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(1) << "\n";
}

}  // namespace psmat
