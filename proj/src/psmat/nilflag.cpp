#include "nilflag.hpp"

#include <stdexcept>

namespace psmat {

namespace {

// canonical column basis (reduced echelon of the transpose, pivots ascending)
Mat<Rat> column_span(const std::vector<Mat<Rat>>& mats, int n) {
  int total = 0;
  for (const Mat<Rat>& m : mats) total += m.nc;
  Mat<Rat> rows = mat_zeros<Rat>(std::max(total, 1), n);
  int r = 0;
  for (const Mat<Rat>& m : mats)
    for (int j = 0; j < m.nc; ++j, ++r)
      for (int i = 0; i < n; ++i) rows.at(r, i) = m.at(i, j);
  Echelon<Rat> ech = reduced_echelon(rows);
  Mat<Rat> basis = mat_zeros<Rat>(n, ech.rank);
  for (int k = 0; k < ech.rank; ++k)
    for (int i = 0; i < n; ++i) basis.at(i, k) = ech.rre.at(k, i);
  return basis;
}

bool in_span(const Mat<Rat>& span_cols, const Mat<Rat>& v) {
  if (span_cols.nc == 0) return mat_is_zero(v);
  return mat_rank(hstack(span_cols, v)) == span_cols.nc;
}

std::vector<Mat<Rat>> generators(const SolutionTriple<Rat>& t) { return {t.a, t.b, t.c}; }

Mat<Rat> word_value(const std::string& w, const Mat<Rat>& a, const Mat<Rat>& b) {
  Mat<Rat> m = mat_eye<Rat>(a.nr);
  for (char ch : w) m = m * (ch == 'a' ? a : b);
  return m;
}

std::vector<Rat> flatten(const Mat<Rat>& m) { return m.e; }

// greedy independent subset bookkeeping over flattened matrices
struct SpanTracker {
  std::vector<std::vector<Rat>> rows;  // reduced rows, pivot ascending insert order

  // returns false if v is already in the span; otherwise adds it
  bool add(std::vector<Rat> v) {
    for (const auto& row : rows) {
      std::size_t p = 0;
      while (p < row.size() && rat_is_zero(row[p])) ++p;
      if (p < v.size() && !rat_is_zero(v[p])) {
        Rat f = v[p] / row[p];
        for (std::size_t i = p; i < v.size(); ++i) v[i] -= f * row[i];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && rat_is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    Rat lead = v[p];
    for (std::size_t i = p; i < v.size(); ++i) v[i] /= lead;
    // keep rows sorted by pivot so elimination above stays one-pass
    std::size_t at = 0;
    auto pivot_of = [](const std::vector<Rat>& r) {
      std::size_t q = 0;
      while (q < r.size() && rat_is_zero(r[q])) ++q;
      return q;
    };
    while (at < rows.size() && pivot_of(rows[at]) < p) ++at;
    rows.insert(rows.begin() + static_cast<long>(at), std::move(v));
    return true;
  }
};

void require_nilpotent_solution(const SolutionTriple<Rat>& t) {
  if (t.a.nr != t.a.nc || t.b.nr != t.a.nr || t.b.nc != t.a.nr || t.c.nr != t.a.nr ||
      t.c.nc != t.a.nr)
    throw std::invalid_argument("matrices must be square and of equal size");
  if (!rat_is_zero(t.params.alpha) || !rat_is_zero(t.params.beta) || !rat_is_zero(t.params.gamma))
    throw std::domain_error("flag analysis applies to the all-zero right-hand-side case");
}

}  // namespace

Flag semigroup_flag(const SolutionTriple<Rat>& t) {
  require_nilpotent_solution(t);
  int n = t.a.nr;
  std::vector<Mat<Rat>> gens = generators(t);
  // spans[k] = column span of all length-(k+1) products
  std::vector<Mat<Rat>> products = {mat_eye<Rat>(n)};
  std::vector<Mat<Rat>> spans;
  int l = -1;
  for (int k = 1; k <= 5; ++k) {
    std::vector<Mat<Rat>> next;
    next.reserve(products.size() * gens.size());
    for (const Mat<Rat>& g : gens)
      for (const Mat<Rat>& p : products) next.push_back(g * p);
    spans.push_back(column_span(next, n));
    products = std::move(next);
    if (spans.back().nc == 0) {
      l = k;
      break;
    }
  }
  if (l < 0)
    throw std::domain_error(
        "the semigroup is not nilpotent at class <= 5; not a solution of the zero system");
  Flag f;
  f.n = n;
  f.subspaces.push_back(mat_zeros<Rat>(n, 0));
  for (int i = 1; i <= l - 1; ++i) {
    const Mat<Rat>& v = spans[static_cast<std::size_t>(l - i) - 1];  // [S^(l-i)]
    if (v.nc > f.subspaces.back().nc) f.subspaces.push_back(v);  // drop repeats: keep strict
  }
  Mat<Rat> full = mat_eye<Rat>(n);
  if (f.subspaces.back().nc < n) f.subspaces.push_back(full);
  return f;
}

std::vector<int> flag_signature(const Flag& f) {
  std::vector<int> sig;
  for (std::size_t i = 1; i < f.subspaces.size(); ++i)
    sig.push_back(f.subspaces[i].nc - f.subspaces[i - 1].nc);
  return sig;
}

AlgebraBasis algebra_basis(const SolutionTriple<Rat>& t) {
  require_nilpotent_solution(t);
  static const char* kCandidates[] = {"a", "b", "ab", "ba", "aa", "aba", "abb", "bab", "aab",
                                      "aaaa"};
  static const char* kNames[] = {"a", "b", "ab", "ba", "a^2", "aba", "ab^2", "bab", "a^2b",
                                 "a^4"};
  AlgebraBasis out;
  SpanTracker span;
  for (std::size_t k = 0; k < 10; ++k) {
    Mat<Rat> v = word_value(kCandidates[k], t.a, t.b);
    if (span.add(flatten(v))) {
      out.words.emplace_back(kNames[k]);
      out.values.push_back(std::move(v));
    }
  }
  out.dimension = static_cast<int>(out.words.size());
  // defensive closure check: left/right products by the generators must stay
  // inside the span (guaranteed by the degree-4/5 relations for solutions)
  SpanTracker closure;
  for (const Mat<Rat>& v : out.values) closure.add(flatten(v));
  for (const Mat<Rat>& v : out.values)
    for (const Mat<Rat>& g : {t.a, t.b}) {
      if (closure.add(flatten(g * v)) || closure.add(flatten(v * g)))
        throw std::logic_error("the candidate words do not span a closed algebra");
    }
  return out;
}

AlgebraBasis center_basis(const SolutionTriple<Rat>& t, const AlgebraBasis& alg) {
  require_nilpotent_solution(t);
  int n = t.a.nr;
  // exact center dimension: kernel of x -> ([x,a], [x,b]) on the algebra span
  int d = alg.dimension;
  Mat<Rat> comm_map = mat_zeros<Rat>(2 * n * n, d);
  for (int j = 0; j < d; ++j) {
    Mat<Rat> ca = alg.values[static_cast<std::size_t>(j)] * t.a - t.a * alg.values[static_cast<std::size_t>(j)];
    Mat<Rat> cb = alg.values[static_cast<std::size_t>(j)] * t.b - t.b * alg.values[static_cast<std::size_t>(j)];
    for (int i = 0; i < n * n; ++i) {
      comm_map.at(i, j) = ca.e[static_cast<std::size_t>(i)];
      comm_map.at(n * n + i, j) = cb.e[static_cast<std::size_t>(i)];
    }
  }
  int center_dim = d - mat_rank(comm_map);
  static const char* kCandidates[] = {"a",   "b",   "ab",  "ba",  "aa",  "bb",
                                      "aba", "abb", "bab", "aab", "aaaa"};
  static const char* kNames[] = {"a",   "b",    "ab",  "ba",   "a^2", "b^2",
                                 "aba", "ab^2", "bab", "a^2b", "a^4"};
  AlgebraBasis out;
  SpanTracker span;
  for (std::size_t k = 0; k < 11; ++k) {
    Mat<Rat> v = word_value(kCandidates[k], t.a, t.b);
    if (!mat_is_zero(v * t.a - t.a * v) || !mat_is_zero(v * t.b - t.b * v)) continue;
    if (static_cast<int>(out.words.size()) == center_dim) break;
    if (span.add(flatten(v))) {
      out.words.emplace_back(kNames[k]);
      out.values.push_back(std::move(v));
    }
  }
  if (static_cast<int>(out.words.size()) < center_dim) {
    // complete from the exact kernel with explicit combinations
    std::vector<Mat<Rat>> kern = kernel_basis(comm_map);
    for (const Mat<Rat>& coeffs : kern) {
      Mat<Rat> v = mat_zeros<Rat>(n, n);
      std::string name;
      for (int j = 0; j < d; ++j) {
        const Rat& cj = coeffs.at(j, 0);
        if (rat_is_zero(cj)) continue;
        v = v + cj * alg.values[static_cast<std::size_t>(j)];
        if (!name.empty()) name += " + ";
        name += rat_str(cj) + "*" + alg.words[static_cast<std::size_t>(j)];
      }
      if (span.add(flatten(v))) {
        out.words.push_back(name);
        out.values.push_back(std::move(v));
      }
      if (static_cast<int>(out.words.size()) == center_dim) break;
    }
  }
  out.dimension = static_cast<int>(out.words.size());
  if (out.dimension != center_dim)
    throw std::logic_error("center basis extraction missed the kernel dimension");
  return out;
}

Rat varpi(const SolutionTriple<Rat>& t) {
  require_nilpotent_solution(t);
  Mat<Rat> canonical =
      block_diag<Rat>({mat_jordan<Rat>(5), mat_jordan<Rat>(3), mat_zeros<Rat>(1, 1)});
  if (t.a.nr != 9 || !(t.a == canonical))
    throw std::invalid_argument("varpi needs a in the canonical diag(J5, J3, 0) form");
  const Mat<Rat>& a = t.a;
  const Mat<Rat>& b = t.b;
  Rat w = Rat(3) * b.at(5, 7) - b.at(1, 3);
  Mat<Rat> a4 = mat_pow(a, 4);
  Mat<Rat> aba = a * b * a, ab2 = a * b * b, bab = b * a * b, a2b = a * a * b;
  Rat half_w = w / 2;
  if (!mat_is_zero(bab + aba + Rat(4) * ab2 - w * a4))
    throw std::domain_error("bab = -aba - 4ab^2 + varpi*a^4 fails; not a solution in canonical form");
  if (!mat_is_zero(a2b - ab2 + half_w * a4))
    throw std::domain_error("a^2b = ab^2 - (1/2)varpi*a^4 fails; not a solution in canonical form");
  return w;
}

Mat<Rat> triangularizing_basis(const SolutionTriple<Rat>& t) {
  Flag f = semigroup_flag(t);
  int n = f.n;
  SpanTracker chosen;
  std::vector<Mat<Rat>> cols;
  for (std::size_t i = 1; i < f.subspaces.size(); ++i) {
    const Mat<Rat>& layer = f.subspaces[i];
    for (int j = 0; j < layer.nc; ++j) {  // canonical basis: pivots ascending
      Mat<Rat> v = mat_zeros<Rat>(n, 1);
      for (int r = 0; r < n; ++r) v.at(r, 0) = layer.at(r, j);
      if (chosen.add(flatten(v))) cols.push_back(std::move(v));
    }
  }
  if (static_cast<int>(cols.size()) != n)
    throw std::logic_error("flag layers failed to complete to a full basis");
  Mat<Rat> p = mat_zeros<Rat>(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) p.at(i, j) = cols[static_cast<std::size_t>(j)].at(i, 0);
  Mat<Rat> pinv = mat_inverse(p);
  for (const Mat<Rat>* m : {&t.a, &t.b, &t.c}) {
    Mat<Rat> conj = pinv * *m * p;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j)
        if (!rat_is_zero(conj.at(i, j)))
          throw std::logic_error("flag basis did not strictly triangularize the triple");
  }
  return p;
}

}  // namespace psmat
