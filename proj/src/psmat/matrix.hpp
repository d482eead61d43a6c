#pragma once
// Dense matrices over an exact field (Rat, NFElem) or a floating field
// (double, complex<double>).  Exact elimination uses Bareiss-style
// fraction-free pivoting for rational matrices (rows are pre-scaled to
// integers, intermediate values stay integral) and plain exact Gauss-Jordan
// for number-field matrices; floating matrices use partial pivoting with a
// 1e-9 relative zero threshold for rank decisions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numfield.hpp"
#include "rat.hpp"

namespace psmat {

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long n) { return Rat(n); }
  static bool is_zero(const Rat& x) { return rat_is_zero(x); }
  static Rat inv(const Rat& x) {
    if (rat_is_zero(x)) throw std::domain_error("division by zero");
    return Rat(1) / x;
  }
  static double abs_val(const Rat& x) { return std::fabs(rat_double(x)); }
};

template <>
struct ScalarOps<NFElem> {
  static constexpr bool exact = true;
  static NFElem zero() { return NFElem(Rat(0)); }
  static NFElem one() { return NFElem(Rat(1)); }
  static NFElem from_long(long n) { return NFElem(Rat(n)); }
  static bool is_zero(const NFElem& x) { return nf_is_zero(x); }
  static NFElem inv(const NFElem& x) { return nf_inv(x); }
  static double abs_val(const NFElem& x) {
    double m = 0;
    for (const auto& q : x.c) m = std::max(m, std::fabs(rat_double(q)));
    return m;
  }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_long(long n) { return static_cast<double>(n); }
  static bool is_zero(const double& x) { return x == 0.0; }
  static double inv(const double& x) { return 1.0 / x; }
  static double abs_val(const double& x) { return std::fabs(x); }
};

template <>
struct ScalarOps<Cplx> {
  static constexpr bool exact = false;
  static Cplx zero() { return Cplx(0, 0); }
  static Cplx one() { return Cplx(1, 0); }
  static Cplx from_long(long n) { return Cplx(static_cast<double>(n), 0); }
  static bool is_zero(const Cplx& x) { return x == Cplx(0, 0); }
  static Cplx inv(const Cplx& x) { return Cplx(1, 0) / x; }
  static double abs_val(const Cplx& x) { return std::abs(x); }
};

inline constexpr double kRankTol = 1e-9;

template <class K>
struct Mat {
  int nr = 0, nc = 0;
  std::vector<K> e;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), e(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), ScalarOps<K>::zero()) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Mat(int r, int c, std::initializer_list<K> init) : Mat(r, c) {
    if (static_cast<int>(init.size()) != r * c)
      throw std::invalid_argument("initializer size mismatch");
    std::copy(init.begin(), init.end(), e.begin());
  }

  K& at(int i, int j) { return e[static_cast<std::size_t>(i) * nc + j]; }
  const K& at(int i, int j) const { return e[static_cast<std::size_t>(i) * nc + j]; }
  bool square() const { return nr == nc; }
};

template <class K>
Mat<K> mat_zeros(int r, int c) {
  return Mat<K>(r, c);
}

template <class K>
Mat<K> mat_eye(int n) {
  Mat<K> m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ScalarOps<K>::one();
  return m;
}

// Jordan block: ones on the superdiagonal, zeros elsewhere.
template <class K>
Mat<K> mat_jordan(int n) {
  Mat<K> m(n, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = ScalarOps<K>::one();
  return m;
}

template <class K>
bool mat_is_zero(const Mat<K>& m) {
  return std::all_of(m.e.begin(), m.e.end(), [](const K& x) { return ScalarOps<K>::is_zero(x); });
}

template <class K>
bool operator==(const Mat<K>& a, const Mat<K>& b) {
  if (a.nr != b.nr || a.nc != b.nc) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (!ScalarOps<K>::is_zero(a.e[i] - b.e[i])) return false;
  return true;
}

template <class K>
Mat<K> operator+(const Mat<K>& a, const Mat<K>& b) {
  if (a.nr != b.nr || a.nc != b.nc) throw std::invalid_argument("shape mismatch in add");
  Mat<K> r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] + b.e[i];
  return r;
}

template <class K>
Mat<K> operator-(const Mat<K>& a, const Mat<K>& b) {
  if (a.nr != b.nr || a.nc != b.nc) throw std::invalid_argument("shape mismatch in sub");
  Mat<K> r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] - b.e[i];
  return r;
}

template <class K>
Mat<K> operator-(const Mat<K>& a) {
  Mat<K> r = a;
  for (auto& x : r.e) x = ScalarOps<K>::zero() - x;
  return r;
}

template <class K>
Mat<K> operator*(const Mat<K>& a, const Mat<K>& b) {
  if (a.nc != b.nr) throw std::invalid_argument("shape mismatch in mul");
  Mat<K> r(a.nr, b.nc);
  for (int i = 0; i < a.nr; ++i)
    for (int k = 0; k < a.nc; ++k) {
      const K& aik = a.at(i, k);
      if (ScalarOps<K>::is_zero(aik)) continue;
      for (int j = 0; j < b.nc; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
    }
  return r;
}

template <class K>
Mat<K> operator*(const K& s, const Mat<K>& m) {
  Mat<K> r = m;
  for (auto& x : r.e) x = s * x;
  return r;
}

template <class K>
Mat<K> mat_pow(const Mat<K>& m, unsigned p) {
  if (!m.square()) throw std::invalid_argument("pow of non-square matrix");
  Mat<K> r = mat_eye<K>(m.nr), base = m;
  while (p) {
    if (p & 1) r = r * base;
    base = base * base;
    p >>= 1;
  }
  return r;
}

template <class K>
K mat_trace(const Mat<K>& m) {
  if (!m.square()) throw std::invalid_argument("trace of non-square matrix");
  K t = ScalarOps<K>::zero();
  for (int i = 0; i < m.nr; ++i) t = t + m.at(i, i);
  return t;
}

template <class K>
Mat<K> mat_transpose(const Mat<K>& m) {
  Mat<K> r(m.nc, m.nr);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class K>
Mat<K> block_diag(const std::vector<Mat<K>>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.nr, c += b.nc;
  Mat<K> m(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.nr; ++i)
      for (int j = 0; j < b.nc; ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.nr;
    co += b.nc;
  }
  return m;
}

template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> m(a.nr * b.nr, a.nc * b.nc);
  for (int i = 0; i < a.nr; ++i)
    for (int j = 0; j < a.nc; ++j) {
      const K& aij = a.at(i, j);
      if (ScalarOps<K>::is_zero(aij)) continue;
      for (int p = 0; p < b.nr; ++p)
        for (int q = 0; q < b.nc; ++q) m.at(i * b.nr + p, j * b.nc + q) = aij * b.at(p, q);
    }
  return m;
}

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.nr != b.nr) throw std::invalid_argument("hstack row mismatch");
  Mat<K> m(a.nr, a.nc + b.nc);
  for (int i = 0; i < a.nr; ++i) {
    for (int j = 0; j < a.nc; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.nc; ++j) m.at(i, a.nc + j) = b.at(i, j);
  }
  return m;
}

template <class K>
double mat_max_abs(const Mat<K>& m) {
  double v = 0;
  for (const auto& x : m.e) v = std::max(v, ScalarOps<K>::abs_val(x));
  return v;
}

// ---------- elimination ----------

template <class K>
struct Echelon {
  Mat<K> rre;              // reduced row echelon form
  std::vector<int> pivots; // pivot column per pivot row
  int rank = 0;
};

namespace detail {

// Fraction-free forward elimination (one-step Bareiss) on an integer matrix,
// followed by rational back-substitution to reach the reduced echelon form.
inline Echelon<Rat> rref_bareiss(Mat<Rat> m) {
  // scale each row to integers
  for (int i = 0; i < m.nr; ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.nc; ++j) {
      const mpz_class& d = m.at(i, j).get_den();
      l = l * d / gcd(l, d);
    }
    if (l != 1) {
      Rat f{l};
      for (int j = 0; j < m.nc; ++j) m.at(i, j) *= f;
    }
  }
  std::vector<int> pivots;
  Rat prev(1);
  int row = 0;
  for (int col = 0; col < m.nc && row < m.nr; ++col) {
    int pr = -1;
    for (int i = row; i < m.nr; ++i)
      if (!rat_is_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(row, j));
    const Rat piv = m.at(row, col);
    for (int i = row + 1; i < m.nr; ++i) {
      const Rat mic = m.at(i, col);
      for (int j = col; j < m.nc; ++j)
        m.at(i, j) = (m.at(i, j) * piv - mic * m.at(row, j)) / prev;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  // back-substitution (rational): unit pivots, clear above
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int pc = pivots[static_cast<std::size_t>(r)];
    Rat inv = Rat(1) / m.at(r, pc);
    for (int j = pc; j < m.nc; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      Rat f = m.at(i, pc);
      if (rat_is_zero(f)) continue;
      for (int j = pc; j < m.nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  for (int i = static_cast<int>(pivots.size()); i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) m.at(i, j) = 0;
  Echelon<Rat> out;
  out.rank = static_cast<int>(pivots.size());
  out.pivots = std::move(pivots);
  out.rre = std::move(m);
  return out;
}

template <class K>
Echelon<K> rref_gauss(Mat<K> m) {
  double tol = 0;
  if constexpr (!ScalarOps<K>::exact) tol = kRankTol * std::max(1.0, mat_max_abs(m));
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.nc && row < m.nr; ++col) {
    int pr = -1;
    if constexpr (ScalarOps<K>::exact) {
      for (int i = row; i < m.nr; ++i)
        if (!ScalarOps<K>::is_zero(m.at(i, col))) {
          pr = i;
          break;
        }
    } else {
      double best = tol;
      for (int i = row; i < m.nr; ++i) {
        double v = ScalarOps<K>::abs_val(m.at(i, col));
        if (v > best) {
          best = v;
          pr = i;
        }
      }
    }
    if (pr < 0) {
      if constexpr (!ScalarOps<K>::exact)
        for (int i = row; i < m.nr; ++i) m.at(i, col) = ScalarOps<K>::zero();
      continue;
    }
    if (pr != row)
      for (int j = 0; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(row, j));
    K inv = ScalarOps<K>::inv(m.at(row, col));
    for (int j = col; j < m.nc; ++j) m.at(row, j) = inv * m.at(row, j);
    m.at(row, col) = ScalarOps<K>::one();
    for (int i = 0; i < m.nr; ++i) {
      if (i == row) continue;
      K f = m.at(i, col);
      if (ScalarOps<K>::is_zero(f)) continue;
      for (int j = col; j < m.nc; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
      m.at(i, col) = ScalarOps<K>::zero();
    }
    pivots.push_back(col);
    ++row;
  }
  Echelon<K> out;
  out.rank = static_cast<int>(pivots.size());
  out.pivots = std::move(pivots);
  out.rre = std::move(m);
  return out;
}

}  // namespace detail

template <class K>
Echelon<K> reduced_echelon(const Mat<K>& m) {
  if constexpr (std::is_same_v<K, Rat>)
    return detail::rref_bareiss(m);
  else
    return detail::rref_gauss(m);
}

template <class K>
int mat_rank(const Mat<K>& m) {
  return reduced_echelon(m).rank;
}

// Basis of the right kernel {x : m x = 0}, one column vector per free column,
// ordered by ascending free-column index.
template <class K>
std::vector<Mat<K>> kernel_basis(const Mat<K>& m) {
  Echelon<K> ech = reduced_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.nc), false);
  for (int p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Mat<K>> basis;
  for (int fc = 0; fc < m.nc; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    Mat<K> v(m.nc, 1);
    v.at(fc, 0) = ScalarOps<K>::one();
    for (int r = 0; r < ech.rank; ++r)
      v.at(ech.pivots[static_cast<std::size_t>(r)], 0) =
          ScalarOps<K>::zero() - ech.rre.at(r, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
Mat<K> mat_inverse(const Mat<K>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  Echelon<K> ech = reduced_echelon(hstack(m, mat_eye<K>(m.nr)));
  for (int i = 0; i < m.nr; ++i)
    if (ech.pivots.size() <= static_cast<std::size_t>(i) || ech.pivots[static_cast<std::size_t>(i)] != i)
      throw std::domain_error("matrix is singular");
  Mat<K> inv(m.nr, m.nr);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nr; ++j) inv.at(i, j) = ech.rre.at(i, m.nr + j);
  return inv;
}

template <class K>
Mat<K> conjugate(const Mat<K>& p, const Mat<K>& m) {
  return p * m * mat_inverse(p);
}

template <class K>
bool is_projector(const Mat<K>& m) {
  if (!m.square()) return false;
  if constexpr (ScalarOps<K>::exact) return m * m == m;
  else return mat_max_abs(m * m - m) <= kRankTol * std::max(1.0, mat_max_abs(m));
}

// Smallest k >= 1 with m^k = 0, or nullopt if m is not nilpotent.
template <class K>
std::optional<int> nilpotency_index(const Mat<K>& m) {
  if (!m.square()) throw std::invalid_argument("nilpotency of non-square matrix");
  Mat<K> p = m;
  for (int k = 1; k <= m.nr; ++k) {
    if (mat_is_zero(p)) return k;
    p = p * m;
  }
  return std::nullopt;
}

// Jordan block sizes (descending) of a nilpotent matrix, recovered from the
// rank sequence of its powers.  Throws if the matrix is not nilpotent.
template <class K>
std::vector<int> nilpotent_jordan_type(const Mat<K>& m) {
  auto idx = nilpotency_index(m);
  if (!idx) throw std::domain_error("matrix is not nilpotent");
  int l = *idx;
  std::vector<int> ranks = {m.nr};  // rank of m^0
  Mat<K> p = mat_eye<K>(m.nr);
  for (int k = 1; k <= l; ++k) {
    p = p * m;
    ranks.push_back(mat_rank(p));
  }
  std::vector<int> blocks_ge(static_cast<std::size_t>(l) + 1, 0);
  for (int k = 1; k <= l; ++k)
    blocks_ge[static_cast<std::size_t>(k)] = ranks[static_cast<std::size_t>(k - 1)] - ranks[static_cast<std::size_t>(k)];
  std::vector<int> sizes;
  for (int i = 1; i <= blocks_ge[1]; ++i) {
    int sz = 0;
    for (int k = 1; k <= l; ++k)
      if (blocks_ge[static_cast<std::size_t>(k)] >= i) sz = k;
    sizes.push_back(sz);
  }
  return sizes;  // already descending since blocks_ge is non-increasing
}

// ---------- conversions ----------

template <class K>
Mat<K> mat_from_long(const Mat<long>&) = delete;

inline Mat<Rat> mat_rat(int r, int c, std::initializer_list<long> init) {
  Mat<Rat> m(r, c);
  if (static_cast<int>(init.size()) != r * c) throw std::invalid_argument("initializer size mismatch");
  auto it = init.begin();
  for (auto& x : m.e) x = Rat(*it++);
  return m;
}

inline Mat<NFElem> mat_lift(const Mat<Rat>& m, const Field& f = nullptr) {
  Mat<NFElem> r(m.nr, m.nc);
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    NFElem x{m.e[i]};
    if (f) x = detail::lift(x, f);
    r.e[i] = x;
  }
  return r;
}

inline Mat<double> mat_double_of(const Mat<Rat>& m) {
  Mat<double> r(m.nr, m.nc);
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = rat_double(m.e[i]);
  return r;
}

inline Mat<Cplx> mat_embed(const Mat<NFElem>& m, int root_choice = 0) {
  // resolve the embedding root once per distinct field in the matrix
  Field f;
  for (const auto& x : m.e)
    if (x.f) {
      if (f && !same_field(f, x.f))
        throw std::invalid_argument("matrix mixes different number fields");
      f = x.f;
    }
  Cplx t(0, 0);
  if (f) {
    auto roots = field_roots(*f);
    if (root_choice < 0 || root_choice >= static_cast<int>(roots.size()))
      throw std::out_of_range("root_choice out of range");
    t = roots[static_cast<std::size_t>(root_choice)];
  }
  Mat<Cplx> r(m.nr, m.nc);
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    const NFElem& x = m.e[i];
    Cplx v(0, 0);
    for (std::size_t k = x.c.size(); k-- > 0;) v = v * t + Cplx(rat_double(x.c[k]), 0);
    r.e[i] = v;
  }
  return r;
}

inline Mat<Cplx> mat_cplx_of(const Mat<double>& m) {
  Mat<Cplx> r(m.nr, m.nc);
  for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = Cplx(m.e[i], 0);
  return r;
}

}  // namespace psmat
