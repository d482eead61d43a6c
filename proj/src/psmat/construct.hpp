#pragma once
// Canonical exact solution families of the power-sum system and its variants:
//  - simultaneously diagonalizable triples from a squarefree cubic (generic case)
//  - the idempotent-plus-square-zero block family solving alpha=beta=gamma=1
//  - the E(+)F family solving (0, sigma, 0) with its non-triangularizable E part
//  - nilpotent triples of sizes 2, 3, 9 (all right-hand sides zero)
//  - real even-size solutions from one real root and a complex pair
//  - the rotation-algebra solver for right-hand sides in U = {(y z; -z y)}
//  - four-matrix power-sum (Sigma) families and the pair system
//    T = {ab+ba = I, b a^2 b = 0} with its canonical-form recovery.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "matrix.hpp"

namespace psmat {

template <class K>
struct SolutionTriple {
  Mat<K> a, b, c;
  Params<K> params{};
  std::string kind;
  std::optional<CaseTag> tag;
};

template <class K>
struct SolutionQuad {
  Mat<K> a, b, c, d;
  std::array<K, 4> alphas{};
  std::string kind;
};

template <class K>
struct SolutionPair {
  Mat<K> a, b;
  std::string kind;
};

// ---------- generic case: diagonal triples from the cubic's roots ----------
// assign[i] is a permutation of {0,1,2} choosing which root lands in a, b, c
// at coordinate i.  Exact form requires the cubic to split as tracked by
// cubic_roots; numeric form always works.  Repeated roots are refused.

SolutionTriple<NFElem> construct_generic(const Params<Rat>& params,
                                         const std::vector<std::array<int, 3>>& assign,
                                         const std::optional<Mat<Rat>>& p = std::nullopt);
SolutionTriple<Cplx> construct_generic_numeric(const Params<Rat>& params,
                                               const std::vector<std::array<int, 3>>& assign,
                                               const std::optional<Mat<Rat>>& p = std::nullopt);

// ---------- block family solving a+b+c = a^2+b^2+c^2 = a^3+b^3+c^3 = I ----------

struct Theorem2Shape {
  int phi = 0, psi = 0, theta = 0;
  Mat<Rat> alphaN, betaN, gammaN;  // psi x psi, theta x theta, phi x phi; squares vanish
};

SolutionTriple<Rat> construct_theorem2(const Theorem2Shape& shape);

// ---------- E(+)F family solving (alpha,beta,gamma) = (0, sigma, 0) ----------
// E part: m/2 copies of the 2x2 pair A = sqrt(sigma/3)*diag(1,-1),
// B = [[-sqrt(sigma/3)/2, sqrt(sigma)/2], [sqrt(sigma)/2, sqrt(sigma/3)/2]],
// C = -A-B.  F part: commuting diagonals whose per-coordinate values permute
// (0, s, -s) with s = sqrt(sigma/2).  Radicals are represented exactly in Q,
// a quadratic field, or Q(sqrt2+sqrt3) = Q[t]/(t^4-10t^2+1) as needed; sigma
// whose squarefree part is not in {1,2,3,6} is refused in exact mode.

struct Theorem3Shape {
  int m = 0;                                  // E dimension, even
  std::vector<std::array<int, 3>> f_assign;   // per F coordinate: permutation of (0, s, -s)
  Rat sigma;
  std::optional<Mat<Rat>> conjugator;
};

SolutionTriple<NFElem> construct_theorem3(const Theorem3Shape& shape);
SolutionTriple<double> construct_theorem3_numeric(const Theorem3Shape& shape);

// ---------- nilpotent families (all right-hand sides zero) ----------

SolutionTriple<Rat> construct_nilpotent_n2(const Rat& x, const Rat& y);  // a=xJ2, b=yJ2
SolutionTriple<Rat> construct_nilpotent_n3(const Rat& x, const Rat& y);
SolutionTriple<Rat> construct_nilpotent_n9();

// ---------- real even-size solutions: one real root u, complex pair v +/- iw ----------

SolutionTriple<Rat> construct_real_even(const Rat& u, const Rat& v, const Rat& w, int m);
// derive (u, v, w) numerically from parameters; refuses three real roots
SolutionTriple<double> construct_real_even_params(const Params<Rat>& params, int m);

// ---------- solver for right-hand sides in U = {(y z; -z y)} ~ C ----------

struct USolveResult {
  Mat<double> a, b, c;
  std::array<Mat<double>, 3> rhs;
  std::array<Cplx, 3> rhs_values;  // U -> C images of the right-hand sides
  std::array<Cplx, 3> roots;       // solution values, sorted by (re, im)
};

USolveResult solve_in_U(const Mat<double>& rhs1, const Mat<double>& rhs2,
                        const Mat<double>& rhs3);

// ---------- four-matrix power-sum families (Sigma) ----------

// r(x) = (x^2+ux+v)(x^2-ux+w); a = diag(r1,r2), c = diag(r2,r1),
// b = p^-1 diag(r3,r4) p, d = p^-1 diag(r4,r3) p.
SolutionQuad<Rat> construct_sigma_generic(const Rat& u, const Rat& v, const Rat& w,
                                          const std::optional<Mat<Rat>>& p = std::nullopt);
SolutionQuad<Cplx> construct_sigma_generic_numeric(const Rat& u, const Rat& v, const Rat& w,
                                                   const std::optional<Mat<Rat>>& p = std::nullopt);

// the 2x2 quadruple over Q(j), j^2+j+1 = 0, with a^2 = I, b^2 = jI, c^2 = j^2 I,
// d^2 = 0 and a+jb+j^2c = 0; all four power sums vanish
SolutionQuad<NFElem> construct_sigma_pattern2();

// direct sum of the pattern with its cyclic role shift so no slot is nilpotent
SolutionQuad<NFElem> construct_sigma_nonnilpotent();

// ---------- the pair system T = {ab + ba = I, b a^2 b = 0} ----------

SolutionPair<Rat> construct_tsys(int m, const Mat<Rat>& z, const Mat<Rat>& q);

struct TsysCanon {
  int m = 0;
  Mat<Rat> z, q;
  Mat<Rat> change_of_basis;  // C with C^-1 a C = [[0, I],[z, 0]], C^-1 b C = [[0, q],[I, 0]]
};

TsysCanon canonicalize_tsys(const Mat<Rat>& a, const Mat<Rat>& b);

// ---------- conversions ----------

SolutionTriple<Cplx> triple_embed(const SolutionTriple<NFElem>& t, int root_choice = 0);
SolutionTriple<double> triple_double(const SolutionTriple<Rat>& t);

}  // namespace psmat
