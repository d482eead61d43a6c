#pragma once
// Structure theory of nilpotent solutions (all right-hand sides zero): the
// flag of semigroup-image subspaces, its signature, the dimension and center
// of the matrix algebra generated by the solution, the varpi invariant of the
// 9x9 family, and a flag-ordered basis that simultaneously strictly
// triangularizes the triple.

#include <string>
#include <vector>

#include "construct.hpp"
#include "matrix.hpp"

namespace psmat {

// {0} = V_0 < V_1 < ... < V_l = K^n; subspaces[i] holds a canonical column
// basis of V_i (reduced echelon, pivots ascending), subspaces[0] is n x 0.
struct Flag {
  int n = 0;
  std::vector<Mat<Rat>> subspaces;
  int length() const { return static_cast<int>(subspaces.size()) - 1; }
};

// V_i = span of the columns of all products of (nilpotency class - i)
// generators; requires every length-5 product of {a, b, c} to vanish.
Flag semigroup_flag(const SolutionTriple<Rat>& t);

// successive quotient dimensions dim(V_{i+1}) - dim(V_i)
std::vector<int> flag_signature(const Flag& f);

struct AlgebraBasis {
  std::vector<std::string> words;  // names of the chosen elements
  std::vector<Mat<Rat>> values;
  int dimension = 0;
};

// Maximal independent subset of the ten candidate words
// {a, b, ab, ba, a^2, aba, ab^2, bab, a^2b, a^4}, earlier words preferred.
AlgebraBasis algebra_basis(const SolutionTriple<Rat>& t);

// Center of the span: central candidate words (the ten above plus b^2) are
// taken first; any remaining kernel directions are appended as explicit
// combinations so the result always spans the full center.
AlgebraBasis center_basis(const SolutionTriple<Rat>& t, const AlgebraBasis& alg);

// varpi = 3*b[6,8] - b[2,4] (1-indexed) for solutions with a = diag(J5,J3,0);
// also asserts bab = -aba - 4ab^2 + varpi*a^4 and a^2b = ab^2 - (1/2)varpi*a^4.
Rat varpi(const SolutionTriple<Rat>& t);

// Columns: V_1 basis, then completion to V_2, ... (lowest pivot index first
// within each layer).  Conjugation makes a, b, c strictly upper triangular.
Mat<Rat> triangularizing_basis(const SolutionTriple<Rat>& t);

}  // namespace psmat
