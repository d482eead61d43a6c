#pragma once
// Noncommutative polynomials over Q in a fixed generator alphabet, with a
// degree-truncated Buchberger completion for two-sided homogeneous ideals.
//
// Words are strings of generator indices.  The monomial order is weighted
// deglex: total weight first, then letter-by-letter comparison in generator
// order.  For a homogeneous ideal, membership of a homogeneous element of
// degree d is decided exactly by any basis complete through degree d, so the
// truncated completion gives exact membership certificates below its bound.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace psmat {

struct GenTable {
  std::vector<std::string> names;
  std::vector<int> weights;
};

// a < b < c < u < v < t, all of weight 1
GenTable default_gens();
GenTable make_gens(const std::vector<std::string>& names, const std::vector<int>& weights = {});

using Word = std::string;

struct NCPoly {
  // terms sorted descending in the word order, zero coefficients dropped
  std::vector<std::pair<Word, Rat>> t;
  bool zero() const { return t.empty(); }
  const Word& lead_word() const;
  const Rat& lead_coeff() const;
  bool operator==(const NCPoly& o) const { return t == o.t; }
};

class NCContext {
 public:
  explicit NCContext(GenTable g);

  const GenTable& gens() const { return g_; }
  int gen_index(const std::string& name) const;

  int wdeg(const Word& w) const;
  int word_cmp(const Word& x, const Word& y) const;  // -1, 0, +1

  NCPoly make(std::vector<std::pair<Word, Rat>> terms) const;
  NCPoly add(const NCPoly& p, const NCPoly& q) const;
  NCPoly sub(const NCPoly& p, const NCPoly& q) const;
  NCPoly scale(const NCPoly& p, const Rat& s) const;
  NCPoly mul_word(const Word& left, const NCPoly& p, const Word& right) const;
  NCPoly mul(const NCPoly& p, const NCPoly& q) const;
  NCPoly monic(const NCPoly& p) const;

  // true iff all terms share one weighted degree (the zero poly is homogeneous)
  bool homogeneous(const NCPoly& p, int* deg = nullptr) const;
  int degree(const NCPoly& p) const;  // weighted degree of the lead, -1 for zero

  Word word_of(const std::string& single_letter_names) const;
  NCPoly parse(const std::string& text) const;
  std::string word_str(const Word& w) const;  // dotted, "" -> "1"
  std::string str(const NCPoly& p) const;

 private:
  GenTable g_;
};

struct CofactorStep {
  Rat coeff;
  Word left;
  int basis_index;
  Word right;
};

struct GBResult {
  std::vector<NCPoly> basis;  // monic, tail-interreduced, ascending degree
  int degree_bound = 0;
  bool complete_below_bound = false;
  std::map<int, int> count_by_degree;
};

// Completes the two-sided ideal generated by homogeneous gens through the
// given degree bound.  Throws if a generator is inhomogeneous, zero, or of
// degree above the bound.
GBResult truncated_buchberger(const NCContext& ctx, const std::vector<NCPoly>& gens,
                              int degree_bound);

// Deterministic remainder of p modulo the basis: repeatedly rewrites the
// largest reducible monomial, choosing the leftmost match and, among matches
// at one position, the lowest basis index.  If cofactors is non-null, appends
// the reduction steps so that p = sum(coeff * left * basis[i] * right) + result.
NCPoly normal_form(const NCContext& ctx, const NCPoly& p, const std::vector<NCPoly>& basis,
                   std::vector<CofactorStep>* cofactors = nullptr);

struct MembershipLine {
  std::string name;
  NCPoly target;
  NCPoly residual;
  bool in_ideal = false;
};

std::vector<MembershipLine> membership_report(
    const NCContext& ctx, const GBResult& gb,
    const std::vector<std::pair<std::string, NCPoly>>& targets);

// Named generator presets.  Each returns its own context (alphabet) plus the
// defining relations of the corresponding matrix system.
struct PresetSystem {
  std::string name;
  NCContext ctx;
  std::vector<NCPoly> generators;
};

// names: s4, s2, s3, s21, remark121
PresetSystem preset_system(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace psmat
