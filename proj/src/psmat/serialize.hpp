#pragma once

// JSON encoding of matrices, solution bundles, and verification context.
//
// Scalars: rationals are strings "p/q" (or "p"); number-field elements are
// arrays of rational strings, low degree first; reals are JSON numbers;
// complex values are [re, im] pairs.
//
// Matrix:
//   {"field": {"kind": "Q"}
//           | {"kind": "NF", "min_poly": ["c0", ..., "1"]}
//           | {"kind": "R"} | {"kind": "C"},
//    "nrows": n, "ncols": m, "entries": [[elem, ...], ...]}   (rows)
//
// Solution bundles share a "kind" discriminator:
//   triple: {"kind": "triple", "constructor": name, "case": tag?,
//            "params": {"alpha": e, "beta": e, "gamma": e},
//            "matrices": {"a": M, "b": M, "c": M}, "rhs": [M, M, M]?}
//   quad:   {"kind": "quad", "constructor": name, "alphas": [e, e, e, e],
//            "matrices": {"a": M, "b": M, "c": M, "d": M}}
//   pair:   {"kind": "pair", "constructor": name, "matrices": {"a": M, "b": M}}
// A matrix of number-field elements that all happen to be rational is written
// with field kind "Q" and reloads as a rational matrix.
//
// Context for relation checks: {"u": M, "v": M?}.

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "psmat/construct.hpp"

namespace psmat {

using Json = nlohmann::json;

Json mat_to_json(const Mat<Rat>& m);
Json mat_to_json(const Mat<NFElem>& m);
Json mat_to_json(const Mat<double>& m);
Json mat_to_json(const Mat<Cplx>& m);

using AnyMat = std::variant<Mat<Rat>, Mat<NFElem>, Mat<double>, Mat<Cplx>>;

// Decodes any matrix; throws std::invalid_argument naming the first schema
// violation found.
AnyMat mat_from_json(const Json& j);

// Decodes a matrix that must be rational (field kind "Q").
Mat<Rat> mat_rat_from_json(const Json& j);

Json triple_to_json(const SolutionTriple<Rat>& t);
Json triple_to_json(const SolutionTriple<NFElem>& t);
Json triple_to_json(const SolutionTriple<double>& t);
Json triple_to_json(const SolutionTriple<Cplx>& t);
Json quad_to_json(const SolutionQuad<Rat>& q);
Json quad_to_json(const SolutionQuad<NFElem>& q);
Json quad_to_json(const SolutionQuad<Cplx>& q);
Json pair_to_json(const SolutionPair<Rat>& p);
Json usolve_to_json(const USolveResult& u);

using AnyTriple = std::variant<SolutionTriple<Rat>, SolutionTriple<NFElem>,
                               SolutionTriple<double>, SolutionTriple<Cplx>>;
using AnyQuad =
    std::variant<SolutionQuad<Rat>, SolutionQuad<NFElem>, SolutionQuad<Cplx>>;

// One decoded solution file: exactly one of triple/quad/pair is set, per the
// "kind" discriminator; rhs accompanies numeric triples produced by the
// U-valued solver (their system check uses matrix right-hand sides instead
// of scalar params).
struct LoadedSolution {
  std::string kind;
  std::optional<AnyTriple> triple;
  std::optional<AnyQuad> quad;
  std::optional<SolutionPair<Rat>> pair;
  std::optional<std::array<Mat<double>, 3>> rhs;
};

LoadedSolution solution_from_json(const Json& j);

struct LoadedContext {
  std::optional<AnyMat> u, v;
};

LoadedContext context_from_json(const Json& j);

// File I/O with diagnostics that name the path; parse errors become
// std::invalid_argument.
Json json_parse_file(const std::string& path);
void json_write_file(const std::string& path, const Json& j);

}  // namespace psmat
