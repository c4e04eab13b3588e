// Deterministic JSON documents for the CLI and bindings.

#pragma once

#include "gradedlie/parastat.hpp"
#include "gradedlie/structure.hpp"
#include "gradedlie/verify.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include <string>

namespace gradedlie {

/// Insertion-ordered so that key order is fixed by the writer.
using Json = nlohmann::ordered_json;

Json to_json(Degree d);
/// {"r":"p/q","s":"p/q"}.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// [[i, j, scalar], ...] with 1-based indices, row-major.
Json sparse_entries(const Matrix& m);
/// Inverse of sparse_entries for an n x n matrix. Throws Error(Parse).
Matrix matrix_from_sparse(const Json& j, std::size_t n);

/// {"family":..., "params":[...]} plus "partition" when the spec carries one.
Json to_json(const AlgebraSpec& spec);

/// Algebra header keyed by `source` ("algebra" or "generated_from") followed by
/// convention, sizes, graded dimensions and the basis.
Json algebra_document(const AlgebraBasis& a, const std::string& source, const Json& header);
Json build_document(const AlgebraBasis& a);

Json to_json(const RootDatum& r);
/// Root decomposition with positive and simple roots. Coordinates are named "eps" for
/// so_q, "delta" for osp and "h" otherwise.
Json roots_document(const AlgebraBasis& a, const RootDecomposition& dec,
                    const PositiveSystem& pos);

/// {"relation", "family", "params", "checked", "failures"}.
Json to_json(const GeneratorFamily& fam, const RelationReport& rep);

Json to_json(const CheckResult& c);
Json to_json(const AlgebraSpec& spec, const VerificationReport& rep);

/// {"dimension", "convention", "degrees", "constants":[{"a","b","c","value"}]},
/// indices 1-based, records sorted by (a, b, c).
Json to_json(const StructureConstants& c);
/// Throws Error(Parse) on malformed documents.
StructureConstants structure_constants_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

} // namespace gradedlie
