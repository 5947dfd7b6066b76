#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quasitoric/types.hpp"

namespace quasitoric {

/// H-representation of a simple convex polytope
///   Delta = { mu in R^n : <mu, X_j> >= lambda_j, j = 1..d }
/// with inward-pointing facet normals X_j (rows of `normals`).
struct PolytopeData {
    int n = 0;  // ambient dimension
    int d = 0;  // facet count
    Mat normals;  // d x n, row j = X_j
    Vec offsets;  // d

    Vec normal(int j) const { return normals.row(j).transpose(); }

    /// Slack vector <mu, X_j> - lambda_j for all facets.
    Vec slacks(const Vec& mu) const { return normals * mu - offsets; }

    bool member(const Vec& mu, double eps) const {
        return (slacks(mu).array() >= -eps).all();
    }
};

struct VertexData {
    Vec point;
    IndexSet active;  // facets meeting the vertex, sorted, 0-based
};

/// Tolerant vertex scan that accepts non-simple vertices (active sets larger
/// than n). Used for validation and non-simplicity diagnosis.
std::vector<VertexData> scan_vertices(const PolytopeData& p, double eps_geom);

/// Throws if the data violates any invariant: a zero normal, an empty or
/// unbounded polytope, or an inessential facet. Non-simple vertices are
/// allowed here; they are rejected by enumerate_vertices.
void validate(const PolytopeData& p, double eps_geom);

/// All vertices of a validated polytope, each with exactly n active facets,
/// sorted by active set. Throws NonSimpleError with the witness vertex if
/// more than n facets meet anywhere.
std::vector<VertexData> enumerate_vertices(const PolytopeData& p, double eps_geom);

/// Index sets I_F of the nonempty faces of a simple polytope, including the
/// empty set (the interior) and all vertex sets. For a simple polytope these
/// are exactly the subsets of vertex active sets.
std::set<IndexSet> face_index_sets(const PolytopeData& p, double eps_geom);

/// Zero pattern I(z) = { j : z_j = 0 } if it is a face index set (so z lies
/// in the admissible open subset of C^d), otherwise nullopt.
std::optional<IndexSet> ambient_membership(const CVec& z, const PolytopeData& p, double eps_geom);

/// Parsed spec file: polytope plus optional quasilattice generators
/// (defaulting to the normals themselves).
struct ParsedSpec {
    PolytopeData polytope;
    Mat quasilattice;  // g x n
};

/// Parse and validate the JSON spec format described in the README.
ParsedSpec parse_spec(const std::string& text, double eps_geom = 1e-9);

}  // namespace quasitoric
