#pragma once

#include <string>

#include "quasitoric/atlas.hpp"
#include "quasitoric/kahler.hpp"
#include "quasitoric/kempfness.hpp"
#include "quasitoric/lattice.hpp"
#include "quasitoric/moment.hpp"
#include "quasitoric/polytope.hpp"

namespace quasitoric {

/// Everything constructed from one validated polytope spec: combinatorics,
/// kernel data, the vertex atlas and the moment-map data.
struct Quasifold {
    PolytopeData polytope;
    QuasilatticeData quasilattice;
    std::vector<VertexData> vertices;
    std::set<IndexSet> faces;
    KernelBasis kernel;
    Atlas atlas;
    MomentMap moment;
    Tolerances tol;

    const VertexChart& chart(int id) const { return atlas.charts[static_cast<size_t>(id)]; }
    int chart_count() const { return static_cast<int>(atlas.charts.size()); }

    std::optional<IndexSet> membership(const CVec& z) const {
        IndexSet zero;
        for (int j = 0; j < polytope.d; ++j)
            if (std::abs(z[j]) <= tol.geom) zero.push_back(j);
        if (faces.count(zero)) return zero;
        return std::nullopt;
    }

    /// Chart whose domain contains z, preferring the one whose off-vertex
    /// coordinates stay farthest from zero. Throws DomainError if z is not
    /// in the admissible set.
    int chart_for(const CVec& z) const;

    /// Level-set projection with the admissibility check of the contract.
    ProjectionResult project(const CVec& z, const SolverOptions& opts = {}) const;
};

Quasifold build_quasifold(const ParsedSpec& spec, const Tolerances& tol = {});

}  // namespace quasitoric
