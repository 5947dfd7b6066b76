#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quasitoric/lattice.hpp"
#include "quasitoric/polytope.hpp"
#include "quasitoric/types.hpp"

namespace quasitoric {

/// Complex-side chart at a vertex: the tubular neighborhood
/// { z : z_j != 0 for j off I }, the base point with ones off I and zeros
/// on I, the slice C^I, and the discrete chart group acting on it.
struct VertexChart {
    int id = 0;
    VertexData vertex;
    CVec base_point;  // in C^d
    VertexBasis basis;
    IndexSet off_indices;  // complement of the vertex index set
    Mat off_coeffs;        // n x |off|, column c = vertex-basis coeffs of X_{off[c]}
    std::vector<ChartGroupElement> group_generators;

    const IndexSet& index_set() const { return vertex.active; }

    /// Membership in the chart's tubular domain.
    bool in_domain(const CVec& z, double eps_geom) const;

    /// Ambient representative base_point + embedded slice coordinates.
    CVec ambient(const CVec& slice_coords) const;

    /// Phase vector of an integer word over the group generators.
    Vec word_phase(const IVec& word) const;

    /// Apply a phase vector (slice coordinates rotate by exp(2 pi i c_j)).
    CVec apply_phase(const Vec& phase, const CVec& slice_coords) const;
};

/// Point of the slice at a chart, always read modulo the chart group.
struct SlicePoint {
    int chart = 0;
    CVec coords;  // length n, ordered by sorted I
};

/// Point of the universal cover attached to an ordered chart pair: honest
/// coordinates on the shared indices, logarithmic coordinates on the rest.
/// Projects to the slice as (z, exp(2 pi i zeta)).
struct CoverPoint {
    int chart_from = 0;
    int chart_to = 0;
    CVec z_part;     // on I cap J
    CVec zeta_part;  // on I minus J (logarithmic)
};

/// Transition data for an ordered chart pair (mu, nu): the linear solve of
/// the mu-only normals in the nu vertex basis, split into the block acting
/// on shared coordinates and the block producing new log coordinates.
struct ChartTransition {
    int from = 0;
    int to = 0;
    IndexSet shared;     // I cap J
    IndexSet log_from;   // I minus J
    IndexSet log_to;     // J minus I
    Mat shared_block;    // |shared| x |log_from|
    Mat log_block;       // |log_to| x |log_from|
};

VertexChart build_chart(int id, const VertexData& vertex, const Mat& normals,
                        const QuasilatticeData& q, double eps_geom);

ChartTransition build_transition(const VertexChart& from, const VertexChart& to,
                                 const Mat& normals);

/// Slice coordinates of the unique (mod chart group) kernel-group translate
/// of z whose off-I coordinates equal one. Principal-branch logarithms; the
/// branch ambiguity is exactly a chart-group word.
SlicePoint to_slice(const CVec& z, const VertexChart& chart, double eps_geom);

/// Cover-level transition map for the ordered pair. The zeta part must be
/// supported on from.I minus to.I.
CoverPoint apply_transition(const ChartTransition& t, const CoverPoint& x);

/// Slice-level transition: lift with principal branches, apply, project.
/// Requires nonzero coordinates on from.I minus to.I.
SlicePoint slice_transition(const ChartTransition& t, const VertexChart& from,
                            const VertexChart& to, const SlicePoint& s, double eps_geom);

/// Action of the complexified quasitorus parameter W in C^n on a slice
/// point: coordinates multiply by exp(2 pi i u_j) for u the vertex-basis
/// coefficients of W.
SlicePoint torus_act(const CVec& W, const SlicePoint& s, const VertexChart& chart);

struct ModelMatch {
    ChartGroupElement word;
    double residual = 0.0;  // max coordinate distance under the found word
};

/// Search for an integer chart-group word (entries bounded by `radius`)
/// carrying coords1 to coords2 within eps. Returns the best word or nullopt.
std::optional<ModelMatch> match_mod_group(const CVec& coords1, const CVec& coords2,
                                          const VertexChart& chart, int radius, double eps);

/// Same search on slice points; both must live in the same chart.
std::optional<ModelMatch> same_model_point(const SlicePoint& s1, const SlicePoint& s2,
                                           const VertexChart& chart, int radius, double eps);

/// Atlas over all vertices plus transitions for every ordered pair (all
/// chart domains share the dense orbit, so every pair overlaps).
struct Atlas {
    std::vector<VertexChart> charts;
    std::map<std::pair<int, int>, ChartTransition> transitions;

    const ChartTransition& transition(int from, int to) const {
        return transitions.at({from, to});
    }
};

Atlas build_atlas(const PolytopeData& p, const QuasilatticeData& q, double eps_geom);

}  // namespace quasitoric
