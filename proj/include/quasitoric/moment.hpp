#pragma once

#include "quasitoric/atlas.hpp"
#include "quasitoric/lattice.hpp"
#include "quasitoric/polytope.hpp"
#include "quasitoric/types.hpp"

namespace quasitoric {

/// Data for the moment maps: the kernel basis coordinatizing the dual of
/// the kernel algebra, and the facet offsets.
struct MomentMap {
    Mat B;        // d x (d-n) kernel basis
    Vec offsets;  // d

    int d() const { return static_cast<int>(B.rows()); }
    int dim() const { return static_cast<int>(B.cols()); }
};

/// Moment map of the full torus action: component j is |z_j|^2 + lambda_j.
Vec ambient_moment(const CVec& z, const Vec& offsets);

/// Moment map of the kernel subgroup action, B^T applied to the ambient
/// moment vector. Its zero level set divided by the compact kernel group is
/// the symplectic quotient.
Vec kernel_moment(const CVec& z, const MomentMap& mm);

/// Point of the zero level set over a polytope point: |z_j|^2 equals the
/// facet slack and the phases are free inputs in [0,1).
CVec level_point_from_polytope(const Vec& zeta, const Vec& phases, const PolytopeData& p,
                               double eps_geom);

/// Point of the symplectic vertex slice, read modulo the chart group.
struct SymplecticSlicePoint {
    int chart = 0;
    CVec coords;  // length n, ordered by sorted I
};

/// Pad squares A_h = sum_j a_{jh} (|w_j|^2 + lambda_j) - lambda_h for the
/// off-I facets, ordered like chart.off_indices. The slice domain is where
/// all of them are positive.
Vec pad_squares(const VertexChart& chart, const CVec& coords, const Vec& offsets);

/// Whether the symplectic slice point lies in the chart's slice domain.
bool in_symplectic_domain(const VertexChart& chart, const CVec& coords, const Vec& offsets);

/// Completed level point w + pad: off-I coordinates are the positive square
/// roots of the pad squares. Throws DomainError naming the first facet with
/// a nonpositive pad square.
CVec symplectic_pad(const VertexChart& chart, const SymplecticSlicePoint& w, const Vec& offsets);

}  // namespace quasitoric
