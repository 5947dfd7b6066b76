#pragma once

#include <optional>

#include "quasitoric/atlas.hpp"
#include "quasitoric/moment.hpp"
#include "quasitoric/types.hpp"

namespace quasitoric {

/// Options of the damped Newton solver that zeroes the moment gradient
/// along a stretch orbit.
struct SolverOptions {
    double tol_psi = 1e-10;
    int max_iterations = 200;
    Vec initial_guess;  // empty means zero
};

struct ProjectionResult {
    CVec point;    // the level-set representative on the stretch orbit
    Vec coeffs;    // kernel-basis coefficients Y* of the stretch element
    double residual = 0.0;
    int iterations = 0;
};

/// Value of the orbit moment gradient at stretch parameter Y:
///   f(Y) = B^T ( exp(-4 pi (BY)_j) |z_j|^2 + lambda_j )_j .
/// Zero exactly at the unique level-set point of the stretch orbit of z.
Vec orbit_moment_gradient(const CVec& z, const Vec& Y, const MomentMap& mm);

/// The strictly concave potential whose gradient the solver zeroes:
///   F(Y) = sum_j ( -(1/4pi) exp(-4 pi (BY)_j) |z_j|^2 + lambda_j (BY)_j ).
double orbit_potential(const CVec& z, const Vec& Y, const MomentMap& mm);

/// Move z along its stretch orbit to the unique zero-level point. Damped
/// Newton from Y = 0 with backtracking on the residual norm; throws
/// SolverError on non-convergence.
ProjectionResult project_to_level(const CVec& z, const MomentMap& mm,
                                  const SolverOptions& opts = {});

/// Closed-form chart lift of the symplectic-to-complex identification:
/// slice coordinates scale by exp(2 pi u_j) for u the vertex-basis
/// coefficients of sum_h (1/4pi) log(A_h) X_h over the off-I facets.
SlicePoint to_complex_slice(const VertexChart& chart, const SymplecticSlicePoint& w,
                            const Vec& offsets);

struct InverseLiftResult {
    SymplecticSlicePoint point;
    std::optional<ChartGroupElement> branch_word;  // word matching the forward lift to the input
    ProjectionResult projection;
};

/// Inverse chart lift: complete the slice point to an ambient point,
/// project to the level set, rotate the off-I coordinates positive real
/// with a compact kernel element, strip the pad, and normalize the
/// chart-group branch so the forward lift reproduces the input when a word
/// within `radius` exists.
InverseLiftResult to_symplectic_slice(const VertexChart& chart, const SlicePoint& z,
                                      const MomentMap& mm, int radius, double eps_geom,
                                      const SolverOptions& opts = {});

struct LiftJacobian {
    Mat matrix;  // 2n x 2n, realified
    bool positive_definite = false;
    double min_eigenvalue = 0.0;
};

/// Central finite-difference Jacobian of the forward chart lift at w,
/// symmetrized and tested for positive definiteness. Throws DomainError if
/// the stencil leaves the slice domain.
LiftJacobian lift_jacobian(const VertexChart& chart, const SymplecticSlicePoint& w,
                           const Vec& offsets, double fd_step);

}  // namespace quasitoric
