#pragma once

#include "quasitoric/kempfness.hpp"
#include "quasitoric/moment.hpp"
#include "quasitoric/types.hpp"

namespace quasitoric {

/// Tangent data of the zero level set at a point: a basis of the level
/// tangent space, the orbit directions of the compact kernel group, and an
/// orthonormal horizontal complement (Euclidean metric of the realified
/// ambient space). All bases are stored as columns of realified vectors.
struct TangentFrame {
    CVec base;
    Mat level_basis;       // 2d x (d+n)
    Mat orbit_basis;       // 2d x (d-n)
    Mat horizontal_basis;  // 2d x 2n, orthonormal
};

TangentFrame tangent_frame(const CVec& level_point, const MomentMap& mm, double eps_lin);

/// The ambient symplectic form normalized so the coordinatewise circle
/// actions of period one have moment functions |z_j|^2 + const:
///   omega_0(u, v) = (1/pi) sum_j (u_xj v_yj - u_yj v_xj).
double ambient_form(const Vec& u, const Vec& v);

/// Reduced symplectic form at a level point: project both arguments to the
/// horizontal space and evaluate the ambient form.
double reduced_form(const TangentFrame& frame, const Vec& u, const Vec& v);

struct FormSample {
    double form = 0.0;    // omega(u, v)
    double metric = 0.0;  // omega(u, i v)
};

/// Evaluate the induced form on a complex chart at a slice point, on chart
/// tangent vectors u, v (realified, length 2n). The vectors are carried to
/// the level set through the inverse lift (computed as the inverse of the
/// finite-difference forward-lift Jacobian at the matched branch) composed
/// with the pad completion.
FormSample kahler_eval(const VertexChart& chart, const SlicePoint& z, const Vec& u, const Vec& v,
                       const MomentMap& mm, const Tolerances& tol,
                       const SolverOptions& opts = {});

/// Closed-form coefficient of the chart form for a one-dimensional polytope
/// (two facets), evaluated on the standard real frame at slice coordinate z.
/// Derived from the radial forward lift; depends on |z| only.
double interval_form_coefficient(const VertexChart& chart, const Mat& normals,
                                 const Vec& offsets, Complex z);

/// The same form pulled back to the logarithmic cover coordinate zeta of a
/// chart pair of the one-dimensional polytope, on the standard real frame.
double interval_cover_form(const VertexChart& chart, const Mat& normals, const Vec& offsets,
                           Complex zeta);

}  // namespace quasitoric
