#pragma once

#include <vector>

#include "quasitoric/quasifold.hpp"
#include "quasitoric/report.hpp"

namespace quasitoric {

struct RunConfig {
    Tolerances tol;
    SolverOptions solver;
    int samples = 100;
    std::uint64_t seed = 1;
};

/// Random point of the polytope: a strictly positive convex combination of
/// the vertices.
Vec sample_polytope_point(const Quasifold& q, Rng& rng);

/// Random admissible ambient point: zeros on a randomly chosen face index
/// set (the empty set half of the time), free magnitudes and phases off it.
CVec sample_admissible_point(const Quasifold& q, Rng& rng, bool allow_zeros = true);

/// Random point of a chart's symplectic slice, built from a polytope point
/// so every pad square is positive by construction.
SymplecticSlicePoint sample_symplectic_point(const Quasifold& q, int chart_id, Rng& rng);

/// Whether two generating sets of phase vectors generate the same group of
/// phases modulo integers, compared on all words with entries bounded by
/// `radius`.
bool phase_groups_match(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                        int radius, double eps);

/// One evaluation context for the induced form on a chart: the inverse lift
/// and both finite-difference Jacobians are computed once, then form and
/// metric values are cheap per vector pair.
class ChartFormEvaluator {
public:
    ChartFormEvaluator(const VertexChart& chart, const SlicePoint& z, const MomentMap& mm,
                       const Tolerances& tol, const SolverOptions& opts = {});

    double form(const Vec& u, const Vec& v) const;    // omega(u, v)
    double metric(const Vec& u, const Vec& v) const;  // omega(u, i v)

    const TangentFrame& frame() const { return frame_; }
    const Mat& carry() const { return carry_; }

private:
    Mat carry_;  // 2d x 2n pushforward to the level tangent space
    TangentFrame frame_;
};

namespace checks {

// polytope
CheckRecord vertex_equations(const Quasifold& q);
CheckRecord union_property(const Quasifold& q, Rng& rng, int samples);

// lattice
CheckRecord kernel_residual(const Quasifold& q);
CheckRecord dual_exactness(const Quasifold& q);
CheckRecord face_injectivity(const Quasifold& q);
CheckRecord stretch_fixes_nothing(const Quasifold& q);
CheckRecord kernel_parametrization(const Quasifold& q, Rng& rng, int samples);
CheckRecord polar_recomposition(const Quasifold& q, Rng& rng, int samples);

// atlas
CheckRecord chart_cover(const Quasifold& q, Rng& rng, int samples);
CheckRecord slice_equivariance(const Quasifold& q, Rng& rng, int samples);
CheckRecord transition_equivariance(const Quasifold& q, Rng& rng, int samples);
CheckRecord cocycle(const Quasifold& q, Rng& rng, int samples_per_triple);
CheckRecord offset_independence(const Quasifold& q, double inflate);
CheckRecord free_action_spot(const Quasifold& q, Rng& rng, int samples);
CheckRecord torus_action_checks(const Quasifold& q, Rng& rng, int samples);

// moment
CheckRecord level_membership(const Quasifold& q, Rng& rng, int samples);
CheckRecord compact_invariance(const Quasifold& q, Rng& rng, int samples);
CheckRecord stretch_monotone(const Quasifold& q, Rng& rng, int samples);
CheckRecord pad_level(const Quasifold& q, Rng& rng, int samples);

// level projection
CheckRecord projection_sweep(const Quasifold& q, Rng& rng, int samples,
                             const SolverOptions& opts);
CheckRecord projection_idempotent(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts);
CheckRecord projection_stretch_invariance(const Quasifold& q, Rng& rng, int samples,
                                          const SolverOptions& opts);
CheckRecord gradient_consistency(const Quasifold& q, Rng& rng, int samples);
CheckRecord hessian_negative(const Quasifold& q, Rng& rng, int samples);
CheckRecord projection_uniqueness(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts);

// chart lifts
CheckRecord lift_roundtrip(const Quasifold& q, Rng& rng, int samples_per_chart,
                           const SolverOptions& opts);
CheckRecord lift_torus_equivariance(const Quasifold& q, Rng& rng, int samples,
                                    const SolverOptions& opts);
CheckRecord lift_group_equivariance(const Quasifold& q, Rng& rng, int samples);
CheckRecord lift_jacobian_definite(const Quasifold& q, Rng& rng, int samples_per_chart);

// induced form
CheckRecord form_compatibility(const Quasifold& q, Rng& rng, int samples,
                               const SolverOptions& opts);
CheckRecord form_orbit_degeneracy(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts);
CheckRecord form_type_invariance(const Quasifold& q, Rng& rng, int samples,
                                 const SolverOptions& opts);
CheckRecord form_chart_coherence(const Quasifold& q, Rng& rng, int samples,
                                 const SolverOptions& opts);
CheckRecord form_closedness(const Quasifold& q, Rng& rng, int points,
                            const SolverOptions& opts);

// two-facet segments only (otherwise skipped)
CheckRecord segment_closed_form_match(const Quasifold& q, Rng& rng, int samples,
                                      const SolverOptions& opts);
CheckRecord segment_pullback_identity(const Quasifold& q, Rng& rng, int samples);
CheckRecord segment_cover_transition(const Quasifold& q, Rng& rng, int samples);

// informational
CheckRecord trivial_groups(const Quasifold& q);

}  // namespace checks

/// The full verification suite on one quasifold, deterministic in
/// (spec, config, seed).
std::vector<CheckRecord> verify_quasifold(const Quasifold& q, const RunConfig& cfg);

}  // namespace quasitoric
