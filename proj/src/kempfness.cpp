#include "quasitoric/kempfness.hpp"

#include <cmath>

namespace quasitoric {

namespace {

constexpr double kFourPi = 2.0 * kTwoPi;

Vec scaled_moment(const CVec& z, const Vec& Y, const MomentMap& mm) {
    Vec exponent = mm.B * Y;
    Vec out(z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j)
        out[j] = std::exp(-kFourPi * exponent[j]) * std::norm(z[j]) + mm.offsets[j];
    return out;
}

}  // namespace

Vec orbit_moment_gradient(const CVec& z, const Vec& Y, const MomentMap& mm) {
    return mm.B.transpose() * scaled_moment(z, Y, mm);
}

double orbit_potential(const CVec& z, const Vec& Y, const MomentMap& mm) {
    Vec exponent = mm.B * Y;
    double value = 0.0;
    for (Eigen::Index j = 0; j < z.size(); ++j)
        value += -std::exp(-kFourPi * exponent[j]) * std::norm(z[j]) / kFourPi +
                 mm.offsets[j] * exponent[j];
    return value;
}

ProjectionResult project_to_level(const CVec& z, const MomentMap& mm, const SolverOptions& opts) {
    const int m = mm.dim();
    Vec Y = opts.initial_guess.size() == m ? opts.initial_guess : Vec::Zero(m);
    Vec f = orbit_moment_gradient(z, Y, mm);
    double fnorm = f.norm();
    int it = 0;
    while (fnorm > opts.tol_psi && it < opts.max_iterations) {
        // Jacobian of f: -4 pi B^T diag(exp(-4 pi (BY)_j)|z_j|^2) B,
        // negative definite wherever the nonzero coordinates span.
        Vec exponent = mm.B * Y;
        Vec weights(z.size());
        for (Eigen::Index j = 0; j < z.size(); ++j)
            weights[j] = kFourPi * std::exp(-kFourPi * exponent[j]) * std::norm(z[j]);
        Mat neg_jac = mm.B.transpose() * weights.asDiagonal() * mm.B;  // = -f'
        Eigen::LDLT<Mat> ldlt(neg_jac);
        if (ldlt.info() != Eigen::Success)
            throw SolverError("projection solver: singular step (point outside the admissible set?)",
                              fnorm, it);
        Vec step = ldlt.solve(f);
        double t = 1.0;
        Vec y_next;
        Vec f_next = f;
        double fnorm_next = fnorm;
        for (int backtrack = 0; backtrack < 60; ++backtrack) {
            y_next = Y + t * step;
            f_next = orbit_moment_gradient(z, y_next, mm);
            fnorm_next = f_next.norm();
            if (fnorm_next < fnorm * (1.0 - 0.25 * t)) break;
            t *= 0.5;
        }
        if (fnorm_next >= fnorm)
            throw SolverError("projection solver stalled", fnorm, it);
        Y = y_next;
        f = f_next;
        fnorm = fnorm_next;
        ++it;
    }
    if (fnorm > opts.tol_psi)
        throw SolverError("projection solver did not converge", fnorm, it);

    ProjectionResult out;
    out.coeffs = Y;
    out.residual = fnorm;
    out.iterations = it;
    Vec exponent = mm.B * Y;
    out.point.resize(z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j)
        out.point[j] = std::exp(-0.5 * kFourPi * exponent[j]) * z[j];
    return out;
}

SlicePoint to_complex_slice(const VertexChart& chart, const SymplecticSlicePoint& w,
                            const Vec& offsets) {
    Vec squares = pad_squares(chart, w.coords, offsets);
    if ((squares.array() <= 0.0).any())
        throw DomainError("point is outside the symplectic slice domain");
    Vec log_coords = squares.array().log() / kFourPi;
    Vec u = chart.off_coeffs * log_coords;
    SlicePoint out;
    out.chart = chart.id;
    out.coords.resize(w.coords.size());
    for (Eigen::Index i = 0; i < w.coords.size(); ++i)
        out.coords[i] = std::exp(kTwoPi * u[i]) * w.coords[i];
    return out;
}

InverseLiftResult to_symplectic_slice(const VertexChart& chart, const SlicePoint& z,
                                      const MomentMap& mm, int radius, double eps_geom,
                                      const SolverOptions& opts) {
    InverseLiftResult out;
    CVec ambient = chart.ambient(z.coords);
    out.projection = project_to_level(ambient, mm, opts);
    const CVec& level = out.projection.point;

    // Compact rotation making the off-I coordinates positive real: phases
    // live off I, the induced vertex-basis coefficients rotate the slice.
    CVec v_off(static_cast<Eigen::Index>(chart.off_indices.size()));
    for (size_t c = 0; c < chart.off_indices.size(); ++c)
        v_off[static_cast<Eigen::Index>(c)] =
            Complex(-std::arg(level[chart.off_indices[c]]) / kTwoPi, 0.0);
    Vec u = chart.off_coeffs * v_off.real();

    const IndexSet& I = chart.index_set();
    SymplecticSlicePoint w;
    w.chart = chart.id;
    w.coords.resize(static_cast<Eigen::Index>(I.size()));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(I.size()); ++i) {
        double c = -u[i];
        w.coords[i] =
            Complex(std::cos(kTwoPi * c), std::sin(kTwoPi * c)) * level[I[static_cast<size_t>(i)]];
    }

    // Normalize the branch: pick the chart-group translate whose forward
    // lift reproduces the input slice point.
    SlicePoint forward = to_complex_slice(chart, w, mm.offsets);
    auto match = same_model_point(forward, z, chart, radius, 1e-7);
    if (match) {
        w.coords = chart.apply_phase(match->word.phase, w.coords);
        out.branch_word = match->word;
    }
    out.point = w;
    return out;
}

LiftJacobian lift_jacobian(const VertexChart& chart, const SymplecticSlicePoint& w,
                           const Vec& offsets, double fd_step) {
    const Eigen::Index n = w.coords.size();
    Vec base = realify(w.coords);
    auto eval = [&](const Vec& x) {
        SymplecticSlicePoint p;
        p.chart = w.chart;
        p.coords = complexify(x);
        if (!in_symplectic_domain(chart, p.coords, offsets))
            throw DomainError("finite-difference stencil leaves the symplectic slice domain");
        return realify(to_complex_slice(chart, p, offsets).coords);
    };
    LiftJacobian out;
    out.matrix.resize(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
        Vec xp = base, xm = base;
        xp[k] += fd_step;
        xm[k] -= fd_step;
        out.matrix.col(k) = (eval(xp) - eval(xm)) / (2.0 * fd_step);
    }
    Mat sym = 0.5 * (out.matrix + out.matrix.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> eig(sym);
    out.min_eigenvalue = eig.eigenvalues().minCoeff();
    out.positive_definite = out.min_eigenvalue > 0.0;
    return out;
}

}  // namespace quasitoric
