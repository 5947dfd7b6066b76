#include "quasitoric/kahler.hpp"

#include <cmath>

namespace quasitoric {

namespace {

constexpr double kPi = 0.5 * kTwoPi;

}  // namespace

TangentFrame tangent_frame(const CVec& level_point, const MomentMap& mm, double eps_lin) {
    const Eigen::Index d = level_point.size();
    const Eigen::Index m = mm.dim();  // d - n
    const Eigen::Index n = d - m;

    // Differential of the kernel moment map at the base point.
    Mat dpsi(m, 2 * d);
    for (Eigen::Index k = 0; k < m; ++k)
        for (Eigen::Index j = 0; j < d; ++j) {
            dpsi(k, 2 * j) = 2.0 * mm.B(j, k) * level_point[j].real();
            dpsi(k, 2 * j + 1) = 2.0 * mm.B(j, k) * level_point[j].imag();
        }

    TangentFrame frame;
    frame.base = level_point;

    Eigen::JacobiSVD<Mat> svd(dpsi, Eigen::ComputeFullV);
    frame.level_basis = svd.matrixV().rightCols(2 * d - m);

    // Orbit directions of the compact kernel group: the velocity of the
    // coordinatewise rotation with weight vector B e_k.
    frame.orbit_basis.resize(2 * d, m);
    for (Eigen::Index k = 0; k < m; ++k)
        for (Eigen::Index j = 0; j < d; ++j) {
            double w = kTwoPi * mm.B(j, k);
            frame.orbit_basis(2 * j, k) = -w * level_point[j].imag();
            frame.orbit_basis(2 * j + 1, k) = w * level_point[j].real();
        }

    // Orthonormal horizontal complement of the orbit inside the level
    // tangent space.
    Eigen::HouseholderQR<Mat> qr(frame.orbit_basis);
    Mat orbit_q = qr.householderQ() * Mat::Identity(2 * d, m);
    Mat projected = frame.level_basis - orbit_q * (orbit_q.transpose() * frame.level_basis);
    Eigen::JacobiSVD<Mat> hsvd(projected, Eigen::ComputeThinU);
    const auto& sv = hsvd.singularValues();
    if (sv.size() < 2 * n || sv[2 * n - 1] <= eps_lin)
        throw ValidationError("horizontal space is rank-deficient at the level point");
    frame.horizontal_basis = hsvd.matrixU().leftCols(2 * n);
    return frame;
}

double ambient_form(const Vec& u, const Vec& v) {
    double value = 0.0;
    for (Eigen::Index j = 0; j + 1 < u.size(); j += 2)
        value += u[j] * v[j + 1] - u[j + 1] * v[j];
    return value / kPi;
}

double reduced_form(const TangentFrame& frame, const Vec& u, const Vec& v) {
    const Mat& H = frame.horizontal_basis;
    Vec uh = H * (H.transpose() * u);
    Vec vh = H * (H.transpose() * v);
    return ambient_form(uh, vh);
}

FormSample kahler_eval(const VertexChart& chart, const SlicePoint& z, const Vec& u, const Vec& v,
                       const MomentMap& mm, const Tolerances& tol, const SolverOptions& opts) {
    auto inverse = to_symplectic_slice(chart, z, mm, tol.radius, tol.geom, opts);
    const SymplecticSlicePoint& w = inverse.point;

    LiftJacobian forward = lift_jacobian(chart, w, mm.offsets, tol.fd_step);
    Eigen::PartialPivLU<Mat> lu(forward.matrix);
    Vec a = lu.solve(u);
    Vec b = lu.solve(v);
    Vec b_rot = lu.solve(rotate_realified(v));

    // Finite-difference Jacobian of the pad completion w -> w + pad(w).
    const Eigen::Index n = w.coords.size();
    Vec base = realify(w.coords);
    auto pad_eval = [&](const Vec& x) {
        SymplecticSlicePoint p;
        p.chart = w.chart;
        p.coords = complexify(x);
        return realify(symplectic_pad(chart, p, mm.offsets));
    };
    Mat pad_jac(2 * mm.d(), 2 * n);
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
        Vec xp = base, xm = base;
        xp[k] += tol.fd_step;
        xm[k] -= tol.fd_step;
        pad_jac.col(k) = (pad_eval(xp) - pad_eval(xm)) / (2.0 * tol.fd_step);
    }

    CVec level = symplectic_pad(chart, w, mm.offsets);
    TangentFrame frame = tangent_frame(level, mm, tol.lin);

    FormSample out;
    out.form = reduced_form(frame, pad_jac * a, pad_jac * b);
    out.metric = reduced_form(frame, pad_jac * a, pad_jac * b_rot);
    return out;
}

namespace {

struct IntervalChartData {
    double a = 0.0;         // coefficient of the off facet normal over the vertex normal
    double lambda_in = 0.0;  // offset of the vertex facet
    double lambda_off = 0.0;
    double r_max = 0.0;  // slice domain is { |w|^2 < r_max }

    double pad_square(double r) const { return a * (r + lambda_in) - lambda_off; }

    /// Squared magnitude of the forward lift, R = r * pad_square(r)^a.
    double forward(double r) const { return r * std::pow(pad_square(r), a); }

    double forward_slope(double r) const {
        double A = pad_square(r);
        return std::pow(A, a - 1.0) * (A + a * a * r);
    }

    /// Monotone inversion of forward() by bisection.
    double invert(double R) const {
        if (R <= 0.0) return 0.0;
        double lo = 0.0, hi = r_max * (1.0 - 1e-15);
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            if (forward(mid) < R)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }
};

IntervalChartData interval_chart_data(const VertexChart& chart, const Mat& normals,
                                      const Vec& offsets) {
    if (normals.cols() != 1 || normals.rows() != 2)
        throw DomainError("closed-form chart coefficients exist only for two-facet segments");
    IntervalChartData data;
    int i0 = chart.index_set()[0];
    int h = chart.off_indices[0];
    data.a = normals(h, 0) / normals(i0, 0);
    data.lambda_in = offsets[i0];
    data.lambda_off = offsets[h];
    data.r_max = (data.lambda_off - data.a * data.lambda_in) / data.a;
    if (!(data.a < 0.0) || !(data.r_max > 0.0))
        throw DomainError("segment chart data is degenerate");
    return data;
}

}  // namespace

double interval_form_coefficient(const VertexChart& chart, const Mat& normals,
                                 const Vec& offsets, Complex z) {
    IntervalChartData data = interval_chart_data(chart, normals, offsets);
    double r = data.invert(std::norm(z));
    return 1.0 / (kPi * data.forward_slope(r));
}

double interval_cover_form(const VertexChart& chart, const Mat& normals, const Vec& offsets,
                           Complex zeta) {
    Complex z = std::exp(Complex(0, kTwoPi) * zeta);
    double coeff = interval_form_coefficient(chart, normals, offsets, z);
    return coeff * kTwoPi * kTwoPi * std::norm(z);
}

}  // namespace quasitoric
