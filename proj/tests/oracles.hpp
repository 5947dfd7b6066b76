#pragma once

// Independent oracles used to freeze expected values. Everything here is
// deliberately written against the raw polytope data (normals, offsets)
// with its own linear algebra, not against the library's code paths.

#include <functional>
#include <set>

#include "quasitoric/types.hpp"

namespace oracles {

using quasitoric::CVec;
using quasitoric::Complex;
using quasitoric::IndexSet;
using quasitoric::Mat;
using quasitoric::Rng;
using quasitoric::Vec;

/// Bisection for a continuous function with a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
    double flo = f(lo);
    for (int i = 0; i < iterations; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// 2x2 solve by Cramer's rule: [a b; c d] x = (e, f).
inline std::pair<double, double> cramer2(double a, double b, double c, double d, double e,
                                         double f) {
    double det = a * d - b * c;
    return {(e * d - b * f) / det, (a * f - e * c) / det};
}

/// Face index sets by brute force: for each subset, solve the equality
/// system by least squares and search the solution slab for a point whose
/// remaining slacks are strictly positive.
inline std::set<IndexSet> face_sets(const Mat& normals, const Vec& offsets, double search_radius,
                                    std::uint64_t seed = 12345) {
    const int d = static_cast<int>(normals.rows());
    const int n = static_cast<int>(normals.cols());
    std::set<IndexSet> out;
    Rng rng(seed);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        IndexSet subset;
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) subset.push_back(j);
        if (static_cast<int>(subset.size()) > n) continue;

        Vec best_point;
        double best_margin = -1.0;
        if (subset.empty()) {
            // free search over the whole space
            for (int trial = 0; trial < 4000; ++trial) {
                Vec x(n);
                for (int i = 0; i < n; ++i) x[i] = rng.uniform(-search_radius, search_radius);
                double margin = (normals * x - offsets).minCoeff();
                if (margin > best_margin) {
                    best_margin = margin;
                    best_point = x;
                }
            }
        } else {
            Mat eq(static_cast<int>(subset.size()), n);
            Vec rhs(static_cast<int>(subset.size()));
            for (size_t i = 0; i < subset.size(); ++i) {
                eq.row(static_cast<Eigen::Index>(i)) = normals.row(subset[i]);
                rhs[static_cast<Eigen::Index>(i)] = offsets[subset[i]];
            }
            Eigen::JacobiSVD<Mat> svd(eq, Eigen::ComputeThinU | Eigen::ComputeThinV);
            Vec x0 = svd.solve(rhs);
            if ((eq * x0 - rhs).norm() > 1e-9) continue;  // inconsistent equalities
            Eigen::FullPivLU<Mat> lu(eq);
            lu.setThreshold(1e-10);
            Mat null_space = lu.kernel();
            bool line_space = null_space.cols() > 0 && null_space.norm() > 1e-12;
            for (int trial = 0; trial < 4000; ++trial) {
                Vec x = x0;
                if (line_space)
                    for (int c = 0; c < null_space.cols(); ++c)
                        x += rng.uniform(-search_radius, search_radius) * null_space.col(c);
                double margin = 1e300;
                for (int j = 0; j < d; ++j) {
                    if (std::binary_search(subset.begin(), subset.end(), j)) continue;
                    margin = std::min(margin, normals.row(j).dot(x) - offsets[j]);
                }
                if (margin > best_margin) {
                    best_margin = margin;
                    best_point = x;
                }
            }
        }
        if (best_margin > 1e-7) out.insert(subset);
    }
    return out;
}

/// Central finite-difference gradient.
inline Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                       double h = 1e-6) {
    Vec g(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        Vec xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        g[k] = (f(xp) - f(xm)) / (2 * h);
    }
    return g;
}

}  // namespace oracles
