#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasitoric {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using IVec = Eigen::VectorXi;
using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Sorted set of 0-based facet indices. Reports print them 1-based.
using IndexSet = std::vector<int>;

inline IndexSet make_index_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool contains(const IndexSet& s, int j) {
    return std::binary_search(s.begin(), s.end(), j);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet complement(const IndexSet& s, int d) {
    IndexSet out;
    out.reserve(static_cast<size_t>(d) - s.size());
    for (int j = 0; j < d; ++j)
        if (!contains(s, j)) out.push_back(j);
    return out;
}

inline std::string index_set_string(const IndexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);  // 1-based for humans
    }
    return out + "}";
}

/// Global numeric knobs. One geometric tolerance for activity/zero tests,
/// one linear-algebra tolerance, the moment-map residual target, and the
/// finite-difference step.
struct Tolerances {
    double geom = 1e-9;
    double lin = 1e-10;
    double psi = 1e-10;
    double fd_step = 1e-6;
    int radius = 3;  // integer word search radius for chart-group equality
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

/// A vertex where more than n facets meet.
struct NonSimpleError : Error {
    Vec point;
    IndexSet active;
    NonSimpleError(std::string msg, Vec p, IndexSet a)
        : Error(std::move(msg)), point(std::move(p)), active(std::move(a)) {}
};

/// Point outside the admissible set (outside the polytope, outside a chart
/// domain, outside the layered coordinate space).
struct DomainError : Error {
    using Error::Error;
};

struct SolverError : Error {
    double residual = 0.0;
    int iterations = 0;
    SolverError(std::string msg, double res, int it)
        : Error(std::move(msg)), residual(res), iterations(it) {}
};

/// Realification convention: ℂ^k -> ℝ^{2k}, coordinate j occupies slots
/// (2j, 2j+1) = (Re, Im). Used for all finite-difference Jacobians and
/// tangent-space computations.
inline Vec realify(const CVec& z) {
    Vec out(2 * z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) {
        out[2 * j] = z[j].real();
        out[2 * j + 1] = z[j].imag();
    }
    return out;
}

inline CVec complexify(const Vec& x) {
    CVec out(x.size() / 2);
    for (Eigen::Index j = 0; j < out.size(); ++j)
        out[j] = Complex(x[2 * j], x[2 * j + 1]);
    return out;
}

/// Multiplication by i on realified vectors: (x, y) -> (-y, x) per pair.
inline Vec rotate_realified(const Vec& x) {
    Vec out(x.size());
    for (Eigen::Index j = 0; j + 1 < x.size(); j += 2) {
        out[j] = -x[j + 1];
        out[j + 1] = x[j];
    }
    return out;
}

/// Deterministic, portable random source: the 64-bit Mersenne twister as
/// specified by the C++ standard, with explicit double extraction so the
/// stream does not depend on library-specific distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        return state_();
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) {
        return a + (b - a) * uniform01();
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex unit_phase() {
        double t = uniform01();
        return Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
    }

    /// Box-Muller, explicit so the sequence is reproducible everywhere.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

private:
    std::mt19937_64 state_;
};

}  // namespace quasitoric
