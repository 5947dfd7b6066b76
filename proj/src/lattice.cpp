#include "quasitoric/lattice.hpp"

#include <cmath>

namespace quasitoric {

KernelBasis kernel_basis(const ProjectionMap& pi, double eps_lin) {
    const int n = pi.n();
    const int d = pi.d();
    Eigen::JacobiSVD<Mat> svd(pi.matrix, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv.size() < n || sv[n - 1] <= eps_lin * std::max(1.0, sv[0]))
        throw ValidationError("projection map is rank-deficient: polytope normals do not span");
    KernelBasis out{svd.matrixV().rightCols(d - n)};
    return out;
}

VertexBasis::VertexBasis(const VertexData& vertex, const Mat& normals)
    : indices_(vertex.active) {
    const int n = static_cast<int>(normals.cols());
    if (static_cast<int>(indices_.size()) != n)
        throw ValidationError("vertex basis needs exactly n active facets");
    basis_.resize(n, n);
    for (int i = 0; i < n; ++i) basis_.col(i) = normals.row(indices_[static_cast<size_t>(i)]).transpose();
    Eigen::FullPivLU<Mat> rank_check(basis_);
    rank_check.setThreshold(1e-12);
    if (rank_check.rank() < n)
        throw ValidationError("active normals at vertex " + index_set_string(indices_) +
                              " are linearly dependent");
    lu_.compute(basis_);
}

Vec VertexBasis::solve(const Vec& v) const { return lu_.solve(v); }

CVec VertexBasis::solve(const CVec& v) const {
    Vec re = lu_.solve(Vec(v.real()));
    Vec im = lu_.solve(Vec(v.imag()));
    return re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
}

CVec VertexBasis::embed(const CVec& coeffs, int d) const {
    CVec out = CVec::Zero(d);
    for (size_t i = 0; i < indices_.size(); ++i) out[indices_[i]] = coeffs[static_cast<Eigen::Index>(i)];
    return out;
}

Vec VertexBasis::embed(const Vec& coeffs, int d) const {
    Vec out = Vec::Zero(d);
    for (size_t i = 0; i < indices_.size(); ++i) out[indices_[i]] = coeffs[static_cast<Eigen::Index>(i)];
    return out;
}

Mat normals_in_vertex_basis(const VertexData& vertex, const Mat& normals) {
    VertexBasis basis(vertex, normals);
    const int n = static_cast<int>(normals.cols());
    const int d = static_cast<int>(normals.rows());
    Mat a(n, d);
    for (int h = 0; h < d; ++h) a.col(h) = basis.solve(Vec(normals.row(h).transpose()));
    return a;
}

QuasilatticeData make_quasilattice(const Mat& generators, const Mat& normals, double eps_lin) {
    const int g = static_cast<int>(generators.rows());
    const int n = static_cast<int>(generators.cols());
    const int d = static_cast<int>(normals.rows());
    Eigen::JacobiSVD<Mat> svd(generators.transpose(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.rank() < n)
        throw ValidationError("quasilattice generators do not span the ambient space");

    QuasilatticeData q;
    q.generators = generators;
    q.coefficients.resize(d, g);

    // Integer coefficients of each normal over the generators: least-norm
    // real solution, rounded, with a small correction search over the
    // solution lattice when rounding alone fails.
    Mat Gt = generators.transpose();  // n x g
    for (int j = 0; j < d; ++j) {
        Vec target = normals.row(j).transpose();
        Vec k_real = svd.solve(target);
        IVec k = k_real.array().round().cast<int>();
        auto residual = [&](const IVec& cand) {
            return (Gt * cand.cast<double>() - target).norm();
        };
        if (residual(k) > eps_lin * 1e3 + 1e-9) {
            bool found = false;
            if (g <= 6) {
                std::vector<int> delta(static_cast<size_t>(g), -1);
                for (;;) {
                    IVec cand = k;
                    for (int a = 0; a < g; ++a) cand[a] += delta[static_cast<size_t>(a)];
                    if (residual(cand) <= eps_lin * 1e3 + 1e-9) {
                        k = cand;
                        found = true;
                        break;
                    }
                    int i = 0;
                    while (i < g && delta[static_cast<size_t>(i)] == 1) delta[static_cast<size_t>(i++)] = -1;
                    if (i == g) break;
                    ++delta[static_cast<size_t>(i)];
                }
            }
            if (!found)
                throw ValidationError("facet normal " + std::to_string(j + 1) +
                                      " is not an integer combination of the quasilattice generators");
        }
        q.coefficients.row(j) = k.transpose();
    }
    return q;
}

double integrality_defect(const Vec& phase) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < phase.size(); ++i) {
        double f = phase[i] - std::round(phase[i]);
        worst = std::max(worst, std::abs(f));
    }
    return worst;
}

std::vector<ChartGroupElement> chart_group_generators(const VertexBasis& basis,
                                                      const QuasilatticeData& q,
                                                      double eps_geom) {
    std::vector<ChartGroupElement> out;
    const int g = q.count();
    for (int a = 0; a < g; ++a) {
        Vec phase = basis.solve(Vec(q.generators.row(a).transpose()));
        if (integrality_defect(phase) <= eps_geom) continue;  // acts trivially
        ChartGroupElement el;
        el.word = IVec::Zero(g);
        el.word[a] = 1;
        el.phase = phase;
        out.push_back(std::move(el));
    }
    return out;
}

CVec KernelGroupElement::multipliers(const KernelBasis& B) const {
    CVec exponent = B.B.cast<Complex>() * coeffs;
    CVec out(exponent.size());
    for (Eigen::Index j = 0; j < exponent.size(); ++j)
        out[j] = std::exp(Complex(0, kTwoPi) * exponent[j]);
    return out;
}

PolarSplit polar_split(const KernelGroupElement& w) {
    PolarSplit split;
    split.compact.coeffs = w.coeffs.real().cast<Complex>();
    split.stretch.coeffs = Complex(0, 1) * w.coeffs.imag().cast<Complex>();
    return split;
}

}  // namespace quasitoric
