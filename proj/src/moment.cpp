#include "quasitoric/moment.hpp"

#include <cmath>

namespace quasitoric {

Vec ambient_moment(const CVec& z, const Vec& offsets) {
    Vec out(z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) out[j] = std::norm(z[j]) + offsets[j];
    return out;
}

Vec kernel_moment(const CVec& z, const MomentMap& mm) {
    return mm.B.transpose() * ambient_moment(z, mm.offsets);
}

CVec level_point_from_polytope(const Vec& zeta, const Vec& phases, const PolytopeData& p,
                               double eps_geom) {
    Vec slack = p.slacks(zeta);
    if ((slack.array() < -eps_geom).any())
        throw DomainError("point is outside the polytope");
    CVec z(p.d);
    for (int j = 0; j < p.d; ++j) {
        double r = std::sqrt(std::max(slack[j], 0.0));
        z[j] = r * Complex(std::cos(kTwoPi * phases[j]), std::sin(kTwoPi * phases[j]));
    }
    return z;
}

Vec pad_squares(const VertexChart& chart, const CVec& coords, const Vec& offsets) {
    const IndexSet& I = chart.index_set();
    Vec moment_on_vertex(static_cast<Eigen::Index>(I.size()));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(I.size()); ++i)
        moment_on_vertex[i] = std::norm(coords[i]) + offsets[I[static_cast<size_t>(i)]];
    Vec out(static_cast<Eigen::Index>(chart.off_indices.size()));
    for (size_t c = 0; c < chart.off_indices.size(); ++c)
        out[static_cast<Eigen::Index>(c)] =
            chart.off_coeffs.col(static_cast<Eigen::Index>(c)).dot(moment_on_vertex) -
            offsets[chart.off_indices[c]];
    return out;
}

bool in_symplectic_domain(const VertexChart& chart, const CVec& coords, const Vec& offsets) {
    return (pad_squares(chart, coords, offsets).array() > 0.0).all();
}

CVec symplectic_pad(const VertexChart& chart, const SymplecticSlicePoint& w, const Vec& offsets) {
    Vec squares = pad_squares(chart, w.coords, offsets);
    for (Eigen::Index c = 0; c < squares.size(); ++c)
        if (squares[c] <= 0.0)
            throw DomainError("point is outside the symplectic slice: pad square at facet " +
                              std::to_string(chart.off_indices[static_cast<size_t>(c)] + 1) +
                              " is " + std::to_string(squares[c]));
    CVec out = CVec::Zero(chart.base_point.size());
    const IndexSet& I = chart.index_set();
    for (size_t i = 0; i < I.size(); ++i) out[I[i]] = w.coords[static_cast<Eigen::Index>(i)];
    for (size_t c = 0; c < chart.off_indices.size(); ++c)
        out[chart.off_indices[c]] = std::sqrt(squares[static_cast<Eigen::Index>(c)]);
    return out;
}

}  // namespace quasitoric
