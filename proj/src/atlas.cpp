#include "quasitoric/atlas.hpp"

#include <cmath>

namespace quasitoric {

namespace {

Complex unit_exp(double c) { return Complex(std::cos(kTwoPi * c), std::sin(kTwoPi * c)); }

Complex cexp2pii(const Complex& c) { return std::exp(Complex(0, kTwoPi) * c); }

/// Principal-branch logarithm scaled to the period-1 convention,
/// log(z) / (2 pi i), so that cexp2pii inverts it.
Complex clog2pii(const Complex& z) { return std::log(z) / Complex(0, kTwoPi); }

}  // namespace

bool VertexChart::in_domain(const CVec& z, double eps_geom) const {
    for (int j = 0; j < z.size(); ++j)
        if (!contains(vertex.active, j) && std::abs(z[j]) <= eps_geom) return false;
    return true;
}

CVec VertexChart::ambient(const CVec& slice_coords) const {
    CVec out = base_point;
    for (size_t i = 0; i < vertex.active.size(); ++i)
        out[vertex.active[i]] = slice_coords[static_cast<Eigen::Index>(i)];
    return out;
}

Vec VertexChart::word_phase(const IVec& word) const {
    Vec phase = Vec::Zero(static_cast<Eigen::Index>(vertex.active.size()));
    for (size_t a = 0; a < group_generators.size(); ++a)
        phase += word[static_cast<Eigen::Index>(a)] * group_generators[a].phase;
    return phase;
}

CVec VertexChart::apply_phase(const Vec& phase, const CVec& slice_coords) const {
    CVec out(slice_coords.size());
    for (Eigen::Index i = 0; i < slice_coords.size(); ++i)
        out[i] = unit_exp(phase[i]) * slice_coords[i];
    return out;
}

VertexChart build_chart(int id, const VertexData& vertex, const Mat& normals,
                        const QuasilatticeData& q, double eps_geom) {
    VertexChart chart;
    chart.id = id;
    chart.vertex = vertex;
    chart.basis = VertexBasis(vertex, normals);
    const int d = static_cast<int>(normals.rows());
    chart.base_point = CVec::Ones(d);
    for (int j : vertex.active) chart.base_point[j] = Complex(0, 0);
    chart.off_indices = complement(vertex.active, d);
    chart.off_coeffs.resize(static_cast<int>(vertex.active.size()),
                            static_cast<int>(chart.off_indices.size()));
    for (size_t c = 0; c < chart.off_indices.size(); ++c)
        chart.off_coeffs.col(static_cast<Eigen::Index>(c)) =
            chart.basis.solve(Vec(normals.row(chart.off_indices[c]).transpose()));
    chart.group_generators = chart_group_generators(chart.basis, q, eps_geom);
    return chart;
}

SlicePoint to_slice(const CVec& z, const VertexChart& chart, double eps_geom) {
    if (!chart.in_domain(z, eps_geom))
        throw DomainError("point has a zero coordinate off the vertex index set " +
                          index_set_string(chart.index_set()));
    // V supported off I with exp(V) z normalized to one off I, principal
    // branch; the kernel element exp(V - lift of its image) then rotates
    // the slice coordinates by the vertex-basis coefficients of pi(V).
    CVec v_off(static_cast<Eigen::Index>(chart.off_indices.size()));
    for (size_t c = 0; c < chart.off_indices.size(); ++c)
        v_off[static_cast<Eigen::Index>(c)] = -clog2pii(z[chart.off_indices[c]]);
    CVec u = chart.off_coeffs.cast<Complex>() * v_off;
    SlicePoint out;
    out.chart = chart.id;
    const IndexSet& I = chart.index_set();
    out.coords.resize(static_cast<Eigen::Index>(I.size()));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(I.size()); ++i)
        out.coords[i] = cexp2pii(-u[i]) * z[I[static_cast<size_t>(i)]];
    return out;
}

ChartTransition build_transition(const VertexChart& from, const VertexChart& to,
                                 const Mat& normals) {
    ChartTransition t;
    t.from = from.id;
    t.to = to.id;
    const IndexSet& I = from.index_set();
    const IndexSet& J = to.index_set();
    t.shared = set_intersection(I, J);
    t.log_from = set_difference(I, J);
    t.log_to = set_difference(J, I);

    // Column for each h in I minus J: coefficients of X_h over {X_j : j in J},
    // split into rows on I cap J and rows on J minus I.
    Mat solve_block(static_cast<int>(J.size()), static_cast<int>(t.log_from.size()));
    for (size_t c = 0; c < t.log_from.size(); ++c)
        solve_block.col(static_cast<Eigen::Index>(c)) =
            to.basis.solve(Vec(normals.row(t.log_from[c]).transpose()));
    t.shared_block.resize(static_cast<int>(t.shared.size()), static_cast<int>(t.log_from.size()));
    t.log_block.resize(static_cast<int>(t.log_to.size()), static_cast<int>(t.log_from.size()));
    int shared_row = 0, log_row = 0;
    for (size_t r = 0; r < J.size(); ++r) {
        if (contains(t.shared, J[r]))
            t.shared_block.row(shared_row++) = solve_block.row(static_cast<Eigen::Index>(r));
        else
            t.log_block.row(log_row++) = solve_block.row(static_cast<Eigen::Index>(r));
    }
    return t;
}

CoverPoint apply_transition(const ChartTransition& t, const CoverPoint& x) {
    CoverPoint out;
    out.chart_from = t.from;
    out.chart_to = t.to;
    CVec shift_shared = t.shared_block.cast<Complex>() * x.zeta_part;
    out.z_part.resize(x.z_part.size());
    for (Eigen::Index i = 0; i < x.z_part.size(); ++i)
        out.z_part[i] = cexp2pii(shift_shared[i]) * x.z_part[i];
    out.zeta_part = t.log_block.cast<Complex>() * x.zeta_part;
    return out;
}

SlicePoint slice_transition(const ChartTransition& t, const VertexChart& from,
                            const VertexChart& to, const SlicePoint& s, double eps_geom) {
    CoverPoint lift;
    lift.chart_from = t.from;
    lift.chart_to = t.to;
    lift.z_part.resize(static_cast<Eigen::Index>(t.shared.size()));
    lift.zeta_part.resize(static_cast<Eigen::Index>(t.log_from.size()));
    const IndexSet& I = from.index_set();
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(I.size()); ++i) {
        int j = I[static_cast<size_t>(i)];
        if (contains(t.shared, j)) {
            auto pos = std::lower_bound(t.shared.begin(), t.shared.end(), j) - t.shared.begin();
            lift.z_part[pos] = s.coords[i];
        } else {
            auto pos =
                std::lower_bound(t.log_from.begin(), t.log_from.end(), j) - t.log_from.begin();
            if (std::abs(s.coords[i]) <= eps_geom)
                throw DomainError("slice point leaves the overlap: zero coordinate at facet " +
                                  std::to_string(j + 1));
            lift.zeta_part[pos] = clog2pii(s.coords[i]);
        }
    }
    CoverPoint image = apply_transition(t, lift);
    SlicePoint out;
    out.chart = t.to;
    const IndexSet& J = to.index_set();
    out.coords.resize(static_cast<Eigen::Index>(J.size()));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(J.size()); ++i) {
        int j = J[static_cast<size_t>(i)];
        if (contains(t.shared, j)) {
            auto pos = std::lower_bound(t.shared.begin(), t.shared.end(), j) - t.shared.begin();
            out.coords[i] = image.z_part[pos];
        } else {
            auto pos = std::lower_bound(t.log_to.begin(), t.log_to.end(), j) - t.log_to.begin();
            out.coords[i] = cexp2pii(image.zeta_part[pos]);
        }
    }
    return out;
}

SlicePoint torus_act(const CVec& W, const SlicePoint& s, const VertexChart& chart) {
    CVec u = chart.basis.solve(W);
    SlicePoint out;
    out.chart = s.chart;
    out.coords.resize(s.coords.size());
    for (Eigen::Index i = 0; i < s.coords.size(); ++i)
        out.coords[i] = cexp2pii(u[i]) * s.coords[i];
    return out;
}

std::optional<ModelMatch> match_mod_group(const CVec& coords1, const CVec& coords2,
                                          const VertexChart& chart, int radius, double eps) {
    const int g = static_cast<int>(chart.group_generators.size());
    auto word_residual = [&](const IVec& w) {
        Vec phase = chart.word_phase(w);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < coords1.size(); ++i)
            worst = std::max(worst, std::abs(unit_exp(phase[i]) * coords1[i] - coords2[i]));
        return worst;
    };
    std::optional<ModelMatch> best;
    auto consider = [&](const IVec& w) {
        double r = word_residual(w);
        if (r <= eps && (!best || r < best->residual)) {
            ModelMatch m;
            m.word.word = w;
            m.word.phase = chart.word_phase(w);
            m.residual = r;
            best = std::move(m);
        }
    };
    if (g == 0) {
        consider(IVec::Zero(0));
        return best;
    }
    std::vector<int> w(static_cast<size_t>(g), -radius);
    IVec word(g);
    for (;;) {
        for (int a = 0; a < g; ++a) word[a] = w[static_cast<size_t>(a)];
        consider(word);
        int i = 0;
        while (i < g && w[static_cast<size_t>(i)] == radius) w[static_cast<size_t>(i++)] = -radius;
        if (i == g) break;
        ++w[static_cast<size_t>(i)];
    }
    return best;
}

std::optional<ModelMatch> same_model_point(const SlicePoint& s1, const SlicePoint& s2,
                                           const VertexChart& chart, int radius, double eps) {
    if (s1.chart != s2.chart)
        throw DomainError("model-point comparison requires the same chart");
    return match_mod_group(s1.coords, s2.coords, chart, radius, eps);
}

Atlas build_atlas(const PolytopeData& p, const QuasilatticeData& q, double eps_geom) {
    Atlas atlas;
    auto vertices = enumerate_vertices(p, eps_geom);
    for (size_t i = 0; i < vertices.size(); ++i)
        atlas.charts.push_back(
            build_chart(static_cast<int>(i), vertices[i], p.normals, q, eps_geom));
    for (const auto& from : atlas.charts)
        for (const auto& to : atlas.charts) {
            if (from.id == to.id) continue;
            atlas.transitions.emplace(std::make_pair(from.id, to.id),
                                      build_transition(from, to, p.normals));
        }
    return atlas;
}

}  // namespace quasitoric
