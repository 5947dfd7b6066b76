#include "quasitoric/verify.hpp"

#include <cmath>
#include <limits>

namespace quasitoric {

namespace {

CVec apply_multipliers(const CVec& mult, const CVec& z) {
    return mult.array() * z.array();
}

CVec stretch_point(const CVec& z, const Vec& coeffs, const MomentMap& mm) {
    Vec exponent = mm.B * coeffs;
    CVec out(z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j)
        out[j] = std::exp(-kTwoPi * exponent[j]) * z[j];
    return out;
}

CVec random_coords(Eigen::Index count, Rng& rng, double lo = 0.3, double hi = 1.7) {
    CVec out(count);
    for (Eigen::Index i = 0; i < count; ++i) out[i] = rng.uniform(lo, hi) * rng.unit_phase();
    return out;
}

CheckRecord record(const std::string& name, double residual, double threshold, int samples,
                   std::string detail = "") {
    return {name, residual <= threshold ? "pass" : "fail", residual, samples, std::move(detail)};
}

CheckRecord record_flag(const std::string& name, bool ok, double residual, int samples,
                        std::string detail = "") {
    return {name, ok ? "pass" : "fail", residual, samples, std::move(detail)};
}

std::vector<IndexSet> face_list(const Quasifold& q) {
    return std::vector<IndexSet>(q.faces.begin(), q.faces.end());
}

/// Random polytope point with zero slack exactly on the given face.
Vec face_point(const Quasifold& q, const IndexSet& face, Rng& rng) {
    Vec point = Vec::Zero(q.polytope.n);
    double total = 0.0;
    for (const auto& v : q.vertices) {
        if (!is_subset(face, v.active)) continue;
        double w = rng.uniform(0.1, 1.0);
        point += w * v.point;
        total += w;
    }
    return point / total;
}

}  // namespace

Vec sample_polytope_point(const Quasifold& q, Rng& rng) {
    Vec point = Vec::Zero(q.polytope.n);
    double total = 0.0;
    for (const auto& v : q.vertices) {
        double w = rng.uniform(0.1, 1.0);
        point += w * v.point;
        total += w;
    }
    return point / total;
}

CVec sample_admissible_point(const Quasifold& q, Rng& rng, bool allow_zeros) {
    IndexSet face;  // dense by default
    if (allow_zeros && rng.uniform01() > 0.5) {
        auto faces = face_list(q);
        face = faces[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(faces.size()) - 1))];
    }
    CVec z(q.polytope.d);
    for (int j = 0; j < q.polytope.d; ++j)
        z[j] = contains(face, j) ? Complex(0, 0) : Complex(rng.uniform(0.3, 1.7) * rng.unit_phase());
    return z;
}

SymplecticSlicePoint sample_symplectic_point(const Quasifold& q, int chart_id, Rng& rng) {
    const VertexChart& chart = q.chart(chart_id);
    Vec zeta = sample_polytope_point(q, rng);
    Vec slack = q.polytope.slacks(zeta);
    SymplecticSlicePoint w;
    w.chart = chart_id;
    w.coords.resize(static_cast<Eigen::Index>(chart.index_set().size()));
    for (size_t i = 0; i < chart.index_set().size(); ++i)
        w.coords[static_cast<Eigen::Index>(i)] =
            std::sqrt(std::max(slack[chart.index_set()[i]], 0.0)) * rng.unit_phase();
    return w;
}

bool phase_groups_match(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                        int radius, double eps) {
    auto words = [&](const std::vector<Vec>& gens) {
        std::vector<Vec> out;
        const int g = static_cast<int>(gens.size());
        if (g == 0) {
            out.push_back(Vec());
            return out;
        }
        std::vector<int> w(static_cast<size_t>(g), -radius);
        for (;;) {
            Vec phase = Vec::Zero(gens[0].size());
            for (int a = 0; a < g; ++a) phase += w[static_cast<size_t>(a)] * gens[static_cast<size_t>(a)];
            out.push_back(phase);
            int i = 0;
            while (i < g && w[static_cast<size_t>(i)] == radius) w[static_cast<size_t>(i++)] = -radius;
            if (i == g) break;
            ++w[static_cast<size_t>(i)];
        }
        return out;
    };
    auto contained = [&](const std::vector<Vec>& lhs, const std::vector<Vec>& rhs) {
        for (const auto& p : lhs) {
            bool found = false;
            for (const auto& r : rhs) {
                if (p.size() == 0 && r.size() == 0) {
                    found = true;
                    break;
                }
                if (p.size() != r.size()) continue;
                if (integrality_defect(p - r) <= eps) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };
    auto wa = words(gens_a);
    auto wb = words(gens_b);
    // Zero-generator groups are trivial: every word of the other side must
    // then be integral.
    if (gens_a.empty() || gens_b.empty()) {
        const auto& nontrivial = gens_a.empty() ? wb : wa;
        for (const auto& p : nontrivial)
            if (p.size() > 0 && integrality_defect(p) > eps) return false;
        return true;
    }
    return contained(wa, wb) && contained(wb, wa);
}

ChartFormEvaluator::ChartFormEvaluator(const VertexChart& chart, const SlicePoint& z,
                                       const MomentMap& mm, const Tolerances& tol,
                                       const SolverOptions& opts) {
    auto inverse = to_symplectic_slice(chart, z, mm, tol.radius, tol.geom, opts);
    const SymplecticSlicePoint& w = inverse.point;

    LiftJacobian forward = lift_jacobian(chart, w, mm.offsets, tol.fd_step);
    Eigen::PartialPivLU<Mat> lu(forward.matrix);

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
    carry_ = pad_jac * lu.inverse();
    frame_ = tangent_frame(symplectic_pad(chart, w, mm.offsets), mm, tol.lin);
}

double ChartFormEvaluator::form(const Vec& u, const Vec& v) const {
    return reduced_form(frame_, carry_ * u, carry_ * v);
}

double ChartFormEvaluator::metric(const Vec& u, const Vec& v) const {
    return reduced_form(frame_, carry_ * u, carry_ * rotate_realified(v));
}

namespace checks {

CheckRecord vertex_equations(const Quasifold& q) {
    double worst = 0.0;
    for (const auto& v : q.vertices) {
        Vec slack = q.polytope.slacks(v.point);
        for (int j : v.active) worst = std::max(worst, std::abs(slack[j]));
    }
    return record("polytope.vertex_equations", worst, q.tol.geom,
                  static_cast<int>(q.vertices.size()));
}

CheckRecord union_property(const Quasifold& q, Rng& rng, int samples) {
    int mismatches = 0;
    const int d = q.polytope.d;
    for (int s = 0; s < samples; ++s) {
        IndexSet zeros;
        for (int j = 0; j < d; ++j)
            if (rng.uniform01() < 0.4) zeros.push_back(j);
        CVec z(d);
        for (int j = 0; j < d; ++j)
            z[j] = contains(zeros, j) ? Complex(0, 0)
                                      : Complex(rng.uniform(0.3, 1.7) * rng.unit_phase());
        bool member = q.membership(z).has_value();
        bool covered = false;
        for (const auto& v : q.vertices)
            if (is_subset(zeros, v.active)) covered = true;
        if (member != covered) ++mismatches;
    }
    return record_flag("polytope.union_property", mismatches == 0,
                       static_cast<double>(mismatches), samples);
}

CheckRecord kernel_residual(const Quasifold& q) {
    Mat pi = q.polytope.normals.transpose();
    double res = (pi * q.kernel.B).cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Mat> svd(q.kernel.B);
    bool full_rank =
        svd.singularValues().minCoeff() > 0.5;  // orthonormal columns by construction
    return record_flag("lattice.kernel_residual", full_rank && res <= q.tol.lin, res,
                       q.kernel.dim());
}

CheckRecord dual_exactness(const Quasifold& q) {
    Mat composed = q.kernel.B.transpose() * q.polytope.normals;  // iota* after pi*
    return record("lattice.dual_exactness", composed.cwiseAbs().maxCoeff(), q.tol.lin,
                  static_cast<int>(composed.size()));
}

CheckRecord face_injectivity(const Quasifold& q) {
    double worst = std::numeric_limits<double>::infinity();
    const int d = q.polytope.d;
    for (const auto& face : q.faces) {
        Mat m(d, q.kernel.dim() + static_cast<int>(face.size()));
        m.leftCols(q.kernel.dim()) = q.kernel.B;
        for (size_t i = 0; i < face.size(); ++i) {
            Vec e = Vec::Zero(d);
            e[face[i]] = 1.0;
            m.col(q.kernel.dim() + static_cast<Eigen::Index>(i)) = e;
        }
        Eigen::JacobiSVD<Mat> svd(m);
        worst = std::min(worst, svd.singularValues().minCoeff());
    }
    return record_flag("lattice.face_injectivity", worst > 1e-8, worst,
                       static_cast<int>(q.faces.size()), "min singular value over faces");
}

CheckRecord stretch_fixes_nothing(const Quasifold& q) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& face : q.faces) {
        IndexSet off = complement(face, q.polytope.d);
        Mat rows(static_cast<Eigen::Index>(off.size()), q.kernel.dim());
        for (size_t i = 0; i < off.size(); ++i)
            rows.row(static_cast<Eigen::Index>(i)) = q.kernel.B.row(off[i]);
        Eigen::JacobiSVD<Mat> svd(rows);
        worst = std::min(worst, svd.singularValues().minCoeff());
    }
    return record_flag("lattice.stretch_fixes_nothing", worst > 1e-8, worst,
                       static_cast<int>(q.faces.size()),
                       "min singular value of off-face kernel rows");
}

CheckRecord kernel_parametrization(const Quasifold& q, Rng& rng, int samples) {
    Mat pi = q.polytope.normals.transpose();
    double worst = 0.0;
    const int d = q.polytope.d;
    for (int s = 0; s < samples; ++s) {
        const VertexChart& chart = q.chart(s % q.chart_count());
        // off-vertex vector into the kernel
        CVec v = CVec::Zero(d);
        for (int j : chart.off_indices) v[j] = Complex(rng.normal(), rng.normal());
        CVec u = chart.basis.solve(CVec(pi.cast<Complex>() * v));
        CVec w = v - chart.basis.embed(u, d);
        worst = std::max(worst, (pi.cast<Complex>() * w).cwiseAbs().maxCoeff());
        // random kernel vector decomposes the same way
        CVec c(q.kernel.dim());
        for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = Complex(rng.normal(), rng.normal());
        CVec k = q.kernel.B.cast<Complex>() * c;
        CVec v2 = CVec::Zero(d);
        for (int j : chart.off_indices) v2[j] = k[j];
        CVec rebuilt = v2 - chart.basis.embed(chart.basis.solve(CVec(pi.cast<Complex>() * v2)), d);
        worst = std::max(worst, (rebuilt - k).cwiseAbs().maxCoeff());
    }
    return record("lattice.kernel_parametrization", worst, 1e-9, samples);
}

CheckRecord polar_recomposition(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        KernelGroupElement w;
        w.coeffs.resize(q.kernel.dim());
        for (Eigen::Index i = 0; i < w.coeffs.size(); ++i)
            w.coeffs[i] = Complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
        auto split = polar_split(w);
        CVec recomposed = split.compact.multipliers(q.kernel).array() *
                          split.stretch.multipliers(q.kernel).array();
        worst = std::max(worst, (recomposed - w.multipliers(q.kernel)).cwiseAbs().maxCoeff());
    }
    return record("lattice.polar_recomposition", worst, 1e-12, samples);
}

CheckRecord chart_cover(const Quasifold& q, Rng& rng, int samples) {
    int failures = 0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        try {
            int id = q.chart_for(z);
            if (!q.chart(id).in_domain(z, q.tol.geom)) ++failures;
        } catch (const DomainError&) {
            ++failures;
        }
    }
    return record_flag("atlas.chart_cover", failures == 0, static_cast<double>(failures),
                       samples);
}

CheckRecord slice_equivariance(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    bool all_matched = true;
    for (int s = 0; s < samples; ++s) {
        const VertexChart& chart = q.chart(s % q.chart_count());
        CVec z(q.polytope.d);
        for (int j = 0; j < q.polytope.d; ++j)
            z[j] = rng.uniform(0.3, 1.7) * rng.unit_phase();
        SlicePoint w = to_slice(z, chart, q.tol.geom);
        KernelGroupElement g;
        g.coeffs.resize(q.kernel.dim());
        for (Eigen::Index i = 0; i < g.coeffs.size(); ++i)
            g.coeffs[i] = Complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
        CVec z2 = apply_multipliers(g.multipliers(q.kernel), z);
        SlicePoint w2 = to_slice(z2, chart, q.tol.geom);
        auto match = same_model_point(w, w2, chart, q.tol.radius, 1e-8);
        if (!match) {
            all_matched = false;
            continue;
        }
        worst = std::max(worst, match->residual);
    }
    return record_flag("atlas.slice_equivariance", all_matched && worst <= 1e-8, worst, samples);
}

CheckRecord transition_equivariance(const Quasifold& q, Rng& rng, int samples) {
    if (q.chart_count() < 2)
        return {"atlas.transition_equivariance", "skip", 0.0, 0, "single chart"};
    double worst = 0.0;
    int done = 0;
    for (int s = 0; s < samples; ++s) {
        int from_id = s % q.chart_count();
        int to_id = (from_id + 1 + (s / q.chart_count()) % (q.chart_count() - 1)) % q.chart_count();
        const VertexChart& from = q.chart(from_id);
        const VertexChart& to = q.chart(to_id);
        const ChartTransition& t = q.atlas.transition(from_id, to_id);

        CoverPoint x;
        x.chart_from = from_id;
        x.chart_to = to_id;
        x.z_part = random_coords(static_cast<Eigen::Index>(t.shared.size()), rng);
        x.zeta_part.resize(static_cast<Eigen::Index>(t.log_from.size()));
        for (Eigen::Index i = 0; i < x.zeta_part.size(); ++i)
            x.zeta_part[i] = Complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));

        int a = s % q.quasilattice.count();
        Vec generator = q.quasilattice.generators.row(a).transpose();
        Vec uI = from.basis.solve(generator);
        Vec uJ = to.basis.solve(generator);

        // act upstairs at the source chart
        CoverPoint lx = x;
        const IndexSet& I = from.index_set();
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(I.size()); ++i) {
            int j = I[static_cast<size_t>(i)];
            if (contains(t.shared, j)) {
                auto pos = std::lower_bound(t.shared.begin(), t.shared.end(), j) - t.shared.begin();
                lx.z_part[pos] *= std::exp(Complex(0, kTwoPi) * Complex(uI[i], 0));
            } else {
                auto pos =
                    std::lower_bound(t.log_from.begin(), t.log_from.end(), j) - t.log_from.begin();
                lx.zeta_part[pos] += Complex(uI[i], 0);
            }
        }
        CoverPoint lhs = apply_transition(t, lx);

        // act downstairs at the target chart
        CoverPoint rhs = apply_transition(t, x);
        const IndexSet& J = to.index_set();
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(J.size()); ++i) {
            int j = J[static_cast<size_t>(i)];
            if (contains(t.shared, j)) {
                auto pos = std::lower_bound(t.shared.begin(), t.shared.end(), j) - t.shared.begin();
                rhs.z_part[pos] *= std::exp(Complex(0, kTwoPi) * Complex(uJ[i], 0));
            } else {
                auto pos = std::lower_bound(t.log_to.begin(), t.log_to.end(), j) - t.log_to.begin();
                rhs.zeta_part[pos] += Complex(uJ[i], 0);
            }
        }

        double res = 0.0;
        if (lhs.z_part.size() > 0)
            res = std::max(res, (lhs.z_part - rhs.z_part).cwiseAbs().maxCoeff());
        if (lhs.zeta_part.size() > 0)
            res = std::max(res, (lhs.zeta_part - rhs.zeta_part).cwiseAbs().maxCoeff());
        worst = std::max(worst, res);
        ++done;
    }
    return record("atlas.transition_equivariance", worst, 1e-10, done);
}

CheckRecord cocycle(const Quasifold& q, Rng& rng, int samples_per_triple) {
    if (q.chart_count() < 3)
        return {"atlas.cocycle", "skip", 0.0, 0, "fewer than three charts"};
    double worst = 0.0;
    bool all_matched = true;
    int triples = 0;
    for (int a = 0; a < q.chart_count(); ++a)
        for (int b = 0; b < q.chart_count(); ++b)
            for (int c = 0; c < q.chart_count(); ++c) {
                if (a == b || b == c || a == c) continue;
                ++triples;
                const VertexChart& ca = q.chart(a);
                const VertexChart& cb = q.chart(b);
                const VertexChart& cc = q.chart(c);
                for (int s = 0; s < samples_per_triple; ++s) {
                    SlicePoint start{a, random_coords(
                                            static_cast<Eigen::Index>(ca.index_set().size()), rng,
                                            0.4, 1.6)};
                    SlicePoint via =
                        slice_transition(q.atlas.transition(a, b), ca, cb, start, q.tol.geom);
                    SlicePoint composed =
                        slice_transition(q.atlas.transition(b, c), cb, cc, via, q.tol.geom);
                    SlicePoint direct =
                        slice_transition(q.atlas.transition(a, c), ca, cc, start, q.tol.geom);
                    auto match =
                        same_model_point(composed, direct, cc, q.tol.radius, 1e-8);
                    if (!match) {
                        all_matched = false;
                        continue;
                    }
                    worst = std::max(worst, match->residual);
                }
            }
    return record_flag("atlas.cocycle", all_matched && worst <= 1e-8, worst,
                       triples * samples_per_triple);
}

CheckRecord offset_independence(const Quasifold& q, double inflate) {
    ParsedSpec spec;
    spec.polytope = q.polytope;
    spec.polytope.offsets.array() -= inflate;
    spec.quasilattice = q.quasilattice.generators;
    Quasifold inflated;
    try {
        inflated = build_quasifold(spec, q.tol);
    } catch (const Error& e) {
        return record_flag("atlas.offset_independence", false, 1.0, 0,
                           std::string("inflated polytope rejected: ") + e.what());
    }
    if (inflated.chart_count() != q.chart_count())
        return record_flag("atlas.offset_independence", false, 1.0, 0, "chart count changed");
    for (int i = 0; i < q.chart_count(); ++i) {
        if (inflated.chart(i).index_set() != q.chart(i).index_set())
            return record_flag("atlas.offset_independence", false, 1.0, 0,
                               "vertex combinatorics changed");
        const auto& ga = q.chart(i).group_generators;
        const auto& gb = inflated.chart(i).group_generators;
        if (ga.size() != gb.size())
            return record_flag("atlas.offset_independence", false, 1.0, 0,
                               "generator count changed");
        for (size_t k = 0; k < ga.size(); ++k)
            if (!(ga[k].phase.array() == gb[k].phase.array()).all())
                return record_flag("atlas.offset_independence", false, 1.0, 0,
                                   "generator phases changed");
    }
    for (const auto& [key, ta] : q.atlas.transitions) {
        const auto& tb = inflated.atlas.transitions.at(key);
        bool same = (ta.shared_block.size() == tb.shared_block.size()) &&
                    (ta.log_block.size() == tb.log_block.size()) &&
                    (ta.shared_block.size() == 0 ||
                     (ta.shared_block.array() == tb.shared_block.array()).all()) &&
                    (ta.log_block.size() == 0 ||
                     (ta.log_block.array() == tb.log_block.array()).all());
        if (!same)
            return record_flag("atlas.offset_independence", false, 1.0, 0,
                               "transition matrices differ after inflating");
    }
    // The level geometry must genuinely change: pad radii at the origin.
    double radius_shift = 0.0;
    for (int i = 0; i < q.chart_count(); ++i) {
        CVec zero = CVec::Zero(static_cast<Eigen::Index>(q.chart(i).index_set().size()));
        Vec pa = pad_squares(q.chart(i), zero, q.polytope.offsets);
        Vec pb = pad_squares(inflated.chart(i), zero, inflated.polytope.offsets);
        radius_shift = std::max(radius_shift, (pa - pb).cwiseAbs().maxCoeff());
    }
    bool ok = radius_shift > 1e-6;
    return record_flag("atlas.offset_independence", ok, 0.0,
                       static_cast<int>(q.atlas.transitions.size()),
                       ok ? "transitions bitwise equal, level radii shifted"
                          : "level radii did not change");
}

CheckRecord free_action_spot(const Quasifold& q, Rng& rng, int samples) {
    double smallest_move = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int s = 0; s < samples; ++s) {
        const VertexChart& chart = q.chart(s % q.chart_count());
        const int g = static_cast<int>(chart.group_generators.size());
        if (g == 0) continue;
        CVec coords = random_coords(static_cast<Eigen::Index>(chart.index_set().size()), rng);
        std::vector<int> w(static_cast<size_t>(g), -q.tol.radius);
        for (;;) {
            IVec word(g);
            for (int a = 0; a < g; ++a) word[a] = w[static_cast<size_t>(a)];
            if (word.cwiseAbs().sum() != 0) {
                Vec phase = chart.word_phase(word);
                if (integrality_defect(phase) > q.tol.geom) {
                    // a genuinely nontrivial group element must move the point
                    double move = 0.0;
                    CVec rotated = chart.apply_phase(phase, coords);
                    move = (rotated - coords).cwiseAbs().maxCoeff();
                    smallest_move = std::min(smallest_move, move);
                    if (move <= 1e-6) ok = false;
                }
            }
            int i = 0;
            while (i < g && w[static_cast<size_t>(i)] == q.tol.radius)
                w[static_cast<size_t>(i++)] = -q.tol.radius;
            if (i == g) break;
            ++w[static_cast<size_t>(i)];
        }
    }
    if (!std::isfinite(smallest_move)) smallest_move = 0.0;  // trivial groups everywhere
    return record_flag("atlas.free_action", ok, smallest_move, samples,
                       "smallest nontrivial move at sampled points");
}

CheckRecord torus_action_checks(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    bool ok = true;
    for (int s = 0; s < samples; ++s) {
        const VertexChart& chart = q.chart(s % q.chart_count());
        SlicePoint p{chart.id, random_coords(static_cast<Eigen::Index>(chart.index_set().size()), rng)};
        CVec w1(q.polytope.n), w2(q.polytope.n);
        for (int i = 0; i < q.polytope.n; ++i) {
            w1[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
            w2[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        SlicePoint both = torus_act(CVec(w1 + w2), p, chart);
        SlicePoint chained = torus_act(w1, torus_act(w2, p, chart), chart);
        double scale = std::max(1.0, both.coords.cwiseAbs().maxCoeff());
        worst = std::max(worst, (both.coords - chained.coords).cwiseAbs().maxCoeff() / scale);

        // quasilattice directions act as chart-group elements
        int a = s % q.quasilattice.count();
        CVec qgen = q.quasilattice.generators.row(a).transpose().cast<Complex>();
        SlicePoint rotated = torus_act(qgen, p, chart);
        auto match = same_model_point(p, rotated, chart, q.tol.radius, 1e-9);
        if (!match) ok = false;

        // imaginary directions scale the magnitudes
        Vec y(q.polytope.n);
        for (int i = 0; i < q.polytope.n; ++i) y[i] = rng.uniform(-0.7, 0.7);
        SlicePoint scaled = torus_act(CVec(Complex(0, 1) * y.cast<Complex>()), p, chart);
        Vec u = chart.basis.solve(y);
        for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
            double expected = std::exp(-kTwoPi * u[i]) * std::abs(p.coords[i]);
            worst = std::max(worst, std::abs(std::abs(scaled.coords[i]) - expected) /
                                        std::max(1.0, expected));
        }
    }
    return record_flag("atlas.torus_action", ok && worst <= 1e-12, worst, samples);
}

CheckRecord level_membership(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    bool ok = true;
    auto faces = face_list(q);
    for (int s = 0; s < samples; ++s) {
        IndexSet face;
        if (s % 2 == 1)
            face = faces[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(faces.size()) - 1))];
        Vec zeta = face.empty() ? sample_polytope_point(q, rng) : face_point(q, face, rng);
        Vec phases(q.polytope.d);
        for (int j = 0; j < q.polytope.d; ++j) phases[j] = rng.uniform01();
        CVec z = level_point_from_polytope(zeta, phases, q.polytope, q.tol.geom);
        worst = std::max(worst, kernel_moment(z, q.moment).cwiseAbs().maxCoeff());
        if (!q.membership(z)) ok = false;
    }
    return record_flag("moment.level_membership", ok && worst <= 1e-9, worst, samples);
}

CheckRecord compact_invariance(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        Vec c(q.kernel.dim());
        for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = rng.uniform(-2, 2);
        KernelGroupElement g{c.cast<Complex>()};
        CVec z2 = apply_multipliers(g.multipliers(q.kernel), z);
        worst = std::max(
            worst, (kernel_moment(z2, q.moment) - kernel_moment(z, q.moment)).cwiseAbs().maxCoeff());
    }
    return record("moment.compact_invariance", worst, 1e-12, samples);
}

CheckRecord stretch_monotone(const Quasifold& q, Rng& rng, int samples) {
    double worst_rel = 0.0;
    bool all_negative = true;
    for (int s = 0; s < samples; ++s) {
        Vec zeta = sample_polytope_point(q, rng);
        Vec phases(q.polytope.d);
        for (int j = 0; j < q.polytope.d; ++j) phases[j] = rng.uniform01();
        CVec z = level_point_from_polytope(zeta, phases, q.polytope, q.tol.geom);
        Vec c(q.kernel.dim());
        for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = rng.normal();
        c.normalize();
        const double h = 1e-6;
        double up = kernel_moment(stretch_point(z, Vec(h * c), q.moment), q.moment).dot(c);
        double down = kernel_moment(stretch_point(z, Vec(-h * c), q.moment), q.moment).dot(c);
        double fd = (up - down) / (2 * h);
        Vec amb = q.kernel.B * c;
        double analytic = 0.0;
        for (Eigen::Index j = 0; j < z.size(); ++j)
            analytic -= 2.0 * kTwoPi * amb[j] * amb[j] * std::norm(z[j]);
        if (fd >= 0.0) all_negative = false;
        worst_rel = std::max(worst_rel, std::abs(fd - analytic) / std::max(1.0, std::abs(analytic)));
    }
    return record_flag("moment.stretch_monotone", all_negative && worst_rel <= 1e-5, worst_rel,
                       samples, "derivative along the stretch flow is strictly negative");
}

CheckRecord pad_level(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
        CVec padded = symplectic_pad(chart, w, q.polytope.offsets);
        worst = std::max(worst, kernel_moment(padded, q.moment).cwiseAbs().maxCoeff());

        // ambient moment factors through the dual of the projection
        const IndexSet& I = chart.index_set();
        Mat rows(q.polytope.n, q.polytope.n);
        Vec rhs(q.polytope.n);
        for (size_t i = 0; i < I.size(); ++i) {
            rows.row(static_cast<Eigen::Index>(i)) = q.polytope.normals.row(I[i]);
            rhs[static_cast<Eigen::Index>(i)] =
                std::norm(w.coords[static_cast<Eigen::Index>(i)]) + q.polytope.offsets[I[i]];
        }
        Vec nu = rows.partialPivLu().solve(rhs);
        Vec lhs = ambient_moment(padded, q.polytope.offsets);
        worst = std::max(worst, (lhs - q.polytope.normals * nu).cwiseAbs().maxCoeff());
        if (!q.polytope.member(nu, q.tol.geom)) worst = std::max(worst, 1.0);
    }
    return record("moment.pad_level", worst, 1e-9, samples);
}

CheckRecord projection_sweep(const Quasifold& q, Rng& rng, int samples,
                             const SolverOptions& opts) {
    double worst = 0.0;
    int failures = 0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        try {
            auto res = project_to_level(z, q.moment, opts);
            worst = std::max(worst, kernel_moment(res.point, q.moment).norm());
        } catch (const SolverError&) {
            ++failures;
        }
    }
    return record_flag("projection.level_residual", failures == 0 && worst <= opts.tol_psi, worst,
                       samples, failures ? std::to_string(failures) + " solver failures" : "");
}

CheckRecord projection_idempotent(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Vec zeta = sample_polytope_point(q, rng);
        Vec phases(q.polytope.d);
        for (int j = 0; j < q.polytope.d; ++j) phases[j] = rng.uniform01();
        CVec z = level_point_from_polytope(zeta, phases, q.polytope, q.tol.geom);
        auto res = project_to_level(z, q.moment, opts);
        worst = std::max(worst, res.coeffs.norm());
        worst = std::max(worst, (res.point - z).cwiseAbs().maxCoeff());
    }
    return record("projection.idempotent", worst, 1e-10, samples);
}

CheckRecord projection_stretch_invariance(const Quasifold& q, Rng& rng, int samples,
                                          const SolverOptions& opts) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        Vec y0(q.kernel.dim());
        for (Eigen::Index i = 0; i < y0.size(); ++i) y0[i] = rng.uniform(-0.2, 0.2);
        CVec z2 = stretch_point(z, y0, q.moment);
        auto r1 = project_to_level(z, q.moment, opts);
        auto r2 = project_to_level(z2, q.moment, opts);
        worst = std::max(worst, (r1.point - r2.point).cwiseAbs().maxCoeff());
    }
    return record("projection.stretch_invariance", worst, 1e-8, samples);
}

CheckRecord gradient_consistency(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        Vec y(q.kernel.dim());
        for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = rng.uniform(-0.5, 0.5);
        Vec f = orbit_moment_gradient(z, y, q.moment);
        const double h = 1e-6;
        Vec fd(q.kernel.dim());
        for (Eigen::Index k = 0; k < fd.size(); ++k) {
            Vec yp = y, ym = y;
            yp[k] += h;
            ym[k] -= h;
            fd[k] = (orbit_potential(z, yp, q.moment) - orbit_potential(z, ym, q.moment)) / (2 * h);
        }
        worst = std::max(worst, (f - fd).norm() / std::max(1.0, f.norm()));
    }
    return record("projection.gradient_consistency", worst, 1e-6, samples);
}

CheckRecord hessian_negative(const Quasifold& q, Rng& rng, int samples) {
    double worst = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng, /*allow_zeros=*/false);
        Vec y(q.kernel.dim());
        for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = rng.uniform(-0.3, 0.3);
        const double h = 1e-4;
        const int m = q.kernel.dim();
        Mat hessian(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Vec ypp = y, ypm = y, ymp = y, ymm = y;
                ypp[a] += h; ypp[b] += h;
                ypm[a] += h; ypm[b] -= h;
                ymp[a] -= h; ymp[b] += h;
                ymm[a] -= h; ymm[b] -= h;
                hessian(a, b) = (orbit_potential(z, ypp, q.moment) -
                                 orbit_potential(z, ypm, q.moment) -
                                 orbit_potential(z, ymp, q.moment) +
                                 orbit_potential(z, ymm, q.moment)) /
                                (4 * h * h);
            }
        Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (hessian + hessian.transpose()));
        worst = std::max(worst, eig.eigenvalues().maxCoeff());
    }
    return record_flag("projection.hessian_negative", worst < -1e-6, worst, samples,
                       "largest Hessian eigenvalue over samples");
}

CheckRecord projection_uniqueness(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        CVec z = sample_admissible_point(q, rng);
        auto r1 = project_to_level(z, q.moment, opts);
        SolverOptions shifted = opts;
        shifted.initial_guess.resize(q.kernel.dim());
        for (Eigen::Index i = 0; i < shifted.initial_guess.size(); ++i)
            shifted.initial_guess[i] = rng.uniform(-0.5, 0.5);
        auto r2 = project_to_level(z, q.moment, shifted);
        worst = std::max(worst, (r1.coeffs - r2.coeffs).norm());
    }
    return record("projection.uniqueness", worst, 1e-9, samples);
}

CheckRecord lift_roundtrip(const Quasifold& q, Rng& rng, int samples_per_chart,
                           const SolverOptions& opts) {
    double worst = 0.0;
    bool all_matched = true;
    for (int chart_id = 0; chart_id < q.chart_count(); ++chart_id) {
        const VertexChart& chart = q.chart(chart_id);
        for (int s = 0; s < samples_per_chart; ++s) {
            SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
            SlicePoint z = to_complex_slice(chart, w, q.polytope.offsets);
            auto inv = to_symplectic_slice(chart, z, q.moment, q.tol.radius, q.tol.geom, opts);
            auto match = match_mod_group(inv.point.coords, w.coords, chart, q.tol.radius, 1e-8);
            if (!match) {
                all_matched = false;
                continue;
            }
            worst = std::max(worst, match->residual);
        }
    }
    return record_flag("lift.roundtrip", all_matched && worst <= 1e-8, worst,
                       samples_per_chart * q.chart_count());
}

CheckRecord lift_torus_equivariance(const Quasifold& q, Rng& rng, int samples,
                                    const SolverOptions& opts) {
    (void)opts;
    double worst = 0.0;
    bool all_matched = true;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
        CVec W(q.polytope.n);
        for (int i = 0; i < q.polytope.n; ++i) W[i] = Complex(rng.uniform(-1, 1), 0);
        Vec u = chart.basis.solve(Vec(W.real()));
        SymplecticSlicePoint wr;
        wr.chart = chart_id;
        wr.coords = w.coords;
        for (Eigen::Index i = 0; i < wr.coords.size(); ++i)
            wr.coords[i] *= std::exp(Complex(0, kTwoPi) * Complex(u[i], 0));
        SlicePoint lhs = to_complex_slice(chart, wr, q.polytope.offsets);
        SlicePoint rhs = torus_act(W, to_complex_slice(chart, w, q.polytope.offsets), chart);
        auto match = same_model_point(lhs, rhs, chart, q.tol.radius, 1e-8);
        if (!match) {
            all_matched = false;
            continue;
        }
        worst = std::max(worst, match->residual);
    }
    return record_flag("lift.torus_equivariance", all_matched && worst <= 1e-8, worst, samples);
}

CheckRecord lift_group_equivariance(const Quasifold& q, Rng& rng, int samples) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        if (chart.group_generators.empty()) continue;
        SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
        const auto& gen =
            chart.group_generators[static_cast<size_t>(s) % chart.group_generators.size()];
        SymplecticSlicePoint gw;
        gw.chart = chart_id;
        gw.coords = chart.apply_phase(gen.phase, w.coords);
        CVec lhs = to_complex_slice(chart, gw, q.polytope.offsets).coords;
        CVec rhs =
            chart.apply_phase(gen.phase, to_complex_slice(chart, w, q.polytope.offsets).coords);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return record("lift.group_equivariance", worst, 1e-12, samples);
}

CheckRecord lift_jacobian_definite(const Quasifold& q, Rng& rng, int samples_per_chart) {
    double min_eig = std::numeric_limits<double>::infinity();
    for (int chart_id = 0; chart_id < q.chart_count(); ++chart_id) {
        const VertexChart& chart = q.chart(chart_id);
        for (int s = 0; s < samples_per_chart; ++s) {
            SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
            auto jac = lift_jacobian(chart, w, q.polytope.offsets, q.tol.fd_step);
            min_eig = std::min(min_eig, jac.min_eigenvalue);
        }
    }
    return record_flag("lift.jacobian_definite", min_eig > 0.0, min_eig,
                       samples_per_chart * q.chart_count(),
                       "smallest eigenvalue of the symmetrized Jacobian");
}

namespace {

SlicePoint forward_sample(const Quasifold& q, int chart_id, Rng& rng, double phase_span = 1.0) {
    const VertexChart& chart = q.chart(chart_id);
    SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
    if (phase_span < 1.0) {
        for (Eigen::Index i = 0; i < w.coords.size(); ++i) {
            double mag = std::abs(w.coords[i]);
            double t = rng.uniform(-phase_span / 2, phase_span / 2);
            w.coords[i] = mag * Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
        }
    }
    return to_complex_slice(chart, w, q.polytope.offsets);
}

}  // namespace

CheckRecord form_compatibility(const Quasifold& q, Rng& rng, int samples,
                               const SolverOptions& opts) {
    double worst_sym = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    const int twon = 2 * q.polytope.n;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        SlicePoint z = forward_sample(q, chart_id, rng);
        ChartFormEvaluator eval(q.chart(chart_id), z, q.moment, q.tol, opts);
        Mat gram(twon, twon);
        for (int a = 0; a < twon; ++a)
            for (int b = 0; b < twon; ++b) {
                Vec ea = Vec::Zero(twon), eb = Vec::Zero(twon);
                ea[a] = 1.0;
                eb[b] = 1.0;
                gram(a, b) = eval.metric(ea, eb);
            }
        worst_sym = std::max(worst_sym, (gram - gram.transpose()).cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (gram + gram.transpose()));
        min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
    }
    return record_flag("form.compatibility", worst_sym <= 1e-6 && min_eig > 0.0, worst_sym,
                       samples, "metric symmetric and positive definite; min eigenvalue " +
                                    std::to_string(min_eig));
}

CheckRecord form_orbit_degeneracy(const Quasifold& q, Rng& rng, int samples,
                                  const SolverOptions& opts) {
    (void)opts;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
        CVec level = symplectic_pad(q.chart(chart_id), w, q.polytope.offsets);
        TangentFrame frame = tangent_frame(level, q.moment, q.tol.lin);
        Vec mix(q.kernel.dim());
        for (Eigen::Index i = 0; i < mix.size(); ++i) mix[i] = rng.uniform(-1, 1);
        Vec orbit_dir = frame.orbit_basis * mix;
        Vec v(2 * q.polytope.d);
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
        // project v into the level tangent space first
        v = frame.level_basis * (frame.level_basis.transpose() * v);
        double scale = std::max(1.0, orbit_dir.norm() * v.norm());
        worst = std::max(worst, std::abs(reduced_form(frame, orbit_dir, v)) / scale);
        // adding orbit components must not change values
        Vec u(2 * q.polytope.d);
        for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = rng.normal();
        double base = reduced_form(frame, u, v);
        double shifted = reduced_form(frame, Vec(u + orbit_dir), v);
        worst = std::max(worst, std::abs(base - shifted) / scale);
    }
    return record("form.orbit_degeneracy", worst, 1e-8, samples);
}

CheckRecord form_type_invariance(const Quasifold& q, Rng& rng, int samples,
                                 const SolverOptions& opts) {
    double worst = 0.0;
    const int twon = 2 * q.polytope.n;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        SlicePoint z = forward_sample(q, chart_id, rng);
        ChartFormEvaluator eval(q.chart(chart_id), z, q.moment, q.tol, opts);
        Vec u(twon), v(twon);
        for (int i = 0; i < twon; ++i) {
            u[i] = rng.normal();
            v[i] = rng.normal();
        }
        double plain = eval.form(u, v);
        double rotated = eval.form(rotate_realified(u), rotate_realified(v));
        worst = std::max(worst, std::abs(plain - rotated) / std::max(1.0, std::abs(plain)));
    }
    return record("form.type_invariance", worst, 1e-6, samples);
}

CheckRecord form_chart_coherence(const Quasifold& q, Rng& rng, int samples,
                                 const SolverOptions& opts) {
    if (q.chart_count() < 2)
        return {"form.chart_coherence", "skip", 0.0, 0, "single chart"};
    double worst = 0.0;
    const int twon = 2 * q.polytope.n;
    for (int s = 0; s < samples; ++s) {
        int from_id = s % q.chart_count();
        int to_id = (from_id + 1 + (s / q.chart_count()) % (q.chart_count() - 1)) % q.chart_count();
        const VertexChart& from = q.chart(from_id);
        const VertexChart& to = q.chart(to_id);
        const ChartTransition& t = q.atlas.transition(from_id, to_id);
        // keep phases near zero so the logarithms stay far from the branch cut
        SlicePoint z = forward_sample(q, from_id, rng, 0.2);

        auto transit = [&](const Vec& x) {
            SlicePoint p{from_id, complexify(x)};
            return realify(slice_transition(t, from, to, p, q.tol.geom).coords);
        };
        Vec base = realify(z.coords);
        Mat jac(twon, twon);
        for (int k = 0; k < twon; ++k) {
            Vec xp = base, xm = base;
            xp[k] += q.tol.fd_step;
            xm[k] -= q.tol.fd_step;
            jac.col(k) = (transit(xp) - transit(xm)) / (2 * q.tol.fd_step);
        }
        SlicePoint image{to_id, complexify(transit(base))};

        ChartFormEvaluator eval_from(from, z, q.moment, q.tol, opts);
        ChartFormEvaluator eval_to(to, image, q.moment, q.tol, opts);
        Vec u(twon), v(twon);
        for (int i = 0; i < twon; ++i) {
            u[i] = rng.normal();
            v[i] = rng.normal();
        }
        double lhs = eval_from.form(u, v);
        double rhs = eval_to.form(Vec(jac * u), Vec(jac * v));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return record("form.chart_coherence", worst, 1e-5, samples);
}

CheckRecord form_closedness(const Quasifold& q, Rng& rng, int points,
                            const SolverOptions& opts) {
    if (q.polytope.n == 1)
        return {"form.closedness", "pass", 0.0, 0, "top-degree form in one complex dimension"};
    if (q.polytope.n != 2)
        return {"form.closedness", "skip", 0.0, 0, "checked for two-dimensional fixtures only"};
    const int twon = 4;
    double worst = 0.0;
    const double h = 1e-3;
    for (int s = 0; s < points; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        SlicePoint z = forward_sample(q, chart_id, rng);
        Vec base = realify(z.coords);
        auto coeff = [&](const Vec& x, int a, int b) {
            SlicePoint p{chart_id, complexify(x)};
            ChartFormEvaluator eval(chart, p, q.moment, q.tol, opts);
            Vec ea = Vec::Zero(twon), eb = Vec::Zero(twon);
            ea[a] = 1.0;
            eb[b] = 1.0;
            return eval.form(ea, eb);
        };
        auto partial = [&](int dir, int a, int b) {
            Vec xp = base, xm = base;
            xp[dir] += h;
            xm[dir] -= h;
            return (coeff(xp, a, b) - coeff(xm, a, b)) / (2 * h);
        };
        for (int a = 0; a < twon; ++a)
            for (int b = a + 1; b < twon; ++b)
                for (int c = b + 1; c < twon; ++c) {
                    double d_abc = partial(a, b, c) - partial(b, a, c) + partial(c, a, b);
                    worst = std::max(worst, std::abs(d_abc));
                }
    }
    return record("form.closedness", worst, 1e-4, points);
}

CheckRecord segment_closed_form_match(const Quasifold& q, Rng& rng, int samples,
                                      const SolverOptions& opts) {
    if (q.polytope.n != 1 || q.polytope.d != 2)
        return {"segment.closed_form", "skip", 0.0, 0, "two-facet segments only"};
    double worst = 0.0;
    Vec ex = Vec::Zero(2), ey = Vec::Zero(2);
    ex[0] = 1.0;
    ey[1] = 1.0;
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        SlicePoint z = forward_sample(q, chart_id, rng);
        ChartFormEvaluator eval(chart, z, q.moment, q.tol, opts);
        double numeric = eval.form(ex, ey);
        double closed =
            interval_form_coefficient(chart, q.polytope.normals, q.polytope.offsets, z.coords[0]);
        worst = std::max(worst, std::abs(numeric - closed) / std::max(1.0, std::abs(closed)));
        // group invariance of the closed form: radial dependence only
        for (const auto& gen : chart.group_generators) {
            Complex rotated = chart.apply_phase(gen.phase, z.coords)[0];
            double other = interval_form_coefficient(chart, q.polytope.normals,
                                                     q.polytope.offsets, rotated);
            worst = std::max(worst, std::abs(other - closed));
        }
    }
    return record("segment.closed_form", worst, 1e-6, samples);
}

CheckRecord segment_pullback_identity(const Quasifold& q, Rng& rng, int samples) {
    if (q.polytope.n != 1 || q.polytope.d != 2)
        return {"segment.pullback_identity", "skip", 0.0, 0, "two-facet segments only"};
    double worst = 0.0;
    Vec ex = Vec::Zero(2), ey = Vec::Zero(2);
    ex[0] = 1.0;
    ey[1] = 1.0;
    const double standard = ambient_form(ex, ey);  // coefficient of the flat chart form
    for (int s = 0; s < samples; ++s) {
        int chart_id = s % q.chart_count();
        const VertexChart& chart = q.chart(chart_id);
        SymplecticSlicePoint w = sample_symplectic_point(q, chart_id, rng);
        SlicePoint z = to_complex_slice(chart, w, q.polytope.offsets);
        auto jac = lift_jacobian(chart, w, q.polytope.offsets, q.tol.fd_step);
        double coeff =
            interval_form_coefficient(chart, q.polytope.normals, q.polytope.offsets, z.coords[0]);
        // pullback through the lift: value on the pushed frame equals the flat form
        double pulled = coeff * (jac.matrix(0, 0) * jac.matrix(1, 1) -
                                 jac.matrix(0, 1) * jac.matrix(1, 0));
        worst = std::max(worst, std::abs(pulled - standard));
    }
    return record("segment.pullback_identity", worst, 1e-6, samples);
}

CheckRecord segment_cover_transition(const Quasifold& q, Rng& rng, int samples) {
    if (q.polytope.n != 1 || q.polytope.d != 2)
        return {"segment.cover_transition", "skip", 0.0, 0, "two-facet segments only"};
    double worst = 0.0;
    const VertexChart& cs = q.chart(0);
    const VertexChart& cn = q.chart(1);
    double slope = q.atlas.transition(0, 1).log_block(0, 0);
    for (int s = 0; s < samples; ++s) {
        Complex zeta(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5));
        double lhs = interval_cover_form(cs, q.polytope.normals, q.polytope.offsets, zeta);
        double rhs = slope * slope *
                     interval_cover_form(cn, q.polytope.normals, q.polytope.offsets, slope * zeta);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return record("segment.cover_transition", worst, 1e-6, samples);
}

CheckRecord trivial_groups(const Quasifold& q) {
    int nontrivial = 0;
    for (const auto& chart : q.atlas.charts)
        nontrivial += static_cast<int>(chart.group_generators.size());
    return {"atlas.trivial_groups", "pass", static_cast<double>(nontrivial), q.chart_count(),
            nontrivial == 0 ? "all chart groups trivial"
                            : std::to_string(nontrivial) + " nontrivial generators"};
}

}  // namespace checks

std::vector<CheckRecord> verify_quasifold(const Quasifold& q, const RunConfig& cfg) {
    Rng rng(cfg.seed);
    const int n_samples = cfg.samples;
    std::vector<CheckRecord> out;
    using namespace checks;
    out.push_back(vertex_equations(q));
    out.push_back(union_property(q, rng, n_samples));
    out.push_back(kernel_residual(q));
    out.push_back(dual_exactness(q));
    out.push_back(face_injectivity(q));
    out.push_back(stretch_fixes_nothing(q));
    out.push_back(kernel_parametrization(q, rng, n_samples));
    out.push_back(polar_recomposition(q, rng, n_samples));
    out.push_back(chart_cover(q, rng, n_samples));
    out.push_back(slice_equivariance(q, rng, n_samples));
    out.push_back(transition_equivariance(q, rng, n_samples));
    out.push_back(cocycle(q, rng, std::max(1, n_samples / 5)));
    out.push_back(offset_independence(q, 0.25));
    out.push_back(free_action_spot(q, rng, std::max(1, n_samples / 10)));
    out.push_back(torus_action_checks(q, rng, n_samples));
    out.push_back(level_membership(q, rng, n_samples));
    out.push_back(compact_invariance(q, rng, n_samples));
    out.push_back(stretch_monotone(q, rng, n_samples));
    out.push_back(pad_level(q, rng, n_samples));
    out.push_back(projection_sweep(q, rng, 2 * n_samples, cfg.solver));
    out.push_back(projection_idempotent(q, rng, n_samples, cfg.solver));
    out.push_back(projection_stretch_invariance(q, rng, std::max(1, n_samples / 2), cfg.solver));
    out.push_back(gradient_consistency(q, rng, std::max(1, n_samples / 2)));
    out.push_back(hessian_negative(q, rng, std::max(1, n_samples / 2)));
    out.push_back(projection_uniqueness(q, rng, std::max(1, n_samples / 2), cfg.solver));
    out.push_back(lift_roundtrip(q, rng, n_samples, cfg.solver));
    out.push_back(lift_torus_equivariance(q, rng, n_samples, cfg.solver));
    out.push_back(lift_group_equivariance(q, rng, n_samples));
    out.push_back(lift_jacobian_definite(q, rng, std::max(1, n_samples / 2)));
    out.push_back(form_compatibility(q, rng, std::max(1, n_samples / 2), cfg.solver));
    out.push_back(form_orbit_degeneracy(q, rng, n_samples, cfg.solver));
    out.push_back(form_type_invariance(q, rng, std::max(1, n_samples / 2), cfg.solver));
    out.push_back(form_chart_coherence(q, rng, std::max(1, n_samples / 4), cfg.solver));
    out.push_back(form_closedness(q, rng, 4, cfg.solver));
    out.push_back(segment_closed_form_match(q, rng, n_samples, cfg.solver));
    out.push_back(segment_pullback_identity(q, rng, n_samples));
    out.push_back(segment_cover_transition(q, rng, std::max(1, n_samples / 2)));
    out.push_back(trivial_groups(q));
    return out;
}

}  // namespace quasitoric
