#include "quasitoric/quasifold.hpp"

namespace quasitoric {

int Quasifold::chart_for(const CVec& z) const {
    auto face = membership(z);
    if (!face)
        throw DomainError("point is not in the admissible set: zero pattern is not a face");
    int best = -1;
    double best_margin = -1.0;
    for (const auto& c : atlas.charts) {
        if (!is_subset(*face, c.index_set())) continue;
        double margin = std::numeric_limits<double>::infinity();
        for (int j : c.off_indices) margin = std::min(margin, std::abs(z[j]));
        if (margin > best_margin) {
            best_margin = margin;
            best = c.id;
        }
    }
    if (best < 0) throw DomainError("no chart contains the point");  // unreachable when simple
    return best;
}

ProjectionResult Quasifold::project(const CVec& z, const SolverOptions& opts) const {
    if (!membership(z))
        throw DomainError("point is not in the admissible set: zero pattern " +
                          index_set_string([&] {
                              IndexSet s;
                              for (int j = 0; j < polytope.d; ++j)
                                  if (std::abs(z[j]) <= tol.geom) s.push_back(j);
                              return s;
                          }()) +
                          " is not a face index set");
    return project_to_level(z, moment, opts);
}

Quasifold build_quasifold(const ParsedSpec& spec, const Tolerances& tol) {
    Quasifold q;
    q.tol = tol;
    q.polytope = spec.polytope;
    validate(q.polytope, tol.geom);
    q.quasilattice = make_quasilattice(spec.quasilattice, q.polytope.normals, tol.lin);
    q.vertices = enumerate_vertices(q.polytope, tol.geom);
    q.faces = face_index_sets(q.polytope, tol.geom);
    q.kernel = kernel_basis(ProjectionMap::from_polytope(q.polytope), tol.lin);
    q.atlas = build_atlas(q.polytope, q.quasilattice, tol.geom);
    q.moment = MomentMap{q.kernel.B, q.polytope.offsets};
    return q;
}

}  // namespace quasitoric
