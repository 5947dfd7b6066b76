#include "quasitoric/polytope.hpp"

#include <json.hpp>

#include <map>

#include "quasitoric/expr.hpp"

namespace quasitoric {

namespace {

/// Next k-combination of {0..d-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int d) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < d - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

IndexSet active_set(const PolytopeData& p, const Vec& mu, double eps) {
    IndexSet act;
    Vec s = p.slacks(mu);
    for (int j = 0; j < p.d; ++j)
        if (std::abs(s[j]) <= eps) act.push_back(j);
    return act;
}

}  // namespace

std::vector<VertexData> scan_vertices(const PolytopeData& p, double eps_geom) {
    std::vector<VertexData> out;
    if (p.n == 0 || p.d < p.n) return out;
    std::vector<int> combo(p.n);
    for (int i = 0; i < p.n; ++i) combo[i] = i;
    const double point_merge = 1e4 * eps_geom;
    do {
        Mat A(p.n, p.n);
        Vec b(p.n);
        for (int i = 0; i < p.n; ++i) {
            A.row(i) = p.normals.row(combo[i]);
            b[i] = p.offsets[combo[i]];
        }
        Eigen::FullPivLU<Mat> lu(A);
        lu.setThreshold(1e-12);
        if (lu.rank() < p.n) continue;
        Vec mu = lu.solve(b);
        Vec slack = p.slacks(mu);
        if ((slack.array() < -eps_geom).any()) continue;
        bool duplicate = false;
        for (const auto& v : out)
            if ((v.point - mu).norm() <= point_merge * (1.0 + mu.norm())) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        out.push_back({mu, active_set(p, mu, eps_geom)});
    } while (next_combination(combo, p.d));
    std::sort(out.begin(), out.end(),
              [](const VertexData& a, const VertexData& b) { return a.active < b.active; });
    return out;
}

namespace {

/// The recession cone { v : <v, X_j> >= 0 } is trivial iff the polytope is
/// bounded. Its extreme rays, if any, are cut out by n-1 independent
/// normals, so a combinatorial ray scan decides boundedness.
bool is_bounded(const PolytopeData& p, double eps_geom) {
    if (p.n == 1) {
        for (double dir : {1.0, -1.0})
            if ((p.normals.col(0).array() * dir >= -eps_geom).all()) return false;
        return true;
    }
    std::vector<int> combo(p.n - 1);
    for (int i = 0; i < p.n - 1; ++i) combo[i] = i;
    do {
        Mat A(p.n - 1, p.n);
        for (int i = 0; i < p.n - 1; ++i) A.row(i) = p.normals.row(combo[i]);
        Eigen::FullPivLU<Mat> lu(A);
        lu.setThreshold(1e-12);
        if (lu.rank() < p.n - 1) continue;
        Mat null_space = lu.kernel();
        if (null_space.cols() != 1) continue;
        Vec v = null_space.col(0).normalized();
        for (double sign : {1.0, -1.0})
            if (((p.normals * (sign * v)).array() >= -eps_geom).all()) return false;
    } while (next_combination(combo, p.d));
    return true;
}

}  // namespace

void validate(const PolytopeData& p, double eps_geom) {
    if (p.n < 1) throw ValidationError("field n: ambient dimension must be >= 1");
    if (p.d < p.n + 1)
        throw ValidationError("field normals: need at least n+1 facets, got " +
                              std::to_string(p.d));
    if (p.normals.rows() != p.d || p.normals.cols() != p.n)
        throw ValidationError("field normals: expected a " + std::to_string(p.d) + " x " +
                              std::to_string(p.n) + " array");
    if (p.offsets.size() != p.d)
        throw ValidationError("field offsets: expected " + std::to_string(p.d) + " entries");
    for (int j = 0; j < p.d; ++j)
        if (p.normals.row(j).norm() <= eps_geom)
            throw ValidationError("field normals: zero normal at facet " + std::to_string(j + 1));
    if (!is_bounded(p, eps_geom))
        throw ValidationError("field offsets/normals: polytope is unbounded");
    auto verts = scan_vertices(p, eps_geom);
    if (verts.empty())
        throw ValidationError("field offsets/normals: polytope is empty");
    std::vector<bool> essential(static_cast<size_t>(p.d), false);
    for (const auto& v : verts)
        for (int j : v.active) essential[static_cast<size_t>(j)] = true;
    for (int j = 0; j < p.d; ++j)
        if (!essential[static_cast<size_t>(j)])
            throw ValidationError("field normals: redundant facet " + std::to_string(j + 1) +
                                  " (touches no vertex)");
}

std::vector<VertexData> enumerate_vertices(const PolytopeData& p, double eps_geom) {
    auto verts = scan_vertices(p, eps_geom);
    for (const auto& v : verts) {
        if (static_cast<int>(v.active.size()) > p.n)
            throw NonSimpleError("non-simple vertex: " + std::to_string(v.active.size()) +
                                     " active facets " + index_set_string(v.active) +
                                     " at a vertex of an n=" + std::to_string(p.n) + " polytope",
                                 v.point, v.active);
        // rank check of the active normals (simplicity at this vertex)
        Mat A(static_cast<int>(v.active.size()), p.n);
        for (size_t i = 0; i < v.active.size(); ++i) A.row(static_cast<int>(i)) = p.normals.row(v.active[i]);
        Eigen::FullPivLU<Mat> lu(A);
        lu.setThreshold(1e-12);
        if (lu.rank() < static_cast<int>(v.active.size()))
            throw ValidationError("degenerate vertex: active normals are dependent at " +
                                  index_set_string(v.active));
    }
    return verts;
}

std::set<IndexSet> face_index_sets(const PolytopeData& p, double eps_geom) {
    auto verts = enumerate_vertices(p, eps_geom);
    std::set<IndexSet> faces;
    for (const auto& v : verts) {
        const int k = static_cast<int>(v.active.size());
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            IndexSet s;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) s.push_back(v.active[static_cast<size_t>(i)]);
            faces.insert(s);
        }
    }
    return faces;
}

std::optional<IndexSet> ambient_membership(const CVec& z, const PolytopeData& p,
                                           double eps_geom) {
    IndexSet zero;
    for (int j = 0; j < p.d; ++j)
        if (std::abs(z[j]) <= eps_geom) zero.push_back(j);
    auto faces = face_index_sets(p, eps_geom);
    if (faces.count(zero)) return zero;
    return std::nullopt;
}

namespace {

double json_number(const nlohmann::ordered_json& v, const std::map<std::string, double>& vars,
                   const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return eval_expression(v.get<std::string>(), vars);
    throw ParseError("field " + field + ": expected number or expression string");
}

Mat json_matrix(const nlohmann::ordered_json& v, const std::map<std::string, double>& vars,
                const std::string& field) {
    if (!v.is_array() || v.empty()) throw ParseError("field " + field + ": expected a nonempty array");
    const size_t rows = v.size();
    size_t cols = 0;
    Mat m;
    for (size_t i = 0; i < rows; ++i) {
        const auto& row = v[i];
        if (!row.is_array() || row.empty())
            throw ParseError("field " + field + ": row " + std::to_string(i + 1) +
                             " must be a nonempty array");
        if (i == 0) {
            cols = row.size();
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (row.size() != cols) {
            throw ParseError("field " + field + ": ragged rows");
        }
        for (size_t jcol = 0; jcol < cols; ++jcol)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(jcol)) =
                json_number(row[jcol], vars, field);
    }
    return m;
}

}  // namespace

ParsedSpec parse_spec(const std::string& text, double eps_geom) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec must be a JSON object");

    std::map<std::string, double> vars;
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw ParseError("field params: expected an object");
        for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
            vars[it.key()] = json_number(it.value(), vars, "params." + it.key());
    }

    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("field n: expected an integer");
    PolytopeData p;
    p.n = j["n"].get<int>();
    if (!j.contains("normals")) throw ParseError("field normals: missing");
    p.normals = json_matrix(j["normals"], vars, "normals");
    p.d = static_cast<int>(p.normals.rows());
    if (p.normals.cols() != p.n)
        throw ParseError("field normals: rows must have n = " + std::to_string(p.n) +
                         " entries");
    if (!j.contains("offsets") || !j["offsets"].is_array())
        throw ParseError("field offsets: expected an array");
    const auto& off = j["offsets"];
    if (static_cast<int>(off.size()) != p.d)
        throw ParseError("field offsets: expected " + std::to_string(p.d) + " entries");
    p.offsets.resize(p.d);
    for (int i = 0; i < p.d; ++i)
        p.offsets[i] = json_number(off[static_cast<size_t>(i)], vars, "offsets");

    ParsedSpec spec;
    spec.polytope = p;
    if (j.contains("quasilattice")) {
        spec.quasilattice = json_matrix(j["quasilattice"], vars, "quasilattice");
        if (spec.quasilattice.cols() != p.n)
            throw ParseError("field quasilattice: rows must have n entries");
    } else {
        spec.quasilattice = p.normals;
    }

    validate(spec.polytope, eps_geom);
    return spec;
}

}  // namespace quasitoric
