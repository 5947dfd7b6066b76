#pragma once

#include <vector>

#include "quasitoric/polytope.hpp"
#include "quasitoric/types.hpp"

namespace quasitoric {

/// The linear map R^d -> R^n sending the standard basis vector e_j to the
/// facet normal X_j; read complex-linearly it acts on C^d.
struct ProjectionMap {
    Mat matrix;  // n x d, column j = X_j

    static ProjectionMap from_polytope(const PolytopeData& p) {
        return {p.normals.transpose()};
    }

    int n() const { return static_cast<int>(matrix.rows()); }
    int d() const { return static_cast<int>(matrix.cols()); }

    Vec apply(const Vec& v) const { return matrix * v; }
    CVec apply(const CVec& v) const { return matrix * v; }
};

/// Orthonormal basis of ker(projection), columns of a d x (d-n) matrix.
/// Rows of B^T coordinatize the dual of the kernel; all dual-valued
/// quantities in the moment/solver code share this basis.
struct KernelBasis {
    Mat B;  // d x (d-n)

    int d() const { return static_cast<int>(B.rows()); }
    int dim() const { return static_cast<int>(B.cols()); }
};

/// Rank-revealing (SVD) kernel computation. Throws ValidationError if the
/// projection is rank-deficient.
KernelBasis kernel_basis(const ProjectionMap& pi, double eps_lin);

/// Cached solve data for expressing vectors in the basis {X_j : j in I} of
/// a simple vertex. Coefficients are ordered by the sorted index set I.
class VertexBasis {
public:
    VertexBasis() = default;
    VertexBasis(const VertexData& vertex, const Mat& normals);

    const IndexSet& index_set() const { return indices_; }

    /// Coefficients u with  v = sum_{j in I} u_j X_j  (the inverse of the
    /// vertex isomorphism). Works complex-linearly.
    Vec solve(const Vec& v) const;
    CVec solve(const CVec& v) const;

    /// Embed coefficients on I into an ambient d-vector (zero off I).
    CVec embed(const CVec& coeffs, int d) const;
    Vec embed(const Vec& coeffs, int d) const;

private:
    IndexSet indices_;
    Mat basis_;  // n x n, column i = X_{I[i]}
    Eigen::PartialPivLU<Mat> lu_;
};

/// Matrix (a_{jh}) with X_h = sum_{j in I} a_{jh} X_j; rows follow the
/// sorted order of I, columns run over all facets 1..d. Columns with h in I
/// are standard basis vectors.
Mat normals_in_vertex_basis(const VertexData& vertex, const Mat& normals);

/// Quasilattice containing every facet normal: generators plus the integer
/// coefficients expressing each normal in them.
struct QuasilatticeData {
    Mat generators;        // g x n, row a = q_a
    Eigen::MatrixXi coefficients;  // d x g, normals = coefficients * generators

    int count() const { return static_cast<int>(generators.rows()); }
};

/// Validates span and finds integer coefficients of the normals over the
/// generators (identity when the generators are the normals themselves).
QuasilatticeData make_quasilattice(const Mat& generators, const Mat& normals, double eps_lin);

/// Element of the discrete chart group at a vertex: an integer word over
/// the quasilattice generators together with the induced phase vector on
/// the slice coordinates. Acts by z_j -> exp(2 pi i c_j) z_j, j in I.
struct ChartGroupElement {
    IVec word;   // length = generator count
    Vec phase;   // length n, ordered by sorted I
};

/// Nontrivial chart-group generators at a vertex: images of the
/// quasilattice generators under the vertex-basis solve, dropping those
/// with integral phase vector (they act trivially).
std::vector<ChartGroupElement> chart_group_generators(const VertexBasis& basis,
                                                      const QuasilatticeData& q,
                                                      double eps_geom);

/// Distance of each entry to the nearest integer, max over entries.
double integrality_defect(const Vec& phase);

/// Element of the complexified kernel group, represented by its Lie-algebra
/// coefficients over the kernel basis. Real coefficients give the compact
/// part, purely imaginary ones the stretching part.
struct KernelGroupElement {
    CVec coeffs;  // d-n kernel-basis coefficients

    /// Componentwise multipliers exp(2 pi i (B c)_j) on C^d.
    CVec multipliers(const KernelBasis& B) const;

    bool is_compact(double eps) const { return coeffs.imag().norm() <= eps; }
    bool is_stretch(double eps) const { return coeffs.real().norm() <= eps; }
};

struct PolarSplit {
    KernelGroupElement compact;  // real coefficients
    KernelGroupElement stretch;  // purely imaginary coefficients
};

/// Unique polar decomposition of a complexified kernel-group element.
PolarSplit polar_split(const KernelGroupElement& w);

}  // namespace quasitoric
