#ifndef SESQUI_SPECTRA_HPP
#define SESQUI_SPECTRA_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

/// Dense real symmetric matrix. Construction rejects asymmetry beyond 1e-12.
class SymMatrix {
public:
    explicit SymMatrix(int order);
    SymMatrix(int order, const std::vector<double>& entries);

    int order() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);  // writes (i,j) and (j,i)
    double trace() const;

private:
    int n_;
    std::vector<double> a_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// All eigenvalues in ascending order, via cyclic Jacobi rotations.
std::vector<double> eigenvalues_sym(const SymMatrix& m);

/// Eigenvalues plus an orthonormal eigenvector per column of `vectors`
/// (vectors[i] is the eigenvector for values[i]).
struct EigenSystem {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
EigenSystem eigen_sym(const SymMatrix& m);

double smallest_eigenvalue(const Graph& g);

/// Quotient of a graph by a vertex partition: entry (i,j) is the average
/// number of neighbors in cell j over vertices of cell i. Not symmetric in
/// general, but conjugation by sqrt(cell sizes) is, which is how eigenvalues
/// are computed (they are therefore always real).
struct QuotientMatrix {
    int order = 0;
    std::vector<double> entries;      // row-major, order x order
    std::vector<int> cell_sizes;

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * order + j]; }
};

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p);

/// Builds a quotient matrix directly from entries and cell sizes, checking
/// only that the size-weighted matrix is symmetric. Formal configurations
/// that no graph realizes are allowed here; negative averages included.
QuotientMatrix quotient_from_entries(int order, const std::vector<double>& entries,
                                     const std::vector<int>& cell_sizes);

std::vector<double> eigenvalues(const QuotientMatrix& q);
double smallest_eigenvalue(const QuotientMatrix& q);

/// 3-cell quotient for a vertex, its k neighbors, and four outside vertices
/// inducing two disjoint edges, each with k-1 neighbors back in the middle
/// cell. Arises in the c = k-1, diameter-2 analysis.
QuotientMatrix quartet_quotient_matrix(int k);

/// Closed form for the smallest eigenvalue of quartet_quotient_matrix(k):
/// -(2(k-1) + sqrt(5k^2 - 8k + 4)) / k. Equals -3 exactly at k = 3 and
/// decreases toward -2 - sqrt(5).
double quartet_quotient_bound(int k);

/// 4-cell geodesic quotient {x0} | N(x0) | N(x3) | {x3} for a distance-3
/// pair in a (n,k,k-1) sesqui-regular graph; smallest eigenvalue is -k.
QuotientMatrix geodesic_quotient_matrix(int k);

/// Quotient [[0,w,0],[1,w-1,41],[0,w,40]] for a vertex attached to a
/// w-subset of a large clique.
std::array<std::array<long long, 3>, 3> clique_extension_quotient(long long w);

/// Exact integer determinant of clique_extension_quotient(w) + 3I,
/// which works out to -37w + 258; negative exactly when w >= 7.
long long clique_extension_determinant(long long w);

/// True iff the induced subgraph's smallest eigenvalue is at least the
/// graph's, within 1e-8. Eigenvalue interlacing guarantees this for every
/// input; the function exists as a property-test oracle.
bool interlacing_check(const Graph& g, const std::vector<int>& subset);

}  // namespace sesqui

#endif
