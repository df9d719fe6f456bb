#include "sesqui/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sesqui {

SymMatrix::SymMatrix(int order) : n_(order) {
    if (order < 1) throw std::invalid_argument("matrix order must be positive");
    a_.assign(static_cast<size_t>(order) * order, 0.0);
}

SymMatrix::SymMatrix(int order, const std::vector<double>& entries) : n_(order), a_(entries) {
    if (order < 1) throw std::invalid_argument("matrix order must be positive");
    if (entries.size() != static_cast<size_t>(order) * order)
        throw std::invalid_argument("entry count does not match order");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > 1e-12)
                throw std::invalid_argument("matrix is not symmetric");
}

void SymMatrix::set(int i, int j, double value) {
    a_[static_cast<size_t>(i) * n_ + j] = value;
    a_[static_cast<size_t>(j) * n_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) m.set(u, v, 1.0);
    return m;
}

namespace {

// Cyclic Jacobi with the classical threshold schedule. Plenty for the dense
// orders (a few hundred) this project sees, and self-contained.
void jacobi(std::vector<double>& a, int n, std::vector<double>* vecs) {
    if (vecs) {
        vecs->assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*vecs)[static_cast<size_t>(i) * n + i] = 1.0;
    }
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[idx(p, q)] * a[idx(p, q)];
        if (off <= 1e-28 * n * n) return;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[idx(p, q)];
                if (std::abs(apq) < 1e-300) continue;
                double app = a[idx(p, p)], aqq = a[idx(q, q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int i = 0; i < n; ++i) {
                    double aip = a[idx(i, p)], aiq = a[idx(i, q)];
                    a[idx(i, p)] = c * aip - s * aiq;
                    a[idx(i, q)] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[idx(p, i)], aqi = a[idx(q, i)];
                    a[idx(p, i)] = c * api - s * aqi;
                    a[idx(q, i)] = s * api + c * aqi;
                }
                if (vecs) {
                    for (int i = 0; i < n; ++i) {
                        double vip = (*vecs)[idx(i, p)], viq = (*vecs)[idx(i, q)];
                        (*vecs)[idx(i, p)] = c * vip - s * viq;
                        (*vecs)[idx(i, q)] = s * vip + c * viq;
                    }
                }
            }
        }
    }
}

}  // namespace

std::vector<double> eigenvalues_sym(const SymMatrix& m) {
    int n = m.order();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    jacobi(a, n, nullptr);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = a[static_cast<size_t>(i) * n + i];
    std::sort(values.begin(), values.end());
    return values;
}

EigenSystem eigen_sym(const SymMatrix& m) {
    int n = m.order();
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    std::vector<double> vecs;
    jacobi(a, n, &vecs);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
        return a[static_cast<size_t>(x) * n + x] < a[static_cast<size_t>(y) * n + y];
    });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        int col = perm[k];
        sys.values[k] = a[static_cast<size_t>(col) * n + col];
        for (int i = 0; i < n; ++i) sys.vectors[k][i] = vecs[static_cast<size_t>(i) * n + col];
    }
    return sys;
}

double smallest_eigenvalue(const Graph& g) {
    return eigenvalues_sym(adjacency_matrix(g)).front();
}

QuotientMatrix quotient_matrix(const Graph& g, const Partition& p) {
    int n = g.order();
    std::vector<int> cell_of(n, -1);
    int r = int(p.cells.size());
    if (r == 0) throw std::invalid_argument("partition has no cells");
    for (int i = 0; i < r; ++i) {
        if (p.cells[i].empty()) throw std::invalid_argument("partition has an empty cell");
        for (int v : p.cells[i]) {
            if (v < 0 || v >= n || cell_of[v] != -1)
                throw std::invalid_argument("partition cells must be disjoint subsets of the vertex set");
            cell_of[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (cell_of[v] == -1) throw std::invalid_argument("partition does not cover all vertices");

    QuotientMatrix q;
    q.order = r;
    q.entries.assign(static_cast<size_t>(r) * r, 0.0);
    q.cell_sizes.resize(r);
    for (int i = 0; i < r; ++i) q.cell_sizes[i] = int(p.cells[i].size());

    std::vector<long long> counts(static_cast<size_t>(r) * r, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) ++counts[static_cast<size_t>(cell_of[u]) * r + cell_of[v]];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            q.entries[static_cast<size_t>(i) * r + j] =
                double(counts[static_cast<size_t>(i) * r + j]) / q.cell_sizes[i];
    return q;
}

QuotientMatrix quotient_from_entries(int order, const std::vector<double>& entries,
                                     const std::vector<int>& cell_sizes) {
    if (order < 1 || entries.size() != static_cast<size_t>(order) * order ||
        cell_sizes.size() != static_cast<size_t>(order))
        throw std::invalid_argument("quotient matrix shape mismatch");
    for (int s : cell_sizes)
        if (s < 1) throw std::invalid_argument("cell sizes must be positive");
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            double lhs = cell_sizes[i] * entries[static_cast<size_t>(i) * order + j];
            double rhs = cell_sizes[j] * entries[static_cast<size_t>(j) * order + i];
            if (std::abs(lhs - rhs) > 1e-9)
                throw std::invalid_argument("entries are not size-symmetric");
        }
    return QuotientMatrix{order, entries, cell_sizes};
}

std::vector<double> eigenvalues(const QuotientMatrix& q) {
    int r = q.order;
    SymMatrix s(r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            double scaled = q.at(i, j) * std::sqrt(double(q.cell_sizes[i]) / q.cell_sizes[j]);
            s.set(i, j, scaled);
        }
    return eigenvalues_sym(s);
}

double smallest_eigenvalue(const QuotientMatrix& q) { return eigenvalues(q).front(); }

QuotientMatrix quartet_quotient_matrix(int k) {
    if (k < 3) throw std::invalid_argument("valency must be at least 3");
    double kd = k;
    std::vector<double> b = {
        0.0, kd, 0.0,
        1.0, kd - 1.0 - 4.0 * (kd - 1.0) / kd, 4.0 * (kd - 1.0) / kd,
        0.0, kd - 1.0, 1.0};
    return quotient_from_entries(3, b, {1, k, 4});
}

double quartet_quotient_bound(int k) {
    if (k < 3) throw std::invalid_argument("valency must be at least 3");
    double kd = k;
    return -(2.0 * (kd - 1.0) + std::sqrt(5.0 * kd * kd - 8.0 * kd + 4.0)) / kd;
}

QuotientMatrix geodesic_quotient_matrix(int k) {
    if (k < 3) throw std::invalid_argument("valency must be at least 3");
    double kd = k;
    std::vector<double> b = {
        0.0, kd, 0.0, 0.0,
        1.0, 0.0, kd - 1.0, 0.0,
        0.0, kd - 1.0, 0.0, 1.0,
        0.0, 0.0, kd, 0.0};
    return quotient_from_entries(4, b, {1, k, k, 1});
}

std::array<std::array<long long, 3>, 3> clique_extension_quotient(long long w) {
    if (w < 0) throw std::invalid_argument("subset size must be nonnegative");
    return {{{0, w, 0}, {1, w - 1, 41}, {0, w, 40}}};
}

long long clique_extension_determinant(long long w) {
    if (w < 0) throw std::invalid_argument("subset size must be nonnegative");
    return -37 * w + 258;
}

bool interlacing_check(const Graph& g, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    double sub = smallest_eigenvalue(induced_subgraph(g, subset));
    return sub >= smallest_eigenvalue(g) - 1e-8;
}

}  // namespace sesqui
