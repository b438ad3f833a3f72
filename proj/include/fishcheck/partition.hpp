#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fishcheck/bipoly.hpp"
#include "fishcheck/graph.hpp"
#include "fishcheck/rational.hpp"
#include "fishcheck/unipoly.hpp"

namespace fishcheck {

/// Ordered list of disjoint, nonempty vertex blocks covering V(G).
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument if blocks are empty, overlap, or do not
    /// cover 0..n-1.
    Partition(std::vector<std::vector<int>> blocks, int n);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    size_t size() const { return blocks_.size(); }
    int block_of(int v) const { return owner_[static_cast<size_t>(v)]; }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> owner_;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

using QuotientMatrix = Matrix<Rational>;
/// Quotient matrix whose entries are polynomials in m.
using SymbolicMatrix = Matrix<UniPoly>;

struct NonEquitablePartition : std::runtime_error {
    NonEquitablePartition(int block_i, int block_j, const std::string& what)
        : std::runtime_error(what), block_i(block_i), block_j(block_j) {}
    int block_i;
    int block_j;
};

/// Block-level neighbour counts. Throws NonEquitablePartition naming the first
/// (i, j) block pair whose members disagree on their count into block j.
QuotientMatrix quotient(const Graph& g, const Partition& p);

/// det(xI - Q) by fraction-free elimination over Q[x].
UniPoly char_poly(const QuotientMatrix& q);
/// det(xI - Q(m)) by fraction-free elimination over Q[x, m].
BiPoly char_poly(const SymbolicMatrix& q);

/// Adjacency matrix of g as a rational matrix.
QuotientMatrix adjacency_matrix(const Graph& g);

SymbolicMatrix to_symbolic(const QuotientMatrix& q);
QuotientMatrix at_m(const SymbolicMatrix& q, const Rational& m);

/// Fraction-free (Bareiss) determinant over an integral domain R. R must
/// provide *, -, unary -, is_zero(), exact_div(), and construction from int.
template <class R>
R bareiss_determinant(Matrix<R> a) {
    const size_t n = a.size();
    if (n == 0) return R(1);
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    bool negate = false;
    R prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return R(0);
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = t.exact_div(prev);
            }
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace fishcheck
