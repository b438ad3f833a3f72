#include "fishcheck/partition.hpp"

#include <sstream>

namespace fishcheck {

Partition::Partition(std::vector<std::vector<int>> blocks, int n)
    : blocks_(std::move(blocks)), owner_(static_cast<size_t>(n), -1) {
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) throw std::invalid_argument("Partition: block " + std::to_string(b) + " is empty");
        for (int v : blocks_[b]) {
            if (v < 0 || v >= n) throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " out of range");
            if (owner_[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " appears twice");
            owner_[static_cast<size_t>(v)] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner_[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " not covered");
}

QuotientMatrix quotient(const Graph& g, const Partition& p) {
    const size_t k = p.size();
    QuotientMatrix q(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i) {
        const auto& block = p.blocks()[i];
        std::vector<std::vector<int>> counts(block.size(), std::vector<int>(k, 0));
        for (size_t t = 0; t < block.size(); ++t)
            for (int w : g.neighbors(block[t])) ++counts[t][static_cast<size_t>(p.block_of(w))];
        for (size_t j = 0; j < k; ++j) {
            for (size_t t = 1; t < block.size(); ++t) {
                if (counts[t][j] != counts[0][j]) {
                    std::ostringstream os;
                    os << "partition is not equitable: block " << i << " -> block " << j << ": vertex " << block[0]
                       << " has " << counts[0][j] << " neighbours, vertex " << block[t] << " has " << counts[t][j];
                    throw NonEquitablePartition(static_cast<int>(i), static_cast<int>(j), os.str());
                }
            }
            q[i][j] = Rational(counts[0][j]);
        }
    }
    return q;
}

UniPoly char_poly(const QuotientMatrix& q) {
    const size_t n = q.size();
    Matrix<UniPoly> a(n, std::vector<UniPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        if (q[i].size() != n) throw std::invalid_argument("char_poly: matrix is not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = UniPoly(-q[i][j]);
        a[i][i] += UniPoly::variable();
    }
    return bareiss_determinant(std::move(a));
}

BiPoly char_poly(const SymbolicMatrix& q) {
    const size_t n = q.size();
    Matrix<BiPoly> a(n, std::vector<BiPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        if (q[i].size() != n) throw std::invalid_argument("char_poly: matrix is not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = -BiPoly::from_m(q[i][j]);
        a[i][i] += BiPoly::x();
    }
    return bareiss_determinant(std::move(a));
}

QuotientMatrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<size_t>(g.order());
    QuotientMatrix a(n, std::vector<Rational>(n));
    for (auto [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = Rational(1);
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = Rational(1);
    }
    return a;
}

SymbolicMatrix to_symbolic(const QuotientMatrix& q) {
    SymbolicMatrix s(q.size());
    for (size_t i = 0; i < q.size(); ++i)
        for (const auto& v : q[i]) s[i].push_back(UniPoly(v));
    return s;
}

QuotientMatrix at_m(const SymbolicMatrix& q, const Rational& m) {
    QuotientMatrix r(q.size());
    for (size_t i = 0; i < q.size(); ++i)
        for (const auto& p : q[i]) r[i].push_back(p(m));
    return r;
}

}  // namespace fishcheck
