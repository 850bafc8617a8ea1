#include "seifertwitt/linalg.hpp"

#include "seifertwitt/errors.hpp"

#include <algorithm>

namespace sw {

Rref rref(QMatrix m) {
    Rref out;
    std::size_t r = 0;
    Rat t;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (sgn(m(r, j)) == 0) continue;
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
                m(i, j) -= t;
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Rat determinant(QMatrix m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
    std::size_t n = m.rows();
    Rat det = 1, t;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rat inv = 1 / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rat f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) {
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(c, j).get_mpq_t());
                m(i, j) -= t;
            }
        }
    }
    return det;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    auto r = rref(hstack(m, QMatrix::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw SingularError("matrix is singular");
    return r.reduced.block(0, n, n, n);
}

QMatrix kernel(const QMatrix& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    QMatrix k(m.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], f) = -r.reduced(i, free[f]);
    }
    return k;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
    auto r = rref(hstack(a, b));
    std::size_t n = a.cols();
    QMatrix x(n, b.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
    }
    return x;
}

SolveResult solve_or_kernel(const QMatrix& m, const QMatrix* rhs) {
    SolveResult out;
    auto r = rref(m);
    out.rank = r.pivots.size();
    out.kernel = kernel(m);
    if (m.is_square() && out.rank == m.rows()) out.inverse = inverse(m);
    if (rhs) {
        out.particular = solve(m, *rhs);
        out.consistent = out.particular.has_value();
    }
    return out;
}

QMatrix canonical_basis(const QMatrix& cols) {
    auto r = rref(cols.transpose());
    return r.reduced.block(0, 0, r.pivots.size(), cols.rows()).transpose();
}

std::vector<std::size_t> leading_positions(const QMatrix& canonical) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < canonical.cols(); ++j) {
        std::size_t i = 0;
        while (i < canonical.rows() && sgn(canonical(i, j)) == 0) ++i;
        out.push_back(i);
    }
    return out;
}

QMatrix span_sum(const QMatrix& a, const QMatrix& b) { return canonical_basis(hstack(a, b)); }

QMatrix intersect(const QMatrix& a, const QMatrix& b) {
    // a x = b y
    auto k = kernel(hstack(a, -b));
    return canonical_basis(a * k.block(0, 0, a.cols(), k.cols()));
}

bool span_contains(const QMatrix& space, const QMatrix& vecs) {
    return rank(hstack(space, vecs)) == rank(space);
}

QMatrix complement_section(const QMatrix& big, const QMatrix& small) {
    auto lb = leading_positions(big);
    auto ls = leading_positions(canonical_basis(small));
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < lb.size(); ++j)
        if (std::find(ls.begin(), ls.end(), lb[j]) == ls.end()) keep.push_back(j);
    return big.select_cols(keep);
}

QMatrix annihilator(const QMatrix& cols, std::size_t n) {
    if (cols.cols() == 0) return QMatrix::identity(n);
    return canonical_basis(kernel(cols.transpose()));
}

}  // namespace sw
