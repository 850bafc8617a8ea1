#pragma once

#include "seifertwitt/factor.hpp"
#include "seifertwitt/linalg.hpp"
#include "seifertwitt/poly.hpp"
#include "seifertwitt/rng.hpp"
#include "seifertwitt/seifert.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fixtures {

using sw::QMatrix;
using sw::Rat;

inline QMatrix example_s() {
    return QMatrix::from_rows({{1, 0, 1, 0, 0, 0},
                               {0, 1, -1, -1, -1, 0},
                               {0, 1, 0, 0, 0, -1},
                               {0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 1, -1},
                               {0, 0, 1, 0, 1, 0}});
}

inline QMatrix example_phi() {
    return QMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                               {0, 0, -1, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0},
                               {-1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 1, 0}});
}

inline sw::SeifertModule example_module() { return sw::block_module(example_s(), {4, 2}, sw::Ring::Z); }
inline sw::SeifertForm example_form() { return {example_module(), -1, example_phi()}; }

inline QMatrix quotient_s() {
    return QMatrix::from_rows({{1, -1, -1, 0}, {1, 0, 0, -1}, {1, 0, 1, -1}, {0, 1, 1, 0}});
}
inline QMatrix quotient_phi() {
    return QMatrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}
inline sw::SeifertForm quotient_form() { return {sw::block_module(quotient_s(), {2, 2}), -1, quotient_phi()}; }

inline QMatrix random_matrix(sw::Rng& rng, std::size_t r, std::size_t c, long lo = -2, long hi = 2) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.range(lo, hi);
    return m;
}

inline QMatrix random_invertible(sw::Rng& rng, std::size_t n) {
    for (;;) {
        QMatrix m = random_matrix(rng, n, n);
        if (sw::determinant(m) != 0) return m;
    }
}

inline sw::SeifertModule random_module(sw::Rng& rng, const std::vector<std::size_t>& sizes) {
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    return sw::block_module(random_matrix(rng, n, n), sizes);
}

// block-diagonal change of basis keeps coordinate projections
inline QMatrix random_block_invertible(sw::Rng& rng, const std::vector<std::size_t>& sizes) {
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    QMatrix p(n, n);
    std::size_t at = 0;
    for (auto sz : sizes) {
        p.set_block(at, at, random_invertible(rng, sz));
        at += sz;
    }
    return p;
}

inline sw::SeifertModule conjugate(const sw::SeifertModule& m, const QMatrix& p) {
    sw::SeifertModule out = m;
    QMatrix pinv = sw::inverse(p);
    out.s = p * m.s * pinv;
    for (auto& e : out.proj) e = p * e * pinv;
    return out;
}

// phi = A + zeta A^T must be block diagonal; s = phi^-1 A
inline sw::SeifertForm random_form(sw::Rng& rng, int zeta, const std::vector<std::size_t>& sizes) {
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::vector<std::size_t> start;
    std::size_t at = 0;
    for (auto sz : sizes) {
        start.push_back(at);
        at += sz;
    }
    for (auto sz : sizes)
        if (zeta == -1 && sz % 2) throw std::invalid_argument("skew blocks need even size");
    for (;;) {
        QMatrix a(n, n);
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (std::size_t j = i; j < sizes.size(); ++j) {
                QMatrix b = random_matrix(rng, sizes[i], sizes[j]);
                a.set_block(start[i], start[j], b);
                if (j != i) a.set_block(start[j], start[i], Rat(-zeta) * b.transpose());
            }
        QMatrix phi = a + Rat(zeta) * a.transpose();
        if (sw::determinant(phi) == 0) continue;
        QMatrix s = sw::inverse(phi) * a;
        return {sw::block_module(s, sizes), zeta, phi};
    }
}

// iterated extension of one-dimensional layers with s = 0 or s = 1
inline sw::SeifertModule random_primitive(sw::Rng& rng, const std::vector<std::size_t>& sizes) {
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    QMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        s(i, i) = rng.range(0, 1);
        for (std::size_t j = i + 1; j < n; ++j) s(i, j) = rng.range(-2, 2);
    }
    return conjugate(sw::block_module(s, sizes), random_block_invertible(rng, sizes));
}

// ---- independent oracles

// fraction-free Bareiss elimination on an integer-scaled copy
inline std::size_t bareiss_rank(const QMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<sw::Int>> a(r, std::vector<sw::Int>(c));
    for (std::size_t i = 0; i < r; ++i) {
        sw::Int den = 1;
        for (std::size_t j = 0; j < c; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
    }
    sw::Int prev = 1;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t p = rk;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t i = rk + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[rk][col] * a[i][j] - a[i][col] * a[rk][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

inline Rat leibniz_det(const QMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Durand-Kerner root finder, used as a floating oracle for real-root counts
inline int numeric_real_roots(const std::vector<double>& low_to_high, double tol = 1e-7) {
    using C = std::complex<long double>;
    int n = static_cast<int>(low_to_high.size()) - 1;
    std::vector<long double> a(low_to_high.begin(), low_to_high.end());
    for (auto& x : a) x /= low_to_high.back();
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::pow(C(0.4L, 0.9L), i);
    auto eval = [&](C x) {
        C acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + a[i];
        return acc;
    };
    for (int it = 0; it < 5000; ++it)
        for (int i = 0; i < n; ++i) {
            C den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            z[i] -= eval(z[i]) / den;
        }
    int count = 0;
    std::vector<long double> reals;
    for (auto& x : z)
        if (std::abs(x.imag()) < tol) reals.push_back(x.real());
    std::sort(reals.begin(), reals.end());
    for (std::size_t i = 0; i < reals.size(); ++i)
        if (i == 0 || reals[i] - reals[i - 1] > tol) ++count;
    return count;
}

// right multiplication by h in the (-1,-1) quaternions, basis 1, i, j, k
inline QMatrix quaternion_right(const std::array<long, 4>& h) {
    auto mul = [](const std::array<long, 4>& a, const std::array<long, 4>& b) {
        return std::array<long, 4>{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                                   a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                                   a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                                   a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    };
    QMatrix r(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        std::array<long, 4> e{0, 0, 0, 0};
        e[c] = 1;
        auto v = mul(e, h);
        for (std::size_t i = 0; i < 4; ++i) r(i, c) = v[i];
    }
    return r;
}

// simple module with End the quaternions: s = [[R_i, R_1], [R_1, R_j]], mu = 2
inline sw::SeifertModule quaternion_module() {
    QMatrix s(8, 8);
    s.set_block(0, 0, quaternion_right({0, 1, 0, 0}));
    s.set_block(0, 4, quaternion_right({1, 0, 0, 0}));
    s.set_block(4, 0, quaternion_right({1, 0, 0, 0}));
    s.set_block(4, 4, quaternion_right({0, 0, 1, 0}));
    return sw::block_module(s, {4, 4});
}

// dimension of the algebra generated by s and the projections
inline std::size_t algebra_dimension(const sw::SeifertModule& m) {
    std::size_t n = m.dim();
    auto flat = [&](const QMatrix& a) {
        QMatrix v(n * n, 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v(i * n + j, 0) = a(i, j);
        return v;
    };
    std::vector<QMatrix> gens{m.s};
    for (const auto& p : m.proj) gens.push_back(p);
    std::vector<QMatrix> basis{QMatrix::identity(n)};
    QMatrix span = flat(basis[0]);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& g : gens) {
            QMatrix w = basis[k] * g;
            QMatrix next = sw::hstack(span, flat(w));
            if (bareiss_rank(next) > span.cols()) {
                span = next;
                basis.push_back(w);
            }
        }
    return basis.size();
}

// commutant of the action, from the vectorised equations X g = g X
inline std::vector<QMatrix> commutant(const sw::SeifertModule& m) {
    std::size_t n = m.dim();
    std::vector<QMatrix> gens{m.s};
    for (const auto& p : m.proj) gens.push_back(p);
    QMatrix eq(gens.size() * n * n, n * n);
    std::size_t row = 0;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    eq(row, i * n + k) += g(k, j);
                    eq(row, k * n + j) -= g(i, k);
                }
    QMatrix ker = sw::kernel(eq);
    std::vector<QMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        QMatrix x(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = ker(i * n + j, c);
        out.push_back(x);
    }
    return out;
}

// 1 simple, 0 not simple, -1 undecided (noncommutative commutant)
inline int simplicity_oracle(const sw::SeifertModule& m, sw::Rng& rng) {
    std::size_t n = m.dim();
    auto end = commutant(m);
    for (std::size_t i = 0; i < end.size(); ++i)
        for (std::size_t j = i + 1; j < end.size(); ++j)
            if (end[i] * end[j] != end[j] * end[i]) return -1;
    // a commutative commutant is a field iff a generic element has irreducible
    // minimal polynomial of full degree
    bool field = false;
    for (int t = 0; t < 20 && !field; ++t) {
        QMatrix x(n, n);
        for (const auto& b : end) x += Rat(rng.range(-5, 5)) * b;
        auto mp = sw::minimal_polynomial(x);
        field = mp.degree() == static_cast<int>(end.size()) && sw::is_irreducible(mp);
    }
    if (!field) return 0;
    return algebra_dimension(m) * end.size() == n * n ? 1 : 0;
}

// primitive solvability of z^2 = a x^2 + b y^2 modulo p^4
inline int hilbert_oracle(long a, long b, long p) {
    auto strip = [p](long v) {
        while (v % (p * p) == 0) v /= p * p;
        return v;
    };
    a = strip(a);
    b = strip(b);
    long q = p * p * p * p;
    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (long z = 0; z < q; ++z) square[static_cast<std::size_t>(z * z % q)] = true;
    auto is_sq = [&](long t) { return square[static_cast<std::size_t>(((t % q) + q) % q)]; };
    for (long y = 0; y < q; ++y)
        if (is_sq(a + b * ((y * y) % q))) return 1;
    for (long x = 0; x < q; x += p)
        if (is_sq(a * ((x * x) % q) + b)) return 1;
    return -1;
}

inline sw::SeifertModule with_colours(const QMatrix& s, const std::vector<int>& colour, int mu) {
    sw::SeifertModule m;
    m.mu = mu;
    m.s = s;
    for (int i = 0; i < mu; ++i) {
        QMatrix p(s.rows(), s.rows());
        for (std::size_t k = 0; k < colour.size(); ++k)
            if (colour[k] == i) p(k, k) = 1;
        m.proj.push_back(p);
    }
    return m;
}

inline sw::SeifertModule extension_fixture() { return sw::block_module(QMatrix::from_rows({{0, 1}, {0, 1}}), {1, 1}); }

// the first k coordinates span a submodule
inline sw::SeifertModule upper_extension(sw::Rng& rng, std::size_t k, std::size_t n, int mu, bool sub_primitive, bool quo_primitive) {
    QMatrix s = random_matrix(rng, n, n);
    for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) = 0;
    auto triangular = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = lo; j < i; ++j) s(i, j) = 0;
            s(i, i) = rng.range(0, 1);
        }
    };
    if (sub_primitive) triangular(0, k);
    if (quo_primitive) triangular(k, n);
    std::vector<int> colour(n);
    for (auto& c : colour) c = static_cast<int>(rng.range(0, mu - 1));
    return with_colours(s, colour, mu);
}

}  // namespace fixtures
