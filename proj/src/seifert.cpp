#include "seifertwitt/seifert.hpp"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"

namespace sw {

SeifertModule block_module(const QMatrix& s, const std::vector<std::size_t>& sizes, Ring ring) {
    SeifertModule m;
    m.mu = static_cast<int>(sizes.size());
    m.s = s;
    m.ring = ring;
    std::size_t n = s.rows(), at = 0;
    for (auto sz : sizes) {
        QMatrix p(n, n);
        for (std::size_t i = at; i < at + sz && i < n; ++i) p(i, i) = 1;
        m.proj.push_back(p);
        at += sz;
    }
    if (at != n) throw ShapeError("block sizes do not sum to the dimension");
    return m;
}

std::vector<std::size_t> block_sizes(const SeifertModule& m) {
    std::vector<std::size_t> sizes;
    std::size_t n = m.dim(), at = 0;
    for (const auto& p : m.proj) {
        std::size_t sz = 0;
        while (at + sz < n && p(at + sz, at + sz) == 1) ++sz;
        QMatrix expect(n, n);
        for (std::size_t i = at; i < at + sz; ++i) expect(i, i) = 1;
        if (expect != p) return {};
        sizes.push_back(sz);
        at += sz;
    }
    if (at != n) return {};
    return sizes;
}

std::optional<Violation> validate_module(const SeifertModule& m) {
    std::size_t n = m.s.rows();
    if (m.mu < 1) return Violation{"shape", "mu must be at least 1"};
    if (!m.s.is_square()) return Violation{"shape", "s is not square"};
    if (m.proj.size() != static_cast<std::size_t>(m.mu))
        return Violation{"shape", "expected " + std::to_string(m.mu) + " projections"};
    for (const auto& p : m.proj)
        if (p.rows() != n || p.cols() != n) return Violation{"shape", "projection of wrong size"};
    if (m.ring == Ring::Z) {
        if (!m.s.is_integral()) return Violation{"ring", "s has non-integral entries"};
        for (const auto& p : m.proj)
            if (!p.is_integral()) return Violation{"ring", "projection has non-integral entries"};
    }
    for (std::size_t i = 0; i < m.proj.size(); ++i)
        if (m.proj[i] * m.proj[i] != m.proj[i])
            return Violation{"idempotence", "e_" + std::to_string(i + 1) + " is not idempotent"};
    for (std::size_t i = 0; i < m.proj.size(); ++i)
        for (std::size_t j = 0; j < m.proj.size(); ++j)
            if (i != j && !(m.proj[i] * m.proj[j]).is_zero())
                return Violation{"orthogonality",
                                 "e_" + std::to_string(i + 1) + " e_" + std::to_string(j + 1) + " != 0"};
    QMatrix sum(n, n);
    for (const auto& p : m.proj) sum += p;
    if (!sum.is_identity()) return Violation{"partition of unity", "projections do not sum to 1"};
    return std::nullopt;
}

std::optional<Violation> validate_form(const SeifertForm& f) {
    if (auto v = validate_module(f.module)) return v;
    std::size_t n = f.module.dim();
    if (f.zeta != 1 && f.zeta != -1) return Violation{"shape", "zeta must be +1 or -1"};
    if (f.phi.rows() != n || f.phi.cols() != n) return Violation{"shape", "form matrix of wrong size"};
    if (f.module.ring == Ring::Z && !f.phi.is_integral()) return Violation{"ring", "form has non-integral entries"};
    if (f.phi.transpose() != Rat(f.zeta) * f.phi) return Violation{"symmetry", "phi^T != zeta phi"};
    for (std::size_t i = 0; i < f.module.proj.size(); ++i) {
        const auto& p = f.module.proj[i];
        if (f.phi * p != p.transpose() * f.phi)
            return Violation{"projection compatibility", "phi e_" + std::to_string(i + 1) + " != e_" +
                                                             std::to_string(i + 1) + "^T phi"};
    }
    if (f.phi * f.module.s != (QMatrix::identity(n) - f.module.s.transpose()) * f.phi)
        return Violation{"s compatibility", "phi s != (1 - s^T) phi"};
    if (determinant(f.phi) == 0) return Violation{"nonsingular", "phi is singular"};
    return std::nullopt;
}

std::optional<Violation> validate_morphism(const SeifertModule& src, const SeifertModule& dst, const QMatrix& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) return Violation{"shape", "morphism of wrong size"};
    if (src.mu != dst.mu) return Violation{"shape", "mu mismatch"};
    if (f * src.s != dst.s * f) return Violation{"s compatibility", "f s != s' f"};
    for (int i = 0; i < src.mu; ++i)
        if (f * src.proj[i] != dst.proj[i] * f)
            return Violation{"projection compatibility", "f e_" + std::to_string(i + 1) + " != e'_" +
                                                             std::to_string(i + 1) + " f"};
    return std::nullopt;
}

SeifertModule promote(const SeifertModule& m) {
    if (m.ring == Ring::Z) {
        if (auto v = validate_module(m)) throw ValidationError(v->kind, v->detail);
    }
    SeifertModule out = m;
    out.ring = Ring::Q;
    return out;
}

SeifertModule dual_module(const SeifertModule& m) {
    SeifertModule d;
    d.mu = m.mu;
    d.ring = m.ring;
    d.s = QMatrix::identity(m.dim()) - m.s.transpose();
    for (const auto& p : m.proj) d.proj.push_back(p.transpose());
    return d;
}

SeifertModule direct_sum(const SeifertModule& a, const SeifertModule& b) {
    if (a.mu != b.mu) throw PreconditionError("direct sum: mu mismatch");
    SeifertModule m;
    m.mu = a.mu;
    m.ring = (a.ring == Ring::Z && b.ring == Ring::Z) ? Ring::Z : Ring::Q;
    m.s = sw::direct_sum(a.s, b.s);
    for (int i = 0; i < a.mu; ++i) m.proj.push_back(sw::direct_sum(a.proj[i], b.proj[i]));
    return m;
}

SeifertForm direct_sum(const SeifertForm& a, const SeifertForm& b) {
    if (a.zeta != b.zeta) throw PreconditionError("direct sum: zeta mismatch");
    return {direct_sum(a.module, b.module), a.zeta, sw::direct_sum(a.phi, b.phi)};
}

SeifertForm negate(const SeifertForm& f) { return {f.module, f.zeta, -f.phi}; }

SeifertForm hyperbolic(const SeifertModule& m, int zeta) {
    std::size_t n = m.dim();
    QMatrix phi(2 * n, 2 * n);
    phi.set_block(0, n, QMatrix::identity(n));
    phi.set_block(n, 0, QMatrix::scalar(n, zeta));
    return {direct_sum(m, dual_module(m)), zeta, phi};
}

namespace {

QMatrix spin_with(const std::vector<QMatrix>& gens, const QMatrix& vectors) {
    QMatrix w = canonical_basis(vectors);
    for (;;) {
        QMatrix all = w;
        for (const auto& g : gens) all = hstack(all, g * w);
        QMatrix next = canonical_basis(all);
        if (next.cols() == w.cols()) return next;
        w = std::move(next);
    }
}

std::vector<QMatrix> generators(const SeifertModule& m) {
    std::vector<QMatrix> g{m.s};
    g.insert(g.end(), m.proj.begin(), m.proj.end());
    return g;
}

}  // namespace

QMatrix spin(const SeifertModule& m, const QMatrix& vectors) { return spin_with(generators(m), vectors); }

QMatrix spin_transposed(const SeifertModule& m, const QMatrix& vectors) {
    std::vector<QMatrix> g;
    for (const auto& x : generators(m)) g.push_back(x.transpose());
    return spin_with(g, vectors);
}

bool is_submodule(const SeifertModule& m, const QMatrix& basis) {
    for (const auto& g : generators(m))
        if (!span_contains(basis, g * basis)) return false;
    return true;
}

SeifertModule restrict_module(const SeifertModule& m, const QMatrix& basis) {
    SeifertModule r;
    r.mu = m.mu;
    auto act = [&](const QMatrix& g) {
        auto x = solve(basis, g * basis);
        if (!x) throw ValidationError("submodule", "subspace is not invariant");
        return *x;
    };
    r.s = act(m.s);
    for (const auto& p : m.proj) r.proj.push_back(act(p));
    return r;
}

Subquotient subquotient(const SeifertModule& m, const QMatrix& big, const QMatrix& small) {
    QMatrix bigc = canonical_basis(big);
    QMatrix smallc = canonical_basis(small);
    if (!is_submodule(m, smallc) || !is_submodule(m, bigc))
        throw ValidationError("submodule", "subquotient of non-invariant subspaces");
    QMatrix sec = complement_section(bigc, smallc);
    QMatrix c = hstack(smallc, sec);
    std::size_t k0 = smallc.cols(), k = sec.cols();
    QMatrix left = inverse(c.transpose() * c) * c.transpose();
    Subquotient out;
    out.section = sec;
    out.projection = left.block(k0, 0, k, m.dim());
    out.module.mu = m.mu;
    auto act = [&](const QMatrix& g) {
        auto y = solve(c, g * sec);
        if (!y) throw ValidationError("submodule", "subquotient of non-invariant subspaces");
        return y->block(k0, 0, k, k);
    };
    out.module.s = act(m.s);
    for (const auto& p : m.proj) out.module.proj.push_back(act(p));
    return out;
}

Subquotient quotient_module(const SeifertModule& m, const QMatrix& sub) {
    return subquotient(m, QMatrix::identity(m.dim()), sub);
}

std::vector<QMatrix> hom_space(const SeifertModule& a, const SeifertModule& b) {
    if (a.mu != b.mu) return {};
    std::size_t n = a.dim(), m = b.dim();
    if (n == 0 || m == 0) return {};
    std::vector<std::pair<const QMatrix*, const QMatrix*>> pairs{{&a.s, &b.s}};
    for (int i = 0; i < a.mu; ++i) pairs.push_back({&a.proj[i], &b.proj[i]});
    QMatrix eq(pairs.size() * m * n, m * n);
    std::size_t row = 0;
    for (auto [ga, gb] : pairs)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn((*ga)(k, j))) eq(row, i * n + k) += (*ga)(k, j);
                for (std::size_t k = 0; k < m; ++k)
                    if (sgn((*gb)(i, k))) eq(row, k * n + j) -= (*gb)(i, k);
            }
    QMatrix ker = kernel(eq);
    std::vector<QMatrix> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        QMatrix x(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = ker(i * n + j, c);
        out.push_back(x);
    }
    return out;
}

std::optional<QMatrix> find_isomorphism(const SeifertModule& a, const SeifertModule& b, Rng& rng) {
    if (a.mu != b.mu || a.dim() != b.dim()) return std::nullopt;
    if (a.s == b.s && a.proj == b.proj) return QMatrix::identity(a.dim());
    auto basis = hom_space(a, b);
    if (basis.empty()) return std::nullopt;
    for (const auto& x : basis)
        if (determinant(x) != 0) return x;
    std::size_t n = a.dim(), k = basis.size();
    auto combo = [&](const std::vector<Rat>& t) {
        QMatrix x(n, n);
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(t[i])) x += t[i] * basis[i];
        return x;
    };
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Rat> t(k);
        for (auto& v : t) {
            v = Rat(rng.range(-10, 10), rng.range(1, 10));
            v.canonicalize();
        }
        QMatrix x = combo(t);
        if (determinant(x) != 0) return x;
    }
    // det(sum t_i B_i) has total degree n; vanishing on {t >= 0 : |t| <= n} proves it is zero
    double points = 1;
    for (std::size_t i = 1; i <= k; ++i) points = points * static_cast<double>(n + i) / static_cast<double>(i);
    if (points > 200000) throw PreconditionError("isomorphism certification exceeds its budget");
    std::vector<long> t(k, 0);
    long total = 0;
    for (;;) {
        std::vector<Rat> tr(t.begin(), t.end());
        QMatrix x = combo(tr);
        if (determinant(x) != 0) return x;
        std::size_t i = 0;
        while (i < k && total == static_cast<long>(n)) {
            total -= t[i];
            t[i++] = 0;
        }
        if (i == k) break;
        ++t[i];
        ++total;
    }
    return std::nullopt;
}

QMatrix orthogonal_complement(const SeifertForm& f, const QMatrix& sub) {
    if (sub.cols() == 0) return QMatrix::identity(f.module.dim());
    return canonical_basis(kernel((f.phi * sub).transpose()));
}

QMatrix restricted_gram(const QMatrix& phi, const QMatrix& basis) { return basis.transpose() * phi * basis; }

SeifertForm induced_form_on_subquotient(const SeifertForm& f, const QMatrix& sub) {
    if (!is_submodule(f.module, sub)) throw PreconditionError("not a submodule");
    if (!restricted_gram(f.phi, sub).is_zero()) throw PreconditionError("submodule is not isotropic");
    QMatrix perp = orthogonal_complement(f, sub);
    auto sq = subquotient(f.module, perp, sub);
    return {sq.module, f.zeta, restricted_gram(f.phi, sq.section)};
}

SeifertForm restrict_form(const SeifertForm& f, const QMatrix& basis) {
    return {restrict_module(f.module, basis), f.zeta, restricted_gram(f.phi, basis)};
}

QMatrix pull_back_form(const QMatrix& phi_b, const QMatrix& t) { return t.transpose() * phi_b * t; }

}  // namespace sw
