#include "seifertwitt/endo_field.hpp"

#include "seifertwitt/devissage.hpp"
#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"

#include <algorithm>

namespace sw {

namespace {

QMatrix flatten(const QMatrix& a) {
    QMatrix v(a.rows() * a.cols(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v(i * a.cols() + j, 0) = a(i, j);
    return v;
}

QMatrix flattened_basis(const std::vector<QMatrix>& basis) {
    if (basis.empty()) return QMatrix();
    QMatrix out(basis[0].rows() * basis[0].cols(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) out.set_block(0, c, flatten(basis[c]));
    return out;
}

Rat height(const QPoly& p) {
    Rat h = 0;
    for (const auto& c : p.coeffs()) {
        Rat a = abs(c.get_num());
        Rat d = c.get_den();
        h = std::max({h, a, d});
    }
    return h;
}

bool simpler(const QPoly& a, const QPoly& b) {
    Rat ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

EndomorphismRing endomorphism_ring(const SeifertModule& m, Rng& rng) {
    if (m.dim() == 0) throw PreconditionError("zero module");
    EndomorphismRing e;
    e.module = m;
    try {
        if (!is_simple(m, rng).simple) throw PreconditionError("not simple");
    } catch (const UnsupportedError&) {
        e.certified = false;
    }
    e.basis = hom_space(m, m);
    QMatrix flat = flattened_basis(e.basis);
    std::size_t d = e.basis.size();
    e.structure.assign(d, std::vector<std::vector<Rat>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto c = solve(flat, flatten(e.basis[i] * e.basis[j]));
            if (!c) throw Error("endomorphism basis is not closed under composition");
            for (std::size_t k = 0; k < d; ++k) e.structure[i][j].push_back((*c)(k, 0));
        }
    for (std::size_t i = 0; i < d && e.commutative; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (e.structure[i][j] != e.structure[j][i]) {
                e.commutative = false;
                break;
            }
    return e;
}

QPoly NumberField::inv(const QPoly& a) const {
    QPoly r = reduce(a);
    if (r.is_zero()) throw SingularError("inverse of zero in a number field");
    auto g = xgcd(r, minpoly);
    if (g.g.degree() != 0) throw SingularError("minimal polynomial is reducible");
    return reduce(g.u);
}

QPoly NumberField::conj(const QPoly& a) const {
    if (!involution) throw PreconditionError("involution not set");
    return reduce(reduce(a).compose(*involution));
}

std::optional<QPoly> NumberField::from_matrix(const QMatrix& x) const {
    std::vector<QMatrix> powers{QMatrix::identity(embedding.rows())};
    for (int i = 1; i < degree(); ++i) powers.push_back(powers.back() * embedding);
    auto c = solve(flattened_basis(powers), flatten(x));
    if (!c) return std::nullopt;
    std::vector<Rat> coeffs;
    for (std::size_t i = 0; i < powers.size(); ++i) coeffs.push_back((*c)(i, 0));
    return QPoly(coeffs);
}

FieldOrAlgebra as_number_field(const EndomorphismRing& e) {
    FieldOrAlgebra out;
    if (!e.commutative) {
        out.noncommutative = classify_noncommutative(e, nullptr);
        return out;
    }
    std::size_t d = e.dim();
    std::optional<QPoly> best;
    QMatrix best_elt;
    auto consider = [&](const std::vector<long>& c) {
        QMatrix x(e.module.dim(), e.module.dim());
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i)
            if (c[i]) {
                x += Rat(c[i]) * e.basis[i];
                nonzero = true;
            }
        if (!nonzero) return;
        QPoly mp = minimal_polynomial(x);
        if (mp.degree() != static_cast<int>(d)) return;
        if (!best || simpler(mp, *best)) {
            best = mp;
            best_elt = x;
        }
    };
    std::vector<long> c(d, -2);
    if (d <= 3) {
        for (;;) {
            consider(c);
            std::size_t i = 0;
            while (i < d && c[i] == 2) c[i++] = -2;
            if (i == d) break;
            ++c[i];
        }
    } else {
        Rng local(0x5eed5eedULL);
        for (int t = 0; t < 64; ++t) {
            for (auto& v : c) v = local.range(-2, 2);
            consider(c);
        }
    }
    if (!best) throw UnsupportedError("no primitive element found");
    NumberField f;
    f.minpoly = *best;
    f.embedding = best_elt;
    out.field = f;
    return out;
}

NoncommutativeInfo classify_noncommutative(const EndomorphismRing& e, const QMatrix* b) {
    NoncommutativeInfo info;
    std::size_t d = e.dim();
    info.dimension = d;
    // center: sum c_i B_i with sum c_i [B_i, B_j] = 0 for all j
    QMatrix eq(d * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) eq(j * d + k, i) = e.structure[i][j][k] - e.structure[j][i][k];
    QMatrix center = kernel(eq);
    info.center_dimension = center.cols();
    if (!b) {
        info.row = "noncommutative, involution unknown";
        return info;
    }
    QMatrix binv = inverse(*b);
    QMatrix flat = flattened_basis(e.basis);
    QMatrix j(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto c = solve(flat, flatten(binv * e.basis[i].transpose() * *b));
        if (!c) throw PreconditionError("form adjoint leaves the endomorphism ring");
        j.set_block(0, i, *c);
    }
    QMatrix fix = kernel(j - QMatrix::identity(d));
    info.fix_dimension = fix.cols();
    bool first_kind = span_contains(fix, center);
    if (!first_kind) info.row = "2nd kind, noncommutative, non-trivial involution";
    else if (info.fix_dimension == info.center_dimension) info.row = "1st kind, noncommutative, standard involution";
    else info.row = "1st kind, noncommutative, non-standard involution";
    return info;
}

std::string table_row(const NumberField& f) {
    return f.trivial_involution() ? "1st kind, commutative, trivial involution"
                                  : "2nd kind, commutative, non-trivial involution";
}

NumberField involution_from_form(NumberField f, const SeifertForm& b) {
    if (auto v = validate_form(b)) throw PreconditionError("form for the involution: " + v->kind);
    if (b.phi.rows() != f.embedding.rows()) throw PreconditionError("form on a different module");
    QMatrix img = inverse(b.phi) * f.embedding.transpose() * b.phi;
    auto p = f.from_matrix(img);
    if (!p) throw PreconditionError("form adjoint leaves the field");
    f.involution = f.reduce(*p);
    if (f.conj(*f.involution) != f.reduce(QPoly::x())) throw Error("adjoint is not an involution");
    int d = f.degree();
    QMatrix j(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        QPoly img_i = f.conj(QPoly::monomial(i));
        for (int k = 0; k < d; ++k) j(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = img_i.coeff(static_cast<std::size_t>(k));
    }
    f.fixed_field_degree = static_cast<int>(kernel(j - QMatrix::identity(static_cast<std::size_t>(d))).cols());
    return f;
}

bool is_hermitian(const HermitianForm& h) {
    for (std::size_t k = 0; k < h.rank(); ++k)
        for (std::size_t l = 0; l < h.rank(); ++l)
            if (h.field.reduce(h.gram[l][k]) != h.field.conj(h.gram[k][l])) return false;
    return true;
}

HermitianForm morita_transport(const NumberField& field, const SeifertModule& rep, int zeta, const QMatrix& b,
                               const std::vector<QMatrix>& forms) {
    std::size_t n = rep.dim();
    if (b.transpose() != Rat(zeta) * b) throw PreconditionError("b is not zeta-symmetric");
    QMatrix binv = inverse(b);
    QMatrix total;
    for (const auto& phi : forms) {
        if (auto v = validate_form({rep, zeta, phi})) throw PreconditionError("transported form: " + v->kind);
        total = total.rows() == 0 ? phi : direct_sum(total, phi);
    }
    std::size_t k = forms.size();
    auto inclusion = [&](std::size_t i) {
        QMatrix a(k * n, n);
        a.set_block(i * n, 0, QMatrix::identity(n));
        return a;
    };
    HermitianForm h;
    h.field = field;
    h.gram.assign(k, std::vector<QPoly>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            QMatrix entry = Rat(zeta) * binv * inclusion(c).transpose() * total * inclusion(r);
            auto p = field.from_matrix(entry);
            if (!p) throw PreconditionError("transported entry is not in the field");
            h.gram[r][c] = *p;
        }
    return h;
}

}  // namespace sw
