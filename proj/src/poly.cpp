#include "seifertwitt/poly.hpp"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"

#include <sstream>

namespace sw {

QPoly::QPoly(const Rat& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, const Rat& c) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::from_ints(std::initializer_list<long> low_to_high) {
    std::vector<Rat> v;
    for (long c : low_to_high) v.emplace_back(c);
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat QPoly::operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

QMatrix QPoly::operator()(const QMatrix& m) const {
    if (!m.is_square()) throw ShapeError("polynomial of non-square matrix");
    QMatrix acc(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + QMatrix::scalar(m.rows(), *it);
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly p = *this;
    Rat inv = 1 / lead();
    for (auto& c : p.c_) c *= inv;
    return p;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(d));
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + QPoly(*it);
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

bool QPoly::operator<(const QPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (sgn(c) == 0) continue;
        Rat a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1;
        if (i == 0 || !unit) os << sw::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rat> r = a.coeffs();
    std::vector<Rat> q(a.degree() - b.degree() + 1);
    Rat inv = 1 / b.lead();
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        Rat f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }
QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b, u0 = 1, u1, v0, v1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
    Rat inv = 1 / r0.lead();
    return {r0.monic(), u0 * QPoly(inv), v0 * QPoly(inv)};
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : QPoly(1);
    return (p / gcd(p, p.derivative())).monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() <= 0) return out;
    QPoly f = p.monic();
    QPoly a = gcd(f, f.derivative());
    QPoly b = f / a;
    QPoly c = f.derivative() / a;
    QPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

QPoly minimal_polynomial(const QMatrix& m) {
    if (!m.is_square()) throw ShapeError("minimal polynomial of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return QPoly(1);
    std::vector<QMatrix> powers{QMatrix::identity(n)};
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * m);
        QMatrix a(n * n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t e = 0; e < n * n; ++e) a(e, j) = powers[j].data()[e];
        QMatrix b(n * n, 1);
        for (std::size_t e = 0; e < n * n; ++e) b(e, 0) = powers[k].data()[e];
        auto x = solve(a, b);
        if (x) {
            std::vector<Rat> c(k + 1);
            for (std::size_t j = 0; j < k; ++j) c[j] = -(*x)(j, 0);
            c[k] = 1;
            return QPoly(std::move(c));
        }
    }
    throw Error("minimal polynomial: Cayley-Hamilton failed");
}

QPoly characteristic_polynomial(const QMatrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    // det(tI - m) at t = 0..n, then Lagrange interpolation
    QPoly acc;
    for (std::size_t i = 0; i <= n; ++i) {
        Rat ti = static_cast<long>(i);
        Rat v = determinant(QMatrix::scalar(n, ti) - m);
        QPoly basis = 1;
        Rat denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Rat tj = static_cast<long>(j);
            basis = basis * QPoly(std::vector<Rat>{-tj, 1});
            denom *= ti - tj;
        }
        acc += basis * QPoly(v / denom);
    }
    return acc;
}

}  // namespace sw
