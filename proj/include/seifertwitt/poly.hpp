#pragma once

#include "seifertwitt/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sw {

// dense univariate polynomial over Q, coefficients low to high
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rat& c);  // NOLINT: constants convert implicitly
    QPoly(int c) : QPoly(Rat(c)) {}  // NOLINT
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly x() { return QPoly(std::vector<Rat>{0, 1}); }
    static QPoly monomial(int degree, const Rat& c = 1);
    static QPoly from_ints(std::initializer_list<long> low_to_high);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& t) const;
    QMatrix operator()(const QMatrix& m) const;

    QPoly monic() const;
    QPoly derivative() const;
    QPoly compose(const QPoly& inner) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
    bool operator<(const QPoly& o) const;  // degree, then coefficients

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);  // exact quotient part
QPoly gcd(const QPoly& a, const QPoly& b);       // monic
// g = u a + v b with g = gcd(a, b) monic
struct Xgcd {
    QPoly g, u, v;
};
Xgcd xgcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& p);
// Yun: p = lead * prod f_i^i
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

QPoly minimal_polynomial(const QMatrix& m);
QPoly characteristic_polynomial(const QMatrix& m);

}  // namespace sw
