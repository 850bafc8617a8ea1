#include "seifertwitt/rational.hpp"

#include "seifertwitt/errors.hpp"

#include <cctype>
#include <map>

namespace sw {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    auto slash = text.find('/');
    std::size_t num_end = slash == std::string::npos ? text.size() : slash;
    if (!all_digits(text, start, num_end)) throw ParseError("not a rational: '" + text + "'");
    if (slash != std::string::npos && !all_digits(text, slash + 1, text.size()))
        throw ParseError("not a rational: '" + text + "'");
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(body));
    } else {
        Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: '" + text + "'");
        r = Rat(Int(body.substr(0, body.find('/'))), den);
        r.canonicalize();
    }
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

namespace {

Int rho_divisor(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int& v) { return Int((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = abs(Int(x - y));
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void split(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out[n];
        return;
    }
    Int d = rho_divisor(n);
    split(d, out);
    split(Int(n / d), out);
}

}  // namespace

std::map<Int, int> factor_integer(const Int& n) {
    std::map<Int, int> out;
    Int m = abs(n);
    if (m == 0) throw PreconditionError("cannot factor 0");
    for (unsigned long p = 2; p < 1000 && Int(p) * p <= m; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++out[Int(p)];
        }
    }
    split(m, out);
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int out = 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) out *= p;
    return n < 0 ? Int(-out) : out;
}

}  // namespace sw
