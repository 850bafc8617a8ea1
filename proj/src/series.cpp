#include "seifertwitt/series.hpp"

#include "seifertwitt/errors.hpp"

namespace sw {

namespace {

struct Term {
    int length;
    std::size_t code;
    Rat value;
};

std::vector<Term> nonzero_terms(const TruncSeries& s) {
    std::vector<Term> out;
    int len = 0;
    std::size_t next = s.offset(1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        while (i >= next) next = s.offset(++len + 1);
        if (sgn(s[i])) out.push_back({len, i - s.offset(len), s[i]});
    }
    return out;
}

}  // namespace

TruncSeries::TruncSeries(int mu, int degree) : mu_(mu), degree_(degree) {
    if (mu < 1 || degree < 0) throw PreconditionError("series needs mu >= 1 and degree >= 0");
    c_.assign(offset(degree + 1), Rat(0));
}

TruncSeries TruncSeries::constant(int mu, int degree, const Rat& c) {
    TruncSeries s(mu, degree);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::letter(int mu, int degree, int i) {
    TruncSeries s(mu, degree);
    if (degree >= 1) s.c_[s.index({i})] = 1;
    return s;
}

std::size_t TruncSeries::offset(int length) const {
    std::size_t total = 0, p = 1;
    for (int l = 0; l < length; ++l) {
        total += p;
        p *= static_cast<std::size_t>(mu_);
    }
    return total;
}

int TruncSeries::length_of(std::size_t index) const {
    int len = 0;
    while (offset(len + 1) <= index) ++len;
    return len;
}

std::size_t TruncSeries::index(const std::vector<int>& word) const {
    std::size_t code = 0;
    for (int w : word) {
        if (w < 1 || w > mu_) throw PreconditionError("letter out of range");
        code = code * static_cast<std::size_t>(mu_) + static_cast<std::size_t>(w - 1);
    }
    return offset(static_cast<int>(word.size())) + code;
}

std::vector<int> TruncSeries::word(std::size_t index) const {
    int len = length_of(index);
    std::size_t code = index - offset(len);
    std::vector<int> w(static_cast<std::size_t>(len));
    for (int k = len - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::size_t>(mu_)) + 1;
        code /= static_cast<std::size_t>(mu_);
    }
    return w;
}

Rat TruncSeries::coeff(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) > degree_) return 0;
    return c_[index(word)];
}

bool TruncSeries::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x)) return false;
    return true;
}

TruncSeries TruncSeries::truncated(int degree) const {
    TruncSeries out(mu_, degree);
    std::size_t n = std::min(out.c_.size(), c_.size());
    for (std::size_t i = 0; i < n; ++i) out.c_[i] = c_[i];
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.mu_ != mu_ || o.degree_ != degree_) throw ShapeError("series shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.mu_ != mu_ || o.degree_ != degree_) throw ShapeError("series shape mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rat& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.mu_ != b.mu_ || a.degree_ != b.degree_) throw ShapeError("series shape mismatch");
    TruncSeries out(a.mu_, a.degree_);
    auto ta = nonzero_terms(a), tb = nonzero_terms(b);
    std::vector<std::size_t> pw(static_cast<std::size_t>(a.degree_) + 1, 1);
    for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * static_cast<std::size_t>(a.mu_);
    for (const auto& u : ta)
        for (const auto& v : tb) {
            int len = u.length + v.length;
            if (len > a.degree_) continue;
            std::size_t idx = out.offset(len) + u.code * pw[static_cast<std::size_t>(v.length)] + v.code;
            out.c_[idx] += u.value * v.value;
        }
    return out;
}

std::vector<std::pair<std::string, std::string>> TruncSeries::terms() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i])) out.emplace_back(word_string(word(i)), to_string(c_[i]));
    return out;
}

std::string word_string(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (int w : word) s += (s.empty() ? "x" : " x") + std::to_string(w);
    return s;
}

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b) {
    std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    if (r && a[0].size() != k) throw ShapeError("series matrix shape mismatch");
    SeriesMatrix out(r, std::vector<TruncSeries>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            TruncSeries acc(b[0][j].mu(), b[0][j].degree());
            for (std::size_t l = 0; l < k; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero()) acc += a[i][l] * b[l][j];
            out[i][j] = acc;
        }
    return out;
}

SeriesMatrix identity_series(std::size_t n, int mu, int degree) {
    SeriesMatrix out(n, std::vector<TruncSeries>(n, TruncSeries(mu, degree)));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = TruncSeries::constant(mu, degree, 1);
    return out;
}

Rat NCRationalSeries::coeff(const std::vector<int>& word) const {
    QMatrix v = row;
    for (int w : word) v = v * transitions.at(static_cast<std::size_t>(w - 1));
    return (v * col)(0, 0);
}

TruncSeries NCRationalSeries::truncate(int degree) const {
    TruncSeries out(mu, degree);
    std::vector<QMatrix> level{row};
    std::size_t at = 0;
    for (int len = 0; len <= degree; ++len) {
        std::vector<QMatrix> next;
        for (const auto& v : level) {
            out[at++] = (v * col)(0, 0);
            if (len < degree)
                for (const auto& t : transitions) next.push_back(v * t);
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace sw
