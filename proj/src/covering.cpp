#include "seifertwitt/covering.hpp"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sw {

FreeWord::FreeWord(const std::vector<int>& letters) {
    for (int l : letters) {
        if (l == 0) throw PreconditionError("letter 0 in a free word");
        if (!letters_.empty() && letters_.back() == -l) letters_.pop_back();
        else letters_.push_back(l);
    }
}

FreeWord FreeWord::generator(int i, int exponent) {
    if (i < 1) throw PreconditionError("generator index must be positive");
    std::vector<int> l(static_cast<std::size_t>(std::abs(exponent)), exponent > 0 ? i : -i);
    return FreeWord(l);
}

FreeWord FreeWord::inverse() const {
    std::vector<int> l(letters_.rbegin(), letters_.rend());
    for (auto& x : l) x = -x;
    return FreeWord(l);
}

std::string FreeWord::to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (int l : letters_) {
        if (!s.empty()) s += ' ';
        s += "z" + std::to_string(std::abs(l));
        if (l < 0) s += "^-1";
    }
    return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    std::vector<int> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(l);
}

FreeWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'z') throw ParseError("bad word token '" + tok + "'");
        int exp = 1;
        std::string idx = tok.substr(1);
        auto caret = idx.find('^');
        if (caret != std::string::npos) {
            std::string e = idx.substr(caret + 1);
            idx = idx.substr(0, caret);
            try {
                exp = std::stoi(e);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + tok + "'");
            }
        }
        int i = 0;
        try {
            i = std::stoi(idx);
        } catch (const std::exception&) {
            throw ParseError("bad generator in '" + tok + "'");
        }
        if (i < 1) throw ParseError("bad generator in '" + tok + "'");
        for (int k = 0; k < std::abs(exp); ++k) letters.push_back(exp > 0 ? i : -i);
    }
    return FreeWord(letters);
}

GroupRingElem::GroupRingElem(const Rat& c) {
    if (sgn(c)) terms_[FreeWord()] = c;
}

GroupRingElem GroupRingElem::word(const FreeWord& w, const Rat& c) {
    GroupRingElem g;
    g.add(w, c);
    return g;
}

void GroupRingElem::add(const FreeWord& w, const Rat& c) {
    if (!sgn(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (!sgn(it->second)) terms_.erase(it);
}

Rat GroupRingElem::augmentation() const {
    Rat s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
}

GroupRingElem GroupRingElem::bar() const {
    GroupRingElem g;
    for (const auto& [w, c] : terms_) g.add(w.inverse(), c);
    return g;
}

std::size_t GroupRingElem::max_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return m;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem g;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) g.add(wa * wb, ca * cb);
    return g;
}

std::string GroupRingElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += sw::to_string(c);
        if (w.length()) s += "*" + w.to_string();
    }
    return s;
}

QMatrix FlkPresentation::augmentation() const {
    std::size_t n = size();
    QMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = sigma[i][j].augmentation();
    return e;
}

void validate_presentation(const FlkPresentation& p) {
    for (const auto& row : p.sigma) {
        if (row.size() != p.size()) throw ValidationError("shape", "presentation matrix is not square");
        for (const auto& g : row)
            for (const auto& [w, c] : g.terms()) {
                for (int l : w.letters())
                    if (std::abs(l) > p.mu) throw ValidationError("shape", "generator index exceeds mu");
                if (p.ring == Ring::Z && c.get_den() != 1) throw ValidationError("ring", "non-integral coefficient");
            }
    }
    if (determinant(p.augmentation()) == 0) throw ValidationError("augmentation", "augmentation is singular");
}

FlkPresentation cover_presentation(const SeifertModule& v) {
    std::size_t n = v.dim();
    FlkPresentation p;
    p.mu = v.mu;
    p.ring = v.ring;
    p.sigma.assign(n, std::vector<GroupRingElem>(n));
    QMatrix c = QMatrix::identity(n) - v.s;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) p.sigma[j][k] = GroupRingElem(c(j, k));
    for (int i = 0; i < v.mu; ++i) {
        QMatrix sp = v.s * v.proj[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) p.sigma[j][k].add(FreeWord::generator(i + 1), sp(j, k));
    }
    return p;
}

TruncSeries magnus_expand(const GroupRingElem& g, int mu, int degree) {
    std::vector<TruncSeries> pos, neg;
    for (int i = 1; i <= mu; ++i) {
        TruncSeries x = TruncSeries::letter(mu, degree, i);
        pos.push_back(TruncSeries::constant(mu, degree, 1) + x);
        TruncSeries inv = TruncSeries::constant(mu, degree, 1), power = TruncSeries::constant(mu, degree, 1);
        for (int k = 1; k <= degree; ++k) {
            power = power * x;
            inv += Rat(k % 2 ? -1 : 1) * power;
        }
        neg.push_back(inv);
    }
    TruncSeries out(mu, degree);
    for (const auto& [w, c] : g.terms()) {
        TruncSeries t = TruncSeries::constant(mu, degree, c);
        for (int l : w.letters()) {
            if (std::abs(l) > mu) throw PreconditionError("generator index exceeds mu");
            t = t * (l > 0 ? pos : neg)[static_cast<std::size_t>(std::abs(l) - 1)];
        }
        out += t;
    }
    return out;
}

SeriesMatrix magnus_expand(const GroupRingMatrix& m, int mu, int degree) {
    SeriesMatrix out;
    for (const auto& row : m) {
        out.emplace_back();
        for (const auto& g : row) out.back().push_back(magnus_expand(g, mu, degree));
    }
    return out;
}

namespace {

// visit every word of length <= degree with M(w) = prod over letters of step[i]
void walk_words(const std::vector<QMatrix>& step, const QMatrix& start, int degree,
                const std::function<void(std::size_t, const QMatrix&)>& visit, int mu) {
    TruncSeries shape(mu, degree);
    std::vector<QMatrix> level{start};
    std::size_t at = 0;
    for (int len = 0; len <= degree; ++len) {
        std::vector<QMatrix> next;
        for (const auto& m : level) {
            visit(at++, m);
            if (len < degree)
                for (const auto& s : step) next.push_back(m * s);
        }
        level = std::move(next);
    }
}

std::vector<QMatrix> neg_s_pi(const SeifertModule& v) {
    std::vector<QMatrix> out;
    for (const auto& p : v.proj) out.push_back(-(v.s * p));
    return out;
}

}  // namespace

std::vector<std::vector<NCRationalSeries>> sigma_inverse_series(const SeifertModule& v) {
    std::size_t n = v.dim();
    auto steps = neg_s_pi(v);
    QMatrix id = QMatrix::identity(n);
    std::vector<std::vector<NCRationalSeries>> out(n, std::vector<NCRationalSeries>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            auto& r = out[j][k];
            r.mu = v.mu;
            r.row = id.row(j);
            r.col = id.column(k);
            r.transitions = steps;
        }
    return out;
}

SeriesMatrix sigma_inverse_truncated(const SeifertModule& v, int degree) {
    std::size_t n = v.dim();
    SeriesMatrix out(n, std::vector<TruncSeries>(n, TruncSeries(v.mu, degree)));
    walk_words(
        neg_s_pi(v), QMatrix::identity(n), degree,
        [&](std::size_t idx, const QMatrix& m) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) out[j][k][idx] = m(j, k);
        },
        v.mu);
    return out;
}

PairingMatrix blanchfield_pairing(const SeifertForm& f, int degree) {
    const SeifertModule& v = f.module;
    std::size_t n = v.dim();
    int mu = v.mu;
    QMatrix phit = f.phi.transpose();
    std::vector<QMatrix> trans;
    for (int i = 0; i < mu; ++i) {
        const QMatrix& p = v.proj[static_cast<std::size_t>(i)];
        QMatrix t(2 * n, 2 * n);
        t.set_block(0, n, -p);
        t.set_block(n, n, -(v.s * p));
        trans.push_back(t);
    }
    PairingMatrix out(n, std::vector<PairingValue>(n));
    QMatrix id = QMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            auto& e = out[j][k].exact;
            e.mu = mu;
            e.row = QMatrix(1, 2 * n);
            e.row.set_block(0, 0, id.row(j) * phit);
            e.col = QMatrix(2 * n, 1);
            e.col.set_block(n, 0, id.column(k));
            e.transitions = trans;
            out[j][k].degree = degree;
            out[j][k].truncated = TruncSeries(mu, degree);
        }
    // coefficient of x_{i1} w is -Phi^T e_{i1} M(w) with M the sigma^-1 coefficients
    if (degree >= 1) {
        TruncSeries shape(mu, degree);
        walk_words(
            neg_s_pi(v), QMatrix::identity(n), degree - 1,
            [&](std::size_t idx, const QMatrix& m) {
                auto w = TruncSeries(mu, degree - 1).word(idx);
                for (int i = 1; i <= mu; ++i) {
                    std::vector<int> full{i};
                    full.insert(full.end(), w.begin(), w.end());
                    std::size_t at = shape.index(full);
                    QMatrix c = -(phit * v.proj[static_cast<std::size_t>(i - 1)] * m);
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) out[j][k].truncated[at] = c(j, k);
                }
            },
            mu);
    }
    return out;
}

SeriesMatrix truncations(const PairingMatrix& p) {
    SeriesMatrix out;
    for (const auto& row : p) {
        out.emplace_back();
        for (const auto& v : row) out.back().push_back(v.truncated);
    }
    return out;
}

TruncSeries series_involution(const TruncSeries& p) {
    int mu = p.mu(), degree = p.degree();
    // bar(Q_u) = c_u + sum_i bar(Q_{u i}) bar(x_i), Q_u the left quotient by u,
    // needed only to degree D - |u|
    std::function<TruncSeries(const std::vector<int>&)> rec = [&](const std::vector<int>& u) {
        int room = degree - static_cast<int>(u.size());
        TruncSeries out = TruncSeries::constant(mu, room, p.coeff(u));
        if (room == 0) return out;
        for (int i = 1; i <= mu; ++i) {
            std::vector<int> ui = u;
            ui.push_back(i);
            TruncSeries q = rec(ui);
            for (std::size_t idx = 0; idx < q.size(); ++idx) {
                if (!sgn(q[idx])) continue;
                std::vector<int> w = q.word(idx);
                int base = static_cast<int>(w.size());
                for (int k = 1; base + k <= room; ++k) {
                    w.push_back(i);
                    out[out.index(w)] += (k % 2 ? -1 : 1) * q[idx];
                }
            }
        }
        return out;
    };
    return rec({});
}

namespace {

std::vector<FreeWord> reduced_words(int mu, int max_length) {
    std::vector<FreeWord> all{FreeWord()};
    std::vector<FreeWord> frontier{FreeWord()};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<FreeWord> next;
        for (const auto& w : frontier)
            for (int g = 1; g <= mu; ++g)
                for (int e : {1, -1}) {
                    int l = e * g;
                    if (!w.letters().empty() && w.letters().back() == -l) continue;
                    next.push_back(w * FreeWord({l}));
                }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return all;
}

}  // namespace

std::optional<GroupRingMatrix> symmetry_witness(const SeriesMatrix& p, int zeta, int mu, int degree) {
    std::size_t n = p.size();
    auto words = reduced_words(mu, degree / 2);
    TruncSeries shape(mu, degree);
    std::size_t rows = shape.size();
    QMatrix a(rows, words.size());
    for (std::size_t c = 0; c < words.size(); ++c) {
        TruncSeries m = magnus_expand(GroupRingElem::word(words[c]), mu, degree);
        for (std::size_t r = 0; r < rows; ++r) a(r, c) = m[r];
    }
    QMatrix rhs(rows, n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            TruncSeries t = p[j][k] + Rat(zeta) * series_involution(p[k][j]);
            for (std::size_t r = 0; r < rows; ++r) rhs(r, j * n + k) = t[r];
        }
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    GroupRingMatrix out(n, std::vector<GroupRingElem>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < words.size(); ++c) out[j][k].add(words[c], (*x)(c, j * n + k));
    return out;
}

namespace {

using Grid = GroupRingMatrix;

// [[a - b c, -b], [c, 1]] has the cokernel of a
void split(Grid& m, std::size_t j, std::size_t k, const GroupRingElem& b, const GroupRingElem& c) {
    std::size_t n = m.size();
    m[j][k] -= b * c;
    for (auto& row : m) row.emplace_back();
    m.emplace_back(n + 1);
    m[j][n] = -b;
    m[n][k] = c;
    m[n][n] = GroupRingElem(1);
}

bool split_long_words(Grid& m, std::vector<std::string>& moves) {
    bool changed = false;
    for (bool again = true; again;) {
        again = false;
        for (std::size_t j = 0; j < m.size() && !again; ++j)
            for (std::size_t k = 0; k < m.size() && !again; ++k)
                for (const auto& [w, c] : m[j][k].terms()) {
                    if (w.length() < 2) continue;
                    FreeWord head({w.letters().front()});
                    FreeWord tail(std::vector<int>(w.letters().begin() + 1, w.letters().end()));
                    Rat coeff = c;
                    moves.push_back("split " + sw::to_string(coeff) + "*" + w.to_string() + " at (" +
                                    std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                    split(m, j, k, GroupRingElem::word(head, coeff), GroupRingElem::word(tail));
                    again = changed = true;
                    break;
                }
    }
    return changed;
}

// generators appearing inverted in column k
std::vector<int> inverse_letters(const Grid& m, std::size_t k) {
    std::vector<int> out;
    for (const auto& row : m)
        for (const auto& [w, c] : row[k].terms())
            for (int l : w.letters())
                if (l < 0 && std::find(out.begin(), out.end(), -l) == out.end()) out.push_back(-l);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_linear(const FlkPresentation& p) {
    for (const auto& row : p.sigma)
        for (const auto& g : row)
            for (const auto& [w, c] : g.terms())
                if (w.length() > 1 || (w.length() == 1 && w.letters()[0] < 0)) return false;
    return true;
}

std::vector<QMatrix> linear_coefficients(const FlkPresentation& p) {
    if (!is_linear(p)) throw PreconditionError("presentation is not linear");
    if (!p.augmentation().is_identity()) throw PreconditionError("augmentation is not the identity");
    std::size_t n = p.size();
    std::vector<QMatrix> out(static_cast<std::size_t>(p.mu), QMatrix(n, n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [w, c] : p.sigma[j][k].terms())
                if (w.length() == 1) out[static_cast<std::size_t>(w.letters()[0] - 1)](j, k) = c;
    return out;
}

Linearization linearize_presentation(const FlkPresentation& p) {
    validate_presentation(p);
    Grid m = p.sigma;
    Linearization out;
    split_long_words(m, out.moves);
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = 0; k < m.size(); ++k) {
            auto inv = inverse_letters(m, k);
            if (inv.empty()) continue;
            int keep = inv.front();
            for (std::size_t j = 0; j < m.size(); ++j) {
                std::vector<std::pair<FreeWord, Rat>> moved;
                for (const auto& [w, c] : m[j][k].terms())
                    if (w.length() == 1 && w.letters()[0] < 0 && -w.letters()[0] != keep) moved.emplace_back(w, c);
                for (const auto& [w, c] : moved) {
                    out.moves.push_back("move " + sw::to_string(c) + "*" + w.to_string() + " at (" +
                                        std::to_string(j + 1) + "," + std::to_string(k + 1) + ") to a new column");
                    split(m, j, k, GroupRingElem::word(w, c), GroupRingElem(1));
                }
            }
            for (auto& row : m) row[k] = row[k] * GroupRingElem::z(keep);
            out.moves.push_back("right-multiply column " + std::to_string(k + 1) + " by z" + std::to_string(keep));
            split_long_words(m, out.moves);
            again = true;
            break;
        }
    }
    FlkPresentation lin;
    lin.mu = p.mu;
    lin.ring = Ring::Q;
    lin.sigma = m;
    QMatrix e = lin.augmentation();
    if (!e.is_identity()) {
        QMatrix einv = inverse(e);
        std::size_t n = m.size();
        Grid r(n, std::vector<GroupRingElem>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                if (!sgn(einv(j, l))) continue;
                for (std::size_t k = 0; k < n; ++k) r[j][k] += GroupRingElem(einv(j, l)) * m[l][k];
            }
        lin.sigma = r;
        out.moves.push_back("left-multiply by the inverse augmentation");
    }
    out.presentation = lin;
    out.coefficients = linear_coefficients(lin);
    return out;
}

SeifertModule seifert_from_flk(const FlkPresentation& linear) {
    auto coeffs = linear_coefficients(linear);
    std::size_t n = linear.size(), mu = coeffs.size();
    QMatrix row(n, n * mu);
    for (std::size_t b = 0; b < mu; ++b) row.set_block(0, b * n, coeffs[b]);
    QMatrix s(n * mu, n * mu);
    for (std::size_t a = 0; a < mu; ++a) s.set_block(a * n, 0, row);
    return block_module(s, std::vector<std::size_t>(mu, n), linear.ring);
}

GroupRingMatrix block_presentation(const std::vector<QMatrix>& coefficients) {
    std::size_t mu = coefficients.size(), n = mu ? coefficients[0].rows() : 0;
    GroupRingMatrix out(n * mu, std::vector<GroupRingElem>(n * mu));
    for (std::size_t a = 0; a < mu; ++a)
        for (std::size_t b = 0; b < mu; ++b)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rat& c = coefficients[b](j, k);
                    GroupRingElem e((a == b && j == k) ? 1 : 0);
                    e.add(FreeWord(), -c);
                    e.add(FreeWord::generator(static_cast<int>(b) + 1), c);
                    out[a * n + j][b * n + k] = e;
                }
    return out;
}

FlkPresentation change_coefficients(const FlkPresentation& p, Ring target) {
    if (p.ring == Ring::Q && target == Ring::Z) throw UnsupportedError("coefficient change Q -> Z");
    FlkPresentation out = p;
    out.ring = target;
    return out;
}

SeifertModule change_coefficients(const SeifertModule& v, Ring target) {
    if (v.ring == Ring::Q && target == Ring::Z) throw UnsupportedError("coefficient change Q -> Z");
    SeifertModule out = v;
    out.ring = target;
    return out;
}

namespace {

using Exponents = std::vector<int>;

bool has_inverse_letters(const FlkPresentation& p) {
    for (const auto& row : p.sigma)
        for (const auto& g : row)
            for (const auto& [w, c] : g.terms())
                for (int l : w.letters())
                    if (l < 0) return true;
    return false;
}

// inverse Vandermonde on the nodes 0..d
QMatrix vandermonde_inverse(int d) {
    std::size_t n = static_cast<std::size_t>(d) + 1;
    QMatrix v(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        Rat x = static_cast<long>(p), pw = 1;
        for (std::size_t q = 0; q < n; ++q) {
            v(p, q) = pw;
            pw *= x;
        }
    }
    return inverse(v);
}

}  // namespace

std::string CokernelData::delta_string() const {
    if (delta.empty()) return "0";
    std::string s;
    for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
        const Rat& c = it->second;
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        Rat a = abs(c);
        std::string term = mono.empty() ? sw::to_string(a) : (a == 1 ? mono : sw::to_string(a) + "*" + mono);
        if (s.empty()) s = (sgn(c) < 0 ? "-" : "") + term;
        else s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return s;
}

CokernelData cokernel_data(const FlkPresentation& input, int max_degree) {
    FlkPresentation p = has_inverse_letters(input) ? linearize_presentation(input).presentation : input;
    std::size_t n = p.size();
    std::size_t mu = static_cast<std::size_t>(p.mu);
    // degree of det in t_i is at most the sum over rows of the largest power of z_i
    std::vector<int> bound(mu, 0);
    for (std::size_t i = 0; i < mu; ++i)
        for (const auto& row : p.sigma) {
            int best = 0;
            for (const auto& g : row)
                for (const auto& [w, c] : g.terms())
                    best = std::max(best, static_cast<int>(std::count(w.letters().begin(), w.letters().end(),
                                                                      static_cast<int>(i) + 1)));
            bound[i] += best;
        }
    std::size_t points = 1;
    for (int b : bound) points *= static_cast<std::size_t>(b) + 1;
    std::vector<Rat> values(points);
    std::vector<int> at(mu, 0);
    for (std::size_t idx = 0; idx < points; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = mu; i-- > 0;) {
            at[i] = static_cast<int>(rest % (static_cast<std::size_t>(bound[i]) + 1));
            rest /= static_cast<std::size_t>(bound[i]) + 1;
        }
        QMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [w, c] : p.sigma[j][k].terms()) {
                    Rat term = c;
                    for (int l : w.letters()) term *= at[static_cast<std::size_t>(l - 1)];
                    m(j, k) += term;
                }
        values[idx] = determinant(m);
    }
    // interpolate one axis at a time; the index layout is row-major in the axes
    std::size_t stride = points;
    for (std::size_t i = 0; i < mu; ++i) {
        std::size_t len = static_cast<std::size_t>(bound[i]) + 1;
        stride /= len;
        QMatrix vinv = vandermonde_inverse(bound[i]);
        for (std::size_t base = 0; base < points; ++base) {
            if ((base / stride) % len != 0) continue;
            std::vector<Rat> line(len), out(len);
            for (std::size_t q = 0; q < len; ++q) line[q] = values[base + q * stride];
            for (std::size_t r = 0; r < len; ++r)
                for (std::size_t q = 0; q < len; ++q) out[r] += vinv(r, q) * line[q];
            for (std::size_t q = 0; q < len; ++q) values[base + q * stride] = out[q];
        }
    }
    CokernelData data;
    std::map<Exponents, Rat> raw;
    for (std::size_t idx = 0; idx < points; ++idx) {
        if (!sgn(values[idx])) continue;
        Exponents e(mu);
        std::size_t rest = idx;
        for (std::size_t i = mu; i-- > 0;) {
            e[i] = static_cast<int>(rest % (static_cast<std::size_t>(bound[i]) + 1));
            rest /= static_cast<std::size_t>(bound[i]) + 1;
        }
        raw[e] = values[idx];
    }
    int span = -1;
    if (!raw.empty()) {
        Exponents low(mu, std::numeric_limits<int>::max());
        for (const auto& [e, c] : raw)
            for (std::size_t i = 0; i < mu; ++i) low[i] = std::min(low[i], e[i]);
        Rat lead = raw.rbegin()->second;
        for (const auto& [e, c] : raw) {
            Exponents shifted = e;
            for (std::size_t i = 0; i < mu; ++i) shifted[i] -= low[i];
            data.delta[shifted] = c / lead;
        }
        data.vanishes = data.delta.size() == 1;
        std::map<int, Rat> diag;
        for (const auto& [e, c] : data.delta) {
            int d = 0;
            for (int x : e) d += x;
            diag[d] += c;
        }
        int lo = -1, hi = -1;
        for (const auto& [d, c] : diag)
            if (sgn(c)) {
                if (lo < 0) lo = d;
                hi = d;
            }
        if (lo >= 0) span = hi - lo;
    }
    for (int d = 0; d <= max_degree; ++d) {
        CokernelDegree cd;
        cd.degree = d;
        Int m;
        mpz_bin_uiui(m.get_mpz_t(), static_cast<unsigned long>(d) + mu, mu);
        cd.multiplicity = m;
        cd.dimension = span < 0 ? Int(-1) : m * span;
        data.degrees.push_back(cd);
    }
    return data;
}

}  // namespace sw
