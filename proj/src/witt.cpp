#include "seifertwitt/witt.hpp"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"
#include "seifertwitt/sturm.hpp"

#include <algorithm>
#include <set>

namespace sw {

namespace {

using EMatrix = std::vector<std::vector<QPoly>>;

EMatrix identity(const NumberField& f, std::size_t k) {
    (void)f;
    EMatrix m(k, std::vector<QPoly>(k));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = QPoly(1);
    return m;
}

EMatrix multiply(const NumberField& f, const EMatrix& a, const EMatrix& b) {
    std::size_t r = a.size(), n = b.size(), c = n ? b[0].size() : 0;
    EMatrix out(r, std::vector<QPoly>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            QPoly acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!a[i][k].is_zero() && !b[k][j].is_zero()) acc += a[i][k] * b[k][j];
            out[i][j] = f.reduce(acc);
        }
    return out;
}

EMatrix adjoint(const NumberField& f, const EMatrix& a) {
    std::size_t r = a.size(), c = r ? a[0].size() : 0;
    EMatrix out(c, std::vector<QPoly>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) out[j][i] = f.conj(a[i][j]);
    return out;
}

EMatrix congruent(const NumberField& f, const EMatrix& h, const EMatrix& p) {
    return multiply(f, multiply(f, adjoint(f, p), h), p);
}

std::vector<Rat> coords(const NumberField& f, const QPoly& a) {
    QPoly r = f.reduce(a);
    std::vector<Rat> v;
    for (int i = 0; i < f.degree(); ++i) v.push_back(r.coeff(static_cast<std::size_t>(i)));
    return v;
}

// square class of a nonzero rational as a squarefree integer
Int square_class(const Rat& q) {
    Int n = q.get_num() * q.get_den();
    return squarefree_part(n);
}

int valuation(Int& n, const Int& p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

Int mod_pos(const Int& a, long m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

Diagonalization diagonalize(const HermitianForm& h) {
    const NumberField& f = h.field;
    std::size_t k = h.rank();
    EMatrix p = identity(f, k);
    EMatrix cur = h.gram;
    for (auto& row : cur)
        for (auto& x : row) x = f.reduce(x);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t piv = k;
        for (std::size_t i = t; i < k && piv == k; ++i)
            if (!cur[i][i].is_zero()) piv = i;
        if (piv == k) {
            std::size_t pi = k, pj = k;
            for (std::size_t i = t; i < k && pi == k; ++i)
                for (std::size_t j = t; j < k; ++j)
                    if (i != j && !cur[i][j].is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == k) throw SingularError("hermitian form is singular");
            std::vector<QPoly> shifts{QPoly(1)};
            if (!f.trivial_involution()) shifts.push_back(f.reduce(QPoly::x() - f.conj(QPoly::x())));
            bool repaired = false;
            for (const auto& c : shifts) {
                EMatrix q = identity(f, k);
                q[pj][pi] = c;
                EMatrix next = congruent(f, cur, q);
                if (!next[pi][pi].is_zero()) {
                    p = multiply(f, p, q);
                    cur = next;
                    repaired = true;
                    break;
                }
            }
            if (!repaired) throw Error("pivot repair failed");
            piv = pi;
        }
        if (piv != t) {
            EMatrix q = identity(f, k);
            q[piv][piv] = q[t][t] = QPoly();
            q[piv][t] = q[t][piv] = QPoly(1);
            p = multiply(f, p, q);
            cur = congruent(f, cur, q);
        }
        QPoly dinv = f.inv(cur[t][t]);
        EMatrix q = identity(f, k);
        for (std::size_t l = t + 1; l < k; ++l) q[t][l] = f.reduce(-f.mul(dinv, cur[t][l]));
        p = multiply(f, p, q);
        cur = congruent(f, cur, q);
    }
    Diagonalization d;
    for (std::size_t i = 0; i < k; ++i) d.entries.push_back(cur[i][i]);
    d.congruence = p;
    return d;
}

QPoly element_minpoly(const NumberField& f, const QPoly& a) {
    std::size_t d = static_cast<std::size_t>(f.degree());
    QMatrix cols(d, 0);
    QPoly power(1);
    for (std::size_t k = 0; k <= d; ++k) {
        QMatrix v = QMatrix::column_vector(coords(f, power));
        auto c = solve(cols, v);
        if (k > 0 && c) {
            std::vector<Rat> mp;
            for (std::size_t i = 0; i < k; ++i) mp.push_back(-(*c)(i, 0));
            mp.emplace_back(1);
            return QPoly(mp);
        }
        cols = hstack(cols, v);
        power = f.mul(power, a);
    }
    throw Error("element minimal polynomial not found");
}

FixedField fixed_field(const NumberField& f) {
    int target = f.fixed_field_degree;
    auto attempt = [&](const QPoly& u) -> std::optional<FixedField> {
        QPoly beta = f.reduce(u + f.conj(u));
        QPoly mp = element_minpoly(f, beta);
        if (mp.degree() != target) return std::nullopt;
        return FixedField{beta, mp};
    };
    for (int i = 0; i < f.degree(); ++i)
        if (auto k = attempt(QPoly::monomial(i))) return *k;
    Rng local(0xf1eedULL);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rat> c;
        for (int i = 0; i < f.degree(); ++i) c.emplace_back(local.range(-3, 3));
        if (auto k = attempt(QPoly(c))) return *k;
    }
    throw Error("no primitive element for the fixed field");
}

std::optional<QPoly> in_fixed_field(const NumberField& f, const FixedField& k, const QPoly& a) {
    std::size_t d = static_cast<std::size_t>(f.degree());
    QMatrix cols(d, 0);
    QPoly power(1);
    for (int i = 0; i < k.minpoly.degree(); ++i) {
        cols = hstack(cols, QMatrix::column_vector(coords(f, power)));
        power = f.mul(power, k.beta);
    }
    auto c = solve(cols, QMatrix::column_vector(coords(f, a)));
    if (!c) return std::nullopt;
    std::vector<Rat> out;
    for (std::size_t i = 0; i < cols.cols(); ++i) out.push_back((*c)(i, 0));
    return QPoly(out);
}

std::vector<Signature> signatures(const NumberField& f, const std::vector<QPoly>& diag) {
    std::vector<Signature> out;
    if (f.trivial_involution()) {
        auto roots = real_root_data(f.minpoly);
        for (const auto& iv : roots.intervals) {
            int s = 0;
            for (const auto& d : diag) s += sign_at_root(f.minpoly, iv, f.reduce(d));
            out.push_back({iv.label(), s});
        }
        return out;
    }
    FixedField k = fixed_field(f);
    QPoly theta = f.reduce(QPoly::x() - f.conj(QPoly::x()));
    auto delta = in_fixed_field(f, k, f.mul(theta, theta));
    if (!delta) throw Error("square of an anti-fixed element is not fixed");
    std::vector<QPoly> dk;
    for (const auto& d : diag) {
        auto p = in_fixed_field(f, k, d);
        if (!p) throw Error("diagonal entry is not fixed by the involution");
        dk.push_back(*p);
    }
    auto roots = real_root_data(k.minpoly);
    for (const auto& iv : roots.intervals) {
        if (sign_at_root(k.minpoly, iv, *delta) > 0) continue;
        int s = 0;
        for (const auto& d : dk) s += sign_at_root(k.minpoly, iv, d);
        out.push_back({iv.label(), s});
    }
    return out;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Int& p) {
    if (a == 0 || b == 0) throw PreconditionError("hilbert symbol of zero");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw PreconditionError("place is not a prime");
    Int u = a.get_num() * a.get_den(), v = b.get_num() * b.get_den();
    int al = valuation(u, p), be = valuation(v, p);
    if (p == 2) {
        auto eps = [](const Int& x) { return mod_pos(x, 4) == 3 ? 1 : 0; };
        auto omega = [](const Int& x) {
            Int r = mod_pos(x, 8);
            return (r == 3 || r == 5) ? 1 : 0;
        };
        int e = eps(u) * eps(v) + al * omega(v) + be * omega(u);
        return e % 2 ? -1 : 1;
    }
    int r = 1;
    Int half = (p - 1) / 2;
    if ((al * be) % 2 == 1 && half % 2 == 1) r = -r;
    if (be % 2 == 1) r *= legendre(u, p);
    if (al % 2 == 1) r *= legendre(v, p);
    return r;
}

std::vector<Int> relevant_primes(const std::vector<Rat>& values) {
    std::set<Int> ps{Int(2)};
    for (const auto& q : values) {
        if (q == 0) continue;
        for (const auto& [pr, e] : factor_integer(abs(q.get_num()))) ps.insert(pr);
        for (const auto& [pr, e] : factor_integer(q.get_den())) ps.insert(pr);
    }
    ps.erase(Int(1));
    return {ps.begin(), ps.end()};
}

HasseWitt hasse_witt_over_Q(const std::vector<Rat>& entries) {
    std::vector<Int> places = relevant_primes(entries);
    places.insert(places.begin(), Int(0));
    std::size_t m = entries.size();
    std::size_t half = m / 2;
    long hyp_pairs = m % 2 == 0 ? static_cast<long>(half ? half * (half - 1) / 2 : 0) : -1;
    HasseWitt out;
    out.matches_hyperbolic = hyp_pairs >= 0;
    int product = 1;
    for (const auto& p : places) {
        int c = 1;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) c *= hilbert_symbol(entries[i], entries[j], p);
        product *= c;
        if (c == -1) out.nontrivial.push_back(p);
        if (hyp_pairs >= 0) {
            int h = (hyp_pairs % 2 == 1) ? hilbert_symbol(-1, -1, p) : 1;
            if (h != c) out.matches_hyperbolic = false;
        }
    }
    if (product != 1) throw Error("product formula fails for the Hasse-Witt invariant");
    return out;
}

bool norm_class_test_quadratic(const Rat& d, const Int& m) {
    if (d == 0) throw PreconditionError("zero is not a norm class");
    if (m == 0 || squarefree_part(m) != m || m == 1) throw PreconditionError("m must be a squarefree non-square");
    std::vector<Int> places = relevant_primes({d, Rat(m)});
    places.insert(places.begin(), Int(0));
    for (const auto& p : places)
        if (hilbert_symbol(d, Rat(m), p) != 1) return false;
    return true;
}

DiscriminantClass discriminant_class(const NumberField& f, const std::vector<QPoly>& diag) {
    std::size_t m = diag.size();
    std::size_t pairs = m ? m * (m - 1) / 2 : 0;
    QPoly rep(pairs % 2 ? -1 : 1);
    for (const auto& d : diag) rep = f.mul(rep, d);
    DiscriminantClass out;
    out.representative = rep;
    bool rational = rep.degree() <= 0;
    if (f.degree() == 1 && f.trivial_involution()) {
        Int c = square_class(rep.coeff(0));
        out.group = "square-class";
        out.decidable = true;
        out.trivial = c == 1;
        out.label = to_string(c);
        return out;
    }
    if (f.degree() == 2 && !f.trivial_involution() && rational) {
        QPoly theta = f.reduce(QPoly::x() - f.conj(QPoly::x()));
        QPoly delta = f.mul(theta, theta);
        Int mfield = square_class(delta.coeff(0));
        out.group = "norm-class";
        out.decidable = true;
        out.trivial = norm_class_test_quadratic(rep.coeff(0), mfield);
        out.label = to_string(square_class(rep.coeff(0))) + " mod N(Q(sqrt(" + to_string(mfield) + ")))";
        return out;
    }
    out.group = "symbolic";
    out.label = rep.to_string("a");
    return out;
}

InvariantReport invariant_report(const HermitianForm& h) {
    const NumberField& f = h.field;
    InvariantReport r;
    r.algebra_kind = table_row(f);
    r.minpoly = f.minpoly.to_string("a");
    r.involution = f.involution ? f.involution->to_string("a") : "";
    r.rank = h.rank();
    r.rank_mod2 = static_cast<int>(r.rank % 2);
    auto diag = diagonalize(h);
    for (const auto& d : diag.entries) r.diagonal.push_back(d.to_string("a"));
    r.signatures = signatures(f, diag.entries);
    r.discriminant = discriminant_class(f, diag.entries);
    bool over_q = f.degree() == 1;
    if (over_q) {
        std::vector<Rat> entries;
        for (const auto& d : diag.entries) entries.push_back(d.coeff(0));
        r.hasse = hasse_witt_over_Q(entries);
    }
    bool sig_nonzero = std::any_of(r.signatures.begin(), r.signatures.end(), [](const Signature& s) { return s.value != 0; });
    r.nontrivial = r.rank_mod2 == 1 || sig_nonzero || (r.discriminant.decidable && !r.discriminant.trivial) ||
                   (r.hasse && r.rank_mod2 == 0 && r.discriminant.trivial && !r.hasse->matches_hyperbolic);
    if (!r.discriminant.decidable) r.status = "partial(class equality undecided)";
    else if (f.trivial_involution() && !over_q) r.status = "partial(Hasse-Witt over number fields)";
    r.trivial = !r.nontrivial && r.status == "complete";
    return r;
}

InvariantReport unsupported_report(std::size_t rank, const std::string& kind, const std::string& reason) {
    InvariantReport r;
    r.algebra_kind = kind;
    r.rank = rank;
    r.rank_mod2 = static_cast<int>(rank % 2);
    r.discriminant.group = "symbolic";
    r.status = "unsupported(" + reason + ")";
    return r;
}

std::string verdict(const std::vector<InvariantReport>& reports) {
    std::string undetermined;
    for (const auto& r : reports) {
        if (r.nontrivial) return "nontrivial";
        if (r.status.rfind("unsupported", 0) == 0) undetermined = "undetermined(quaternionic)";
        else if (!r.trivial && undetermined.empty()) undetermined = "undetermined(class equality undecided)";
    }
    return undetermined.empty() ? "Witt-trivial" : undetermined;
}

}  // namespace sw
