#include "seifertwitt/factor.hpp"

#include "seifertwitt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace sw {

namespace {

using ll = long;
using ModPoly = std::vector<ll>;  // coefficients in [0, p), low to high
using ZPoly = std::vector<Int>;

// ---- polynomials over F_p

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ll inv_mod(ll a, ll p) {
    ll r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
    while (r1) {
        ll q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return ((s0 % p) + p) % p;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, ll p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, ll p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, ll p) {
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
    ll inv = inv_mod(b.back(), p);
    ModPoly q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        ll f = a[i] * inv % p;
        if (!f) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

ModPoly mp_monic(ModPoly a, ll p) {
    if (a.empty()) return a;
    ll inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, ll p) {
    while (!b.empty()) {
        auto r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// s a + t b = 1
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, ll p) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        auto t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("Hensel: factors not coprime mod p");
    ll inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

ModPoly mp_derivative(const ModPoly& a, ll p) {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<ll>(i) % p * a[i] % p);
    trim(d);
    return d;
}

ModPoly mp_powmod_x(ll e, const ModPoly& f, ll p) {
    ModPoly result{1}, base{0, 1};
    base = mp_divmod(base, f, p).second;
    while (e) {
        if (e & 1) result = mp_divmod(mp_mul(result, base, p), f, p).second;
        base = mp_divmod(mp_mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return result;
}

// kernel of an n x n matrix over F_p, row-major
std::vector<std::vector<ll>> mp_kernel(std::vector<std::vector<ll>> m, ll p) {
    std::size_t n = m.size(), cols = n ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t q = r;
        while (q < n && m[q][c] == 0) ++q;
        if (q == n) continue;
        std::swap(m[q], m[r]);
        ll inv = inv_mod(m[r][c], p);
        for (auto& v : m[r]) v = v * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            ll f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<ll>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::vector<ll> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][c]) % p;
        basis.push_back(v);
    }
    return basis;
}

std::vector<ModPoly> berlekamp(const ModPoly& f, ll p) {
    std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    // row i: x^(i p) mod f; we need v with v (Q - I) = 0, i.e. ker (Q - I)^T
    std::vector<std::vector<ll>> q(n, std::vector<ll>(n, 0));
    ModPoly xp = mp_powmod_x(p, f, p);
    ModPoly cur{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) q[i][j] = cur[j];
        cur = mp_divmod(mp_mul(cur, xp, p), f, p).second;
    }
    std::vector<std::vector<ll>> mt(n, std::vector<ll>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mt[j][i] = ((q[i][j] - (i == j ? 1 : 0)) % p + p) % p;
    auto basis = mp_kernel(mt, p);
    std::size_t r = basis.size();
    std::vector<ModPoly> factors{f};
    if (r == 1) return factors;
    for (auto& vec : basis) {
        ModPoly v(vec.begin(), vec.end());
        trim(v);
        if (v.size() <= 1) continue;
        std::vector<ModPoly> next;
        for (auto& u : factors) {
            if (u.size() <= 2) {
                next.push_back(u);
                continue;
            }
            ModPoly rem = u;
            for (ll a = 0; a < p && rem.size() > 1; ++a) {
                ModPoly va = v;
                va[0] = ((va[0] - a) % p + p) % p;
                trim(va);
                ModPoly g = mp_gcd(rem, va, p);
                if (g.size() > 1) {
                    next.push_back(g);
                    rem = mp_divmod(rem, g, p).first;
                }
            }
        }
        factors = std::move(next);
        if (factors.size() == r) break;
    }
    return factors;
}

// ---- integer polynomials

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

ZPoly zmod(ZPoly a, const Int& m) {
    for (auto& c : a) c = mod_pos(c, m);
    ztrim(a);
    return a;
}

ZPoly symmetric(ZPoly a, const Int& m) {
    Int half = m / 2;
    for (auto& c : a) {
        c = mod_pos(c, m);
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

ModPoly to_mod(const ZPoly& a, ll p) {
    ModPoly r;
    for (const auto& c : a) r.push_back(mod_pos(c, Int(p)).get_si());
    trim(r);
    return r;
}

ZPoly from_mod(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

// exact division by a monic divisor; nullopt if it does not divide
std::optional<ZPoly> zdiv_exact(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return std::nullopt;
    ZPoly q(a.size() - b.size() + 1, Int(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        Int f = a[i];
        if (f == 0) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (a[i] != 0) return std::nullopt;
    ztrim(q);
    return q;
}

std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const ModPoly& g, const ModPoly& h, ll p, int k) {
    auto [s, t] = mp_bezout(g, h, p);
    ZPoly big_g = from_mod(g), big_h = from_mod(h);
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    Int pj = p;
    for (int j = 1; j < k; ++j) {
        ZPoly diff = f;
        auto prod = zmul(big_g, big_h);
        if (prod.size() > diff.size()) diff.resize(prod.size(), Int(0));
        for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
        ztrim(diff);
        ModPoly e;
        for (auto& c : zmod(diff, pk)) e.push_back(mod_pos(Int(c / pj), Int(p)).get_si());
        trim(e);
        auto [q, dg] = mp_divmod(mp_mul(t, e, p), g, p);
        ModPoly hm = to_mod(big_h, p);
        ModPoly dh = mp_sub(mp_mul(s, e, p), ModPoly{}, p);
        auto qh = mp_mul(q, hm, p);
        if (qh.size() > dh.size()) dh.resize(qh.size(), 0);
        for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = (dh[i] + qh[i]) % p;
        trim(dh);
        for (std::size_t i = 0; i < dg.size(); ++i) big_g[i] += pj * dg[i];
        if (dh.size() > big_h.size()) big_h.resize(dh.size(), Int(0));
        for (std::size_t i = 0; i < dh.size(); ++i) big_h[i] += pj * dh[i];
        big_g = zmod(big_g, pk);
        big_h = zmod(big_h, pk);
        pj *= p;
    }
    return {big_g, big_h};
}

ModPoly mp_product(const std::vector<ModPoly>& fs, std::size_t from, std::size_t to, ll p) {
    ModPoly acc{1};
    for (std::size_t i = from; i < to; ++i) acc = mp_mul(acc, fs[i], p);
    return acc;
}

std::vector<ZPoly> lift_all(const ZPoly& f, const std::vector<ModPoly>& fs, ll p, int k) {
    if (fs.size() == 1) {
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        return {zmod(f, pk)};
    }
    std::size_t mid = fs.size() / 2;
    std::vector<ModPoly> left(fs.begin(), fs.begin() + mid), right(fs.begin() + mid, fs.end());
    auto [g, h] = hensel_pair(f, mp_product(fs, 0, mid, p), mp_product(fs, mid, fs.size(), p), p, k);
    auto a = lift_all(g, left, p, k);
    auto b = lift_all(h, right, p, k);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool is_prime_small(ll n) {
    if (n < 2) return false;
    for (ll d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// F monic, squarefree, integer coefficients
std::vector<ZPoly> factor_monic_integer(const ZPoly& f) {
    std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    ll best_p = 0;
    std::vector<ModPoly> best;
    int good = 0;
    for (ll p = 3; p < 2000 && good < 6; p += 2) {
        if (!is_prime_small(p)) continue;
        ModPoly fp = to_mod(f, p);
        if (mp_gcd(fp, mp_derivative(fp, p), p).size() != 1) continue;
        ++good;
        auto fs = berlekamp(fp, p);
        if (best.empty() || fs.size() < best.size()) {
            best = fs;
            best_p = p;
        }
        if (best.size() == 1) return {f};
    }
    if (best.empty()) throw Error("factorization: no prime of good reduction found");
    ll p = best_p;
    // factor coefficients are bounded by 2^n |f|_2
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Int bound = (root + 1) << static_cast<unsigned>(n);
    int k = 1;
    Int pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }
    std::sort(best.begin(), best.end());
    auto lifted = lift_all(f, best, p, k);
    for (auto& g : lifted) g = symmetric(g, pk);

    std::vector<ZPoly> result;
    std::vector<std::size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    ZPoly cur = f;
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool found = false;
        std::vector<bool> pick(remaining.size(), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            ZPoly h{Int(1)};
            for (std::size_t i = 0; i < remaining.size(); ++i)
                if (pick[i]) h = symmetric(zmul(h, lifted[remaining[i]]), pk);
            if (auto q = zdiv_exact(cur, h)) {
                result.push_back(h);
                cur = *q;
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (!pick[i]) rest.push_back(remaining[i]);
                remaining = rest;
                found = true;
                break;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (!found) ++size;
    }
    if (cur.size() > 1) result.push_back(cur);
    return result;
}

std::vector<QPoly> factor_squarefree(const QPoly& g) {
    if (g.degree() <= 1) return {g.monic()};
    Int den = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly big;
    Int content = 0;
    for (const auto& c : g.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        big.push_back(v);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (big.back() < 0) content = -content;
    for (auto& c : big) c /= content;
    std::size_t n = big.size() - 1;
    Int lc = big.back();
    ZPoly monic(n + 1);
    Int power = 1;
    for (std::size_t i = n; i-- > 0;) {
        monic[i] = big[i] * power;
        power *= lc;
    }
    monic[n] = 1;
    std::vector<QPoly> out;
    for (const auto& h : factor_monic_integer(monic)) {
        std::vector<Rat> c;
        Int scale = 1;
        for (std::size_t i = 0; i < h.size(); ++i) {
            c.emplace_back(h[i] * scale);
            scale *= lc;
        }
        out.push_back(QPoly(c).monic());
    }
    return out;
}

}  // namespace

Factorization factor(const QPoly& p) {
    if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
    Factorization out;
    out.unit = p.lead();
    for (const auto& [g, mult] : squarefree_decomposition(p))
        for (auto& f : factor_squarefree(g)) out.factors.emplace_back(f, mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    return out;
}

bool is_irreducible(const QPoly& p) {
    if (p.degree() < 1) return false;
    auto f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace sw
