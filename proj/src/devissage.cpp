#include "seifertwitt/devissage.hpp"

#include "seifertwitt/errors.hpp"
#include "seifertwitt/factor.hpp"
#include "seifertwitt/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace sw {

namespace {

constexpr int kAttempts = 64;

std::vector<QMatrix> algebra_generators(const SeifertModule& m) {
    std::vector<QMatrix> g{m.s};
    if (m.mu > 1)
        for (const auto& p : m.proj) g.push_back(p);
    return g;
}

bool end_commutative(const SeifertModule& m) {
    auto basis = hom_space(m, m);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
    return true;
}

SimplicityResult not_simple(QMatrix sub) {
    SimplicityResult r;
    r.submodule = std::move(sub);
    return r;
}

// a reducible minimal polynomial of an endomorphism x gives g(x) != 0 singular,
// whose image is a proper submodule
std::optional<QMatrix> zero_divisor_image(const SeifertModule& m, Rng& rng) {
    auto end = hom_space(m, m);
    std::size_t n = m.dim();
    for (int t = 0; t < static_cast<int>(end.size()) + kAttempts; ++t) {
        QMatrix x;
        if (t < static_cast<int>(end.size())) {
            x = end[static_cast<std::size_t>(t)];
        } else {
            x = QMatrix(n, n);
            for (const auto& e : end) x += Rat(rng.range(-3, 3)) * e;
        }
        auto fac = factor(minimal_polynomial(x));
        if (fac.factors.size() == 1 && fac.factors[0].second == 1) continue;
        QMatrix img = canonical_basis(fac.factors[0].first(x));
        if (img.cols() > 0 && img.cols() < n) return img;
    }
    return std::nullopt;
}

}  // namespace

QMatrix random_algebra_element(const SeifertModule& m, Rng& rng) {
    auto gens = algebra_generators(m);
    std::size_t n = m.dim();
    QMatrix a(n, n);
    int terms = static_cast<int>(rng.range(2, 4));
    for (int t = 0; t < terms; ++t) {
        QMatrix w = QMatrix::identity(n);
        int len = static_cast<int>(rng.range(1, 3));
        for (int l = 0; l < len; ++l) w = w * gens[static_cast<std::size_t>(rng.range(0, static_cast<long>(gens.size()) - 1))];
        long c = rng.range(-3, 3);
        if (c == 0) c = 1;
        a += Rat(c) * w;
    }
    return a;
}

SimplicityResult is_simple(const SeifertModule& m, Rng& rng) {
    std::size_t n = m.dim();
    if (n == 0) throw PreconditionError("zero module");
    if (n == 1) {
        SimplicityResult r;
        r.simple = true;
        r.element = QMatrix::identity(1);
        r.factor = QPoly::from_ints({-1, 1});
        r.vector = r.dual_vector = QMatrix::identity(1);
        return r;
    }
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        QMatrix a = random_algebra_element(m, rng);
        auto fac = factor(minimal_polynomial(a));
        for (const auto& [f, mult] : fac.factors) {
            (void)mult;
            QMatrix fa = f(a);
            QMatrix null = kernel(fa);
            for (std::size_t c = 0; c < std::min<std::size_t>(null.cols(), 3); ++c) {
                QMatrix w = spin(m, null.column(c));
                if (w.cols() < n) return not_simple(w);
            }
            if (static_cast<int>(null.cols()) != f.degree()) continue;
            QMatrix dual_null = kernel(fa.transpose());
            QMatrix u = spin_transposed(m, dual_null.column(0));
            if (u.cols() < n) return not_simple(canonical_basis(annihilator(u, n)));
            SimplicityResult r;
            r.simple = true;
            r.element = a;
            r.factor = f;
            r.vector = null.column(0);
            r.dual_vector = dual_null.column(0);
            return r;
        }
    }
    if (auto img = zero_divisor_image(m, rng)) return not_simple(*img);
    if (!end_commutative(m)) throw UnsupportedError("quaternionic: simplicity cannot be certified");
    throw UnsupportedError("simplicity not certified within the search budget");
}

QMatrix find_simple_submodule(const SeifertModule& m, Rng& rng) {
    QMatrix basis = QMatrix::identity(m.dim());
    SeifertModule cur = m;
    for (;;) {
        auto r = is_simple(cur, rng);
        if (r.simple) return canonical_basis(basis);
        basis = basis * r.submodule;
        cur = restrict_module(cur, r.submodule);
    }
}

std::vector<QMatrix> composition_series(const SeifertModule& m, Rng& rng) {
    std::size_t n = m.dim();
    std::vector<QMatrix> chain{QMatrix(n, 0)};
    while (chain.back().cols() < n) {
        auto q = quotient_module(m, chain.back());
        QMatrix w = find_simple_submodule(q.module, rng);
        chain.push_back(canonical_basis(hstack(chain.back(), q.section * w)));
    }
    return chain;
}

namespace {

// connected components of the coordinate graph; each spans an orthogonal summand
std::vector<std::vector<std::size_t>> coordinate_components(const SeifertForm& f) {
    std::size_t n = f.module.dim();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto link = [&](const QMatrix& a) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(a(i, j))) parent[find(i)] = find(j);
    };
    link(f.module.s);
    link(f.phi);
    for (const auto& p : f.module.proj) link(p);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return comps;
}

std::string dims(const std::vector<std::size_t>& idx) {
    std::string s;
    for (auto i : idx) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return s;
}

}  // namespace

AnisotropicDecomposition witt_reduce(const SeifertForm& f, std::uint64_t seed) {
    if (auto v = validate_form(f)) throw ValidationError(v->kind, v->detail);
    AnisotropicDecomposition out;
    out.seed = seed;
    auto comps = coordinate_components(f);
    for (const auto& comp : comps) {
        QMatrix sel = QMatrix::identity(f.module.dim()).select_cols(comp);
        SeifertForm g = restrict_form(f, sel);
        out.log.push_back("component {" + dims(comp) + "}");
        Rng rng(seed);
        while (g.module.dim() > 0) {
            QMatrix l;
            try {
                l = find_simple_submodule(g.module, rng);
            } catch (const UnsupportedError& e) {
                out.log.push_back("  dim " + std::to_string(g.module.dim()) + ": " + e.what());
                out.pieces.push_back({g, false, e.what()});
                break;
            }
            QMatrix gram = restricted_gram(g.phi, l);
            std::string step = "  dim " + std::to_string(g.module.dim()) + ": simple L of dim " + std::to_string(l.cols());
            if (gram.is_zero()) {
                g = induced_form_on_subquotient(g, l);
                out.log.push_back(step + " isotropic, pass to L^perp/L");
            } else {
                out.pieces.push_back({restrict_form(g, l), true, ""});
                g = restrict_form(g, orthogonal_complement(g, l));
                out.log.push_back(step + " anisotropic, split off");
            }
        }
    }
    std::vector<bool> gone(out.pieces.size(), false);
    for (std::size_t i = 0; i < out.pieces.size(); ++i) {
        if (gone[i]) continue;
        for (std::size_t j = i + 1; j < out.pieces.size(); ++j) {
            if (gone[j]) continue;
            const auto& a = out.pieces[i].form;
            const auto& b = out.pieces[j].form;
            if (a.module.s == b.module.s && a.module.proj == b.module.proj && b.phi == -a.phi) {
                gone[i] = gone[j] = true;
                out.log.push_back("cancel pieces " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " (diagonal lagrangian)");
                break;
            }
        }
    }
    std::vector<Piece> kept;
    for (std::size_t i = 0; i < out.pieces.size(); ++i)
        if (!gone[i]) kept.push_back(std::move(out.pieces[i]));
    out.pieces = std::move(kept);
    return out;
}

std::vector<IsotypicGroup> isotypic_group(const AnisotropicDecomposition& d, Rng& rng) {
    std::vector<IsotypicGroup> groups;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        if (!p.certified) continue;
        bool placed = false;
        for (auto& g : groups) {
            if (g.representative.dim() != p.form.module.dim()) continue;
            auto t = find_isomorphism(g.representative, p.form.module, rng);
            if (!t) continue;
            g.members.push_back(i);
            g.witnesses.push_back(*t);
            g.forms.push_back(pull_back_form(p.form.phi, *t));
            placed = true;
            break;
        }
        if (!placed) {
            IsotypicGroup g;
            g.representative = p.form.module;
            g.members.push_back(i);
            g.witnesses.push_back(QMatrix::identity(p.form.module.dim()));
            g.forms.push_back(p.form.phi);
            groups.push_back(std::move(g));
        }
    }
    return groups;
}

}  // namespace sw
