#include <doctest.h>

#include "fixtures.hpp"
#include "seifertwitt/covering.hpp"
#include "seifertwitt/errors.hpp"
#include "seifertwitt/linalg.hpp"

using namespace sw;

namespace {

GroupRingElem elem(std::initializer_list<std::pair<const char*, long>> terms) {
    GroupRingElem g;
    for (const auto& [w, c] : terms) g.add(parse_word(w), Rat(c));
    return g;
}

FlkPresentation single(const GroupRingElem& g, int mu) {
    FlkPresentation p;
    p.mu = mu;
    p.sigma = {{g}};
    return p;
}

SeriesMatrix to_series(const QMatrix& m, int mu, int degree) {
    SeriesMatrix out(m.rows(), std::vector<TruncSeries>(m.cols(), TruncSeries(mu, degree)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = TruncSeries::constant(mu, degree, m(i, j));
    return out;
}

bool series_equal(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

// Phi^T (sum_i (1 - z_i) pi_i) sigma^-1 from series arithmetic alone
SeriesMatrix pairing_oracle(const SeifertForm& f, int degree) {
    const auto& v = f.module;
    std::size_t n = v.dim();
    SeriesMatrix left(n, std::vector<TruncSeries>(n, TruncSeries(v.mu, degree)));
    for (int i = 0; i < v.mu; ++i) {
        QMatrix c = f.phi.transpose() * v.proj[static_cast<std::size_t>(i)];
        TruncSeries x = TruncSeries::letter(v.mu, degree, i + 1);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) left[a][b] += Rat(-c(a, b)) * x;
    }
    return multiply(left, sigma_inverse_truncated(v, degree));
}

TruncSeries brute_bar(const TruncSeries& p) {
    int mu = p.mu(), d = p.degree();
    TruncSeries out(mu, d);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
        if (!sgn(p[idx])) continue;
        TruncSeries t = TruncSeries::constant(mu, d, p[idx]);
        auto w = p.word(idx);
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            t = t * magnus_expand(GroupRingElem::word(FreeWord::generator(*it, -1)) - GroupRingElem(1), mu, d);
        out += t;
    }
    return out;
}

}  // namespace

TEST_CASE("free words and group ring") {
    FreeWord w = parse_word("z1 z2 z2^-1 z1^-1 z2^2");
    CHECK(w.to_string() == "z2 z2");
    CHECK((w * w.inverse()).length() == 0);
    CHECK(parse_word("1").length() == 0);
    CHECK_THROWS_AS(parse_word("y1"), ParseError);
    GroupRingElem g = elem({{"z1", 2}, {"1", -1}});
    CHECK(g.augmentation() == 1);
    CHECK((g * g.bar()).augmentation() == 1);
    CHECK(g.bar().bar() == g);
    CHECK((g - g).is_zero());
}

TEST_CASE("cover presentations") {
    auto one = block_module(QMatrix::identity(1), {1});
    auto p1 = cover_presentation(one);
    CHECK(p1.sigma[0][0] == GroupRingElem::z(1));
    auto zero = block_module(QMatrix::zero(1, 1), {1});
    CHECK(cover_presentation(zero).sigma[0][0] == GroupRingElem(1));

    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        auto v = fixtures::random_module(rng, {2, 1, 2});
        auto p = cover_presentation(v);
        CHECK(p.augmentation().is_identity());
        CHECK_NOTHROW(validate_presentation(p));
    }
    FlkPresentation bad = single(elem({{"z1", 1}, {"1", -1}}), 1);
    CHECK_THROWS_AS(validate_presentation(bad), ValidationError);
}

TEST_CASE("magnus expansion") {
    TruncSeries inv = magnus_expand(GroupRingElem::word(FreeWord::generator(1, -1)), 1, 3);
    CHECK(inv.coeff({}) == 1);
    CHECK(inv.coeff({1}) == -1);
    CHECK(inv.coeff({1, 1}) == 1);
    CHECK(inv.coeff({1, 1, 1}) == -1);
    TruncSeries d = magnus_expand(elem({{"1", 1}, {"z1", -1}}), 1, 2);
    CHECK(d == Rat(-1) * TruncSeries::letter(1, 2, 1));

    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        GroupRingElem a, b;
        for (int k = 0; k < 3; ++k) {
            std::vector<int> la, lb;
            for (int j = 0; j < 3; ++j) {
                la.push_back(static_cast<int>(rng.range(1, 2)) * (rng.range(0, 1) ? 1 : -1));
                lb.push_back(static_cast<int>(rng.range(1, 2)) * (rng.range(0, 1) ? 1 : -1));
            }
            a.add(FreeWord(la), rng.range(-3, 3));
            b.add(FreeWord(lb), rng.range(-3, 3));
        }
        CHECK(magnus_expand(a * b, 2, 4) == magnus_expand(a, 2, 4) * magnus_expand(b, 2, 4));
        CHECK(magnus_expand(a + b, 2, 4) == magnus_expand(a, 2, 4) + magnus_expand(b, 2, 4));
    }
}

TEST_CASE("sigma inverse") {
    Rng rng(5);
    for (int t = 0; t < 8; ++t) {
        auto v = fixtures::random_module(rng, {2, 2});
        const int d = 5;
        auto sig = magnus_expand(cover_presentation(v).sigma, v.mu, d);
        auto inv = sigma_inverse_truncated(v, d);
        CHECK(series_equal(multiply(sig, inv), identity_series(v.dim(), v.mu, d)));
        CHECK(series_equal(multiply(inv, sig), identity_series(v.dim(), v.mu, d)));
        auto exact = sigma_inverse_series(v);
        for (std::size_t j = 0; j < v.dim(); ++j)
            for (std::size_t k = 0; k < v.dim(); ++k) CHECK(exact[j][k].truncate(d) == inv[j][k]);
    }
    // additivity on direct sums
    auto a = fixtures::random_module(rng, {1, 2});
    auto b = fixtures::random_module(rng, {2, 1});
    auto ab = sigma_inverse_truncated(direct_sum(a, b), 4);
    auto ia = sigma_inverse_truncated(a, 4), ib = sigma_inverse_truncated(b, 4);
    CHECK(ab[0][0] == ia[0][0]);
    CHECK(ab[a.dim()][a.dim() + 1] == ib[0][1]);
    CHECK(ab[0][a.dim()].is_zero());
}

TEST_CASE("blanchfield pairing against series arithmetic") {
    auto f = fixtures::example_form();
    const int d = 6;
    auto p = blanchfield_pairing(f, d);
    auto oracle = pairing_oracle(f, d);
    CHECK(series_equal(truncations(p), oracle));
    for (std::size_t j = 0; j < f.module.dim(); ++j)
        for (std::size_t k = 0; k < f.module.dim(); ++k) CHECK(p[j][k].exact.truncate(d) == p[j][k].truncated);

    Rng rng(9);
    auto g = fixtures::random_form(rng, 1, {2, 1});
    CHECK(series_equal(truncations(blanchfield_pairing(g, 5)), pairing_oracle(g, 5)));
}

TEST_CASE("series involution") {
    TruncSeries x1 = TruncSeries::letter(2, 3, 1);
    TruncSeries b = series_involution(x1);
    CHECK(b.coeff({1}) == -1);
    CHECK(b.coeff({1, 1}) == 1);
    CHECK(b.coeff({1, 1, 1}) == -1);
    TruncSeries x12 = TruncSeries::letter(2, 3, 1) * TruncSeries::letter(2, 3, 2);
    TruncSeries b12 = series_involution(x12);
    CHECK(b12.coeff({2, 1}) == 1);
    CHECK(b12.coeff({2, 1, 1}) == -1);
    CHECK(b12.coeff({2, 2, 1}) == -1);
    CHECK(b12.coeff({1, 2}) == 0);

    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        TruncSeries p(2, 4);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = rng.range(-2, 2);
        CHECK(series_involution(series_involution(p)) == p);
        CHECK(series_involution(p) == brute_bar(p));
    }
}

TEST_CASE("symmetry witness") {
    auto f = fixtures::example_form();
    const int d = 8;
    auto p = truncations(blanchfield_pairing(f, d));
    auto w = symmetry_witness(p, f.zeta, 2, d);
    REQUIRE(w.has_value());
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(magnus_expand((*w)[j][k], 2, d) == p[j][k] + Rat(f.zeta) * series_involution(p[k][j]));
            CHECK((*w)[j][k].max_length() <= d / 2);
        }
    auto bad = p;
    Rng rng(31);
    for (std::size_t i = 0; i < bad[0][1].size(); ++i)
        if (bad[0][1].word(i).size() >= 5) bad[0][1][i] += rng.range(-1, 1);
    CHECK(!symmetry_witness(bad, f.zeta, 2, d).has_value());
}

TEST_CASE("linearization") {
    auto lz = linearize_presentation(single(GroupRingElem::z(1), 1));
    REQUIRE(lz.coefficients.size() == 1);
    CHECK(lz.coefficients[0] == QMatrix::identity(1));

    auto l2 = linearize_presentation(single(GroupRingElem::z(1) * GroupRingElem::z(2), 2));
    CHECK(l2.presentation.size() == 2);
    CHECK(is_linear(l2.presentation));
    CHECK(l2.presentation.augmentation().is_identity());
    CHECK(!l2.moves.empty());

    FlkPresentation mixed;
    mixed.mu = 2;
    mixed.sigma = {{elem({{"z1^-1", 2}, {"z2^-1", -1}, {"z1 z2", 3}, {"1", -3}}), elem({{"z2", 1}, {"1", -1}})},
                   {elem({{"z1^2", 1}}), elem({{"z2^-1 z1", 1}})}};
    validate_presentation(mixed);
    auto lm = linearize_presentation(mixed);
    CHECK(is_linear(lm.presentation));
    CHECK(cokernel_data(mixed, 3) == cokernel_data(lm.presentation, 3));

    auto v = fixtures::example_module();
    auto cov = cover_presentation(v);
    auto lc = linearize_presentation(cov);
    CHECK(lc.presentation.size() == v.dim());
}

TEST_CASE("seifert modules from presentations") {
    auto trivial = single(GroupRingElem(1), 1);
    auto v0 = seifert_from_flk(trivial);
    CHECK(v0.dim() == 1);
    CHECK(v0.s.is_zero());
    auto v1 = seifert_from_flk(linearize_presentation(single(GroupRingElem::z(1), 1)).presentation);
    CHECK(v1.dim() == 1);
    CHECK(v1.s == QMatrix::identity(1));

    Rng rng(17);
    for (int t = 0; t < 6; ++t) {
        std::vector<QMatrix> coeffs{fixtures::random_matrix(rng, 2, 2), fixtures::random_matrix(rng, 2, 2)};
        auto blocks = block_presentation(coeffs);
        FlkPresentation lin;
        lin.mu = 2;
        lin.sigma.assign(2, std::vector<GroupRingElem>(2));
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                lin.sigma[j][k] = GroupRingElem(j == k ? 1 : 0);
                for (int i = 0; i < 2; ++i) {
                    const Rat& c = coeffs[static_cast<std::size_t>(i)](j, k);
                    lin.sigma[j][k].add(FreeWord(), -c);
                    lin.sigma[j][k].add(FreeWord::generator(i + 1), c);
                }
            }
        auto v = seifert_from_flk(lin);
        CHECK(cover_presentation(v).sigma == blocks);
        CHECK(cokernel_data(cover_presentation(v), 3) == cokernel_data(lin, 3));
    }
}

TEST_CASE("coefficient change") {
    auto v = fixtures::example_module();
    auto q = change_coefficients(v, Ring::Q);
    CHECK(q.ring == Ring::Q);
    CHECK(q.s == v.s);
    CHECK_THROWS_AS(change_coefficients(q, Ring::Z), UnsupportedError);
    auto p = change_coefficients(cover_presentation(v), Ring::Q);
    CHECK(p.ring == Ring::Q);
}

TEST_CASE("cokernel data") {
    auto c1 = cokernel_data(single(GroupRingElem::z(1), 1), 3);
    CHECK(c1.vanishes);
    CHECK(c1.delta_string() == "1");
    auto c2 = cokernel_data(single(elem({{"z1", 2}, {"1", -1}}), 1), 3);
    CHECK(!c2.vanishes);
    CHECK(c2.delta_string() == "t1 - 1/2");
    REQUIRE(c2.degrees.size() == 4);
    CHECK(c2.degrees[2].multiplicity == 3);
    CHECK(c2.degrees[2].dimension == 3);

    // example: Delta(t) from a direct determinant in one variable
    Rng rng(23);
    for (int t = 0; t < 6; ++t) {
        auto v = fixtures::random_module(rng, {3});
        auto data = cokernel_data(cover_presentation(v), 2);
        // sigma(t) = I - s + s t, det at t = 2 and t = -1 against the normalised polynomial
        for (long x : {2L, -1L, 5L}) {
            QMatrix m = QMatrix::identity(3) - v.s + Rat(x) * v.s;
            Rat val = 0;
            for (const auto& [e, c] : data.delta) {
                Rat pw = 1;
                for (int k = 0; k < e[0]; ++k) pw *= x;
                val += c * pw;
            }
            Rat det = fixtures::leibniz_det(m);
            if (det == 0) CHECK(val == 0);
            else CHECK(val != 0);
        }
    }
    for (int t = 0; t < 6; ++t) {
        auto v = fixtures::random_primitive(rng, {2, 2});
        CHECK(cokernel_data(cover_presentation(v), 2).vanishes);
        auto w = fixtures::conjugate(v, fixtures::random_block_invertible(rng, {2, 2}));
        CHECK(cokernel_data(cover_presentation(v), 2) == cokernel_data(cover_presentation(w), 2));
    }
}
