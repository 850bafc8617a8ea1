#include <doctest.h>

#include "fixtures.hpp"
#include "seifertwitt/errors.hpp"
#include "seifertwitt/factor.hpp"
#include "seifertwitt/linalg.hpp"
#include "seifertwitt/poly.hpp"
#include "seifertwitt/sturm.hpp"

using namespace sw;

TEST_CASE("rationals parse and print canonically") {
    CHECK(to_string(parse_rat("6/4")) == "3/2");
    CHECK(to_string(parse_rat("-10/5")) == "-2");
    CHECK(to_string(parse_rat("0/7")) == "0");
    CHECK(parse_rat("-3/9").get_den() == 3);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK(squarefree_part(Int(-72)) == -2);
    CHECK(squarefree_part(Int(1)) == 1);
}

TEST_CASE("solve_or_kernel examples") {
    auto r = solve_or_kernel(QMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.cols() == 1);
    CHECK(r.kernel(0, 0) == -r.kernel(1, 0));
    CHECK(!r.inverse);

    QMatrix b = QMatrix::from_rows({{1}, {2}, {3}});
    auto id = solve_or_kernel(QMatrix::identity(3), &b);
    REQUIRE(id.particular);
    CHECK(*id.particular == b);
    CHECK(id.kernel.cols() == 0);
    CHECK(*id.inverse == QMatrix::identity(3));

    CHECK(solve_or_kernel(fixtures::example_s()).rank == 5);
    CHECK(fixtures::bareiss_rank(fixtures::example_s()) == 5);

    QMatrix inconsistent = QMatrix::from_rows({{1}, {0}});
    auto bad = solve_or_kernel(QMatrix::from_rows({{1, 1}, {1, 1}}), &inconsistent);
    CHECK(!bad.consistent);
    CHECK_THROWS_AS(solve_or_kernel(QMatrix::identity(2), &b), ShapeError);
}

TEST_CASE("rank, determinant and inverse against independent oracles") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.range(0, 5), c = 1 + rng.range(0, 5);
        QMatrix m = fixtures::random_matrix(rng, r, c, -2, 2);
        if (t % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.row(0));
        CHECK(rank(m) == fixtures::bareiss_rank(m));
        QMatrix k = kernel(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() + rank(m) == c);
        QMatrix sq = fixtures::random_matrix(rng, r, r, -3, 3);
        CHECK(determinant(sq) == fixtures::leibniz_det(sq));
        if (determinant(sq) != 0) CHECK(sq * inverse(sq) == QMatrix::identity(r));
    }
}

TEST_CASE("minimal polynomial") {
    CHECK(minimal_polynomial(QMatrix::from_rows({{1, -1}, {1, 0}})) == QPoly::from_ints({1, -1, 1}));
    CHECK(minimal_polynomial(QMatrix::zero(3, 3)) == QPoly::x());
    QMatrix d = QMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    QPoly expect = QPoly::from_ints({-2, 1}) * QPoly::from_ints({-3, 1});
    CHECK(minimal_polynomial(d) == expect);

    // oracle: p(M) = 0 and no p / f annihilates M for an irreducible factor f
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.range(0, 5);
        QMatrix m = fixtures::random_matrix(rng, n, n, -1, 1);
        QPoly p = minimal_polynomial(m);
        CHECK(p(m).is_zero());
        for (const auto& [f, e] : factor(p).factors) {
            (void)e;
            CHECK(!(p / f)(m).is_zero());
        }
        CHECK((characteristic_polynomial(m) % p).is_zero());
    }
}

TEST_CASE("factorization examples") {
    auto f = factor(QPoly::from_ints({1, 0, 1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == QPoly::from_ints({1, -1, 1}));
    CHECK(f.factors[1].first == QPoly::from_ints({1, 1, 1}));
    CHECK(is_irreducible(QPoly::from_ints({1, -1, 1})));
    auto g = factor(QPoly::from_ints({-1, 0, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == QPoly::from_ints({-1, 1}));
    CHECK(g.factors[1].first == QPoly::from_ints({1, 1}));
    CHECK_THROWS(factor(QPoly()));

    // Swinnerton-Dyer polynomial: irreducible, splits into quadratics mod every prime
    CHECK(is_irreducible(QPoly::from_ints({1, 0, -10, 0, 1})));
    // x^8 - 1
    auto cyc = factor(QPoly::from_ints({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(cyc.factors.size() == 4);
    // non-monic with rational coefficients and repeated factors
    QPoly h = QPoly(std::vector<Rat>{Rat(1, 2), 3}) * QPoly::from_ints({2, 0, 3}) * QPoly::from_ints({2, 0, 3});
    auto fh = factor(h);
    CHECK(fh.unit == 27);
    REQUIRE(fh.factors.size() == 2);
    CHECK(fh.factors[1].second == 2);
}

namespace {

bool has_rational_root(const QPoly& p) {
    // rational root test on the integer-scaled polynomial
    Int den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> z;
    for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
    if (z[0] == 0) return true;
    auto divisors = [](Int n) {
        n = abs(n);
        std::vector<Int> d;
        for (Int k = 1; k * k <= n; ++k)
            if (n % k == 0) {
                d.push_back(k);
                d.push_back(n / k);
            }
        return d;
    };
    for (const auto& a : divisors(z[0]))
        for (const auto& b : divisors(z.back()))
            for (int s : {1, -1})
                if (p(Rat(a * s, b)) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("random factorizations multiply back and factors are irreducible") {
    Rng rng(2024);
    for (int t = 0; t < 25; ++t) {
        QPoly p = 1;
        int pieces = 1 + static_cast<int>(rng.range(0, 3));
        for (int k = 0; k < pieces; ++k) {
            int d = 1 + static_cast<int>(rng.range(0, 2));
            std::vector<Rat> c;
            for (int i = 0; i < d; ++i) c.emplace_back(rng.range(-4, 4));
            c.emplace_back(rng.range(1, 3));
            p = p * QPoly(c);
        }
        if (p.degree() > 8 || p.degree() < 1) continue;
        auto f = factor(p);
        QPoly back = f.unit;
        for (const auto& [g, e] : f.factors) {
            for (int i = 0; i < e; ++i) back = back * g;
            if (g.degree() >= 2) CHECK(!has_rational_root(g));
            auto again = factor(g);
            CHECK(again.factors.size() == 1);
        }
        CHECK(back == p);
    }
}

TEST_CASE("real root isolation") {
    CHECK(real_root_data(QPoly::from_ints({1, -1, 1})).count == 0);
    auto two = real_root_data(QPoly::from_ints({-2, 0, 1}));
    REQUIRE(two.count == 2);
    CHECK(two.intervals[0].hi <= 0);
    CHECK(two.intervals[1].lo >= 0);
    CHECK(real_root_data(QPoly::from_ints({0, -1, 0, 1})).count == 3);

    auto iv = refine(QPoly::from_ints({-2, 0, 1}), two.intervals[1], Rat(1, 1000));
    CHECK(iv.lo * iv.lo < 2);
    CHECK(iv.hi * iv.hi >= 2);
    CHECK(iv.hi - iv.lo <= Rat(1, 1000));
    // sign of x - 7/5 at sqrt(2)
    CHECK(sign_at_root(QPoly::from_ints({-2, 0, 1}), two.intervals[1], QPoly(std::vector<Rat>{Rat(-7, 5), 1})) == 1);
    CHECK(sign_at_root(QPoly::from_ints({-2, 0, 1}), two.intervals[0], QPoly::x()) == -1);
    CHECK_THROWS(sign_at_root(QPoly::from_ints({-2, 0, 1}), two.intervals[1], QPoly::from_ints({-2, 0, 1})));
}

TEST_CASE("Sturm counts agree with a numeric root-finding oracle") {
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        int d = 2 + static_cast<int>(rng.range(0, 4));
        std::vector<Rat> c;
        std::vector<double> cd;
        for (int i = 0; i < d; ++i) {
            long v = rng.range(-6, 6);
            c.emplace_back(v);
            cd.push_back(static_cast<double>(v));
        }
        c.emplace_back(1);
        cd.push_back(1.0);
        QPoly p(c);
        if (squarefree_part(p).degree() != p.degree()) continue;
        CHECK(real_root_data(p).count == fixtures::numeric_real_roots(cd));
        auto seq = sturm_sequence(p);
        auto data = real_root_data(p);
        for (const auto& iv : data.intervals)
            if (iv.lo != iv.hi) CHECK(count_roots(seq, iv.lo, iv.hi) == 1);
    }
}
