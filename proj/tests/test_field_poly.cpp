#include "doctest.h"

#include <random>

#include "grmod/errors.hpp"
#include "grmod/parse.hpp"

using namespace grmod;

namespace {

Ring ring_xy() { return Ring(PrimeField(32003), {"x", "y"}); }
Ring ring_xyz() { return Ring(PrimeField(32003), {"x", "y", "z"}); }

Polynomial P(const Ring& R, const std::string& s) { return parse_polynomial(s, R); }

}  // namespace

TEST_CASE("field axioms on a random sweep") {
    PrimeField K(32003);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t a = static_cast<std::uint32_t>(rng() % 32002) + 1;  // nonzero
        CHECK(K.mul(a, K.inv(a)) == 1);
        std::uint32_t b = static_cast<std::uint32_t>(rng() % 32003);
        CHECK(K.add(a, b) == K.add(b, a));
        CHECK(K.sub(K.add(a, b), b) == a);
        CHECK(K.mul(a, K.add(b, 1)) == K.add(K.mul(a, b), a));
    }
    CHECK(K.characteristic() == 32003);
    CHECK_THROWS_AS(PrimeField(32004), std::invalid_argument);
}

TEST_CASE("degrevlex order on explicit pairs") {
    // x^2 vs x*y: smaller exponent in the last differing variable wins
    Monomial x2 = Monomial::of({2, 0});
    Monomial xy = Monomial::of({1, 1});
    CHECK(degrevlex_cmp(x2, xy) > 0);
    CHECK(degrevlex_cmp(xy, x2) < 0);
    CHECK(degrevlex_cmp(x2, x2) == 0);

    // in K[x,y,z]: y^2 > x*z
    Monomial xz = Monomial::of({1, 0, 1});
    Monomial y2 = Monomial::of({0, 2, 0});
    CHECK(degrevlex_cmp(y2, xz) > 0);
}

TEST_CASE("degrevlex is a total order (exhaustive, degree <= 3 in 3 variables)") {
    std::vector<Monomial> all;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b + a <= 3; ++b)
            for (int c = 0; c + b + a <= 3; ++c)
                all.push_back(Monomial::of({a, b, c}));

    // matches a reference comparator written independently: sort key
    // (deg, -exp_z, -exp_y) ... realized by comparing reversed exponent
    // vectors elementwise from the back with flipped sign
    auto reference = [](const Monomial& m, const Monomial& n) {
        if (m.deg != n.deg)
            return m.deg < n.deg ? -1 : 1;
        for (int i = 2; i >= 0; --i)
            if (m.exps[static_cast<std::size_t>(i)] != n.exps[static_cast<std::size_t>(i)])
                return m.exps[static_cast<std::size_t>(i)] > n.exps[static_cast<std::size_t>(i)] ? -1 : 1;
        return 0;
    };

    for (const Monomial& m : all)
        for (const Monomial& n : all) {
            int c = degrevlex_cmp(m, n);
            CHECK(c == reference(m, n));
            CHECK(c == -degrevlex_cmp(n, m));  // antisymmetry
            for (const Monomial& k : all) {
                // transitivity
                if (degrevlex_cmp(m, n) > 0 && degrevlex_cmp(n, k) > 0)
                    CHECK(degrevlex_cmp(m, k) > 0);
            }
        }
}

TEST_CASE("polynomial arithmetic") {
    Ring R = ring_xy();
    const PrimeField& K = R.field();

    CHECK(poly_add(K, P(R, "x + y"), P(R, "-x")) == P(R, "y"));
    CHECK(poly_mul(K, P(R, "x + y"), P(R, "x - y")) == P(R, "x^2 - y^2"));

    Ring R5(PrimeField(5), {"x", "y"});
    CHECK(poly_mul(R5.field(), P(R5, "3*x"), P(R5, "4*x")) == P(R5, "2*x^2"));

    CHECK(poly_sub(K, P(R, "x"), P(R, "x")).is_zero());
    CHECK(P(R, "x*y + x^2").is_homogeneous());
    CHECK(!P(R, "x + x^2").is_homogeneous());
    CHECK(*P(R, "x^2*y").degree() == 3);
    CHECK(!Polynomial::zero().degree().has_value());

    // homogeneity preserved by products of homogeneous inputs
    Polynomial prod = poly_mul(K, P(R, "x + y"), P(R, "x^2 - x*y"));
    CHECK(prod.is_homogeneous());
}

TEST_CASE("parser basics and errors") {
    Ring R = ring_xy();

    Polynomial f = P(R, "x*y - y^2");
    CHECK(f.terms().size() == 2);
    CHECK(f.is_homogeneous());
    CHECK(*f.degree() == 2);

    CHECK(P(R, "x + x") == P(R, "2*x"));
    CHECK(P(R, "  x  *  y ") == P(R, "x*y"));
    CHECK(P(R, "32003*x").is_zero());

    CHECK_THROWS_AS(P(R, "q^2"), parse_error);
    CHECK_THROWS_AS(P(R, ""), parse_error);
    CHECK_THROWS_AS(P(R, "x +"), parse_error);
    CHECK_THROWS_AS(P(R, "x^"), parse_error);

    try {
        parse_polynomial("x + q^2", R, 7);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 7);
        CHECK(e.column() == 4);
    }
}

TEST_CASE("parser round-trips printed polynomials") {
    Ring R = ring_xyz();
    std::vector<std::string> corpus = {
        "x*z - y^2", "x^2 + 2*x*y + y^2", "3*x^3 - 5*y^2*z + 7*z^3", "x", "-x + y",
        "16002*x^2 - 16001*y*z", "z^3", "x*y*z", "31*x^2*y - y^3 + 11*z^3",
    };
    for (const std::string& s : corpus) {
        Polynomial f = P(R, s);
        CHECK(P(R, print_polynomial(R, f)) == f);
    }
    CHECK(print_polynomial(R, Polynomial::zero()) == "0");
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(Ring(PrimeField(32003), {}), std::invalid_argument);
    CHECK_THROWS_AS(Ring(PrimeField(32003), {"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Ring(PrimeField(32003), {""}), std::invalid_argument);
    CHECK_THROWS_AS(Ring(PrimeField(2), {"x", "y", "z"}), std::invalid_argument);
}
