#include <doctest.h>

#include <random>

#include "frieze/eta.hpp"
#include "oracles.hpp"

using namespace frieze;

namespace {

RingElement Z(long v) { return RingElement::integer(v); }
RingElement G(long re, long im) { return RingElement::gaussian(re, im); }

Matrix2 mat(long a, long b, long c, long d) {
    return Matrix2(Z(a), Z(b), Z(c), Z(d));
}

std::vector<Domain> all_domains() {
    return {Domain::integers(), Domain::rationals(), Domain::gaussian_integers(),
            Domain::modular(2), Domain::modular(7)};
}

RingElement random_element(const Domain& dom, std::mt19937_64& eng) {
    std::uniform_int_distribution<long> small(-50, 50);
    switch (dom.kind()) {
        case DomainKind::Integer: return Z(small(eng));
        case DomainKind::Rational: {
            std::uniform_int_distribution<long> den(1, 20);
            return RingElement::rational(small(eng), den(eng));
        }
        case DomainKind::GaussianInteger: return G(small(eng), small(eng));
        case DomainKind::Modular: return RingElement::from_int(dom, small(eng));
    }
    return Z(0);
}

} // namespace

TEST_CASE("eta produces [[c,-1],[1,0]] with det 1") {
    CHECK(eta(Z(0)) == mat(0, -1, 1, 0));
    CHECK(eta(Z(2)) == mat(2, -1, 1, 0));
    Matrix2 gi = eta(G(0, 2));
    CHECK(gi.a11() == G(0, 2));
    CHECK(gi.a12() == G(-1, 0));
    CHECK(gi.a21() == G(1, 0));
    CHECK(gi.a22() == G(0, 0));
    std::mt19937_64 eng(3);
    for (const auto& dom : all_domains())
        for (int t = 0; t < 25; ++t)
            CHECK(eta(random_element(dom, eng)).det() == RingElement::one(dom));
}

TEST_CASE("matrix products: worked values and multiplicative det") {
    Matrix2 e1 = eta(Z(1));
    CHECK(e1 * e1 * e1 == -Matrix2::identity(Domain::integers()));
    CHECK(eta(Z(0)) * eta(Z(0)) == -Matrix2::identity(Domain::integers()));
    CHECK(eta(Z(2)) * eta(Z(0)) * eta(Z(3)) == -eta(Z(5)));

    std::mt19937_64 eng(5);
    for (const auto& dom : all_domains()) {
        for (int t = 0; t < 25; ++t) {
            Matrix2 a = eta(random_element(dom, eng)) * eta(random_element(dom, eng));
            Matrix2 b = eta(random_element(dom, eng));
            CHECK((a * b).det() == a.det() * b.det());
        }
    }
    CHECK_THROWS_AS(eta(Z(1)) * eta(G(1, 0)), DomainError);
}

TEST_CASE("identity A: eta(a+b) = -eta(a) eta(0) eta(b) in every domain") {
    std::mt19937_64 eng(7);
    for (const auto& dom : all_domains()) {
        RingElement zero = RingElement::zero(dom);
        for (int t = 0; t < 50; ++t) {
            RingElement a = random_element(dom, eng);
            RingElement b = random_element(dom, eng);
            CHECK(eta(a + b) == -(eta(a) * eta(zero) * eta(b)));
        }
    }
}

TEST_CASE("identity B: eta(0)^2 = -Id in every domain") {
    for (const auto& dom : all_domains()) {
        RingElement zero = RingElement::zero(dom);
        CHECK(eta(zero) * eta(zero) == -Matrix2::identity(dom));
    }
}

TEST_CASE("eta_inv is the adjugate and inverts eta") {
    CHECK(eta_inv(Z(0)) == mat(0, 1, -1, 0));
    Matrix2 gi = eta_inv(G(0, 1));
    CHECK(gi.a11() == G(0, 0));
    CHECK(gi.a12() == G(1, 0));
    CHECK(gi.a21() == G(-1, 0));
    CHECK(gi.a22() == G(0, 1));
    CHECK(eta(G(0, 1)) * gi == Matrix2::identity(Domain::gaussian_integers()));

    std::mt19937_64 eng(9);
    for (const auto& dom : all_domains()) {
        Matrix2 id = Matrix2::identity(dom);
        for (int t = 0; t < 25; ++t) {
            RingElement c = random_element(dom, eng);
            CHECK(eta(c) * eta_inv(c) == id);
            CHECK(eta_inv(c) * eta(c) == id);
            CHECK(eta_inv(c) == eta(c).adjugate());
        }
    }
}

TEST_CASE("scalar_id_sign decides closure, with the Z/2 convention") {
    Domain z = Domain::integers();
    CHECK(scalar_id_sign(-Matrix2::identity(z)) == -1);
    CHECK(scalar_id_sign(Matrix2::identity(z)) == +1);
    CHECK(!scalar_id_sign(eta(Z(1))).has_value());
    CHECK(!scalar_id_sign(mat(1, 0, 0, -1)).has_value());
    CHECK(!scalar_id_sign(mat(2, 0, 0, 2)).has_value());

    Domain z2 = Domain::modular(2);
    CHECK(scalar_id_sign(Matrix2::identity(z2)) == +1);
    CHECK(scalar_id_sign(-Matrix2::identity(z2)) == +1);
}

TEST_CASE("closed-form powers of eta(2) and eta(-2)") {
    CHECK(eta_power_closed(+2, 1) == eta(Z(2)));
    CHECK(eta_power_closed(+2, 3) == mat(4, -3, 3, -2));
    CHECK(eta_power_closed(-2, 2) == mat(3, 2, -2, -1));
    CHECK(eta_power_closed(-2, 1) == eta(Z(-2)));

    for (int base : {+2, -2}) {
        Matrix2 iter = eta(Z(base));
        for (unsigned long l = 1; l <= 50; ++l) {
            CHECK(eta_power_closed(base, l) == iter);
            iter = iter * eta(Z(base));
        }
    }

    // same closed form over Z[i] and Z/5
    Domain gi = Domain::gaussian_integers();
    Matrix2 iter = eta(RingElement::from_int(gi, 2));
    for (unsigned long l = 1; l <= 12; ++l) {
        CHECK(eta_power_closed(+2, l, gi) == iter);
        iter = iter * eta(RingElement::from_int(gi, 2));
    }
    Domain z5 = Domain::modular(5);
    Matrix2 iter5 = eta(RingElement::from_int(z5, -2));
    for (unsigned long l = 1; l <= 12; ++l) {
        CHECK(eta_power_closed(-2, l, z5) == iter5);
        iter5 = iter5 * eta(RingElement::from_int(z5, -2));
    }

    CHECK_THROWS_AS(eta_power_closed(3, 1), RangeError);
    CHECK_THROWS_AS(eta_power_closed(+2, 0), RangeError);
}

TEST_CASE("oracle agreement: Matrix2 products match the standalone 2x2 route") {
    std::mt19937_64 eng(21);
    for (const auto& dom : all_domains()) {
        for (int t = 0; t < 20; ++t) {
            std::vector<RingElement> run;
            for (int p = 0; p < 5; ++p) run.push_back(random_element(dom, eng));
            Matrix2 lib = eta_product(run);
            oracle::Mat ora = oracle::oeta_run(run, 0, run.size());
            CHECK(lib.a11() == ora.a);
            CHECK(lib.a12() == ora.b);
            CHECK(lib.a21() == ora.c);
            CHECK(lib.a22() == ora.d);
        }
    }
}

TEST_CASE("debug printing") {
    CHECK(eta(Z(2)).str() == "[[2,-1],[1,0]]");
    CHECK(eta(G(0, 2)).str() == "[[2i,-1],[1,0]]");
}
