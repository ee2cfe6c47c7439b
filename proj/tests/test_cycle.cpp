#include <doctest.h>

#include "frieze/cycle.hpp"
#include "oracles.hpp"

using namespace frieze;

namespace {

RingElement Z(long v) { return RingElement::integer(v); }

std::vector<RingElement> ints(const std::vector<long>& vs) {
    std::vector<RingElement> out;
    for (long v : vs) out.push_back(Z(v));
    return out;
}

QuiddityCycle zcycle(const std::vector<long>& vs) { return QuiddityCycle(ints(vs)); }

} // namespace

TEST_CASE("verify_cycle on the worked fixtures") {
    CHECK(verify_cycle(ints({0, 0})) == -1);
    CHECK(verify_cycle(ints({-1, -1, -1})) == +1);
    CHECK(verify_cycle(ints({5, 0, -5, 0})) == +1);
    CHECK(verify_cycle(ints({1, 1, 1})) == -1);
    CHECK(verify_cycle(ints({1, 2, 1, 2})) == -1);
    CHECK(!verify_cycle(ints({1, 2})).has_value());
    CHECK(!verify_cycle(ints({1, 1})).has_value());
    CHECK_THROWS_AS(verify_cycle(ints({3})), LengthError);
    CHECK_THROWS_AS(verify_cycle({Z(1), RingElement::gaussian(1, 0)}), DomainError);
}

TEST_CASE("verify_cycle agrees with the standalone sign oracle") {
    oracle::CycleBuilder builder(101);
    for (int t = 0; t < 50; ++t) {
        QuiddityCycle c = builder.random_glued(Domain::integers(), 2 + builder.pick(2));
        CHECK(oracle::cycle_sign(c.entries()) == c.lambda());
    }
}

TEST_CASE("cycle construction verifies and rejects") {
    QuiddityCycle c = zcycle({2, 0, -3, -1, -1});
    CHECK(c.lambda() == -1);
    CHECK(c.length() == 5);
    CHECK(c.str() == "2,0,-3,-1,-1");
    CHECK_THROWS_AS(QuiddityCycle(ints({1, 2})), NotACycleError);
    CHECK_THROWS_AS(QuiddityCycle(ints({0})), LengthError);
}

TEST_CASE("rationals host the (t, 2/t, t, 2/t) family") {
    Domain q = Domain::rationals();
    const std::pair<const char*, const char*> pairs[] = {
        {"1", "2"}, {"2", "1"}, {"3", "2/3"}, {"1/2", "4"}};
    for (const auto& [t, two_over_t] : pairs) {
        RingElement tv = RingElement::make(q, t);
        RingElement uv = RingElement::make(q, two_over_t);
        CHECK(tv * uv == RingElement::from_int(q, 2));
        auto lambda = verify_cycle({tv, uv, tv, uv});
        REQUIRE(lambda.has_value());
        CHECK(*lambda == -1);
    }
}

TEST_CASE("dihedral action: group laws and index maps") {
    const size_t m = 6;
    CHECK(dihedral_elements(m).size() == 2 * m);
    oracle::CycleBuilder builder(55);
    std::vector<RingElement> entries = ints({0, 1, 2, 3, 4, 5});
    auto permute = [&](const DihedralElement& s) {
        std::vector<RingElement> out;
        for (size_t j = 0; j < m; ++j) out.push_back(entries[s.source_index(j, m)]);
        return out;
    };
    for (const auto& s1 : dihedral_elements(m)) {
        for (const auto& s2 : dihedral_elements(m)) {
            // applying s1 then s2 equals applying s1.then(s2)
            std::vector<RingElement> two_steps;
            std::vector<RingElement> first = permute(s1);
            for (size_t j = 0; j < m; ++j) two_steps.push_back(first[s2.source_index(j, m)]);
            CHECK(two_steps == permute(s1.then(s2, m)));
        }
        CHECK(s1.then(s1.inverse(m), m) == DihedralElement::identity());
        CHECK(s1.inverse(m).then(s1, m) == DihedralElement::identity());
    }
}

TEST_CASE("apply_dihedral preserves lambda, exhaustively for m <= 8") {
    QuiddityCycle c = zcycle({2, 1, 2, 1});
    CHECK(apply_dihedral(c, DihedralElement::identity()) == c);
    QuiddityCycle rotated = apply_dihedral(c, DihedralElement::rotate(1));
    CHECK(rotated.entries() == ints({1, 2, 1, 2}));
    CHECK(rotated.lambda() == -1);

    QuiddityCycle a = zcycle({5, 0, -5, 0});
    QuiddityCycle reversed = apply_dihedral(a, DihedralElement{0, true});
    CHECK(reversed.entries() == ints({0, -5, 0, 5}));
    CHECK(reversed.lambda() == +1);

    oracle::CycleBuilder builder(77);
    for (int t = 0; t < 25; ++t) {
        QuiddityCycle c2 = builder.random_glued(Domain::integers(), 2);
        if (c2.length() > 8) continue;
        for (const auto& sigma : dihedral_elements(c2.length()))
            CHECK(apply_dihedral(c2, sigma).lambda() == c2.lambda());
    }
    CHECK_THROWS_AS(apply_dihedral(c, DihedralElement::rotate(4)), RangeError);
}

TEST_CASE("cycle_sum: worked values") {
    QuiddityCycle fig = cycle_sum(zcycle({3, 0, -3, 0}), zcycle({-1, -1, -1}));
    CHECK(fig.entries() == ints({2, 0, -3, -1, -1}));
    CHECK(fig.lambda() == -1);

    QuiddityCycle three = cycle_sum(zcycle({1, 1, 1}), zcycle({1, 1, 1}));
    CHECK(three.entries() == ints({2, 1, 2, 1}));
    CHECK(three.lambda() == -1);

    CHECK_THROWS_AS(cycle_sum(zcycle({1, 1, 1}), QuiddityCycle({RingElement::gaussian(0, 0),
                                                                RingElement::gaussian(0, 0)})),
                    DomainError);
}

TEST_CASE("(0,0) is neutral for the sum") {
    oracle::CycleBuilder builder(31);
    QuiddityCycle zz = zcycle({0, 0});
    for (int t = 0; t < 40; ++t) {
        QuiddityCycle c = builder.random_glued(Domain::integers(), 1 + builder.pick(3));
        QuiddityCycle s = cycle_sum(c, zz);
        CHECK(s == c);
    }
}

TEST_CASE("sum laws on random pairs") {
    for (const auto& dom : {Domain::integers(), Domain::gaussian_integers()}) {
        oracle::CycleBuilder builder(dom.kind() == DomainKind::Integer ? 41 : 43);
        for (int t = 0; t < 100; ++t) {
            QuiddityCycle a = builder.random_glued(dom, 1 + builder.pick(2));
            QuiddityCycle b = builder.random_glued(dom, 1 + builder.pick(2));
            QuiddityCycle s = cycle_sum(a, b);
            CHECK(s.lambda() == -a.lambda() * b.lambda());
            CHECK(s.length() == a.length() + b.length() - 2);
        }
    }
}

TEST_CASE("zero_contract removes a zero and flips lambda") {
    QuiddityCycle c = zcycle({4, 0, -4, 0});
    QuiddityCycle contracted = zero_contract(c, 1);
    CHECK(contracted.entries() == ints({0, 0}));
    CHECK(contracted.lambda() == -1);
    // the other zero works too
    CHECK(zero_contract(c, 3).entries() == ints({0, 0}));

    QuiddityCycle fig = zcycle({2, 0, -3, -1, -1});
    QuiddityCycle back = zero_contract(fig, 1);
    CHECK(back.entries() == ints({-1, -1, -1}));
    CHECK(back.lambda() == +1);

    CHECK_THROWS_AS(zero_contract(fig, 0), NotZeroError);
    CHECK_THROWS_AS(zero_contract(fig, 9), RangeError);
    CHECK_THROWS_AS(zero_contract(zcycle({0, 0}), 0), LengthError);
}

TEST_CASE("zero_contract inverts gluing with (a,0,-a,0)") {
    oracle::CycleBuilder builder(59);
    for (int t = 0; t < 25; ++t) {
        QuiddityCycle c = builder.random_glued(Domain::integers(), 1 + builder.pick(2));
        QuiddityCycle widget = zcycle({6, 0, -6, 0});
        QuiddityCycle glued = cycle_sum(widget, c);
        // glued = (6 + c_m, 0, -6, 0 + c_1, c_2, ...); position 1 holds the 0
        QuiddityCycle back = zero_contract(glued, 1);
        CHECK(back.lambda() == -glued.lambda());
        CHECK(back.length() == glued.length() - 2);
    }
}

TEST_CASE("canonical orbit form is the lexicographic minimum") {
    CHECK(canonical_entries(ints({2, 0, -2, 0})) == ints({-2, 0, 2, 0}));
    CHECK(canonical_entries(ints({1, 2, 1, 2})) == ints({1, 2, 1, 2}));
    CHECK(canonical_entries(ints({2, 1, 2, 1})) == ints({1, 2, 1, 2}));
    CHECK(canonical_entries(ints({0, 0, 0, 0})) == ints({0, 0, 0, 0}));
    CHECK(canonical_form(zcycle({2, 0, -3, -1, -1})).str() == "-3,-1,-1,2,0");

    // canonical form is invariant across the orbit and is a member of it
    oracle::CycleBuilder builder(61);
    for (int t = 0; t < 30; ++t) {
        QuiddityCycle c = builder.random_glued(Domain::integers(), 2);
        auto canon = canonical_entries(c.entries());
        for (const auto& sigma : dihedral_elements(c.length()))
            CHECK(canonical_entries(apply_dihedral(c, sigma).entries()) == canon);
    }
}

TEST_CASE("orbit sizes divide 2m") {
    CHECK(orbit_size(ints({0, 0, 0, 0})) == 1);
    CHECK(orbit_size(ints({1, 2, 1, 2})) == 2);
    CHECK(orbit_size(ints({2, 0, -3, -1, -1})) == 10);
    CHECK(orbit_size(ints({5, 0, -5, 0})) == 4);
}
