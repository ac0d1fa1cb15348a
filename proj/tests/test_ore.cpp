#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"

using namespace testutil;

TEST_CASE("right gcd") {
    const auto& k = gf4();
    SECTION("frozen examples") {
        REQUIRE(rgcd(P(k, "t+1"), P(k, "t+w")) == Poly::one(k));
        REQUIRE(rgcd(P(k, "t^2+1"), P(k, "t+w")) == P(k, "t+w"));
        const Poly f = P(k, "w*t^2 + 1");
        REQUIRE(rgcd(f, Poly::zero(k)) == f.monic());
        REQUIRE_THROWS_AS(rgcd(Poly::zero(k), Poly::zero(k)), DomainError);
    }
    SECTION("Bezout identity d = u*a + v*b on random pairs") {
        Rng rng(7);
        for (const FinRing& ring : {gf4(), gf9()}) {
            for (int i = 0; i < 150; ++i) {
                const Poly a = rng.nonzero_poly(ring, 4);
                const Poly b = rng.nonzero_poly(ring, 4);
                const auto g = rgcd_extended(a, b);
                REQUIRE(g.d.is_monic());
                REQUIRE(g.u * a + g.v * b == g.d);
                REQUIRE(Poly::right_divides(g.d, a));
                REQUIRE(Poly::right_divides(g.d, b));
            }
        }
    }
}

TEST_CASE("least common left multiple") {
    const auto& k = gf4();
    SECTION("exhaustive oracle over the 16 monic quadratics") {
        std::vector<Poly> common;
        for (const Poly& m : enumerate_monic(k, 2))
            if (Poly::right_divides(P(k, "t+1"), m) && Poly::right_divides(P(k, "t+w"), m))
                common.push_back(m);
        REQUIRE(common == std::vector<Poly>{P(k, "t^2+1")});
        REQUIRE(llcm(P(k, "t+1"), P(k, "t+w")) == P(k, "t^2+1"));
    }
    SECTION("frozen examples") {
        const Poly f = P(k, "w*t^2 + w*t");
        REQUIRE(llcm(f, f) == f.monic());
        REQUIRE(llcm(P(k, "t+1"), P(k, "t^2+1")) == P(k, "t^2+1"));
    }
    SECTION("membership and degree law on random pairs") {
        Rng rng(8);
        for (const FinRing& ring : {gf4(), gf8()}) {
            for (int i = 0; i < 150; ++i) {
                const Poly a = rng.nonzero_poly(ring, 4);
                const Poly b = rng.nonzero_poly(ring, 4);
                const Poly m = llcm(a, b);
                REQUIRE(Poly::right_divides(a, m));
                REQUIRE(Poly::right_divides(b, m));
                REQUIRE(m.degree() == a.degree() + b.degree() - rgcd(a, b).degree());
            }
        }
    }
}

TEST_CASE("conjugation a^b") {
    const auto& k = gf4();
    SECTION("frozen examples") {
        REQUIRE(conj(P(k, "t+w"), P(k, "t+1")) == P(k, "t+1"));
        REQUIRE(conj(P(k, "t+1"), P(k, "t+w")) == P(k, "t+w^2"));
        const Poly a = P(k, "w*t^2+w");
        REQUIRE(conj(a, Poly::one(k)) == a.monic());
        REQUIRE(conj(P(k, "t+1"), P(k, "t+1")) == Poly::one(k));  // b in Ra collapses
    }
    SECTION("defining property llcm(a,b) = a^b * b up to a left unit") {
        Rng rng(9);
        for (int i = 0; i < 150; ++i) {
            const Poly a = rng.nonzero_poly(k, 4);
            const Poly b = rng.nonzero_poly(k, 4);
            REQUIRE((conj(a, b) * b).monic() == llcm(a, b));
        }
    }
}

TEST_CASE("right ideals: lgcd and rlcm") {
    const auto& k = gf4();
    SECTION("frozen example over GF(4)") {
        const auto gm = lgcd_rlcm(P(k, "t+1"), P(k, "t+w"));
        REQUIRE(gm.has_value());
        REQUIRE(gm->first == Poly::one(k));
        REQUIRE(gm->second.degree() == 2);
        // m lies in both right ideals.
        REQUIRE(Poly::left_divmod(gm->second, P(k, "t+1"))->remainder.is_zero());
        REQUIRE(Poly::left_divmod(gm->second, P(k, "t+w"))->remainder.is_zero());
    }
    SECTION("same argument") {
        const Poly f = P(k, "t^2 + w*t");
        const auto gm = lgcd_rlcm(f, f);
        REQUIRE(gm.has_value());
        REQUIRE(gm->first == gm->second);
        REQUIRE(Poly::left_divmod(f, gm->first)->remainder.is_zero());
    }
    SECTION("membership on random pairs") {
        Rng rng(10);
        for (int i = 0; i < 100; ++i) {
            const Poly a = rng.nonzero_poly(k, 3);
            const Poly b = rng.nonzero_poly(k, 3);
            const auto gm = lgcd_rlcm(a, b);
            REQUIRE(gm.has_value());
            REQUIRE(gm->second.degree() == a.degree() + b.degree() - gm->first.degree());
            REQUIRE(Poly::left_divmod(gm->second, a)->remainder.is_zero());
            REQUIRE(Poly::left_divmod(gm->second, b)->remainder.is_zero());
            REQUIRE(Poly::left_divmod(a, gm->first)->remainder.is_zero());
            REQUIRE(Poly::left_divmod(b, gm->first)->remainder.is_zero());
        }
    }
    SECTION("NotComputable on the rational function backend") {
        const auto& fk = fun2();
        REQUIRE_FALSE(lgcd_rlcm(FP(fk, "t"), FP(fk, "x*t")).has_value());
    }
}

TEST_CASE("atoms") {
    const auto& k = gf4();
    SECTION("frozen examples") {
        REQUIRE(is_atom(P(k, "t+w")));
        REQUIRE_FALSE(is_atom(P(k, "t^2+1")));
        REQUIRE(is_atom(P(k, "t^2+w")));
        REQUIRE_FALSE(is_atom(Poly::constant(k, E(k, "w"))));  // units are not atoms
        REQUIRE_THROWS_AS(is_atom(Poly::zero(k)), DomainError);
    }
    SECTION("all monic linear polynomials are atoms") {
        for (const FinRing& ring : {gf4(), gf8(), gf9()}) {
            const auto linear = enumerate_atoms(ring, 1);
            REQUIRE(linear.size() == ring->size());
        }
    }
    SECTION("classical irreducibles in the commutative case") {
        const auto atoms2 = enumerate_atoms(gf2(), 2);
        REQUIRE(atoms2.size() == 1);
        REQUIRE(atoms2[0] == P(gf2(), "t^2+t+1"));
    }
    SECTION("degree-2 atoms over GF(4) with the squaring twist") {
        const auto atoms = enumerate_atoms(k, 2);
        REQUIRE(std::count(atoms.begin(), atoms.end(), P(k, "t^2+w")) == 1);
        REQUIRE(std::count(atoms.begin(), atoms.end(), P(k, "t^2+1")) == 0);
        // Oracle: a monic quadratic is an atom iff no linear polynomial
        // right-divides it.
        for (const Poly& f : enumerate_monic(k, 2)) {
            bool has_linear = false;
            for (const Poly& g : enumerate_monic(k, 1))
                has_linear = has_linear || Poly::right_divides(g, f);
            REQUIRE(is_atom(f) == !has_linear);
        }
    }
}

TEST_CASE("atomic factorization") {
    const auto& k = gf4();
    SECTION("frozen examples") {
        const auto f = factor_atomic(P(k, "t^2+1"));
        REQUIRE(f.unit == k->one());
        REQUIRE(f.atoms == std::vector<Poly>{P(k, "t+1"), P(k, "t+1")});

        const auto u = factor_atomic(Poly::constant(k, E(k, "w")));
        REQUIRE(u.unit == E(k, "w"));
        REQUIRE(u.atoms.empty());

        const auto a = factor_atomic(P(k, "t^2+w"));
        REQUIRE(a.atoms == std::vector<Poly>{P(k, "t^2+w")});
    }
    SECTION("reassembly, atomicity and determinism on random inputs") {
        Rng rng(13);
        for (const FinRing& ring : {gf4(), gf9()}) {
            for (int i = 0; i < 60; ++i) {
                const Poly f = rng.nonzero_poly(ring, 4);
                const auto fac = factor_atomic(f);
                REQUIRE(fac.reassemble(ring) == f);
                for (const Poly& q : fac.atoms) {
                    REQUIRE(q.is_monic());
                    REQUIRE(is_atom(q));
                }
                REQUIRE(factor_atomic(f).atoms == fac.atoms);
            }
        }
    }
}

TEST_CASE("length") {
    const auto& k = gf4();
    REQUIRE(length(P(k, "t^2+1")) == 2);
    REQUIRE(length(Poly::constant(k, E(k, "w^2"))) == 0);
    REQUIRE(length(P(k, "t^2+w")) == 1);
    REQUIRE_THROWS_AS(length(Poly::zero(k)), DomainError);
}

TEST_CASE("length laws") {
    Rng rng(14);
    SECTION("additivity over products (every factorization has the same size)") {
        for (const FinRing& ring : {gf4(), gf8()}) {
            for (int i = 0; i < 100; ++i) {
                const Poly b = rng.nonzero_poly(ring, 3);
                const Poly c = rng.nonzero_poly(ring, 3);
                REQUIRE(length(b * c) == length(b) + length(c));
            }
        }
    }
    SECTION("gcd/lcm length formula") {
        for (const FinRing& ring : {gf4(), gf8()}) {
            for (int i = 0; i < 100; ++i) {
                const Poly a = rng.nonzero_poly(ring, 4);
                const Poly b = rng.nonzero_poly(ring, 4);
                REQUIRE(length(llcm(a, b)) + length(rgcd(a, b)) == length(a) + length(b));
            }
        }
    }
    SECTION("conjugation shortens or preserves length") {
        const auto& k = gf4();
        for (int i = 0; i < 150; ++i) {
            const Poly a = rng.nonzero_poly(k, 3, 1);
            const Poly b = rng.nonzero_poly(k, 3, 1);
            REQUIRE(length(conj(a, b)) <= length(a));
        }
    }
}

TEST_CASE("conjugation composes along products") {
    const auto& k = gf4();
    Rng rng(15);
    SECTION("R a^(cb) = R (a^b)^c") {
        for (int i = 0; i < 200; ++i) {
            const Poly a = rng.nonzero_poly(k, 3);
            const Poly b = rng.nonzero_poly(k, 2);
            const Poly c = rng.nonzero_poly(k, 2);
            REQUIRE(conj(a, c * b) == conj(conj(a, b), c));
        }
    }
    SECTION("R [a,b]^c = R [a^c, b^c]") {
        for (int i = 0; i < 200; ++i) {
            const Poly a = rng.nonzero_poly(k, 3);
            const Poly b = rng.nonzero_poly(k, 3);
            const Poly c = rng.nonzero_poly(k, 2);
            const Poly lhs = conj(llcm(a, b), c);
            const Poly ac = conj(a, c), bc = conj(b, c);
            const Poly rhs = llcm(ac, bc);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("product formula: ab in Rp, b not in Rp implies a in R p^b") {
    const auto& k = gf4();
    Rng rng(16);
    int hits = 0;
    for (int i = 0; i < 400; ++i) {
        const Poly a = rng.nonzero_poly(k, 2, 1);
        const Poly b = rng.nonzero_poly(k, 2, 1);
        const Poly p = rng.atom(k, 2);
        if (!Poly::right_divides(p, a * b) || Poly::right_divides(p, b)) continue;
        ++hits;
        REQUIRE(Poly::right_divides(conj(p, b), a));
    }
    REQUIRE(hits > 20);  // the filter must fire often enough to mean something
}
