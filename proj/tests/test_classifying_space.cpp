#include <catch2/catch_amalgamated.hpp>

#include "strata/classifying_space.hpp"

using namespace strata;

TEST_CASE("postnikov level five splits into the expected factors") {
    CHECK(postnikov5(HoweSignature::parse("1|1")).str() == "point");
    CHECK(postnikov5(HoweSignature::parse("1,1|1,1")).str() == "K(Z,2)");
    CHECK(postnikov5(HoweSignature::parse("2|1")).str() == "K(Z,4)");
    CHECK(postnikov5(HoweSignature::parse("4|1")).str() == "K(Z,4)");
    CHECK(postnikov5(HoweSignature::parse("1|3")).str() == "K(Z_3,1)");
    CHECK(postnikov5(HoweSignature::parse("1|2")).str() == "K(Z_2,1)");
    CHECK(postnikov5(HoweSignature::parse("2,1|2,2")).str() ==
          "K(Z_2,1) x K(Z,2) x K(Z,4)");
    CHECK(postnikov5(HoweSignature::parse("3,2,1|1,1,1")).str() ==
          "K(Z,2)^2 x K(Z,4)^2");

    PostnikovDecomposition p = postnikov5(HoweSignature::parse("2,2|2,2"));
    CHECK(p.g == 2);
    CHECK(p.km_zg1_count == 1);
    CHECK(p.kz2_count == 1);
    CHECK(p.kz4_count == 2);
}

TEST_CASE("postnikov counts track the derived signature data") {
    for (const HoweSignature& j : enumerate_classes(6)) {
        SignatureDerived d = derived_data(j);
        PostnikovDecomposition p = postnikov5(j);
        CHECK(p.g == d.g);
        CHECK(p.km_zg1_count == (d.g > 1 ? 1 : 0));
        CHECK(p.kz2_count == j.r() - 1);
        CHECK(p.kz4_count == d.r_star);
        CHECK_FALSE(p.str().empty());
    }
}

TEST_CASE("integral presentation lists chern generators and one relation") {
    RingPresentation p = integral_ring(HoweSignature::parse("1,1|1,1"));
    CHECK(p.coefficient_ring == "Z");
    REQUIRE(p.generators.size() == 2);
    CHECK(p.generators[0] == RingGenerator{"x_{1,1}", 2});
    CHECK(p.generators[1] == RingGenerator{"x_{2,1}", 2});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.str() == "Z[x_{1,1}, x_{2,1}] / (x_{1,1} + x_{2,1})");

    RingPresentation q = integral_ring(HoweSignature::parse("2|1"));
    REQUIRE(q.generators.size() == 2);
    CHECK(q.generators[0] == RingGenerator{"x_{1,1}", 2});
    CHECK(q.generators[1] == RingGenerator{"x_{1,2}", 4});
    CHECK(q.str() == "Z[x_{1,1}, x_{1,2}] / (x_{1,1})");

    CHECK(integral_ring(HoweSignature::parse("1|3")).str() ==
          "Z[x_{1,1}] / (3 x_{1,1})");
    CHECK(integral_ring(HoweSignature::parse("3,1|1,2")).str() ==
          "Z[x_{1,1}, x_{1,2}, x_{1,3}, x_{2,1}] / (x_{1,1} + 2 x_{2,1})");

    for (const HoweSignature& j : enumerate_classes(5)) {
        RingPresentation r = integral_ring(j);
        Int total_k = 0;
        for (Int k : j.k) total_k += k;
        CHECK(r.generators.size() == static_cast<size_t>(total_k));
        for (const RingGenerator& gen : r.generators) {
            CHECK(gen.degree % 2 == 0);
            CHECK(gen.degree >= 2);
        }
        REQUIRE(r.relations.size() == 1);
        CHECK(r.relations[0].monomials.size() == static_cast<size_t>(j.r()));
    }
}

TEST_CASE("mod-g presentation adds the degree-1 generator") {
    RingPresentation p = modg_ring(HoweSignature::parse("1|2"));
    CHECK(p.coefficient_ring == "Z_2");
    REQUIRE(p.generators.size() == 2);
    CHECK(p.generators[0] == RingGenerator{"x", 1});
    CHECK(p.generators[1] == RingGenerator{"x_{1,1}", 2});
    CHECK(p.str() == "Z_2[x, x_{1,1}] / (x^2 - x_{1,1})");

    CHECK(modg_ring(HoweSignature::parse("1|3")).str() == "Z_3[x, x_{1,1}] / (x^2)");
    CHECK(modg_ring(HoweSignature::parse("1|4")).str() ==
          "Z_4[x, x_{1,1}] / (x^2 - 2 x_{1,1})");
    CHECK(modg_ring(HoweSignature::parse("1,1|2,2")).str() ==
          "Z_2[x, x_{1,1}, x_{2,1}] / (x^2 - x_{1,1} - x_{2,1})");
    CHECK(modg_ring(HoweSignature::parse("2,2|2,2")).str() ==
          "Z_2[x, x_{1,1}, x_{1,2}, x_{2,1}, x_{2,2}] / (x^2 - x_{1,1} - x_{2,1})");
    CHECK(modg_ring(HoweSignature::parse("1,1|3,3")).str() ==
          "Z_3[x, x_{1,1}, x_{2,1}] / (x^2)");
    CHECK(modg_ring(HoweSignature::parse("1|6")).str() ==
          "Z_6[x, x_{1,1}] / (x^2 - 3 x_{1,1})");
}

TEST_CASE("mod-g presentation collapses to the integral one when g is 1") {
    RingPresentation p = modg_ring(HoweSignature::parse("1,1|1,1"));
    CHECK(p.coefficient_ring == "Z");
    CHECK_FALSE(p.note.empty());
    RingPresentation q = integral_ring(HoweSignature::parse("1,1|1,1"));
    CHECK(p.generators == q.generators);
    CHECK(p.relations == q.relations);
}

TEST_CASE("mod-g relation coefficients are consistent with the modulus") {
    for (const HoweSignature& j : enumerate_classes(6)) {
        SignatureDerived d = derived_data(j);
        RingPresentation p = modg_ring(j);
        if (d.g == 1) {
            CHECK(p.coefficient_ring == "Z");
            continue;
        }
        CHECK(p.coefficient_ring == "Z_" + std::to_string(d.g));
        CHECK(p.generators[0].degree == 1);
        REQUIRE(p.relations.size() == 1);
        const RingRelation& rel = p.relations[0];
        REQUIRE_FALSE(rel.monomials.empty());
        CHECK(rel.monomials[0] == RingMonomial{1, {{0, 2}}});
        if (d.g % 2 != 0) {
            CHECK(rel.monomials.size() == 1);
        } else {
            Int l = d.g / 2;
            CHECK((2 * l) % d.g == 0);
            REQUIRE(rel.monomials.size() == static_cast<size_t>(1 + j.r()));
            for (int i = 0; i < j.r(); ++i)
                CHECK(rel.monomials[i + 1].coeff == -l * d.m_tilde[i]);
        }
    }
}

TEST_CASE("eilenberg-maclane cohomology tables") {
    EmSpace kz2 = em_kz2();
    CHECK(em_cohomology(kz2, 0) == FinAbGroup{1, {}});
    CHECK(em_cohomology(kz2, 1) == FinAbGroup{});
    CHECK(em_cohomology(kz2, 2) == FinAbGroup{1, {}});
    CHECK(em_cohomology(kz2, 7) == FinAbGroup{});
    CHECK(em_cohomology(kz2, 10) == FinAbGroup{1, {}});

    EmSpace k41 = em_kzg1(4);
    CHECK(em_cohomology(k41, 0) == FinAbGroup{1, {}});
    CHECK(em_cohomology(k41, 1) == FinAbGroup{});
    CHECK(em_cohomology(k41, 2) == FinAbGroup{0, {4}});
    CHECK(em_cohomology(k41, 5) == FinAbGroup{});
    CHECK(em_cohomology(k41, 6) == FinAbGroup{0, {4}});
    CHECK(em_cohomology(em_kzg1(2), 8) == FinAbGroup{0, {2}});

    CHECK_THROWS_AS(em_cohomology(kz2, -1), std::invalid_argument);
    CHECK_THROWS_AS(em_cohomology(em_kzg1(1), 2), std::invalid_argument);
    CHECK_THROWS_AS(em_cohomology(em_kzg1(0), 0), std::invalid_argument);
}
