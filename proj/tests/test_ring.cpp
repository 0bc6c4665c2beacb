#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "zcl/ring.hpp"
#include "zcl/structure_spec.hpp"

using namespace zcl;

TEST_CASE("g=2, m=2 gives the Klein bottle ring") {
    const RingTable r = rp_sum_ring(2, 2);
    REQUIRE(r.dim() == 4);
    CHECK(r.label_of(0) == "1");
    CHECK(r.label_of(1) == "x1");
    CHECK(r.label_of(2) == "x2");
    CHECK(r.label_of(3) == "t");
    CHECK(r.degree_of(0) == 0);
    CHECK(r.degree_of(1) == 1);
    CHECK(r.degree_of(2) == 1);
    CHECK(r.degree_of(3) == 2);
}

TEST_CASE("g=3, m=4 basis bookkeeping") {
    const RingTable r = rp_sum_ring(3, 4);
    CHECK(r.dim() == 11);  // 3*(4-1)+2
    // Independent count of the monomial basis {x_u^k}.
    std::set<std::pair<unsigned, unsigned>> monomials;
    for (unsigned u = 1; u <= 3; ++u)
        for (unsigned k = 1; k <= 3; ++k) monomials.insert({u, k});
    std::size_t deg2 = 0;
    for (const auto& [u, k] : monomials)
        if (k == 2) ++deg2;
    CHECK(r.component(2).size() == deg2);
    CHECK(deg2 == 3);
}

TEST_CASE("g=1 is the truncated polynomial ring of RP^m") {
    const RingTable r = rp_sum_ring(1, 5);
    // Independent presentation of GF(2)[x]/x^6.
    const char* text =
        "gen x 1\n"
        "gen x^2 2\n"
        "gen x^3 3\n"
        "gen x^4 4\n"
        "gen x^5 5\n"
        "mul x x = x^2\n"
        "mul x x^2 = x^3\n"
        "mul x x^3 = x^4\n"
        "mul x x^4 = x^5\n"
        "mul x^2 x^2 = x^4\n"
        "mul x^2 x^3 = x^5\n";
    const RingTable poly = ring_from_spec(parse_structure_spec(text));
    CHECK(canonically_isomorphic(r, poly));
}

TEST_CASE("family multiplication realizes the three relations") {
    const RingTable k22 = rp_sum_ring(2, 2);
    CHECK(k22.mul_basis(*k22.index_of_label("x1"), *k22.index_of_label("x2")).is_zero());
    CHECK(k22.mul_basis(*k22.index_of_label("t"), *k22.index_of_label("x1")).is_zero());

    const RingTable r23 = rp_sum_ring(2, 3);
    const auto prod =
        r23.mul_basis(*r23.index_of_label("x1^2"), *r23.index_of_label("x1"));
    CHECK(class_to_string(r23, prod) == "t");
    // x_u^(m-1) * x_u = t for every u
    CHECK(class_to_string(
              r23, r23.mul_basis(*r23.index_of_label("x2^2"),
                                 *r23.index_of_label("x2"))) == "t");
}

TEST_CASE("mul_basis rejects out-of-range indices") {
    const RingTable r = rp_sum_ring(2, 2);
    CHECK_THROWS_AS(r.mul_basis(0, 99), std::out_of_range);
}

TEST_CASE("class addition is symmetric difference") {
    const RingTable r = rp_sum_ring(2, 2);
    const ClassVector x1 = r.cls("x1"), x2 = r.cls("x2"), t = r.cls("t");
    CHECK(class_to_string(r, add(x1, x2)) == "x1+x2");
    CHECK(add(x1, x1).is_zero());
    CHECK(add(ClassVector::zero(), t) == t);
}

TEST_CASE("class addition rejects mixed rings") {
    const RingTable a = rp_sum_ring(2, 2);
    const RingTable b = rp_sum_ring(2, 2);
    CHECK_THROWS_AS(add(a.cls("x1"), b.cls("x1")), std::invalid_argument);
}

TEST_CASE("class multiplication, characteristic-2 cancellations") {
    const RingTable k22 = rp_sum_ring(2, 2);
    const ClassVector sum = add(k22.cls("x1"), k22.cls("x2"));
    CHECK(k22.mul(sum, sum).is_zero());  // x1^2 + x2^2 = t + t
    CHECK(class_to_string(k22, k22.mul(sum, k22.cls("x1"))) == "t");

    const RingTable r23 = rp_sum_ring(2, 3);
    const ClassVector sum3 = add(r23.cls("x1"), r23.cls("x2"));
    CHECK(class_to_string(r23, r23.mul(sum3, sum3)) == "x1^2+x2^2");
}

TEST_CASE("mixed-degree classes are allowed in the additive group") {
    const RingTable r = rp_sum_ring(2, 3);
    const ClassVector mixed = add(r.cls("x1"), r.cls("t"));
    CHECK(!r.homogeneous_degree(mixed).has_value());
    CHECK(r.homogeneous_degree(r.cls("x1")) == 1u);
    CHECK(r.homogeneous_degree(r.zero_class()) == 0u);
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(rp_sum_ring(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(rp_sum_ring(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(rp_sum_ring(1, 0), std::invalid_argument);
}

TEST_CASE("family invariants over the parameter grid") {
    for (unsigned g = 1; g <= 4; ++g)
        for (unsigned m = 2; m <= 6; ++m) {
            const RingTable r = rp_sum_ring(g, m);  // construction validates laws
            CHECK(r.dim() == g * (m - 1) + 2);
            const auto poincare = r.poincare_polynomial();
            REQUIRE(poincare.size() == m + 1);
            CHECK(poincare[0] == 1);
            CHECK(poincare[m] == 1);
            for (unsigned k = 1; k < m; ++k) CHECK(poincare[k] == g);
            CHECK(is_poincare_duality(r));

            const Index t = *r.index_of_label("t");
            for (unsigned u = 1; u <= g; ++u)
                for (unsigned v = 1; v <= g; ++v)
                    for (unsigned j = 1; j < m; ++j)
                        for (unsigned k = 1; k < m; ++k) {
                            const Index a = 1 + (j - 1) * g + (u - 1);
                            const Index b = 1 + (k - 1) * g + (v - 1);
                            const auto& prod = r.mul_basis(a, b);
                            if (u != v) {
                                CHECK(prod.is_zero());
                            } else if (j + k == m) {
                                CHECK(prod.terms() == std::vector<Index>{t});
                            }
                        }
        }
}

TEST_CASE("product of homogeneous classes is homogeneous of the degree sum") {
    const RingTable r = rp_sum_ring(3, 4);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned> dist_deg(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned d1 = dist_deg(rng), d2 = dist_deg(rng);
        auto pick = [&](unsigned d) {
            const auto comp = r.component(d);
            ClassVector c = r.zero_class();
            std::uniform_int_distribution<std::size_t> idx(0, comp.size() - 1);
            c.toggle(comp[idx(rng)]);
            c.toggle(comp[idx(rng)]);
            if (c.is_zero()) c.toggle(comp[0]);
            return c;
        };
        const ClassVector prod = r.mul(pick(d1), pick(d2));
        const auto deg = r.homogeneous_degree(prod);
        REQUIRE(deg.has_value());
        if (!prod.is_zero()) CHECK(*deg == d1 + d2);
    }
}

TEST_CASE("connected sum of two projective planes is the Klein bottle ring") {
    const RingTable klein = connected_sum(rp_sum_ring(1, 2), rp_sum_ring(1, 2));
    CHECK(canonically_isomorphic(klein, rp_sum_ring(2, 2)));
}

TEST_CASE("iterated connected sums rebuild the family") {
    for (unsigned m = 2; m <= 4; ++m)
        for (unsigned g = 2; g <= 3; ++g) {
            CHECK(canonically_isomorphic(
                connected_sum(rp_sum_ring(1, m), rp_sum_ring(g - 1, m)),
                rp_sum_ring(g, m)));
            RingTable acc = rp_sum_ring(1, m);
            for (unsigned i = 2; i <= g; ++i)
                acc = connected_sum(acc, rp_sum_ring(1, m));
            CHECK(canonically_isomorphic(acc, rp_sum_ring(g, m)));
        }
}

TEST_CASE("connected sum of two tori") {
    const char* torus_text =
        "gen a 1\n"
        "gen b 1\n"
        "gen ab 2\n"
        "mul a b = ab\n";
    const RingTable torus = ring_from_spec(parse_structure_spec(torus_text));
    REQUIRE(is_poincare_duality(torus));
    const RingTable genus2 = connected_sum(torus, torus);

    REQUIRE(genus2.dim() == 6);
    CHECK(genus2.label_of(0) == "1");
    CHECK(genus2.label_of(1) == "a1");
    CHECK(genus2.label_of(2) == "b1");
    CHECK(genus2.label_of(3) == "a2");
    CHECK(genus2.label_of(4) == "b2");
    CHECK(genus2.label_of(5) == "T");

    // Worked out by hand from the quotient description: a_i b_i = T, every
    // cross product and every square vanishes.
    CHECK(class_to_string(genus2, genus2.mul(genus2.cls("a1"), genus2.cls("b1"))) == "T");
    CHECK(class_to_string(genus2, genus2.mul(genus2.cls("a2"), genus2.cls("b2"))) == "T");
    CHECK(genus2.mul(genus2.cls("a1"), genus2.cls("a2")).is_zero());
    CHECK(genus2.mul(genus2.cls("a1"), genus2.cls("b2")).is_zero());
    CHECK(genus2.mul(genus2.cls("b1"), genus2.cls("a2")).is_zero());
    CHECK(genus2.mul(genus2.cls("a1"), genus2.cls("a1")).is_zero());
    CHECK(is_poincare_duality(genus2));
}

TEST_CASE("connected sum rejections") {
    CHECK_THROWS_WITH_AS(connected_sum(rp_sum_ring(1, 2), rp_sum_ring(1, 3)),
                         doctest::Contains("top-degree mismatch"),
                         std::invalid_argument);

    // Two degree-1 generators with no products: the top is 2-dimensional.
    const RingTable wedge_like =
        ring_from_spec(parse_structure_spec("gen a 1\ngen b 1\n"));
    CHECK_THROWS_WITH_AS(connected_sum(wedge_like, wedge_like),
                         doctest::Contains("not 1-dimensional"),
                         std::invalid_argument);

    // Unique top but a singular intersection pairing.
    const RingTable no_duality =
        ring_from_spec(parse_structure_spec("gen x 1\ngen y 2\n"));
    CHECK_THROWS_WITH_AS(connected_sum(no_duality, no_duality),
                         doctest::Contains("Poincare duality"),
                         std::invalid_argument);
}

TEST_CASE("canonical isomorphism distinguishes torus from Klein bottle") {
    const RingTable torus = ring_from_spec(
        parse_structure_spec("gen a 1\ngen b 1\ngen ab 2\nmul a b = ab\n"));
    CHECK(!canonically_isomorphic(torus, rp_sum_ring(2, 2)));
}
