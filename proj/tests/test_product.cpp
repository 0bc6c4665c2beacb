#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "zcl/product.hpp"
#include "zcl/structure_spec.hpp"

using namespace zcl;

namespace {

ClassVector x(const ProductRing& pr, unsigned u, unsigned slot) {
    return pr.inject(slot, pr.factor().cls("x" + std::to_string(u)));
}

}  // namespace

TEST_CASE("tensor cube of the Klein bottle ring") {
    const ProductRing pr(rp_sum_ring(2, 2), 3);
    CHECK(pr.dim() == 64);
    CHECK(pr.top_degree() == 6);
    CHECK(pr.poincare_polynomial() ==
          test::poly_pow(rp_sum_ring(2, 2).poincare_polynomial(), 3));
    std::uint64_t total = 0;
    for (unsigned d = 0; d <= pr.top_degree(); ++d) {
        CHECK(pr.component(d)->size() == pr.component_dim(d));
        total += pr.component(d)->size();
    }
    CHECK(total == 64);
}

TEST_CASE("slot-wise products") {
    const ProductRing pr(rp_sum_ring(2, 2), 2);
    const ClassVector left = x(pr, 1, 1);   // (x1, 1)
    const ClassVector right = x(pr, 1, 2);  // (1, x1)
    const ClassVector prod = pr.mul(left, right);
    REQUIRE(prod.terms().size() == 1);
    CHECK(pr.label_of(prod.terms()[0]) == "(x1,x1)");

    CHECK(pr.mul(x(pr, 1, 1), x(pr, 2, 1)).is_zero());  // x1 x2 = 0 in the slot
}

TEST_CASE("inject is degree-preserving and linear") {
    const ProductRing pr(rp_sum_ring(2, 3), 3);
    const ClassVector x12 = x(pr, 1, 2);
    CHECK(pr.label_of(x12.terms()[0]) == "(1,x1,1)");
    CHECK(pr.homogeneous_degree(x12) == 1u);

    CHECK(pr.inject(1, pr.factor().zero_class()).is_zero());

    const ClassVector t3 = pr.inject(3, pr.factor().cls("t"));
    CHECK(pr.homogeneous_degree(t3) == 3u);  // deg t = m

    CHECK_THROWS_AS(pr.inject(0, pr.factor().cls("t")), std::out_of_range);
    CHECK_THROWS_AS(pr.inject(4, pr.factor().cls("t")), std::out_of_range);
}

TEST_CASE("inject is a ring homomorphism on random classes") {
    const ProductRing pr(rp_sum_ring(2, 3), 3);
    const RingTable& factor = pr.factor();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Index> pick(0, factor.dim() - 1);
    std::uniform_int_distribution<unsigned> slot(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        ClassVector a = factor.zero_class(), b = factor.zero_class();
        a.toggle(pick(rng));
        a.toggle(pick(rng));
        b.toggle(pick(rng));
        const unsigned j = slot(rng);
        CHECK(pr.inject(j, factor.mul(a, b)) ==
              pr.mul(pr.inject(j, a), pr.inject(j, b)));
    }
}

TEST_CASE("distinct slots multiply without cancellation") {
    const ProductRing pr(rp_sum_ring(3, 4), 3);
    const RingTable& factor = pr.factor();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<Index> pick(1, factor.dim() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const Index a = pick(rng), b = pick(rng);
        const ClassVector prod =
            pr.mul(pr.inject(1, factor.basis_class(a)),
                   pr.inject(3, factor.basis_class(b)));
        std::vector<Index> digits(3, 0);
        digits[0] = a;
        digits[2] = b;
        REQUIRE(prod.terms().size() == 1);
        CHECK(prod.terms()[0] == pr.encode(digits));
    }
}

TEST_CASE("top class is (t,...,t) and any slot-wise chain of top powers") {
    const ProductRing pr(rp_sum_ring(2, 2), 3);
    const ClassVector top = pr.top_class();
    REQUIRE(top.terms().size() == 1);
    CHECK(pr.label_of(top.terms()[0]) == "(t,t,t)");
    CHECK(pr.homogeneous_degree(top) == 6u);

    // t_1 t_2 t_3 computed via products of injected top classes, u arbitrary
    // per slot because x_u^m = t.
    for (unsigned u1 = 1; u1 <= 2; ++u1)
        for (unsigned u2 = 1; u2 <= 2; ++u2)
            for (unsigned u3 = 1; u3 <= 2; ++u3) {
                ClassVector chain = pr.basis_class(0);
                const unsigned us[3] = {u1, u2, u3};
                for (unsigned j = 1; j <= 3; ++j)
                    for (unsigned rep = 0; rep < 2; ++rep)  // x_{u,j}^m with m=2
                        chain = pr.mul(chain, x(pr, us[j - 1], j));
                CHECK(chain == top);
            }
}

TEST_CASE("top class for the one-generator factor") {
    const ProductRing pr(rp_sum_ring(1, 2), 2);
    const ClassVector top = pr.top_class();
    CHECK(pr.label_of(top.terms()[0]) == "(t,t)");
    CHECK(pr.homogeneous_degree(top) == 4u);
}

TEST_CASE("top_class requires a one-dimensional factor top") {
    const RingTable wedge_like =
        ring_from_spec(parse_structure_spec("gen a 1\ngen b 1\n"));
    const ProductRing pr(wedge_like, 2);
    CHECK_THROWS_AS(pr.top_class(), std::invalid_argument);
}

TEST_CASE("everything above the top degree vanishes") {
    const ProductRing pr(rp_sum_ring(2, 2), 2);
    CHECK(pr.component_dim(5) == 0);
    CHECK(pr.component_dim(100) == 0);
    CHECK_THROWS_AS(pr.component(5), std::out_of_range);
    const ClassVector top = pr.top_class();
    CHECK(pr.mul(top, x(pr, 1, 1)).is_zero());
    CHECK(pr.mul(top, top).is_zero());
}

TEST_CASE("graded dimensions for a generic factor ring") {
    const RingTable torus = ring_from_spec(
        parse_structure_spec("gen a 1\ngen b 1\ngen ab 2\nmul a b = ab\n"));
    const auto base = torus.poincare_polynomial();
    const ProductRing pr(torus, 2);
    const auto expect = test::poly_pow(base, 2);
    for (unsigned d = 0; d <= pr.top_degree(); ++d) {
        CHECK(pr.component_dim(d) == expect[d]);
        CHECK(pr.component(d)->size() == expect[d]);
    }
}

TEST_CASE("encode/decode round trip") {
    const ProductRing pr(rp_sum_ring(3, 4), 4);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Index> pick(0, pr.dim() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Index t = pick(rng);
        std::vector<Index> digits(4);
        pr.decode(t, digits);
        CHECK(pr.encode(digits) == t);
    }
    // encoded order is lexicographic: the first component entry per degree
    // is the lexicographically smallest tuple
    const auto comp = pr.component(3);
    CHECK(std::is_sorted(comp->begin(), comp->end()));
}

TEST_CASE("s must be at least 2") {
    CHECK_THROWS_AS(ProductRing(rp_sum_ring(2, 2), 1), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
    const ProductRing pr(rp_sum_ring(2, 2), 2);
    const ProductRing other(rp_sum_ring(2, 2), 2);
    CHECK_THROWS_AS(pr.mul(other.basis_class(1), pr.basis_class(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pr.inject(1, other.basis_class(1)), std::invalid_argument);
}
