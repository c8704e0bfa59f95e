#include <doctest.h>

#include "kron/reduced_kronecker.hpp"
#include "kron/stability_bounds.hpp"
#include "random_partitions.hpp"

using namespace kron;

TEST_CASE("closed forms")
{
    CHECK(stab_product({2}, {2}) == 8);
    CHECK(stab_product({}, {}) == 0);
    CHECK(max_gamma1({3, 1}, {2, 2}) == 6);
    CHECK(weight_range({3, 1}, {2, 2}) == std::pair{1, 8});
    CHECK(row_bound({2}, {4, 3, 2}, 1) == 6);
    CHECK(row_bound({2}, {4, 3, 2}, 2) == 5);
    CHECK(row_bound({2}, {4, 3, 2}, 5) == 2);
    CHECK_THROWS(row_bound({2}, {2}, 0));
    CHECK(first_valid_degree({3, 2}, {1}, {}) == 8);
}

TEST_CASE("bound values on fixed triples")
{
    CHECK(bound_NB({2, 1}, {3, 1}, {3, 1}) == 10);
    CHECK(bound_N2({2, 1}, {3, 1}, {3, 1}) == 9);
    CHECK(bound_NB({2, 1}, {3, 1}, {3, 2, 2}) == 10);
    CHECK(bound_N2({2, 1}, {3, 1}, {3, 2, 2}) == 11);
    CHECK(bound_NV({2, 1}, {3, 1}, {3, 2, 2}) == 12);
    CHECK(bound_NV({3, 2}, {3, 1, 1}, {6}) == 13);
    CHECK(bound_N2({3, 2}, {3, 1, 1}, {6}) == 14);
    const BoundReport r = compare_bounds({3, 2}, {2, 2, 1}, {2, 2});
    CHECK(r.stab_empirical == 10);
    CHECK(r.n1 == 11);
    CHECK(r.n2 == 10);
    CHECK(r.nb == 11);
    CHECK(r.nv == 11);
    CHECK(r.consistent());
}

TEST_CASE("V-shift definition of stab((2),(2))")
{
    CHECK_FALSE(v_shift_holds({2}, {2}, 7, 3));
    for (int n = 8; n <= 10; ++n)
        CHECK(v_shift_holds({2}, {2}, n, 3));
}

TEST_CASE("padded coefficients")
{
    CHECK(padded_coefficient({2}, {2}, {2}, 3) == 0);
    CHECK(padded_coefficient({2}, {2}, {2}, 4) == 1);
    CHECK(padded_coefficient({2}, {2}, {2}, 6) == 2);
    CHECK(padded_coefficient({2}, {2}, {2}, 5) == 1);
    CHECK(stab_triple_empirical({2}, {2}, {2}) == 6);
}

TEST_CASE("property: stab of the product bounds stab of every triple")
{
    for (const auto& a : partitions_up_to(3))
        for (const auto& b : partitions_up_to(3)) {
            const SupportTable s = murnaghan_expansion(a, b);
            CHECK(stab_product_empirical(a, b) == stab_product(a, b));
            for (int n = stab_product(a, b); n <= stab_product(a, b) + 1; ++n)
                CHECK(v_shift_holds(a, b, n, 2));
            if (stab_product(a, b) > 0)
                CHECK_FALSE(v_shift_holds(a, b, stab_product(a, b) - 1, 3));
            for (const auto& [c, g] : s.coefficients())
                CHECK(stab_triple_empirical(a, b, c, g) <= stab_product(a, b));
        }
}

TEST_CASE("property: reports on random triples are consistent")
{
    PartitionSampler sample(7);
    for (int i = 0; i < 150; ++i) {
        const Partition a = sample(4), b = sample(4), c = sample(4);
        const BoundReport r = compare_bounds(a, b, c);
        CHECK_MESSAGE(r.consistent(), format_partition(a), format_partition(b), format_partition(c));
        CHECK(r.reduced_value == reduced_coefficient(a, b, c));
        CHECK(r.n1 == std::min({r.m1_three_ways[0], r.m1_three_ways[1], r.m1_three_ways[2]}));
    }
}

TEST_CASE("property: row bounds dominate the support")
{
    for (const auto& a : partitions_up_to(4))
        for (const auto& b : partitions_up_to(4)) {
            const SupportTable s = murnaghan_expansion(a, b);
            for (int k = 1; k <= a.weight() + b.weight(); ++k)
                CHECK(s.max_part(k) <= row_bound(a, b, k));
        }
}

TEST_CASE("worked examples")
{
    CHECK(stab_product({1}, {1}) == 4);
    CHECK(stab_product_empirical({1}, {1}) == 4);
    CHECK(max_gamma1({2}, {2}) == 4);
    CHECK(weight_range({2}, {2}) == std::pair{0, 4});
    CHECK(weight_range({2}, {4, 3, 2}) == std::pair{7, 11});
    for (const auto& b : partitions_up_to(5)) {
        CHECK(stab_product_empirical({}, b) == b.weight() + b.first());
        CHECK(max_gamma1({}, b) == b.first());
        CHECK(weight_range({}, b) == std::pair{b.weight(), b.weight()});
    }
    for (int k = 1; k <= 4; ++k)
        CHECK(row_bound({}, {}, k) == 0);
    CHECK(bound_N1({3, 2}, {2, 2, 1}, {2, 2}) == 11);
    CHECK(bound_N1({}, {}, {}) == 0);
    CHECK(bound_NB({}, {}, {}) == 0);
    CHECK(bound_NB({3, 2}, {2, 2, 1}, {2, 2}) == 11);
    CHECK(bound_NV({3, 2}, {2, 2, 1}, {2, 2}) == 11);
    CHECK(bound_N2({3, 2}, {2, 2, 1}, {2, 2}) == 10);
    CHECK(stab_triple_empirical({3, 2}, {2, 2, 1}, {2, 2}) == 10);
    for (int a1 = 1; a1 <= 4; ++a1)
        for (int b1 = 1; b1 <= 4; ++b1)
            for (const auto& c : partitions_up_to(5))
                CHECK(bound_N1({a1}, {b1}, c) == a1 + b1 + c.first());
    const BoundReport empty = compare_bounds({}, {}, {});
    CHECK(empty.n1 == 0);
    CHECK(empty.n2 == 0);
    CHECK(empty.nb == 0);
    CHECK(empty.nv == 0);
    CHECK(empty.stab_empirical == 0);
    CHECK(empty.reduced_value == 1);
}

TEST_CASE("property: every row inequality holds on the support")
{
    for (const auto& a : partitions_up_to(4))
        for (const auto& b : partitions_up_to(4))
            for (const SupportTable support = murnaghan_expansion(a, b); const auto& [c, g] : support.coefficients())
                for (int i = 1; i <= a.length() + 1; ++i)
                    for (int j = 1; j <= b.length() + 1; ++j)
                        CHECK(c.part(i + j - 1) <= intersect(erase_part(a, i), erase_part(b, j)).weight() +
                                                        a.part(i) + b.part(j));
}

TEST_CASE("property: stab of a triple never exceeds N1 or N2")
{
    for (const auto& a : partitions_up_to(3))
        for (const auto& b : partitions_up_to(3))
            for (const SupportTable support = murnaghan_expansion(a, b); const auto& [c, g] : support.coefficients()) {
                const int s = stab_triple_empirical(a, b, c, g);
                CHECK(s <= bound_N1(a, b, c));
                CHECK(s <= bound_N2(a, b, c));
                CHECK(s <= bound_NB(a, b, c));
                CHECK(s <= bound_NV(a, b, c));
            }
}
