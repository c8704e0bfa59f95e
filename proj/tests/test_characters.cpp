#include <doctest.h>

#include "kron/characters.hpp"
#include "kron/kronecker.hpp"
#include "oracle/symmetric_polynomials.hpp"

using namespace kron;

TEST_CASE("class sizes and centralizers")
{
    CHECK(centralizer_order({2, 2}) == 8);
    CHECK(centralizer_order({3, 1, 1}) == 6);
    CHECK(centralizer_order({}) == 1);
    CHECK(class_size({2, 1, 1}) == 6);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    for (int n = 0; n <= 12; ++n) {
        BigInt total = 0;
        for (const auto& rho : partitions_of(n))
            total += class_size(rho);
        CHECK(total == factorial(n));
    }
    const DegreeIndex idx(5);
    CHECK(idx.size() == 7);
    CHECK(idx.order() == 120);
    CHECK(idx.index_of({3, 2}) == 2);
    CHECK(idx.index_of({3, 1}) == -1);
}

TEST_CASE("character table of S4")
{
    CharacterCache cache;
    const std::vector<Partition> cls = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    const std::vector<std::pair<Partition, std::vector<Integer>>> rows = {
        {{4}, {1, 1, 1, 1, 1}},
        {{3, 1}, {-1, 0, -1, 1, 3}},
        {{2, 2}, {0, -1, 2, 0, 2}},
        {{2, 1, 1}, {1, 0, -1, -1, 3}},
        {{1, 1, 1, 1}, {-1, 1, 1, -1, 1}},
    };
    const auto table = cache.table(4);
    for (const auto& [shape, values] : rows)
        for (std::size_t j = 0; j < cls.size(); ++j) {
            CHECK(cache.character(shape, cls[j]) == values[j]);
            CHECK(table->value(static_cast<std::size_t>(table->index().index_of(shape)), j) == values[j]);
        }
    CHECK_THROWS_AS(cache.character({2}, {1}), std::invalid_argument);
    CHECK(cache.character({}, {}) == 1);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius power-sum expansion")
{
    CharacterCache cache;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& rho : partitions_of(n)) {
            oracle::Polynomial p = oracle::one(n);
            for (int r : rho.parts())
                p = oracle::multiply(p, oracle::power_sum(r, n));
            const SchurExpansion expansion = oracle::to_schur(p, n);
            for (const auto& lambda : partitions_of(n))
                CHECK(cache.character(lambda, rho) == expansion.coefficient_of(lambda));
        }
    }
}

TEST_CASE("table builder agrees with Murnaghan-Nakayama")
{
    CharacterCache cache;
    for (int n = 0; n <= 11; ++n) {
        const auto table = cache.table(n);
        const auto& ps = table->index().partitions();
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                REQUIRE(table->value(i, j) == cache.character(ps[i], ps[j]));
    }
}

TEST_CASE("rows from the table and from the recursion coincide")
{
    CharacterCache tabled;
    CharacterCache recursive(0);
    for (int n = 0; n <= 9; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(*tabled.row(lambda) == *recursive.row(lambda));
}

TEST_CASE("orthogonality, degrees and the sign twist")
{
    CharacterCache cache;
    for (int n = 1; n <= 9; ++n) {
        const auto table = cache.table(n);
        const auto& idx = table->index();
        const auto& ps = idx.partitions();
        const std::size_t k = ps.size();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a; b < k; ++b) {
                BigInt rows = 0, cols = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    rows += idx.class_sizes()[j] * table->value(a, j) * table->value(b, j);
                    cols += BigInt(table->value(j, a)) * table->value(j, b);
                }
                CHECK(rows == (a == b ? idx.order() : BigInt(0)));
                CHECK(cols == (a == b ? centralizer_order(ps[a]) : BigInt(0)));
            }
        const std::size_t identity = k - 1;
        for (std::size_t a = 0; a < k; ++a) {
            CHECK(BigInt(table->value(a, identity)) == standard_tableaux_count(ps[a]));
            const std::size_t conj = static_cast<std::size_t>(idx.index_of(transpose(ps[a])));
            for (std::size_t j = 0; j < k; ++j) {
                const int sign = (n - ps[j].length()) % 2 == 0 ? 1 : -1;
                CHECK(table->value(conj, j) == sign * table->value(a, j));
            }
        }
    }
}

TEST_CASE("degrees beyond the table limit")
{
    CharacterCache cache(0);
    const Partition identity(std::vector<int>(25, 1));
    CHECK(cache.character({15, 10}, identity) == to_integer(standard_tableaux_count({15, 10})));
    CHECK(cache.memo_size() > 0);
    cache.clear();
    CHECK(cache.memo_size() == 0);
}
