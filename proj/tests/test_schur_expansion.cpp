#include <doctest.h>

#include <set>
#include <sstream>

#include "kron/schur_expansion.hpp"
#include "oracle/symmetric_polynomials.hpp"

using namespace kron;

TEST_CASE("arithmetic drops zero terms")
{
    SchurExpansion f{{Partition{2}, 1}, {Partition{1, 1}, 2}};
    SchurExpansion g{{Partition{2}, -1}};
    const SchurExpansion sum = f + g;
    CHECK(sum.size() == 1);
    CHECK(sum.coefficient_of({1, 1}) == 2);
    CHECK(sum.coefficient_of({2}) == 0);
    CHECK((f - f).is_zero());
    CHECK((3 * f).coefficient_of({1, 1}) == 6);
    CHECK((0 * f).is_zero());
    f.add_term({2}, -1);
    CHECK(f == SchurExpansion(Partition{1, 1}, 2));
}

TEST_CASE("to_string")
{
    CHECK(SchurExpansion().to_string() == "0");
    const SchurExpansion f{{Partition{4}, 1}, {Partition{2, 2}, 2}, {Partition{1, 1, 1, 1}, -1}};
    CHECK(f.to_string() == "s_{4} + 2s_{2,2} - s_{1,1,1,1}");
    CHECK(SchurExpansion(Partition{}).to_string() == "s_{}");
    std::ostringstream os;
    os << f;
    CHECK(os.str() == f.to_string());
}

TEST_CASE("straighten small cases")
{
    CHECK(straighten({2, 1}) == Straightened{1, {2, 1}});
    CHECK(straighten({1, 2}) == std::nullopt);
    CHECK(straighten({0, 2}) == Straightened{-1, {1, 1}});
    CHECK(straighten({-1, 3}) == Straightened{-1, {2}});
    CHECK(straighten({-1}) == std::nullopt);
    CHECK(straighten({0}) == Straightened{1, {}});
    CHECK(straighten({}) == Straightened{1, {}});
    CHECK(straighten({1, 2, 3}) == std::nullopt);
}

TEST_CASE("straightening matches the literal Jacobi-Trudi determinant")
{
    int checked = 0;
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> a(static_cast<std::size_t>(len), -3);
        while (true) {
            int degree = 0;
            for (int x : a)
                degree += x;
            if (degree >= 0 && degree <= 6) {
                const int vars = std::max(degree, 1);
                const SchurExpansion want = oracle::to_schur(oracle::jacobi_trudi(a, vars), vars);
                SchurExpansion got;
                if (auto s = straighten(IntSequence(a)))
                    got.add_term(s->shape, s->sign);
                CHECK_MESSAGE(got == want, "sequence of length ", len, " starting ", a[0]);
                ++checked;
            }
            std::size_t i = 0;
            while (i < a.size() && a[i] == 5)
                a[i++] = -3;
            if (i == a.size())
                break;
            ++a[i];
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("shift_V and lift_U")
{
    const SchurExpansion f{{Partition{2, 1}, 1}, {Partition{}, 3}};
    CHECK(shift_V(f) == SchurExpansion{{Partition{3, 1}, 1}, {Partition{1}, 3}});
    CHECK(lift_U(SchurExpansion(Partition{2}), 2) == SchurExpansion(Partition{1, 1}, -1));
    CHECK(lift_U(SchurExpansion(Partition{2}), 3).is_zero());
    CHECK(lift_U(SchurExpansion(Partition{2}), 4) == SchurExpansion(Partition{2, 2}));
    CHECK(lift_U(SchurExpansion(Partition{1, 1}), 1).is_zero());
    for (const auto& p : partitions_up_to(6)) {
        const int n = p.weight() + p.first();
        for (int k = 0; k < 3; ++k) {
            const SchurExpansion lifted = lift_U(SchurExpansion(p), n + k);
            CHECK(lifted == SchurExpansion(*Partition::from_sequence(pad(p, n + k))));
            CHECK(shift_V(lifted) == lift_U(SchurExpansion(p), n + k + 1));
        }
    }
}

TEST_CASE("worked straightening examples")
{
    CHECK(straighten({1, 3}) == Straightened{-1, {2, 2}});
    CHECK(straighten({1, 2, 1}) == std::nullopt);
    CHECK(straighten({0, 3, 1}) == Straightened{-1, {2, 1, 1}});
    CHECK(straighten({0, 4}) == Straightened{-1, {3, 1}});
    CHECK(straighten({3, 1}) == Straightened{1, {3, 1}});
    CHECK(lift_U(SchurExpansion(Partition{2}), 8) == SchurExpansion(Partition{6, 2}));
    CHECK(lift_U(SchurExpansion(Partition{3}), 3) == SchurExpansion(Partition{2, 1}, -1));
    CHECK(shift_V(SchurExpansion(Partition{})) == SchurExpansion(Partition{1}));
    CHECK(shift_V(SchurExpansion(Partition{2, 2}, 3)) == SchurExpansion(Partition{3, 2}, 3));
    CHECK(shift_V(SchurExpansion()).is_zero());
}

TEST_CASE("property: adjacent column swap flips the sign")
{
    for (int x = -3; x <= 5; ++x)
        for (int y = -3; y <= 5; ++y)
            for (int z = -2; z <= 3; ++z) {
                const auto base = straighten({x, y, z});
                const auto swapped = straighten({y - 1, x + 1, z});
                REQUIRE(base.has_value() == swapped.has_value());
                if (base) {
                    CHECK(swapped->shape == base->shape);
                    CHECK(swapped->sign == -base->sign);
                }
                const auto swapped2 = straighten({x, z - 1, y + 1});
                REQUIRE(base.has_value() == swapped2.has_value());
                if (base)
                    CHECK(swapped2->sign == -base->sign);
            }
}

TEST_CASE("property: lift_U is linear and injective in low degree")
{
    const auto small = partitions_up_to(4);
    for (int n = 0; n <= 10; ++n) {
        SchurExpansion f, g;
        for (std::size_t i = 0; i < small.size(); ++i)
            (i % 2 ? f : g).add_term(small[i], static_cast<Integer>(i) - 5);
        CHECK(lift_U(f + g, n) == lift_U(f, n) + lift_U(g, n));
        std::set<Partition> images;
        std::size_t count = 0;
        for (const auto& p : partitions_up_to(n / 2)) {
            const SchurExpansion lifted = lift_U(SchurExpansion(p), n);
            REQUIRE(lifted.size() == 1);
            images.insert(lifted.begin()->first);
            ++count;
        }
        CHECK(images.size() == count);
    }
}
