#include "kron/stability_bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kron/kronecker.hpp"
#include "kron/reduced_kronecker.hpp"
#include "kron/schur_expansion.hpp"

namespace kron {

int stab_product(const Partition& alpha, const Partition& beta)
{
    return alpha.weight() + beta.weight() + alpha.first() + beta.first();
}

int max_gamma1(const Partition& alpha, const Partition& beta)
{
    return intersect(alpha, beta).weight() + std::max(alpha.first(), beta.first());
}

int row_bound(const Partition& alpha, const Partition& beta, int k)
{
    if (k < 1)
        throw std::invalid_argument("row_bound: k must be positive");
    int best = std::numeric_limits<int>::max();
    for (int i = 1; i <= k; ++i) {
        const int j = k + 1 - i;
        const int b = intersect(erase_part(alpha, i), erase_part(beta, j)).weight() + alpha.part(i) + beta.part(j);
        best = std::min(best, b);
    }
    return std::min(best, (alpha.weight() + beta.weight()) / k);
}

std::pair<int, int> weight_range(const Partition& alpha, const Partition& beta)
{
    return {std::max(alpha.weight(), beta.weight()) - intersect(alpha, beta).weight(),
            alpha.weight() + beta.weight()};
}

int stab_product_empirical(const Partition& alpha, const Partition& beta, CharacterCache& cache)
{
    return murnaghan_expansion(alpha, beta, cache).max_weight_plus_first();
}

namespace {

SchurExpansion padded_schur(const Partition& p, int n)
{
    SchurExpansion f;
    if (auto s = straighten(pad(p, n)))
        f.add_term(s->shape, s->sign);
    return f;
}

SchurExpansion padded_product(const Partition& alpha, const Partition& beta, int n, CharacterCache& cache)
{
    return kronecker_product(padded_schur(alpha, n), padded_schur(beta, n), cache);
}

} // namespace

bool v_shift_holds(const Partition& alpha, const Partition& beta, int n, int max_shift, CharacterCache& cache)
{
    const SchurExpansion base = padded_product(alpha, beta, n, cache);
    SchurExpansion shifted = base;
    for (int k = 1; k <= max_shift; ++k) {
        shifted = shift_V(shifted);
        if (padded_product(alpha, beta, n + k, cache) != shifted)
            return false;
    }
    return true;
}

int bound_M1(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return gamma.weight() + intersect(tail(alpha), tail(beta)).weight() + alpha.first() + beta.first();
}

int bound_MB(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return alpha.weight() + beta.weight() + gamma.first();
}

int bound_MV(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    if (alpha == beta)
        return gamma.weight() + std::max(alpha.weight() + alpha.first(), gamma.weight());
    return gamma.weight() + std::max({alpha.weight() + alpha.first() - 1, beta.weight() + beta.first() - 1,
                                      gamma.weight()});
}

namespace {

template <typename M>
std::array<int, 3> rotations(M m, const Partition& a, const Partition& b, const Partition& c)
{
    return {m(a, b, c), m(a, c, b), m(b, c, a)};
}

int min_of(const std::array<int, 3>& v) { return std::min({v[0], v[1], v[2]}); }

} // namespace

std::array<int, 3> m1_rotations(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return rotations(bound_M1, alpha, beta, gamma);
}

int bound_N1(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return min_of(m1_rotations(alpha, beta, gamma));
}

int bound_N2(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return (alpha.weight() + beta.weight() + gamma.weight() + alpha.first() + beta.first() + gamma.first()) / 2;
}

int bound_NB(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return min_of(rotations(bound_MB, alpha, beta, gamma));
}

int bound_NV(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return min_of(rotations(bound_MV, alpha, beta, gamma));
}

int first_valid_degree(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return std::max({alpha.weight() + alpha.first(), beta.weight() + beta.first(), gamma.weight() + gamma.first()});
}

Integer padded_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma, int n,
                           CharacterCache& cache)
{
    auto a = Partition::from_sequence(pad(alpha, n));
    auto b = Partition::from_sequence(pad(beta, n));
    auto c = Partition::from_sequence(pad(gamma, n));
    if (!a || !b || !c)
        return 0;
    return kronecker_coefficient(*c, *a, *b, cache);
}

int stab_triple_empirical(const Partition& alpha, const Partition& beta, const Partition& gamma,
                          CharacterCache& cache)
{
    return stab_triple_empirical(alpha, beta, gamma, reduced_coefficient(alpha, beta, gamma, cache), cache);
}

int stab_triple_empirical(const Partition& alpha, const Partition& beta, const Partition& gamma, Integer reduced,
                          CharacterCache& cache)
{
    const int start = first_valid_degree(alpha, beta, gamma);
    const int limit = std::max(start, stable_evaluation_point(alpha, beta, gamma));
    for (int n = start; n <= limit; ++n) {
        if (padded_coefficient(alpha, beta, gamma, n, cache) == reduced)
            return n;
    }
    throw InvariantViolation("g^{gamma[n]}_{alpha[n],beta[n]} never reached its stable value by n = " +
                             std::to_string(limit) + " for (" + format_partition(alpha) + "," +
                             format_partition(beta) + "," + format_partition(gamma) + ")");
}

std::vector<std::string> BoundReport::violations() const
{
    std::vector<std::string> out;
    if (n1 > nb)
        out.push_back("N1 = " + std::to_string(n1) + " > NB = " + std::to_string(nb));
    if (n1 > nv)
        out.push_back("N1 = " + std::to_string(n1) + " > NV = " + std::to_string(nv));
    if (reduced_value > 0) {
        const std::pair<const char*, int> bounds[] = {{"N1", n1}, {"N2", n2}, {"NB", nb}, {"NV", nv}};
        for (const auto& [name, v] : bounds)
            if (stab_empirical > v)
                out.push_back("stab = " + std::to_string(stab_empirical) + " > " + name + " = " + std::to_string(v));
    }
    return out;
}

BoundReport compare_bounds(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           CharacterCache& cache)
{
    BoundReport r;
    r.triple = {alpha, beta, gamma};
    r.m1_three_ways = m1_rotations(alpha, beta, gamma);
    r.n1 = min_of(r.m1_three_ways);
    r.n2 = bound_N2(alpha, beta, gamma);
    r.nb = bound_NB(alpha, beta, gamma);
    r.nv = bound_NV(alpha, beta, gamma);
    r.reduced_value = reduced_coefficient(alpha, beta, gamma, cache);
    r.stab_empirical = stab_triple_empirical(alpha, beta, gamma, r.reduced_value, cache);
    return r;
}

} // namespace kron
