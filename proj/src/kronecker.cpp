#include "kron/kronecker.hpp"

#include <stdexcept>

namespace kron {

namespace {

Integer character_sum(const Partition& lambda, const Partition& mu, const Partition& nu, const DegreeIndex& index,
                      const std::vector<Integer>& a, const std::vector<Integer>& b, const std::vector<Integer>& c)
{
    const auto& sizes = index.class_sizes();
    BigInt sum = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        const Integer x = a[j], y = b[j], z = c[j];
        if (x == 0 || y == 0 || z == 0)
            continue;
        BigInt term = x;
        term *= y;
        term *= z;
        sum += term * sizes[j];
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(sum, index.order(), quotient, remainder);
    auto label = [&] {
        return "g^" + format_partition(lambda) + "_{" + format_partition(mu) + "," + format_partition(nu) + "}";
    };
    if (remainder != 0)
        throw InvariantViolation("character sum for " + label() + " is not divisible by " +
                                 std::to_string(index.degree()) + "!");
    if (quotient < 0)
        throw InvariantViolation("negative Kronecker coefficient " + label());
    return to_integer(quotient);
}

} // namespace

Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              CharacterCache& cache)
{
    const int n = lambda.weight();
    if (mu.weight() != n || nu.weight() != n)
        return 0;
    check_weight_limit(n);
    return character_sum(lambda, mu, nu, *cache.degree_index(n), *cache.row(lambda), *cache.row(mu),
                         *cache.row(nu));
}

SchurExpansion kronecker_product(const Partition& mu, const Partition& nu, CharacterCache& cache)
{
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("kronecker_product: weights of " + format_partition(mu) + " and " +
                                    format_partition(nu) + " differ");
    const int n = mu.weight();
    check_weight_limit(n);
    const int first_row_cap = intersect(mu, nu).weight();
    const auto index = cache.degree_index(n);
    const auto row_mu = cache.row(mu);
    const auto row_nu = cache.row(nu);
    SchurExpansion out;
    for (const auto& lambda : index->partitions()) {
        if (lambda.first() > first_row_cap)
            continue;
        out.add_term(lambda, character_sum(lambda, mu, nu, *index, *cache.row(lambda), *row_mu, *row_nu));
    }
    return out;
}

SchurExpansion kronecker_product(const SchurExpansion& f, const SchurExpansion& g, CharacterCache& cache)
{
    SchurExpansion out;
    for (const auto& [mu, a] : f)
        for (const auto& [nu, b] : g)
            out += checked_mul(a, b) * kronecker_product(mu, nu, cache);
    return out;
}

BigInt standard_tableaux_count(const Partition& lambda)
{
    const Partition conj = transpose(lambda);
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
    return factorial(lambda.weight()) / hooks;
}

} // namespace kron
