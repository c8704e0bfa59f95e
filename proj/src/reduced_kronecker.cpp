#include "kron/reduced_kronecker.hpp"

#include <algorithm>
#include <stdexcept>

#include "kron/kronecker.hpp"
#include "kron/littlewood_richardson.hpp"
#include "kron/stability_bounds.hpp"

namespace kron {

SupportTable::SupportTable(Partition alpha, Partition beta, std::map<Partition, Integer> coeffs)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), coeffs_(std::move(coeffs))
{
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Integer SupportTable::coefficient(const Partition& gamma) const
{
    auto it = coeffs_.find(gamma);
    return it == coeffs_.end() ? 0 : it->second;
}

int SupportTable::max_part(int k) const
{
    int m = 0;
    for (const auto& [gamma, c] : coeffs_)
        m = std::max(m, gamma.part(k));
    return m;
}

int SupportTable::max_weight() const
{
    int m = 0;
    for (const auto& [gamma, c] : coeffs_)
        m = std::max(m, gamma.weight());
    return m;
}

int SupportTable::min_weight() const
{
    if (coeffs_.empty())
        return 0;
    int m = coeffs_.begin()->first.weight();
    for (const auto& [gamma, c] : coeffs_)
        m = std::min(m, gamma.weight());
    return m;
}

int SupportTable::max_weight_plus_first() const
{
    int m = 0;
    for (const auto& [gamma, c] : coeffs_)
        m = std::max(m, gamma.weight() + gamma.first());
    return m;
}

SchurExpansion SupportTable::as_expansion() const
{
    SchurExpansion f;
    for (const auto& [gamma, c] : coeffs_)
        f.add_term(gamma, c);
    return f;
}

std::vector<std::string> SupportTable::invariant_violations() const
{
    std::vector<std::string> out;
    const auto [lo, hi] = weight_range(alpha_, beta_);
    const int first_cap = max_gamma1(alpha_, beta_);
    for (const auto& [gamma, c] : coeffs_) {
        const std::string where = format_partition(gamma) + " in Supp(" + format_partition(alpha_) + "," +
                                  format_partition(beta_) + ")";
        if (c < 0)
            out.push_back("negative coefficient at " + where);
        if (!murnaghan_inequalities(alpha_, beta_, gamma))
            out.push_back("triangle inequalities fail for " + where);
        if (gamma.weight() < lo || gamma.weight() > hi)
            out.push_back("weight outside [" + std::to_string(lo) + "," + std::to_string(hi) + "] for " + where);
        if (gamma.first() > first_cap)
            out.push_back("first row above " + std::to_string(first_cap) + " for " + where);
    }
    return out;
}

int stable_evaluation_point(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    return std::max({bound_N2(alpha, beta, gamma), alpha.weight() + alpha.first(), beta.weight() + beta.first(),
                     gamma.weight() + gamma.first()});
}

Integer reduced_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma,
                            CharacterCache& cache)
{
    if (!murnaghan_inequalities(alpha, beta, gamma))
        return 0;
    const int n = stable_evaluation_point(alpha, beta, gamma);
    return kronecker_coefficient(*Partition::from_sequence(pad(gamma, n)), *Partition::from_sequence(pad(alpha, n)),
                                 *Partition::from_sequence(pad(beta, n)), cache);
}

namespace {

// A pair (inner, skewed) with c^outer_{inner, skewed, tau} > 0 and its value.
struct Split {
    Partition inner;
    Partition skewed;
    Integer coeff;
};

// Every (delta, sigma) with c^outer_{delta,sigma,tau} > 0.
std::vector<Split> splits(const Partition& outer, const Partition& tau)
{
    std::vector<Split> out;
    const int rest = outer.weight() - tau.weight();
    for (int d = 0; d <= rest; ++d) {
        const auto deltas = partitions_inside(outer, d);
        const auto sigmas = partitions_inside(outer, rest - d);
        for (const auto& delta : deltas) {
            for (const auto& sigma : sigmas) {
                const Integer c = lr_triple(delta, sigma, tau, outer);
                if (c != 0)
                    out.push_back({delta, sigma, c});
            }
        }
    }
    return out;
}

// Visits every nonzero summand g^zeta_{delta,eps} c^alpha c^beta as
// (zeta, rho, sigma, product of the three coefficients).
template <typename Visit>
void littlewood_terms(const Partition& alpha, const Partition& beta, CharacterCache& cache, Visit&& visit)
{
    const Partition common = intersect(alpha, beta);
    for (int t = 0; t <= common.weight(); ++t) {
        for (const auto& tau : partitions_inside(common, t)) {
            const auto left = splits(alpha, tau);
            const auto right = splits(beta, tau);
            for (const auto& a : left) {
                for (const auto& b : right) {
                    if (a.inner.weight() != b.inner.weight())
                        continue;
                    const Integer outer = checked_mul(a.coeff, b.coeff);
                    for (const auto& zeta : partitions_of(a.inner.weight())) {
                        const Integer g = kronecker_coefficient(zeta, a.inner, b.inner, cache);
                        if (g != 0)
                            visit(zeta, b.skewed, a.skewed, checked_mul(g, outer));
                    }
                }
            }
        }
    }
}

} // namespace

Integer reduced_coefficient_littlewood(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                       CharacterCache& cache)
{
    Integer total = 0;
    littlewood_terms(alpha, beta, cache,
                     [&](const Partition& zeta, const Partition& rho, const Partition& sigma, Integer weight) {
                         if (zeta.weight() + rho.weight() + sigma.weight() != gamma.weight())
                             return;
                         const Integer c = lr_triple(zeta, rho, sigma, gamma);
                         if (c != 0)
                             total = checked_add(total, checked_mul(weight, c));
                     });
    return total;
}

SchurExpansion littlewood_expansion(const Partition& alpha, const Partition& beta, CharacterCache& cache)
{
    SchurExpansion out;
    littlewood_terms(alpha, beta, cache,
                     [&](const Partition& zeta, const Partition& rho, const Partition& sigma, Integer weight) {
                         const SchurExpansion zr = schur_product(SchurExpansion(zeta), SchurExpansion(rho));
                         out += weight * schur_product(zr, SchurExpansion(sigma));
                     });
    return out;
}

SupportTable murnaghan_expansion(const Partition& alpha, const Partition& beta, CharacterCache& cache)
{
    const int n = stab_product(alpha, beta);
    const SchurExpansion product =
        kronecker_product(*Partition::from_sequence(pad(alpha, n)), *Partition::from_sequence(pad(beta, n)), cache);
    std::map<Partition, Integer> coeffs;
    for (const auto& [lambda, c] : product)
        coeffs.emplace(tail(lambda), c);
    return SupportTable(alpha, beta, std::move(coeffs));
}

Integer recover_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                          CharacterCache& cache)
{
    if (lambda.weight() != mu.weight() || lambda.weight() != nu.weight())
        throw std::invalid_argument("recover_kronecker: weights of " + format_partition(lambda) + ", " +
                                    format_partition(mu) + ", " + format_partition(nu) + " differ");
    const Partition mu_bar = tail(mu), nu_bar = tail(nu);
    const int cap = mu_bar.weight() + nu_bar.weight();
    Integer total = 0;
    for (int i = 1;; ++i) {
        const Partition gamma = dagger(lambda, i);
        if (i > lambda.length() && gamma.weight() > cap)
            break;
        const Integer term = reduced_coefficient(mu_bar, nu_bar, gamma, cache);
        total = i % 2 == 1 ? checked_add(total, term) : checked_sub(total, term);
    }
    return total;
}

} // namespace kron
