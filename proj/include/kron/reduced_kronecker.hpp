#pragma once

#include <map>
#include <string>
#include <vector>

#include "kron/characters.hpp"
#include "kron/integer.hpp"
#include "kron/partition.hpp"
#include "kron/schur_expansion.hpp"

namespace kron {

/// Murnaghan's stable expansion of s_{alpha[n]} * s_{beta[n]}: every gamma with
/// a nonzero reduced coefficient, mapped to that coefficient.
class SupportTable {
public:
    SupportTable(Partition alpha, Partition beta, std::map<Partition, Integer> coeffs);

    const Partition& alpha() const { return alpha_; }
    const Partition& beta() const { return beta_; }
    const std::map<Partition, Integer>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    Integer coefficient(const Partition& gamma) const;

    /// Maximum of gamma_k over the support (0 for k past every length).
    int max_part(int k) const;
    int max_weight() const;
    int min_weight() const;
    /// max |gamma| + gamma_1.
    int max_weight_plus_first() const;

    SchurExpansion as_expansion() const;

    /// Descriptions of support entries violating the triangle inequalities or
    /// the closed-form first-row and weight ranges. Empty when all hold.
    std::vector<std::string> invariant_violations() const;

private:
    Partition alpha_, beta_;
    std::map<Partition, Integer> coeffs_;
};

/// Degree at which the stable evaluation of a single reduced coefficient is
/// taken: N2(alpha, beta, gamma), raised when needed so that all three padded
/// sequences are partitions.
int stable_evaluation_point(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Reduced Kronecker coefficient as g^{gamma[N]}_{alpha[N],beta[N]} at
/// N = stable_evaluation_point(). Zero straight away when the triangle
/// inequalities on the weights fail.
Integer reduced_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma,
                            CharacterCache& cache = default_character_cache());

/// Reduced Kronecker coefficient from Littlewood's cancellation-free sum
///   sum g^zeta_{delta,eps} c^alpha_{delta,sigma,tau} c^beta_{eps,rho,tau} c^gamma_{zeta,rho,sigma}.
/// Shares no evaluation path with reduced_coefficient beyond Kronecker
/// coefficients of degree at most min(|alpha|, |beta|).
Integer reduced_coefficient_littlewood(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                       CharacterCache& cache = default_character_cache());

/// The whole symmetric function sum_gamma gbar^gamma_{alpha,beta} s_gamma,
/// assembled from the same cancellation-free sum.
SchurExpansion littlewood_expansion(const Partition& alpha, const Partition& beta,
                                    CharacterCache& cache = default_character_cache());

/// One Kronecker product at n = |alpha| + |beta| + alpha_1 + beta_1, each
/// s_{gamma[n]} read back as gamma.
SupportTable murnaghan_expansion(const Partition& alpha, const Partition& beta,
                                 CharacterCache& cache = default_character_cache());

/// g^lambda_{mu,nu} = sum_i (-1)^{i+1} gbar^{lambda dagger i}_{tail(mu),tail(nu)}.
/// The sum stops at the first i past the length of lambda whose term has weight
/// above |tail(mu)| + |tail(nu)|. Throws std::invalid_argument unless
/// |lambda| = |mu| = |nu|.
Integer recover_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                          CharacterCache& cache = default_character_cache());

} // namespace kron
