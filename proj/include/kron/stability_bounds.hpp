#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kron/characters.hpp"
#include "kron/integer.hpp"
#include "kron/partition.hpp"

namespace kron {

// Closed forms on Supp(alpha, beta) ---------------------------------------

/// |alpha| + |beta| + alpha_1 + beta_1: the degree from which the whole
/// product s_{alpha[n]} * s_{beta[n]} only shifts its first row.
int stab_product(const Partition& alpha, const Partition& beta);

/// |alpha cap beta| + max(alpha_1, beta_1).
int max_gamma1(const Partition& alpha, const Partition& beta);

/// Upper bound on gamma_k over Supp(alpha, beta):
///   min over i + j - 1 = k of |E_i alpha cap E_j beta| + alpha_i + beta_j,
/// capped by floor((|alpha| + |beta|) / k). Requires k >= 1.
int row_bound(const Partition& alpha, const Partition& beta, int k);

/// (min, max) of |gamma| over Supp(alpha, beta):
/// (max(|alpha|,|beta|) - |alpha cap beta|, |alpha| + |beta|).
std::pair<int, int> weight_range(const Partition& alpha, const Partition& beta);

// Empirical counterparts ------------------------------------------------------

/// max |gamma| + gamma_1 over the computed support.
int stab_product_empirical(const Partition& alpha, const Partition& beta,
                           CharacterCache& cache = default_character_cache());

/// Checks s_{alpha[n+k]} * s_{beta[n+k]} == V^k(s_{alpha[n]} * s_{beta[n]}) for
/// k = 1..max_shift, straightening alpha[n], beta[n] when they are not
/// partitions.
bool v_shift_holds(const Partition& alpha, const Partition& beta, int n, int max_shift,
                   CharacterCache& cache = default_character_cache());

// Bounds on stab(alpha, beta, gamma) -----------------------------------------

/// |gamma| + |tail(alpha) cap tail(beta)| + alpha_1 + beta_1.
int bound_M1(const Partition& alpha, const Partition& beta, const Partition& gamma);
/// |alpha| + |beta| + gamma_1.
int bound_MB(const Partition& alpha, const Partition& beta, const Partition& gamma);
/// |gamma| + max(|alpha| + alpha_1 - 1, |beta| + beta_1 - 1, |gamma|), or
/// |gamma| + max(|alpha| + alpha_1, |gamma|) when alpha == beta.
int bound_MV(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// The three rotations M(a,b;c), M(a,c;b), M(b,c;a) of a bound.
std::array<int, 3> m1_rotations(const Partition& alpha, const Partition& beta, const Partition& gamma);

int bound_N1(const Partition& alpha, const Partition& beta, const Partition& gamma);
/// floor((|alpha| + |beta| + |gamma| + alpha_1 + beta_1 + gamma_1) / 2).
int bound_N2(const Partition& alpha, const Partition& beta, const Partition& gamma);
int bound_NB(const Partition& alpha, const Partition& beta, const Partition& gamma);
int bound_NV(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// First degree n from which g^{gamma[n]}_{alpha[n],beta[n]} equals the
/// reduced coefficient, starting at the first n where all three padded
/// sequences are partitions. The sequence is weakly increasing, so the first
/// hit is the stabilization point.
int stab_triple_empirical(const Partition& alpha, const Partition& beta, const Partition& gamma,
                          CharacterCache& cache = default_character_cache());

/// Same search, reusing an already computed reduced coefficient.
int stab_triple_empirical(const Partition& alpha, const Partition& beta, const Partition& gamma,
                          Integer reduced, CharacterCache& cache = default_character_cache());

/// g^{gamma[n]}_{alpha[n],beta[n]}; 0 when a padded sequence is not a partition.
Integer padded_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma, int n,
                           CharacterCache& cache = default_character_cache());

/// First n at which alpha[n], beta[n] and gamma[n] are all partitions.
int first_valid_degree(const Partition& alpha, const Partition& beta, const Partition& gamma);

struct BoundReport {
    std::array<Partition, 3> triple;
    std::array<int, 3> m1_three_ways{};
    int n1 = 0;
    int n2 = 0;
    int nb = 0;
    int nv = 0;
    int stab_empirical = 0;
    Integer reduced_value = 0;

    /// Failed comparisons among N1 <= NB, N1 <= NV and, when the reduced value
    /// is positive, stab <= N1, N2, NB, NV.
    std::vector<std::string> violations() const;
    bool consistent() const { return violations().empty(); }
};

BoundReport compare_bounds(const Partition& alpha, const Partition& beta, const Partition& gamma,
                           CharacterCache& cache = default_character_cache());

} // namespace kron
