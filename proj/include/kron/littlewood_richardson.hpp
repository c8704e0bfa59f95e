#pragma once

#include "kron/integer.hpp"
#include "kron/partition.hpp"
#include "kron/schur_expansion.hpp"

namespace kron {

/// Counts Littlewood-Richardson tableaux: semistandard fillings of a skew shape
/// with a given content whose reverse reading word is a lattice word.
///
/// Results are memoized on the normal form of the skew shape (rows fully
/// covered by the inner shape removed, common left offset stripped) together
/// with the content. The memo is shared process-wide and guarded by a mutex.
class LRTableauCounter {
public:
    LRTableauCounter(SkewShape skew, Partition content);

    Integer count() const;

    static std::size_t memo_size();

private:
    SkewShape skew_;
    Partition content_;
};

/// c^lambda_{mu,nu}. Zero unless |lambda| = |mu| + |nu| and mu, nu fit in lambda.
Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Coefficient of s_delta in s_alpha s_beta s_gamma, summed over the
/// intermediate shape phi of s_alpha s_beta.
Integer lr_triple(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& delta);

/// s_{outer/inner} = sum_kappa c^outer_{inner,kappa} s_kappa.
SchurExpansion skew_expansion(const SkewShape& shape);

/// Skewing operator: linear in both arguments, (s_mu)^perp s_lambda = s_{lambda/mu}
/// (zero when mu does not fit in lambda).
SchurExpansion perp(const SchurExpansion& skewer, const SchurExpansion& f);

/// Ordinary product of symmetric functions in the Schur basis.
SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g);

} // namespace kron
