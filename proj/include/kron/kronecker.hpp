#pragma once

#include "kron/characters.hpp"
#include "kron/integer.hpp"
#include "kron/partition.hpp"
#include "kron/schur_expansion.hpp"

namespace kron {

/// g^lambda_{mu,nu}: multiplicity of V_lambda in V_mu (x) V_nu, computed as
/// (1/n!) sum_rho |C_rho| chi^lambda(rho) chi^mu(rho) chi^nu(rho) in exact
/// arithmetic. Returns 0 when the three weights differ. Throws
/// InvariantViolation if the class sum is not divisible by n! or is negative.
Integer kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                              CharacterCache& cache = default_character_cache());

/// s_mu * s_nu = sum_lambda g^lambda_{mu,nu} s_lambda. Only lambda with
/// lambda_1 <= |mu cap nu| are evaluated; the rest vanish. Throws
/// std::invalid_argument when |mu| != |nu|.
SchurExpansion kronecker_product(const Partition& mu, const Partition& nu,
                                 CharacterCache& cache = default_character_cache());

/// Kronecker product extended linearly to arbitrary homogeneous expansions of
/// equal degree. Used to apply the product to straightened Jacobi-Trudi terms.
SchurExpansion kronecker_product(const SchurExpansion& f, const SchurExpansion& g,
                                 CharacterCache& cache = default_character_cache());

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt standard_tableaux_count(const Partition& lambda);

} // namespace kron
