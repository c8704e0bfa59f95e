#pragma once

#include <map>
#include <vector>

#include "kron/partition.hpp"
#include "kron/schur_expansion.hpp"

// Symmetric polynomials in a fixed number of variables, stored monomial by
// monomial. Slow and literal; used only to cross-check the library.
namespace oracle {

using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, long long>;

Polynomial one(int vars);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial add(const Polynomial& a, const Polynomial& b, long long scale = 1);

/// Sum over semistandard tableaux of shape lambda with entries 1..vars.
Polynomial schur(const kron::Partition& lambda, int vars);
/// Complete homogeneous h_r; zero for r < 0.
Polynomial complete(int r, int vars);
Polynomial power_sum(int r, int vars);

/// Schur coefficients of a symmetric polynomial, found by repeatedly removing
/// the lexicographically largest monomial. Exact when vars >= every length.
kron::SchurExpansion to_schur(Polynomial p, int vars);

/// det(h_{a_i - i + j}) expanded over all permutations.
Polynomial jacobi_trudi(const std::vector<int>& a, int vars);

/// chi^lambda(rho) read off p_rho = sum_lambda chi^lambda(rho) s_lambda.
long long frobenius_character(const kron::Partition& lambda, const kron::Partition& rho);

} // namespace oracle
