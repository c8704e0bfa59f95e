#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "kron/integer.hpp"
#include "kron/partition.hpp"

namespace kron {

/// Finite integer combination of Schur functions. Degrees may be mixed.
/// Zero coefficients are never stored; iteration follows Partition order.
class SchurExpansion {
public:
    using Terms = std::map<Partition, Integer>;

    SchurExpansion() = default;
    /// The single term coeff * s_shape.
    explicit SchurExpansion(const Partition& shape, Integer coeff = 1);
    SchurExpansion(std::initializer_list<std::pair<const Partition, Integer>> terms);

    /// Adds coeff * s_shape in place.
    void add_term(const Partition& shape, Integer coeff);

    Integer coefficient_of(const Partition& shape) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion& operator-=(const SchurExpansion& o);
    SchurExpansion& operator*=(Integer c);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
    friend SchurExpansion operator*(Integer c, SchurExpansion a) { return a *= c; }

    bool operator==(const SchurExpansion&) const = default;

    /// "s_{4} + s_{1,1,1,1} + 2s_{2,2}"; "0" for the zero expansion.
    std::string to_string() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SchurExpansion& f);

struct Straightened {
    int sign;
    Partition shape;
    bool operator==(const Straightened&) const = default;
};

/// Rewrites the Jacobi-Trudi determinant s_seq as sign * s_shape, or nullopt
/// when the determinant vanishes.
std::optional<Straightened> straighten(const IntSequence& seq);

/// s_lambda -> s_{lambda + (1)} (first part incremented).
SchurExpansion shift_V(const SchurExpansion& f);

/// s_lambda -> s_{lambda[n]}, straightened; vanishing terms drop out.
SchurExpansion lift_U(const SchurExpansion& f, int n);

} // namespace kron
