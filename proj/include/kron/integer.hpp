#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kron {

/// Coefficient type for expansions and character values. Arithmetic on it
/// goes through the checked helpers below; overflow raises OverflowError.
using Integer = std::int64_t;

/// Unbounded integer, used for class sizes and character-sum accumulation.
using BigInt = boost::multiprecision::cpp_int;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A computed quantity contradicted a property that must hold for any input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A degree exceeded the configured safety cap (see max_weight()).
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline Integer checked_add(Integer a, Integer b)
{
    Integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Integer checked_sub(Integer a, Integer b)
{
    Integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Integer checked_mul(Integer a, Integer b)
{
    Integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Integer to_integer(const BigInt& v)
{
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw OverflowError("value does not fit in 64 bits: " + v.str());
    return static_cast<Integer>(v);
}

/// Largest degree any computation may reach. Defaults to 64.
int max_weight();
void set_max_weight(int w);

/// Throws LimitExceeded when n exceeds max_weight().
void check_weight_limit(int n);

} // namespace kron
