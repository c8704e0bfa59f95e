#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kron {

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arbitrary finite integer sequence. Holds things like lambda[n] before it is
/// known whether they form a partition, and arguments of Jacobi-Trudi
/// determinants.
struct IntSequence {
    std::vector<int> entries;

    IntSequence() = default;
    IntSequence(std::initializer_list<int> e) : entries(e) {}
    explicit IntSequence(std::vector<int> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    int operator[](std::size_t i) const { return entries[i]; }
    bool operator==(const IntSequence&) const = default;
};

/// Weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored, so part(i) is 0 for every i past the length.
///
/// Ordering (operator<=>) is by weight ascending, then lexicographically
/// descending within a weight: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
class Partition {
public:
    Partition() = default;

    /// Zeros are stripped from the end; anything else that is not weakly
    /// decreasing and nonnegative throws InvalidPartition.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static std::optional<Partition> from_sequence(const IntSequence& seq);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based; 0 past the length.
    int part(int i) const
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    int first() const { return part(1); }

    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const;

    std::size_t hash() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    /// Throws InvalidPartition unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);
    int size() const { return outer.weight() - inner.weight(); }
    /// Number of nonempty columns.
    int width() const;
};

bool is_partition(const IntSequence& seq);

Partition intersect(const Partition& a, const Partition& b);
Partition add(const Partition& a, const Partition& b);
Partition transpose(const Partition& a);

/// a[n] = (n - |a|, a_1, a_2, ...); a partition only when n >= |a| + a_1.
IntSequence pad(const Partition& a, int n);
/// (a_2, a_3, ...)
Partition tail(const Partition& a);
/// (1 + a_1, ..., 1 + a_{i-1}, a_{i+1}, a_{i+2}, ...), trailing zeros dropped.
Partition dagger(const Partition& a, int i);
/// Removes the k-th part; unchanged when k exceeds the length.
Partition erase_part(const Partition& a, int k);

/// a_i <= b_i for every i.
bool contains(const Partition& outer, const Partition& inner);

/// Triangle inequalities on the three weights.
bool murnaghan_inequalities(const Partition& a, const Partition& b, const Partition& c);

/// Accepts "4,3,2", "[4,3,2]", "[]" and the empty string. Whitespace around
/// entries is ignored. Throws InvalidPartition on anything else.
Partition parse_partition(std::string_view text);
/// "[4,3,2]", "[]" for the empty partition.
std::string format_partition(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const IntSequence& s);

/// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);
/// Partitions of n with every part <= max_part and at most max_length parts.
std::vector<Partition> partitions_of(int n, int max_part, int max_length);
/// All partitions of every weight 0..max_weight, in Partition order.
std::vector<Partition> partitions_up_to(int max_weight);
/// Partitions of n contained in the given shape.
std::vector<Partition> partitions_inside(const Partition& shape, int n);

} // namespace kron

template <>
struct std::hash<kron::Partition> {
    std::size_t operator()(const kron::Partition& p) const noexcept { return p.hash(); }
};
