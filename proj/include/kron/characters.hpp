#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "kron/integer.hpp"
#include "kron/partition.hpp"

namespace kron {

/// z_rho = prod_i i^{m_i} m_i!, where m_i is the multiplicity of i in rho.
BigInt centralizer_order(const Partition& rho);
/// n! / z_rho, the number of permutations of cycle type rho.
BigInt class_size(const Partition& rho);
BigInt factorial(int n);

/// Partitions of one degree n in canonical (lexicographically descending)
/// order, with reverse lookup and the matching conjugacy class sizes.
class DegreeIndex {
public:
    explicit DegreeIndex(int n);

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t size() const { return partitions_.size(); }
    /// -1 when p is not a partition of this degree.
    int index_of(const Partition& p) const;
    const std::vector<BigInt>& class_sizes() const { return class_sizes_; }
    const BigInt& order() const { return order_; }

private:
    int degree_;
    std::vector<Partition> partitions_;
    std::unordered_map<Partition, int> index_;
    std::vector<BigInt> class_sizes_;
    BigInt order_;
};

/// Full character table of S_n. Rows are irreducibles, columns are cycle
/// types, both in DegreeIndex order.
class CharacterTable {
public:
    CharacterTable(std::shared_ptr<const DegreeIndex> index, std::vector<Integer> values);

    const DegreeIndex& index() const { return *index_; }
    Integer value(std::size_t shape, std::size_t cls) const { return values_[shape * index_->size() + cls]; }
    std::span<const Integer> row(std::size_t shape) const
    {
        return {values_.data() + shape * index_->size(), index_->size()};
    }

private:
    std::shared_ptr<const DegreeIndex> index_;
    std::vector<Integer> values_;
};

/// Builds the whole table column by column: the column for rho is the Schur
/// expansion of the power sum p_rho, grown one border strip at a time along a
/// depth-first walk over rho's parts, so columns sharing small parts share work.
CharacterTable build_character_table(std::shared_ptr<const DegreeIndex> index,
                                     const std::vector<std::shared_ptr<const DegreeIndex>>& lower);

/// Memoized irreducible characters of the symmetric groups.
///
/// character() runs the Murnaghan-Nakayama recursion, stripping border strips
/// for the largest remaining cycle first and memoizing on (remaining shape,
/// remaining cycles). row() hands out whole rows chi^lambda(.) over the cycle
/// types of |lambda|; for degrees up to table_degree_limit() they come from a
/// full table, above it from the recursion.
///
/// All members are safe to call concurrently. Results never depend on what is
/// already cached.
class CharacterCache {
public:
    explicit CharacterCache(int table_degree_limit = 22) : table_limit_(table_degree_limit) {}

    /// chi^lambda(rho). Throws std::invalid_argument when |lambda| != |rho|.
    Integer character(const Partition& lambda, const Partition& rho);

    std::shared_ptr<const DegreeIndex> degree_index(int n);
    std::shared_ptr<const CharacterTable> table(int n);
    std::shared_ptr<const std::vector<Integer>> row(const Partition& lambda);

    int table_degree_limit() const { return table_limit_; }
    std::size_t memo_size() const;
    void clear();

private:
    struct Key {
        Partition shape;
        Partition cycles;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            return k.shape.hash() * 0x100000001b3ULL ^ k.cycles.hash();
        }
    };

    Integer murnaghan_nakayama(const Partition& lambda, const Partition& rho);

    int table_limit_;
    mutable std::mutex memo_mutex_;
    std::unordered_map<Key, Integer, KeyHash> memo_;
    std::mutex index_mutex_;
    std::unordered_map<int, std::shared_ptr<const DegreeIndex>> indices_;
    std::mutex table_mutex_;
    std::unordered_map<int, std::shared_ptr<const CharacterTable>> tables_;
    std::mutex row_mutex_;
    std::unordered_map<Partition, std::shared_ptr<const std::vector<Integer>>> rows_;
};

/// Process-wide cache used by the free functions of the higher modules.
CharacterCache& default_character_cache();

} // namespace kron
