#include "kron/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kron {

namespace {

// Beta-set (abacus) encoding with exactly `beads` beads, strictly decreasing.
std::vector<int> to_beads(const Partition& p, int beads)
{
    std::vector<int> b(static_cast<std::size_t>(beads));
    for (int k = 1; k <= beads; ++k)
        b[static_cast<std::size_t>(k - 1)] = p.part(k) + beads - k;
    return b;
}

Partition from_beads(std::vector<int> b)
{
    std::sort(b.begin(), b.end(), std::greater<>());
    const int beads = static_cast<int>(b.size());
    std::vector<int> parts(b.size());
    for (int k = 1; k <= beads; ++k)
        parts[static_cast<std::size_t>(k - 1)] = b[static_cast<std::size_t>(k - 1)] - (beads - k);
    return Partition(std::move(parts));
}

int beads_between(const std::vector<int>& beads, int lo, int hi)
{
    int c = 0;
    for (int x : beads)
        if (x > lo && x < hi)
            ++c;
    return c;
}

} // namespace

BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt centralizer_order(const Partition& rho)
{
    BigInt z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts())
        ++mult[p];
    for (auto [part, m] : mult) {
        for (int k = 0; k < m; ++k)
            z *= part;
        z *= factorial(m);
    }
    return z;
}

BigInt class_size(const Partition& rho) { return factorial(rho.weight()) / centralizer_order(rho); }

DegreeIndex::DegreeIndex(int n) : degree_(n), partitions_(partitions_of(n)), order_(factorial(n))
{
    index_.reserve(partitions_.size());
    class_sizes_.reserve(partitions_.size());
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        index_.emplace(partitions_[i], static_cast<int>(i));
        class_sizes_.push_back(order_ / centralizer_order(partitions_[i]));
    }
}

int DegreeIndex::index_of(const Partition& p) const
{
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

CharacterTable::CharacterTable(std::shared_ptr<const DegreeIndex> index, std::vector<Integer> values)
    : index_(std::move(index)), values_(std::move(values))
{
    if (values_.size() != index_->size() * index_->size())
        throw std::invalid_argument("character table has the wrong number of entries");
}

CharacterTable build_character_table(std::shared_ptr<const DegreeIndex> index,
                                     const std::vector<std::shared_ptr<const DegreeIndex>>& lower)
{
    const int n = index->degree();
    const std::size_t width = index->size();
    std::vector<Integer> values(width * width, 0);

    // cycles holds rho's parts in increasing order along the current path;
    // coeffs is the expansion of p_cycles over partitions of the current weight.
    std::vector<int> cycles;
    std::function<void(int, int, const std::vector<Integer>&)> walk =
        [&](int weight, int min_part, const std::vector<Integer>& coeffs) {
            if (weight == n) {
                std::vector<int> rho(cycles.rbegin(), cycles.rend());
                const auto col = static_cast<std::size_t>(index->index_of(Partition(std::move(rho))));
                for (std::size_t i = 0; i < width; ++i)
                    values[i * width + col] = coeffs[i];
                return;
            }
            const auto& from = *lower[static_cast<std::size_t>(weight)];
            for (int r = min_part; r <= n - weight; ++r) {
                // Later parts are >= r, so the remainder must be 0 or at least r.
                if (n - weight - r != 0 && n - weight - r < r)
                    continue;
                const auto& to = *lower[static_cast<std::size_t>(weight + r)];
                std::vector<Integer> next(to.size(), 0);
                for (std::size_t i = 0; i < from.size(); ++i) {
                    const Integer c = coeffs[i];
                    if (c == 0)
                        continue;
                    const Partition& mu = from.partitions()[i];
                    std::vector<int> beads = to_beads(mu, mu.length() + r);
                    for (std::size_t k = 0; k < beads.size(); ++k) {
                        const int b = beads[k];
                        const int t = b + r;
                        if (std::find(beads.begin(), beads.end(), t) != beads.end())
                            continue;
                        const bool odd = beads_between(beads, b, t) % 2 == 1;
                        std::vector<int> moved = beads;
                        moved[k] = t;
                        const auto j = static_cast<std::size_t>(to.index_of(from_beads(std::move(moved))));
                        next[j] = odd ? checked_sub(next[j], c) : checked_add(next[j], c);
                    }
                }
                cycles.push_back(r);
                walk(weight + r, r, next);
                cycles.pop_back();
            }
        };
    walk(0, 1, std::vector<Integer>{1});
    return CharacterTable(std::move(index), std::move(values));
}

Integer CharacterCache::character(const Partition& lambda, const Partition& rho)
{
    if (lambda.weight() != rho.weight())
        throw std::invalid_argument("character: |" + format_partition(lambda) + "| != |" + format_partition(rho) +
                                    "|");
    check_weight_limit(lambda.weight());
    return murnaghan_nakayama(lambda, rho);
}

Integer CharacterCache::murnaghan_nakayama(const Partition& lambda, const Partition& rho)
{
    if (rho.empty())
        return 1;
    Key key{lambda, rho};
    {
        std::lock_guard lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    const int r = rho.first();
    const Partition rest = tail(rho);
    const std::vector<int> beads = to_beads(lambda, lambda.length());
    Integer total = 0;
    for (std::size_t k = 0; k < beads.size(); ++k) {
        const int b = beads[k];
        const int t = b - r;
        if (t < 0 || std::find(beads.begin(), beads.end(), t) != beads.end())
            continue;
        std::vector<int> moved = beads;
        moved[k] = t;
        const Integer sub = murnaghan_nakayama(from_beads(std::move(moved)), rest);
        total = beads_between(beads, t, b) % 2 == 1 ? checked_sub(total, sub) : checked_add(total, sub);
    }
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(std::move(key), total);
    return total;
}

std::shared_ptr<const DegreeIndex> CharacterCache::degree_index(int n)
{
    std::lock_guard lock(index_mutex_);
    auto& slot = indices_[n];
    if (!slot)
        slot = std::make_shared<const DegreeIndex>(n);
    return slot;
}

std::shared_ptr<const CharacterTable> CharacterCache::table(int n)
{
    check_weight_limit(n);
    std::lock_guard lock(table_mutex_);
    if (auto it = tables_.find(n); it != tables_.end())
        return it->second;
    std::vector<std::shared_ptr<const DegreeIndex>> lower;
    for (int w = 0; w <= n; ++w)
        lower.push_back(degree_index(w));
    auto t = std::make_shared<const CharacterTable>(build_character_table(degree_index(n), lower));
    tables_.emplace(n, t);
    return t;
}

std::shared_ptr<const std::vector<Integer>> CharacterCache::row(const Partition& lambda)
{
    const int n = lambda.weight();
    check_weight_limit(n);
    if (n <= table_limit_) {
        auto t = table(n);
        auto r = t->row(static_cast<std::size_t>(t->index().index_of(lambda)));
        return std::make_shared<const std::vector<Integer>>(r.begin(), r.end());
    }
    {
        std::lock_guard lock(row_mutex_);
        if (auto it = rows_.find(lambda); it != rows_.end())
            return it->second;
    }
    auto idx = degree_index(n);
    auto values = std::make_shared<std::vector<Integer>>();
    values->reserve(idx->size());
    for (const auto& rho : idx->partitions())
        values->push_back(murnaghan_nakayama(lambda, rho));
    std::lock_guard lock(row_mutex_);
    return rows_.emplace(lambda, std::move(values)).first->second;
}

std::size_t CharacterCache::memo_size() const
{
    std::lock_guard lock(memo_mutex_);
    return memo_.size();
}

void CharacterCache::clear()
{
    {
        std::lock_guard lock(memo_mutex_);
        memo_.clear();
    }
    {
        std::lock_guard lock(table_mutex_);
        tables_.clear();
    }
    std::lock_guard lock(row_mutex_);
    rows_.clear();
}

CharacterCache& default_character_cache()
{
    static CharacterCache cache;
    return cache;
}

} // namespace kron
