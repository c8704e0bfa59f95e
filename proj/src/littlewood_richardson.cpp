#include "kron/littlewood_richardson.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace kron {

namespace {

struct MemoKey {
    Partition outer, inner, content;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept
    {
        std::size_t h = k.outer.hash();
        h = h * 0x100000001b3ULL ^ k.inner.hash();
        return h * 0x100000001b3ULL ^ k.content.hash();
    }
};

std::mutex g_memo_mutex;
std::unordered_map<MemoKey, Integer, MemoKeyHash> g_memo;

// Drops rows fully covered by the inner shape and the columns every remaining
// row has inside the inner shape. Neither changes the set of LR fillings.
std::pair<std::vector<int>, std::vector<int>> normal_form(const SkewShape& s)
{
    std::vector<int> outer, inner;
    for (int i = 1; i <= s.outer.length(); ++i) {
        if (s.outer.part(i) != s.inner.part(i)) {
            outer.push_back(s.outer.part(i));
            inner.push_back(s.inner.part(i));
        }
    }
    if (!inner.empty()) {
        const int offset = *std::min_element(inner.begin(), inner.end());
        for (std::size_t i = 0; i < outer.size(); ++i) {
            outer[i] -= offset;
            inner[i] -= offset;
        }
    }
    return {outer, inner};
}

class Filler {
public:
    Filler(std::vector<int> outer, std::vector<int> inner, const Partition& content)
        : outer_(std::move(outer)), inner_(std::move(inner)), content_(content.parts()),
          counts_(content_.size() + 1, 0)
    {
        for (std::size_t r = 0; r < outer_.size(); ++r) {
            grid_.emplace_back(static_cast<std::size_t>(outer_[r]), 0);
            for (int c = outer_[r] - 1; c >= inner_[r]; --c)
                cells_.emplace_back(static_cast<int>(r), c);
        }
    }

    Integer run() { return fill(0); }

private:
    Integer fill(std::size_t k)
    {
        if (k == cells_.size())
            return 1;
        const auto [r, c] = cells_[k];
        const auto ru = static_cast<std::size_t>(r);
        const auto cu = static_cast<std::size_t>(c);
        // Row weakly increasing: bounded by the right neighbour (filled earlier).
        int hi = static_cast<int>(content_.size());
        if (c + 1 < outer_[ru])
            hi = std::min(hi, grid_[ru][cu + 1]);
        // Column strictly increasing: above cell, when it is part of the skew shape.
        int lo = 1;
        if (r > 0 && c >= inner_[ru - 1])
            lo = grid_[ru - 1][cu] + 1;
        Integer total = 0;
        for (int v = lo; v <= hi; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (counts_[vu] >= content_[vu - 1])
                continue;
            if (v > 1 && counts_[vu] >= counts_[vu - 1])
                continue;
            ++counts_[vu];
            grid_[ru][cu] = v;
            total = checked_add(total, fill(k + 1));
            --counts_[vu];
        }
        grid_[ru][cu] = 0;
        return total;
    }

    std::vector<int> outer_, inner_;
    std::vector<int> content_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> grid_;
    std::vector<std::pair<int, int>> cells_;
};

} // namespace

LRTableauCounter::LRTableauCounter(SkewShape skew, Partition content)
    : skew_(std::move(skew)), content_(std::move(content))
{
}

Integer LRTableauCounter::count() const
{
    if (skew_.size() != content_.weight())
        return 0;
    auto [outer, inner] = normal_form(skew_);
    MemoKey key{Partition(outer), Partition(inner), content_};
    {
        std::lock_guard lock(g_memo_mutex);
        if (auto it = g_memo.find(key); it != g_memo.end())
            return it->second;
    }
    const Integer value = Filler(std::move(outer), std::move(inner), content_).run();
    std::lock_guard lock(g_memo_mutex);
    g_memo.emplace(std::move(key), value);
    return value;
}

std::size_t LRTableauCounter::memo_size()
{
    std::lock_guard lock(g_memo_mutex);
    return g_memo.size();
}

Integer lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda)
{
    if (lambda.weight() != mu.weight() + nu.weight() || !contains(lambda, mu) || !contains(lambda, nu))
        return 0;
    return LRTableauCounter(SkewShape(lambda, mu), nu).count();
}

Integer lr_triple(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& delta)
{
    if (delta.weight() != alpha.weight() + beta.weight() + gamma.weight())
        return 0;
    Integer total = 0;
    for (const auto& phi : partitions_inside(delta, alpha.weight() + beta.weight())) {
        const Integer outer = lr_coefficient(phi, gamma, delta);
        if (outer == 0)
            continue;
        total = checked_add(total, checked_mul(lr_coefficient(alpha, beta, phi), outer));
    }
    return total;
}

SchurExpansion skew_expansion(const SkewShape& shape)
{
    SchurExpansion out;
    for (const auto& kappa : partitions_inside(shape.outer, shape.size()))
        out.add_term(kappa, lr_coefficient(shape.inner, kappa, shape.outer));
    return out;
}

SchurExpansion perp(const SchurExpansion& skewer, const SchurExpansion& f)
{
    SchurExpansion out;
    for (const auto& [mu, a] : skewer) {
        for (const auto& [lambda, b] : f) {
            if (!contains(lambda, mu))
                continue;
            out += checked_mul(a, b) * skew_expansion(SkewShape(lambda, mu));
        }
    }
    return out;
}

SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g)
{
    SchurExpansion out;
    for (const auto& [mu, a] : f) {
        for (const auto& [nu, b] : g) {
            const Integer ab = checked_mul(a, b);
            for (const auto& lambda :
                 partitions_of(mu.weight() + nu.weight(), mu.first() + nu.first(), mu.length() + nu.length())) {
                if (!contains(lambda, mu) || !contains(lambda, nu))
                    continue;
                out.add_term(lambda, checked_mul(ab, lr_coefficient(mu, nu, lambda)));
            }
        }
    }
    return out;
}

} // namespace kron
