#include "kron/schur_expansion.hpp"

#include <algorithm>
#include <ostream>

namespace kron {

SchurExpansion::SchurExpansion(const Partition& shape, Integer coeff) { add_term(shape, coeff); }

SchurExpansion::SchurExpansion(std::initializer_list<std::pair<const Partition, Integer>> terms)
{
    for (const auto& [shape, c] : terms)
        add_term(shape, c);
}

void SchurExpansion::add_term(const Partition& shape, Integer coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(shape, coeff);
    if (inserted)
        return;
    it->second = checked_add(it->second, coeff);
    if (it->second == 0)
        terms_.erase(it);
}

Integer SchurExpansion::coefficient_of(const Partition& shape) const
{
    auto it = terms_.find(shape);
    return it == terms_.end() ? 0 : it->second;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o)
{
    for (const auto& [shape, c] : o.terms_)
        add_term(shape, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o)
{
    for (const auto& [shape, c] : o.terms_)
        add_term(shape, checked_sub(0, c));
    return *this;
}

SchurExpansion& SchurExpansion::operator*=(Integer c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [shape, v] : terms_)
        v = checked_mul(v, c);
    return *this;
}

std::string SchurExpansion::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [shape, c] : terms_) {
        Integer mag = c;
        if (first) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            mag = c < 0 ? -c : c;
        }
        first = false;
        if (mag != 1)
            out += std::to_string(mag);
        out += "s_{";
        for (std::size_t i = 0; i < shape.parts().size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(shape.parts()[i]);
        }
        out += '}';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SchurExpansion& f) { return os << f.to_string(); }

std::optional<Straightened> straighten(const IntSequence& seq)
{
    const int m = static_cast<int>(seq.size());
    std::vector<long> v(seq.entries.begin(), seq.entries.end());
    for (int i = 0; i < m; ++i)
        v[static_cast<std::size_t>(i)] += m - i;

    // Insertion sort into decreasing order, counting transpositions.
    int swaps = 0;
    for (int i = 1; i < m; ++i) {
        for (int j = i; j > 0 && v[static_cast<std::size_t>(j)] > v[static_cast<std::size_t>(j - 1)]; --j) {
            std::swap(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j - 1)]);
            ++swaps;
        }
    }
    for (int i = 0; i < m; ++i) {
        if (v[static_cast<std::size_t>(i)] <= 0)
            return std::nullopt; // the last column is all h_{negative}
        if (i > 0 && v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - 1)])
            return std::nullopt; // repeated column
    }
    std::vector<int> shape(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        shape[static_cast<std::size_t>(i)] = static_cast<int>(v[static_cast<std::size_t>(i)] - (m - i));
    return Straightened{swaps % 2 == 0 ? 1 : -1, Partition(std::move(shape))};
}

SchurExpansion shift_V(const SchurExpansion& f)
{
    SchurExpansion out;
    for (const auto& [shape, c] : f) {
        std::vector<int> parts = shape.parts();
        if (parts.empty())
            parts.push_back(1);
        else
            ++parts.front();
        out.add_term(Partition(std::move(parts)), c);
    }
    return out;
}

SchurExpansion lift_U(const SchurExpansion& f, int n)
{
    SchurExpansion out;
    for (const auto& [shape, c] : f) {
        if (auto s = straighten(pad(shape, n)))
            out.add_term(s->shape, s->sign > 0 ? c : checked_sub(0, c));
    }
    return out;
}

} // namespace kron
