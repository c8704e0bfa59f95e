#include "kron/partition.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kron/integer.hpp"

namespace kron {

namespace {

std::atomic<int> g_max_weight{64};

} // namespace

int max_weight() { return g_max_weight.load(std::memory_order_relaxed); }

void set_max_weight(int w)
{
    if (w < 0)
        throw std::invalid_argument("max weight must be nonnegative");
    g_max_weight.store(w, std::memory_order_relaxed);
}

void check_weight_limit(int n)
{
    if (n > max_weight())
        throw LimitExceeded("degree " + std::to_string(n) + " exceeds the configured maximum weight " +
                            std::to_string(max_weight()));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            std::ostringstream os;
            os << "not a partition: " << IntSequence(parts_);
            throw InvalidPartition(os.str());
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Partition> Partition::from_sequence(const IntSequence& seq)
{
    if (!is_partition(seq))
        return std::nullopt;
    return Partition(seq.entries);
}

std::strong_ordering Partition::operator<=>(const Partition& o) const
{
    if (auto c = weight_ <=> o.weight_; c != 0)
        return c;
    // Larger parts first within a weight.
    return std::lexicographical_compare_three_way(o.parts_.begin(), o.parts_.end(), parts_.begin(),
                                                  parts_.end());
}

std::size_t Partition::hash() const
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int p : parts_) {
        h ^= static_cast<std::size_t>(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i))
{
    if (!contains(outer, inner))
        throw InvalidPartition("skew shape " + format_partition(outer) + "/" + format_partition(inner) +
                               ": inner shape is not contained in outer shape");
}

int SkewShape::width() const
{
    Partition oc = transpose(outer), ic = transpose(inner);
    int w = 0;
    for (int c = 1; c <= outer.first(); ++c)
        if (oc.part(c) > ic.part(c))
            ++w;
    return w;
}

bool is_partition(const IntSequence& seq)
{
    const auto& e = seq.entries;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0)
            return false;
        if (i > 0 && e[i] > e[i - 1])
            return false;
    }
    return true;
}

Partition intersect(const Partition& a, const Partition& b)
{
    int len = std::min(a.length(), b.length());
    std::vector<int> r(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        r[static_cast<std::size_t>(i - 1)] = std::min(a.part(i), b.part(i));
    return Partition(std::move(r));
}

Partition add(const Partition& a, const Partition& b)
{
    int len = std::max(a.length(), b.length());
    std::vector<int> r(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        r[static_cast<std::size_t>(i - 1)] = a.part(i) + b.part(i);
    return Partition(std::move(r));
}

Partition transpose(const Partition& a)
{
    std::vector<int> r(static_cast<std::size_t>(a.first()), 0);
    for (int p : a.parts())
        for (int c = 0; c < p; ++c)
            ++r[static_cast<std::size_t>(c)];
    return Partition(std::move(r));
}

IntSequence pad(const Partition& a, int n)
{
    std::vector<int> r;
    r.reserve(a.parts().size() + 1);
    r.push_back(n - a.weight());
    r.insert(r.end(), a.parts().begin(), a.parts().end());
    return IntSequence(std::move(r));
}

Partition tail(const Partition& a)
{
    if (a.empty())
        return a;
    return Partition(std::vector<int>(a.parts().begin() + 1, a.parts().end()));
}

Partition dagger(const Partition& a, int i)
{
    if (i < 1)
        throw std::invalid_argument("dagger index must be positive");
    std::vector<int> r;
    int len = std::max(a.length(), i);
    r.reserve(static_cast<std::size_t>(len));
    for (int j = 1; j < i; ++j)
        r.push_back(a.part(j) + 1);
    for (int j = i + 1; j <= a.length(); ++j)
        r.push_back(a.part(j));
    return Partition(std::move(r));
}

Partition erase_part(const Partition& a, int k)
{
    if (k < 1)
        throw std::invalid_argument("erase_part index must be positive");
    if (k > a.length())
        return a;
    std::vector<int> r = a.parts();
    r.erase(r.begin() + (k - 1));
    return Partition(std::move(r));
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

bool murnaghan_inequalities(const Partition& a, const Partition& b, const Partition& c)
{
    int x = a.weight(), y = b.weight(), z = c.weight();
    return x <= y + z && y <= x + z && z <= x + y;
}

Partition parse_partition(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw InvalidPartition("unbalanced bracket in partition '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> parts;
    if (s.empty())
        return Partition();
    while (true) {
        auto comma = s.find(',');
        std::string_view item = trim(s.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value <= 0)
            throw InvalidPartition("bad part '" + std::string(item) + "' in partition '" + std::string(text) +
                                   "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p)
{
    std::string r = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            r += ',';
        r += std::to_string(p.parts()[i]);
    }
    r += ']';
    return r;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << format_partition(p); }

std::ostream& operator<<(std::ostream& os, const IntSequence& s)
{
    os << '(';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os << ')';
}

namespace {

void enumerate(int remaining, int max_part, int max_length, std::vector<int>& cur,
               std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_length == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // The rest must fit in max_length-1 parts of size <= p.
        if (static_cast<long>(p) * max_length < remaining)
            break;
        cur.push_back(p);
        enumerate(remaining - p, p, max_length - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n, n); }

std::vector<Partition> partitions_of(int n, int max_part, int max_length)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    enumerate(n, max_part, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight)
{
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ps = partitions_of(w);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> partitions_inside(const Partition& shape, int n)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(n, shape.first(), shape.length()))
        if (contains(shape, p))
            out.push_back(std::move(p));
    return out;
}

} // namespace kron
