#include "kron/json_io.hpp"

namespace kron {

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const SchurExpansion& f)
{
    auto out = nlohmann::json::array();
    for (const auto& [shape, c] : f)
        out.push_back({{"partition", to_json(shape)}, {"coeff", c}});
    return out;
}

nlohmann::json to_json(const SupportTable& s)
{
    return {{"alpha", to_json(s.alpha())},
            {"beta", to_json(s.beta())},
            {"support", to_json(s.as_expansion())},
            {"max_weight", s.max_weight()},
            {"min_weight", s.min_weight()},
            {"max_first_row", s.max_part(1)}};
}

nlohmann::json to_json(const BoundReport& r)
{
    return {{"triple", {to_json(r.triple[0]), to_json(r.triple[1]), to_json(r.triple[2])}},
            {"reduced", r.reduced_value},
            {"stab", r.stab_empirical},
            {"N1", r.n1},
            {"M1", r.m1_three_ways},
            {"N2", r.n2},
            {"NB", r.nb},
            {"NV", r.nv},
            {"consistent", r.consistent()}};
}

nlohmann::json to_json(const verify::CheckResult& r)
{
    return {{"key", r.key},
            {"description", r.description},
            {"passed", r.passed},
            {"detail", r.detail},
            {"seconds", r.seconds}};
}

} // namespace kron
