#pragma once

#include <nlohmann/json.hpp>

#include "kron/partition.hpp"
#include "kron/reduced_kronecker.hpp"
#include "kron/schur_expansion.hpp"
#include "kron/stability_bounds.hpp"
#include "kron/verify.hpp"

namespace kron {

nlohmann::json to_json(const Partition& p);
/// [{"partition": [...], "coeff": c}, ...] in canonical order.
nlohmann::json to_json(const SchurExpansion& f);
nlohmann::json to_json(const SupportTable& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const verify::CheckResult& r);

} // namespace kron
