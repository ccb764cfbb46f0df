#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadrica/apolarity.hpp"
#include "quadrica/arrangement.hpp"
#include "quadrica/formula.hpp"
#include "quadrica/oracle.hpp"

namespace quadrica {

using ordered_json = nlohmann::ordered_json;

/// Configuration schema: {"n": int, "prime": int, "spaces": [{"basis":
/// [[int,...],...]}]} where each basis row is a spanning point (n+1
/// integers, reduced mod prime on load).
Configuration configuration_from_json(const ordered_json& j);
ordered_json configuration_to_json(const Configuration& c);

ordered_json report_to_json(const OracleReport& r);
ordered_json expectation_to_json(int n, const std::vector<int>& weights,
                                 const Expectation& e);
ordered_json fiber_report_to_json(int n, const std::vector<int>& weights,
                                  const FiberReport& r);

/// Decomposition schema: {"n": int, "families": [[[int,...],...],...],
/// "target": [int,...]} with the target optional and in the fixed quadric
/// monomial order.
struct DecompositionInput {
    int n;
    std::vector<FormFamily> families;
    std::optional<std::vector<std::int64_t>> target;
};

DecompositionInput decomposition_from_json(const ordered_json& j);

ordered_json witness_to_json(const PrimeWitness& w);
ordered_json witness_to_json(const ExactWitness& w);

/// Rational rendering used by the exact witness: "a" or "a/b", canonical.
std::string to_string(const mpq_class& q);

} // namespace quadrica
