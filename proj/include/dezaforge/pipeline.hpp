#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dezaforge/autiso.hpp"
#include "dezaforge/gf3.hpp"
#include "dezaforge/graph.hpp"
#include "dezaforge/permutation.hpp"

namespace dezaforge {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "deza-forge/1";

class UnknownGraph : public Error {
public:
  using Error::Error;
};

/// Names accepted by named_graph(), in a fixed order.
const std::vector<std::string>& graph_names();

/// gamma, gamma-s2, delta, gamma-k2, delta-k2, petersen, c5.
/// Throws UnknownGraph for anything else.
Graph named_graph(std::string_view name);

/// Vertex permutations of V(5,3) induced by -I, x and -x.
Permutation minus_identity_perm();
Permutation x_perm();
Permutation minus_x_perm();
/// Involution used to switch the 243-vertex graph: the one induced by x.
Permutation switching_involution();

/// Generators of the translation group of V(n,3): one per unit vector.
std::vector<Permutation> translation_generators(Eigen::Index n);

struct PipelineConfig {
  bool deep = false;
  unsigned threads = 1;
  /// Replaces the 11 S1 representatives (negative-control fixture).
  std::optional<std::vector<Gf3Vector>> s1_override;
  std::size_t aut_node_budget = AutOptions{}.node_budget;
};

/// Runs every construction and certificate in order and returns the report
/// {schema, tool_version, config, stages[], overall_pass}. Failed stages
/// embed their certificate or the error that stopped them.
nlohmann::json run_full_pipeline(const PipelineConfig& config);

/// Computes Aut(G) with the given seeds; on budget exhaustion falls back to
/// the lower bound from `fallback` and marks the result "lower-bound only".
nlohmann::json aut_stage_certificate(const Graph& g, const AutOptions& options,
                                     const std::vector<Permutation>& fallback, const GroupOrder& expected);

}  // namespace dezaforge
