#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "dezaforge/graph.hpp"

namespace dezaforge {

inline constexpr std::size_t kInfiniteDiameter = std::numeric_limits<std::size_t>::max();

struct PairWitness {
  std::size_t u = 0;
  std::size_t w = 0;
  std::size_t common = 0;
  bool adjacent = false;
};

struct SrgCertificate {
  bool pass = false;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  // Restricted eigenvalues and multiplicities; see attach_srg_eigenvalues().
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> s;
  std::optional<std::size_t> r_multiplicity;
  std::optional<std::size_t> s_multiplicity;
  std::string failure;
  std::vector<PairWitness> witnesses;
};

struct DezaCertificate {
  bool pass = false;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  std::size_t a = 0;
  std::size_t beta_min = 0;
  std::size_t beta_max = 0;
  std::size_t diameter = kInfiniteDiameter;
  bool strongly_regular = false;
  bool strict = false;
  std::string failure;
  std::vector<PairWitness> witnesses;
};

struct DdgCertificate {
  bool pass = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t lambda1 = 0;
  std::size_t lambda2 = 0;
  std::vector<std::vector<std::size_t>> partition;
  std::string failure;
  std::vector<PairWitness> witnesses;
};

/// |G(u) n G(w)|; throws InvalidPair for u == w or out-of-range vertices.
std::size_t common_neighbors(const Graph& g, std::size_t u, std::size_t w);
/// A^2 as an integer matrix (diagonal = degrees), by row-intersection popcounts.
Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic> common_neighbour_matrix(const Graph& g);

SrgCertificate certify_srg(const Graph& g);
DezaCertificate certify_deza(const Graph& g);
DdgCertificate certify_ddg(const Graph& g);

/// Largest BFS eccentricity, or kInfiniteDiameter when disconnected.
std::size_t diameter(const Graph& g);
std::size_t triangle_count(const Graph& g);

/// k(k - lambda - 1) == (v - k - 1) mu.
bool srg_feasible(const SrgCertificate& c);

nlohmann::json to_json(const PairWitness& w);
nlohmann::json to_json(const SrgCertificate& c);
nlohmann::json to_json(const DezaCertificate& c);
nlohmann::json to_json(const DdgCertificate& c);

}  // namespace dezaforge
