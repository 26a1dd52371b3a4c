#include "dezaforge/certify.hpp"

#include <algorithm>
#include <map>

#include "dezaforge/error.hpp"
#include "dezaforge/parallel.hpp"

namespace dezaforge {

using IntMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic>;

namespace {

PairWitness witness(const Graph& g, const IntMatrix& cn, std::size_t u, std::size_t w) {
  return {u, w, static_cast<std::size_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w))),
          g.adjacent(u, w)};
}

std::string degree_failure(const Graph& g) {
  const auto k0 = g.degree(0);
  for (std::size_t u = 1; u < g.order(); ++u)
    if (g.degree(u) != k0)
      return "graph is not regular: deg(0) = " + std::to_string(k0) + ", deg(" + std::to_string(u) +
             ") = " + std::to_string(g.degree(u));
  return {};
}

}  // namespace

std::size_t common_neighbors(const Graph& g, std::size_t u, std::size_t w) {
  if (u >= g.order() || w >= g.order()) throw InvalidPair("vertex outside the graph");
  if (u == w) throw InvalidPair("common neighbours of a vertex with itself (" + std::to_string(u) + ")");
  return g.common_neighbour_count(u, w);
}

IntMatrix common_neighbour_matrix(const Graph& g) {
  const auto v = static_cast<Eigen::Index>(g.order());
  IntMatrix cn(v, v);
  parallel_rows(g.order(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (std::size_t w = 0; w < g.order(); ++w)
        cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)) =
            static_cast<std::int32_t>(g.common_neighbour_count(u, w));
  });
  return cn;
}

bool srg_feasible(const SrgCertificate& c) {
  const auto v = static_cast<std::int64_t>(c.v), k = static_cast<std::int64_t>(c.k);
  const auto lambda = static_cast<std::int64_t>(c.lambda), mu = static_cast<std::int64_t>(c.mu);
  return k * (k - lambda - 1) == (v - k - 1) * mu;
}

SrgCertificate certify_srg(const Graph& g) {
  SrgCertificate c;
  c.v = g.order();
  if (c.v == 0) {
    c.failure = "empty vertex set";
    return c;
  }
  if (auto bad = degree_failure(g); !bad.empty()) {
    c.failure = bad;
    return c;
  }
  c.k = g.degree(0);
  if (c.k == 0 || c.k + 1 >= c.v) {
    c.failure = "degree must satisfy 0 < k < v-1";
    return c;
  }

  const IntMatrix cn = common_neighbour_matrix(g);
  std::optional<PairWitness> first_on, first_off;
  for (std::size_t u = 0; u < c.v && c.failure.empty(); ++u)
    for (std::size_t w = u + 1; w < c.v; ++w) {
      const auto pw = witness(g, cn, u, w);
      auto& first = pw.adjacent ? first_on : first_off;
      if (!first) {
        first = pw;
      } else if (first->common != pw.common) {
        c.failure = std::string(pw.adjacent ? "adjacent" : "non-adjacent") +
                    " pairs have more than one common-neighbour count";
        c.witnesses = {*first, pw};
        break;
      }
    }
  if (!c.failure.empty()) return c;
  c.lambda = first_on->common;
  c.mu = first_off->common;

  // Second route: the matrix identity A^2 = kI + lambda A + mu (J - I - A).
  const IntMatrix a = g.adjacency_matrix<std::int32_t>();
  const auto v = static_cast<Eigen::Index>(c.v);
  const IntMatrix id = IntMatrix::Identity(v, v);
  const IntMatrix rhs = static_cast<std::int32_t>(c.k) * id + static_cast<std::int32_t>(c.lambda) * a +
                        static_cast<std::int32_t>(c.mu) * (IntMatrix::Ones(v, v) - id - a);
  const IntMatrix lhs = a * a;
  if (lhs != rhs) {
    c.failure = "A^2 = kI + lambda A + mu (J - I - A) does not hold";
    return c;
  }
  c.pass = true;
  return c;
}

DezaCertificate certify_deza(const Graph& g) {
  DezaCertificate c;
  c.v = g.order();
  if (c.v < 2) {
    c.failure = "fewer than two vertices";
    return c;
  }
  if (auto bad = degree_failure(g); !bad.empty()) {
    c.failure = bad;
    return c;
  }
  c.k = g.degree(0);

  const IntMatrix cn = common_neighbour_matrix(g);
  std::map<std::size_t, PairWitness> first_by_value;
  for (std::size_t u = 0; u < c.v; ++u)
    for (std::size_t w = u + 1; w < c.v; ++w) {
      const auto value = static_cast<std::size_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)));
      if (!first_by_value.count(value)) first_by_value.emplace(value, witness(g, cn, u, w));
    }
  if (first_by_value.size() > 2) {
    c.failure = std::to_string(first_by_value.size()) + " distinct common-neighbour counts";
    for (const auto& [value, pw] : first_by_value) {
      if (c.witnesses.size() == 3) break;
      c.witnesses.push_back(pw);
    }
    return c;
  }
  c.b = first_by_value.rbegin()->first;
  c.a = first_by_value.begin()->first;

  c.beta_min = c.v;
  c.beta_max = 0;
  for (std::size_t u = 0; u < c.v; ++u) {
    std::size_t beta = 0;
    for (std::size_t w = 0; w < c.v; ++w)
      if (w != u && static_cast<std::size_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w))) == c.b)
        ++beta;
    c.beta_min = std::min(c.beta_min, beta);
    c.beta_max = std::max(c.beta_max, beta);
  }
  c.diameter = diameter(g);
  c.strongly_regular = certify_srg(g).pass;
  c.strict = c.diameter == 2 && !c.strongly_regular;
  c.pass = true;
  return c;
}

namespace {

// Tries the classes of "u ~ w iff cn(u,w) == value" (plus equality).
std::optional<DdgCertificate> ddg_from_relation(const Graph& g, const IntMatrix& cn, std::size_t value,
                                                std::size_t other, DdgCertificate& failure) {
  const std::size_t v = g.order();
  auto related = [&](std::size_t u, std::size_t w) {
    return u == w || static_cast<std::size_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w))) == value;
  };
  std::vector<std::int64_t> cls(v, -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t u = 0; u < v; ++u) {
    if (cls[u] >= 0) continue;
    std::vector<std::size_t> members;
    for (std::size_t w = 0; w < v; ++w)
      if (related(u, w)) members.push_back(w);
    for (auto w : members) {
      if (cls[w] >= 0) {
        failure.failure = "relation cn = " + std::to_string(value) + " is not transitive";
        failure.witnesses = {witness(g, cn, u, w)};
        return std::nullopt;
      }
      for (auto x : members)
        if (!related(w, x)) {
          failure.failure = "relation cn = " + std::to_string(value) + " is not transitive";
          failure.witnesses = {witness(g, cn, u, w), witness(g, cn, w, x), witness(g, cn, u, x)};
          return std::nullopt;
        }
      cls[w] = static_cast<std::int64_t>(classes.size());
    }
    classes.push_back(std::move(members));
  }
  const std::size_t n = classes.front().size();
  for (const auto& c : classes)
    if (c.size() != n) {
      failure.failure = "classes of the cn = " + std::to_string(value) + " relation have unequal sizes";
      return std::nullopt;
    }
  if (n < 2 || classes.size() < 2) {
    failure.failure = "relation cn = " + std::to_string(value) + " gives a trivial partition";
    return std::nullopt;
  }
  DdgCertificate c;
  c.pass = true;
  c.m = classes.size();
  c.n = n;
  c.lambda1 = value;
  c.lambda2 = other;
  c.partition = std::move(classes);
  return c;
}

}  // namespace

DdgCertificate certify_ddg(const Graph& g) {
  DdgCertificate fail;
  if (g.order() < 2) {
    fail.failure = "fewer than two vertices";
    return fail;
  }
  if (auto bad = degree_failure(g); !bad.empty()) {
    fail.failure = bad;
    return fail;
  }
  const IntMatrix cn = common_neighbour_matrix(g);
  std::vector<std::size_t> values;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t w = u + 1; w < g.order(); ++w) {
      const auto x = static_cast<std::size_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w)));
      if (std::find(values.begin(), values.end(), x) == values.end()) values.push_back(x);
    }
  if (values.size() != 2) {
    fail.failure = "need exactly two common-neighbour values, found " + std::to_string(values.size());
    return fail;
  }
  std::sort(values.begin(), values.end());
  const std::size_t a = values[0], b = values[1];
  if (auto c = ddg_from_relation(g, cn, b, a, fail)) return *c;
  DdgCertificate fail_b = fail;
  if (auto c = ddg_from_relation(g, cn, a, b, fail)) return *c;
  return fail_b;
}

std::size_t diameter(const Graph& g) {
  const std::size_t v = g.order();
  const std::size_t words = g.words();
  std::size_t best = 0;
  for (std::size_t src = 0; src < v; ++src) {
    std::vector<std::uint64_t> seen(words, 0), frontier(words, 0), next(words);
    seen[src >> 6] |= std::uint64_t{1} << (src & 63);
    frontier = seen;
    std::size_t reached = 1, depth = 0;
    while (reached < v) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t i = 0; i < words; ++i)
        for (auto word = frontier[i]; word; word &= word - 1) {
          const auto u = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
          const auto r = g.row(u);
          for (std::size_t j = 0; j < words; ++j) next[j] |= r[j];
        }
      std::size_t added = 0;
      for (std::size_t j = 0; j < words; ++j) {
        next[j] &= ~seen[j];
        seen[j] |= next[j];
        added += static_cast<std::size_t>(std::popcount(next[j]));
      }
      if (added == 0) return kInfiniteDiameter;
      reached += added;
      ++depth;
      frontier = next;
    }
    best = std::max(best, depth);
  }
  return best;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t t = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto w : g.neighbours(u)) {
      if (w <= u) continue;
      const auto a = g.row(u);
      const auto b = g.row(w);
      // Count x > w adjacent to both.
      for (std::size_t i = w >> 6; i < g.words(); ++i) {
        std::uint64_t word = a[i] & b[i];
        if (i == (w >> 6)) word &= (w & 63) == 63 ? 0 : ~std::uint64_t{0} << ((w & 63) + 1);
        t += static_cast<std::size_t>(std::popcount(word));
      }
    }
  return t;
}

nlohmann::json to_json(const PairWitness& w) {
  return {{"u", w.u}, {"w", w.w}, {"common", w.common}, {"adjacent", w.adjacent}};
}

namespace {
nlohmann::json witnesses_json(const std::vector<PairWitness>& ws) {
  auto arr = nlohmann::json::array();
  for (const auto& w : ws) arr.push_back(to_json(w));
  return arr;
}
}  // namespace

nlohmann::json to_json(const SrgCertificate& c) {
  nlohmann::json params = {{"v", c.v}, {"k", c.k}, {"lambda", c.lambda}, {"mu", c.mu}};
  if (c.r) params["r"] = *c.r;
  if (c.s) params["s"] = *c.s;
  if (c.r_multiplicity) params["r_multiplicity"] = *c.r_multiplicity;
  if (c.s_multiplicity) params["s_multiplicity"] = *c.s_multiplicity;
  nlohmann::json j = {{"type", "srg"}, {"parameters", params}, {"witnesses", witnesses_json(c.witnesses)},
                      {"pass", c.pass}};
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

nlohmann::json to_json(const DezaCertificate& c) {
  nlohmann::json params = {{"v", c.v},
                           {"k", c.k},
                           {"b", c.b},
                           {"a", c.a},
                           {"beta_min", c.beta_min},
                           {"beta_max", c.beta_max},
                           {"strongly_regular", c.strongly_regular},
                           {"strict", c.strict}};
  if (c.diameter == kInfiniteDiameter)
    params["diameter"] = "inf";
  else
    params["diameter"] = c.diameter;
  nlohmann::json j = {{"type", "deza"}, {"parameters", params}, {"witnesses", witnesses_json(c.witnesses)},
                      {"pass", c.pass}};
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

nlohmann::json to_json(const DdgCertificate& c) {
  nlohmann::json params = {{"m", c.m}, {"n", c.n}, {"lambda1", c.lambda1}, {"lambda2", c.lambda2},
                           {"partition", c.partition}};
  nlohmann::json j = {{"type", "ddg"}, {"parameters", params}, {"witnesses", witnesses_json(c.witnesses)},
                      {"pass", c.pass}};
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

}  // namespace dezaforge
