#include "dezaforge/autiso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "dezaforge/certify.hpp"

namespace dezaforge {

AutSearchExhausted::AutSearchExhausted(std::vector<Permutation> generators, GroupOrder lower_bound, std::size_t nodes)
    : Error("automorphism search exceeded its node budget after " + std::to_string(nodes) +
            " nodes; proven lower bound " + lower_bound.str()),
      generators_(std::move(generators)),
      lower_bound_(std::move(lower_bound)),
      nodes_(nodes) {}

NotAnAutomorphism::NotAnAutomorphism(std::size_t generator, std::pair<std::size_t, std::size_t> pair)
    : Error("generator " + std::to_string(generator) + " is not an automorphism: pair (" + std::to_string(pair.first) +
            ", " + std::to_string(pair.second) + ") is not preserved"),
      generator_(generator),
      pair_(pair) {}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running state
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Bit rows of one or more symmetric relations on the vertex set.
struct Relations {
  std::size_t v = 0;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  std::span<const std::uint64_t> row(std::size_t r, std::size_t u) const {
    return {rows[r].data() + u * words, words};
  }
};

Relations adjacency_relation(const Graph& g) {
  Relations rel{g.order(), g.words(), {}};
  std::vector<std::uint64_t> bits(g.order() * g.words());
  for (std::size_t u = 0; u < g.order(); ++u) std::copy(g.row(u).begin(), g.row(u).end(), bits.begin() + u * g.words());
  rel.rows.push_back(std::move(bits));
  return rel;
}

// Pair type of {u, w}: (adjacent, common neighbours) encoded as 2*cn + adj.
std::vector<std::uint32_t> pair_types(const Graph& g, std::vector<std::uint32_t>& distinct) {
  const auto cn = common_neighbour_matrix(g);
  const std::size_t v = g.order();
  std::vector<std::uint32_t> type(v * v, 0);
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w)
      if (u != w)
        type[u * v + w] = 2u * static_cast<std::uint32_t>(cn(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w))) +
                          (g.adjacent(u, w) ? 1u : 0u);
  distinct.clear();
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w)
      if (u != w) distinct.push_back(type[u * v + w]);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return type;
}

/// One relation per pair type except the most frequent one, whose counts are
/// implied by the others.
Relations pair_type_relations(const Graph& g) {
  std::vector<std::uint32_t> distinct;
  const auto type = pair_types(g, distinct);
  const std::size_t v = g.order();
  Relations rel{v, g.words(), {}};
  if (distinct.size() <= 1) return rel;

  std::vector<std::size_t> freq(distinct.size(), 0);
  for (std::size_t i = 0; i < v * v; ++i) {
    if (i / v == i % v) continue;
    ++freq[static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), type[i]) - distinct.begin())];
  }
  const auto dropped = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  for (std::size_t t = 0; t < distinct.size(); ++t) {
    if (t == dropped) continue;
    std::vector<std::uint64_t> bits(v * rel.words, 0);
    for (std::size_t u = 0; u < v; ++u)
      for (std::size_t w = 0; w < v; ++w)
        if (u != w && type[u * v + w] == distinct[t]) bits[u * rel.words + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    rel.rows.push_back(std::move(bits));
  }
  return rel;
}

/// Ordered partition of the vertex set: cells are contiguous runs of lab.
class OrderedPartition {
public:
  explicit OrderedPartition(std::span<const std::uint32_t> colouring) {
    const std::size_t v = colouring.size();
    lab_.resize(v);
    std::iota(lab_.begin(), lab_.end(), 0u);
    std::stable_sort(lab_.begin(), lab_.end(), [&](std::uint32_t a, std::uint32_t b) { return colouring[a] < colouring[b]; });
    pos_.resize(v);
    start_of_.resize(v);
    len_.assign(v, 0);
    for (std::size_t i = 0; i < v;) {
      std::size_t j = i;
      while (j < v && colouring[lab_[j]] == colouring[lab_[i]]) ++j;
      len_[i] = static_cast<std::uint32_t>(j - i);
      for (std::size_t k = i; k < j; ++k) start_of_[lab_[k]] = static_cast<std::uint32_t>(i);
      ++cells_;
      trace_ = mix(trace_, j - i);
      i = j;
    }
    for (std::size_t i = 0; i < v; ++i) pos_[lab_[i]] = static_cast<std::uint32_t>(i);
  }

  std::size_t size() const { return lab_.size(); }
  bool discrete() const { return cells_ == lab_.size(); }
  std::size_t cells() const { return cells_; }
  std::uint64_t trace() const { return trace_; }
  const std::vector<std::uint32_t>& lab() const { return lab_; }

  std::vector<std::uint32_t> cell_starts() const {
    std::vector<std::uint32_t> out;
    for (std::size_t s = 0; s < lab_.size(); s += len_[s]) out.push_back(static_cast<std::uint32_t>(s));
    return out;
  }

  /// Smallest non-singleton cell, first on ties; returns (start, length).
  std::pair<std::size_t, std::size_t> target_cell() const {
    std::pair<std::size_t, std::size_t> best{lab_.size(), lab_.size() + 1};
    for (std::size_t s = 0; s < lab_.size(); s += len_[s])
      if (len_[s] > 1 && len_[s] < best.second) best = {s, len_[s]};
    return best;
  }

  /// Colour of each vertex = index of its cell in partition order.
  std::vector<std::uint32_t> colours() const {
    std::vector<std::uint32_t> out(lab_.size());
    std::uint32_t c = 0;
    for (std::size_t s = 0; s < lab_.size(); s += len_[s], ++c)
      for (std::size_t i = s; i < s + len_[s]; ++i) out[lab_[i]] = c;
    return out;
  }

  void refine(const Relations& rel, std::deque<std::uint32_t> queue) {
    const std::size_t v = lab_.size();
    std::vector<char> queued(v, 0);
    for (auto s : queue) queued[s] = 1;
    std::vector<std::uint64_t> splitter(rel.words);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> scratch;

    while (!queue.empty() && !discrete()) {
      const auto w_start = queue.front();
      queue.pop_front();
      queued[w_start] = 0;
      std::fill(splitter.begin(), splitter.end(), 0);
      for (std::size_t i = w_start; i < w_start + len_[w_start]; ++i)
        splitter[lab_[i] >> 6] |= std::uint64_t{1} << (lab_[i] & 63);
      trace_ = mix(trace_, (std::uint64_t{w_start} << 32) | len_[w_start]);

      for (std::size_t r = 0; r < rel.rows.size(); ++r) {
        for (std::size_t s = 0; s < v;) {
          const std::size_t len = len_[s];
          if (len == 1) {
            ++s;
            continue;
          }
          scratch.clear();
          bool uniform = true;
          for (std::size_t i = s; i < s + len; ++i) {
            const auto row = rel.row(r, lab_[i]);
            std::uint32_t c = 0;
            for (std::size_t k = 0; k < rel.words; ++k) c += static_cast<std::uint32_t>(std::popcount(row[k] & splitter[k]));
            scratch.emplace_back(c, lab_[i]);
            if (c != scratch.front().first) uniform = false;
          }
          if (!uniform) split(s, len, scratch, queue, queued);
          s += len;
        }
      }
    }
  }

  void individualize(std::uint32_t x) {
    const std::size_t s = start_of_[x];
    const std::size_t len = len_[s];
    const std::uint32_t y = lab_[s];
    const std::uint32_t px = pos_[x];
    lab_[s] = x;
    lab_[px] = y;
    pos_[x] = static_cast<std::uint32_t>(s);
    pos_[y] = px;
    len_[s] = 1;
    len_[s + 1] = static_cast<std::uint32_t>(len - 1);
    for (std::size_t i = s + 1; i < s + len; ++i) start_of_[lab_[i]] = static_cast<std::uint32_t>(s + 1);
    ++cells_;
    trace_ = mix(trace_, 0xff00000000ULL | s);
  }

  std::size_t start_of(std::uint32_t x) const { return start_of_[x]; }

private:
  void split(std::size_t s, std::size_t len, std::vector<std::pair<std::uint32_t, std::uint32_t>>& counted,
             std::deque<std::uint32_t>& queue, std::vector<char>& queued) {
    std::stable_sort(counted.begin(), counted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, std::size_t>> parts;  // (start, length)
    for (std::size_t i = 0; i < len; ++i) {
      lab_[s + i] = counted[i].second;
      pos_[counted[i].second] = static_cast<std::uint32_t>(s + i);
      if (i == 0 || counted[i].first != counted[i - 1].first) parts.emplace_back(s + i, 0);
      ++parts.back().second;
      trace_ = mix(trace_, counted[i].first);
    }
    std::size_t largest = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto [ps, pl] = parts[p];
      len_[ps] = static_cast<std::uint32_t>(pl);
      for (std::size_t i = ps; i < ps + pl; ++i) start_of_[lab_[i]] = static_cast<std::uint32_t>(ps);
      if (pl > parts[largest].second) largest = p;
      trace_ = mix(trace_, (std::uint64_t{ps} << 32) | pl);
    }
    cells_ += parts.size() - 1;

    const bool whole_was_queued = queued[s];
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const auto ps = parts[p].first;
      if (queued[ps]) continue;
      if (!whole_was_queued && p == largest) continue;
      queued[ps] = 1;
      queue.push_back(static_cast<std::uint32_t>(ps));
    }
  }

  std::vector<std::uint32_t> lab_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> start_of_;
  std::vector<std::uint32_t> len_;  // valid at cell starts
  std::size_t cells_ = 0;
  std::uint64_t trace_ = 0;
};

std::deque<std::uint32_t> all_cells(const OrderedPartition& p) {
  const auto starts = p.cell_starts();
  return {starts.begin(), starts.end()};
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class AutSearch {
public:
  AutSearch(const Graph& g, const AutOptions& options)
      : g_(g), options_(options), relations_(pair_type_relations(g)) {
    if (relations_.rows.empty()) relations_ = adjacency_relation(g);
    for (std::size_t i = 0; i < options.seeds.size(); ++i) {
      if (auto bad = automorphism_violation(g, options.seeds[i])) throw NotAnAutomorphism(i, *bad);
      if (!options.seeds[i].is_identity()) known_.push_back(options.seeds[i]);
    }
  }

  AutResult run() {
    const auto colouring = pair_invariant_colouring(g_);
    OrderedPartition root(colouring);
    root.refine(relations_, all_cells(root));
    ++nodes_;

    path_.push_back(root);
    while (!path_.back().discrete()) {
      const auto [s, len] = path_.back().target_cell();
      const auto b = path_.back().lab()[s];
      base_.push_back(b);
      path_.push_back(child(path_.back(), b));
    }
    first_leaf_ = path_.back().lab();

    std::vector<std::size_t> orbit_sizes(base_.size(), 1);
    for (std::size_t level = base_.size(); level-- > 0;) {
      const auto& node = path_[level];
      const auto [s, len] = node.target_cell();
      const std::vector<std::uint32_t> cell(node.lab().begin() + static_cast<std::ptrdiff_t>(s),
                                            node.lab().begin() + static_cast<std::ptrdiff_t>(s + len));
      auto orbit = basic_orbit(level);
      for (auto w : cell) {
        if (orbit[w]) continue;
        OrderedPartition c = child(node, w);
        if (c.trace() != path_[level + 1].trace()) continue;
        std::vector<std::uint32_t> points(base_.begin(), base_.begin() + static_cast<std::ptrdiff_t>(level));
        points.push_back(w);
        if (auto gamma = search(c, level + 1, points)) {
          known_.push_back(std::move(*gamma));
          orbit = basic_orbit(level);
        }
      }
      orbit_sizes[level] = static_cast<std::size_t>(std::count(orbit.begin(), orbit.end(), true));
    }

    AutResult result;
    result.generators = known_;
    std::sort(result.generators.begin(), result.generators.end());
    result.generators.erase(std::unique(result.generators.begin(), result.generators.end()), result.generators.end());
    result.order = 1;
    for (auto sz : orbit_sizes) result.order *= sz;
    const GroupOrder generated = group_order(result.generators);
    if (generated != result.order)
      throw Error("automorphism search inconsistency: orbit product " + result.order.str() +
                  " but generators give order " + generated.str());
    UnionFind uf(g_.order());
    for (const auto& p : result.generators)
      for (std::size_t i = 0; i < p.degree(); ++i) uf.unite(static_cast<std::uint32_t>(i), p[i]);
    for (std::size_t i = 0; i < g_.order(); ++i) result.orbit_count += uf.find(static_cast<std::uint32_t>(i)) == i;
    result.nodes_searched = nodes_;
    result.base = base_;
    result.basic_orbit_sizes = orbit_sizes;
    return result;
  }

private:
  OrderedPartition child(const OrderedPartition& parent, std::uint32_t x) {
    if (++nodes_ > options_.node_budget) {
      std::vector<Permutation> gens = known_;
      throw AutSearchExhausted(gens, group_order(gens), nodes_);
    }
    OrderedPartition c = parent;
    c.individualize(x);
    c.refine(relations_, {static_cast<std::uint32_t>(c.start_of(x))});
    return c;
  }

  // Orbit of base_[level] under the pointwise stabilizer of the earlier
  // base points inside the group generated so far.
  std::vector<bool> basic_orbit(std::size_t level) const {
    std::vector<bool> in(g_.order(), false);
    if (known_.empty()) {
      in[base_[level]] = true;
      return in;
    }
    const std::span<const std::uint32_t> prefix(base_.data(), level + 1);
    StabilizerChain chain(g_.order(), known_, prefix);
    for (auto p : chain.basic_orbit(level)) in[p] = true;
    return in;
  }

  std::optional<Permutation> search(const OrderedPartition& node, std::size_t depth, std::vector<std::uint32_t>& points) {
    if (node.discrete()) {
      std::vector<std::uint32_t> images(g_.order());
      for (std::size_t i = 0; i < images.size(); ++i) images[first_leaf_[i]] = node.lab()[i];
      Permutation gamma(std::move(images));
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }

    // Known automorphisms fixing the current path pointwise make candidates
    // in one orbit equivalent.
    UnionFind uf(g_.order());
    for (const auto& p : known_) {
      if (!std::all_of(points.begin(), points.end(), [&](std::uint32_t x) { return p[x] == x; })) continue;
      for (std::size_t i = 0; i < p.degree(); ++i) uf.unite(static_cast<std::uint32_t>(i), p[i]);
    }

    const auto [s, len] = node.target_cell();
    std::vector<std::uint32_t> tried;
    for (std::size_t i = s; i < s + len; ++i) {
      const auto z = node.lab()[i];
      const auto root = uf.find(z);
      if (std::any_of(tried.begin(), tried.end(), [&](std::uint32_t t) { return uf.find(t) == root; })) continue;
      tried.push_back(z);
      OrderedPartition c = child(node, z);
      if (c.trace() != path_[depth + 1].trace()) continue;
      points.push_back(z);
      auto found = search(c, depth + 1, points);
      points.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const AutOptions& options_;
  Relations relations_;
  std::vector<Permutation> known_;
  std::vector<OrderedPartition> path_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> first_leaf_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<std::uint32_t> refine(const Graph& g, std::span<const std::uint32_t> colouring) {
  if (colouring.size() != g.order()) throw ShapeError("colouring length differs from the vertex count");
  OrderedPartition p(colouring);
  p.refine(adjacency_relation(g), all_cells(p));
  return p.colours();
}

std::vector<std::uint32_t> pair_invariant_colouring(const Graph& g) {
  std::vector<std::uint32_t> distinct;
  const auto type = pair_types(g, distinct);
  const std::size_t v = g.order();
  std::vector<std::vector<std::uint32_t>> profile(v, std::vector<std::uint32_t>(distinct.size(), 0));
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w)
      if (u != w)
        ++profile[u][static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), type[u * v + w]) -
                                              distinct.begin())];
  std::map<std::vector<std::uint32_t>, std::uint32_t> colour_of;
  for (const auto& p : profile) colour_of.emplace(p, 0);
  std::uint32_t next = 0;
  for (auto& [p, c] : colour_of) c = next++;
  std::vector<std::uint32_t> out(v);
  for (std::size_t u = 0; u < v; ++u) out[u] = colour_of[profile[u]];
  return out;
}

AutResult automorphism_group(const Graph& g, const AutOptions& options) {
  if (g.order() > options.max_vertices)
    throw PreconditionError("graph has " + std::to_string(g.order()) + " vertices; ceiling is " +
                            std::to_string(options.max_vertices));
  if (g.order() == 0) return {};
  return AutSearch(g, options).run();
}

GroupOrder verify_subgroup(const Graph& g, std::span<const Permutation> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (auto bad = automorphism_violation(g, gens[i])) throw NotAnAutomorphism(i, *bad);
  return group_order(gens);
}

LinearIsomorphism find_linear_cayley_isomorphism(const ConnectionSet& a, const ConnectionSet& b) {
  LinearIsomorphism out;
  const Eigen::Index n = a.dimension();
  if (b.dimension() != n || a.size() != b.size()) return out;

  // Greedy basis of span(S_a) from its vectors in index order.
  std::vector<Gf3Vector> basis;
  Gf3Matrix rows(0, n);
  for (const auto& s : a.vectors()) {
    Gf3Matrix trial(rows.rows() + 1, n);
    trial << rows, s;
    if (rank(trial) == trial.rows()) {
      rows = trial;
      basis.push_back(s);
    }
    if (static_cast<Eigen::Index>(basis.size()) == n) break;
  }
  if (static_cast<Eigen::Index>(basis.size()) != n) return out;  // S_a does not span; not handled
  const Gf3Matrix basis_inv = inverse(rows);

  // Coordinates of every s in the basis; a vector is checked once the
  // highest basis index it uses has been assigned.
  struct Coord {
    Gf3Vector alpha;
    Eigen::Index last;
  };
  std::vector<std::vector<Coord>> checks(static_cast<std::size_t>(n));
  for (const auto& s : a.vectors()) {
    Gf3Vector alpha = s * basis_inv;
    Eigen::Index last = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (alpha(j) != Gf3(0)) last = j;
    checks[static_cast<std::size_t>(last)].push_back({alpha, last});
  }

  const std::vector<Gf3Vector> targets = b.vectors();
  std::vector<std::size_t> chosen;
  Gf3Matrix images = Gf3Matrix::Zero(n, n);

  auto extend = [&](auto&& self, Eigen::Index depth) -> bool {
    if (depth == n) {
      ++out.candidates;
      if (!is_invertible(images)) return false;
      const Gf3Matrix l = basis_inv * images;
      if (a.image(l) == b) {
        out.map = l;
        return true;
      }
      return false;
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
      ++out.nodes;
      images.row(depth) = targets[t];
      bool ok = true;
      for (const auto& c : checks[static_cast<std::size_t>(depth)]) {
        const Gf3Vector img = c.alpha * images;
        if (!b.contains(img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(t);
      if (self(self, depth + 1)) return true;
      chosen.pop_back();
    }
    images.row(depth).setZero();
    return false;
  };
  extend(extend, 0);
  return out;
}

nlohmann::json to_json(const AutResult& r) {
  auto gens = nlohmann::json::array();
  for (const auto& p : r.generators) gens.push_back(to_json(p));
  return {{"type", "automorphism-group"},
          {"order", to_json(r.order)},
          {"generator_count", r.generators.size()},
          {"generators", gens},
          {"orbit_count", r.orbit_count},
          {"nodes_searched", r.nodes_searched},
          {"base", r.base},
          {"basic_orbit_sizes", r.basic_orbit_sizes}};
}

nlohmann::json to_json(const Gf3Matrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::vector<int> row;
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).residue());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dezaforge
