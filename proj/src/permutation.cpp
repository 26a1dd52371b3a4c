#include "dezaforge/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dezaforge/error.hpp"

namespace dezaforge {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto p = images_[i];
    if (p >= images_.size() || hit[p])
      throw NotAPermutation("image array is not a bijection (point " + std::to_string(i) + ")");
    hit[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

bool Permutation::is_identity() const { return first_moved_point() == degree(); }

std::size_t Permutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

std::size_t Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return images_.size();
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw ShapeError("composing permutations of degree " + std::to_string(sigma.degree()) + " and " +
                     std::to_string(tau.degree()));
  std::vector<std::uint32_t> out(sigma.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = tau[sigma[i]];
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<std::uint32_t> out(sigma.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[sigma[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(out));
}

bool squares_to_identity(const Permutation& sigma) {
  for (std::size_t i = 0; i < sigma.degree(); ++i)
    if (sigma[sigma[i]] != i) return false;
  return true;
}

bool is_involution(const Permutation& sigma) { return !sigma.is_identity() && squares_to_identity(sigma); }

Permutation perm_from_matrix(const Gf3Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("only square matrices act on V(n,3)");
  if (!is_invertible(m)) throw NotAPermutation("singular matrix does not permute V(n,3)");
  const std::size_t v = pow3(m.rows());
  std::vector<std::uint32_t> images(v);
  for (std::size_t i = 0; i < v; ++i)
    images[i] = static_cast<std::uint32_t>(vector_to_index(index_to_vector(i, m.rows()) * m));
  return Permutation(std::move(images));
}

Permutation translation_perm(const Gf3Vector& t) {
  const std::size_t v = pow3(t.size());
  const std::size_t ti = vector_to_index(t);
  std::vector<std::uint32_t> images(v);
  for (std::size_t i = 0; i < v; ++i) images[i] = static_cast<std::uint32_t>(add_indices(i, ti, t.size()));
  return Permutation(std::move(images));
}

// --- Schreier-Sims -------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const std::uint32_t> base_prefix)
    : degree_(degree) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw ShapeError("generator degree differs from the group degree");
  build(generators, base_prefix);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

GroupOrder StabilizerChain::order() const {
  GroupOrder order = 1;
  for (const auto& l : levels_) order *= l.orbit.size();
  return order;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::add_level(std::uint32_t base) {
  Level l;
  l.base = base;
  levels_.push_back(std::move(l));
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  l.orbit.assign(1, l.base);
  l.transversal.assign(degree_, -1);
  l.reps.assign(1, Permutation::identity(degree_));
  l.transversal[l.base] = 0;
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    const auto p = l.orbit[k];
    for (auto gi : l.gens) {
      const auto& s = strong_[gi];
      const auto q = s[p];
      if (l.transversal[q] >= 0) continue;
      l.transversal[q] = static_cast<std::int32_t>(l.orbit.size());
      l.orbit.push_back(q);
      l.reps.push_back(compose(l.reps[k], s));
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const auto x = g[l.base];
    const auto k = l.transversal[x];
    if (k < 0) return {std::move(g), i};
    // g * rep^-1 without materialising the inverse: (g*rep^-1)(p) = rep^-1(g(p)).
    const auto& rep = l.reps[static_cast<std::size_t>(k)];
    std::vector<std::uint32_t> inv(degree_);
    for (std::size_t p = 0; p < degree_; ++p) inv[rep[p]] = static_cast<std::uint32_t>(p);
    std::vector<std::uint32_t> out(degree_);
    for (std::size_t p = 0; p < degree_; ++p) out[p] = inv[g[p]];
    g = Permutation(std::move(out));
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::build(std::span<const Permutation> generators, std::span<const std::uint32_t> base_prefix) {
  for (const auto& g : generators)
    if (!g.is_identity() && std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);

  for (auto b : base_prefix) add_level(b);
  for (const auto& g : strong_) {
    const bool fixes_base =
        std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) { return g[l.base] == l.base; });
    if (fixes_base) add_level(static_cast<std::uint32_t>(g.first_moved_point()));
  }

  auto fixes_prefix = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t j = 0; j < upto; ++j)
      if (g[levels_[j].base] != levels_[j].base) return false;
    return true;
  };
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (std::size_t gi = 0; gi < strong_.size(); ++gi)
      if (fixes_prefix(strong_[gi], i)) levels_[i].gens.push_back(gi);
    rebuild_orbit(i);
  }

  // Holt's SCHREIERSIMS: levels above i are complete stabilizer chains.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !extended; ++k) {
      for (std::size_t gpos = 0; gpos < levels_[li].gens.size() && !extended; ++gpos) {
        const Level& l = levels_[li];
        const Permutation& s = strong_[l.gens[gpos]];
        const auto target = static_cast<std::size_t>(l.transversal[s[l.orbit[k]]]);
        // u_p * s * u_{s(p)}^-1 fixes the base point of this level.
        Permutation schreier = compose(compose(l.reps[k], s), inverse(l.reps[target]));
        if (schreier.is_identity()) continue;

        std::size_t j = li + 1;
        Permutation h = std::move(schreier);
        for (; j < levels_.size(); ++j) {
          const Level& lj = levels_[j];
          const auto x = lj.transversal[h[lj.base]];
          if (x < 0) break;
          h = compose(h, inverse(lj.reps[static_cast<std::size_t>(x)]));
        }
        if (j == levels_.size() && h.is_identity()) continue;

        if (j == levels_.size()) add_level(static_cast<std::uint32_t>(h.first_moved_point()));
        strong_.push_back(std::move(h));
        const std::size_t hi = strong_.size() - 1;
        for (std::size_t l2 = li + 1; l2 <= j; ++l2) {
          levels_[l2].gens.push_back(hi);
          rebuild_orbit(l2);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }

  // Drop trivial trailing levels (possible when the prefix names fixed points).
  while (!levels_.empty() && levels_.back().orbit.size() == 1 && levels_.size() > base_prefix.size())
    levels_.pop_back();
}

nlohmann::json to_json(const Permutation& p) { return p.images(); }

nlohmann::json group_order_json(const GroupOrder& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

GroupOrder group_order(std::span<const Permutation> generators) {
  if (generators.empty()) return 1;
  return StabilizerChain(generators.front().degree(), generators).order();
}

}  // namespace dezaforge
