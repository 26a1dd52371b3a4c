#include "dezaforge/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "dezaforge/error.hpp"

namespace dezaforge {

using BigRational = boost::multiprecision::cpp_rational;

std::vector<std::int64_t> SpectrumClaim::eigenvalues() const {
  std::vector<std::int64_t> out;
  for (const auto& p : pairs) out.push_back(p.value);
  return out;
}

std::vector<std::size_t> SpectrumClaim::multiplicities() const {
  std::vector<std::size_t> out;
  for (const auto& p : pairs) out.push_back(p.multiplicity);
  return out;
}

std::size_t SpectrumClaim::total() const {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.multiplicity;
  return n;
}

SpectrumClaim parse_claim(std::string_view text) {
  SpectrumClaim claim;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto integer = [&](auto& out) {
    skip();
    const char* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), out);
    if (ec != std::errc{} || ptr == first) throw ParseError("expected an integer in spectrum claim", pos);
    pos += static_cast<std::size_t>(ptr - first);
    skip();
  };
  while (true) {
    Eigenpair p;
    integer(p.value);
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' in spectrum claim", pos);
    ++pos;
    integer(p.multiplicity);
    claim.pairs.push_back(p);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in spectrum claim", pos);
    ++pos;
  }
  return claim;
}

std::string format_claim(const SpectrumClaim& claim) {
  std::string s;
  for (const auto& p : claim.pairs) {
    if (!s.empty()) s += ',';
    s += std::to_string(p.value) + ':' + std::to_string(p.multiplicity);
  }
  return s;
}

namespace {

// Dense column-major v x v matrix over Scalar. Products with the adjacency
// matrix are column sums: (X A)(:, j) = sum over l in N(j) of X(:, l).
template <class Scalar>
class DenseColumns {
public:
  explicit DenseColumns(std::size_t v) : v_(v), data_(v * v, Scalar(0)) {}

  static DenseColumns identity(std::size_t v) {
    DenseColumns m(v);
    for (std::size_t i = 0; i < v; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  Scalar& at(std::size_t row, std::size_t col) { return data_[col * v_ + row]; }
  const Scalar& at(std::size_t row, std::size_t col) const { return data_[col * v_ + row]; }

  /// X (A - theta I).
  DenseColumns times_shifted_adjacency(const Graph& g, std::int64_t theta) const {
    DenseColumns out(v_);
    const Scalar t(theta);
    for (std::size_t j = 0; j < v_; ++j) {
      Scalar* dst = out.data_.data() + j * v_;
      const Scalar* self = data_.data() + j * v_;
      for (std::size_t i = 0; i < v_; ++i) dst[i] = -(t * self[i]);
      for (auto l : g.neighbours(j)) {
        const Scalar* src = data_.data() + l * v_;
        for (std::size_t i = 0; i < v_; ++i) dst[i] += src[i];
      }
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == Scalar(0); });
  }

  BigInt trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < v_; ++i) t += BigInt(at(i, i));
    return t;
  }

private:
  std::size_t v_;
  std::vector<Scalar> data_;
};

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t u = 0; u < g.order(); ++u) d = std::max(d, g.degree(u));
  return d;
}

const BigInt kInt64Safe = BigInt(1) << 62;

template <class Scalar>
bool annihilates(const Graph& g, std::span<const std::int64_t> thetas) {
  auto x = DenseColumns<Scalar>::identity(g.order());
  for (auto theta : thetas) {
    x = x.times_shifted_adjacency(g, theta);
    if (x.is_zero()) return true;
  }
  return x.is_zero();
}

template <class Scalar>
std::vector<BigInt> traces_of_powers(const Graph& g, std::size_t t) {
  std::vector<BigInt> out;
  auto x = DenseColumns<Scalar>::identity(g.order());
  for (std::size_t j = 0; j < t; ++j) {
    out.push_back(x.trace());
    if (j + 1 < t) x = x.times_shifted_adjacency(g, 0);
  }
  return out;
}

}  // namespace

bool annihilation_check(const Graph& g, std::span<const std::int64_t> thetas) {
  std::set<std::int64_t> distinct(thetas.begin(), thetas.end());
  if (distinct.size() != thetas.size()) throw PreconditionError("annihilation check needs distinct eigenvalues");
  if (thetas.empty()) return g.order() == 0;

  // Entries of a product are bounded by the product of the row-sum norms.
  const std::size_t d = max_degree(g);
  BigInt bound = 1;
  for (auto theta : thetas) bound *= BigInt(d) + BigInt(theta < 0 ? -theta : theta);
  bound *= g.order() + 1;
  return bound < kInt64Safe ? annihilates<std::int64_t>(g, thetas) : annihilates<BigInt>(g, thetas);
}

std::vector<BigInt> power_traces(const Graph& g, std::size_t t) {
  if (t == 0) throw PreconditionError("power_traces needs t >= 1");
  BigInt bound = 1;
  for (std::size_t j = 1; j < t; ++j) bound *= max_degree(g);
  return bound * (g.order() + 1) < kInt64Safe ? traces_of_powers<std::int64_t>(g, t) : traces_of_powers<BigInt>(g, t);
}

std::vector<std::size_t> multiplicities_from_moments(std::span<const std::int64_t> thetas,
                                                     std::span<const BigInt> traces, std::size_t v) {
  const std::size_t n = thetas.size();
  if (n == 0) throw InconsistentClaim("no eigenvalues given");
  if (traces.size() < n) throw PreconditionError("fewer traces than eigenvalues");
  if (std::set<std::int64_t>(thetas.begin(), thetas.end()).size() != n)
    throw InconsistentClaim("duplicate eigenvalues make the Vandermonde system singular");

  // Row j of the augmented system: theta_i^j ... | traces[j].
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[j][i] = BigRational(boost::multiprecision::pow(BigInt(thetas[i]), static_cast<unsigned>(j)));
    m[j][n] = BigRational(traces[j]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) throw InconsistentClaim("Vandermonde system is singular");
    std::swap(m[p], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const BigRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }

  std::vector<std::size_t> out(n);
  BigInt sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const BigRational x = m[i][n] / m[i][i];
    if (boost::multiprecision::denominator(x) != 1)
      throw InconsistentClaim("multiplicity of " + std::to_string(thetas[i]) + " is not an integer: " + x.str());
    const BigInt num = boost::multiprecision::numerator(x);
    if (num < 0) throw InconsistentClaim("multiplicity of " + std::to_string(thetas[i]) + " is negative: " + num.str());
    out[i] = num.convert_to<std::size_t>();
    sum += num;
  }
  if (sum != v) throw InconsistentClaim("multiplicities sum to " + sum.str() + ", not " + std::to_string(v));

  for (std::size_t j = n; j < traces.size(); ++j) {
    BigInt moment = 0;
    for (std::size_t i = 0; i < n; ++i)
      moment += BigInt(out[i]) * boost::multiprecision::pow(BigInt(thetas[i]), static_cast<unsigned>(j));
    if (moment != traces[j]) throw InconsistentClaim("moment " + std::to_string(j) + " does not match its trace");
  }
  return out;
}

SpectrumCertificate certify_spectrum(const Graph& g, const SpectrumClaim& claim) {
  SpectrumCertificate c;
  c.eigenvalues = claim.eigenvalues();
  c.multiplicities = claim.multiplicities();

  const std::set<std::int64_t> distinct(c.eigenvalues.begin(), c.eigenvalues.end());
  if (claim.pairs.empty() || distinct.size() != claim.pairs.size()) {
    c.failure_stage = "claim";
    c.detail = "eigenvalues must be distinct and non-empty";
    return c;
  }
  if (std::any_of(c.multiplicities.begin(), c.multiplicities.end(), [](std::size_t m) { return m == 0; }) ||
      claim.total() != g.order()) {
    c.failure_stage = "claim";
    c.detail = "multiplicities must be positive and sum to " + std::to_string(g.order());
    return c;
  }

  c.annihilation = annihilation_check(g, c.eigenvalues);
  if (!c.annihilation) {
    c.failure_stage = "annihilation";
    c.detail = "product of (A - theta I) over the claimed eigenvalues is not zero";
    return c;
  }

  c.moments = power_traces(g, c.eigenvalues.size());
  try {
    c.solved_multiplicities = multiplicities_from_moments(c.eigenvalues, c.moments, g.order());
  } catch (const InconsistentClaim& e) {
    c.failure_stage = "moments";
    c.detail = e.what();
    return c;
  }
  if (c.solved_multiplicities != c.multiplicities) {
    c.failure_stage = "moments";
    c.detail = "power traces force different multiplicities";
    return c;
  }

  // Independent of the solver: sum m theta = tr A = 0, sum m theta^2 = tr A^2 = 2|E|.
  BigInt first = 0, second = 0;
  for (const auto& p : claim.pairs) {
    first += BigInt(p.multiplicity) * p.value;
    second += BigInt(p.multiplicity) * p.value * p.value;
  }
  if (first != 0 || second != BigInt(2 * g.edge_count())) {
    c.failure_stage = "trace-identities";
    c.detail = "sum m*theta = " + first.str() + ", sum m*theta^2 = " + second.str() + ", 2|E| = " +
               std::to_string(2 * g.edge_count());
    return c;
  }
  c.pass = true;
  return c;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t residue(std::int64_t x) {
  const auto m = static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

// Monic minimal polynomial of b under A modulo kPrime, low-order first.
std::optional<std::vector<std::uint64_t>> krylov_minimal_polynomial(const Graph& g, std::size_t max_degree) {
  const std::size_t v = g.order();
  std::mt19937_64 rng(0x5eedu);
  std::vector<std::uint64_t> current(v);
  for (auto& x : current) x = rng() % kPrime;

  struct Row {
    std::size_t pivot;
    std::vector<std::uint64_t> vec;     // normalised so vec[pivot] == 1
    std::vector<std::uint64_t> combo;   // vec = sum combo[j] K_j
  };
  std::vector<Row> rows;

  for (std::size_t i = 0; i <= max_degree; ++i) {
    std::vector<std::uint64_t> vec = current;
    std::vector<std::uint64_t> combo(i + 1, 0);
    combo[i] = 1;
    for (const auto& r : rows) {
      const auto f = vec[r.pivot];
      if (!f) continue;
      for (std::size_t k = 0; k < v; ++k) vec[k] = submod(vec[k], mulmod(f, r.vec[k]));
      for (std::size_t k = 0; k < r.combo.size(); ++k) combo[k] = submod(combo[k], mulmod(f, r.combo[k]));
    }
    const auto it = std::find_if(vec.begin(), vec.end(), [](std::uint64_t x) { return x != 0; });
    if (it == vec.end()) return combo;  // combo[i] == 1, so monic of degree i
    const auto pivot = static_cast<std::size_t>(it - vec.begin());
    const auto inv = invmod(vec[pivot]);
    for (auto& x : vec) x = mulmod(x, inv);
    for (auto& x : combo) x = mulmod(x, inv);
    rows.push_back({pivot, std::move(vec), std::move(combo)});

    std::vector<std::uint64_t> next(v, 0);
    for (std::size_t u = 0; u < v; ++u)
      for (auto w : g.neighbours(u)) next[u] = addmod(next[u], current[w]);
    current = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<SpectrumClaim> discover_spectrum(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const auto poly = krylov_minimal_polynomial(g, std::min<std::size_t>(g.order(), 64));
  if (!poly) return std::nullopt;

  const auto d = static_cast<std::int64_t>(max_degree(g));
  std::vector<std::int64_t> thetas;
  for (std::int64_t theta = d; theta >= -d; --theta) {
    std::uint64_t acc = 0;
    const auto x = residue(theta);
    for (std::size_t k = poly->size(); k-- > 0;) acc = addmod(mulmod(acc, x), (*poly)[k]);
    if (acc == 0) thetas.push_back(theta);
  }
  if (thetas.size() + 1 != poly->size()) return std::nullopt;

  SpectrumClaim claim;
  try {
    const auto traces = power_traces(g, thetas.size());
    const auto mult = multiplicities_from_moments(thetas, traces, g.order());
    for (std::size_t i = 0; i < thetas.size(); ++i) claim.pairs.push_back({thetas[i], mult[i]});
  } catch (const InconsistentClaim&) {
    return std::nullopt;
  }
  if (!certify_spectrum(g, claim).pass) return std::nullopt;
  return claim;
}

void attach_srg_eigenvalues(SrgCertificate& c) {
  if (!c.pass) return;
  const auto v = static_cast<std::int64_t>(c.v), k = static_cast<std::int64_t>(c.k);
  const auto lambda = static_cast<std::int64_t>(c.lambda), mu = static_cast<std::int64_t>(c.mu);
  // Roots of x^2 + (mu - lambda) x + (mu - k).
  const std::int64_t disc = (mu - lambda) * (mu - lambda) - 4 * (mu - k);
  if (disc <= 0) return;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root != disc || (lambda - mu + root) % 2 != 0) return;
  const std::int64_t r = (lambda - mu + root) / 2;
  const std::int64_t s = (lambda - mu - root) / 2;
  // f = ((v-1) - (2k + (v-1)(lambda-mu)) / (r-s)) / 2 is the multiplicity of r.
  const std::int64_t num = 2 * k + (v - 1) * (lambda - mu);
  if (num % root != 0 || ((v - 1) - num / root) % 2 != 0) return;
  const std::int64_t f = ((v - 1) - num / root) / 2;
  c.r = r;
  c.s = s;
  c.r_multiplicity = static_cast<std::size_t>(f);
  c.s_multiplicity = static_cast<std::size_t>(v - 1 - f);
}

nlohmann::json to_json(const SpectrumCertificate& c) {
  auto moments = nlohmann::json::array();
  for (const auto& m : c.moments) moments.push_back(to_json(m));
  nlohmann::json j = {{"type", "spectrum"},
                      {"eigenvalues", c.eigenvalues},
                      {"multiplicities", c.multiplicities},
                      {"annihilation", c.annihilation},
                      {"moments", moments},
                      {"solved_multiplicities", c.solved_multiplicities},
                      {"pass", c.pass}};
  if (!c.failure_stage.empty()) {
    j["failure_stage"] = c.failure_stage;
    j["detail"] = c.detail;
  }
  return j;
}

nlohmann::json to_json(const SpectrumClaim& c) {
  auto arr = nlohmann::json::array();
  for (const auto& p : c.pairs) arr.push_back({{"eigenvalue", p.value}, {"multiplicity", p.multiplicity}});
  return arr;
}

}  // namespace dezaforge
