#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "dezaforge/certify.hpp"
#include "dezaforge/graph.hpp"

namespace dezaforge {

using BigInt = boost::multiprecision::cpp_int;

struct Eigenpair {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenpair&, const Eigenpair&) = default;
};

/// A claimed eigenvalue multiset, as (value, multiplicity) pairs in the
/// order given.
struct SpectrumClaim {
  std::vector<Eigenpair> pairs;

  std::vector<std::int64_t> eigenvalues() const;
  std::vector<std::size_t> multiplicities() const;
  std::size_t total() const;
  friend bool operator==(const SpectrumClaim&, const SpectrumClaim&) = default;
};

/// Parses "22:1,5:48,-4:60". Throws ParseError.
SpectrumClaim parse_claim(std::string_view text);
std::string format_claim(const SpectrumClaim& claim);

/// True iff prod_i (A - theta_i I) == 0 exactly. Uses 64-bit entries when a
/// norm bound proves they cannot overflow, arbitrary precision otherwise.
bool annihilation_check(const Graph& g, std::span<const std::int64_t> thetas);

/// tr(A^0), ..., tr(A^(t-1)) exactly.
std::vector<BigInt> power_traces(const Graph& g, std::size_t t);

/// Solves sum_i m_i theta_i^j = traces[j] over the rationals for
/// j < thetas.size(); extra traces must also be satisfied. Throws
/// InconsistentClaim unless the solution is nonnegative integers summing to v.
std::vector<std::size_t> multiplicities_from_moments(std::span<const std::int64_t> thetas,
                                                     std::span<const BigInt> traces, std::size_t v);

struct SpectrumCertificate {
  std::vector<std::int64_t> eigenvalues;
  std::vector<std::size_t> multiplicities;  // as claimed
  bool annihilation = false;
  std::vector<BigInt> moments;
  std::vector<std::size_t> solved_multiplicities;
  bool pass = false;
  std::string failure_stage;  // "claim", "annihilation", "moments" or "trace-identities"
  std::string detail;
};

/// Passes iff the claimed eigenvalues annihilate A and the moment system
/// reproduces exactly the claimed multiplicities; the two facts together
/// determine the spectrum of a symmetric integer matrix.
SpectrumCertificate certify_spectrum(const Graph& g, const SpectrumClaim& claim);

/// Finds integer eigenvalue candidates from the Krylov minimal polynomial of
/// a pseudo-random vector modulo 2^61-1, solves the moments, and returns the
/// claim only if certify_spectrum() passes on it.
std::optional<SpectrumClaim> discover_spectrum(const Graph& g);

/// Fills r, s and their multiplicities from x^2 + (mu - lambda)x + (mu - k)
/// when both roots are integers. No effect on failed certificates.
void attach_srg_eigenvalues(SrgCertificate& c);

nlohmann::json to_json(const SpectrumCertificate& c);
nlohmann::json to_json(const SpectrumClaim& c);

}  // namespace dezaforge
