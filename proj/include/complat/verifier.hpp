#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complat/complemented.hpp"

namespace complat {

inline constexpr unsigned max_enumeration_size = 8;

// All bounded lattices with 1..max_size elements up to isomorphism, ordered
// by size and then by canonical key. Interior elements are named a, b, ...
// Throws Error(SizeLimitExceeded) above max_enumeration_size and
// Error(InvalidArgument) for max_size 0.
std::vector<FiniteLattice> enumerate_lattices(unsigned max_size);

// Lattices of exactly `size` elements, same order and naming.
std::vector<FiniteLattice> lattices_of_size(unsigned size);

// Every (lattice, complementation) pair with 2..max_size elements; the
// one-element algebra is left out. Tables per lattice in lexicographic order.
std::vector<CLattice> enumerate_complemented(unsigned max_size);

struct Counterexample {
  std::string algebra;  // inline .lat
  std::string witness;

  friend auto operator<=>(Counterexample const&, Counterexample const&) = default;
};

struct CampaignReport {
  std::string                 theorem;
  unsigned                    max_size = 0;
  std::size_t                 algebras_checked = 0;
  // Algebras that met the theorem's hypothesis.
  std::size_t                 hypothesis_met = 0;
  std::vector<Counterexample> counterexamples;
  // Extra facts printed by the CLI, e.g. probe witnesses.
  std::vector<std::string>    notes;
  std::chrono::milliseconds   elapsed{0};

  bool passed() const noexcept { return counterexamples.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned      jobs = 1;
  // Random unary tables per lattice where exhaustive enumeration stops.
  std::size_t   samples_per_lattice = 4096;
  // Largest size with exhaustive unary tables.
  unsigned      exhaustive_unary_limit = 5;
};

std::vector<std::string> const& theorem_ids();

// Throws Error(UnknownTheorem).
CampaignReport verify(std::string_view theorem_id, unsigned max_size,
                      VerifyOptions const& options = {});

// Header line, then one `algebra=... witness=...` line per counterexample.
// Deterministic: the elapsed time is not part of it.
std::string format_report(CampaignReport const& report);

// Two-chain horizontal sum checks for every pair of lengths in
// [min_length, max_length]: the direct characterisation agrees with the
// generic enumeration, each complementation satisfies the coincidence
// identity, and De Morgan's laws hold exactly when ' is antitone.
CampaignReport horizontal_sum_suite(unsigned min_length, unsigned max_length,
                                    unsigned jobs = 1);

// An identity that holds in `holds` and fails in `fails`, found by
// breadth-first closure over term functions in `generators` variables.
// Terms are the first collision in discovery order, so they are small.
struct SeparatingIdentity {
  std::string lhs;
  std::string rhs;
  std::string witness;  // failing assignment in `fails`
};

std::optional<SeparatingIdentity>
find_separating_identity(CLattice const& holds, CLattice const& fails,
                         unsigned generators, std::size_t cap = 200'000);

}  // namespace complat
