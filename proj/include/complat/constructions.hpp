#pragma once

#include <optional>
#include <span>
#include <vector>

#include "complat/complemented.hpp"

namespace complat {

// Chains of the given lengths glued at a common 0 and 1 with mutually
// incomparable interiors. Interior elements of chain i are named by the
// i-th letter and their height, e.g. a1 < a2 and b1 < b2 for lengths {4, 4}.
// Throws Error(InvalidLength) for an empty list or a length below 2.
FiniteLattice horizontal_sum(std::span<unsigned const> chain_lengths);

// Every complementation of horizontal_sum({first, second}), built directly
// from the characterisation 0' = 1, 1' = 0, and each interior element sent
// into the interior of the other chain. Lexicographic order of tables.
// Empty when exactly one of the chains has an interior.
std::vector<UnaryTable> hsum_complementations(unsigned first, unsigned second);

// Componentwise operations on pairs, named "(x,y)".
FiniteLattice direct_product(FiniteLattice const& a, FiniteLattice const& b);
CLattice      direct_product(CLattice const& a, CLattice const& b);

// Least subuniverse containing seed, 0 and 1, sorted ascending.
std::vector<Element> subalgebra_generated(CLattice const&          algebra,
                                          std::span<Element const> seed);

// Injective map sub -> host preserving |, &, ', 0 and 1, or nullopt.
std::optional<std::vector<Element>> find_embedding(CLattice const& sub,
                                                   CLattice const& host);

}  // namespace complat
