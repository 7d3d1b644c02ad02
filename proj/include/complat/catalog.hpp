#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "complat/complemented.hpp"

namespace complat {

struct CatalogEntry {
  std::string               key;
  FiniteLattice             lattice;
  std::optional<UnaryTable> unary;
  std::string               provenance;

  bool has_unary() const noexcept { return unary.has_value(); }
  // Throws Error(InvalidArgument) for bare lattices such as CHAIN(k), k >= 3.
  CLattice algebra() const;
};

// Keys: M3P, N5, N5STAR, O6, O6STAR, FIG2, FIG3, BOOL2, BOOLN(n), CHAIN(k).
// Throws Error(UnknownKey).
CatalogEntry catalog(std::string_view key);

// Fixed keys only; the parametrised families are not listed.
std::vector<std::string> catalog_keys();

// The 2^n-element Boolean algebra with set complement.
CatalogEntry boolean_algebra(unsigned atoms);
// The k-element chain; carries a unary table only for k <= 2.
CatalogEntry chain(unsigned length);

}  // namespace complat
