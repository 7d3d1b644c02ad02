#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "complat/complemented.hpp"

namespace complat {

// Contents of a .lat file:
//
//   # comment
//   elements: 0 a b c 1
//   cover: 0 a
//   ...
//   comp: a b        (optional; total when present)
struct LatFile {
  FiniteLattice             lattice;
  std::optional<UnaryTable> unary;

  bool has_unary() const noexcept { return unary.has_value(); }
  // Throws Error(InvalidArgument) if the file has no comp: lines.
  CLattice algebra() const;
};

LatFile parse_lat(std::string_view text);
LatFile read_lat_file(std::string const& path);

// Canonical text: elements in index order, covers sorted by index pair,
// comp lines in element order.
std::string write_lat(FiniteLattice const&             lattice,
                      std::optional<UnaryTable> const& unary = std::nullopt);
std::string write_lat(CLattice const& algebra);

// Single-line form used in reports: the canonical lines joined by "; ".
std::string inline_lat(CLattice const& algebra);
std::string inline_lat(FiniteLattice const& lattice);

}  // namespace complat
