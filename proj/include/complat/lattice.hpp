#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace complat {

using Element = std::uint32_t;
using Triple  = std::array<Element, 3>;

// A finite bounded lattice with fully materialised order, join and meet
// tables. Elements are dense indices in a fixed linear extension of the
// order: index 0 is the bottom and index size()-1 is the top.
//
// Instances are immutable once built.
class FiniteLattice {
 public:
  using Cover = std::pair<std::string, std::string>;

  // Builds from a Hasse diagram. `covers` holds (lower, upper) label pairs;
  // the order is their reflexive-transitive closure.
  static FiniteLattice from_covers(std::vector<std::string> names,
                                   std::span<Cover const>   covers);

  // Builds from a full order matrix (row-major, size*size, leq[a*size+b]
  // nonzero iff a <= b). Input element order is used only to break ties in
  // the canonical linear extension.
  static FiniteLattice from_order(std::vector<std::string>  names,
                                  std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return _names.size(); }
  Element     bottom() const noexcept { return 0; }
  Element     top() const noexcept { return static_cast<Element>(size() - 1); }

  bool leq(Element a, Element b) const noexcept {
    return _leq[a * size() + b] != 0;
  }
  Element join(Element a, Element b) const noexcept {
    return _join[a * size() + b];
  }
  Element meet(Element a, Element b) const noexcept {
    return _meet[a * size() + b];
  }

  std::string const&              name(Element a) const { return _names[a]; }
  std::vector<std::string> const& names() const noexcept { return _names; }
  std::optional<Element>          find(std::string_view label) const;
  // Throws Error(UnknownLabel).
  Element index_of(std::string_view label) const;

  // Covering pairs (lower, upper), sorted by index.
  std::vector<std::pair<Element, Element>> covers() const;

  std::vector<std::uint8_t> const& order_matrix() const noexcept {
    return _leq;
  }
  std::vector<Element> const& join_table() const noexcept { return _join; }
  std::vector<Element> const& meet_table() const noexcept { return _meet; }

  friend bool operator==(FiniteLattice const&, FiniteLattice const&) = default;

 private:
  FiniteLattice() = default;

  std::vector<std::string>  _names;
  std::vector<std::uint8_t> _leq;
  std::vector<Element>      _join;
  std::vector<Element>      _meet;
};

// First triple (x, y, z) in canonical order with
// x & (y | z) != (x & y) | (x & z), or nullopt when distributive.
std::optional<Triple> distributivity_witness(FiniteLattice const& lattice);
// First triple violating x & (y | (x & z)) = (x & y) | (x & z).
std::optional<Triple> modularity_witness(FiniteLattice const& lattice);

inline bool is_distributive(FiniteLattice const& lattice) {
  return !distributivity_witness(lattice).has_value();
}
inline bool is_modular(FiniteLattice const& lattice) {
  return !modularity_witness(lattice).has_value();
}

// An order-isomorphism first -> second given as the image of each element,
// or nullopt.
std::optional<std::vector<Element>> are_isomorphic(FiniteLattice const& first,
                                                   FiniteLattice const& second);

// Lexicographically least order matrix over all relabellings that fix the
// bounds and list elements by nondecreasing (down-set size, up-set size).
// Equal keys iff isomorphic.
std::vector<std::uint8_t> canonical_key(FiniteLattice const& lattice);

namespace detail {
  // Shared by the lattice and algebra isomorphism searches. `compatible`
  // decides whether a partial map is still extendable after `a -> b`.
  template <typename Compatible>
  std::optional<std::vector<Element>>
  isomorphism_search(FiniteLattice const& first,
                     FiniteLattice const& second,
                     Compatible&&         compatible);
}  // namespace detail

}  // namespace complat

#include "complat/detail/isomorphism.hpp"
