#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "complat/lattice.hpp"

namespace complat {

using UnaryTable = std::vector<Element>;

// A bounded lattice with a total unary operation x -> x'. The operation is
// only a *candidate* complementation; use is_complementation to classify.
class CLattice {
 public:
  CLattice(std::shared_ptr<FiniteLattice const> lattice, UnaryTable unary);
  CLattice(FiniteLattice lattice, UnaryTable unary);

  FiniteLattice const&                  lattice() const noexcept { return *_lattice; }
  std::shared_ptr<FiniteLattice const> const& shared_lattice() const noexcept {
    return _lattice;
  }
  UnaryTable const& unary() const noexcept { return _unary; }

  std::size_t size() const noexcept { return _unary.size(); }
  Element     bottom() const noexcept { return 0; }
  Element     top() const noexcept { return _lattice->top(); }
  Element     join(Element a, Element b) const noexcept { return _lattice->join(a, b); }
  Element     meet(Element a, Element b) const noexcept { return _lattice->meet(a, b); }
  bool        leq(Element a, Element b) const noexcept { return _lattice->leq(a, b); }
  Element     comp(Element a) const noexcept { return _unary[a]; }
  std::string const& name(Element a) const { return _lattice->name(a); }

  friend bool operator==(CLattice const& a, CLattice const& b) {
    return a._unary == b._unary
           && (a._lattice == b._lattice || *a._lattice == *b._lattice);
  }

 private:
  std::shared_ptr<FiniteLattice const> _lattice;
  UnaryTable                           _unary;
};

// Witnesses are the first failure in canonical element order.
std::optional<Element> complementation_witness(CLattice const& algebra);
std::optional<std::pair<Element, Element>>
                       antitone_witness(CLattice const& algebra);
std::optional<Element> involution_witness(CLattice const& algebra);

inline bool is_complementation(CLattice const& a) {
  return !complementation_witness(a).has_value();
}
inline bool is_antitone(CLattice const& a) {
  return !antitone_witness(a).has_value();
}
inline bool is_involution(CLattice const& a) {
  return !involution_witness(a).has_value();
}
// Complementation that is an antitone involution.
inline bool is_ortholattice(CLattice const& a) {
  return is_complementation(a) && is_antitone(a) && is_involution(a);
}
inline bool is_boolean(CLattice const& a) {
  return is_complementation(a) && is_distributive(a.lattice());
}

// All b with a | b = 1 and a & b = 0, ascending.
std::vector<Element> complements_of(FiniteLattice const& lattice, Element a);

// Every complementation of `lattice` in lexicographic order of tables.
// Throws Error(NoComplementation) if some element has no complement.
std::vector<UnaryTable> enumerate_complementations(FiniteLattice const& lattice);

// Same, but an uncomplemented lattice yields an empty list.
std::vector<UnaryTable>
complementations_or_empty(FiniteLattice const& lattice);

std::optional<std::vector<Element>> are_isomorphic(CLattice const& first,
                                                   CLattice const& second);

}  // namespace complat
