#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complat/complemented.hpp"

namespace complat {

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  // True if x and y were in different sets.
  bool        unite(std::size_t x, std::size_t y);
  std::size_t size() const noexcept { return _parent.size(); }

 private:
  std::vector<std::size_t> _parent;
  std::vector<std::size_t> _weight;
};

// A partition of {0, ..., n-1} given by block ids. Block ids are canonical:
// blocks are numbered in order of their least member.
class Partition {
 public:
  static Partition discrete(std::size_t n);
  static Partition indiscrete(std::size_t n);
  static Partition from_union_find(UnionFind& uf);
  // Any labelling; renumbered canonically.
  static Partition from_labels(std::vector<std::size_t> const& labels);

  std::size_t size() const noexcept { return _block.size(); }
  std::size_t block_count() const noexcept { return _count; }
  std::size_t block(Element x) const noexcept { return _block[x]; }
  bool        related(Element x, Element y) const noexcept {
    return _block[x] == _block[y];
  }
  std::vector<std::size_t> const& blocks() const noexcept { return _block; }
  std::vector<std::vector<Element>> classes() const;

  // Refinement: *this <= other iff every block of *this lies in a block of
  // other.
  bool refines(Partition const& other) const;
  Partition meet(Partition const& other) const;
  Partition join(Partition const& other) const;

  friend bool operator==(Partition const&, Partition const&) = default;
  // Finer partitions first, then lexicographic on block ids.
  friend bool operator<(Partition const& a, Partition const& b);

 private:
  std::vector<std::size_t> _block;
  std::size_t              _count = 0;
};

// "{0}{a,c}{b}{1}"
std::string format_partition(CLattice const& algebra, Partition const& p);
std::string format_partition(FiniteLattice const& lattice, Partition const& p);

// Nontrivial classes only, e.g. "{a,d}{d',a'}".
std::string format_nontrivial_classes(CLattice const& algebra,
                                      Partition const& p);

// True if p is compatible with |, & and '.
bool is_congruence(CLattice const& algebra, Partition const& p);

// Smallest congruence identifying a and b.
Partition principal_congruence(CLattice const& algebra, Element a, Element b);

// Smallest congruence containing all pairs already related in `seed`.
Partition generated_congruence(CLattice const& algebra, Partition const& seed);

// Every congruence, sorted by operator<; first is the diagonal, last the
// full relation.
std::vector<Partition> all_congruences(CLattice const& algebra);

// The congruences ordered by refinement, element names as in
// format_partition.
FiniteLattice congruence_lattice(CLattice const& algebra);

// Unique atom of the congruence lattice. Throws Error(TrivialAlgebra) for a
// one-element algebra.
std::optional<Partition> monolith(CLattice const& algebra);

inline bool is_subdirectly_irreducible(CLattice const& algebra) {
  return algebra.size() >= 2 && monolith(algebra).has_value();
}

}  // namespace complat
