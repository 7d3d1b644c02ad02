#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "complat/complemented.hpp"

namespace complat {

using BigInt = boost::multiprecision::cpp_int;

struct SeparatingSet {
  std::vector<std::size_t> coordinates;
  // False only when the exact search ran out of budget and the greedy set
  // was returned.
  bool minimal = false;
};

// The free algebra on n generators of the variety generated by a finite
// algebra A, realised as term functions A^n -> A. Each element is a vector
// of |A|^n values, coordinate c being the value at the c-th assignment in
// row-major order (first generator slowest).
struct FreeAlgebraResult {
  std::size_t               base_size  = 0;
  unsigned                  generators = 0;
  std::size_t               width      = 0;
  std::size_t               elements   = 0;
  bool                      complete   = false;
  std::vector<std::uint8_t> vectors;  // elements * width, discovery order
  std::optional<SeparatingSet> separating;

  std::span<std::uint8_t const> element(std::size_t i) const {
    return {vectors.data() + i * width, width};
  }
  // The projections occupy the first `generators` slots.
  std::span<std::uint8_t const> generator(std::size_t i) const {
    return element(i);
  }
};

// Breadth-first closure of the projections and the constants 0, 1 under
// pointwise |, & and '. Each round pairs the elements found in the previous
// round with everything found so far; discovery order is fixed and does
// not depend on the number of jobs, nor on where a run was interrupted.
class FreeAlgebraBuilder {
 public:
  FreeAlgebraBuilder(CLattice algebra, unsigned generators);

  // Continues the closure until it is complete, `cap` elements exist, or
  // the time budget is spent. May be called again with a larger cap to
  // resume. Returns complete(). Throws Error(CapTooSmall) if cap < n + 2.
  bool run(std::optional<std::size_t>               cap    = std::nullopt,
           unsigned                                 jobs   = 1,
           std::optional<std::chrono::milliseconds> budget = std::nullopt);

  std::size_t element_count() const noexcept { return _count; }
  bool        complete() const noexcept { return _complete; }
  std::size_t width() const noexcept { return _width; }
  unsigned    generators() const noexcept { return _generators; }
  std::span<std::uint8_t const> element(std::size_t i) const {
    return {_storage.data() + i * _width, _width};
  }

  FreeAlgebraResult result() const;

  // Binary checkpoint; load() rejects a checkpoint made for another
  // algebra or generator count.
  void                      save(std::ostream& out) const;
  static FreeAlgebraBuilder load(std::istream& in, CLattice algebra,
                                 unsigned generators);

 private:
  std::size_t find(std::uint8_t const* vec, std::size_t hash) const;
  void        insert(std::size_t index, std::size_t hash);
  void        grow_table();
  std::size_t hash_of(std::uint8_t const* vec) const;
  bool        add(std::uint8_t const* vec);
  // Writes the candidate at (i, step) into out.
  void        candidate(std::size_t i, std::size_t step, std::uint8_t* out) const;

  CLattice                  _algebra;
  unsigned                  _generators;
  std::size_t               _width;
  std::vector<std::uint8_t> _join;  // |A| x |A|
  std::vector<std::uint8_t> _meet;
  std::vector<std::uint8_t> _comp;

  std::vector<std::uint8_t>  _storage;
  std::size_t                _count = 0;
  std::vector<std::uint32_t> _table;  // open addressing, index + 1, 0 empty
  std::vector<std::size_t>   _hashes;

  // Round state: the frontier is [_frontier_begin, _frontier_end); the
  // cursor (i, step) walks step 0 = comp(i), step 2j+1 = i | j and
  // step 2j+2 = i & j for j <= i.
  std::size_t _frontier_begin = 0;
  std::size_t _frontier_end   = 0;
  std::size_t _cursor_i       = 0;
  std::size_t _cursor_step    = 0;
  bool        _complete       = false;
};

FreeAlgebraResult free_algebra(CLattice const&            algebra,
                               unsigned                   generators,
                               std::optional<std::size_t> cap  = std::nullopt,
                               unsigned                   jobs = 1);

// |A|^(|A|^n).
BigInt birkhoff_bound(CLattice const& algebra, unsigned generators);
BigInt birkhoff_bound(std::size_t base_size, unsigned generators);

// A minimum-size set S of coordinates on which the elements restrict
// injectively, so |F| <= |A|^|S|. Greedy upper bound, then exhaustive
// search over smaller sizes. Throws Error(IncompleteClosure).
SeparatingSet minimal_separating_set(FreeAlgebraResult const& result,
                                     std::size_t node_budget = 50'000'000);

// Generator values at a coordinate, first generator first.
std::vector<Element> coordinate_assignment(std::size_t base_size,
                                           unsigned    generators,
                                           std::size_t coordinate);

}  // namespace complat
