#include <catch_amalgamated.hpp>

#include "complat/error.hpp"
#include "complat/lat_format.hpp"
#include "helpers.hpp"

using namespace complat;
using testing::algebra;

namespace {

// Unary table as names, listed in the given element order.
std::vector<std::string> table(CLattice const& A, std::vector<std::string> const& order) {
  std::vector<std::string> out;
  for (auto const& n : order) {
    out.push_back(A.name(A.comp(A.lattice().index_of(n))));
  }
  return out;
}

}  // namespace

TEST_CASE("displayed tables") {
  using V = std::vector<std::string>;
  CHECK(table(algebra("M3P"), {"0", "a", "b", "c", "1"}) == V{"1", "b", "c", "a", "0"});
  CHECK(table(algebra("N5"), {"0", "a", "b", "c", "1"}) == V{"1", "b", "a", "b", "0"});
  CHECK(table(algebra("N5STAR"), {"0", "a", "b", "c", "1"}) == V{"1", "b", "c", "b", "0"});
  CHECK(table(algebra("O6"), {"0", "a", "b", "c", "d", "1"})
        == V{"1", "d", "c", "b", "a", "0"});
  CHECK(table(algebra("O6STAR"), {"0", "a", "b", "c", "d", "1"})
        == V{"1", "c", "d", "a", "b", "0"});
  CHECK(table(algebra("BOOL2"), {"0", "1"}) == V{"1", "0"});
}

TEST_CASE("N5 tables store 1' = 0") {
  for (auto key : {"N5", "N5STAR"}) {
    auto e = catalog(key);
    auto A = e.algebra();
    CHECK(A.comp(A.top()) == A.bottom());
    CHECK(e.provenance.find("1'=1") != std::string::npos);
  }
}

TEST_CASE("catalog entries are valid") {
  for (auto const& key : catalog_keys()) {
    auto e = catalog(key);
    CHECK(e.key == key);
    CHECK_FALSE(e.provenance.empty());
    REQUIRE(e.has_unary());
    CHECK(is_complementation(e.algebra()));
  }
}

TEST_CASE("orders of the named lattices") {
  auto const& O = catalog("O6").lattice;
  auto        i = [&](char const* n) { return O.index_of(n); };
  CHECK(O.leq(i("a"), i("b")));
  CHECK(O.leq(i("c"), i("d")));
  CHECK_FALSE(O.leq(i("a"), i("d")));
  auto const& F = catalog("FIG2").lattice;
  CHECK(F.size() == 10);
  CHECK(F.leq(F.index_of("a"), F.index_of("b'")));
  CHECK_FALSE(F.leq(F.index_of("a"), F.index_of("a'")));
  CHECK(catalog("FIG3").lattice.size() == 10);
  CHECK(is_ortholattice(algebra("FIG2")));
  CHECK(is_ortholattice(algebra("FIG3")));
  CHECK_FALSE(is_modular(catalog("FIG3").lattice));
}

TEST_CASE("Boolean algebras and chains") {
  for (unsigned n = 0; n <= 4; ++n) {
    auto e = boolean_algebra(n);
    CHECK(e.lattice.size() == (1u << n));
    CHECK(is_boolean(e.algebra()));
  }
  CHECK_THROWS_AS(boolean_algebra(9), Error);
  CHECK(chain(1).unary == UnaryTable{0});
  CHECK(chain(2).unary == UnaryTable{1, 0});
  CHECK_FALSE(chain(3).has_unary());
  CHECK(chain(5).lattice.size() == 5);
  CHECK(write_lat(boolean_algebra(1).algebra()) == write_lat(algebra("BOOL2")));
}

TEST_CASE("unknown key") {
  try {
    catalog("M4");
    FAIL("expected UnknownKey");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnknownKey);
  }
}
