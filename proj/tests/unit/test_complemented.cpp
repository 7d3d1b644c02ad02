#include <catch_amalgamated.hpp>

#include "complat/error.hpp"
#include "complat/term.hpp"
#include "complat/verifier.hpp"
#include "helpers.hpp"

using namespace complat;
using testing::algebra;

namespace {

std::vector<std::string> names_of(FiniteLattice const& L, std::vector<Element> const& xs) {
  std::vector<std::string> out;
  for (auto x : xs) {
    out.push_back(L.name(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All maps u : L -> L with x|u(x) = 1 and x&u(x) = 0, by scanning every map.
std::size_t brute_force_complementations(FiniteLattice const& L) {
  std::size_t const n = L.size();
  std::vector<Element> u(n, 0);
  std::size_t          count = 0;
  while (true) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = L.join(x, u[x]) == L.top() && L.meet(x, u[x]) == L.bottom();
    }
    count += ok;
    std::size_t k = n;
    while (k > 0 && ++u[k - 1] == n) {
      u[--k] = 0;
    }
    if (k == 0) {
      return count;
    }
  }
}

}  // namespace

TEST_CASE("is_complementation") {
  CHECK(is_complementation(algebra("N5")));
  CHECK(is_complementation(algebra("FIG3")));
  auto const& L = catalog("N5").lattice;
  UnaryTable  id(L.size());
  std::iota(id.begin(), id.end(), 0);
  auto w = complementation_witness(CLattice(L, id));
  REQUIRE(w);
  // first failure in index order: 0 | 0 = 0
  CHECK(L.name(*w) == "0");
  CHECK(complementation_witness(CLattice(L, id)) != std::nullopt);
}

TEST_CASE("is_antitone") {
  CHECK(is_antitone(algebra("N5")));
  CHECK(is_antitone(algebra("BOOL2")));
  auto A = algebra("O6STAR");
  auto w = antitone_witness(A);
  REQUIRE(w);
  CHECK(A.name(w->first) == "a");
  CHECK(A.name(w->second) == "b");
  CHECK(A.name(A.comp(w->second)) == "d");
  CHECK(A.name(A.comp(w->first)) == "c");
}

TEST_CASE("is_involution") {
  CHECK(is_involution(algebra("O6")));
  auto N = algebra("N5");
  auto w = involution_witness(N);
  REQUIRE(w);
  CHECK(N.name(*w) == "c");
  CHECK(N.name(N.comp(N.comp(*w))) == "a");
  auto M = algebra("M3P");
  w      = involution_witness(M);
  REQUIRE(w);
  CHECK(M.name(*w) == "a");
  CHECK(M.name(M.comp(M.comp(*w))) == "c");
}

TEST_CASE("is_boolean") {
  CHECK(is_boolean(algebra("BOOL2")));
  CHECK_FALSE(is_boolean(algebra("O6")));
  CHECK_FALSE(is_boolean(algebra("M3P")));
  CHECK(is_ortholattice(algebra("O6")));
  CHECK(is_ortholattice(algebra("FIG2")));
  CHECK(is_ortholattice(algebra("FIG3")));
  CHECK_FALSE(is_ortholattice(algebra("N5")));
}

TEST_CASE("complements_of") {
  auto const& M = catalog("M3P").lattice;
  CHECK(names_of(M, complements_of(M, M.index_of("a"))) == std::vector<std::string>{"b", "c"});
  auto const& N = catalog("N5").lattice;
  CHECK(names_of(N, complements_of(N, N.index_of("b"))) == std::vector<std::string>{"a", "c"});
  for (auto const& L : enumerate_lattices(6)) {
    CHECK(complements_of(L, L.bottom()) == std::vector<Element>{L.top()});
  }
}

TEST_CASE("enumerate_complementations") {
  auto c2 = enumerate_complementations(chain(2).lattice);
  CHECK(c2 == std::vector<UnaryTable>{{1, 0}});

  auto const& N  = catalog("N5").lattice;
  auto        nt = enumerate_complementations(N);
  REQUIRE(nt.size() == 2);
  CHECK(std::find(nt.begin(), nt.end(), algebra("N5").unary()) != nt.end());
  CHECK(std::find(nt.begin(), nt.end(), algebra("N5STAR").unary()) != nt.end());
  CHECK(std::is_sorted(nt.begin(), nt.end()));

  try {
    enumerate_complementations(chain(3).lattice);
    FAIL("expected NoComplementation");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NoComplementation);
  }
  CHECK(complementations_or_empty(chain(3).lattice).empty());
}

TEST_CASE("M3 complementation count: oracle against the published six") {
  auto const& M      = catalog("M3P").lattice;
  auto        tables = enumerate_complementations(M);
  std::size_t oracle = brute_force_complementations(M);
  CHECK(oracle == 8);
  CHECK(tables.size() == oracle);
  constexpr std::size_t published = 6;
  CHECK(tables.size() != published);
  auto coincidence = builtin("coincidence");
  for (auto const& t : tables) {
    CLattice A(M, t);
    CHECK_FALSE(is_involution(A));
    CHECK_FALSE(satisfies(A, coincidence));
  }
  CHECK(std::find(tables.begin(), tables.end(), algebra("M3P").unary()) != tables.end());
}

TEST_CASE("complementation properties on every lattice up to size 7") {
  for (auto const& L : enumerate_lattices(7)) {
    std::size_t product = 1;
    for (Element x = 0; x < L.size(); ++x) {
      product *= complements_of(L, x).size();
    }
    auto tables = complementations_or_empty(L);
    CHECK(tables.size() == product);
    CHECK(tables.size() == brute_force_complementations(L));
    for (auto const& t : tables) {
      CLattice A(L, t);
      CHECK(A.comp(A.bottom()) == A.top());
      CHECK(A.comp(A.top()) == A.bottom());
      CHECK(is_complementation(A));
      if (is_boolean(A)) {
        CHECK(is_involution(A));
        CHECK(is_antitone(A));
      }
    }
  }
}

TEST_CASE("CLattice rejects bad tables") {
  auto const& L = catalog("N5").lattice;
  CHECK_THROWS_AS(CLattice(L, UnaryTable{0, 1}), Error);
  CHECK_THROWS_AS(CLattice(L, UnaryTable{4, 9, 1, 1, 0}), Error);
}

TEST_CASE("CLattice isomorphism respects the unary table") {
  auto N = algebra("N5");
  auto R = testing::relabel(N, testing::random_permutation(5, 4));
  auto f = are_isomorphic(N, R);
  REQUIRE(f);
  for (Element x = 0; x < 5; ++x) {
    CHECK((*f)[N.comp(x)] == R.comp((*f)[x]));
  }
  CHECK_FALSE(are_isomorphic(N, algebra("N5STAR")));
  CHECK_FALSE(are_isomorphic(algebra("O6"), algebra("O6STAR")));
}
