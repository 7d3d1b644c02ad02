#include <catch_amalgamated.hpp>

#include "complat/constructions.hpp"
#include "complat/error.hpp"
#include "complat/lat_format.hpp"
#include "complat/term.hpp"
#include "complat/verifier.hpp"
#include "../oracle.hpp"
#include "helpers.hpp"

using namespace complat;
using testing::algebra;

TEST_CASE("lattice counts match the brute-force oracle") {
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 7; ++n) {
    counts.push_back(oracle::brute_force_lattice_count(n));
  }
  // values frozen from the oracle above
  CHECK(counts == std::vector<std::size_t>{1, 1, 1, 2, 5, 15, 53});
  for (unsigned n = 1; n <= 7; ++n) {
    CHECK(lattices_of_size(n).size() == counts[n - 1]);
  }
  CHECK(lattices_of_size(8).size() == 222);
  CHECK(enumerate_lattices(7).size() == 78);
}

TEST_CASE("enumeration has one representative per class") {
  auto all = enumerate_lattices(6);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].size() == all[j].size()) {
        CHECK_FALSE(are_isomorphic(all[i], all[j]));
      }
    }
  }
  auto two = lattices_of_size(2);
  REQUIRE(two.size() == 1);
  CHECK(are_isomorphic(two[0], chain(2).lattice));
}

TEST_CASE("enumeration limits") {
  try {
    enumerate_lattices(9);
    FAIL("expected SizeLimitExceeded");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::SizeLimitExceeded);
  }
  CHECK_THROWS_AS(enumerate_lattices(0), Error);
}

TEST_CASE("complemented enumeration") {
  auto small = enumerate_complemented(3);
  REQUIRE(small.size() == 1);
  CHECK(small[0].size() == 2);
  CHECK(small[0].unary() == UnaryTable{1, 0});

  auto const all = enumerate_complemented(5);
  auto const m3  = catalog("M3P").lattice;
  std::array<unsigned, 2> lens{3, 4};
  auto const n5  = horizontal_sum(lens);
  std::size_t m3_tables = 0, n5_tables = 0;
  for (auto const& A : all) {
    m3_tables += are_isomorphic(A.lattice(), m3).has_value();
    n5_tables += are_isomorphic(A.lattice(), n5).has_value();
  }
  CHECK(m3_tables == enumerate_complementations(m3).size());
  CHECK(m3_tables == 8);
  CHECK(n5_tables == 2);
}

TEST_CASE("campaign examples") {
  auto r = verify("TH33", 6);
  CHECK(r.passed());
  CHECK(r.algebras_checked == enumerate_complemented(6).size());

  auto lem = verify("LEM12", 2);
  CHECK(lem.algebras_checked == 1);
  CHECK(lem.passed());

  auto sep = verify("SEP", 0);
  CHECK(sep.passed());
  CHECK_FALSE(sep.notes.empty());

  try {
    verify("TH99", 5);
    FAIL("expected UnknownTheorem");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnknownTheorem);
  }
}

TEST_CASE("every campaign passes at size 6") {
  for (auto const& id : theorem_ids()) {
    INFO(id);
    auto r = verify(id, 6);
    CHECK(r.passed());
    CHECK(r.algebras_checked > 0);
  }
}

TEST_CASE("campaign reports do not depend on the job count") {
  for (auto id : {"TH42", "LEM15", "COR23", "TH27"}) {
    VerifyOptions one, four;
    four.jobs = 4;
    one.samples_per_lattice = four.samples_per_lattice = 256;
    CHECK(format_report(verify(id, 6, one)) == format_report(verify(id, 6, four)));
  }
}

TEST_CASE("report format") {
  CampaignReport r;
  r.theorem          = "X";
  r.max_size         = 4;
  r.algebras_checked = 3;
  r.hypothesis_met   = 2;
  r.counterexamples.push_back({"elements: 0 1; cover: 0 1", "x=0"});
  CHECK(format_report(r)
        == "theorem=X max_size=4 algebras=3 hypothesis=2 counterexamples=1\n"
           "algebra=elements: 0 1; cover: 0 1 witness=x=0\n");
}

TEST_CASE("separating identities check out") {
  std::vector<std::string> keys{"N5", "N5STAR", "O6STAR"};
  auto                     fig3 = algebra("FIG3");
  for (auto const& k : keys) {
    auto other = algebra(k.c_str());
    for (int dir = 0; dir < 2; ++dir) {
      auto const& h = dir == 0 ? fig3 : other;
      auto const& f = dir == 0 ? other : fig3;
      std::optional<SeparatingIdentity> s;
      for (unsigned n = 1; n <= 2 && !s; ++n) {
        s = find_separating_identity(h, f, n);
      }
      REQUIRE(s);
      auto id = parse_identity(s->lhs + " = " + s->rhs);
      CHECK(satisfies(h, id));
      CHECK_FALSE(satisfies(f, id));
    }
  }
  // O6 is a subalgebra of FIG3, so nothing true in FIG3 fails in O6
  CHECK_FALSE(find_separating_identity(fig3, algebra("O6"), 1));
  CHECK(find_embedding(algebra("O6"), fig3));
}
