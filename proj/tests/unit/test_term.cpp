#include <catch_amalgamated.hpp>

#include "complat/error.hpp"
#include "complat/term.hpp"
#include "complat/verifier.hpp"
#include "helpers.hpp"

using namespace complat;
using testing::algebra;

namespace {

Term x() { return Term::variable("x"); }
Term y() { return Term::variable("y"); }

std::vector<Element> at(CLattice const& A, std::initializer_list<char const*> names) {
  std::vector<Element> v;
  for (auto n : names) {
    v.push_back(A.lattice().index_of(n));
  }
  return v;
}

}  // namespace

TEST_CASE("parse the +1 expansion") {
  auto t = parse_term("(x' & y) | (x & y')");
  CHECK(t == Term::sd1(x(), y()));
  CHECK(parse_term("x +1 y") == t);
  CHECK(t.to_string() == "((x'&y)|(x&y'))");
}

TEST_CASE("parse the +2 expansion") {
  auto t = parse_term("x +2 y");
  CHECK(t == Term::meet(Term::join(x(), y()), Term::join(Term::comp(x()), Term::comp(y()))));
  for (auto const& n : t.nodes()) {
    CHECK(n.op != Term::Op::Bottom);
  }
}

TEST_CASE("<= sugar") {
  auto id = parse_identity("x'' <= x");
  auto xx = Term::comp(Term::comp(x()));
  CHECK(id.lhs == Term::meet(xx, x()));
  CHECK(id.rhs == xx);
}

TEST_CASE("precedence and constants") {
  CHECK(parse_term("x | y & z") == parse_term("x | (y & z)"));
  CHECK(parse_term("x & y'") == parse_term("x & (y')"));
  CHECK(parse_term("(x | y)'") == Term::comp(Term::join(x(), y())));
  CHECK(parse_term("x +1 y | z") == parse_term("(x +1 y) | z"));
  CHECK(parse_term("0 | 1'") == Term::join(Term::bottom(), Term::comp(Term::top())));
  auto t = parse_term("x3 & x0");
  CHECK(t.variables() == std::vector<std::string>{"x0", "x3"});
  CHECK(parse_term("z | x").variables() == std::vector<std::string>{"x", "z"});
}

TEST_CASE("syntax errors carry positions") {
  auto pos = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_term(text);
    } catch (SyntaxError const& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(pos("x |") == 3);
  CHECK(pos("(x & y") == 6);
  CHECK(pos("x $ y") == 2);
  CHECK(pos("w") == 0);
  CHECK(pos("x +3 y") == 2);
  CHECK(pos("x y") == 2);
  CHECK(pos("") == 0);
  CHECK_THROWS_AS(parse_identity("x = y = z"), SyntaxError);
  CHECK_THROWS_AS(parse_identity("x"), SyntaxError);
}

TEST_CASE("eval on M3") {
  auto M = algebra("M3P");
  auto v = at(M, {"a", "b"});
  CHECK(M.name(eval(parse_term("x +1 y"), M, v)) == "b");
  CHECK(M.name(eval(parse_term("x +2 y"), M, v)) == "1");
  for (auto const& key : catalog_keys()) {
    auto A = algebra(key.c_str());
    for (Element e = 0; e < A.size(); ++e) {
      std::vector<Element> one{e};
      CHECK(eval(parse_term("x | x'"), A, one) == A.top());
    }
  }
}

TEST_CASE("unbound variable") {
  auto                 A = algebra("BOOL2");
  std::vector<Element> one{0};
  try {
    eval(parse_term("x | y"), A, one);
    FAIL("expected UnboundVariable");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnboundVariable);
  }
}

TEST_CASE("check_identity witnesses") {
  auto M  = algebra("M3P");
  auto id = builtin("coincidence");
  auto w  = check_identity(M, id);
  REQUIRE(w);
  CHECK(*w == at(M, {"a", "b"}));
  CHECK(format_witness(M, id, *w) == "x=a y=b lhs=b rhs=1");
  CHECK(satisfies(algebra("O6"), id));
  for (auto const& key : catalog_keys()) {
    CHECK(satisfies(algebra(key.c_str()), parse_identity("x = x")));
  }
}

TEST_CASE("witness is the first failure in row-major order") {
  for (auto const& A : enumerate_complemented(6)) {
    for (auto const& [name, text] : builtin_registry()) {
      auto id = builtin(name);
      auto w  = check_identity(A, id);
      // scan independently
      std::optional<std::vector<Element>> first;
      std::size_t const                   k = id.variable_count();
      std::vector<Element>                v(k, 0);
      while (true) {
        if (eval(id.lhs, A, v) != eval(id.rhs, A, v)) {
          first = v;
          break;
        }
        std::size_t i = k;
        while (i > 0 && ++v[i - 1] == A.size()) {
          v[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
      CHECK(w == first);
    }
  }
}

TEST_CASE("builtin registry") {
  CHECK(builtin_registry().size() == 23);
  CHECK(builtin("coincidence").to_string() == "((x'&y)|(x&y')) = ((x|y)&(x'|y'))");
  CHECK(satisfies(algebra("BOOL2"), builtin("coincidence")));
  CHECK(satisfies(algebra("N5"), builtin("ord-lt")));
  auto S = algebra("N5STAR");
  auto w = check_identity(S, builtin("ord-lt"));
  REQUIRE(w);
  CHECK(S.name((*w)[0]) == "a");
  CHECK_FALSE(satisfies(algebra("O6STAR"), builtin("demorgan-join")));
  for (auto const& [name, text] : builtin_registry()) {
    auto id = builtin(name);
    CHECK(id.name == name);
    CHECK(satisfies(algebra("BOOL2"), id));
  }
  try {
    builtin("nope");
    FAIL("expected UnknownIdentity");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnknownIdentity);
  }
}

TEST_CASE("identity files") {
  auto ids = parse_identity_file(
      "# comment\n"
      "inv: x'' = x\n"
      "\n"
      "le: x'' <= x\n");
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].name == "inv");
  CHECK(ids[1].name == "le");
  CHECK_FALSE(satisfies(algebra("N5"), ids[0]));
  CHECK(satisfies(algebra("N5"), ids[1]));
  CHECK_THROWS_AS(parse_identity_file("x = x\n"), Error);
}

TEST_CASE("identities share variables across sides") {
  auto id = parse_identity("y = x | y");
  CHECK(id.variable_count() == 2);
  CHECK(id.lhs.variables() == id.rhs.variables());
  auto w = check_identity(algebra("BOOL2"), id);
  REQUIRE(w);
  CHECK(*w == std::vector<Element>{1, 0});
}

TEST_CASE("sd tables") {
  auto [b1, b2] = sd_tables(algebra("BOOL2"));
  CHECK(b1 == b2);
  CHECK(b1.data == std::vector<Element>{0, 1, 1, 0});
  auto M        = algebra("M3P");
  auto [m1, m2] = sd_tables(M);
  auto a = M.lattice().index_of("a"), b = M.lattice().index_of("b");
  CHECK(m1.at(a, b) != m2.at(a, b));
  auto [o1, o2] = sd_tables(algebra("O6"));
  CHECK(o1 == o2);
}

TEST_CASE("associativity") {
  auto [b1, b2] = sd_tables(algebra("BOOL2"));
  CHECK(is_associative(b1));
  CHECK_FALSE(is_associative(sd_tables(algebra("O6")).first));
  CHECK_FALSE(is_associative(sd_tables(algebra("N5")).first));
}

TEST_CASE("properties over enumerated algebras") {
  auto const coincidence = builtin("coincidence");
  auto const abs_i       = builtin("abs-i");
  auto const involution  = builtin("involution");
  auto const sd1         = parse_term("x +1 y");
  auto const expanded    = parse_term("(x'&y)|(x&y')");
  for (auto const& A : enumerate_complemented(7)) {
    auto [t1, t2] = sd_tables(A);
    CHECK(satisfies(A, coincidence) == (t1 == t2));
    if (satisfies(A, abs_i)) {
      CHECK(satisfies(A, involution));
    }
    for (Element p = 0; p < A.size(); ++p) {
      for (Element q = 0; q < A.size(); ++q) {
        std::vector<Element> v{p, q};
        Element manual = A.join(A.meet(A.comp(p), q), A.meet(p, A.comp(q)));
        CHECK(eval(sd1, A, v) == manual);
        CHECK(eval(expanded, A, v) == manual);
        CHECK(t1.at(p, q) == manual);
      }
    }
  }
}

TEST_CASE("pr-identity and coincidence are distinct") {
  auto const pr = builtin("pr-identity"), co = builtin("coincidence");
  std::optional<std::string> differs;
  for (auto const& key : catalog_keys()) {
    auto A = algebra(key.c_str());
    if (satisfies(A, pr) != satisfies(A, co)) {
      differs = key;
      break;
    }
  }
  // N5 satisfies coincidence, while pr-identity forces more structure
  REQUIRE(differs);
  CHECK(*differs == "N5");
}
