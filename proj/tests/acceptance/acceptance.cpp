// One PASS/FAIL line per criterion; exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "../oracle.hpp"
#include "complat/catalog.hpp"
#include "complat/congruence.hpp"
#include "complat/constructions.hpp"
#include "complat/free_algebra.hpp"
#include "complat/term.hpp"
#include "complat/verifier.hpp"

using namespace complat;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  bool                     ok = true;
  std::vector<std::string> detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      detail.push_back("FAILED " + what);
    }
  }
  void note(std::string const& s) { detail.push_back(s); }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fx(std::string const& name) {
  return std::string(COMPLAT_FIXTURE_DIR) + "/" + name + ".lat";
}

std::pair<int, std::string> run_cli(std::string const& args) {
  std::string cmd = std::string(COMPLAT_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE*       p = popen(cmd.c_str(), "r");
  if (!p) {
    return {-1, out};
  }
  std::array<char, 4096> buf{};
  std::size_t            got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
    out.append(buf.data(), got);
  }
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

CLattice algebra(char const* key) { return catalog(key).algebra(); }

Criterion free_cardinalities() {
  Criterion c;
  struct Row {
    char const* key;
    unsigned    n;
    std::size_t want;
  };
  for (auto [key, n, want] : {Row{"N5", 1, 5}, Row{"N5", 2, 152}, Row{"N5STAR", 1, 5},
                              Row{"N5STAR", 2, 152}, Row{"O6", 1, 4}, Row{"O6", 2, 100},
                              Row{"O6STAR", 1, 4}, Row{"O6STAR", 2, 100}}) {
    auto t = Clock::now();
    auto r = free_algebra(algebra(key), n);
    auto s = seconds_since(t);
    std::ostringstream line;
    line << key << " n=" << n << ": " << r.elements << " (" << s << " s)";
    c.note(line.str());
    c.require(r.complete && r.elements == want, line.str() + " expected " + std::to_string(want));
    c.require(s < 10.0, line.str() + " over 10 s");
  }
  return c;
}

Criterion free_lower_bounds() {
  Criterion c;
  struct Row {
    char const* key;
    std::size_t cap;
    std::size_t want;
  };
  for (auto [key, cap, want] : {Row{"N5", 120'000, 100'036}, Row{"O6", 250'000, 249'275}}) {
    auto t = Clock::now();
    auto r = free_algebra(algebra(key), 3, cap);
    auto s = seconds_since(t);
    std::ostringstream line;
    line << key << " n=3 cap=" << cap << ": " << r.elements
         << (r.complete ? " complete" : " (lower bound)") << " (" << s << " s)";
    c.note(line.str());
    c.require(r.complete || r.elements >= want, line.str() + " below " + std::to_string(want));
    c.require(s < 1800.0, line.str() + " over 30 minutes");
  }
  // resumable: checkpoint halfway, reload, finish; same vectors as a direct run
  auto const         A = algebra("N5");
  FreeAlgebraBuilder b(A, 3);
  b.run(60'000);
  std::stringstream buf;
  b.save(buf);
  auto resumed = FreeAlgebraBuilder::load(buf, A, 3);
  auto before  = resumed.element_count();
  resumed.run(120'000);
  auto direct = free_algebra(A, 3, 120'000);
  c.require(before == 60'000 && resumed.element_count() == 120'000,
            "checkpoint resume reaches the cap");
  c.require(resumed.result().vectors == direct.vectors, "resumed run matches direct run");
  return c;
}

Criterion birkhoff() {
  Criterion c;
  struct Row {
    char const* key;
    unsigned    n;
    unsigned    k;
  };
  for (auto [key, n, k] : {Row{"N5", 1, 1}, Row{"N5", 2, 9}, Row{"O6", 1, 2}, Row{"O6", 2, 4},
                           Row{"N5STAR", 1, 1}, Row{"N5STAR", 2, 9}, Row{"O6STAR", 1, 2},
                           Row{"O6STAR", 2, 4}}) {
    auto       A     = algebra(key);
    auto       r     = free_algebra(A, n);
    BigInt     size  = r.elements;
    BigInt     bound = birkhoff_bound(A, n);
    BigInt     tab   = boost::multiprecision::pow(BigInt(A.size()), k);
    auto       sep   = minimal_separating_set(r);
    std::ostringstream line;
    line << key << " n=" << n << ": |F|=" << r.elements << " <= |A|^k=" << tab
         << " (k=" << k << "), minimal separating set " << sep.coordinates.size()
         << (sep.minimal ? "" : " (greedy)");
    c.note(line.str());
    c.require(size <= bound, line.str() + " exceeds |A|^(|A|^n)");
    c.require(size <= tab, line.str());
  }
  for (auto [key, cap] : {std::pair{"N5", 120'000}, std::pair{"O6", 250'000}}) {
    auto A = algebra(key);
    auto r = free_algebra(A, 3, static_cast<std::size_t>(cap));
    c.require(BigInt(r.elements) <= birkhoff_bound(A, 3), std::string(key) + " n=3 bound");
  }
  return c;
}

Criterion m3_example() {
  Criterion c;
  auto       M = algebra("M3P");
  auto const a = M.lattice().index_of("a"), b = M.lattice().index_of("b");
  std::vector<Element> ab{a, b};
  c.require(eval(parse_term("x +1 y"), M, ab) == b, "+1(a,b) = b");
  c.require(eval(parse_term("x +2 y"), M, ab) == M.top(), "+2(a,b) = 1");
  auto co = builtin("coincidence");
  auto w  = check_identity(M, co);
  c.require(w && *w == ab, "coincidence witness (a,b)");
  if (w) {
    c.note("coincidence fails: " + format_witness(M, co, *w));
  }

  // brute force over all |M|^|M| unary tables
  auto const& L = M.lattice();
  std::size_t n = L.size(), total = 1, brute = 0, failing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total *= n;
  }
  for (std::size_t code = 0; code < total; ++code) {
    UnaryTable  t(n);
    std::size_t rest = code;
    bool        ok   = true;
    for (Element x = 0; x < n; ++x) {
      t[x] = static_cast<Element>(rest % n);
      rest /= n;
      ok = ok && L.join(x, t[x]) == L.top() && L.meet(x, t[x]) == L.bottom();
    }
    if (!ok) {
      continue;
    }
    ++brute;
    failing += !satisfies(CLattice(L, t), co);
  }
  auto generic = enumerate_complementations(L).size();
  c.note("complementations on M3: brute force " + std::to_string(brute) + ", library "
         + std::to_string(generic) + ", published claim 6");
  c.require(brute == generic, "brute-force count equals library count");
  c.require(failing == brute, "every complementation fails coincidence");
  return c;
}

Criterion congruences() {
  Criterion     c;
  FiniteLattice first = congruence_lattice(algebra("N5"));
  for (auto key : {"N5", "N5STAR", "O6", "O6STAR"}) {
    auto A  = algebra(key);
    auto cl = congruence_lattice(A);
    c.require(all_congruences(A).size() == 5, std::string(key) + " has 5 congruences");
    c.require(are_isomorphic(cl, first).has_value(), std::string(key) + " shape");
    c.require(is_subdirectly_irreducible(A), std::string(key) + " subdirectly irreducible");
    // unique atom, two incomparable coatoms
    std::vector<Element> atoms, coatoms;
    for (Element x = 0; x < cl.size(); ++x) {
      if (x == cl.bottom() || x == cl.top()) {
        continue;
      }
      bool atom = true, coatom = true;
      for (Element y = 0; y < cl.size(); ++y) {
        if (y != cl.bottom() && y != x && cl.leq(y, x)) atom = false;
        if (y != cl.top() && y != x && cl.leq(x, y)) coatom = false;
      }
      if (atom) atoms.push_back(x);
      if (coatom) coatoms.push_back(x);
    }
    c.require(atoms.size() == 1 && coatoms.size() == 2
                  && !cl.leq(coatoms[0], coatoms[1]) && !cl.leq(coatoms[1], coatoms[0]),
              std::string(key) + " unique atom and two incomparable coatoms");
  }
  c.require(!is_subdirectly_irreducible(algebra("FIG2")), "FIG2 not subdirectly irreducible");
  auto F = algebra("FIG3");
  auto m = monolith(F);
  c.require(m.has_value(), "FIG3 subdirectly irreducible");
  if (m) {
    auto s = format_nontrivial_classes(F, *m);
    c.note("FIG3 monolith: " + s);
    c.require(s == "{a,d}{d',a'}", "FIG3 monolith classes");
  }
  return c;
}

Criterion campaigns() {
  Criterion c;
  auto      t = Clock::now();
  for (auto const& id : theorem_ids()) {
    if (id == "SEP") {
      continue;
    }
    auto r = verify(id, 7);
    std::ostringstream line;
    line << id << ": algebras=" << r.algebras_checked << " hypothesis=" << r.hypothesis_met
         << " counterexamples=" << r.counterexamples.size();
    c.note(line.str());
    c.require(r.passed() && r.algebras_checked > 0, line.str());
  }
  for (unsigned n = 1; n <= 7; ++n) {
    auto want = oracle::brute_force_lattice_count(n);
    auto got  = lattices_of_size(n).size();
    c.require(got == want, "size " + std::to_string(n) + ": " + std::to_string(got)
                               + " lattices, oracle " + std::to_string(want));
  }
  auto s = seconds_since(t);
  c.note("elapsed " + std::to_string(s) + " s");
  c.require(s < 1200.0, "campaigns within 20 minutes");
  return c;
}

Criterion hsum_suite() {
  Criterion c;
  auto      r = horizontal_sum_suite(3, 6);
  c.note(format_report(r).substr(0, format_report(r).find('\n')));
  c.require(r.passed(), "suite has no exceptions");
  c.require(r.algebras_checked > 0, "suite checked something");
  return c;
}

Criterion separation() {
  Criterion c;
  auto      id = [](char const* text) { return parse_identity(text); };
  auto      N = algebra("N5"), NS = algebra("N5STAR"), O = algebra("O6"), OS = algebra("O6STAR");
  c.require(satisfies(N, id("x''' = x'")), "N5 satisfies x''' = x'");
  c.require(satisfies(N, id("x'' <= x")), "N5 satisfies x'' <= x");
  c.require(!satisfies(N, id("x'' = x")), "N5 fails x'' = x");
  c.require(satisfies(NS, id("x <= x''")), "N5* satisfies x <= x''");
  c.require(satisfies(O, id("x'' = x")), "O6 satisfies x'' = x");
  c.require(satisfies(OS, id("x'' = x")), "O6* satisfies x'' = x");
  c.require(satisfies(O, builtin("demorgan-join")) && satisfies(O, builtin("demorgan-meet")),
            "O6 satisfies both De Morgan laws");
  auto dj = builtin("demorgan-join");
  auto w  = check_identity(OS, dj);
  c.require(w.has_value(), "O6* fails demorgan-join");
  if (w) {
    c.note("O6* demorgan-join: " + format_witness(OS, dj, *w));
  }
  auto sep = verify("SEP", 0);
  c.require(sep.passed(), "SEP campaign");
  return c;
}

Criterion determinism() {
  Criterion c;
  std::vector<std::string> cmds;
  for (auto key : {"n5", "n5star", "o6", "o6star"}) {
    for (auto n : {"1", "2"}) {
      cmds.push_back("free " + fx(key) + " -n " + n + " --separating-set");
    }
    cmds.push_back("congruences " + fx(key));
  }
  cmds.push_back("free " + fx("n5") + " -n 3 --cap 120000");
  cmds.push_back("free " + fx("o6") + " -n 3 --cap 250000");
  cmds.push_back("check " + fx("m3p") + " -i coincidence");
  cmds.push_back("sd " + fx("m3p"));
  cmds.push_back("complements " + fx("m3p") + " --all");
  cmds.push_back("congruences " + fx("fig2"));
  cmds.push_back("congruences " + fx("fig3"));
  for (auto const& id : theorem_ids()) {
    cmds.push_back("verify " + id + " --max-size 7");
  }
  cmds.push_back("enumerate --max-size 7");
  for (unsigned p = 3; p <= 6; ++p) {
    for (unsigned q = 3; q <= 6; ++q) {
      cmds.push_back("hsum " + std::to_string(p) + " " + std::to_string(q) + " --count");
    }
  }
  cmds.push_back("check " + fx("n5") + " -e \"x''' = x'\" -e \"x'' <= x\" -e \"x'' = x\"");
  cmds.push_back("check " + fx("o6star") + " -i demorgan-join -i demorgan-meet");
  for (auto const& cmd : cmds) {
    auto [s1, base] = run_cli("--porcelain -j 1 " + cmd);
    c.require(!base.empty(), cmd + " produced output");
    for (auto jobs : {"1", "4", "8"}) {
      auto [s, out] = run_cli(std::string("--porcelain -j ") + jobs + " " + cmd);
      c.require(s == s1 && out == base, cmd + " differs at -j " + jobs);
    }
  }
  c.note(std::to_string(cmds.size()) + " commands compared at -j 1, 1, 4, 8");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int         number;
    char const* title;
    Criterion (*run)();
  };
  Entry const entries[] = {
      {1, "free algebra cardinalities", free_cardinalities},
      {2, "free algebra n=3 lower bounds", free_lower_bounds},
      {3, "Birkhoff and separating-set bounds", birkhoff},
      {4, "M3 symmetric differences and complementations", m3_example},
      {5, "congruence structure", congruences},
      {6, "theorem campaigns and enumeration counts", campaigns},
      {7, "two-chain horizontal sums, lengths 3-6", hsum_suite},
      {8, "variety separation probes", separation},
      {9, "porcelain determinism across runs and jobs", determinism},
  };
  int failures = 0;
  for (auto const& e : entries) {
    auto      t = Clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (std::exception const& ex) {
      c.ok = false;
      c.detail.push_back(std::string("exception: ") + ex.what());
    }
    for (auto const& d : c.detail) {
      std::cout << "    " << d << '\n';
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title
              << " (" << seconds_since(t) << " s)" << std::endl;
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
