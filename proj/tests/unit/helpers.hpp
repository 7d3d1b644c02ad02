#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "complat/catalog.hpp"
#include "complat/complemented.hpp"

namespace testing {

using namespace complat;

inline CLattice algebra(char const* key) { return catalog(key).algebra(); }

// Same lattice, fresh labels e0, e1, ... assigned through `perm` and covers
// declared in shuffled order.
inline FiniteLattice relabel(FiniteLattice const& L, std::vector<Element> const& perm,
                             std::uint64_t seed = 7) {
  std::vector<std::string> names(L.size());
  for (Element x = 0; x < L.size(); ++x) {
    names[perm[x]] = "e" + std::to_string(x);
  }
  std::vector<FiniteLattice::Cover> covers;
  for (auto [a, b] : L.covers()) {
    covers.emplace_back("e" + std::to_string(a), "e" + std::to_string(b));
  }
  std::mt19937_64 rng(seed);
  std::shuffle(covers.begin(), covers.end(), rng);
  return FiniteLattice::from_covers(names, covers);
}

// Unary table carried along a relabelling.
inline CLattice relabel(CLattice const& A, std::vector<Element> const& perm,
                        std::uint64_t seed = 7) {
  auto       L = relabel(A.lattice(), perm, seed);
  UnaryTable t(A.size());
  for (Element x = 0; x < A.size(); ++x) {
    t[L.index_of("e" + std::to_string(x))] = L.index_of("e" + std::to_string(A.comp(x)));
  }
  return CLattice(std::move(L), std::move(t));
}

inline std::vector<Element> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

struct CliResult {
  int         status = -1;
  std::string out;
};

#ifdef COMPLAT_CLI
inline CliResult run_cli(std::string const& args) {
  std::string cmd = std::string(COMPLAT_CLI) + " " + args + " 2>/dev/null";
  CliResult   r;
  FILE*       p = popen(cmd.c_str(), "r");
  if (!p) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t            got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
    r.out.append(buf.data(), got);
  }
  int st   = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}
#endif

inline std::string fixture(char const* name) {
  return std::string(COMPLAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace testing
