#include "complat/constructions.hpp"

#include <algorithm>
#include <array>

#include "complat/error.hpp"

namespace complat {

FiniteLattice horizontal_sum(std::span<unsigned const> lengths) {
  if (lengths.empty()) {
    throw Error(ErrorCode::InvalidLength, "no chains given");
  }
  if (lengths.size() > 26) {
    throw Error(ErrorCode::InvalidLength, "at most 26 chains");
  }
  std::vector<std::string> names{"0"};
  // chain id and height per element; bounds get chain id -1
  std::vector<std::pair<int, unsigned>> pos{{-1, 0}};
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] < 2) {
      throw Error(ErrorCode::InvalidLength,
                  "chain length " + std::to_string(lengths[i]) + " < 2");
    }
    for (unsigned h = 1; h + 1 < lengths[i]; ++h) {
      names.push_back(static_cast<char>('a' + i) + std::to_string(h));
      pos.emplace_back(static_cast<int>(i), h);
    }
  }
  names.emplace_back("1");
  pos.emplace_back(-1, 0);

  std::size_t const         n = names.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool rel;
      if (x == 0 || y == n - 1 || x == y) {
        rel = true;
      } else if (x == n - 1 || y == 0) {
        rel = false;
      } else {
        rel = pos[x].first == pos[y].first && pos[x].second <= pos[y].second;
      }
      leq[x * n + y] = rel;
    }
  }
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

std::vector<UnaryTable> hsum_complementations(unsigned first, unsigned second) {
  std::array<unsigned, 2> lengths{first, second};
  auto const              L = horizontal_sum(lengths);
  std::size_t const       n = L.size();

  std::vector<Element> interior[2];
  for (Element x = 1; x + 1 < n; ++x) {
    interior[L.name(x)[0] == 'a' ? 0 : 1].push_back(x);
  }
  std::vector<std::vector<Element>> choices(n);
  choices[L.bottom()] = {L.top()};
  choices[L.top()]    = {L.bottom()};
  for (int side = 0; side < 2; ++side) {
    for (auto x : interior[side]) {
      choices[x] = interior[1 - side];
      if (choices[x].empty()) {
        return {};
      }
    }
  }

  std::vector<UnaryTable>  result;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    UnaryTable t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = choices[i][digit[i]];
    }
    result.push_back(std::move(t));
    std::size_t i = n;
    while (true) {
      if (i == 0) {
        return result;
      }
      --i;
      if (++digit[i] < choices[i].size()) {
        break;
      }
      digit[i] = 0;
    }
  }
}

FiniteLattice direct_product(FiniteLattice const& A, FiniteLattice const& B) {
  std::size_t const        na = A.size(), nb = B.size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (Element a = 0; a < na; ++a) {
    for (Element b = 0; b < nb; ++b) {
      names.push_back("(" + A.name(a) + "," + B.name(b) + ")");
    }
  }
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq[x * n + y] = A.leq(static_cast<Element>(x / nb), static_cast<Element>(y / nb))
                       && B.leq(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
    }
  }
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

CLattice direct_product(CLattice const& A, CLattice const& B) {
  auto              L  = direct_product(A.lattice(), B.lattice());
  std::size_t const nb = B.size();
  UnaryTable        table(L.size());
  for (Element a = 0; a < A.size(); ++a) {
    for (Element b = 0; b < nb; ++b) {
      auto x = L.index_of("(" + A.name(a) + "," + B.name(b) + ")");
      auto y = L.index_of("(" + A.name(A.comp(a)) + "," + B.name(B.comp(b)) + ")");
      table[x] = y;
    }
  }
  return CLattice(std::move(L), std::move(table));
}

std::vector<Element> subalgebra_generated(CLattice const&          A,
                                          std::span<Element const> seed) {
  std::vector<bool>    in(A.size(), false);
  std::vector<Element> members;
  auto                 add = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  add(A.bottom());
  add(A.top());
  for (auto s : seed) {
    if (s >= A.size()) {
      throw Error(ErrorCode::InvalidArgument, "seed element out of range");
    }
    add(s);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    Element x = members[i];
    add(A.comp(x));
    for (std::size_t j = 0; j <= i; ++j) {
      Element y = members[j];
      add(A.join(x, y));
      add(A.meet(x, y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<std::vector<Element>> find_embedding(CLattice const& S,
                                                   CLattice const& A) {
  std::size_t const n = S.size(), m = A.size();
  if (n > m) {
    return std::nullopt;
  }
  constexpr Element    unset = static_cast<Element>(-1);
  std::vector<Element> f(n, unset);
  std::vector<bool>    used(m, false);

  // Elements of S in index order; bottom and top are forced.
  auto consistent = [&](Element a, Element b) {
    if (used[b]) {
      return false;
    }
    if ((a == S.bottom()) != (b == A.bottom()) || (a == S.top()) != (b == A.top())) {
      return false;
    }
    f[a]    = b;
    bool ok = true;
    for (Element p = 0; p <= a && ok; ++p) {
      if (f[p] == unset) {
        continue;
      }
      if (S.leq(p, a) != A.leq(f[p], b) || S.leq(a, p) != A.leq(b, f[p])) {
        ok = false;
        break;
      }
      if (f[S.comp(p)] != unset && f[S.comp(p)] != A.comp(f[p])) {
        ok = false;
        break;
      }
      for (Element q = 0; q <= a && ok; ++q) {
        if (f[q] == unset) {
          continue;
        }
        Element j = S.join(p, q), k = S.meet(p, q);
        if ((f[j] != unset && f[j] != A.join(f[p], f[q]))
            || (f[k] != unset && f[k] != A.meet(f[p], f[q]))) {
          ok = false;
        }
      }
    }
    f[a] = unset;
    return ok;
  };

  std::vector<Element> next(n + 1, 0);
  std::size_t          depth = 0;
  while (true) {
    if (depth == n) {
      return f;
    }
    Element a     = static_cast<Element>(depth);
    bool    found = false;
    for (Element b = next[depth]; b < m; ++b) {
      if (consistent(a, b)) {
        f[a]        = b;
        used[b]     = true;
        next[depth] = b + 1;
        found       = true;
        break;
      }
    }
    if (found) {
      next[++depth] = 0;
      continue;
    }
    if (depth == 0) {
      return std::nullopt;
    }
    --depth;
    used[f[depth]] = false;
    f[depth]       = unset;
  }
}

}  // namespace complat
