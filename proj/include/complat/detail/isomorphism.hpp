#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace complat::detail {

  using Signature = std::array<std::size_t, 4>;

  // Isomorphism invariant per element: down-set size, up-set size, number
  // of lower covers, number of upper covers.
  std::vector<Signature> element_signatures(FiniteLattice const& lattice);

  template <typename Compatible>
  std::optional<std::vector<Element>>
  isomorphism_search(FiniteLattice const& first,
                     FiniteLattice const& second,
                     Compatible&&         compatible) {
    std::size_t const n = first.size();
    if (n != second.size()) {
      return std::nullopt;
    }
    auto const sig1 = element_signatures(first);
    auto const sig2 = element_signatures(second);
    {
      auto s1 = sig1, s2 = sig2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) {
        return std::nullopt;
      }
    }

    constexpr Element     unset = static_cast<Element>(-1);
    std::vector<Element>  image(n, unset);
    std::vector<bool>     used(n, false);
    std::vector<Element>  candidate(n, 0);
    std::size_t           depth = 0;

    auto consistent = [&](Element a, Element b) {
      if (used[b] || sig1[a] != sig2[b]) {
        return false;
      }
      for (Element p = 0; p < a; ++p) {
        Element q = image[p];
        if (first.leq(p, a) != second.leq(q, b)
            || first.leq(a, p) != second.leq(b, q)) {
          return false;
        }
      }
      image[a] = b;
      bool ok  = compatible(image, a, b);
      image[a] = unset;
      return ok;
    };

    // Iterative backtracking over elements of `first` in index order.
    while (true) {
      if (depth == n) {
        return image;
      }
      Element a     = static_cast<Element>(depth);
      bool    found = false;
      for (Element b = candidate[depth]; b < n; ++b) {
        if (consistent(a, b)) {
          image[a]         = b;
          used[b]          = true;
          candidate[depth] = b + 1;
          found            = true;
          break;
        }
      }
      if (found) {
        ++depth;
        if (depth < n) {
          candidate[depth] = 0;
        }
        continue;
      }
      if (depth == 0) {
        return std::nullopt;
      }
      --depth;
      Element prev = static_cast<Element>(depth);
      used[image[prev]] = false;
      image[prev]       = unset;
    }
  }

}  // namespace complat::detail
