#include "complat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>

#include "complat/error.hpp"

namespace complat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::NoComplementation: return "NoComplementation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::TrivialAlgebra: return "TrivialAlgebra";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::IncompleteClosure: return "IncompleteClosure";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

  void check_labels(std::vector<std::string> const& names) {
    if (names.empty()) {
      throw Error(ErrorCode::NotBounded, "empty universe");
    }
    std::unordered_set<std::string_view> seen;
    for (auto const& n : names) {
      if (n.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty element label");
      }
      if (!seen.insert(n).second) {
        throw Error(ErrorCode::DuplicateLabel, "label '" + n + "'");
      }
    }
  }

}  // namespace

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> names,
                                         std::span<Cover const>   covers) {
  check_labels(names);
  std::size_t const n = names.size();
  auto              lookup = [&](std::string const& label) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) {
      throw Error(ErrorCode::UnknownLabel, "label '" + label + "' in cover");
    }
    return static_cast<std::size_t>(it - names.begin());
  };

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
  }
  for (auto const& [lo, hi] : covers) {
    std::size_t a = lookup(lo), b = lookup(hi);
    if (a == b) {
      throw Error(ErrorCode::CycleDetected, "self-cover on '" + lo + "'");
    }
    leq[a * n + b] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        leq[i * n + j] |= leq[k * n + j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorCode::CycleDetected,
                    "covers relate '" + names[i] + "' and '" + names[j]
                        + "' both ways");
      }
    }
  }
  return from_order(std::move(names), std::move(leq));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string>  names,
                                        std::vector<std::uint8_t> leq) {
  check_labels(names);
  std::size_t const n = names.size();
  if (leq.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "order matrix has wrong size");
  }
  auto rel = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!rel(a, a)) {
      throw Error(ErrorCode::InvalidArgument,
                  "order is not reflexive at '" + names[a] + "'");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel(a, b) && rel(b, a)) {
        throw Error(ErrorCode::CycleDetected,
                    "'" + names[a] + "' and '" + names[b] + "'");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (rel(a, b) && rel(b, c) && !rel(a, c)) {
          throw Error(ErrorCode::InvalidArgument, "order is not transitive");
        }
      }
    }
  }

  // Stable topological order: among minimal remaining elements always take
  // the one declared first.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel(a, b)) {
        ++indegree[b];
      }
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>
                           ready;
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (indegree[a] == 0) {
      ready.push(a);
    }
  }
  while (!ready.empty()) {
    std::size_t a = ready.top();
    ready.pop();
    order.push_back(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rel(a, b) && --indegree[b] == 0) {
        ready.push(b);
      }
    }
  }

  FiniteLattice result;
  result._names.reserve(n);
  for (auto i : order) {
    result._names.push_back(std::move(names[i]));
  }
  result._leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result._leq[i * n + j] = leq[order[i] * n + order[j]];
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!result._leq[x] ) {
      throw Error(ErrorCode::NotBounded, "no least element");
    }
    if (!result._leq[x * n + (n - 1)]) {
      throw Error(ErrorCode::NotBounded, "no greatest element");
    }
  }

  // In a linear extension the least upper bound, if any, is the first upper
  // bound; the greatest lower bound is the last lower bound.
  result._join.assign(n * n, 0);
  result._meet.assign(n * n, 0);
  auto const& r = result._leq;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::size_t u = 0;
      while (!(r[a * n + u] && r[b * n + u])) {
        ++u;
      }
      for (std::size_t v = u + 1; v < n; ++v) {
        if (r[a * n + v] && r[b * n + v] && !r[u * n + v]) {
          throw Error(ErrorCode::NotALattice,
                      "'" + result._names[a] + "' and '" + result._names[b]
                          + "' have no least upper bound");
        }
      }
      std::size_t l = n - 1;
      while (!(r[l * n + a] && r[l * n + b])) {
        --l;
      }
      for (std::size_t v = 0; v < l; ++v) {
        if (r[v * n + a] && r[v * n + b] && !r[v * n + l]) {
          throw Error(ErrorCode::NotALattice,
                      "'" + result._names[a] + "' and '" + result._names[b]
                          + "' have no greatest lower bound");
        }
      }
      result._join[a * n + b] = result._join[b * n + a] =
          static_cast<Element>(u);
      result._meet[a * n + b] = result._meet[b * n + a] =
          static_cast<Element>(l);
    }
  }
  return result;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  auto it = std::find(_names.begin(), _names.end(), label);
  if (it == _names.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - _names.begin());
}

Element FiniteLattice::index_of(std::string_view label) const {
  if (auto e = find(label)) {
    return *e;
  }
  throw Error(ErrorCode::UnknownLabel, "'" + std::string(label) + "'");
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> result;
  std::size_t const                        n = size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!leq(a, b)) {
        continue;
      }
      bool is_cover = true;
      for (Element c = a + 1; c < b && is_cover; ++c) {
        is_cover = !(leq(a, c) && leq(c, b));
      }
      if (is_cover) {
        result.emplace_back(a, b);
      }
    }
  }
  return result;
}

std::optional<Triple> distributivity_witness(FiniteLattice const& L) {
  Element const n = static_cast<Element>(L.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          return Triple{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> modularity_witness(FiniteLattice const& L) {
  Element const n = static_cast<Element>(L.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        Element xz = L.meet(x, z);
        if (L.meet(x, L.join(y, xz)) != L.join(L.meet(x, y), xz)) {
          return Triple{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {
  std::vector<Signature> element_signatures(FiniteLattice const& L) {
    std::size_t const      n = L.size();
    std::vector<Signature> sig(n, Signature{0, 0, 0, 0});
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (L.leq(b, a)) {
          ++sig[a][0];
        }
        if (L.leq(a, b)) {
          ++sig[a][1];
        }
      }
    }
    for (auto [lo, hi] : L.covers()) {
      ++sig[hi][2];
      ++sig[lo][3];
    }
    return sig;
  }
}  // namespace detail

std::optional<std::vector<Element>> are_isomorphic(FiniteLattice const& first,
                                                   FiniteLattice const& second) {
  return detail::isomorphism_search(
      first, second, [](auto const&, Element, Element) { return true; });
}

std::vector<std::uint8_t> canonical_key(FiniteLattice const& L) {
  std::size_t const n = L.size();
  if (n <= 2) {
    return L.order_matrix();
  }
  // Group interior elements by (down-set size, up-set size); permutations
  // range over orderings within each group.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Element>> keyed;
  for (Element a = 1; a + 1 < n; ++a) {
    std::size_t down = 0, up = 0;
    for (Element b = 0; b < n; ++b) {
      down += L.leq(b, a);
      up += L.leq(a, b);
    }
    keyed.push_back({{down, up}, a});
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      group_start.push_back(i);
    }
  }
  group_start.push_back(keyed.size());

  std::vector<Element> perm(n);
  perm.front() = 0;
  perm.back()  = static_cast<Element>(n - 1);
  std::vector<Element> interior;
  for (auto const& k : keyed) {
    interior.push_back(k.second);
  }

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> current(n * n);
  // Odometer over per-group permutations.
  std::vector<std::vector<Element>> groups;
  for (std::size_t g = 0; g + 1 < group_start.size(); ++g) {
    groups.emplace_back(interior.begin() + group_start[g],
                        interior.begin() + group_start[g + 1]);
    std::sort(groups.back().begin(), groups.back().end());
  }
  while (true) {
    std::size_t pos = 1;
    for (auto const& g : groups) {
      for (auto e : g) {
        perm[pos++] = e;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        current[i * n + j] = L.leq(perm[i], perm[j]);
      }
    }
    if (best.empty() || current < best) {
      best = current;
    }
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (std::next_permutation(groups[g].begin(), groups[g].end())) {
        break;
      }
    }
    if (g == groups.size()) {
      break;
    }
  }
  return best;
}

}  // namespace complat
