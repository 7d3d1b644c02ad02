#include "complat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "complat/error.hpp"

namespace complat {

UnionFind::UnionFind(std::size_t n) : _parent(n), _weight(n, 1) {
  std::iota(_parent.begin(), _parent.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (_parent[x] != x) {
    _parent[x] = _parent[_parent[x]];
    x          = _parent[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (_weight[x] < _weight[y]) {
    std::swap(x, y);
  }
  _parent[y] = x;
  _weight[x] += _weight[y];
  return true;
}

Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
  Partition                p;
  std::size_t const        none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> renumber;
  p._block.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= renumber.size()) {
      renumber.resize(labels[i] + 1, none);
    }
    if (renumber[labels[i]] == none) {
      renumber[labels[i]] = p._count++;
    }
    p._block[i] = renumber[labels[i]];
  }
  return p;
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

Partition Partition::indiscrete(std::size_t n) {
  return from_labels(std::vector<std::size_t>(n, 0));
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::vector<std::size_t> labels(uf.size());
  for (std::size_t i = 0; i < uf.size(); ++i) {
    labels[i] = uf.find(i);
  }
  return from_labels(labels);
}

std::vector<std::vector<Element>> Partition::classes() const {
  std::vector<std::vector<Element>> result(_count);
  for (Element x = 0; x < _block.size(); ++x) {
    result[_block[x]].push_back(x);
  }
  return result;
}

bool Partition::refines(Partition const& other) const {
  // Each block of *this maps into a single block of other.
  std::vector<std::size_t> image(_count, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < _block.size(); ++x) {
    auto& slot = image[_block[x]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = other._block[x];
    } else if (slot != other._block[x]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(Partition const& other) const {
  std::vector<std::size_t> labels(_block.size());
  for (std::size_t x = 0; x < _block.size(); ++x) {
    labels[x] = _block[x] * other._count + other._block[x];
  }
  return from_labels(labels);
}

Partition Partition::join(Partition const& other) const {
  UnionFind                uf(_block.size());
  std::vector<std::size_t> first_a(_count, static_cast<std::size_t>(-1));
  std::vector<std::size_t> first_b(other._count, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < _block.size(); ++x) {
    auto& fa = first_a[_block[x]];
    fa == static_cast<std::size_t>(-1) ? (void) (fa = x) : (void) uf.unite(fa, x);
    auto& fb = first_b[other._block[x]];
    fb == static_cast<std::size_t>(-1) ? (void) (fb = x) : (void) uf.unite(fb, x);
  }
  return from_union_find(uf);
}

bool operator<(Partition const& a, Partition const& b) {
  if (a._count != b._count) {
    return a._count > b._count;
  }
  return a._block < b._block;
}

namespace {
  std::string render(std::vector<std::string> const& names,
                     Partition const&                p,
                     bool                            nontrivial_only) {
    std::string out;
    for (auto const& cls : p.classes()) {
      if (nontrivial_only && cls.size() < 2) {
        continue;
      }
      out += '{';
      for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += names[cls[i]];
      }
      out += '}';
    }
    return out;
  }
}  // namespace

std::string format_partition(FiniteLattice const& L, Partition const& p) {
  return render(L.names(), p, false);
}

std::string format_partition(CLattice const& A, Partition const& p) {
  return format_partition(A.lattice(), p);
}

std::string format_nontrivial_classes(CLattice const& A, Partition const& p) {
  return render(A.lattice().names(), p, true);
}

bool is_congruence(CLattice const& A, Partition const& p) {
  std::size_t const n = A.size();
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (!p.related(u, v)) {
        continue;
      }
      if (!p.related(A.comp(u), A.comp(v))) {
        return false;
      }
      for (Element w = 0; w < n; ++w) {
        if (!p.related(A.join(u, w), A.join(v, w))
            || !p.related(A.meet(u, w), A.meet(v, w))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

  // Closes the relation in `uf` under the basic translations, starting from
  // the pairs in `pending` that have just been merged.
  void close_under_translations(CLattice const&                       A,
                                UnionFind&                            uf,
                                std::deque<std::pair<Element, Element>> pending) {
    std::size_t const n = A.size();
    auto              relate = [&](Element u, Element v) {
      if (uf.unite(u, v)) {
        pending.emplace_back(u, v);
      }
    };
    while (!pending.empty()) {
      auto [u, v] = pending.front();
      pending.pop_front();
      relate(A.comp(u), A.comp(v));
      for (Element w = 0; w < n; ++w) {
        relate(A.join(u, w), A.join(v, w));
        relate(A.meet(u, w), A.meet(v, w));
      }
    }
  }

}  // namespace

Partition principal_congruence(CLattice const& A, Element a, Element b) {
  UnionFind                               uf(A.size());
  std::deque<std::pair<Element, Element>> pending;
  if (uf.unite(a, b)) {
    pending.emplace_back(a, b);
  }
  close_under_translations(A, uf, std::move(pending));
  return Partition::from_union_find(uf);
}

Partition generated_congruence(CLattice const& A, Partition const& seed) {
  UnionFind                               uf(A.size());
  std::deque<std::pair<Element, Element>> pending;
  for (auto const& cls : seed.classes()) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      if (uf.unite(cls[0], cls[i])) {
        pending.emplace_back(cls[0], cls[i]);
      }
    }
  }
  close_under_translations(A, uf, std::move(pending));
  return Partition::from_union_find(uf);
}

std::vector<Partition> all_congruences(CLattice const& A) {
  std::size_t const   n = A.size();
  std::set<Partition> principals;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      principals.insert(principal_congruence(A, a, b));
    }
  }
  // Every congruence is a join of principal ones; close {diagonal} under
  // joining with principals.
  std::set<Partition>    found{Partition::discrete(n)};
  std::vector<Partition> work{Partition::discrete(n)};
  while (!work.empty()) {
    Partition theta = std::move(work.back());
    work.pop_back();
    for (auto const& p : principals) {
      Partition joined = theta.join(p);
      if (found.insert(joined).second) {
        work.push_back(std::move(joined));
      }
    }
  }
  return {found.begin(), found.end()};
}

FiniteLattice congruence_lattice(CLattice const& A) {
  auto const               cons = all_congruences(A);
  std::size_t const        m    = cons.size();
  std::vector<std::string> names;
  for (auto const& c : cons) {
    names.push_back(format_partition(A, c));
  }
  std::vector<std::uint8_t> leq(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq[i * m + j] = cons[i].refines(cons[j]);
    }
  }
  return FiniteLattice::from_order(std::move(names), std::move(leq));
}

std::optional<Partition> monolith(CLattice const& A) {
  if (A.size() < 2) {
    throw Error(ErrorCode::TrivialAlgebra, "one-element algebra");
  }
  auto const cons = all_congruences(A);
  // cons[0] is the diagonal; the atoms are the minimal nontrivial members.
  std::vector<Partition const*> atoms;
  for (std::size_t i = 1; i < cons.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < cons.size() && minimal; ++j) {
      minimal = j == i || !(cons[j].refines(cons[i]));
    }
    if (minimal) {
      atoms.push_back(&cons[i]);
    }
  }
  if (atoms.size() == 1) {
    return *atoms.front();
  }
  return std::nullopt;
}

}  // namespace complat
