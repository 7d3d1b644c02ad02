#include "complat/complemented.hpp"

#include "complat/error.hpp"

namespace complat {

CLattice::CLattice(std::shared_ptr<FiniteLattice const> lattice,
                   UnaryTable                           unary)
    : _lattice(std::move(lattice)), _unary(std::move(unary)) {
  if (!_lattice) {
    throw Error(ErrorCode::InvalidArgument, "null lattice");
  }
  if (_unary.size() != _lattice->size()) {
    throw Error(ErrorCode::InvalidArgument,
                "unary table is not total over the universe");
  }
  for (auto v : _unary) {
    if (v >= _unary.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "unary table value out of range");
    }
  }
}

CLattice::CLattice(FiniteLattice lattice, UnaryTable unary)
    : CLattice(std::make_shared<FiniteLattice const>(std::move(lattice)),
               std::move(unary)) {}

std::optional<Element> complementation_witness(CLattice const& A) {
  for (Element x = 0; x < A.size(); ++x) {
    if (A.join(x, A.comp(x)) != A.top() || A.meet(x, A.comp(x)) != A.bottom()) {
      return x;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> antitone_witness(CLattice const& A) {
  for (Element x = 0; x < A.size(); ++x) {
    for (Element y = 0; y < A.size(); ++y) {
      if (A.leq(x, y) && !A.leq(A.comp(y), A.comp(x))) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<Element> involution_witness(CLattice const& A) {
  for (Element x = 0; x < A.size(); ++x) {
    if (A.comp(A.comp(x)) != x) {
      return x;
    }
  }
  return std::nullopt;
}

std::vector<Element> complements_of(FiniteLattice const& L, Element a) {
  std::vector<Element> result;
  for (Element b = 0; b < L.size(); ++b) {
    if (L.join(a, b) == L.top() && L.meet(a, b) == L.bottom()) {
      result.push_back(b);
    }
  }
  return result;
}

namespace {

  std::vector<UnaryTable>
  product_of_choices(std::vector<std::vector<Element>> const& choices) {
    std::vector<UnaryTable> result;
    std::size_t const       n = choices.size();
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      UnaryTable table(n);
      for (std::size_t i = 0; i < n; ++i) {
        table[i] = choices[i][digit[i]];
      }
      result.push_back(std::move(table));
      // Last element varies fastest, giving lexicographic order.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++digit[i] < choices[i].size()) {
          break;
        }
        digit[i] = 0;
        if (i == 0) {
          return result;
        }
      }
      if (n == 0) {
        return result;
      }
    }
  }

}  // namespace

std::vector<UnaryTable> enumerate_complementations(FiniteLattice const& L) {
  std::vector<std::vector<Element>> choices;
  for (Element x = 0; x < L.size(); ++x) {
    choices.push_back(complements_of(L, x));
    if (choices.back().empty()) {
      throw Error(ErrorCode::NoComplementation,
                  "element '" + L.name(x) + "' has no complement");
    }
  }
  return product_of_choices(choices);
}

std::vector<UnaryTable> complementations_or_empty(FiniteLattice const& L) {
  std::vector<std::vector<Element>> choices;
  for (Element x = 0; x < L.size(); ++x) {
    choices.push_back(complements_of(L, x));
    if (choices.back().empty()) {
      return {};
    }
  }
  return product_of_choices(choices);
}

std::optional<std::vector<Element>> are_isomorphic(CLattice const& first,
                                                   CLattice const& second) {
  constexpr Element unset = static_cast<Element>(-1);
  return detail::isomorphism_search(
      first.lattice(),
      second.lattice(),
      [&](std::vector<Element> const& image, Element, Element) {
        for (Element p = 0; p < image.size(); ++p) {
          if (image[p] == unset) {
            continue;
          }
          Element q = image[first.comp(p)];
          if (q != unset && q != second.comp(image[p])) {
            return false;
          }
        }
        return true;
      });
}

}  // namespace complat
