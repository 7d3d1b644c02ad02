#include "complat/catalog.hpp"

#include <charconv>

#include "complat/error.hpp"

namespace complat {

CLattice CatalogEntry::algebra() const {
  if (!unary) {
    throw Error(ErrorCode::InvalidArgument,
                "catalog entry '" + key + "' carries no unary table");
  }
  return CLattice(lattice, *unary);
}

namespace {

  using Pairs = std::vector<std::pair<std::string, std::string>>;

  CatalogEntry make(std::string               key,
                    std::vector<std::string>  names,
                    Pairs const&              covers,
                    Pairs const&              comp,
                    std::string               provenance) {
    auto       L = FiniteLattice::from_covers(std::move(names), covers);
    UnaryTable table(L.size());
    for (auto const& [x, y] : comp) {
      table[L.index_of(x)] = L.index_of(y);
    }
    return CatalogEntry{std::move(key), std::move(L), std::move(table),
                        std::move(provenance)};
  }

  Pairs const m3_covers
      = {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
  // 0 < a < c < 1 and 0 < b < 1
  Pairs const n5_covers
      = {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}};
  // 0 < a < b < 1 and 0 < c < d < 1
  Pairs const o6_covers = {{"0", "a"}, {"a", "b"}, {"b", "1"},
                           {"0", "c"}, {"c", "d"}, {"d", "1"}};

  std::vector<std::string> const fig_names
      = {"0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"};
  Pairs const fig_comp = {{"0", "1"}, {"1", "0"},   {"a", "a'"}, {"a'", "a"},
                          {"b", "b'"}, {"b'", "b"}, {"c", "c'"}, {"c'", "c"},
                          {"d", "d'"}, {"d'", "d"}};

  std::optional<unsigned> parse_param(std::string_view key,
                                      std::string_view prefix) {
    if (key.size() < prefix.size() + 2 || key.substr(0, prefix.size()) != prefix
        || key[prefix.size()] != '(' || key.back() != ')') {
      return std::nullopt;
    }
    auto     digits = key.substr(prefix.size() + 1,
                             key.size() - prefix.size() - 2);
    unsigned value  = 0;
    auto [ptr, ec]  = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    return value;
  }

}  // namespace

CatalogEntry boolean_algebra(unsigned atoms) {
  if (atoms > 8) {
    throw Error(ErrorCode::InvalidArgument, "BOOLN supports at most 8 atoms");
  }
  std::size_t const        n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      names.emplace_back("0");
    } else if (mask == n - 1) {
      names.emplace_back("1");
    } else {
      std::string s;
      for (unsigned i = 0; i < atoms; ++i) {
        if (mask & (std::size_t{1} << i)) {
          s += static_cast<char>('a' + i);
        }
      }
      names.push_back(std::move(s));
    }
  }
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a * n + b] = (a & ~b) == 0;
    }
  }
  auto       L = FiniteLattice::from_order(names, std::move(leq));
  UnaryTable table(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    table[L.index_of(names[mask])] = L.index_of(names[(n - 1) & ~mask]);
  }
  return CatalogEntry{"BOOLN(" + std::to_string(atoms) + ")", std::move(L),
                      std::move(table),
                      "Boolean algebra of subsets of an "
                          + std::to_string(atoms)
                          + "-element set with set complement"};
}

CatalogEntry chain(unsigned length) {
  if (length == 0) {
    throw Error(ErrorCode::InvalidLength, "chains have at least one element");
  }
  std::vector<std::string> names{"0"};
  for (unsigned i = 1; i + 1 < length; ++i) {
    names.push_back("c" + std::to_string(i));
  }
  if (length > 1) {
    names.emplace_back("1");
  }
  Pairs covers;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    covers.emplace_back(names[i], names[i + 1]);
  }
  auto                      L = FiniteLattice::from_covers(names, covers);
  std::optional<UnaryTable> unary;
  if (length == 1) {
    unary = UnaryTable{0};
  } else if (length == 2) {
    unary = UnaryTable{1, 0};
  }
  return CatalogEntry{"CHAIN(" + std::to_string(length) + ")", std::move(L),
                      std::move(unary),
                      std::to_string(length) + "-element chain"};
}

CatalogEntry catalog(std::string_view key) {
  if (key == "M3P") {
    return make("M3P", {"0", "a", "b", "c", "1"}, m3_covers,
                {{"0", "1"}, {"a", "b"}, {"b", "c"}, {"c", "a"}, {"1", "0"}},
                "modular lattice M3 with the cyclic complementation "
                "a'=b, b'=c, c'=a");
  }
  if (key == "N5") {
    return make("N5", {"0", "a", "b", "c", "1"}, n5_covers,
                {{"0", "1"}, {"a", "b"}, {"b", "a"}, {"c", "b"}, {"1", "0"}},
                "pentagon N5 (0<a<c<1, 0<b<1) with a'=b, b'=a, c'=b; the "
                "published table lists 1'=1, stored as 1'=0 since x&x'=0 "
                "forces it");
  }
  if (key == "N5STAR") {
    return make("N5STAR", {"0", "a", "b", "c", "1"}, n5_covers,
                {{"0", "1"}, {"a", "b"}, {"b", "c"}, {"c", "b"}, {"1", "0"}},
                "pentagon N5 with a'=b, b'=c, c'=b; the published table "
                "lists 1'=1, stored as 1'=0 since x&x'=0 forces it");
  }
  if (key == "O6") {
    return make("O6", {"0", "a", "b", "c", "d", "1"}, o6_covers,
                {{"0", "1"},
                 {"a", "d"},
                 {"b", "c"},
                 {"c", "b"},
                 {"d", "a"},
                 {"1", "0"}},
                "benzene ring O6 (0<a<b<1, 0<c<d<1) with the antitone "
                "involution a'=d, b'=c");
  }
  if (key == "O6STAR") {
    return make("O6STAR", {"0", "a", "b", "c", "d", "1"}, o6_covers,
                {{"0", "1"},
                 {"a", "c"},
                 {"b", "d"},
                 {"c", "a"},
                 {"d", "b"},
                 {"1", "0"}},
                "benzene ring O6 with the non-antitone involution a'=c, "
                "b'=d");
  }
  if (key == "FIG2") {
    // Horizontal sum of two copies of 0 < a < {c,d} < b' < 1 (and its
    // primed mirror), orthocomplemented by x <-> x'.
    return make("FIG2", fig_names,
                {{"0", "a"},
                 {"0", "b"},
                 {"a", "c"},
                 {"a", "d"},
                 {"c", "b'"},
                 {"d", "b'"},
                 {"b", "d'"},
                 {"b", "c'"},
                 {"d'", "a'"},
                 {"c'", "a'"},
                 {"b'", "1"},
                 {"a'", "1"}},
                fig_comp,
                "ten-element ortholattice, not subdirectly irreducible; "
                "c' and d' are incomparable complements of c");
  }
  if (key == "FIG3") {
    return make("FIG3", fig_names,
                {{"0", "a"},
                 {"0", "b"},
                 {"0", "c"},
                 {"a", "d"},
                 {"b", "c'"},
                 {"b", "d'"},
                 {"c", "d'"},
                 {"c", "b'"},
                 {"d", "c'"},
                 {"d", "b'"},
                 {"d'", "a'"},
                 {"a'", "1"},
                 {"c'", "1"},
                 {"b'", "1"}},
                fig_comp,
                "ten-element subdirectly irreducible ortholattice; a' and "
                "d' are comparable complements of a");
  }
  if (key == "BOOL2") {
    auto e       = chain(2);
    e.key        = "BOOL2";
    e.provenance = "two-element Boolean algebra";
    return e;
  }
  if (auto n = parse_param(key, "BOOLN")) {
    return boolean_algebra(*n);
  }
  if (auto k = parse_param(key, "CHAIN")) {
    return chain(*k);
  }
  throw Error(ErrorCode::UnknownKey, "'" + std::string(key) + "'");
}

std::vector<std::string> catalog_keys() {
  return {"M3P", "N5", "N5STAR", "O6", "O6STAR", "FIG2", "FIG3", "BOOL2"};
}

}  // namespace complat
