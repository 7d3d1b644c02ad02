#include "complat/verifier.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <unordered_map>

#include "complat/catalog.hpp"
#include "complat/constructions.hpp"
#include "complat/error.hpp"
#include "complat/free_algebra.hpp"
#include "complat/lat_format.hpp"
#include "complat/parallel.hpp"
#include "complat/term.hpp"

namespace complat {

// ---------------------------------------------------------------------------
// Lattice enumeration
// ---------------------------------------------------------------------------

namespace {

  // Strict down-sets of a naturally labelled poset on the interior, as
  // bitmasks. Element k may only sit above elements with smaller labels, and
  // its down-set has to be an order ideal of what came before.
  void interior_posets(unsigned                                    m,
                       std::vector<std::uint32_t>&                 below,
                       std::function<void(std::vector<std::uint32_t> const&)> const& emit) {
    unsigned const k = static_cast<unsigned>(below.size());
    if (k == m) {
      emit(below);
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool ideal = true;
      for (unsigned j = 0; j < k && ideal; ++j) {
        if ((mask >> j & 1) && (below[j] & ~mask) != 0) {
          ideal = false;
        }
      }
      if (ideal) {
        below.push_back(mask);
        interior_posets(m, below, emit);
        below.pop_back();
      }
    }
  }

  bool has_all_joins(std::vector<std::uint8_t> const& leq, std::size_t n) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        bool found = false;
        for (std::size_t u = 0; u < n && !found; ++u) {
          if (!leq[x * n + u] || !leq[y * n + u]) {
            continue;
          }
          bool least = true;
          for (std::size_t v = 0; v < n && least; ++v) {
            if (leq[x * n + v] && leq[y * n + v] && !leq[u * n + v]) {
              least = false;
            }
          }
          found = least;
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::string> enumeration_names(unsigned size) {
    std::vector<std::string> names{"0"};
    for (unsigned i = 0; i + 2 < size; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
    }
    if (size >= 2) {
      names.emplace_back("1");
    }
    return names;
  }

}  // namespace

std::vector<FiniteLattice> lattices_of_size(unsigned size) {
  if (size == 0) {
    throw Error(ErrorCode::InvalidArgument, "lattice size must be positive");
  }
  if (size > max_enumeration_size) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumeration is limited to " + std::to_string(max_enumeration_size)
                    + " elements");
  }
  auto const names = enumeration_names(size);
  if (size <= 2) {
    std::vector<std::uint8_t> leq(size * size, 0);
    for (unsigned x = 0; x < size; ++x) {
      for (unsigned y = x; y < size; ++y) {
        leq[x * size + y] = 1;
      }
    }
    return {FiniteLattice::from_order(names, std::move(leq))};
  }

  unsigned const                         m = size - 2;
  std::set<std::vector<std::uint8_t>>    keys;
  std::vector<std::uint32_t>             below;
  interior_posets(m, below, [&](std::vector<std::uint32_t> const& down) {
    std::vector<std::uint8_t> leq(size * size, 0);
    for (unsigned x = 0; x < size; ++x) {
      leq[x * size + x]        = 1;
      leq[0 * size + x]        = 1;
      leq[x * size + size - 1] = 1;
    }
    for (unsigned k = 0; k < m; ++k) {
      for (unsigned j = 0; j < m; ++j) {
        if (down[k] >> j & 1) {
          leq[(j + 1) * size + (k + 1)] = 1;
        }
      }
    }
    if (!has_all_joins(leq, size)) {
      return;
    }
    keys.insert(canonical_key(FiniteLattice::from_order(names, std::move(leq))));
  });

  std::vector<FiniteLattice> result;
  result.reserve(keys.size());
  for (auto const& key : keys) {
    result.push_back(FiniteLattice::from_order(names, key));
  }
  return result;
}

std::vector<FiniteLattice> enumerate_lattices(unsigned max_size) {
  if (max_size == 0) {
    throw Error(ErrorCode::InvalidArgument, "max size must be positive");
  }
  if (max_size > max_enumeration_size) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumeration is limited to " + std::to_string(max_enumeration_size)
                    + " elements");
  }
  std::vector<FiniteLattice> all;
  for (unsigned s = 1; s <= max_size; ++s) {
    auto part = lattices_of_size(s);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return all;
}

std::vector<CLattice> enumerate_complemented(unsigned max_size) {
  std::vector<CLattice> out;
  for (auto& L : enumerate_lattices(max_size)) {
    if (L.size() < 2) {
      continue;
    }
    auto tables = complementations_or_empty(L);
    auto shared = std::make_shared<FiniteLattice const>(std::move(L));
    for (auto& t : tables) {
      out.emplace_back(shared, std::move(t));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

namespace {

  struct Outcome {
    bool                       hypothesis = false;
    std::optional<std::string> failure;
  };

  using Check = std::function<Outcome(CLattice const&)>;

  Identity const& id(std::string_view name) {
    static std::map<std::string, Identity, std::less<>> const cache = [] {
      std::map<std::string, Identity, std::less<>> m;
      for (auto const& [key, text] : builtin_registry()) {
        m.emplace(key, builtin(key));
      }
      return m;
    }();
    return cache.find(name)->second;
  }

  std::optional<std::string> identity_failure(CLattice const& A,
                                              std::string_view name) {
    auto const& identity = id(name);
    if (auto w = check_identity(A, identity)) {
      return std::string(name) + ": " + format_witness(A, identity, *w);
    }
    return std::nullopt;
  }

  bool holds(CLattice const& A, std::string_view name) {
    return satisfies(A, id(name));
  }

  std::string fact(std::string_view name, bool value) {
    return std::string(name) + (value ? " holds" : " fails");
  }

  Outcome check_lem12(CLattice const& A) {
    Outcome o;
    for (auto name : {"abs-i", "abs-ii"}) {
      if (holds(A, name)) {
        o.hypothesis = true;
        if (auto f = identity_failure(A, "involution")) {
          o.failure = std::string(name) + " holds; " + *f;
          return o;
        }
      }
    }
    return o;
  }

  Outcome check_lem15(CLattice const& A) {
    Outcome o;
    if (!holds(A, "coincidence")) {
      return o;
    }
    o.hypothesis = true;
    if (auto f = identity_failure(A, "lemma-unit")) {
      o.failure = f;
      return o;
    }
    for (Element a = 0; a < A.size(); ++a) {
      bool le = A.leq(A.meet(a, A.comp(A.comp(a))), A.comp(a));
      if (le != (a == A.bottom())) {
        o.failure = "a=" + A.name(a) + " a&a''<=a' " + (le ? "true" : "false");
        return o;
      }
    }
    return o;
  }

  Outcome check_lem21(CLattice const& A) {
    Outcome o;
    if (!is_ortholattice(A) || !holds(A, "coincidence")) {
      return o;
    }
    o.hypothesis = true;
    for (auto name : {"sd-partition-join", "sd-partition-meet"}) {
      if (auto f = identity_failure(A, name)) {
        o.failure = f;
        return o;
      }
    }
    return o;
  }

  Outcome check_th22(CLattice const& A) {
    Outcome o;
    if (A.size() < 2 || !is_complementation(A) || !holds(A, "coincidence")) {
      return o;
    }
    o.hypothesis = true;
    auto complement = [&](Element x, Element y) {
      return A.join(x, y) == A.top() && A.meet(x, y) == A.bottom();
    };
    for (Element a = 0; a < A.size(); ++a) {
      for (Element b = 0; b < A.size(); ++b) {
        if (complement(a, b) && complement(A.comp(a), b)) {
          o.failure = "a=" + A.name(a) + " b=" + A.name(b);
          return o;
        }
      }
    }
    return o;
  }

  std::vector<CLattice> const& m3_variants() {
    static std::vector<CLattice> const variants = [] {
      auto                  L = std::make_shared<FiniteLattice const>(catalog("M3P").lattice);
      std::vector<CLattice> v;
      for (auto& t : enumerate_complementations(*L)) {
        v.emplace_back(L, std::move(t));
      }
      return v;
    }();
    return variants;
  }

  Outcome check_cor23(CLattice const& A) {
    Outcome o;
    if (!holds(A, "coincidence")) {
      return o;
    }
    o.hypothesis = true;
    for (auto const& M : m3_variants()) {
      if (auto f = find_embedding(M, A)) {
        std::string w = "embedding of M3 with ";
        for (Element x = 0; x < M.size(); ++x) {
          w += M.name(x) + "'=" + M.name(M.comp(x)) + " ";
        }
        w += "as";
        for (Element x = 0; x < M.size(); ++x) {
          w += " " + M.name(x) + "->" + A.name((*f)[x]);
        }
        o.failure = w;
        return o;
      }
    }
    return o;
  }

  Outcome check_th26(CLattice const& A) {
    Outcome o;
    if (!is_ortholattice(A)) {
      return o;
    }
    auto comparable = [&](Element x, Element y) {
      return A.leq(x, y) || A.leq(y, x);
    };
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        if (!comparable(x, y) && !comparable(x, A.comp(y))) {
          return o;
        }
      }
    }
    o.hypothesis = true;
    o.failure    = identity_failure(A, "coincidence");
    return o;
  }

  Outcome check_lem31(CLattice const& A) {
    Outcome o;
    o.hypothesis = true;
    bool i = holds(A, "abs-i"), ii = holds(A, "abs-ii");
    if (i != ii) {
      o.failure = fact("abs-i", i) + "; " + fact("abs-ii", ii);
    }
    return o;
  }

  Outcome check_th32(CLattice const& A) {
    Outcome o;
    if (!holds(A, "abs-i")) {
      return o;
    }
    o.hypothesis = true;
    if (auto w = distributivity_witness(A.lattice())) {
      o.failure = "not distributive at x=" + A.name((*w)[0]) + " y="
                  + A.name((*w)[1]) + " z=" + A.name((*w)[2]);
    }
    return o;
  }

  Outcome check_th33(CLattice const& A) {
    Outcome o;
    o.hypothesis    = true;
    bool const b    = is_boolean(A);
    auto [t1, t2]   = sd_tables(A);
    bool const a1   = is_associative(t1);
    bool const a2   = is_associative(t2);
    if (b != a1 || b != a2) {
      o.failure = fact("boolean", b) + "; " + fact("sd1-assoc", a1) + "; "
                  + fact("sd2-assoc", a2);
    }
    return o;
  }

  Outcome check_th34(CLattice const& A) {
    Outcome o;
    if (!holds(A, "coincidence")) {
      return o;
    }
    o.hypothesis  = true;
    bool const b  = is_boolean(A);
    bool const r1 = holds(A, "sd1-rollback");
    bool const r2 = holds(A, "sd2-rollback");
    if (b != r1 || b != r2) {
      o.failure = fact("boolean", b) + "; " + fact("sd1-rollback", r1) + "; "
                  + fact("sd2-rollback", r2);
    }
    return o;
  }

  Outcome check_th42(CLattice const& A) {
    Outcome    o;
    o.hypothesis     = true;
    bool const lhs   = holds(A, "demorgan-join") && holds(A, "demorgan-meet");
    bool const anti  = is_antitone(A);
    bool const aux_j = holds(A, "th4-aux-join");
    bool const aux_m = holds(A, "th4-aux-meet");
    bool const rhs   = anti && aux_j && aux_m;
    if (lhs != rhs) {
      std::string table = "table";
      for (Element x = 0; x < A.size(); ++x) {
        table += " " + A.name(x) + "'=" + A.name(A.comp(x));
      }
      o.failure = table + "; " + fact("demorgan", lhs) + "; " + fact("antitone", anti)
                  + "; " + fact("th4-aux-join", aux_j) + "; "
                  + fact("th4-aux-meet", aux_m);
    }
    return o;
  }

  struct Tally {
    std::size_t                 checked = 0;
    std::size_t                 hypothesis = 0;
    std::vector<Counterexample> counterexamples;
  };

  void record(Tally& t, CLattice const& A, Outcome const& o) {
    ++t.checked;
    t.hypothesis += o.hypothesis;
    if (o.failure) {
      t.counterexamples.push_back({inline_lat(A), *o.failure});
    }
  }

  template <typename PerItem>
  Tally run_chunked(std::size_t count, unsigned jobs, PerItem const& per_item) {
    std::vector<Tally> parts(chunk_count(count, jobs));
    for_each_chunk(count, jobs, [&](std::size_t c, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        per_item(parts[c], i);
      }
    });
    Tally total;
    for (auto& p : parts) {
      total.checked += p.checked;
      total.hypothesis += p.hypothesis;
      std::move(p.counterexamples.begin(), p.counterexamples.end(),
                std::back_inserter(total.counterexamples));
    }
    std::sort(total.counterexamples.begin(), total.counterexamples.end());
    return total;
  }

  Tally run_on_complemented(unsigned max_size, unsigned jobs, Check const& check) {
    auto const algebras = enumerate_complemented(max_size);
    return run_chunked(algebras.size(), jobs, [&](Tally& t, std::size_t i) {
      record(t, algebras[i], check(algebras[i]));
    });
  }

  Tally run_th42(unsigned max_size, VerifyOptions const& opt) {
    std::vector<std::shared_ptr<FiniteLattice const>> lattices;
    for (auto& L : enumerate_lattices(max_size)) {
      lattices.push_back(std::make_shared<FiniteLattice const>(std::move(L)));
    }
    return run_chunked(lattices.size(), opt.jobs, [&](Tally& t, std::size_t i) {
      auto const&       L = lattices[i];
      std::size_t const n = L->size();
      UnaryTable        table(n, 0);
      if (n <= opt.exhaustive_unary_limit) {
        while (true) {
          CLattice A(L, table);
          record(t, A, check_th42(A));
          std::size_t k = n;
          while (k > 0 && ++table[k - 1] == n) {
            table[--k] = 0;
          }
          if (k == 0) {
            break;
          }
        }
        return;
      }
      std::seed_seq seq{static_cast<std::uint32_t>(opt.seed),
                        static_cast<std::uint32_t>(opt.seed >> 32),
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64                        rng(seq);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      // Every complementation, then random tables.
      for (auto& c : complementations_or_empty(*L)) {
        CLattice A(L, std::move(c));
        record(t, A, check_th42(A));
      }
      for (std::size_t s = 0; s < opt.samples_per_lattice; ++s) {
        for (auto& v : table) {
          v = pick(rng);
        }
        CLattice A(L, table);
        record(t, A, check_th42(A));
      }
    });
  }

  void horizontal_pairs(unsigned lo, unsigned hi, unsigned max_size,
                        std::vector<std::pair<unsigned, unsigned>>& out) {
    for (unsigned p = lo; p <= hi; ++p) {
      for (unsigned q = p; q <= hi; ++q) {
        if (p + q - 2 <= max_size) {
          out.emplace_back(p, q);
        }
      }
    }
  }

  Tally run_hsum(std::vector<std::pair<unsigned, unsigned>> const& pairs,
                 unsigned                                          jobs) {
    return run_chunked(pairs.size(), jobs, [&](Tally& t, std::size_t i) {
      auto [p, q]                   = pairs[i];
      std::array<unsigned, 2> lens{p, q};
      auto L       = std::make_shared<FiniteLattice const>(horizontal_sum(lens));
      auto direct  = hsum_complementations(p, q);
      auto generic = complementations_or_empty(*L);
      std::sort(direct.begin(), direct.end());
      std::sort(generic.begin(), generic.end());
      if (direct != generic) {
        ++t.checked;
        t.counterexamples.push_back(
            {inline_lat(*L), "characterisation gives " + std::to_string(direct.size())
                                 + " tables, enumeration gives "
                                 + std::to_string(generic.size())});
        return;
      }
      for (auto& table : generic) {
        CLattice A(L, std::move(table));
        Outcome  o;
        o.hypothesis = true;
        if (auto f = identity_failure(A, "coincidence")) {
          o.failure = f;
        } else {
          bool dm = holds(A, "demorgan-join") && holds(A, "demorgan-meet");
          if (dm != is_antitone(A)) {
            o.failure = fact("demorgan", dm) + "; " + fact("antitone", !dm);
          }
        }
        record(t, A, o);
      }
    });
  }

  struct Probe {
    char const* key;
    char const* identity;
    bool        expected;
  };

  constexpr std::array<Probe, 12> sep_probes{{
      {"N5", "triple", true},
      {"N5", "ord-lt", true},
      {"N5", "involution", false},
      {"N5STAR", "ord-gt", true},
      {"O6", "involution", true},
      {"O6STAR", "involution", true},
      {"O6", "demorgan-join", true},
      {"O6", "demorgan-meet", true},
      {"O6STAR", "demorgan-join", false},
      {"N5", "coincidence", true},
      {"N5STAR", "coincidence", true},
      {"O6", "coincidence", true},
  }};

  CampaignReport run_sep() {
    CampaignReport r;
    for (auto const& p : sep_probes) {
      CLattice const A        = catalog(p.key).algebra();
      auto const&    identity = id(p.identity);
      auto const     w        = check_identity(A, identity);
      std::string    line = std::string(p.key) + " " + fact(p.identity, !w);
      if (w) {
        line += " at " + format_witness(A, identity, *w);
      }
      ++r.algebras_checked;
      ++r.hypothesis_met;
      if (w.has_value() == p.expected) {
        r.counterexamples.push_back(
            {inline_lat(A), "expected " + fact(p.identity, p.expected) + ", "
                                + (w ? "failure " + format_witness(A, identity, *w)
                                     : std::string("it holds"))});
      }
      r.notes.push_back(std::move(line));
    }
    CLattice const fig3 = catalog("FIG3").algebra();
    for (auto key : {"N5", "N5STAR", "O6", "O6STAR"}) {
      CLattice const other = catalog(key).algebra();
      for (int dir = 0; dir < 2; ++dir) {
        auto const& h = dir == 0 ? fig3 : other;
        auto const& f = dir == 0 ? other : fig3;
        std::string hn = dir == 0 ? "FIG3" : key, fn = dir == 0 ? key : "FIG3";
        std::optional<SeparatingIdentity> s;
        for (unsigned n = 1; n <= 2 && !s; ++n) {
          s = find_separating_identity(h, f, n);
        }
        if (s) {
          r.notes.push_back("separating " + s->lhs + " = " + s->rhs + " holds in "
                            + hn + ", fails in " + fn + " at " + s->witness);
        } else if (find_embedding(f, h)) {
          r.notes.push_back("separating none: " + fn + " embeds in " + hn);
        } else {
          r.notes.push_back("separating none found in two variables for " + hn
                            + " over " + fn);
        }
      }
    }
    return r;
  }

}  // namespace

std::vector<std::string> const& theorem_ids() {
  static std::vector<std::string> const ids{"LEM12", "LEM15", "LEM21", "TH22",
                                            "COR23", "TH26",  "TH27",  "LEM31",
                                            "TH32",  "TH33",  "TH34",  "TH42",
                                            "SEP"};
  return ids;
}

CampaignReport verify(std::string_view theorem, unsigned max_size,
                      VerifyOptions const& options) {
  auto const start = std::chrono::steady_clock::now();
  static std::map<std::string, Outcome (*)(CLattice const&), std::less<>> const
      checks{{"LEM12", check_lem12}, {"LEM15", check_lem15},
             {"LEM21", check_lem21}, {"TH22", check_th22},
             {"COR23", check_cor23}, {"TH26", check_th26},
             {"LEM31", check_lem31}, {"TH32", check_th32},
             {"TH33", check_th33},   {"TH34", check_th34}};

  CampaignReport report;
  if (theorem == "SEP") {
    report = run_sep();
  } else {
    Tally t;
    if (auto it = checks.find(theorem); it != checks.end()) {
      t = run_on_complemented(max_size, options.jobs, it->second);
    } else if (theorem == "TH42") {
      t = run_th42(max_size, options);
    } else if (theorem == "TH27") {
      std::vector<std::pair<unsigned, unsigned>> pairs;
      horizontal_pairs(2, max_size, max_size, pairs);
      t = run_hsum(pairs, options.jobs);
    } else {
      throw Error(ErrorCode::UnknownTheorem,
                  "unknown theorem id '" + std::string(theorem) + "'");
    }
    report.algebras_checked = t.checked;
    report.hypothesis_met   = t.hypothesis;
    report.counterexamples  = std::move(t.counterexamples);
  }
  report.theorem  = std::string(theorem);
  report.max_size = max_size;
  report.elapsed  = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

CampaignReport horizontal_sum_suite(unsigned min_length, unsigned max_length,
                                    unsigned jobs) {
  auto const start = std::chrono::steady_clock::now();
  if (min_length < 2 || max_length < min_length) {
    throw Error(ErrorCode::InvalidLength, "bad chain length range");
  }
  std::vector<std::pair<unsigned, unsigned>> pairs;
  horizontal_pairs(min_length, max_length, 2 * max_length, pairs);
  auto           t = run_hsum(pairs, jobs);
  CampaignReport r;
  r.theorem          = "TH27";
  r.max_size         = 2 * max_length - 2;
  r.algebras_checked = t.checked;
  r.hypothesis_met   = t.hypothesis;
  r.counterexamples  = std::move(t.counterexamples);
  r.elapsed          = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

std::string format_report(CampaignReport const& r) {
  std::string out = "theorem=" + r.theorem + " max_size=" + std::to_string(r.max_size)
                    + " algebras=" + std::to_string(r.algebras_checked)
                    + " hypothesis=" + std::to_string(r.hypothesis_met)
                    + " counterexamples=" + std::to_string(r.counterexamples.size())
                    + "\n";
  for (auto const& c : r.counterexamples) {
    out += "algebra=" + c.algebra + " witness=" + c.witness + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Separating identities
// ---------------------------------------------------------------------------

std::optional<SeparatingIdentity>
find_separating_identity(CLattice const& H, CLattice const& F,
                         unsigned generators, std::size_t cap) {
  if (generators == 0 || generators > 3) {
    throw Error(ErrorCode::InvalidArgument, "generators must be 1..3");
  }
  auto power = [](std::size_t q, unsigned n) {
    std::size_t w = 1;
    for (unsigned i = 0; i < n; ++i) {
      w *= q;
    }
    return w;
  };
  std::size_t const wh = power(H.size(), generators);
  std::size_t const wf = power(F.size(), generators);
  std::size_t const width = wh + wf;

  struct Origin {
    Term::Op      op;
    std::uint32_t a = 0, b = 0;
  };
  std::vector<std::uint8_t> store;
  std::vector<Origin>       origin;
  // Key: the H-part; a second vector with the same H-part but a different
  // F-part is a separating pair.
  std::unordered_map<std::string, std::uint32_t> by_h;
  std::unordered_map<std::string, std::uint32_t> seen;

  auto build = [&](auto&& self, std::uint32_t i) -> Term {
    auto const& o = origin[i];
    switch (o.op) {
      case Term::Op::Var: return Term::variable(std::string(1, "xyz"[o.a]));
      case Term::Op::Bottom: return Term::bottom();
      case Term::Op::Top: return Term::top();
      case Term::Op::Comp: return Term::comp(self(self, o.a));
      case Term::Op::Join: return Term::join(self(self, o.a), self(self, o.b));
      case Term::Op::Meet: return Term::meet(self(self, o.a), self(self, o.b));
    }
    return Term::bottom();
  };

  std::optional<SeparatingIdentity> found;
  auto add = [&](std::vector<std::uint8_t> const& v, Origin o) {
    std::string key(v.begin(), v.end());
    if (seen.count(key)) {
      return;
    }
    auto const index = static_cast<std::uint32_t>(origin.size());
    seen.emplace(key, index);
    store.insert(store.end(), v.begin(), v.end());
    origin.push_back(o);
    std::string hkey(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(wh));
    auto [it, fresh] = by_h.emplace(hkey, index);
    if (!fresh && !found) {
      Term lhs = build(build, it->second);
      Term rhs = build(build, index);
      Identity idt = parse_identity(lhs.to_string() + " = " + rhs.to_string());
      auto     w   = check_identity(F, idt);
      if (w && !check_identity(H, idt)) {
        found = SeparatingIdentity{lhs.to_string(), rhs.to_string(),
                                   format_witness(F, idt, *w)};
      }
    }
  };

  std::vector<std::uint8_t> v(width);
  for (unsigned g = 0; g < generators; ++g) {
    for (std::size_t c = 0; c < wh; ++c) {
      v[c] = static_cast<std::uint8_t>(
          coordinate_assignment(H.size(), generators, c)[g]);
    }
    for (std::size_t c = 0; c < wf; ++c) {
      v[wh + c] = static_cast<std::uint8_t>(
          coordinate_assignment(F.size(), generators, c)[g]);
    }
    add(v, {Term::Op::Var, g, 0});
  }
  for (std::size_t c = 0; c < width; ++c) {
    v[c] = static_cast<std::uint8_t>(c < wh ? H.bottom() : F.bottom());
  }
  add(v, {Term::Op::Bottom});
  for (std::size_t c = 0; c < width; ++c) {
    v[c] = static_cast<std::uint8_t>(c < wh ? H.top() : F.top());
  }
  add(v, {Term::Op::Top});

  auto apply = [&](Term::Op op, std::uint32_t i, std::uint32_t j) {
    for (std::size_t c = 0; c < width; ++c) {
      CLattice const& A = c < wh ? H : F;
      Element const   x = store[i * width + c];
      Element const   y = store[j * width + c];
      Element         r = 0;
      switch (op) {
        case Term::Op::Comp: r = A.comp(x); break;
        case Term::Op::Join: r = A.join(x, y); break;
        case Term::Op::Meet: r = A.meet(x, y); break;
        default: break;
      }
      v[c] = static_cast<std::uint8_t>(r);
    }
    add(v, {op, i, j});
  };

  std::size_t begin = 0;
  while (!found && begin < origin.size() && origin.size() < cap) {
    std::size_t const end = origin.size();
    for (std::size_t i = begin; i < end && !found && origin.size() < cap; ++i) {
      apply(Term::Op::Comp, static_cast<std::uint32_t>(i), 0);
      for (std::size_t j = 0; j <= i && !found; ++j) {
        apply(Term::Op::Join, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        apply(Term::Op::Meet, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
    begin = end;
  }
  return found;
}

}  // namespace complat
