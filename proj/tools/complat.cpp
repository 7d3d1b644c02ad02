// Command-line front end for the complat library.
//
// Exit status: 0 success / property holds, 1 identity fails or a
// counterexample was found, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "complat/catalog.hpp"
#include "complat/congruence.hpp"
#include "complat/constructions.hpp"
#include "complat/error.hpp"
#include "complat/free_algebra.hpp"
#include "complat/lat_format.hpp"
#include "complat/term.hpp"
#include "complat/verifier.hpp"

using namespace complat;

namespace {

constexpr int exit_ok    = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct Global {
  bool     porcelain = false;
  unsigned jobs      = 1;
};

// Human mode prints a few extra lines (timings, headings); porcelain output
// is the stable line format.
class Out {
 public:
  explicit Out(Global const& g) : _g(g) {}
  void line(std::string const& s) const { std::cout << s << '\n'; }
  void human(std::string const& s) const {
    if (!_g.porcelain) {
      std::cout << s << '\n';
    }
  }
  template <typename Start>
  void timing(Start start) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    human("time: " + std::to_string(ms) + " ms");
  }

 private:
  Global const& _g;
};

char const* yes(bool b) { return b ? "true" : "false"; }

LatFile load(std::string const& path) { return read_lat_file(path); }

CLattice load_algebra(std::string const& path) {
  auto f = load(path);
  if (!f.has_unary()) {
    throw Error(ErrorCode::InvalidArgument, path + ": no comp: lines");
  }
  return f.algebra();
}

std::string join_names(CLattice const& A, std::vector<Element> const& xs) {
  std::string s;
  for (auto x : xs) {
    s += (s.empty() ? "" : " ") + A.name(x);
  }
  return s;
}

std::string table_string(CLattice const& A) {
  std::string s;
  for (Element x = 0; x < A.size(); ++x) {
    s += (x ? " " : "") + A.name(x) + "'=" + A.name(A.comp(x));
  }
  return s;
}

std::vector<std::string> split_list(std::string const& text) {
  std::vector<std::string> out;
  std::stringstream        ss(text);
  std::string              item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_validate(Out const& out, std::string const& path, bool canonical) {
  auto f = load(path);
  out.line("elements: " + std::to_string(f.lattice.size()));
  out.line(std::string("complemented: ")
           + (f.has_unary() ? yes(is_complementation(f.algebra())) : "none"));
  if (canonical) {
    std::cout << write_lat(f.lattice, f.unary);
  }
  return exit_ok;
}

int cmd_props(Out const& out, std::string const& path) {
  auto        f = load(path);
  auto const& L = f.lattice;
  auto        report = [&](char const* name, bool value, std::string const& w) {
    out.line(std::string(name) + ": " + yes(value) + (value || w.empty() ? "" : " " + w));
  };
  auto triple = [&](std::optional<Triple> const& t) {
    return t ? "x=" + L.name((*t)[0]) + " y=" + L.name((*t)[1]) + " z=" + L.name((*t)[2])
             : std::string();
  };
  if (f.has_unary()) {
    auto const A = f.algebra();
    auto       c = complementation_witness(A);
    report("complementation", !c, c ? "x=" + A.name(*c) : "");
    auto a = antitone_witness(A);
    report("antitone", !a, a ? "x=" + A.name(a->first) + " y=" + A.name(a->second) : "");
    auto i = involution_witness(A);
    report("involution", !i, i ? "x=" + A.name(*i) : "");
    report("ortholattice", is_ortholattice(A), "");
  }
  auto m = modularity_witness(L);
  report("modular", !m, triple(m));
  auto d = distributivity_witness(L);
  report("distributive", !d, triple(d));
  if (f.has_unary()) {
    report("boolean", is_boolean(f.algebra()), "");
  }
  return exit_ok;
}

int cmd_check(Out const& out, std::string const& path,
              std::vector<std::string> const& names,
              std::vector<std::string> const& equations,
              std::string const& identity_file) {
  auto const            A = load_algebra(path);
  std::vector<Identity> ids;
  for (auto const& n : names) {
    ids.push_back(builtin(n));
  }
  for (auto const& e : equations) {
    ids.push_back(parse_identity(e, e));
  }
  if (!identity_file.empty()) {
    for (auto& i : parse_identity_file(slurp(identity_file))) {
      ids.push_back(std::move(i));
    }
  }
  if (ids.empty()) {
    throw CLI::ValidationError("--identity", "at least one identity is required");
  }
  bool all = true;
  for (auto const& identity : ids) {
    out.human("identity: " + identity.to_string());
    if (auto w = check_identity(A, identity)) {
      all = false;
      out.line(identity.name + ": fails " + format_witness(A, identity, *w));
    } else {
      out.line(identity.name + ": holds");
    }
  }
  return all ? exit_ok : exit_fails;
}

int cmd_sd(Out const& out, std::string const& path) {
  auto const A      = load_algebra(path);
  auto [t1, t2]     = sd_tables(A);
  auto print_table  = [&](char const* label, BinaryTable const& t) {
    out.line(label);
    for (Element x = 0; x < A.size(); ++x) {
      std::string row = "  " + A.name(x) + ":";
      for (Element y = 0; y < A.size(); ++y) {
        row += " " + A.name(t.at(x, y));
      }
      out.line(row);
    }
  };
  print_table("+1", t1);
  print_table("+2", t2);
  out.line(std::string("equal: ") + yes(t1 == t2));
  for (Element x = 0; x < A.size(); ++x) {
    for (Element y = 0; y < A.size(); ++y) {
      if (t1.at(x, y) != t2.at(x, y)) {
        out.line("first-difference: x=" + A.name(x) + " y=" + A.name(y) + " +1="
                 + A.name(t1.at(x, y)) + " +2=" + A.name(t2.at(x, y)));
        return exit_ok;
      }
    }
  }
  return exit_ok;
}

int cmd_complements(Out const& out, std::string const& path, bool all) {
  auto f = load(path);
  auto const& L = f.lattice;
  for (Element a = 0; a < L.size(); ++a) {
    std::string s = L.name(a) + ":";
    for (auto b : complements_of(L, a)) {
      s += " " + L.name(b);
    }
    out.line(s);
  }
  if (all) {
    auto tables = complementations_or_empty(L);
    out.line("complementations: " + std::to_string(tables.size()));
    for (auto& t : tables) {
      out.line("table: " + table_string(CLattice(L, t)));
    }
  }
  return exit_ok;
}

int cmd_congruences(Out const& out, std::string const& path) {
  auto const A  = load_algebra(path);
  auto const cs = all_congruences(A);
  out.line("count: " + std::to_string(cs.size()));
  for (auto const& p : cs) {
    out.line(format_partition(A, p));
  }
  if (A.size() >= 2) {
    auto m = monolith(A);
    out.line("monolith: " + (m ? format_partition(A, *m) : std::string("none")));
  }
  out.line(std::string("subdirectly-irreducible: ") + yes(is_subdirectly_irreducible(A)));
  return exit_ok;
}

int cmd_hsum(Out const& out, std::vector<unsigned> const& lengths, bool count,
             int table_index) {
  auto L = horizontal_sum(lengths);
  if (count || table_index >= 0) {
    if (lengths.size() != 2) {
      throw CLI::ValidationError("--complementation", "needs exactly two chains");
    }
    auto tables = hsum_complementations(lengths[0], lengths[1]);
    if (count) {
      out.line("complementations: " + std::to_string(tables.size()));
      return exit_ok;
    }
    if (static_cast<std::size_t>(table_index) >= tables.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "complementation index out of range (have "
                      + std::to_string(tables.size()) + ")");
    }
    std::cout << write_lat(L, tables[static_cast<std::size_t>(table_index)]);
    return exit_ok;
  }
  std::cout << write_lat(L);
  return exit_ok;
}

int cmd_product(std::string const& a, std::string const& b) {
  auto fa = load(a), fb = load(b);
  if (fa.has_unary() && fb.has_unary()) {
    std::cout << write_lat(direct_product(fa.algebra(), fb.algebra()));
  } else {
    std::cout << write_lat(direct_product(fa.lattice, fb.lattice));
  }
  return exit_ok;
}

int cmd_subalgebra(Out const& out, std::string const& path, std::string const& elems) {
  auto const           A = load_algebra(path);
  std::vector<Element> seed;
  for (auto const& n : split_list(elems)) {
    seed.push_back(A.lattice().index_of(n));
  }
  auto members = subalgebra_generated(A, seed);
  out.line("size: " + std::to_string(members.size()));
  out.line("elements: " + join_names(A, members));
  return exit_ok;
}

int cmd_embed(Out const& out, std::string const& sub, std::string const& host) {
  auto const S = load_algebra(sub), H = load_algebra(host);
  auto       f = find_embedding(S, H);
  if (!f) {
    out.line("embedding: none");
    return exit_fails;
  }
  std::string s = "embedding:";
  for (Element x = 0; x < S.size(); ++x) {
    s += " " + S.name(x) + "->" + H.name((*f)[x]);
  }
  out.line(s);
  return exit_ok;
}

struct FreeOptions {
  unsigned                   n = 1;
  std::optional<std::size_t> cap;
  bool                       separating = false;
  std::string                checkpoint;
  bool                       resume = false;
  double                     budget_seconds = 0;
};

int cmd_free(Out const& out, Global const& g, std::string const& path,
             FreeOptions const& o) {
  auto const start = std::chrono::steady_clock::now();
  auto const A     = load_algebra(path);
  auto       builder = [&] {
    if (o.resume) {
      std::ifstream in(o.checkpoint, std::ios::binary);
      if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot open " + o.checkpoint);
      }
      return FreeAlgebraBuilder::load(in, A, o.n);
    }
    return FreeAlgebraBuilder(A, o.n);
  }();
  std::optional<std::chrono::milliseconds> budget;
  if (o.budget_seconds > 0) {
    budget = std::chrono::milliseconds(static_cast<long long>(o.budget_seconds * 1000));
  }
  builder.run(o.cap, g.jobs, budget);
  if (!o.checkpoint.empty()) {
    std::ofstream file(o.checkpoint, std::ios::binary | std::ios::trunc);
    builder.save(file);
  }
  out.line("elements: " + std::to_string(builder.element_count()));
  out.line(std::string("complete: ") + yes(builder.complete()));
  out.line("birkhoff: " + birkhoff_bound(A, o.n).str());
  if (o.separating) {
    if (!builder.complete()) {
      out.line("separating: unavailable (closure incomplete)");
    } else {
      auto        s = minimal_separating_set(builder.result());
      std::string line = "separating:";
      for (auto c : s.coordinates) {
        line += " " + std::to_string(c);
      }
      out.line(line);
      out.line("separating-size: " + std::to_string(s.coordinates.size())
               + (s.minimal ? " (minimal)" : " (greedy, search budget exhausted)"));
      for (auto c : s.coordinates) {
        auto        vals = coordinate_assignment(A.size(), o.n, c);
        std::string h    = "  coordinate " + std::to_string(c) + ":";
        for (std::size_t i = 0; i < vals.size(); ++i) {
          h += " " + std::string(1, "xyz"[std::min<std::size_t>(i, 2)]) + "="
               + A.name(vals[i]);
        }
        out.human(h);
      }
    }
  }
  out.timing(start);
  return exit_ok;
}

int cmd_enumerate(Out const& out, unsigned max_size, bool complemented, bool list) {
  auto const start = std::chrono::steady_clock::now();
  if (complemented) {
    auto all = enumerate_complemented(max_size);
    std::vector<std::size_t> per(max_size + 1, 0);
    for (auto const& A : all) {
      ++per[A.size()];
    }
    for (unsigned s = 2; s <= max_size; ++s) {
      out.line("size " + std::to_string(s) + ": " + std::to_string(per[s]));
    }
    out.line("total: " + std::to_string(all.size()));
    if (list) {
      for (auto const& A : all) {
        out.line(inline_lat(A));
      }
    }
  } else {
    std::size_t total = 0;
    for (unsigned s = 1; s <= max_size; ++s) {
      auto ls = lattices_of_size(s);
      total += ls.size();
      out.line("size " + std::to_string(s) + ": " + std::to_string(ls.size()));
      if (list) {
        for (auto const& L : ls) {
          out.line(inline_lat(L));
        }
      }
    }
    out.line("total: " + std::to_string(total));
  }
  out.timing(start);
  return exit_ok;
}

int cmd_verify(Out const& out, Global const& g, std::string const& id,
               unsigned max_size, std::uint64_t seed, std::size_t samples,
               std::string const& report_file) {
  VerifyOptions opt;
  opt.seed                = seed;
  opt.jobs                = g.jobs;
  opt.samples_per_lattice = samples;
  auto const  r    = verify(id, max_size, opt);
  std::string text = format_report(r);
  std::cout << text;
  for (auto const& n : r.notes) {
    out.line("note: " + n);
  }
  out.human("time: " + std::to_string(r.elapsed.count()) + " ms");
  if (!report_file.empty()) {
    std::ofstream f(report_file, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw Error(ErrorCode::InvalidArgument, "cannot write " + report_file);
    }
    f << text;
  }
  return r.passed() ? exit_ok : exit_fails;
}

int cmd_catalog(Out const& out, std::string const& key) {
  if (key.empty()) {
    for (auto const& k : catalog_keys()) {
      out.line(k);
    }
    out.human("parametric: BOOLN:<atoms> CHAIN:<length>");
    return exit_ok;
  }
  CatalogEntry e = [&] {
    if (key.rfind("BOOLN:", 0) == 0) {
      return boolean_algebra(static_cast<unsigned>(std::stoul(key.substr(6))));
    }
    if (key.rfind("CHAIN:", 0) == 0) {
      return chain(static_cast<unsigned>(std::stoul(key.substr(6))));
    }
    return catalog(key);
  }();
  out.human("# " + e.provenance);
  std::cout << write_lat(e.lattice, e.unary);
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite bounded lattices with a unary complementation"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--porcelain", g.porcelain, "Stable line-oriented output");
  app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string file, file2, text;
  bool        flag1 = false;

  auto* validate = app.add_subcommand("validate", "Parse and check a .lat file");
  validate->add_option("file", file)->required();
  validate->add_flag("--canonical", flag1, "Print the canonical form");

  auto* props = app.add_subcommand("props", "Predicate battery");
  props->add_option("file", file)->required();

  std::vector<std::string> ids, equations;
  std::string              id_file;
  auto* check = app.add_subcommand("check", "Check identities");
  check->add_option("file", file)->required();
  check->add_option("--identity,-i", ids, "Builtin identity name");
  check->add_option("--equation,-e", equations, "Identity text, e.g. \"x'' = x\"");
  check->add_option("--identity-file", id_file, "File of `name: lhs = rhs` lines");

  auto* sd = app.add_subcommand("sd", "Symmetric difference tables");
  sd->add_option("file", file)->required();

  auto* complements = app.add_subcommand("complements", "Complements of each element");
  complements->add_option("file", file)->required();
  complements->add_flag("--all", flag1, "Enumerate every complementation");

  auto* congruences = app.add_subcommand("congruences", "Congruence lattice");
  congruences->add_option("file", file)->required();

  std::vector<unsigned> lengths;
  int                   table_index = -1;
  auto* hsum = app.add_subcommand("hsum", "Horizontal sum of chains");
  hsum->add_option("lengths", lengths, "Chain lengths")->required();
  hsum->add_flag("--count", flag1, "Count complementations");
  hsum->add_option("--complementation", table_index, "Attach the k-th complementation");

  auto* product = app.add_subcommand("product", "Direct product");
  product->add_option("first", file)->required();
  product->add_option("second", file2)->required();

  auto* subalgebra = app.add_subcommand("subalgebra", "Generated subalgebra");
  subalgebra->add_option("file", file)->required();
  subalgebra->add_option("--elements", text, "Comma-separated generators")->required();

  auto* embed = app.add_subcommand("embed", "Find an embedding");
  embed->add_option("sub", file)->required();
  embed->add_option("host", file2)->required();

  FreeOptions fo;
  std::size_t cap = 0;
  auto* free = app.add_subcommand("free", "Free algebra of the generated variety");
  free->add_option("file", file)->required();
  free->add_option("-n", fo.n, "Generators")->required()->check(CLI::Range(1u, 8u));
  auto* cap_opt = free->add_option("--cap", cap, "Stop after this many elements");
  free->add_flag("--separating-set", fo.separating, "Minimal separating coordinates");
  free->add_option("--checkpoint", fo.checkpoint, "Save state to this file");
  free->add_flag("--resume", fo.resume, "Continue from --checkpoint");
  free->add_option("--budget", fo.budget_seconds, "Time budget in seconds");

  unsigned max_size = 7;
  bool     list     = false;
  auto* enumerate = app.add_subcommand("enumerate", "Lattices up to isomorphism");
  enumerate->add_option("--max-size", max_size)->check(CLI::Range(1u, 8u));
  enumerate->add_flag("--complemented", flag1, "With every complementation");
  enumerate->add_flag("--list", list, "Print each one inline");

  std::string   theorem, report_file;
  std::uint64_t seed    = 1;
  std::size_t   samples = 4096;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem campaign");
  verify_cmd->add_option("theorem", theorem)->required();
  verify_cmd->add_option("--max-size", max_size)->check(CLI::Range(1u, 8u));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--samples", samples, "Random unary tables per lattice");
  verify_cmd->add_option("--report", report_file);

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in algebras");
  catalog_cmd->add_option("key", text);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }

  Out out(g);
  try {
    if (*validate) return cmd_validate(out, file, flag1);
    if (*props) return cmd_props(out, file);
    if (*check) return cmd_check(out, file, ids, equations, id_file);
    if (*sd) return cmd_sd(out, file);
    if (*complements) return cmd_complements(out, file, flag1);
    if (*congruences) return cmd_congruences(out, file);
    if (*hsum) return cmd_hsum(out, lengths, flag1, table_index);
    if (*product) return cmd_product(file, file2);
    if (*subalgebra) return cmd_subalgebra(out, file, text);
    if (*embed) return cmd_embed(out, file, file2);
    if (*free) {
      if (*cap_opt) {
        fo.cap = cap;
      }
      if (fo.resume && fo.checkpoint.empty()) {
        throw CLI::ValidationError("--resume", "requires --checkpoint");
      }
      return cmd_free(out, g, file, fo);
    }
    if (*enumerate) return cmd_enumerate(out, max_size, flag1, list);
    if (*verify_cmd) {
      return cmd_verify(out, g, theorem, max_size, seed, samples, report_file);
    }
    if (*catalog_cmd) return cmd_catalog(out, text);
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
