#include "complat/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "complat/error.hpp"

namespace complat {

namespace {

  // x, y, z first, then x0..x9; anything else afterwards by name.
  std::pair<int, std::string> variable_rank(std::string const& name) {
    if (name == "x") return {0, {}};
    if (name == "y") return {1, {}};
    if (name == "z") return {2, {}};
    if (name.size() == 2 && name[0] == 'x' && std::isdigit(name[1])) {
      return {3 + (name[1] - '0'), {}};
    }
    return {100, name};
  }

  bool variable_less(std::string const& a, std::string const& b) {
    return variable_rank(a) < variable_rank(b);
  }

}  // namespace

// ---------------------------------------------------------------------------
// Term construction
// ---------------------------------------------------------------------------

Term Term::variable(std::string name) {
  Term t;
  t._vars.push_back(std::move(name));
  t._nodes.push_back({Op::Var, 0, 0});
  return t;
}

Term Term::bottom() {
  Term t;
  t._nodes.push_back({Op::Bottom});
  return t;
}

Term Term::top() {
  Term t;
  t._nodes.push_back({Op::Top});
  return t;
}

void Term::merge_variables(Term const& other) {
  if (other._vars == _vars) {
    return;
  }
  std::vector<std::string> merged = _vars;
  for (auto const& v : other._vars) {
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) {
      merged.push_back(v);
    }
  }
  std::stable_sort(merged.begin(), merged.end(), variable_less);
  if (merged == _vars) {
    return;
  }
  for (auto& node : _nodes) {
    if (node.op == Op::Var) {
      auto it  = std::find(merged.begin(), merged.end(), _vars[node.lhs]);
      node.lhs = static_cast<std::uint32_t>(it - merged.begin());
    }
  }
  _vars = std::move(merged);
}

std::uint32_t Term::append(Term const& other) {
  merge_variables(other);
  auto const offset = static_cast<std::uint32_t>(_nodes.size());
  for (auto node : other._nodes) {
    switch (node.op) {
      case Op::Var: {
        auto it  = std::find(_vars.begin(), _vars.end(), other._vars[node.lhs]);
        node.lhs = static_cast<std::uint32_t>(it - _vars.begin());
        break;
      }
      case Op::Join:
      case Op::Meet:
        node.lhs += offset;
        node.rhs += offset;
        break;
      case Op::Comp:
        node.lhs += offset;
        break;
      default:
        break;
    }
    _nodes.push_back(node);
  }
  return static_cast<std::uint32_t>(_nodes.size() - 1);
}

Term Term::join(Term const& lhs, Term const& rhs) {
  Term t = lhs;
  auto l = t.root();
  auto r = t.append(rhs);
  t._nodes.push_back({Op::Join, l, r});
  return t;
}

Term Term::meet(Term const& lhs, Term const& rhs) {
  Term t = lhs;
  auto l = t.root();
  auto r = t.append(rhs);
  t._nodes.push_back({Op::Meet, l, r});
  return t;
}

Term Term::comp(Term const& arg) {
  Term t = arg;
  t._nodes.push_back({Op::Comp, t.root(), 0});
  return t;
}

Term Term::sd1(Term const& x, Term const& y) {
  Term t  = x;
  auto xi = t.root();
  auto yi = t.append(y);
  auto add = [&](Op op, std::uint32_t a, std::uint32_t b = 0) {
    t._nodes.push_back({op, a, b});
    return static_cast<std::uint32_t>(t._nodes.size() - 1);
  };
  auto xc = add(Op::Comp, xi);
  auto yc = add(Op::Comp, yi);
  auto l  = add(Op::Meet, xc, yi);
  auto r  = add(Op::Meet, xi, yc);
  add(Op::Join, l, r);
  return t;
}

Term Term::sd2(Term const& x, Term const& y) {
  Term t  = x;
  auto xi = t.root();
  auto yi = t.append(y);
  auto add = [&](Op op, std::uint32_t a, std::uint32_t b = 0) {
    t._nodes.push_back({op, a, b});
    return static_cast<std::uint32_t>(t._nodes.size() - 1);
  };
  auto l  = add(Op::Join, xi, yi);
  auto xc = add(Op::Comp, xi);
  auto yc = add(Op::Comp, yi);
  auto r  = add(Op::Join, xc, yc);
  add(Op::Meet, l, r);
  return t;
}

std::string Term::to_string() const {
  std::function<std::string(std::uint32_t)> render = [&](std::uint32_t i) {
    auto const& n = _nodes[i];
    switch (n.op) {
      case Op::Var: return _vars[n.lhs];
      case Op::Bottom: return std::string("0");
      case Op::Top: return std::string("1");
      case Op::Join: return "(" + render(n.lhs) + "|" + render(n.rhs) + ")";
      case Op::Meet: return "(" + render(n.lhs) + "&" + render(n.rhs) + ")";
      case Op::Comp: return render(n.lhs) + "'";
    }
    return std::string();
  };
  return render(root());
}

bool operator==(Term const& a, Term const& b) {
  std::function<bool(std::uint32_t, std::uint32_t)> same
      = [&](std::uint32_t i, std::uint32_t j) {
          auto const& x = a._nodes[i];
          auto const& y = b._nodes[j];
          if (x.op != y.op) {
            return false;
          }
          switch (x.op) {
            case Term::Op::Var: return a._vars[x.lhs] == b._vars[y.lhs];
            case Term::Op::Bottom:
            case Term::Op::Top: return true;
            case Term::Op::Comp: return same(x.lhs, y.lhs);
            default: return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          }
        };
  return same(a.root(), b.root());
}

std::string Identity::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class TermParser {
 public:
  explicit TermParser(std::string_view text) : _text(text) {}

  // Parses one side; stops at '=', '<=' or end of input.
  Term parse_side() {
    Term t = parse_expr();
    skip_ws();
    return t;
  }

  bool at_end() {
    skip_ws();
    return _pos == _text.size();
  }
  std::size_t pos() const noexcept { return _pos; }

  bool consume(std::string_view token) {
    skip_ws();
    if (_text.substr(_pos, token.size()) == token) {
      _pos += token.size();
      return true;
    }
    return false;
  }

  // Renumbers the variables of every term to the shared canonical order.
  static void unify(std::vector<Term*> terms) {
    std::vector<std::string> all;
    for (auto* t : terms) {
      for (auto const& v : t->_vars) {
        if (std::find(all.begin(), all.end(), v) == all.end()) {
          all.push_back(v);
        }
      }
    }
    std::sort(all.begin(), all.end(), variable_less);
    for (auto* t : terms) {
      for (auto& node : t->_nodes) {
        if (node.op == Term::Op::Var) {
          auto it  = std::find(all.begin(), all.end(), t->_vars[node.lhs]);
          node.lhs = static_cast<std::uint32_t>(it - all.begin());
        }
      }
      t->_vars = all;
    }
  }

 private:
  void skip_ws() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  [[noreturn]] void error(std::string const& what) const {
    throw SyntaxError(_pos, what);
  }

  Term parse_expr() {
    Term t = parse_meet();
    while (true) {
      skip_ws();
      if (consume("+1")) {
        t = Term::sd1(t, parse_meet());
      } else if (consume("+2")) {
        t = Term::sd2(t, parse_meet());
      } else if (consume("|")) {
        t = Term::join(t, parse_meet());
      } else if (_pos < _text.size() && _text[_pos] == '+') {
        error("'+' must be followed by 1 or 2");
      } else {
        return t;
      }
    }
  }

  Term parse_meet() {
    Term t = parse_postfix();
    while (consume("&")) {
      t = Term::meet(t, parse_postfix());
    }
    return t;
  }

  Term parse_postfix() {
    Term t = parse_atom();
    while (consume("'")) {
      t = Term::comp(t);
    }
    return t;
  }

  Term parse_atom() {
    skip_ws();
    if (_pos >= _text.size()) {
      error("unexpected end of input");
    }
    char c = _text[_pos];
    if (c == '(') {
      ++_pos;
      Term t = parse_expr();
      if (!consume(")")) {
        error("expected ')'");
      }
      return t;
    }
    if (c == '0') {
      ++_pos;
      return Term::bottom();
    }
    if (c == '1') {
      ++_pos;
      return Term::top();
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      std::string name(1, c);
      ++_pos;
      if (c == 'x' && _pos < _text.size()
          && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        name += _text[_pos++];
      }
      if (_pos < _text.size()
          && std::isalnum(static_cast<unsigned char>(_text[_pos]))) {
        error("unknown variable");
      }
      return Term::variable(std::move(name));
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view _text;
  std::size_t      _pos = 0;
};

Term parse_term(std::string_view text) {
  TermParser p(text);
  Term       t = p.parse_side();
  if (!p.at_end()) {
    throw SyntaxError(p.pos(), "trailing input");
  }
  TermParser::unify({&t});
  return t;
}

Identity parse_identity(std::string_view text, std::string name) {
  TermParser p(text);
  Term       lhs = p.parse_side();
  bool       inequality;
  if (p.consume("<=")) {
    inequality = true;
  } else if (p.consume("=")) {
    inequality = false;
  } else {
    throw SyntaxError(p.pos(), "expected '=' or '<='");
  }
  Term rhs = p.parse_side();
  if (!p.at_end()) {
    throw SyntaxError(p.pos(), "trailing input");
  }
  if (inequality) {
    Term m = Term::meet(lhs, rhs);
    rhs    = lhs;
    lhs    = std::move(m);
  }
  TermParser::unify({&lhs, &rhs});
  return Identity{std::move(name), std::move(lhs), std::move(rhs)};
}

std::vector<Identity> parse_identity_file(std::string_view text) {
  std::vector<Identity> result;
  std::size_t           line_no = 0;
  while (!text.empty()) {
    auto nl   = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'name: lhs = rhs'");
    }
    std::string name(line.substr(0, colon));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    try {
      result.push_back(parse_identity(line.substr(colon + 1), name));
    } catch (SyntaxError const& e) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Element Evaluator::operator()(Term const&              term,
                              CLattice const&          A,
                              std::span<Element const> assignment) {
  if (assignment.size() < term.variable_count()) {
    throw Error(ErrorCode::UnboundVariable,
                "assignment covers " + std::to_string(assignment.size())
                    + " of " + std::to_string(term.variable_count())
                    + " variables");
  }
  auto const& nodes = term.nodes();
  _values.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto const& n = nodes[i];
    switch (n.op) {
      case Term::Op::Var: _values[i] = assignment[n.lhs]; break;
      case Term::Op::Bottom: _values[i] = A.bottom(); break;
      case Term::Op::Top: _values[i] = A.top(); break;
      case Term::Op::Join: _values[i] = A.join(_values[n.lhs], _values[n.rhs]); break;
      case Term::Op::Meet: _values[i] = A.meet(_values[n.lhs], _values[n.rhs]); break;
      case Term::Op::Comp: _values[i] = A.comp(_values[n.lhs]); break;
    }
  }
  return _values.back();
}

Element eval(Term const& term, CLattice const& A, std::span<Element const> assignment) {
  Evaluator e;
  return e(term, A, assignment);
}

std::optional<std::vector<Element>> check_identity(CLattice const& A,
                                                   Identity const& id) {
  std::size_t const    k = id.variable_count();
  std::size_t const    n = A.size();
  std::vector<Element> assignment(k, 0);
  Evaluator            el, er;
  while (true) {
    if (el(id.lhs, A, assignment) != er(id.rhs, A, assignment)) {
      return assignment;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++assignment[i] < n) {
        break;
      }
      assignment[i] = 0;
      if (i == 0) {
        return std::nullopt;
      }
    }
    if (k == 0) {
      return std::nullopt;
    }
  }
}

std::string format_witness(CLattice const&          A,
                           Identity const&          id,
                           std::span<Element const> assignment) {
  std::string out;
  for (std::size_t i = 0; i < id.variable_count(); ++i) {
    out += id.variables()[i] + "=" + A.name(assignment[i]) + " ";
  }
  out += "lhs=" + A.name(eval(id.lhs, A, assignment));
  out += " rhs=" + A.name(eval(id.rhs, A, assignment));
  return out;
}

// ---------------------------------------------------------------------------
// Builtin registry
// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> const& builtin_registry() {
  static std::vector<std::pair<std::string, std::string>> const registry = {
      {"coincidence", "(x'&y)|(x&y') = (x|y)&(x'|y')"},
      {"sd-partition-join", "(x&y)|(x&y')|(x'&y)|(x'&y') = 1"},
      {"sd-partition-meet", "(x|y)&(x|y')&(x'|y)&(x'|y') = 0"},
      {"involution", "x'' = x"},
      {"abs-i", "x&y = x&(x'|y)"},
      {"abs-ii", "x|y = x|(x'&y)"},
      {"lemma-unit", "x'|(x&x'') = 1"},
      {"demorgan-join", "(x|y)' = x'&y'"},
      {"demorgan-meet", "(x&y)' = x'|y'"},
      {"th4-aux-join", "(x|y)'&x' = x'&y'"},
      {"th4-aux-meet", "(x&y)'|x' = x'|y'"},
      {"distributive", "x&(y|z) = (x&y)|(x&z)"},
      {"modular", "x&(y|(x&z)) = (x&y)|(x&z)"},
      {"sd1-assoc", "(x+1y)+1z = x+1(y+1z)"},
      {"sd2-assoc", "(x+2y)+2z = x+2(y+2z)"},
      {"sd1-rollback", "(x+1y)+1y = x"},
      {"sd2-rollback", "(x+2y)+2y = x"},
      {"cp-join", "x'|(x&y) = x'|y"},
      {"cp-meet", "x'&(x|y) = x'&y"},
      {"pr-identity", "(x&y)|(x&y') = (x|y)&(x|y')"},
      {"ord-lt", "x'' <= x"},
      {"ord-gt", "x <= x''"},
      {"triple", "x''' = x'"},
  };
  return registry;
}

Identity builtin(std::string_view name) {
  for (auto const& [key, text] : builtin_registry()) {
    if (key == name) {
      return parse_identity(text, key);
    }
  }
  throw Error(ErrorCode::UnknownIdentity, "'" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Symmetric difference tables
// ---------------------------------------------------------------------------

std::pair<BinaryTable, BinaryTable> sd_tables(CLattice const& A) {
  std::size_t const n = A.size();
  BinaryTable       t1{n, std::vector<Element>(n * n)};
  BinaryTable       t2{n, std::vector<Element>(n * n)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t1.data[x * n + y] = A.join(A.meet(A.comp(x), y), A.meet(x, A.comp(y)));
      t2.data[x * n + y] = A.meet(A.join(x, y), A.join(A.comp(x), A.comp(y)));
    }
  }
  return {std::move(t1), std::move(t2)};
}

std::optional<Triple> associativity_witness(BinaryTable const& t) {
  Element const n = static_cast<Element>(t.size);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
          return Triple{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace complat
