#include "complat/lat_format.hpp"

#include <fstream>
#include <sstream>

#include "complat/error.hpp"

namespace complat {

namespace {

  std::string_view trim(std::string_view s) {
    auto const ws    = " \t\r\n";
    auto const first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
      return {};
    }
    auto const last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
  }

  std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream       in{std::string(s)};
    std::string              tok;
    while (in >> tok) {
      out.push_back(tok);
    }
    return out;
  }

  [[noreturn]] void fail(std::size_t line, std::string const& what) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": " + what);
  }

}  // namespace

CLattice LatFile::algebra() const {
  if (!unary) {
    throw Error(ErrorCode::InvalidArgument,
                "algebra has no unary table (no comp: lines)");
  }
  return CLattice(lattice, *unary);
}

LatFile parse_lat(std::string_view text) {
  std::optional<std::vector<std::string>>          names;
  std::vector<FiniteLattice::Cover>                covers;
  std::vector<std::pair<std::string, std::string>> comps;
  std::vector<std::size_t>                         comp_lines;

  std::size_t line_no = 0;
  while (!text.empty()) {
    auto        nl   = text.find('\n');
    auto        raw  = text.substr(0, nl);
    text             = nl == std::string_view::npos ? std::string_view{}
                                                    : text.substr(nl + 1);
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    auto line = trim(raw);
    if (line.empty()) {
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      fail(line_no, "expected 'keyword: ...'");
    }
    auto keyword = trim(line.substr(0, colon));
    auto args    = split_ws(line.substr(colon + 1));
    if (!names && keyword != "elements") {
      fail(line_no, "first entry must be 'elements:'");
    }
    if (keyword == "elements") {
      if (names) {
        fail(line_no, "duplicate 'elements:' line");
      }
      if (args.empty()) {
        fail(line_no, "no elements declared");
      }
      names = std::move(args);
    } else if (keyword == "cover") {
      if (args.size() != 2) {
        fail(line_no, "'cover:' takes two labels");
      }
      covers.emplace_back(args[0], args[1]);
    } else if (keyword == "comp") {
      if (args.size() != 2) {
        fail(line_no, "'comp:' takes two labels");
      }
      comps.emplace_back(args[0], args[1]);
      comp_lines.push_back(line_no);
    } else {
      fail(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!names) {
    throw Error(ErrorCode::ParseError, "missing 'elements:' line");
  }

  LatFile result{FiniteLattice::from_covers(*names, covers), std::nullopt};
  if (!comps.empty()) {
    auto const&          L = result.lattice;
    constexpr Element    unset = static_cast<Element>(-1);
    UnaryTable           table(L.size(), unset);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto x = L.find(comps[i].first);
      auto y = L.find(comps[i].second);
      if (!x || !y) {
        fail(comp_lines[i], "unknown label in 'comp:'");
      }
      if (table[*x] != unset) {
        fail(comp_lines[i], "'" + comps[i].first + "' mapped twice");
      }
      table[*x] = *y;
    }
    for (Element x = 0; x < table.size(); ++x) {
      if (table[x] == unset) {
        throw Error(ErrorCode::ParseError,
                    "unary table is not total: '" + L.name(x)
                        + "' has no image");
      }
    }
    result.unary = std::move(table);
  }
  return result;
}

LatFile read_lat_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lat(buf.str());
}

namespace {
  std::vector<std::string> lat_lines(FiniteLattice const&             L,
                                     std::optional<UnaryTable> const& unary) {
    std::vector<std::string> lines;
    std::string              header = "elements:";
    for (auto const& n : L.names()) {
      header += ' ';
      header += n;
    }
    lines.push_back(std::move(header));
    for (auto [lo, hi] : L.covers()) {
      lines.push_back("cover: " + L.name(lo) + " " + L.name(hi));
    }
    if (unary) {
      for (Element x = 0; x < unary->size(); ++x) {
        lines.push_back("comp: " + L.name(x) + " " + L.name((*unary)[x]));
      }
    }
    return lines;
  }
}  // namespace

std::string write_lat(FiniteLattice const&             L,
                      std::optional<UnaryTable> const& unary) {
  std::string out;
  for (auto const& line : lat_lines(L, unary)) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string write_lat(CLattice const& A) {
  return write_lat(A.lattice(), A.unary());
}

std::string inline_lat(CLattice const& A) {
  std::string out;
  for (auto const& line : lat_lines(A.lattice(), A.unary())) {
    if (!out.empty()) {
      out += "; ";
    }
    out += line;
  }
  return out;
}

std::string inline_lat(FiniteLattice const& L) {
  std::string out;
  for (auto const& line : lat_lines(L, std::nullopt)) {
    if (!out.empty()) {
      out += "; ";
    }
    out += line;
  }
  return out;
}

}  // namespace complat
