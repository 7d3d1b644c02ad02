#include "complat/free_algebra.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <istream>
#include <ostream>
#include <string_view>

#include "complat/error.hpp"
#include "complat/lat_format.hpp"
#include "complat/parallel.hpp"

namespace complat {

namespace {
  constexpr std::size_t npos          = static_cast<std::size_t>(-1);
  constexpr std::size_t max_width     = std::size_t{1} << 22;
  constexpr char        magic[8]      = {'C', 'L', 'F', 'R', 'E', 'E', '0', '1'};

  std::size_t checked_width(std::size_t q, unsigned n) {
    std::size_t w = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (w > max_width / std::max<std::size_t>(q, 1)) {
        throw Error(ErrorCode::InvalidArgument,
                    "too many coordinates for |A|^n with n = "
                        + std::to_string(n));
      }
      w *= q;
    }
    return w;
  }
}  // namespace

std::vector<Element> coordinate_assignment(std::size_t q,
                                           unsigned    n,
                                           std::size_t coordinate) {
  std::vector<Element> values(n);
  for (unsigned i = n; i > 0; --i) {
    values[i - 1] = static_cast<Element>(coordinate % q);
    coordinate /= q;
  }
  return values;
}

FreeAlgebraBuilder::FreeAlgebraBuilder(CLattice algebra, unsigned generators)
    : _algebra(std::move(algebra)), _generators(generators) {
  std::size_t const q = _algebra.size();
  if (generators == 0) {
    throw Error(ErrorCode::InvalidArgument, "need at least one generator");
  }
  if (q > 256) {
    throw Error(ErrorCode::InvalidArgument,
                "base algebra larger than 256 elements");
  }
  _width = checked_width(q, generators);
  _join.resize(q * q);
  _meet.resize(q * q);
  _comp.resize(q);
  for (Element a = 0; a < q; ++a) {
    _comp[a] = static_cast<std::uint8_t>(_algebra.comp(a));
    for (Element b = 0; b < q; ++b) {
      _join[a * q + b] = static_cast<std::uint8_t>(_algebra.join(a, b));
      _meet[a * q + b] = static_cast<std::uint8_t>(_algebra.meet(a, b));
    }
  }
  _table.assign(64, 0);

  std::vector<std::uint8_t> vec(_width);
  for (unsigned g = 0; g < generators; ++g) {
    for (std::size_t c = 0; c < _width; ++c) {
      vec[c] = static_cast<std::uint8_t>(
          coordinate_assignment(q, generators, c)[g]);
    }
    add(vec.data());
  }
  std::fill(vec.begin(), vec.end(), static_cast<std::uint8_t>(_algebra.bottom()));
  add(vec.data());
  std::fill(vec.begin(), vec.end(), static_cast<std::uint8_t>(_algebra.top()));
  add(vec.data());
  _frontier_begin = 0;
  _frontier_end   = _count;
  _cursor_i       = 0;
  _cursor_step    = 0;
}

std::size_t FreeAlgebraBuilder::hash_of(std::uint8_t const* vec) const {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<char const*>(vec), _width));
}

std::size_t FreeAlgebraBuilder::find(std::uint8_t const* vec,
                                     std::size_t         hash) const {
  std::size_t const mask = _table.size() - 1;
  for (std::size_t slot = hash & mask;; slot = (slot + 1) & mask) {
    std::uint32_t entry = _table[slot];
    if (entry == 0) {
      return npos;
    }
    std::size_t idx = entry - 1;
    if (_hashes[idx] == hash
        && std::memcmp(_storage.data() + idx * _width, vec, _width) == 0) {
      return idx;
    }
  }
}

void FreeAlgebraBuilder::insert(std::size_t index, std::size_t hash) {
  std::size_t const mask = _table.size() - 1;
  std::size_t       slot = hash & mask;
  while (_table[slot] != 0) {
    slot = (slot + 1) & mask;
  }
  _table[slot] = static_cast<std::uint32_t>(index + 1);
}

void FreeAlgebraBuilder::grow_table() {
  _table.assign(_table.size() * 2, 0);
  for (std::size_t i = 0; i < _count; ++i) {
    insert(i, _hashes[i]);
  }
}

bool FreeAlgebraBuilder::add(std::uint8_t const* vec) {
  std::size_t h = hash_of(vec);
  if (find(vec, h) != npos) {
    return false;
  }
  if (_count >= 0xFFFFFFFEu) {
    throw Error(ErrorCode::InvalidArgument, "element index overflow");
  }
  _storage.insert(_storage.end(), vec, vec + _width);
  _hashes.push_back(h);
  ++_count;
  if (2 * _count > _table.size()) {
    grow_table();
  } else {
    insert(_count - 1, h);
  }
  return true;
}

void FreeAlgebraBuilder::candidate(std::size_t   i,
                                   std::size_t   step,
                                   std::uint8_t* out) const {
  std::uint8_t const* a = _storage.data() + i * _width;
  std::size_t const   q = _algebra.size();
  if (step == 0) {
    for (std::size_t c = 0; c < _width; ++c) {
      out[c] = _comp[a[c]];
    }
    return;
  }
  std::size_t const   j     = (step - 1) / 2;
  std::uint8_t const* b     = _storage.data() + j * _width;
  auto const&         table = (step % 2 == 1) ? _join : _meet;
  for (std::size_t c = 0; c < _width; ++c) {
    out[c] = table[a[c] * q + b[c]];
  }
}

bool FreeAlgebraBuilder::run(std::optional<std::size_t>               cap,
                             unsigned                                 jobs,
                             std::optional<std::chrono::milliseconds> budget) {
  if (cap && *cap < std::size_t{_generators} + 2) {
    throw Error(ErrorCode::CapTooSmall,
                "cap " + std::to_string(*cap) + " is below n + 2");
  }
  auto const start = std::chrono::steady_clock::now();
  std::size_t const batch_limit
      = std::clamp<std::size_t>((std::size_t{1} << 24) / _width, 256, 1 << 16);
  std::vector<std::uint8_t> buffer;
  std::vector<std::size_t>  hashes;
  std::vector<std::uint8_t> known;
  std::vector<std::pair<std::size_t, std::size_t>> positions;

  while (!_complete) {
    if (cap && _count >= *cap) {
      return false;
    }
    if (_cursor_i == _frontier_end) {
      if (_count == _frontier_end) {
        _complete = true;
        break;
      }
      _frontier_begin = _frontier_end;
      _frontier_end   = _count;
      _cursor_i       = _frontier_begin;
      _cursor_step    = 0;
    }

    positions.clear();
    std::size_t i = _cursor_i, step = _cursor_step;
    while (positions.size() < batch_limit && i < _frontier_end) {
      positions.emplace_back(i, step);
      if (++step > 2 * i + 2) {
        ++i;
        step = 0;
      }
    }
    std::size_t const batch = positions.size();
    buffer.resize(batch * _width);
    hashes.resize(batch);
    known.resize(batch);
    // Parallel phase: compute and look up against the table as it stood
    // before the batch; nothing is written to shared state.
    for_each_chunk(batch, jobs, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t t = b; t < e; ++t) {
        std::uint8_t* out = buffer.data() + t * _width;
        candidate(positions[t].first, positions[t].second, out);
        hashes[t] = hash_of(out);
        known[t]  = find(out, hashes[t]) != npos;
      }
    });
    // Sequential merge in candidate order.
    for (std::size_t t = 0; t < batch; ++t) {
      if (known[t]) {
        continue;
      }
      std::uint8_t const* vec = buffer.data() + t * _width;
      if (find(vec, hashes[t]) != npos) {
        continue;
      }
      _storage.insert(_storage.end(), vec, vec + _width);
      _hashes.push_back(hashes[t]);
      ++_count;
      if (2 * _count > _table.size()) {
        grow_table();
      } else {
        insert(_count - 1, hashes[t]);
      }
      if (cap && _count >= *cap) {
        // Resume right after this candidate.
        auto [ci, cs] = positions[t];
        if (++cs > 2 * ci + 2) {
          ++ci;
          cs = 0;
        }
        _cursor_i    = ci;
        _cursor_step = cs;
        return false;
      }
    }
    _cursor_i    = i;
    _cursor_step = step;
    if (budget && std::chrono::steady_clock::now() - start >= *budget) {
      return _complete;
    }
  }
  return true;
}

FreeAlgebraResult FreeAlgebraBuilder::result() const {
  FreeAlgebraResult r;
  r.base_size  = _algebra.size();
  r.generators = _generators;
  r.width      = _width;
  r.elements   = _count;
  r.complete   = _complete;
  r.vectors    = _storage;
  return r;
}

namespace {
  template <typename T>
  void put(std::ostream& out, T value) {
    out.write(reinterpret_cast<char const*>(&value), sizeof value);
  }
  template <typename T>
  T get(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof value);
    if (!in) {
      throw Error(ErrorCode::ParseError, "truncated checkpoint");
    }
    return value;
  }
}  // namespace

void FreeAlgebraBuilder::save(std::ostream& out) const {
  out.write(magic, sizeof magic);
  std::string const fingerprint = inline_lat(_algebra);
  put<std::uint64_t>(out, fingerprint.size());
  out.write(fingerprint.data(), static_cast<std::streamsize>(fingerprint.size()));
  put<std::uint64_t>(out, _generators);
  put<std::uint64_t>(out, _count);
  put<std::uint64_t>(out, _frontier_begin);
  put<std::uint64_t>(out, _frontier_end);
  put<std::uint64_t>(out, _cursor_i);
  put<std::uint64_t>(out, _cursor_step);
  put<std::uint8_t>(out, _complete ? 1 : 0);
  out.write(reinterpret_cast<char const*>(_storage.data()),
            static_cast<std::streamsize>(_storage.size()));
}

FreeAlgebraBuilder FreeAlgebraBuilder::load(std::istream& in,
                                            CLattice      algebra,
                                            unsigned      generators) {
  char head[sizeof magic];
  in.read(head, sizeof head);
  if (!in || std::memcmp(head, magic, sizeof magic) != 0) {
    throw Error(ErrorCode::ParseError, "not a free-algebra checkpoint");
  }
  auto        flen = get<std::uint64_t>(in);
  std::string fingerprint(flen, '\0');
  in.read(fingerprint.data(), static_cast<std::streamsize>(flen));
  if (!in || fingerprint != inline_lat(algebra)) {
    throw Error(ErrorCode::InvalidArgument,
                "checkpoint was made for a different algebra");
  }
  if (get<std::uint64_t>(in) != generators) {
    throw Error(ErrorCode::InvalidArgument,
                "checkpoint was made for a different generator count");
  }
  FreeAlgebraBuilder b(std::move(algebra), generators);
  auto               count = get<std::uint64_t>(in);
  b._frontier_begin        = get<std::uint64_t>(in);
  b._frontier_end          = get<std::uint64_t>(in);
  b._cursor_i              = get<std::uint64_t>(in);
  b._cursor_step           = get<std::uint64_t>(in);
  b._complete              = get<std::uint8_t>(in) != 0;
  std::vector<std::uint8_t> storage(count * b._width);
  in.read(reinterpret_cast<char*>(storage.data()),
          static_cast<std::streamsize>(storage.size()));
  if (!in) {
    throw Error(ErrorCode::ParseError, "truncated checkpoint");
  }
  if (std::memcmp(storage.data(), b._storage.data(), b._storage.size()) != 0) {
    throw Error(ErrorCode::ParseError, "checkpoint seeds do not match");
  }
  b._storage = std::move(storage);
  b._count   = count;
  b._hashes.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    b._hashes[i] = b.hash_of(b._storage.data() + i * b._width);
  }
  std::size_t table_size = 64;
  while (table_size < 2 * count + 2) {
    table_size *= 2;
  }
  b._table.assign(table_size, 0);
  for (std::size_t i = 0; i < count; ++i) {
    b.insert(i, b._hashes[i]);
  }
  return b;
}

FreeAlgebraResult free_algebra(CLattice const&            algebra,
                               unsigned                   generators,
                               std::optional<std::size_t> cap,
                               unsigned                   jobs) {
  if (cap && *cap < std::size_t{generators} + 2) {
    throw Error(ErrorCode::CapTooSmall,
                "cap " + std::to_string(*cap) + " is below n + 2");
  }
  FreeAlgebraBuilder builder(algebra, generators);
  builder.run(cap, jobs);
  return builder.result();
}

BigInt birkhoff_bound(std::size_t q, unsigned n) {
  BigInt exponent = boost::multiprecision::pow(BigInt(q), n);
  if (exponent > 10'000'000) {
    throw Error(ErrorCode::InvalidArgument, "bound too large to materialise");
  }
  return boost::multiprecision::pow(BigInt(q), exponent.convert_to<unsigned>());
}

BigInt birkhoff_bound(CLattice const& algebra, unsigned n) {
  return birkhoff_bound(algebra.size(), n);
}

namespace {

  // Class ids of the elements after restricting to a set of coordinates.
  struct Refinement {
    std::vector<std::uint32_t> cls;
    std::size_t                count = 1;
  };

  Refinement refine(FreeAlgebraResult const& r,
                    Refinement const&        base,
                    std::size_t              coordinate,
                    std::vector<std::uint32_t>& scratch) {
    std::size_t const q = r.base_size;
    scratch.assign(base.count * q, 0);
    Refinement out;
    out.cls.resize(r.elements);
    out.count = 0;
    for (std::size_t e = 0; e < r.elements; ++e) {
      std::size_t key = base.cls[e] * q + r.vectors[e * r.width + coordinate];
      if (scratch[key] == 0) {
        scratch[key] = static_cast<std::uint32_t>(++out.count);
      }
      out.cls[e] = scratch[key] - 1;
    }
    return out;
  }

  double power(std::size_t q, std::size_t k) {
    double p = 1;
    for (std::size_t i = 0; i < k; ++i) {
      p *= static_cast<double>(q);
    }
    return p;
  }

}  // namespace

SeparatingSet minimal_separating_set(FreeAlgebraResult const& r,
                                     std::size_t              node_budget) {
  if (!r.complete) {
    throw Error(ErrorCode::IncompleteClosure,
                "separating set needs a complete closure");
  }
  std::size_t const          N = r.elements, q = r.base_size;
  std::vector<std::uint32_t> scratch;
  Refinement                 all{std::vector<std::uint32_t>(N, 0), 1};
  if (N <= 1) {
    return {{}, true};
  }

  // Greedy: most classes, lowest index on ties.
  std::vector<std::size_t> greedy;
  Refinement               cur = all;
  while (cur.count < N) {
    std::size_t best_c = 0, best_count = 0;
    Refinement  best;
    for (std::size_t c = 0; c < r.width; ++c) {
      auto next = refine(r, cur, c, scratch);
      if (next.count > best_count) {
        best_count = next.count;
        best_c     = c;
        best       = std::move(next);
      }
    }
    greedy.push_back(best_c);
    cur = std::move(best);
  }

  std::size_t lower = 0;
  while (power(q, lower) < static_cast<double>(N)) {
    ++lower;
  }

  std::size_t nodes = 0;
  bool        exhausted_budget = false;
  for (std::size_t s = lower; s < greedy.size(); ++s) {
    std::vector<std::size_t> chosen;
    std::vector<Refinement>  stack{all};
    std::vector<std::size_t> next_coord{0};
    // Depth-first over increasing coordinate combinations of size s.
    while (!next_coord.empty()) {
      if (++nodes > node_budget) {
        exhausted_budget = true;
        break;
      }
      std::size_t depth = chosen.size();
      auto const& base  = stack.back();
      if (base.count == N) {
        std::sort(chosen.begin(), chosen.end());
        return {chosen, true};
      }
      std::size_t& c = next_coord.back();
      if (depth == s || c >= r.width
          || static_cast<double>(base.count) * power(q, s - depth)
                 < static_cast<double>(N)) {
        stack.pop_back();
        next_coord.pop_back();
        if (!chosen.empty()) {
          chosen.pop_back();
        }
        continue;
      }
      std::size_t coord = c++;
      auto        next  = refine(r, base, coord, scratch);
      if (next.count == base.count) {
        continue;  // no refinement: a smaller set would do as well
      }
      chosen.push_back(coord);
      stack.push_back(std::move(next));
      next_coord.push_back(coord + 1);
    }
    if (exhausted_budget) {
      break;
    }
  }
  std::sort(greedy.begin(), greedy.end());
  return {greedy, !exhausted_budget};
}

}  // namespace complat
