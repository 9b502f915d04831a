#include "alphaspec/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "alphaspec/error.hpp"

namespace alphaspec {

Digraph::Digraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  if (n == 0) throw InvalidArgument("digraph must have at least one vertex");
}

Digraph Digraph::from_arcs(std::size_t n, const std::vector<Arc>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) {
    if (u >= n || v >= n)
      throw InvalidArgument("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n = " + std::to_string(n));
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (d.has_arc(u, v))
      throw InvalidArgument("duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    d.set_arc(u, v);
    ++d.arc_count_;
  }
  return d;
}

std::size_t Digraph::out_degree(std::size_t u) const noexcept {
  std::size_t k = 0;
  for (std::size_t w = 0; w < words_; ++w) k += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
  return k;
}

std::size_t Digraph::in_degree(std::size_t v) const noexcept {
  std::size_t k = 0;
  for (std::size_t u = 0; u < n_; ++u) k += has_arc(u, v);
  return k;
}

std::vector<std::size_t> Digraph::out_degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t u = 0; u < n_; ++u) out[u] = out_degree(u);
  return out;
}

std::vector<std::size_t> Digraph::in_degrees() const {
  std::vector<std::size_t> in(n_, 0);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v) in[v] += has_arc(u, v);
  return in;
}

std::size_t Digraph::max_out_degree() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < n_; ++u) m = std::max(m, out_degree(u));
  return m;
}

std::vector<Digraph::Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (has_arc(u, v)) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------

bool operator==(const SymmetricFromGraph& a, const SymmetricFromGraph& b) {
  return a.n == b.n && a.edges == b.edges;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

std::size_t family_order(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const DirectedPath& f) {
            require(f.n >= 1, "path requires n >= 1");
            return f.n;
          },
          [](const DirectedCycle& f) {
            require(f.n >= 2, "cycle requires n >= 2");
            return f.n;
          },
          [](const OrientedCompleteBipartite& f) {
            require(f.r >= 1 && f.s >= 1, "kbip requires r, s >= 1");
            return f.r + f.s;
          },
          [](const SymmetricComplete& f) {
            require(f.n >= 1, "symk requires n >= 1");
            return f.n;
          },
          [](const SymmetricFromGraph& f) {
            require(f.n >= 1, "graph requires n >= 1");
            return f.n;
          },
          [](const Shrikhande&) { return std::size_t{16}; },
          [](const Discrete& f) {
            require(f.n >= 1, "discrete requires n >= 1");
            return f.n;
          },
      },
      spec);
}

Digraph make_family(const FamilySpec& spec) {
  const std::size_t n = family_order(spec);
  std::vector<Digraph::Arc> arcs;
  std::visit(Overloaded{
                 [&](const DirectedPath&) {
                   for (std::size_t i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
                 },
                 [&](const DirectedCycle&) {
                   for (std::size_t i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
                   arcs.emplace_back(n - 1, 0);
                 },
                 [&](const OrientedCompleteBipartite& f) {
                   for (std::size_t i = 0; i < f.r; ++i)
                     for (std::size_t j = 0; j < f.s; ++j) arcs.emplace_back(i, f.r + j);
                 },
                 [&](const SymmetricComplete&) {
                   for (std::size_t i = 0; i < n; ++i)
                     for (std::size_t j = 0; j < n; ++j)
                       if (i != j) arcs.emplace_back(i, j);
                 },
                 [&](const SymmetricFromGraph& f) {
                   for (auto [u, v] : f.edges) {
                     arcs.emplace_back(u, v);
                     arcs.emplace_back(v, u);
                   }
                 },
                 [&](const Shrikhande&) {
                   // vertex (x, y) in Z4 x Z4 has index 4x + y
                   static constexpr int kShifts[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
                   for (std::size_t x = 0; x < 4; ++x)
                     for (std::size_t y = 0; y < 4; ++y)
                       for (const auto& s : kShifts)
                         arcs.emplace_back(4 * x + y, 4 * ((x + s[0]) % 4) + (y + s[1]) % 4);
                 },
                 [&](const Discrete&) {},
             },
             spec);
  return Digraph::from_arcs(n, arcs);
}

namespace {

std::size_t parse_count(std::string_view field, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw InvalidArgument("malformed family spec '" + std::string(spec) + "': bad integer '" +
                          std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto bad = [&](const std::string& why) {
    return InvalidArgument("malformed family spec '" + std::string(text) + "': " + why);
  };

  FamilySpec spec;
  if (kind == "shrikhande") {
    if (colon != std::string_view::npos) throw bad("shrikhande takes no parameters");
    spec = Shrikhande{};
  } else if (colon == std::string_view::npos) {
    throw bad("expected '<family>:<params>'");
  } else if (kind == "path") {
    spec = DirectedPath{parse_count(rest, text)};
  } else if (kind == "cycle") {
    spec = DirectedCycle{parse_count(rest, text)};
  } else if (kind == "symk") {
    spec = SymmetricComplete{parse_count(rest, text)};
  } else if (kind == "discrete") {
    spec = Discrete{parse_count(rest, text)};
  } else if (kind == "kbip") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw bad("kbip expects 'r,s'");
    spec = OrientedCompleteBipartite{parse_count(parts[0], text), parse_count(parts[1], text)};
  } else if (kind == "graph") {
    auto inner = rest.find(':');
    SymmetricFromGraph g{parse_count(rest.substr(0, inner), text), {}};
    if (inner != std::string_view::npos && inner + 1 < rest.size()) {
      for (auto e : split(rest.substr(inner + 1), ',')) {
        auto uv = split(e, '-');
        if (uv.size() != 2) throw bad("edge '" + std::string(e) + "' is not 'u-v'");
        g.edges.emplace_back(parse_count(uv[0], text), parse_count(uv[1], text));
      }
    }
    spec = std::move(g);
  } else {
    throw bad("unknown family '" + std::string(kind) + "'");
  }
  family_order(spec);
  if (auto* g = std::get_if<SymmetricFromGraph>(&spec)) {
    for (auto [u, v] : g->edges)
      if (u >= g->n || v >= g->n || u == v) throw bad("edge endpoints must be distinct and < n");
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const DirectedPath& f) { return "path:" + std::to_string(f.n); },
                        [](const DirectedCycle& f) { return "cycle:" + std::to_string(f.n); },
                        [](const OrientedCompleteBipartite& f) {
                          return "kbip:" + std::to_string(f.r) + "," + std::to_string(f.s);
                        },
                        [](const SymmetricComplete& f) { return "symk:" + std::to_string(f.n); },
                        [](const SymmetricFromGraph& f) {
                          std::string s = "graph:" + std::to_string(f.n) + ":";
                          for (std::size_t i = 0; i < f.edges.size(); ++i) {
                            if (i) s += ',';
                            s += std::to_string(f.edges[i].first) + "-" + std::to_string(f.edges[i].second);
                          }
                          return s;
                        },
                        [](const Shrikhande&) { return std::string("shrikhande"); },
                        [](const Discrete& f) { return "discrete:" + std::to_string(f.n); },
                    },
                    spec);
}

// ---------------------------------------------------------------------------

StructureFlags classify_structure(const Digraph& d) {
  const std::size_t n = d.order();
  const auto out = d.out_degrees();
  const auto in = d.in_degrees();
  StructureFlags f;
  f.is_discrete = d.arc_count() == 0;

  bool regular = true;
  for (std::size_t i = 0; i < n; ++i) regular = regular && out[i] == out[0] && in[i] == out[0];
  if (regular) f.regular_degree = out[0];
  f.is_permutation_digraph = regular && out[0] == 1;

  bool symmetric = true;
  bool antisymmetric = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (d.has_arc(u, v) != d.has_arc(v, u)) symmetric = false;
      if (d.has_arc(u, v) && d.has_arc(v, u)) antisymmetric = false;
    }
  f.is_symmetric = symmetric;

  std::size_t sources = 0, sinks = 0, isolated = 0;
  bool split = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i] == 0 && in[i] == 0)
      ++isolated;
    else if (in[i] == 0)
      ++sources;
    else if (out[i] == 0)
      ++sinks;
    else
      split = false;
  }
  if (split && sources > 0 && sinks > 0 && d.arc_count() == sources * sinks)
    f.ocb_plus_isolated = StructureFlags::OcbPart{sources, sinks, isolated};

  if (antisymmetric && d.arc_count() + 1 == n) {
    // n-1 edges and connected <=> tree
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n;
    for (auto [u, v] : d.arcs()) {
      auto a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    f.is_oriented_tree = components == 1;
  }
  return f;
}

Digraph transpose(const Digraph& d) {
  auto arcs = d.arcs();
  for (auto& [u, v] : arcs) std::swap(u, v);
  return Digraph::from_arcs(d.order(), arcs);
}

Digraph direct_sum(const std::vector<Digraph>& parts) {
  if (parts.empty()) throw InvalidArgument("direct_sum needs at least one digraph");
  std::size_t n = 0;
  std::vector<Digraph::Arc> arcs;
  for (const auto& p : parts) {
    for (auto [u, v] : p.arcs()) arcs.emplace_back(u + n, v + n);
    n += p.order();
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph relabel(const Digraph& d, const std::vector<std::size_t>& perm) {
  if (perm.size() != d.order()) throw InvalidArgument("relabel: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidArgument("relabel: not a permutation");
    seen[p] = true;
  }
  auto arcs = d.arcs();
  for (auto& [u, v] : arcs) {
    u = perm[u];
    v = perm[v];
  }
  return Digraph::from_arcs(d.order(), arcs);
}

// ---------------------------------------------------------------------------

namespace {

bool parse_uint(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

// "x y" with exactly one space; false on anything else.
bool parse_pair(std::string_view line, std::size_t& x, std::size_t& y) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto sp = line.find(' ');
  if (sp == std::string_view::npos) return false;
  return parse_uint(line.substr(0, sp), x) && parse_uint(line.substr(sp + 1), y);
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0, a = 0;
  bool have_header = false;
  std::vector<Digraph::Arc> arcs;
  std::vector<bool> present;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty() || line == "\r" || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::size_t x = 0, y = 0;
    if (!parse_pair(line, x, y))
      throw ParseError(line_no, have_header ? "expected 'u v'" : "expected header 'n a'");
    if (!have_header) {
      if (x == 0) throw ParseError(line_no, "vertex count must be at least 1");
      if (y > x * (x - 1)) throw ParseError(line_no, "arc count exceeds n(n-1)");
      n = x;
      a = y;
      have_header = true;
      present.assign(n * n, false);
    } else {
      if (arcs.size() == a) throw ParseError(line_no, "more arcs than declared in header");
      if (x >= n || y >= n) throw ParseError(line_no, "vertex index out of range");
      if (x == y) throw ParseError(line_no, "loop arc");
      if (present[x * n + y]) throw ParseError(line_no, "duplicate arc");
      present[x * n + y] = true;
      arcs.emplace_back(x, y);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n a'");
  if (arcs.size() != a)
    throw ParseError(line_no, "expected " + std::to_string(a) + " arcs, found " + std::to_string(arcs.size()));
  return Digraph::from_arcs(n, arcs);
}

std::string emit_digraph(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string encode(const Digraph& d) {
  std::string s = std::to_string(d.order()) + ":";
  for (std::size_t i = 0; i < d.order(); ++i)
    for (std::size_t j = 0; j < d.order(); ++j)
      if (i != j) s += d.has_arc(i, j) ? '1' : '0';
  return s;
}

Digraph decode(std::string_view text) {
  auto colon = text.find(':');
  std::size_t n = 0;
  if (colon == std::string_view::npos || !parse_uint(text.substr(0, colon), n) || n == 0)
    throw InvalidArgument("malformed digraph encoding '" + std::string(text) + "'");
  auto bits = text.substr(colon + 1);
  if (bits.size() != n * (n - 1))
    throw InvalidArgument("digraph encoding '" + std::string(text) + "' has wrong length");
  std::vector<Digraph::Arc> arcs;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      char c = bits[k++];
      if (c == '1')
        arcs.emplace_back(i, j);
      else if (c != '0')
        throw InvalidArgument("digraph encoding '" + std::string(text) + "' has non-binary digit");
    }
  return Digraph::from_arcs(n, arcs);
}

}  // namespace alphaspec
