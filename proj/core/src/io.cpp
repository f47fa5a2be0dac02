#include "cocycle_forge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cocycle_forge/error.hpp"

namespace cocycle_forge {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-comment lines, trimmed; blank lines are kept when `keep_blank`.
std::vector<Line> lines_of(std::string_view text, bool keep_blank) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string t = trim(text.substr(start, end - start));
    if (!(t.size() > 0 && t[0] == '#') && (keep_blank || !t.empty())) out.push_back({number, t});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPtr parse_group(std::string_view text) {
  const auto lines = lines_of(text, false);
  if (lines.empty()) throw Error(ErrorCode::parse_error, "line 1: missing group order");
  const auto head = split_ws(lines[0].text);
  if (head.size() != 1) parse_fail(lines[0].number, "first line must hold only the order");
  const std::uint64_t n = parse_uint(head[0], lines[0].number);
  if (n == 0 || n > kMaxOrder)
    throw Error(ErrorCode::invalid_order, "order " + std::to_string(n) + " is outside 1.." +
                                              std::to_string(kMaxOrder));
  if (lines.size() < n + 1)
    parse_fail(lines.back().number, "expected " + std::to_string(n) + " table rows");
  std::vector<std::vector<Element>> rows;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto toks = split_ws(lines[i].text);
    if (toks.size() != n)
      parse_fail(lines[i].number, "expected " + std::to_string(n) + " entries, got " +
                                      std::to_string(toks.size()));
    std::vector<Element> row;
    for (const auto& t : toks) row.push_back(static_cast<Element>(parse_uint(t, lines[i].number)));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (lines.size() > n + 1) {
    const Line& l = lines[n + 1];
    auto toks = split_ws(l.text);
    if (toks.empty() || toks[0] != "names" || toks.size() != n + 1)
      parse_fail(l.number, "expected 'names' followed by " + std::to_string(n) + " labels");
    names.assign(toks.begin() + 1, toks.end());
    if (lines.size() > n + 2) parse_fail(lines[n + 2].number, "unexpected trailing content");
  }
  return group_from_table(rows, names);
}

std::string emit_group(const Group& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (Element s = 0; s < g.order(); ++s) {
    for (Element t = 0; t < g.order(); ++t) {
      if (t > 0) out += ' ';
      out += std::to_string(g.mul(s, t));
    }
    out += '\n';
  }
  bool numeric = true;
  for (Element s = 0; s < g.order(); ++s) numeric = numeric && g.name(s) == std::to_string(s);
  if (!numeric) {
    out += "names";
    for (const auto& nm : g.names()) out += ' ' + nm;
    out += '\n';
  }
  return out;
}

BinaryTable parse_table(const GroupPtr& g, std::string_view text) {
  const std::size_t n = g->order();
  const auto lines = lines_of(text, false);
  if (lines.size() != n)
    throw Error(ErrorCode::parse_error, "line " + std::to_string(lines.empty() ? 1 : lines.back().number) +
                                            ": expected " + std::to_string(n) + " rows, got " +
                                            std::to_string(lines.size()));
  BinaryTable t(g, false);
  for (std::size_t s = 0; s < n; ++s) {
    std::string row;
    for (char c : lines[s].text)
      if (c != ' ' && c != '\t') row += c;
    if (row.size() != n)
      parse_fail(lines[s].number, "expected " + std::to_string(n) + " characters, got " +
                                      std::to_string(row.size()));
    for (std::size_t u = 0; u < n; ++u) {
      if (row[u] != '0' && row[u] != '1')
        parse_fail(lines[s].number, std::string("unexpected character '") + row[u] + "'");
      t.set(s, u, row[u] == '1');
    }
  }
  return t;
}

Cocycle parse_cocycle(const GroupPtr& g, std::string_view text) {
  return require_cocycle(parse_table(g, text));
}

std::string emit_table(const BinaryTable& t) {
  std::string out;
  for (Element s = 0; s < t.order(); ++s) {
    for (Element u = 0; u < t.order(); ++u) out += t(s, u) ? '1' : '0';
    out += '\n';
  }
  return out;
}

SemilinearMap parse_r(const GroupPtr& g, std::string_view text) {
  const std::size_t n = g->order();
  const auto lines = lines_of(text, false);
  if (lines.size() != n)
    throw Error(ErrorCode::parse_error, "line " + std::to_string(lines.empty() ? 1 : lines.back().number) +
                                            ": expected " + std::to_string(n) + " values, got " +
                                            std::to_string(lines.size()));
  std::vector<MonoidValue> values;
  std::optional<std::size_t> width;
  bool tuples = false;
  for (const auto& l : lines) {
    MonoidValue v;
    const bool is_tuple = !l.text.empty() && l.text.front() == '(';
    if (is_tuple) {
      if (l.text.back() != ')') parse_fail(l.number, "unterminated tuple");
      std::string inner = l.text.substr(1, l.text.size() - 2);
      std::size_t start = 0;
      for (;;) {
        const auto comma = inner.find(',', start);
        v.push_back(parse_uint(trim(std::string_view(inner).substr(start, comma - start)), l.number));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      v.push_back(parse_uint(l.text, l.number));
    }
    if (!width) {
      width = v.size();
      tuples = is_tuple;
    } else if (*width != v.size() || tuples != is_tuple) {
      parse_fail(l.number, "value shape differs from the first line");
    }
    values.push_back(std::move(v));
  }
  MonoidPtr m = tuples ? lex_power(additive_naturals(), *width) : additive_naturals();
  return require_r(g, std::move(m), std::move(values));
}

std::string emit_r(const SemilinearMap& r) {
  std::string out;
  for (const auto& v : r.values()) out += r.monoid()->format(v) + "\n";
  return out;
}

ElementSet parse_index_set(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw Error(ErrorCode::parse_error, "unterminated set '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  for (char& c : s)
    if (c == ',') c = ' ';
  ElementSet out;
  for (const auto& tok : split_ws(s)) {
    const auto v = parse_uint(tok, 1);
    if (v >= kMaxOrder) throw Error(ErrorCode::parse_error, "index " + tok + " is too large");
    out.insert(static_cast<Element>(v));
  }
  return out;
}

std::vector<ElementSet> parse_chain_sets(std::string_view text) {
  auto lines = lines_of(text, true);
  while (!lines.empty() && lines.front().text.empty()) lines.erase(lines.begin());
  // A file ending in a newline yields one empty line that is not an ideal.
  if (!text.empty() && text.back() == '\n' && !lines.empty() && lines.back().text.empty())
    lines.pop_back();
  std::vector<ElementSet> out;
  for (const auto& l : lines) {
    ElementSet s;
    Element prev = 0;
    bool first = true;
    for (const auto& tok : split_ws(l.text)) {
      const auto v = parse_uint(tok, l.number);
      if (v >= kMaxOrder) parse_fail(l.number, "index " + tok + " is too large");
      if (!first && v <= prev) parse_fail(l.number, "indices must be strictly increasing");
      prev = static_cast<Element>(v);
      first = false;
      s.insert(prev);
    }
    out.push_back(s);
  }
  if (out.empty()) throw Error(ErrorCode::parse_error, "line 1: empty chain file");
  return out;
}

DescendingChain parse_chain(const ContextPtr& ctx, std::string_view text) {
  std::vector<MonomialIdeal> ideals;
  for (const auto& s : parse_chain_sets(text)) ideals.push_back(MonomialIdeal::from_members(ctx, s));
  return DescendingChain(std::move(ideals));
}

std::string emit_chain(const DescendingChain& c) {
  std::string out;
  for (const auto& i : c.ideals()) {
    bool first = true;
    i.members().for_each([&](Element x) {
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    });
    out += '\n';
  }
  return out;
}

Format format_from_string(std::string_view s) {
  if (s == "table") return Format::table;
  if (s == "dot") return Format::dot;
  if (s == "report") return Format::report;
  if (s == "rfile") return Format::rfile;
  throw Error(ErrorCode::parse_error, "unknown format '" + std::string(s) + "'");
}

std::string emit_artifact(const Artifact& a, Format format) {
  auto unsupported = [&](const char* kind) -> std::string {
    throw Error(ErrorCode::format_error, std::string(kind) + " has no such output format");
  };
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BinaryTable>) {
          return format == Format::table ? emit_table(x) : unsupported("table");
        } else if constexpr (std::is_same_v<T, Cocycle>) {
          return format == Format::table ? emit_table(x.table()) : unsupported("cocycle");
        } else if constexpr (std::is_same_v<T, SemilinearMap>) {
          return format == Format::rfile ? emit_r(x) : unsupported("semilinear map");
        } else if constexpr (std::is_same_v<T, DescendingChain>) {
          return format == Format::report ? emit_chain(x) : unsupported("chain");
        } else if constexpr (std::is_same_v<T, GraphArtifact>) {
          return format == Format::dot ? graphs_dot(x.ctx, x.kind) : unsupported("graph");
        } else {
          return format == Format::report ? x.to_text() : unsupported("report");
        }
      },
      a);
}

}  // namespace cocycle_forge
