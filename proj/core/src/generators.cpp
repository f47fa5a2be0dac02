#include "cocycle_forge/generators.hpp"

#include <algorithm>

#include "cocycle_forge/error.hpp"
#include "internal.hpp"

namespace cocycle_forge {

namespace {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void extend(const AlgebraContext& ctx, const std::vector<Element>& letters, Word& word,
            Element product, std::vector<std::vector<Word>>& out) {
  out[product].push_back(word);
  ensure(word.size() <= ctx.depth(), "generator word longer than the nilpotency bound");
  for (Element b : letters) {
    if (!ctx.multiplies(product, b)) continue;
    word.push_back(b);
    extend(ctx, letters, word, ctx.group().mul(product, b), out);
    word.pop_back();
  }
}

}  // namespace

GeneratorSet::GeneratorSet(ContextPtr ctx, std::vector<std::vector<Word>> by_element)
    : ctx_(std::move(ctx)), by_element_(std::move(by_element)) {
  for (auto& ws : by_element_) std::sort(ws.begin(), ws.end(), word_less);
}

std::vector<Word> GeneratorSet::all_words() const {
  std::vector<Word> out;
  for (const auto& ws : by_element_) out.insert(out.end(), ws.begin(), ws.end());
  return out;
}

std::size_t GeneratorSet::total() const noexcept {
  std::size_t c = 0;
  for (const auto& ws : by_element_) c += ws.size();
  return c;
}

std::size_t GeneratorSet::max_length() const noexcept {
  std::size_t m = 0;
  for (const auto& ws : by_element_)
    for (const auto& w : ws) m = std::max(m, w.size());
  return m;
}

ElementSet n1_set(const AlgebraContext& ctx) {
  const Group& g = ctx.group();
  ElementSet out = ctx.gstar();
  ctx.gstar().for_each([&](Element a) {
    ctx.gstar().for_each([&](Element b) {
      if (ctx.multiplies(a, b)) out.erase(g.mul(a, b));
    });
  });
  ensure(out == ctx.n1(), "N_1 disagrees with J \\ J^2");
  return out;
}

std::optional<Element> evaluate_word(const AlgebraContext& ctx, const Word& w) {
  if (w.empty()) return std::nullopt;
  for (Element x : w)
    if (x >= ctx.order() || !ctx.n1().contains(x)) return std::nullopt;
  Element p = w.front();
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!ctx.multiplies(p, w[i])) return std::nullopt;
    p = ctx.group().mul(p, w[i]);
  }
  return p;
}

GeneratorSet all_generators(const ContextPtr& ctx) {
  const std::vector<Element> letters = n1_set(*ctx).members();
  std::vector<std::vector<Word>> by_element(ctx->order());
  Word word;
  for (Element a : letters) {
    word.assign(1, a);
    extend(*ctx, letters, word, a, by_element);
  }
  ctx->gstar().for_each([&](Element s) {
    ensure(!by_element[s].empty(), "element of G* without a generator word");
  });
  return GeneratorSet(ctx, std::move(by_element));
}

bool is_ordered_part(const Word& part, const Word& whole) {
  if (part.size() > whole.size()) return false;
  return std::search(whole.begin(), whole.end(), part.begin(), part.end()) != whole.end();
}

std::vector<Word> bstar(const GeneratorSet& gens) {
  const AlgebraContext& ctx = *gens.context();
  const auto classes = classify_annihilators(ctx);
  std::vector<Word> out;
  const auto all = gens.all_words();
  classes.nontrivial.for_each([&](Element s) {
    for (const auto& w : gens.words(s)) {
      for (const auto& other : all)
        ensure(other == w || !is_ordered_part(w, other),
               "annihilator word is not maximal under the ordered-part order");
      out.push_back(w);
    }
  });
  return out;
}

std::vector<Word> bstar(const ContextPtr& ctx) { return bstar(all_generators(ctx)); }

MonomialIdeal ideal_of_word(const ContextPtr& ctx, const Word& g) {
  if (g.empty()) throw Error(ErrorCode::invalid_word, "empty word");
  ElementSet letters;
  for (Element x : g) {
    if (x >= ctx->order() || !ctx->n1().contains(x))
      throw Error(ErrorCode::invalid_word, "letter " + std::to_string(x) + " is not in N_1");
    letters.insert(x);
  }
  return ideal_closure(ctx, letters);
}

ElementSet principal_members_from_words(const GeneratorSet& gens, Element sigma) {
  const AlgebraContext& ctx = *gens.context();
  if (sigma >= ctx.order() || ctx.in_h(sigma))
    throw Error(ErrorCode::not_in_gstar, std::to_string(sigma) + " is not in G*");
  const Group& g = ctx.group();
  const auto h = ctx.inertial().members().members();

  std::vector<Word> patterns;
  for (const Word& w : gens.words(sigma))
    for (Element h1 : h)
      for (Element h2 : h) {
        Word m = w;
        m.front() = g.mul(h1, m.front());
        m.back() = g.mul(m.back(), h2);
        patterns.push_back(std::move(m));
      }

  ElementSet out;
  ctx.gstar().for_each([&](Element tau) {
    for (const Word& wt : gens.words(tau))
      for (const Word& p : patterns)
        if (is_ordered_part(p, wt)) {
          out.insert(tau);
          return;
        }
  });
  return out;
}

MonomialIdeal principal_via_generators(const GeneratorSet& gens, Element sigma) {
  const ElementSet members = principal_members_from_words(gens, sigma);
  const MonomialIdeal bfs = principal_ideal(gens.context(), sigma);
  ensure(bfs.members() == members, "generator formula disagrees with breadth-first closure");
  return assume_ideal(gens.context(), members);
}

std::vector<std::pair<std::string, std::string>> element_graph_edges(const AlgebraContext& ctx) {
  const Group& g = ctx.group();
  const std::size_t n = g.order();
  std::vector<std::pair<Element, Element>> edges;
  auto add = [&](Element a, Element b) {
    if (a == b) return;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (Element rho = 0; rho < n; ++rho)
    ctx.n1().for_each([&](Element s) {
      if (ctx.multiplies(s, rho)) add(rho, g.mul(s, rho));
      if (ctx.multiplies(rho, s)) add(rho, g.mul(rho, s));
    });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : edges) out.emplace_back(g.name(a), g.name(b));
  return out;
}

namespace {

std::vector<Word> hasse_vertices(const GeneratorSet& gens) {
  std::vector<Word> vs = gens.all_words();
  vs.push_back({});
  std::sort(vs.begin(), vs.end(), word_less);
  return vs;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<Word>& vs) {
  const std::size_t m = vs.size();
  auto below = [&](std::size_t i, std::size_t j) {
    return i != j && vs[i] != vs[j] && is_ordered_part(vs[i], vs[j]);
  };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!below(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < m && direct; ++k)
        if (below(i, k) && below(k, j)) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::vector<std::pair<std::string, std::string>> generator_graph_edges(const GeneratorSet& gens) {
  const Group& g = gens.context()->group();
  const auto vs = hasse_vertices(gens);
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [i, j] : hasse_covers(vs)) out.emplace_back(format_word(g, vs[i]), format_word(g, vs[j]));
  return out;
}

std::string graphs_dot(const ContextPtr& ctx, GraphKind kind) {
  const Group& g = ctx->group();
  std::string out;
  if (kind == GraphKind::element) {
    out += "graph elements {\n";
    for (Element x = 0; x < g.order(); ++x) out += "  " + quote(g.name(x)) + ";\n";
    for (const auto& [a, b] : element_graph_edges(*ctx))
      out += "  " + quote(a) + " -- " + quote(b) + ";\n";
  } else {
    const GeneratorSet gens = all_generators(ctx);
    const auto vs = hasse_vertices(gens);
    out += "graph generators {\n";
    for (const auto& w : vs) out += "  " + quote(format_word(g, w)) + ";\n";
    for (auto [i, j] : hasse_covers(vs))
      out += "  " + quote(format_word(g, vs[i])) + " -- " + quote(format_word(g, vs[j])) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string format_word(const Group& g, const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += g.name(w[i]);
  }
  out += ')';
  return out;
}

std::string format_word_set(const Group& g, const std::vector<Word>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) out += ',';
    out += format_word(g, ws[i]);
  }
  out += '}';
  return out;
}

std::string format_catalog(const GeneratorSet& gens) {
  const AlgebraContext& ctx = *gens.context();
  std::string out = "{";
  bool first = true;
  ctx.gstar().for_each([&](Element s) {
    if (!first) out += ',';
    out += format_word_set(ctx.group(), gens.words(s));
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace cocycle_forge
