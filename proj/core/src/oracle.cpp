#include "cocycle_forge/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "cocycle_forge/error.hpp"
#include "cocycle_forge/threads.hpp"
#include "internal.hpp"

namespace cocycle_forge {

namespace {

bool table_less(const BinaryTable& a, const BinaryTable& b) {
  for (Element s = 0; s < a.order(); ++s)
    for (Element t = 0; t < a.order(); ++t)
      if (a(s, t) != b(s, t)) return b(s, t);
  return false;
}

struct Triple {
  std::size_t c1, c2, c3, c4;  // f(σ,τ) f(στ,ρ) = f(τ,ρ) f(σ,τρ), as cell slots
};

// Free cells are (s,t) with s,t ≥ 1. Slot kOne stands for a fixed 1.
class CocycleDfs {
 public:
  static constexpr std::size_t kOne = static_cast<std::size_t>(-1);

  CocycleDfs(const Group& g, const std::optional<ElementSet>& h, std::vector<std::size_t> order)
      : g_(g), n_(g.order()), order_(std::move(order)) {
    const std::size_t cells = order_.size();
    std::vector<std::size_t> pos(cells);
    for (std::size_t i = 0; i < cells; ++i) pos[order_[i]] = i;
    auto slot = [&](Element s, Element t) -> std::size_t {
      if (s == 0 || t == 0) return kOne;
      return (s - 1) * (n_ - 1) + (t - 1);
    };
    at_step_.resize(cells);
    for (Element s = 1; s < n_; ++s)
      for (Element t = 1; t < n_; ++t)
        for (Element r = 1; r < n_; ++r) {
          Triple tr{slot(s, t), slot(g.mul(s, t), r), slot(t, r), slot(s, g.mul(t, r))};
          std::size_t last = 0;
          for (std::size_t c : {tr.c1, tr.c2, tr.c3, tr.c4})
            if (c != kOne) last = std::max(last, pos[c]);
          at_step_[last].push_back(tr);
        }
    forced_.assign(cells, -1);
    if (h)
      for (Element s = 1; s < n_; ++s) forced_[slot(s, g.inverse(s))] = h->contains(s) ? 1 : 0;
    if (h && !h->contains(0)) impossible_ = true;
  }

  std::size_t cells() const noexcept { return order_.size(); }
  bool impossible() const noexcept { return impossible_; }

  /// Runs the search with the first `prefix.size()` cells (in visit order) fixed.
  template <class Emit>
  void run(const std::vector<int>& prefix, Emit&& emit, const std::atomic<bool>& stop) const {
    std::vector<int> bits(order_.size(), 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const std::size_t c = order_[i];
      if (forced_[c] >= 0 && forced_[c] != prefix[i]) return;
      bits[c] = prefix[i];
      if (!ok(bits, i)) return;
    }
    dfs(bits, prefix.size(), emit, stop);
  }

  BinaryTable to_table(const GroupPtr& gp, const std::vector<int>& bits) const {
    BinaryTable t(gp, true);
    for (Element s = 1; s < n_; ++s)
      for (Element u = 1; u < n_; ++u) t.set(s, u, bits[(s - 1) * (n_ - 1) + (u - 1)] != 0);
    return t;
  }

 private:
  int value(const std::vector<int>& bits, std::size_t c) const { return c == kOne ? 1 : bits[c]; }

  bool ok(const std::vector<int>& bits, std::size_t step) const {
    for (const auto& tr : at_step_[step])
      if (value(bits, tr.c1) * value(bits, tr.c2) != value(bits, tr.c3) * value(bits, tr.c4))
        return false;
    return true;
  }

  template <class Emit>
  void dfs(std::vector<int>& bits, std::size_t step, Emit& emit, const std::atomic<bool>& stop) const {
    if (stop.load(std::memory_order_relaxed)) return;
    if (step == order_.size()) {
      emit(bits);
      return;
    }
    const std::size_t c = order_[step];
    for (int v = 0; v <= 1; ++v) {
      if (forced_[c] >= 0 && forced_[c] != v) continue;
      bits[c] = v;
      if (ok(bits, step)) dfs(bits, step + 1, emit, stop);
    }
    bits[c] = 0;
  }

  const Group& g_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Triple>> at_step_;
  std::vector<int> forced_;
  bool impossible_ = false;
};

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), count));
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

}  // namespace

CocycleCensus enumerate_cocycles(const CensusConfig& cfg) {
  if (!cfg.group) throw Error(ErrorCode::precondition, "census needs a group");
  if (cfg.max_cocycles == 0 || cfg.max_chains == 0)
    throw Error(ErrorCode::precondition, "census limits must be positive");
  const Group& g = *cfg.group;
  const std::size_t n = g.order();
  CocycleCensus out;
  if (n == 1) {
    if (!cfg.inertial || cfg.inertial->contains(0)) out.cocycles.push_back(trivial_cocycle(cfg.group));
    return out;
  }

  std::vector<std::size_t> order((n - 1) * (n - 1));
  std::iota(order.begin(), order.end(), 0);
  if (cfg.shuffle) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const CocycleDfs dfs(g, cfg.inertial, order);
  if (dfs.impossible()) return out;

  const std::size_t prefix_len = std::min<std::size_t>(dfs.cells(), 4);
  const std::size_t tasks = std::size_t{1} << prefix_len;
  std::vector<std::vector<BinaryTable>> found(tasks);
  std::atomic<std::size_t> total{0};
  std::atomic<bool> stop{false};

  parallel_for(tasks, [&](std::size_t task) {
    std::vector<int> prefix(prefix_len);
    for (std::size_t i = 0; i < prefix_len; ++i) prefix[i] = (task >> (prefix_len - 1 - i)) & 1;
    dfs.run(prefix, [&](const std::vector<int>& bits) {
      if (total.fetch_add(1) >= cfg.max_cocycles) {
        stop = true;
        return;
      }
      found[task].push_back(dfs.to_table(cfg.group, bits));
    }, stop);
  });

  out.truncated = stop.load();
  std::vector<BinaryTable> all;
  for (auto& v : found)
    for (auto& t : v) all.push_back(std::move(t));
  std::sort(all.begin(), all.end(), table_less);
  for (const auto& t : all) {
    Cocycle f = require_cocycle(t);
    if (cfg.inertial && inertial_group(f).members() != *cfg.inertial) continue;
    out.cocycles.push_back(std::move(f));
  }
  return out;
}

std::vector<Cocycle> brute_force_cocycles(const GroupPtr& group) {
  const std::size_t n = group->order();
  if (n > 5) throw Error(ErrorCode::size_error, "brute force is limited to order 5");
  const std::size_t cells = (n - 1) * (n - 1);
  std::vector<BinaryTable> tables;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    BinaryTable t(group, true);
    for (std::size_t c = 0; c < cells; ++c) t.set(1 + c / (n - 1), 1 + c % (n - 1), (mask >> c) & 1);
    if (validate_cocycle(t)) tables.push_back(t);
  }
  std::sort(tables.begin(), tables.end(), table_less);
  std::vector<Cocycle> out;
  for (const auto& t : tables) out.push_back(require_cocycle(t));
  return out;
}

std::vector<MonomialIdeal> enumerate_ideals(const ContextPtr& ctx) {
  const std::vector<Element> gs = ctx->gstar().members();
  const std::size_t m = gs.size();
  if (m > 20) throw Error(ErrorCode::size_error, "|G*| = " + std::to_string(m) + " exceeds 20");

  std::vector<ElementSet> sets;
  if (m <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      ElementSet s;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1u) s.insert(gs[i]);
      if (is_closed(*ctx, s)) sets.push_back(s);
    }
  } else {
    // Every ideal is a union of principal ideals; close under union.
    std::vector<ElementSet> principal;
    for (Element s : gs) principal.push_back(principal_ideal(ctx, s).members());
    std::vector<ElementSet> frontier{ElementSet{}};
    std::vector<ElementSet> seen{ElementSet{}};
    auto known = [&](const ElementSet& s) {
      return std::find(seen.begin(), seen.end(), s) != seen.end();
    };
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (const auto& base : frontier)
        for (const auto& p : principal) {
          ElementSet u = base | p;
          if (!known(u)) {
            seen.push_back(u);
            next.push_back(u);
          }
        }
      frontier = std::move(next);
    }
    sets = std::move(seen);
  }
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return canonical_less(a, b);
  });
  std::vector<MonomialIdeal> out;
  for (const auto& s : sets) out.push_back(assume_ideal(ctx, s));
  return out;
}

ChainCensus enumerate_chains(const std::vector<MonomialIdeal>& ideals, std::size_t max_length,
                             std::size_t cap) {
  ChainCensus out;
  std::vector<std::size_t> idx;
  // Depth-first over non-strict chains; ideals sorted by size so containment
  // partners are found by scanning the whole list.
  auto rec = [&](auto&& self) -> void {
    if (out.truncated) return;
    if (idx.size() >= 2) {
      if (out.chains.size() >= cap) {
        out.truncated = true;
        return;
      }
      std::vector<MonomialIdeal> c;
      for (auto i : idx) c.push_back(ideals[i]);
      out.chains.emplace_back(std::move(c));
    }
    if (idx.size() == max_length) return;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (!idx.empty() && !ideals[j].is_subset_of(ideals[idx.back()])) continue;
      idx.push_back(j);
      self(self);
      idx.pop_back();
      if (out.truncated) return;
    }
  };
  rec(rec);
  return out;
}

SemilinearMap random_semilinear(const GroupPtr& group, std::mt19937_64& rng,
                                std::uint64_t max_weight) {
  const Group& g = *group;
  const std::size_t n = g.order();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<std::uint64_t> weight(1, std::max<std::uint64_t>(1, max_weight));

  // M: the cyclic subgroup of a random element, or trivial half the time.
  ElementSet m{0};
  if (rng() & 1u) {
    Element x = pick(rng);
    for (Element p = x; !m.contains(p); p = g.mul(p, x)) m.insert(p);
  }
  std::vector<std::uint64_t> w(n, 0);
  for (Element s = 0; s < n; ++s)
    if (!m.contains(s)) w[s] = weight(rng);

  // Dijkstra on a dense graph.
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(n, kInf);
  std::vector<bool> done(n, false);
  dist[0] = 0;
  for (std::size_t it = 0; it < n; ++it) {
    Element u = n;
    for (Element v = 0; v < n; ++v)
      if (!done[v] && dist[v] != kInf && (u == n || dist[v] < dist[u])) u = v;
    if (u == n) break;
    done[u] = true;
    for (Element s = 0; s < n; ++s) {
      const Element v = g.mul(u, s);
      dist[v] = std::min(dist[v], dist[u] + w[s]);
    }
  }
  return naturals_r(group, dist);
}

DescendingChain random_chain(const ContextPtr& ctx, const std::vector<MonomialIdeal>& ideals,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(2, 4);
  const std::size_t k = len(rng);
  std::vector<MonomialIdeal> chain;
  std::vector<std::size_t> options(ideals.size());
  std::iota(options.begin(), options.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> fit;
    for (auto j : options)
      if (chain.empty() || ideals[j].is_subset_of(chain.back())) fit.push_back(j);
    if (fit.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, fit.size() - 1);
    chain.push_back(ideals[fit[pick(rng)]]);
  }
  if (chain.size() < 2) chain.push_back(MonomialIdeal::zero(ctx));
  return DescendingChain(std::move(chain));
}

void SuiteReport::record(const std::string& property, bool passed, const std::string& where) {
  if (passed) {
    ++passes[property];
    return;
  }
  ++failures[property];
  counterexamples.push_back(property + ": " + where);
}

void SuiteReport::merge(const SuiteReport& o) {
  for (const auto& [k, v] : o.passes) passes[k] += v;
  for (const auto& [k, v] : o.failures) failures[k] += v;
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  cocycles += o.cocycles;
  ideals += o.ideals;
  chains += o.chains;
  truncated = truncated || o.truncated;
}

std::string SuiteReport::to_text() const {
  std::string out = "cocycles=" + std::to_string(cocycles) + " ideals=" + std::to_string(ideals) +
                    " chains=" + std::to_string(chains) +
                    " truncated=" + (truncated ? "true" : "false") + "\n";
  std::map<std::string, bool> names;
  for (const auto& [k, v] : passes) names[k] = true;
  for (const auto& [k, v] : failures) names[k] = true;
  for (const auto& [k, unused] : names) {
    auto p = passes.find(k);
    auto f = failures.find(k);
    out += k + " passed=" + std::to_string(p == passes.end() ? 0 : p->second) +
           " failed=" + std::to_string(f == failures.end() ? 0 : f->second) + "\n";
  }
  for (const auto& c : counterexamples) out += "counterexample " + c + "\n";
  return out;
}

NegativeControlReport negative_control(const SemilinearMap& r) {
  const Cocycle f = cocycle_from_r(r);
  const std::size_t n = f.order();
  NegativeControlReport rep;
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      MutationOutcome o{s, t, false, false, {}};
      BinaryTable mutant = f.table();
      mutant.flip(s, t);
      const auto check = validate_cocycle(mutant);
      if (!check) {
        o.caught_by_validation = true;
        o.location = check.violation->describe();
      } else {
        // A valid mutant is another cocycle; the realization identity catches it.
        const auto diff = first_difference(mutant, f.table());
        if (diff) {
          o.caught_by_identity = true;
          o.location = "f = f_r fails at (" + std::to_string(diff->first) + "," +
                       std::to_string(diff->second) + ")";
        }
      }
      rep.outcomes.push_back(std::move(o));
    }
  return rep;
}

bool NegativeControlReport::all_caught() const noexcept {
  for (const auto& o : outcomes)
    if (!o.caught_by_validation && !o.caught_by_identity) return false;
  return true;
}

SuiteReport property_suite(const CensusConfig& cfg) {
  const CocycleCensus census = enumerate_cocycles(cfg);
  std::vector<SuiteReport> parts(census.cocycles.size());
  parallel_for(census.cocycles.size(), [&](std::size_t i) {
    parts[i] = check_cocycle(census.cocycles[i], cfg.max_chains, cfg.max_chain_length);
  });

  SuiteReport out;
  out.truncated = census.truncated;
  for (const auto& p : parts) out.merge(p);

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_r; ++i) {
    const SemilinearMap r = random_semilinear(cfg.group, rng);
    ContextPtr ctx;
    try {
      ctx = AlgebraContext::make(cocycle_from_r(r));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::trivial_radical) throw;
      continue;
    }
    const auto ideals = enumerate_ideals(ctx);
    out.merge(check_lift(r, random_chain(ctx, ideals, rng)));
  }
  return out;
}

}  // namespace cocycle_forge
