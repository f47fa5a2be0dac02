#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "cocycle_forge/error.hpp"
#include "cocycle_forge/semilinear.hpp"
#include "cocycle_forge/threads.hpp"

namespace cocycle_forge {

namespace {

struct Constraint {
  Element s, t, st;
  bool equal;  // f(s,t) = 1
};

class Searcher {
 public:
  Searcher(const AlgebraContext& ctx, std::uint64_t bound) : bound_(bound) {
    const Group& g = ctx.group();
    const std::size_t n = g.order();
    vars_ = ctx.gstar().members();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[vars_[i]] = static_cast<int>(i);
    at_step_.resize(vars_.size());
    for (Element s = 0; s < n; ++s)
      for (Element t = 0; t < n; ++t) {
        const Element st = g.mul(s, t);
        const int step = std::max({pos[s], pos[t], pos[st]});
        if (step < 0) continue;
        at_step_[static_cast<std::size_t>(step)].push_back(Constraint{s, t, st, ctx.multiplies(s, t)});
      }
    n_ = n;
  }

  std::size_t variables() const noexcept { return vars_.size(); }

  /// Least witness with the first variable fixed to `first`, if any.
  std::optional<std::vector<std::uint64_t>> run(std::uint64_t first, const std::atomic<std::uint64_t>& best,
                                                std::atomic<std::uint64_t>& nodes) const {
    std::vector<std::uint64_t> val(n_, 0);
    val[vars_[0]] = first;
    std::uint64_t local = 1;
    bool found = ok(val, 0) && dfs(val, 1, first, best, local);
    nodes += local;
    if (found) return val;
    return std::nullopt;
  }

 private:
  bool ok(const std::vector<std::uint64_t>& val, std::size_t step) const {
    for (const auto& c : at_step_[step]) {
      const std::uint64_t lhs = val[c.st], rhs = val[c.s] + val[c.t];
      if (c.equal ? lhs != rhs : lhs >= rhs) return false;
    }
    return true;
  }

  bool dfs(std::vector<std::uint64_t>& val, std::size_t step, std::uint64_t first,
           const std::atomic<std::uint64_t>& best, std::uint64_t& nodes) const {
    if (step == vars_.size()) return true;
    // A smaller first value already has a witness.
    if (best.load(std::memory_order_relaxed) < first) return false;
    for (std::uint64_t v = 1; v <= bound_; ++v) {
      val[vars_[step]] = v;
      ++nodes;
      if (ok(val, step) && dfs(val, step + 1, first, best, nodes)) return true;
    }
    val[vars_[step]] = 0;
    return false;
  }

  std::uint64_t bound_;
  std::size_t n_ = 0;
  std::vector<Element> vars_;
  std::vector<std::vector<Constraint>> at_step_;
};

}  // namespace

RealizationResult search_realization(const ContextPtr& ctx, std::uint64_t bound) {
  RealizationResult result;
  result.bound = bound;
  if (bound == 0) return result;
  const Searcher searcher(*ctx, bound);

  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> next{1};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::optional<std::vector<std::uint64_t>> witness;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t first = next.fetch_add(1);
      if (first > bound || first > best.load()) return;
      auto w = searcher.run(first, best, nodes);
      if (!w) continue;
      std::lock_guard<std::mutex> lock(mu);
      if (first < best.load()) {
        best = first;
        witness = std::move(w);
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(worker_count(), bound);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  result.nodes = nodes.load();
  if (witness) {
    SemilinearMap r = naturals_r(ctx->group_ptr(), *witness);
    ensure(cocycle_from_r(r) == ctx->cocycle(), "realization witness does not reproduce f");
    result.witness = std::move(r);
  }
  return result;
}

}  // namespace cocycle_forge
