#include "dcn/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "dcn/errors.hpp"

namespace dcn {

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool any() const {
    for (auto x : w) {
      if (x) return true;
    }
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  // Index of the lowest set bit; undefined when empty.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    }
    return 0;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits andnot(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] & ~o.w[i]) return false;
    }
    return true;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits&, const Bits&) = default;
};

// Neighbourhood lookups by byte: table[p * 256 + b] is the union of N(x)
// over the bits x of byte value b at byte position p.
template <std::size_t W>
class Kernel {
 public:
  explicit Kernel(const Graph& g) : n_(g.order()), bytes_((g.order() + 7) / 8), table_(bytes_ * 256) {
    for (std::size_t v = 0; v < n_; ++v) all_.set(v);
    std::vector<Bits<W>> nb(n_);
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId y : g.neighbors(v)) nb[v].set(y);
    }
    for (std::size_t p = 0; p < bytes_; ++p) {
      for (std::size_t b = 1; b < 256; ++b) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(b));
        Bits<W> acc = table_[p * 256 + (b & (b - 1))];
        if (p * 8 + low < n_) acc |= nb[p * 8 + low];
        table_[p * 256 + b] = acc;
      }
    }
  }

  const Bits<W>& all() const { return all_; }

  Bits<W> nbhd(const Bits<W>& s) const {
    Bits<W> r;
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = s.w[i];
      std::size_t p = i * 8;
      while (x) {
        if (x & 0xff) r |= table_[p * 256 + (x & 0xff)];
        x >>= 8;
        ++p;
      }
    }
    return r;
  }

  // True when g - u is disconnected or has at most one vertex. Needs g
  // connected: then every component of g - u meets N(u), so g - u is
  // connected exactly when one component holds all of N(u) \ u.
  bool is_cut(const Bits<W>& u) const {
    const Bits<W> alive = all_.andnot(u);
    if (alive.count() <= 1) return true;
    const Bits<W> targets = nbhd(u) & alive;
    Bits<W> seen;
    seen.set(targets.lowest());
    Bits<W> frontier = seen;
    while (true) {
      if (targets.subset_of(seen)) return false;
      frontier = nbhd(frontier).andnot(seen) & alive;
      if (!frontier.any()) return true;
      seen |= frontier;
    }
  }

  // g - u has at least two components, each with more than h vertices.
  bool is_extra_cut(const Bits<W>& u, std::size_t h) const {
    Bits<W> rest = all_.andnot(u);
    std::size_t comps = 0;
    while (rest.any()) {
      Bits<W> seen;
      seen.set(rest.lowest());
      Bits<W> frontier = seen;
      while (frontier.any()) {
        frontier = nbhd(frontier).andnot(seen) & rest;
        seen |= frontier;
      }
      if (seen.count() <= h) return false;
      rest = rest.andnot(seen);
      ++comps;
    }
    return comps >= 2;
  }

 private:
  std::size_t n_;
  std::size_t bytes_;
  std::vector<Bits<W>> table_;
  Bits<W> all_;
};

// Shared counters and limits for one search call.
class Governor {
 public:
  Governor(const SearchBudget& b) : budget_(b), start_(Clock::now()) {}

  // Adds `n` checks; returns false once any cap has tripped.
  bool charge(std::uint64_t n) {
    const auto total = checks_.fetch_add(n) + n;
    if (total > budget_.max_checks) trip("check cap of " + std::to_string(budget_.max_checks) + " reached");
    if (elapsed() > budget_.time_cap) trip("time cap of " + std::to_string(budget_.time_cap) + " s reached");
    return !tripped();
  }
  void trip(const std::string& why) {
    std::lock_guard lock(mu_);
    if (!tripped_.exchange(true)) reason_ = why;
  }
  bool tripped() const { return tripped_.load(); }
  std::string reason() const {
    std::lock_guard lock(mu_);
    return reason_;
  }
  std::uint64_t checks() const { return checks_.load(); }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  const SearchBudget& budget() const { return budget_; }

 private:
  SearchBudget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> checks_{0};
  std::atomic<bool> tripped_{false};
  mutable std::mutex mu_;
  std::string reason_;
};

unsigned worker_count(const SearchBudget& b) {
  if (b.jobs) return b.jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

enum class Outcome { found, none, tripped };

// Searches all s-subsets of `masks` (lexicographic in index order) for one
// whose union satisfies `pred`. Workers claim first indices in turn; the
// witness with the smallest first index wins, which is also the
// lexicographically first one, so the answer does not depend on timing.
template <std::size_t W, typename Pred>
Outcome search_exact(const std::vector<Bits<W>>& masks, std::size_t s, const Pred& pred, Governor& gov,
                     std::vector<std::size_t>& witness) {
  const std::size_t m = masks.size();
  if (s == 0 || s > m) return Outcome::none;
  constexpr std::uint64_t kChunk = 1 << 14;
  std::atomic<std::size_t> next_first{0};
  std::atomic<std::size_t> best_first{m};
  std::mutex mu;
  std::map<std::size_t, std::vector<std::size_t>> found;

  auto work = [&]() {
    std::vector<std::size_t> idx(s);
    std::vector<Bits<W>> prefix(s);
    std::uint64_t local = 0;
    while (!gov.tripped()) {
      const std::size_t first = next_first.fetch_add(1);
      if (first + s > m || first >= best_first.load()) break;
      idx[0] = first;
      prefix[0] = masks[first];
      if (s == 1) {
        ++local;
        if (pred(prefix[0])) {
          std::lock_guard lock(mu);
          found[first] = idx;
          std::size_t cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
        }
        continue;
      }
      // Depth-first over positions 1..s-1.
      std::size_t d = 1;
      idx[1] = first;
      bool stop = false;
      while (d >= 1 && !stop) {
        ++idx[d];
        if (idx[d] + (s - d) > m) {
          --d;
          continue;
        }
        prefix[d] = prefix[d - 1] | masks[idx[d]];
        if (d + 1 < s) {
          ++d;
          idx[d] = idx[d - 1];
          continue;
        }
        if (++local == kChunk) {
          if (!gov.charge(local) || first > best_first.load()) stop = true;
          local = 0;
        }
        if (pred(prefix[d])) {
          std::lock_guard lock(mu);
          found[first] = idx;
          std::size_t cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
          stop = true;
        }
      }
    }
    gov.charge(local);
  };

  const unsigned jobs = worker_count(gov.budget());
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (!found.empty()) {
    witness = found.begin()->second;
    return Outcome::found;
  }
  return gov.tripped() ? Outcome::tripped : Outcome::none;
}

void check_connected(const Graph& g) {
  if (g.order() > kMaxSearchOrder) {
    throw BudgetError("exhaustive search supports at most " + std::to_string(kMaxSearchOrder) + " vertices, graph has " +
                      std::to_string(g.order()));
  }
  if (!is_connected(g)) throw InvalidArgument("exhaustive search needs a connected graph");
}

// Distinct vertex sets of shape copies with one representative member each.
template <std::size_t W>
struct CopyTable {
  std::vector<Bits<W>> masks;
  std::vector<CutMember> members;
};

template <std::size_t W>
bool collect_copies(const Graph& g, const ShapeSpec& shape, CutMode mode, Governor& gov, CopyTable<W>& out) {
  std::map<Bits<W>, std::size_t> seen;
  bool over = false;
  enumerate_shape_copies(g, shape, mode, [&](const CutMember& mem) {
    Bits<W> b;
    for (VertexId v : mem.vertices) b.set(v);
    if (seen.emplace(b, out.masks.size()).second) {
      out.masks.push_back(b);
      out.members.push_back(mem);
      if (out.masks.size() > gov.budget().max_candidates) {
        over = true;
        return false;
      }
    }
    return true;
  });
  if (over) gov.trip("candidate cap of " + std::to_string(gov.budget().max_candidates) + " reached");
  return !over;
}

template <std::size_t W>
class CutSearch {
 public:
  CutSearch(const Graph& g, const ShapeSpec& shape, CutMode mode, const SearchBudget& budget)
      : g_(g), shape_(shape), mode_(mode), kernel_(g), gov_(budget) {}

  // Exact size s; sets witness on success.
  Outcome exact(std::size_t s, StructureCut& witness) {
    if (s > gov_.budget().max_members) {
      gov_.trip("member cap of " + std::to_string(gov_.budget().max_members) + " reached");
      return Outcome::tripped;
    }
    if (s == 1) return stream_single(witness);
    if (!ensure_copies()) return Outcome::tripped;
    std::vector<std::size_t> idx;
    auto pred = [this](const Bits<W>& u) { return kernel_.is_cut(u); };
    Outcome o = search_exact<W>(copies_.masks, s, pred, gov_, idx);
    if (o == Outcome::found) {
      witness = StructureCut{{}, mode_};
      for (std::size_t i : idx) witness.members.push_back(copies_.members[i]);
    }
    return o;
  }

  // Number of distinct vertex sets, once collected.
  std::optional<std::size_t> distinct() const {
    if (!loaded_) return std::nullopt;
    return copies_.masks.size();
  }

  SearchStats stats() const {
    return {loaded_ ? copies_.masks.size() : streamed_, gov_.checks(), gov_.elapsed()};
  }
  const Governor& governor() const { return gov_; }

 private:
  bool ensure_copies() {
    if (loaded_) return true;
    if (!collect_copies<W>(g_, shape_, mode_, gov_, copies_)) return false;
    loaded_ = true;
    return true;
  }

  // Size one needs no subset table, so copies are checked as they stream.
  Outcome stream_single(StructureCut& witness) {
    bool hit = false;
    std::uint64_t local = 0;
    streamed_ = 0;
    enumerate_shape_copies(g_, shape_, mode_, [&](const CutMember& mem) {
      ++streamed_;
      Bits<W> b;
      for (VertexId v : mem.vertices) b.set(v);
      if (kernel_.is_cut(b)) {
        witness = StructureCut{{mem}, mode_};
        hit = true;
        return false;
      }
      if (++local == 4096) {
        local = 0;
        if (!gov_.charge(4096)) return false;
      }
      return true;
    });
    gov_.charge(local);
    if (hit) return Outcome::found;
    return gov_.tripped() ? Outcome::tripped : Outcome::none;
  }

  const Graph& g_;
  ShapeSpec shape_;
  CutMode mode_;
  Kernel<W> kernel_;
  Governor gov_;
  CopyTable<W> copies_;
  bool loaded_ = false;
  std::uint64_t streamed_ = 0;
};

// Runs `f` with the narrowest bitset width that fits g.
template <typename F>
auto dispatch(const Graph& g, F&& f) {
  const std::size_t n = g.order();
  if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (n <= 256) return f(std::integral_constant<std::size_t, 4>{});
  return f(std::integral_constant<std::size_t, 8>{});
}

bool trivially_cut(const Graph& g) { return g.order() <= 1; }

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::yes: return "yes";
    case SearchStatus::no: return "no";
    case SearchStatus::budget_exceeded: break;
  }
  return "budget_exceeded";
}

ExistsResult exists_cut_of_size(const Graph& g, const ShapeSpec& shape, CutMode mode, std::size_t size_bound,
                                const SearchBudget& budget) {
  check_connected(g);
  ExistsResult res;
  if (trivially_cut(g)) {
    res.status = SearchStatus::yes;
    res.witness.mode = mode;
    return res;
  }
  return dispatch(g, [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    CutSearch<W> search(g, shape, mode, budget);
    for (std::size_t s = 1; s <= size_bound; ++s) {
      Outcome o = search.exact(s, res.witness);
      if (o == Outcome::found) {
        res.status = SearchStatus::yes;
        break;
      }
      if (o == Outcome::tripped) {
        res.status = SearchStatus::budget_exceeded;
        res.reason = search.governor().reason();
        break;
      }
      res.proven_none = s;
      if (auto d = search.distinct(); d && s >= *d) {
        res.proven_none = size_bound;
        break;
      }
    }
    if (res.status == SearchStatus::no) res.proven_none = size_bound;
    res.stats = search.stats();
    return res;
  });
}

MinCutResult min_structure_cut(const Graph& g, const ShapeSpec& shape, CutMode mode, const SearchBudget& budget) {
  check_connected(g);
  MinCutResult res;
  if (trivially_cut(g)) {
    res.certified = true;
    res.witness.mode = mode;
    return res;
  }
  return dispatch(g, [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    CutSearch<W> search(g, shape, mode, budget);
    for (std::size_t s = 1;; ++s) {
      res.value = s;
      Outcome o = search.exact(s, res.witness);
      if (o == Outcome::found) {
        auto rep = verify_cut(g, res.witness, shape, mode);
        if (!rep.pass) throw std::logic_error("search witness failed verification");
        res.certified = true;
        break;
      }
      if (o == Outcome::tripped) {
        res.reason = search.governor().reason();
        break;
      }
      if (auto d = search.distinct(); d && s >= *d) {
        res.impossible = true;
        res.certified = true;
        res.value = 0;
        break;
      }
    }
    res.stats = search.stats();
    return res;
  });
}

ExtraResult g_extra_connectivity(const Graph& g, std::size_t h, const SearchBudget& budget) {
  check_connected(g);
  ExtraResult res;
  if (g.order() < 2 * (h + 1)) {
    res.certified = true;
    res.impossible = true;
    return res;
  }
  const std::size_t start = h == 0 ? 1 : min_vertex_cut(g);
  return dispatch(g, [&](auto w) {
    constexpr std::size_t W = decltype(w)::value;
    Kernel<W> kernel(g);
    Governor gov(budget);
    std::vector<Bits<W>> singles(g.order());
    for (VertexId v = 0; v < g.order(); ++v) singles[v].set(v);
    auto pred = [&](const Bits<W>& u) { return kernel.is_extra_cut(u, h); };
    const std::size_t last = g.order() - 2 * (h + 1);
    for (std::size_t s = start;; ++s) {
      res.value = s;
      if (s > last) {
        res.certified = true;
        res.impossible = true;
        res.value = 0;
        break;
      }
      if (s > budget.max_members) {
        res.reason = "member cap of " + std::to_string(budget.max_members) + " reached";
        break;
      }
      std::vector<std::size_t> idx;
      Outcome o = search_exact<W>(singles, s, pred, gov, idx);
      if (o == Outcome::found) {
        for (std::size_t i : idx) res.witness.push_back(static_cast<VertexId>(i));
        res.certified = true;
        break;
      }
      if (o == Outcome::tripped) {
        res.reason = gov.reason();
        break;
      }
    }
    res.stats = {g.order(), gov.checks(), gov.elapsed()};
    return res;
  });
}

}  // namespace dcn
