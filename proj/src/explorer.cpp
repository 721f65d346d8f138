#include "cyclic_weights/explorer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "cyclic_weights/errors.hpp"

namespace cyclic_weights {

SuccessorSet successors(const Weight& sigma) {
  const Gr1Result gr1 = gr1_weights(sigma);
  SuccessorSet out;
  out.pruned_boundary = gr1.pruned.size();
  for (const auto& w : gr1.weights) {
    if (is_generic(w))
      out.weights.push_back(w);
    else
      ++out.dropped_non_generic;
  }
  return out;
}

CyclicModule module_of_cycle(const std::vector<Weight>& vertices) {
  if (vertices.empty()) throw DimensionError("empty cycle");
  std::vector<Weight> subs(vertices.begin() + 1, vertices.end());
  subs.push_back(vertices.front());
  return make_cyclic_module(subs);
}

namespace {

std::vector<std::vector<Weight>> rotation_cycles(const Weight& start) {
  const Params& params = start.params();
  std::vector<std::vector<Weight>> out;
  const std::vector<Int> r(start.digits().begin(), start.digits().end());
  if (!in_chain_box(params, r)) return out;
  for (Int s = 0; s < params.f(); ++s) {
    const auto chain = build_chain(params, r, start.twist(), s);
    out.emplace_back(chain.sigmas.begin(), chain.sigmas.end() - 1);
  }
  return out;
}

class CycleSearch {
 public:
  CycleSearch(const Weight& start, Int max_len, std::size_t budget)
      : start_(start), max_len_(max_len), budget_(budget) {}

  void run(CycleSearchResult& out) {
    path_.push_back(start_);
    on_path_.insert(start_);
    dfs(out);
  }

 private:
  const SuccessorSet& succ(const Weight& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) {
      it = cache_.emplace(w, successors(w)).first;
      pruned_ += it->second.pruned_boundary;
    }
    return it->second;
  }

  void dfs(CycleSearchResult& out) {
    if (out.truncated) return;
    if (out.visits >= budget_) {
      out.truncated = true;
      return;
    }
    ++out.visits;
    // map nodes are stable, so the reference survives recursion
    const std::vector<Weight>& next = succ(path_.back()).weights;
    for (const auto& w : next) {
      if (w == start_) {
        out.cycles.push_back({path_, false, false, std::nullopt});
        continue;
      }
      if (static_cast<Int>(path_.size()) >= max_len_ || on_path_.count(w)) continue;
      path_.push_back(w);
      on_path_.insert(w);
      dfs(out);
      on_path_.erase(w);
      path_.pop_back();
      if (out.truncated) return;
    }
  }

 public:
  std::size_t pruned() const { return pruned_; }

 private:
  Weight start_;
  Int max_len_;
  std::size_t budget_;
  std::vector<Weight> path_;
  std::set<Weight> on_path_;
  std::map<Weight, SuccessorSet> cache_;
  std::size_t pruned_ = 0;
};

}  // namespace

CycleSearchResult find_cycles(const Weight& start, Int max_len, std::size_t budget) {
  if (!is_generic(start)) throw DomainError("find_cycles: start weight must be generic");
  if (max_len < 1) throw DomainError("find_cycles: max_len must be >= 1");
  mu_base(start.params());  // UnsupportedDegreeError for f = 1

  CycleSearchResult out{start.params(), start, max_len, {}, {}, 0, 0, false};
  CycleSearch search(start, max_len, budget);
  search.run(out);
  out.pruned_boundary = search.pruned();

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const FoundCycle& a, const FoundCycle& b) { return a.vertices < b.vertices; });

  const auto canonical = rotation_cycles(start);
  for (auto& c : out.cycles) {
    const CyclicModule module = module_of_cycle(c.vertices);
    c.valid = validate_cyclic_module(module).ok();
    c.multiplicity_free = is_multiplicity_free(module);
    for (std::size_t s = 0; s < canonical.size(); ++s)
      if (canonical[s] == c.vertices) {
        c.canonical_rotation = static_cast<Int>(s);
        out.canonical_hits.push_back(static_cast<Int>(s));
      }
  }
  std::sort(out.canonical_hits.begin(), out.canonical_hits.end());
  return out;
}

bool CanonicalCheckReport::all_ok() const {
  return !rotations.empty() && !search_truncated &&
         std::all_of(rotations.begin(), rotations.end(), [](const RotationCheck& c) { return c.ok(); });
}

CanonicalCheckReport canonical_chain_check(const Params& params, std::span<const Int> r, Int m, std::size_t budget) {
  CanonicalCheckReport out{params, std::vector<Int>(r.begin(), r.end()), floor_mod(m, params.q_minus_1()), {}, false};
  const Weight start = make_weight(out.r, m, params);
  const CycleSearchResult search = find_cycles(start, 2 * params.f(), budget);
  out.search_truncated = search.truncated;

  for (Int s = 0; s < params.f(); ++s) {
    RotationCheck check;
    check.rotation = s;
    const ChainResult chain = build_chain(params, r, m, s);
    check.closes = chain.sigmas.back() == chain.sigmas.front();
    check.length = chain.l;
    check.cycle.assign(chain.sigmas.begin(), chain.sigmas.end() - 1);
    const CyclicModule module = build_cyclic_module(chain);
    check.valid = validate_cyclic_module(module).ok();
    check.multiplicity_free = is_multiplicity_free(module);
    check.found_by_search = std::any_of(search.cycles.begin(), search.cycles.end(),
                                        [&](const FoundCycle& c) { return c.vertices == check.cycle; });
    out.rotations.push_back(std::move(check));
  }
  return out;
}

std::vector<Weight> canonical_rotation_of(std::vector<Weight> cycle) {
  if (!cycle.empty()) std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

EvidenceReport gather_evidence(const Params& params, Int m, Int max_len, unsigned workers, std::size_t budget) {
  const auto starts = default_r_set(params);
  if (box_size(params) > kFullBoxLimit) throw DomainError("gather_evidence: box too large for exhaustive search");

  struct Partial {
    std::set<std::vector<Weight>> canonical;
    std::set<std::vector<Weight>> found;
    std::set<std::vector<Weight>> extras;
    std::set<std::vector<Weight>> non_mf;
    bool truncated = false;
  };
  auto run = [&](std::size_t begin, std::size_t end) {
    Partial part;
    for (std::size_t i = begin; i < end; ++i) {
      const Weight start = make_weight(starts[i], m, params);
      const auto result = find_cycles(start, max_len, budget);
      part.truncated = part.truncated || result.truncated;
      for (const auto& c : rotation_cycles(start)) part.canonical.insert(canonical_rotation_of(c));
      for (const auto& c : result.cycles) {
        auto key = canonical_rotation_of(c.vertices);
        part.found.insert(key);
        if (!c.multiplicity_free)
          part.non_mf.insert(key);
        else if (!c.canonical_rotation)
          part.extras.insert(key);
      }
    }
    return part;
  };

  const std::size_t n = starts.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<Partial> parts;
  if (chunks == 1) {
    parts.push_back(run(0, n));
  } else {
    std::vector<std::future<Partial>> futures;
    for (std::size_t c = 0; c < chunks; ++c)
      futures.push_back(std::async(std::launch::async, run, n * c / chunks, n * (c + 1) / chunks));
    for (auto& f : futures) parts.push_back(f.get());
  }

  Partial all;
  for (auto& p : parts) {
    all.canonical.insert(p.canonical.begin(), p.canonical.end());
    all.found.insert(p.found.begin(), p.found.end());
    all.extras.insert(p.extras.begin(), p.extras.end());
    all.non_mf.insert(p.non_mf.begin(), p.non_mf.end());
    all.truncated = all.truncated || p.truncated;
  }
  // A cycle seen from one start may be rotation-seeded from another start.
  for (const auto& c : all.canonical) all.extras.erase(c);

  EvidenceReport out{params, floor_mod(m, params.q_minus_1()), max_len};
  out.starts = n;
  out.distinct_cycles = all.found.size();
  out.canonical_expected = all.canonical.size();
  out.canonical_found = static_cast<std::size_t>(std::count_if(
      all.canonical.begin(), all.canonical.end(), [&](const auto& c) { return all.found.count(c) > 0; }));
  out.non_multiplicity_free = all.non_mf.size();
  out.extras.assign(all.extras.begin(), all.extras.end());
  out.truncated = all.truncated;
  return out;
}

}  // namespace cyclic_weights
