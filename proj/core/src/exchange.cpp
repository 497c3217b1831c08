#include "mi/exchange.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace mi {

CommonSet CommonSet::verified(ElementSet members, const IndependenceOracle& m1,
                              const IndependenceOracle& m2) {
  if (!m1.independent(members))
    throw ContractError("common set not independent in the first matroid");
  if (!m2.independent(members))
    throw ContractError("common set not independent in the second matroid");
  CommonSet out(members.universe_size());
  out.members_ = std::move(members);
  return out;
}

const std::vector<int>& DistanceLayers::layer(int k) const {
  static const std::vector<int> empty;
  if (k < 1 || k > num_layers()) return empty;
  return layers[k - 1];
}

int DistanceLayers::layer_size(int k) const {
  return k >= 1 && k <= num_layers() ? static_cast<int>(layers[k - 1].size()) : 0;
}

std::optional<int> find_exchange(CountingOracle& oracle, const ElementSet& x,
                                 const std::vector<int>& y, int b) {
  if (y.empty()) return std::nullopt;
  const int m = static_cast<int>(y.size());
  // probe(i): x + b with the first i candidates removed. Removing a longer
  // prefix only helps, so the answers are monotone in i and the minimal
  // independent prefix ends at the first working candidate.
  auto probe = [&](int i) {
    ElementSet t = x;
    t.add(b);
    for (int j = 0; j < i; ++j) t.remove(y[j]);
    return oracle.independent(t);
  };
  if (!probe(m)) return std::nullopt;
  int lo = 1, hi = m;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (probe(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return y[lo - 1];
}

DistanceLayers compute_distance_layers(CountingOracle& m1, CountingOracle& m2,
                                       const CommonSet& s, int max_ell) {
  if (m1.ground_size() != m2.ground_size())
    throw std::invalid_argument("matroids disagree on the ground size");
  if (max_ell < 0) throw std::invalid_argument("max_ell must be >= 0");

  const int n = m1.ground_size();
  const ElementSet& base = s.members();

  DistanceLayers out;
  out.n = n;
  out.layer_of.assign(n, 0);
  out.t_arc.assign(n, 0);

  std::vector<int> outside;  // unlayered, not in S
  for (int v = 0; v < n; ++v) {
    if (!base.contains(v)) outside.push_back(v);
  }
  std::vector<int> inside = base.to_vector();  // unlayered members of S

  auto commit = [&](std::vector<int> layer) {
    const int depth = out.num_layers() + 1;
    for (int v : layer) out.layer_of[v] = depth;
    out.layers.push_back(std::move(layer));
  };

  // First layer: elements addable on the M1 side.
  std::vector<int> frontier, rest;
  for (int b : outside) {
    ElementSet probe = base;
    probe.add(b);
    if (m1.independent(probe)) {
      frontier.push_back(b);
    } else {
      rest.push_back(b);
    }
  }
  outside.swap(rest);

  for (int i = 0;; ++i) {  // i = completed odd layers so far
    if (frontier.empty()) {
      out.exhausted = true;
      break;
    }
    commit(std::move(frontier));

    bool t_reached = false;
    for (int b : out.layers.back()) {
      ElementSet probe = base;
      probe.add(b);
      if (m2.independent(probe)) {
        out.t_arc[b] = 1;
        t_reached = true;
      }
    }
    if (t_reached) {
      out.st_distance = 2 * i + 2;
      out.ell = i;
      break;
    }
    if (i == max_ell) break;  // deeper layers would exceed the cap

    // Even layer: union of M2 circuits of S+b over the odd frontier, peeled
    // greedily so each found member costs one binary search and each
    // exhausted frontier element costs a single miss query.
    std::vector<int> even;
    for (int b : out.layers.back()) {
      while (auto a = find_exchange(m2, base, inside, b)) {
        even.push_back(*a);
        inside.erase(std::find(inside.begin(), inside.end(), *a));
      }
    }
    if (even.empty()) {
      out.exhausted = true;
      break;
    }
    std::sort(even.begin(), even.end());
    commit(std::move(even));

    // Next odd layer: b qualifies iff the M1 circuit of S+b meets the even
    // layer just built (earlier even layers were already ruled out when b
    // stayed unlayered).
    rest.clear();
    std::vector<int> next;
    for (int b : outside) {
      ElementSet probe = base;
      probe.add(b);
      for (int a : out.layers.back()) probe.remove(a);
      if (m1.independent(probe)) {
        next.push_back(b);
      } else {
        rest.push_back(b);
      }
    }
    outside.swap(rest);
    frontier = std::move(next);
  }
  return out;
}

CommonSet augment_path(const CommonSet& s, const AugmentingPath& p,
                       const IndependenceOracle& m1, const IndependenceOracle& m2) {
  ElementSet toggled = s.members();
  for (int v : p.elems) {
    if (toggled.contains(v)) {
      toggled.remove(v);
    } else {
      toggled.add(v);
    }
  }
  if (toggled.size() != s.size() + 1)
    throw ContractError("augmenting path must grow the set by exactly one");
  return CommonSet::verified(std::move(toggled), m1, m2);
}

PathSearch::PathSearch(const DistanceLayers& layers)
    : layers_(&layers), dead_(layers.n, 0), cursor_(layers.n, 0) {}

std::optional<AugmentingPath> PathSearch::next(CountingOracle& m1,
                                               CountingOracle& m2,
                                               const CommonSet& s) {
  const DistanceLayers& L = *layers_;
  if (!L.st_reachable()) return std::nullopt;
  const ElementSet& base = s.members();
  const int top = L.num_layers();

  std::vector<int> acc;  // path elements, layer 1 upward

  // Walk backward from b in odd layer k, re-verifying every arc against the
  // current S (the layers may be stale after earlier augmentations in this
  // phase). Dead ends are marked permanently for the phase.
  std::function<bool(int, int)> descend = [&](int b, int k) -> bool {
    if (k == 1) {
      ElementSet probe = base;
      probe.add(b);
      if (m1.independent(probe)) {
        acc.push_back(b);
        return true;
      }
      dead_[b] = 1;
      return false;
    }
    while (true) {
      std::vector<int> alive;
      for (int v : L.layer(k - 1)) {
        if (!dead_[v]) alive.push_back(v);
      }
      auto a = find_exchange(m1, base, alive, b);
      if (!a) {
        dead_[b] = 1;
        return false;
      }
      int& cur = cursor_[*a];
      for (; cur < L.layer_size(k - 2); ++cur) {
        const int b2 = L.layer(k - 2)[cur];
        if (dead_[b2]) continue;
        ElementSet probe = base;
        probe.add(b2);
        probe.remove(*a);
        if (!m2.independent(probe)) continue;
        if (descend(b2, k - 2)) {
          acc.push_back(*a);
          acc.push_back(b);
          return true;
        }
      }
      dead_[*a] = 1;  // no odd predecessor left for a; try the next partner
    }
  };

  for (int b : L.layer(top)) {
    if (dead_[b] || !L.t_arc[b]) continue;
    ElementSet probe = base;
    probe.add(b);
    if (!m2.independent(probe)) {
      dead_[b] = 1;
      continue;
    }
    acc.clear();
    if (descend(b, top)) return AugmentingPath{std::move(acc)};
  }
  return std::nullopt;
}

void PathSearch::consume(const AugmentingPath& p) {
  for (int v : p.elems) dead_[v] = 1;
  // Pair probes are relative to S, which just changed.
  std::fill(cursor_.begin(), cursor_.end(), 0);
}

std::optional<AugmentingPath> find_augmenting_path(CountingOracle& m1,
                                                   CountingOracle& m2,
                                                   const CommonSet& s,
                                                   const DistanceLayers& layers) {
  PathSearch search(layers);
  return search.next(m1, m2, s);
}

}  // namespace mi
