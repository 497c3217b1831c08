#include "mi/layered_state.hpp"

#include <algorithm>

namespace mi {

LayeredState::LayeredState(const DistanceLayers& layers)
    : layers_(&layers),
      ell_(layers.st_reachable() ? layers.ell
                                 : std::max(0, (layers.num_layers() - 1) / 2)),
      status_(layers.n, ElementStatus::Fresh),
      selected_per_layer_(layers.num_layers() + 1, 0),
      fresh_per_layer_(layers.num_layers() + 1, 0) {
  for (int k = 1; k <= layers.num_layers(); ++k)
    fresh_per_layer_[k] = layers.layer_size(k);
}

ElementStatus LayeredState::status(int v) const { return status_[v]; }

int LayeredState::layer_index(int v) const {
  if (v < 0 || v >= n() || layers_->layer_of[v] == 0)
    throw ContractError("element is not in any distance layer");
  return layers_->layer_of[v];
}

void LayeredState::select(int v) {
  const int k = layer_index(v);
  if (status_[v] != ElementStatus::Fresh)
    throw ContractError("only fresh elements can be selected");
  status_[v] = ElementStatus::Selected;
  ++selected_per_layer_[k];
  --fresh_per_layer_[k];
  if (k % 2 == 0) ++even_changes_;
}

void LayeredState::remove(int v) {
  const int k = layer_index(v);
  if (status_[v] == ElementStatus::Removed)
    throw ContractError("element is already removed");
  if (status_[v] == ElementStatus::Selected) {
    --selected_per_layer_[k];
  } else {
    --fresh_per_layer_[k];
  }
  status_[v] = ElementStatus::Removed;
  if (k % 2 == 0) ++even_changes_;
}

namespace {
std::vector<int> filtered(const DistanceLayers& layers,
                          const std::vector<ElementStatus>& status, int layer,
                          ElementStatus want) {
  std::vector<int> out;
  for (int v : layers.layer(layer)) {
    if (status[v] == want) out.push_back(v);
  }
  return out;
}
}  // namespace

std::vector<int> LayeredState::selected_in(int layer) const {
  return filtered(*layers_, status_, layer, ElementStatus::Selected);
}
std::vector<int> LayeredState::fresh_in(int layer) const {
  return filtered(*layers_, status_, layer, ElementStatus::Fresh);
}
std::vector<int> LayeredState::removed_in(int layer) const {
  return filtered(*layers_, status_, layer, ElementStatus::Removed);
}

int LayeredState::selected_count(int layer) const {
  if (layer < 1 || layer > layers_->num_layers()) return 0;
  return selected_per_layer_[layer];
}
int LayeredState::fresh_count(int layer) const {
  if (layer < 1 || layer > layers_->num_layers()) return 0;
  return fresh_per_layer_[layer];
}
int LayeredState::removed_count(int layer) const {
  return layers_->layer_size(layer) - selected_count(layer) - fresh_count(layer);
}

ElementSet LayeredState::selected_odd_union() const {
  ElementSet out(n());
  for (int k = 1; k <= layers_->num_layers(); k += 2) {
    for (int v : layers_->layer(k)) {
      if (status_[v] == ElementStatus::Selected) out.add(v);
    }
  }
  return out;
}

ElementSet LayeredState::selected_even_union() const {
  ElementSet out(n());
  for (int k = 2; k <= layers_->num_layers(); k += 2) {
    for (int v : layers_->layer(k)) {
      if (status_[v] == ElementStatus::Selected) out.add(v);
    }
  }
  return out;
}

LayeredState init_state(const DistanceLayers& layers) { return LayeredState(layers); }

namespace {

void add_all(ElementSet& s, const std::vector<int>& elems) {
  for (int v : elems) s.add(v);
}
void remove_all(ElementSet& s, const std::vector<int>& elems) {
  for (int v : elems) s.remove(v);
}

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

}  // namespace

bool check_invariants(const LayeredState& st, const CommonSet& s,
                      const IndependenceOracle& m1, const IndependenceOracle& m2,
                      std::string* why) {
  const int ell = st.ell();
  const ElementSet& base = s.members();

  // Non-increasing widths |B_1| >= |A_1| >= ... >= |B_{ell+1}|.
  int prev = st.b_size(1);
  for (int k = 1; k <= ell; ++k) {
    if (st.a_size(k) > prev)
      return fail(why, "width grows from B_" + std::to_string(k) + " to A_" +
                           std::to_string(k));
    prev = st.a_size(k);
    if (st.b_size(k + 1) > prev)
      return fail(why, "width grows from A_" + std::to_string(k) + " to B_" +
                           std::to_string(k + 1));
    prev = st.b_size(k + 1);
  }

  {
    ElementSet probe = base;
    add_all(probe, st.b_set(1));
    if (!m1.independent(probe))
      return fail(why, "S+B_1 is dependent in the first matroid");
  }
  {
    ElementSet probe = base;
    add_all(probe, st.b_set(ell + 1));
    if (!m2.independent(probe))
      return fail(why, "S+B_" + std::to_string(ell + 1) +
                           " is dependent in the second matroid");
  }
  for (int k = 1; k <= ell; ++k) {
    ElementSet probe = base;
    remove_all(probe, st.a_set(k));
    add_all(probe, st.b_set(k + 1));
    if (!m1.independent(probe))
      return fail(why, "S-A_" + std::to_string(k) + "+B_" + std::to_string(k + 1) +
                           " is dependent in the first matroid");
  }
  const int base_rank2 = rank(m2, base);
  for (int k = 1; k <= ell; ++k) {
    ElementSet probe = base;
    remove_all(probe, st.a_set(k));
    add_all(probe, st.b_set(k));
    if (rank(m2, probe) != base_rank2)
      return fail(why, "S-A_" + std::to_string(k) + "+B_" + std::to_string(k) +
                           " loses rank in the second matroid");
  }

  // Removed even layers are jointly replaceable: dropping R_2k from
  // W = S-A_k+(D_{2k+1}-R_{2k+1}) must cost exactly |R_2k| of rank_1.
  for (int k = 1; k <= ell; ++k) {
    ElementSet w = base;
    remove_all(w, st.a_set(k));
    for (int v : st.b_set(k + 1)) w.add(v);
    for (int v : st.fresh_in(2 * k + 1)) w.add(v);
    const auto removed = st.removed_in(2 * k);
    ElementSet without = w;
    remove_all(without, removed);
    if (rank(m1, without) != rank(m1, w) - static_cast<int>(removed.size()))
      return fail(why, "removed part of layer " + std::to_string(2 * k) +
                           " is not jointly replaceable");
  }

  // Removed odd layers add no rank: rank_2(W+R_{2k-1}) = rank_2(W) with
  // W = S-(D_2k-R_2k)+B_k.
  for (int k = 1; k <= ell + 1; ++k) {
    ElementSet w = base;
    for (int v : st.layers().layer(2 * k)) {
      if (st.status(v) != ElementStatus::Removed) w.remove(v);
    }
    add_all(w, st.b_set(k));
    ElementSet with = w;
    add_all(with, st.removed_in(2 * k - 1));
    if (rank(m2, with) != rank(m2, w))
      return fail(why, "removed part of layer " + std::to_string(2 * k - 1) +
                           " still adds rank in the second matroid");
  }
  return true;
}

bool is_maximal_candidate(const LayeredState& st) {
  const int w = st.b_size(1);
  for (int k = 1; k <= st.ell(); ++k) {
    if (st.a_size(k) != w || st.b_size(k + 1) != w) return false;
  }
  return true;
}

CommonSet augment_by_set(const CommonSet& s, const LayeredState& st,
                         const IndependenceOracle& m1, const IndependenceOracle& m2) {
  if (!is_maximal_candidate(st))
    throw ContractError("augmenting set widths are not all equal");
  ElementSet toggled = s.members();
  toggled |= st.selected_odd_union();
  toggled -= st.selected_even_union();
  if (toggled.size() != s.size() + st.b_size(1))
    throw ContractError("augmenting set does not grow S by its width");
  return CommonSet::verified(std::move(toggled), m1, m2);
}

}  // namespace mi
