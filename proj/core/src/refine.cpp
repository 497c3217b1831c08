#include "mi/refine.hpp"

#include <algorithm>
#include <utility>

namespace mi {

namespace {

void add_all(ElementSet& s, const std::vector<int>& elems) {
  for (int v : elems) s.add(v);
}

void remove_all(ElementSet& s, const std::vector<int>& elems) {
  for (int v : elems) s.remove(v);
}

// S minus the non-removed part of the given layer; the base the second
// matroid sees once that whole layer is treated as tentatively exchanged out.
// Layers past the computed depth read as empty, so this is S itself for the
// imaginary layer 2l+2.
ElementSet base_without_live(const LayeredState& st, const CommonSet& s, int layer) {
  ElementSet t = s.members();
  for (int v : st.layers().layer(layer))
    if (st.status(v) != ElementStatus::Removed) t.remove(v);
  return t;
}

class HookScope {
public:
  HookScope(const RefineHooks* hooks, const CountingOracle& m1,
            const CountingOracle& m2)
      : hooks_(hooks), m1_(m1), m2_(m2), q1_(m1.count()), q2_(m2.count()) {}

  void done(RefineOp op, int k, const LayeredState& st,
            const CommonSet& s) const {
    if (hooks_ && hooks_->after_op)
      hooks_->after_op(op, k, st, s, m1_.count() - q1_, m2_.count() - q2_);
  }

private:
  const RefineHooks* hooks_;
  const CountingOracle& m1_;
  const CountingOracle& m2_;
  std::uint64_t q1_, q2_;
};

}  // namespace

void refine_ab(int k, LayeredState& st, const CommonSet& s, CountingOracle& m1,
               CountingOracle& m2, const RefineHooks* hooks) {
  if (k < 0 || k > st.ell())
    throw ContractError("refine_ab: pair index out of range");
  const HookScope scope(hooks, m1, m2);

  ElementSet t = s.members();
  remove_all(t, st.a_set(k));
  add_all(t, st.b_set(k + 1));
  for (int x : st.fresh_in(2 * k + 1)) {
    t.add(x);
    if (m1.independent(t))
      st.select(x);
    else
      t.remove(x);
  }
  for (int a : st.a_set(k)) {
    t.add(a);
    if (m1.independent(t))
      st.remove(a);  // addable back: A_k did not need it
    else
      t.remove(a);
  }
  scope.done(RefineOp::AB, k, st, s);
}

std::vector<int> refine_ba(int k, LayeredState& st, const CommonSet& s,
                           CountingOracle& m1, CountingOracle& m2,
                           const RefineHooks* hooks) {
  if (k < 1 || k > st.ell() + 1)
    throw ContractError("refine_ba: pair index out of range");
  const HookScope scope(hooks, m1, m2);

  ElementSet t = base_without_live(st, s, 2 * k);
  for (int b : st.b_set(k)) {
    t.add(b);
    if (!m2.independent(t)) {
      t.remove(b);
      st.remove(b);
    }
  }
  std::vector<int> newly;
  for (int a : st.fresh_in(2 * k)) {
    t.add(a);
    if (m2.independent(t)) continue;  // matchable: a may stay fresh
    t.remove(a);
    st.select(a);
    newly.push_back(a);
  }
  scope.done(RefineOp::BA, k, st, s);
  return newly;
}

void refine_aba(int k, LayeredState& st, const CommonSet& s, CountingOracle& m1,
                CountingOracle& m2, const RefineHooks* hooks) {
  if (k < 0 || k > st.ell())
    throw ContractError("refine_aba: pair index out of range");
  const HookScope scope(hooks, m1, m2);

  refine_ba(k + 1, st, s, m1, m2, hooks);

  ElementSet t1 = s.members();
  remove_all(t1, st.a_set(k));
  add_all(t1, st.b_set(k + 1));
  ElementSet t2 = base_without_live(st, s, 2 * k + 2);
  add_all(t2, st.b_set(k + 1));
  for (int x : st.fresh_in(2 * k + 1)) {
    t1.add(x);
    if (!m1.independent(t1)) {
      t1.remove(x);  // blocked on the first matroid: leave fresh
      continue;
    }
    t2.add(x);
    if (m2.independent(t2)) {
      st.select(x);
    } else {
      t1.remove(x);
      t2.remove(x);
      st.remove(x);
    }
  }

  refine_ba(k + 1, st, s, m1, m2, hooks);
  refine_ab(k, st, s, m1, m2, hooks);
  scope.done(RefineOp::ABA, k, st, s);
}

void refine_pass(LayeredState& st, const CommonSet& s, CountingOracle& m1,
                 CountingOracle& m2, const RefineHooks* hooks) {
  const HookScope scope(hooks, m1, m2);
  for (int k = st.ell(); k >= 0; --k) refine_aba(k, st, s, m1, m2, hooks);
  scope.done(RefineOp::Pass, -1, st, s);
}

RefineOutcome refine_path(LayeredState& st, const CommonSet& s,
                          CountingOracle& m1, CountingOracle& m2,
                          ValidPath* spliced, const RefineHooks* hooks) {
  constexpr int kNextNone = -1;
  constexpr int kNextT = -2;
  const HookScope scope(hooks, m1, m2);

  std::vector<int> next(static_cast<std::size_t>(st.n()), kNextNone);
  auto splice = [&](int start, int entry_layer) {
    ValidPath path;
    path.entry_layer = entry_layer;
    for (int x = start; x != kNextT; x = next[x]) {
      if (x == kNextNone)
        throw ContractError("refine_path: broken successor chain");
      path.elems.push_back(x);
      st.select(x);
    }
    if (spliced) *spliced = std::move(path);
    scope.done(RefineOp::Path, -1, st, s);
    return RefineOutcome::ExtendedByPath;
  };

  for (int k = st.ell() + 1; k >= 1; --k) {
    const auto newly = refine_ba(k, st, s, m1, m2, hooks);
    if (!newly.empty()) {
      // A_k grew, so S-A_k+B_{k+1} gained slack and the recorded successor
      // chain of any grown element already reaches the top layer.
      return splice(next[newly.front()], 2 * k + 1);
    }

    // Settle layer 2k-1: keep each fresh b only if the layer-2k live part can
    // absorb it on the second matroid, and record its exchange partner.
    {
      ElementSet w = base_without_live(st, s, 2 * k);
      add_all(w, st.b_set(k));
      ElementSet x = s.members();
      remove_all(x, st.a_set(k));
      add_all(x, st.b_set(k));
      const std::vector<int> partners = st.fresh_in(2 * k);
      for (int b : st.fresh_in(2 * k - 1)) {
        w.add(b);
        const bool alive = m2.independent(w);
        w.remove(b);
        if (!alive) {
          st.remove(b);
          continue;
        }
        if (k == st.ell() + 1) {
          next[b] = kNextT;
          continue;
        }
        const auto a = find_exchange(m2, x, partners, b);
        if (!a)  // impossible over honest layers: w+b independent forces a hit
          throw ContractError("refine_path: live element with no partner");
        next[b] = *a;
      }
    }

    // A path may enter at layer 2k-1 directly.
    {
      ElementSet t = s.members();
      remove_all(t, st.a_set(k - 1));
      add_all(t, st.b_set(k));
      for (int b : st.fresh_in(2 * k - 1)) {
        t.add(b);
        const bool entry = m1.independent(t);
        t.remove(b);
        if (entry) return splice(b, 2 * k - 1);
      }
    }

    refine_ab(k - 1, st, s, m1, m2, hooks);

    // Match the fresh part of layer 2k-2 onto the survivors above; whatever
    // stays unmatched heads no valid path and is dropped.
    {
      ElementSet x = s.members();
      remove_all(x, st.a_set(k - 1));
      add_all(x, st.b_set(k));
      std::vector<int> pool = st.fresh_in(2 * k - 2);
      for (int b : st.fresh_in(2 * k - 1)) {
        while (auto a = find_exchange(m1, x, pool, b)) {
          next[*a] = b;
          pool.erase(std::find(pool.begin(), pool.end(), *a));
        }
      }
      for (int a : pool) st.remove(a);
    }
  }

  scope.done(RefineOp::Path, -1, st, s);
  return RefineOutcome::MaximalReached;
}

}  // namespace mi
