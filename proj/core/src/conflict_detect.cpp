#include "ltsconf/conflict_detect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace ltsconf {

bool prefilter_actions(const Rule& r0, const Rule& r1) {
  auto disjoint = [](const std::set<Label>& deleted, const std::set<Label>& used) {
    for (const auto& a : deleted) {
      for (const auto& b : used) {
        if (may_coincide(a, b)) return false;
      }
    }
    return true;
  };
  return disjoint(deletion_labels(r0), r1.left.actions()) &&
         disjoint(deletion_labels(r1), r0.left.actions());
}

bool parallel_independent(const Rule& r0, const Match& m0, const Rule& r1, const Match& m1) {
  std::set<Transition> image1;
  for (const auto& [_, h] : m1.morphism.transitions) image1.insert(h);
  std::set<Transition> kept0;
  for (const auto& t : r0.interface.transitions()) kept0.insert(m0.morphism.transitions.at(t));
  std::set<Transition> kept1;
  for (const auto& t : r1.interface.transitions()) kept1.insert(m1.morphism.transitions.at(t));
  for (const auto& [_, h] : m0.morphism.transitions) {
    if (image1.contains(h) && !(kept0.contains(h) && kept1.contains(h))) return false;
  }
  return true;
}

namespace {

struct Labels {
  std::vector<Label> all;
  std::vector<Label> deleted;
};

Labels outgoing_labels(const Rule& r, StateId s) {
  Labels out;
  for (auto i : r.left.outgoing(s)) {
    const auto& t = r.left.transitions()[i];
    out.all.push_back(t.label);
    if (!r.interface.has_transition(t)) out.deleted.push_back(t.label);
  }
  return out;
}

bool share(const std::vector<Label>& a, const std::vector<Label>& b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (may_coincide(x, y)) return true;
    }
  }
  return false;
}

}  // namespace

bool seed_passes_screen(const Rule& r0, const Rule& r1, StateId s, StateId t) {
  auto a = outgoing_labels(r0, s);
  auto b = outgoing_labels(r1, t);
  return share(a.all, b.deleted) || share(a.deleted, b.all);
}

namespace {

// Morphism under construction: transitions by index into the patterns.
struct Growing {
  std::map<StateId, StateId> states;
  std::map<std::size_t, std::size_t> transitions;
  PatternUnifier unifier;

  auto key() const { return std::tie(states, transitions); }
};

bool contains(const Growing& big, const Growing& small) {
  return std::includes(big.states.begin(), big.states.end(), small.states.begin(),
                       small.states.end()) &&
         std::includes(big.transitions.begin(), big.transitions.end(),
                       small.transitions.begin(), small.transitions.end());
}

class CcmSearch {
 public:
  CcmSearch(const Rule& r0, const Rule& r1) : r0_(r0), r1_(r1) {}

  std::vector<Growing> run(StateId s, StateId t) {
    Growing seed;
    seed.states.emplace(s, t);
    grow(seed);
    std::vector<const Growing*> valid;
    for (const auto& g : visited_) {
      if (!g.transitions.empty() && closed(g)) valid.push_back(&g);
    }
    std::vector<Growing> out;
    for (const auto* g : valid) {
      bool maximal = std::none_of(valid.begin(), valid.end(), [&](const Growing* h) {
        return h != g && contains(*h, *g);
      });
      if (maximal) out.push_back(*g);
    }
    return out;
  }

 private:
  struct KeyLess {
    bool operator()(const Growing& a, const Growing& b) const { return a.key() < b.key(); }
  };

  void grow(const Growing& g) {
    if (!visited_.insert(g).second) return;
    std::set<StateId> image;
    for (const auto& [_, v] : g.states) image.insert(v);
    std::set<std::size_t> used;
    for (const auto& [_, j] : g.transitions) used.insert(j);

    const auto& t0 = r0_.left.transitions();
    const auto& t1 = r1_.left.transitions();
    for (std::size_t i = 0; i < t0.size(); ++i) {
      if (g.transitions.contains(i)) continue;
      const auto& x = t0[i];
      auto src = g.states.find(x.source);
      auto dst = g.states.find(x.target);
      if (src == g.states.end() && dst == g.states.end()) continue;
      for (std::size_t j = 0; j < t1.size(); ++j) {
        if (used.contains(j)) continue;
        const auto& y = t1[j];
        if ((x.source == x.target) != (y.source == y.target)) continue;
        // Related endpoints must agree; a fresh endpoint must stay injective.
        auto fits = [&](auto it, StateId theirs) {
          return it != g.states.end() ? it->second == theirs : !image.contains(theirs);
        };
        if (!fits(src, y.source) || !fits(dst, y.target)) continue;
        Growing next = g;
        if (!next.unifier.unify(x.label, y.label)) continue;
        next.states.emplace(x.source, y.source);
        next.states.emplace(x.target, y.target);
        next.transitions.emplace(i, j);
        grow(next);
      }
    }
  }

  // The gluing-compatibility closure: a related non-glue state forces
  // every transition of its partner to be related, on both sides.
  bool closed(const Growing& g) const {
    std::set<std::size_t> image;
    for (const auto& [_, j] : g.transitions) image.insert(j);
    for (const auto& [s, t] : g.states) {
      if (!r0_.interface.has_state(s)) {
        for (auto j : r1_.left.outgoing(t)) {
          if (!image.contains(j)) return false;
        }
        for (auto j : r1_.left.incoming(t)) {
          if (!image.contains(j)) return false;
        }
      }
      if (!r1_.interface.has_state(t)) {
        for (auto i : r0_.left.outgoing(s)) {
          if (!g.transitions.contains(i)) return false;
        }
        for (auto i : r0_.left.incoming(s)) {
          if (!g.transitions.contains(i)) return false;
        }
      }
    }
    return true;
  }

  const Rule& r0_;
  const Rule& r1_;
  std::set<Growing, KeyLess> visited_;
};

}  // namespace

std::vector<ConflictCompatibilityMorphism> enumerate_ccms(const Rule& r0, const Rule& r1,
                                                          StateId s, StateId t) {
  std::vector<ConflictCompatibilityMorphism> out;
  for (auto& g : CcmSearch(r0, r1).run(s, t)) {
    ConflictCompatibilityMorphism f;
    f.morphism.states = g.states;
    for (const auto& [i, j] : g.transitions) {
      f.morphism.transitions.emplace(r0.left.transitions()[i], r1.left.transitions()[j]);
    }
    f.seed = {s, t};
    f.unifier = std::move(g.unifier);
    out.push_back(std::move(f));
  }
  return out;
}

std::set<StateId> boundary(const ConflictCompatibilityMorphism& f, const Rule& r0,
                           const Rule& r1) {
  std::set<Transition> related_images;
  for (const auto& [_, y] : f.morphism.transitions) related_images.insert(y);
  std::set<StateId> out;
  for (const auto& [s, t] : f.morphism.states) {
    bool open = false;
    for (auto i : r0.left.outgoing(s)) {
      open = open || !f.morphism.transitions.contains(r0.left.transitions()[i]);
    }
    for (auto i : r0.left.incoming(s)) {
      open = open || !f.morphism.transitions.contains(r0.left.transitions()[i]);
    }
    for (auto j : r1.left.outgoing(t)) {
      open = open || !related_images.contains(r1.left.transitions()[j]);
    }
    for (auto j : r1.left.incoming(t)) {
      open = open || !related_images.contains(r1.left.transitions()[j]);
    }
    if (open) out.insert(s);
  }
  return out;
}

namespace {

Bindings bindings_for(const Lts& pattern, const PatternUnifier& u, int side) {
  Bindings out;
  for (const auto& t : pattern.transitions()) {
    if (t.label.has_variable()) out[t.label.variable()] = u.value_of({side, t.label.variable()});
  }
  return out;
}

}  // namespace

std::optional<CriticalPair> build_conflict_situation(const ConflictCompatibilityMorphism& f,
                                                     const Rule& r0, const Rule& r1) {
  CriticalPair pair;
  pair.rule0 = r0.name;
  pair.rule1 = r1.name;
  Match m0{r0.name, {}, bindings_for(r0.left, f.unifier, 0)};
  Match m1{r1.name, {}, bindings_for(r1.left, f.unifier, 1)};

  std::vector<StateId> states;
  StateId next = 0;
  for (StateId s : r0.left.states()) {
    m0.morphism.states.emplace(s, next);
    states.push_back(next++);
  }
  auto back = f.morphism.inverse();
  for (StateId t : r1.left.states()) {
    if (auto s = back.state(t)) {
      m1.morphism.states.emplace(t, m0.morphism.states.at(*s));
    } else {
      m1.morphism.states.emplace(t, next);
      states.push_back(next++);
    }
  }

  std::vector<Transition> transitions;
  auto place = [&](const Lts& pattern, Match& m, int side) {
    for (const auto& x : pattern.transitions()) {
      Transition h{m.morphism.states.at(x.source), f.unifier.instantiate(x.label, side),
                   m.morphism.states.at(x.target)};
      m.morphism.transitions.emplace(x, h);
      transitions.push_back(h);
    }
  };
  place(r0.left, m0, 0);
  place(r1.left, m1, 1);
  pair.situation = Lts(std::move(states), std::move(transitions));

  if (!is_valid_match(r0, m0, pair.situation) || !is_valid_match(r1, m1, pair.situation)) {
    return std::nullopt;
  }
  if (parallel_independent(r0, m0, r1, m1)) return std::nullopt;
  if (r0.name == r1.name && m0.morphism == m1.morphism && m0.bindings == m1.bindings) {
    return std::nullopt;
  }
  pair.match0 = std::move(m0);
  pair.match1 = std::move(m1);
  return pair;
}

std::vector<CriticalPair> keep_minimal(std::vector<CriticalPair> pairs) {
  auto smaller = [](const Lts& a, const Lts& b) {
    return a.state_count() <= b.state_count() && a.transition_count() <= b.transition_count() &&
           a.state_count() + a.transition_count() < b.state_count() + b.transition_count();
  };
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pairs.size() && !dominated; ++j) {
      dominated = j != i && smaller(pairs[j].situation, pairs[i].situation) &&
                  find_embedding(pairs[j].situation, pairs[i].situation).has_value();
    }
    if (!dominated) out.push_back(pairs[i]);
  }
  return out;
}

Detection detect(const Rule& r0, const Rule& r1) {
  Detection d;
  if (prefilter_actions(r0, r1)) {
    d.stage = DetectionStage::prefilter;
    return d;
  }
  if (is_non_deleting(r0) && is_non_deleting(r1)) {
    d.stage = DetectionStage::non_deleting;
    return d;
  }
  std::vector<CriticalPair> found;
  for (StateId s : r0.left.states()) {
    for (StateId t : r1.left.states()) {
      if (!seed_passes_screen(r0, r1, s, t)) continue;
      ++d.seeds;
      for (const auto& f : enumerate_ccms(r0, r1, s, t)) {
        ++d.morphisms;
        auto pair = build_conflict_situation(f, r0, r1);
        if (!pair) continue;
        bool known = std::any_of(found.begin(), found.end(), [&](const CriticalPair& p) {
          return same_critical_pair(p, *pair);
        });
        if (!known) found.push_back(std::move(*pair));
      }
    }
  }
  d.pairs = keep_minimal(std::move(found));
  std::sort(d.pairs.begin(), d.pairs.end(), critical_pair_less);
  return d;
}

std::vector<CriticalPair> detect_critical_pairs(const Rule& r0, const Rule& r1) {
  return detect(r0, r1).pairs;
}

}  // namespace ltsconf
