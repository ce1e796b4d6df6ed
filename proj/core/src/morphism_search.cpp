#include "morphism_search.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace ltsconf::detail {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Step {
  StateId state = 0;
  // Transition linking this state to an earlier one, kNone for roots.
  std::size_t link = kNone;
  bool link_outgoing = false;  // true: earlier -> state
  std::vector<std::size_t> closing;
};

class Search {
 public:
  Search(const Lts& pattern, const Lts& host, SearchMode mode, LabelMatch labels,
         const MorphismVisitor& visit)
      : pattern_(pattern), host_(host), mode_(mode), labels_(labels), visit_(visit) {}

  void run() {
    if (mode_ == SearchMode::bijection &&
        (pattern_.state_count() != host_.state_count() ||
         pattern_.transition_count() != host_.transition_count())) {
      return;
    }
    if (pattern_.state_count() > host_.state_count()) return;
    plan();
    place(0);
  }

 private:
  void plan() {
    std::map<std::string, std::size_t> host_names;
    for (const auto& t : host_.transitions()) ++host_names[t.label.name()];

    std::vector<StateId> roots;
    if (!pattern_.transitions().empty()) {
      std::size_t best = 0;
      std::size_t best_count = kNone;
      for (std::size_t i = 0; i < pattern_.transitions().size(); ++i) {
        auto it = host_names.find(pattern_.transitions()[i].label.name());
        std::size_t count = it == host_names.end() ? 0 : it->second;
        if (count < best_count) {
          best_count = count;
          best = i;
        }
      }
      roots.push_back(pattern_.transitions()[best].source);
    }
    roots.insert(roots.end(), pattern_.states().begin(), pattern_.states().end());

    std::map<StateId, std::size_t> position;
    for (StateId root : roots) {
      if (position.contains(root)) continue;
      std::size_t head = steps_.size();
      position[root] = steps_.size();
      steps_.push_back({root, kNone, false, {}});
      while (head < steps_.size()) {
        StateId u = steps_[head++].state;
        auto expand = [&](std::uint32_t ti, bool outgoing) {
          const auto& t = pattern_.transitions()[ti];
          StateId v = outgoing ? t.target : t.source;
          if (position.contains(v)) return;
          position[v] = steps_.size();
          steps_.push_back({v, ti, outgoing, {}});
        };
        for (auto ti : pattern_.outgoing(u)) expand(ti, true);
        for (auto ti : pattern_.incoming(u)) expand(ti, false);
      }
    }
    for (std::size_t i = 0; i < pattern_.transitions().size(); ++i) {
      const auto& t = pattern_.transitions()[i];
      steps_[std::max(position[t.source], position[t.target])].closing.push_back(i);
    }
  }

  bool degree_ok(StateId p, StateId h) const {
    auto po = pattern_.outgoing(p).size();
    auto pi = pattern_.incoming(p).size();
    auto ho = host_.outgoing(h).size();
    auto hi = host_.incoming(h).size();
    if (mode_ == SearchMode::bijection) return po == ho && pi == hi;
    return po <= ho && pi <= hi;
  }

  std::vector<StateId> candidates(const Step& step) const {
    if (step.link == kNone) return host_.states();
    const auto& t = pattern_.transitions()[step.link];
    StateId anchor = states_.at(step.link_outgoing ? t.source : t.target);
    std::set<StateId> out;
    auto edges = step.link_outgoing ? host_.outgoing(anchor) : host_.incoming(anchor);
    for (auto hi : edges) {
      const auto& h = host_.transitions()[hi];
      if (h.label.name() != t.label.name()) continue;
      out.insert(step.link_outgoing ? h.target : h.source);
    }
    return {out.begin(), out.end()};
  }

  // Returns false when the visitor asked to stop.
  bool place(std::size_t i) {
    if (i == steps_.size()) return visit_(morphism(), bindings_);
    const Step& step = steps_[i];
    for (StateId h : candidates(step)) {
      if (used_states_.contains(h) || !degree_ok(step.state, h)) continue;
      states_[step.state] = h;
      used_states_.insert(h);
      bool go_on = close(i, 0);
      used_states_.erase(h);
      states_.erase(step.state);
      if (!go_on) return false;
    }
    return true;
  }

  bool close(std::size_t i, std::size_t k) {
    const Step& step = steps_[i];
    if (k == step.closing.size()) return place(i + 1);
    const auto& t = pattern_.transitions()[step.closing[k]];
    StateId hs = states_.at(t.source);
    StateId ht = states_.at(t.target);
    for (auto hi : host_.outgoing(hs)) {
      const auto& h = host_.transitions()[hi];
      if (h.target != ht || used_transitions_.contains(hi)) continue;
      Bindings saved = bindings_;
      bool ok = labels_ == LabelMatch::exact ? t.label == h.label
                                             : unify_into(t.label, h.label, bindings_);
      if (ok) {
        transitions_[step.closing[k]] = hi;
        used_transitions_.insert(hi);
        bool go_on = close(i, k + 1);
        used_transitions_.erase(hi);
        transitions_.erase(step.closing[k]);
        if (!go_on) return false;
      }
      bindings_ = std::move(saved);
    }
    return true;
  }

  PartialMorphism morphism() const {
    PartialMorphism m;
    m.states = states_;
    for (const auto& [pi, hi] : transitions_) {
      m.transitions.emplace(pattern_.transitions()[pi], host_.transitions()[hi]);
    }
    return m;
  }

  const Lts& pattern_;
  const Lts& host_;
  SearchMode mode_;
  LabelMatch labels_;
  const MorphismVisitor& visit_;

  std::vector<Step> steps_;
  std::map<StateId, StateId> states_;
  std::set<StateId> used_states_;
  std::map<std::size_t, std::uint32_t> transitions_;
  std::set<std::uint32_t> used_transitions_;
  Bindings bindings_;
};

}  // namespace

void search_morphisms(const Lts& pattern, const Lts& host, SearchMode mode, LabelMatch labels,
                      const MorphismVisitor& visit) {
  Search(pattern, host, mode, labels, visit).run();
}

}  // namespace ltsconf::detail
