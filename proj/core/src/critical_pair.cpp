#include "ltsconf/critical_pair.hpp"

#include <string>
#include <tuple>

namespace ltsconf {

namespace {

bool extend(std::map<StateId, StateId>& phi, std::set<StateId>& used, StateId from, StateId to) {
  auto [it, inserted] = phi.emplace(from, to);
  if (!inserted) return it->second == to;
  return used.insert(to).second;
}

// Fresh constants stand for "some value" and may be renamed, consistently
// and injectively; every other constant must match exactly.
class ConstantRenaming {
 public:
  bool relate(const std::string& x, const std::string& y) {
    bool fx = !x.empty() && x.front() == kFreshMarker;
    bool fy = !y.empty() && y.front() == kFreshMarker;
    if (fx != fy) return false;
    if (!fx) return x == y;
    auto [it, inserted] = forward_.emplace(x, y);
    if (!inserted) return it->second == y;
    return backward_.emplace(y, x).second;
  }

  bool relate(const Label& x, const Label& y) {
    if (x.name() != y.name() || x.kind() != y.kind()) return false;
    if (x.kind() == Label::ParamKind::constant) return relate(x.constant(), y.constant());
    return x == y;
  }

  bool relate(const Bindings& x, const Bindings& y) {
    if (x.size() != y.size()) return false;
    for (auto i = x.begin(), j = y.begin(); i != x.end(); ++i, ++j) {
      if (i->first != j->first || !relate(i->second, j->second)) return false;
    }
    return true;
  }

 private:
  std::map<std::string, std::string> forward_;
  std::map<std::string, std::string> backward_;
};

}  // namespace

bool same_critical_pair(const CriticalPair& a, const CriticalPair& b) {
  if (a.rule0 != b.rule0 || a.rule1 != b.rule1) return false;
  if (a.situation.state_count() != b.situation.state_count() ||
      a.situation.transition_count() != b.situation.transition_count()) {
    return false;
  }
  ConstantRenaming rename;
  if (!rename.relate(a.match0.bindings, b.match0.bindings) ||
      !rename.relate(a.match1.bindings, b.match1.bindings)) {
    return false;
  }
  // The situation is covered by the two images, so the matches fix the
  // only candidate isomorphism.
  std::map<StateId, StateId> phi;
  std::set<StateId> used;
  auto follow = [&](const Match& ma, const Match& mb) {
    if (ma.morphism.states.size() != mb.morphism.states.size()) return false;
    for (const auto& [s, x] : ma.morphism.states) {
      auto y = mb.morphism.state(s);
      if (!y || !extend(phi, used, x, *y)) return false;
    }
    return true;
  };
  if (!follow(a.match0, b.match0) || !follow(a.match1, b.match1)) return false;
  if (phi.size() != a.situation.state_count()) return false;
  // Parallel transitions may differ only in fresh constants, so the
  // renaming is chosen by backtracking over candidate partners.
  const auto& ts = a.situation.transitions();
  auto pair_up = [&](auto& self, std::size_t i, const ConstantRenaming& current) -> bool {
    if (i == ts.size()) return true;
    const auto& t = ts[i];
    auto s = phi.find(t.source);
    auto d = phi.find(t.target);
    if (s == phi.end() || d == phi.end()) return false;
    for (auto k : b.situation.outgoing(s->second)) {
      const auto& u = b.situation.transitions()[k];
      if (u.target != d->second) continue;
      ConstantRenaming next = current;
      if (next.relate(t.label, u.label) && self(self, i + 1, next)) return true;
    }
    return false;
  };
  return pair_up(pair_up, 0, rename);
}

bool critical_pair_less(const CriticalPair& a, const CriticalPair& b) {
  auto key = [](const CriticalPair& p) {
    return std::make_tuple(p.rule0, p.rule1, p.situation.state_count(),
                           p.situation.transition_count(), p.situation.transitions(),
                           p.match0.morphism.states, p.match1.morphism.states,
                           p.match0.bindings, p.match1.bindings);
  };
  return key(a) < key(b);
}

bool same_pair_sets(const std::vector<CriticalPair>& a, const std::vector<CriticalPair>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> taken(b.size(), false);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!taken[j] && same_critical_pair(p, b[j])) {
        taken[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ltsconf
