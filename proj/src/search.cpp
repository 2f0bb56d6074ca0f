#include "qbafx/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>

namespace qbafx {

std::string_view kind_name(ExplanationKind kind) {
  switch (kind) {
    case ExplanationKind::SSI: return "ssi";
    case ExplanationKind::CSI: return "csi";
    case ExplanationKind::NSI: return "nsi";
  }
  return "?";
}

void sort_family(std::vector<ArgSet>& family) {
  std::sort(family.begin(), family.end(), [](const ArgSet& a, const ArgSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<ArgSet> minimal_members(std::vector<ArgSet> family) {
  sort_family(family);
  std::vector<ArgSet> out;
  for (const auto& s : family) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const ArgSet& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

// Universe-wide view of a scenario; builds reversals straight from index masks.
class Engine {
 public:
  explicit Engine(const Scenario& s) : s_(s) {
    ArgSet all = s.before().args();
    all.insert(s.after().args().begin(), s.after().args().end());
    ids_.assign(all.begin(), all.end());
    const std::size_t n = ids_.size();
    in_g_.assign(n, 0);
    in_g2_.assign(n, 0);
    tau_g_.assign(n, Strength::undefined());
    tau_g2_.assign(n, Strength::undefined());
    out_g_.resize(n);
    out_g2_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (s.before().contains(ids_[i])) {
        in_g_[i] = 1;
        tau_g_[i] = s.before().initial(ids_[i]);
      }
      if (s.after().contains(ids_[i])) {
        in_g2_[i] = 1;
        tau_g2_[i] = s.after().initial(ids_[i]);
      }
    }
    auto fill = [&](const Qbaf& q, std::vector<std::vector<Parent>>& out) {
      for (const auto& [u, v] : q.attacks()) out[index(u)].push_back({index(v), -1});
      for (const auto& [u, v] : q.supports()) out[index(u)].push_back({index(v), +1});
    };
    fill(s.before(), out_g_);
    fill(s.after(), out_g2_);
    x_ = index(s.topic_x());
    y_ = index(s.topic_y());
    auto sg = final_strengths(s.before(), s.semantics());
    before_ = {sg.at(s.topic_x()), sg.at(s.topic_y())};
    Verdict v = reversal(std::vector<char>(n, 0));
    consistent_ = v.consistent;
  }

  std::size_t size() const { return ids_.size(); }
  const ArgId& id(std::size_t i) const { return ids_[i]; }
  bool scenario_consistent() const { return consistent_; }
  bool acyclic_class() const { return s_.qbaf_class() == QbafClass::Acyclic; }

  int index(const ArgId& a) const {
    return static_cast<int>(std::lower_bound(ids_.begin(), ids_.end(), a) - ids_.begin());
  }

  struct Verdict {
    bool consistent = false;
    bool acyclic = true;
  };

  // Reversal of the arguments flagged in `reverted`, compared against the before graph.
  Verdict reversal(const std::vector<char>& reverted) const {
    const std::size_t n = ids_.size();
    std::vector<int> slot(n, -1);
    WeightedDigraph d;
    for (std::size_t u = 0; u < n; ++u) {
      bool present = reverted[u] ? in_g_[u] : in_g2_[u];
      if (!present) continue;
      slot[u] = static_cast<int>(d.initial.size());
      d.initial.push_back(reverted[u] && in_g_[u] ? tau_g_[u] : tau_g2_[u]);
    }
    d.parents.resize(d.initial.size());
    std::vector<std::vector<int>> children(d.initial.size());
    std::vector<int> indeg(d.initial.size(), 0);
    auto link = [&](std::size_t u, const Parent& e) {
      d.parents[slot[e.node]].push_back({slot[u], e.sign});
      children[slot[u]].push_back(slot[e.node]);
      ++indeg[slot[e.node]];
    };
    for (std::size_t u = 0; u < n; ++u) {
      if (slot[u] < 0) continue;
      if (reverted[u]) {
        for (const auto& e : out_g_[u])
          if (slot[e.node] >= 0) link(u, e);
        for (const auto& e : out_g2_[u])
          if (!in_g_[e.node] && slot[e.node] >= 0) link(u, e);
      } else {
        for (const auto& e : out_g2_[u])
          if (slot[e.node] >= 0) link(u, e);
      }
    }
    // sources are visited in index order, so parent lists come out sorted

    Verdict v;
    std::vector<int> ready;
    for (std::size_t i = 0; i < indeg.size(); ++i)
      if (indeg[i] == 0) ready.push_back(static_cast<int>(i));
    std::size_t seen = 0;
    while (!ready.empty()) {
      int a = ready.back();
      ready.pop_back();
      ++seen;
      for (int c : children[a])
        if (--indeg[c] == 0) ready.push_back(c);
    }
    v.acyclic = seen == d.initial.size();

    auto st = final_strengths(d, s_.semantics());
    TopicPair after{st[slot[x_]], st[slot[y_]]};
    v.consistent = topics_consistent(before_, after, s_.mode(), s_.epsilon());
    return v;
  }

  enum class Outcome { Accept, Reject, RejectCyclic };

  // S flagged over the universe.
  Outcome ssi(const std::vector<char>& S) const {
    bool empty = std::none_of(S.begin(), S.end(), [](char c) { return c != 0; });
    if (consistent_) return empty ? Outcome::Accept : Outcome::Reject;
    std::vector<char> comp(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) comp[i] = !S[i];
    Verdict v = reversal(comp);
    if (v.consistent) return Outcome::Reject;
    if (acyclic_class() && !v.acyclic) return Outcome::RejectCyclic;
    return Outcome::Accept;
  }

  Outcome csi(const std::vector<char>& C) const {
    Outcome o = ssi(C);
    if (o != Outcome::Accept) return o;
    Verdict v = reversal(C);
    if (!v.consistent) return Outcome::Reject;
    if (acyclic_class() && !v.acyclic) return Outcome::RejectCyclic;
    return Outcome::Accept;
  }

  std::vector<char> flags(const ArgSet& S) const {
    std::vector<char> f(ids_.size(), 0);
    for (const auto& a : S) {
      if (!std::binary_search(ids_.begin(), ids_.end(), a))
        throw Error(ErrorCode::UnknownArgument, a.name() + " is in neither graph");
      f[index(a)] = 1;
    }
    return f;
  }

  // Changed arguments that can still influence a topic.
  std::vector<int> base() const {
    const std::size_t n = ids_.size();
    std::vector<char> relevant(n, 0);
    if (s_.semantics().directional()) {
      // reverse reachability to the topics over the union of both graphs' edges
      std::vector<std::vector<int>> preds(n);
      for (std::size_t u = 0; u < n; ++u) {
        for (const auto& e : out_g_[u]) preds[e.node].push_back(static_cast<int>(u));
        for (const auto& e : out_g2_[u]) preds[e.node].push_back(static_cast<int>(u));
      }
      std::vector<int> stack{x_, y_};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (relevant[v]) continue;
        relevant[v] = 1;
        for (int p : preds[v]) stack.push_back(p);
      }
    } else {
      relevant.assign(n, 1);
    }
    QbafDiff d = diff(s_.before(), s_.after());
    std::vector<int> out;
    for (std::size_t i = 0; i < n; ++i)
      if (relevant[i] && !d.unchanged.count(ids_[i])) out.push_back(static_cast<int>(i));
    return out;
  }

 private:
  const Scenario& s_;
  std::vector<ArgId> ids_;
  std::vector<char> in_g_, in_g2_;
  std::vector<Strength> tau_g_, tau_g2_;
  std::vector<std::vector<Parent>> out_g_, out_g2_;
  int x_ = 0, y_ = 0;
  TopicPair before_;
  bool consistent_ = false;
};

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
  bool contains(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if ((o.w_[k] & ~w_[k]) != 0) return false;
    return true;
  }
  bool meets(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if ((o.w_[k] & w_[k]) != 0) return true;
    return false;
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Lexicographic k-combinations of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned t = std::min<std::size_t>(threads, count);
  for (unsigned k = 0; k < t; ++k)
    pool.emplace_back([&]() {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

using Test = Engine::Outcome (Engine::*)(const std::vector<char>&) const;

// Smallest-first subset search over `pool` (universe indices). A candidate is
// checked only if it contains no accepted set and meets every set in `hit`.
std::vector<ArgSet> lattice_search(const Engine& eng, const std::vector<int>& pool, Test test,
                                   const std::vector<Bits>& hit, const SearchOptions& opt,
                                   SearchStats& stats) {
  const std::size_t m = pool.size();
  std::vector<Bits> found_bits;
  std::vector<ArgSet> found;
  std::vector<std::vector<std::size_t>> chunk;
  const std::size_t chunk_cap = std::max<std::size_t>(1, opt.chunk);

  auto to_bits = [&](const std::vector<std::size_t>& c) {
    Bits b(m);
    for (auto i : c) b.set(i);
    return b;
  };

  std::vector<ArgSet> level_found;
  std::vector<Bits> level_bits;
  auto flush = [&]() {
    std::vector<Engine::Outcome> res(chunk.size());
    parallel_for(chunk.size(), opt.threads, [&](std::size_t i) {
      std::vector<char> flags(eng.size(), 0);
      for (auto j : chunk[i]) flags[pool[j]] = 1;
      res[i] = (eng.*test)(flags);
    });
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      ++stats.candidates_checked;
      if (res[i] == Engine::Outcome::RejectCyclic) ++stats.cyclic_rejections;
      if (res[i] != Engine::Outcome::Accept) continue;
      ArgSet s;
      for (auto j : chunk[i]) s.insert(eng.id(pool[j]));
      level_found.push_back(std::move(s));
      level_bits.push_back(to_bits(chunk[i]));
    }
    chunk.clear();
  };

  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    bool all_skipped = true;
    do {
      Bits b = to_bits(c);
      bool superset = std::any_of(found_bits.begin(), found_bits.end(),
                                  [&](const Bits& f) { return b.contains(f); });
      if (superset) {
        ++stats.supersets_skipped;
        continue;
      }
      all_skipped = false;
      bool hits = std::all_of(hit.begin(), hit.end(), [&](const Bits& h) { return b.meets(h); });
      if (!hits) continue;
      chunk.push_back(c);
      if (chunk.size() >= chunk_cap) flush();
    } while (next_combination(c, m));
    flush();
    for (std::size_t i = 0; i < level_found.size(); ++i) {
      found.push_back(std::move(level_found[i]));
      found_bits.push_back(std::move(level_bits[i]));
    }
    level_found.clear();
    level_bits.clear();
    // every subset at this size already contains an explanation, so every larger one does too
    if (all_skipped && !found.empty()) break;
  }
  return found;
}

ExplanationSet consistent_result(ExplanationKind kind) {
  ExplanationSet r;
  r.kind = kind;
  r.scenario_consistent = true;
  r.sets = {ArgSet{}};
  return r;
}

std::vector<Bits> as_bits(const std::vector<ArgSet>& family, const Engine& eng,
                          const std::vector<int>& pool) {
  std::vector<Bits> out;
  for (const auto& s : family) {
    Bits b(pool.size());
    for (const auto& a : s) {
      auto it = std::find(pool.begin(), pool.end(), eng.index(a));
      if (it != pool.end()) b.set(static_cast<std::size_t>(it - pool.begin()));
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<ArgSet> CandidateSpace::ordering() const {
  if (base.size() > 20) throw Error(ErrorCode::TooLarge, "candidate base too large to list");
  std::vector<ArgId> b(base.begin(), base.end());
  std::vector<ArgSet> out;
  for (std::size_t k = 0; k <= b.size(); ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
      ArgSet s;
      for (auto i : c) s.insert(b[i]);
      out.push_back(std::move(s));
    } while (next_combination(c, b.size()));
  }
  return out;
}

bool is_ssi(const Scenario& s, const ArgSet& S) {
  Engine eng(s);
  return eng.ssi(eng.flags(S)) == Engine::Outcome::Accept;
}

bool is_csi(const Scenario& s, const ArgSet& C) {
  Engine eng(s);
  return eng.csi(eng.flags(C)) == Engine::Outcome::Accept;
}

CandidateSpace candidate_space(const Scenario& s) {
  Engine eng(s);
  CandidateSpace cs;
  for (int i : eng.base()) cs.base.insert(eng.id(i));
  return cs;
}

ExplanationSet minimal_sx_cx(const Scenario& s, ExplanationKind kind, const SearchOptions& opt) {
  if (kind == ExplanationKind::NSI) return minimal_nx(s, opt);
  Engine eng(s);
  if (eng.scenario_consistent()) return consistent_result(kind);
  ExplanationSet r;
  r.kind = kind;
  Test test = kind == ExplanationKind::SSI ? &Engine::ssi : &Engine::csi;
  r.sets = lattice_search(eng, eng.base(), test, {}, opt, r.stats);
  sort_family(r.sets);
  return r;
}

ExplanationSet minimal_nx(const Scenario& s, const SearchOptions& opt) {
  Engine eng(s);
  if (eng.scenario_consistent()) return consistent_result(ExplanationKind::NSI);
  ExplanationSet r;
  r.kind = ExplanationKind::NSI;
  std::vector<int> base = eng.base();
  std::vector<ArgSet> mssis = lattice_search(eng, base, &Engine::ssi, {}, opt, r.stats);

  std::vector<int> pool;
  if (opt.nsi_candidates == NsiCandidates::MinimalSsiUnion) {
    ArgSet u;
    for (const auto& m : mssis) u.insert(m.begin(), m.end());
    for (const auto& a : u) pool.push_back(eng.index(a));
  } else {
    pool = base;
  }
  // disjoint from some minimal SSI means an SSI fits in the complement
  std::vector<Bits> hit = as_bits(mssis, eng, pool);
  r.sets = lattice_search(eng, pool, &Engine::ssi, hit, opt, r.stats);
  sort_family(r.sets);
  return r;
}

ExplanationSet explain(const Scenario& s, ExplanationKind kind, const SearchOptions& opt) {
  return kind == ExplanationKind::NSI ? minimal_nx(s, opt) : minimal_sx_cx(s, kind, opt);
}

}  // namespace qbafx
