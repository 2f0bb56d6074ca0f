#include "qbafx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

namespace qbafx {

namespace {

// Hand-rolled draws so that seeds give the same graphs with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

Strength draw_strength(Rng& rng, bool integer) {
  return integer ? static_cast<double>(rng.below(6)) : rng.unit();
}

struct Mutable {
  StrengthDomain domain;
  std::map<ArgId, Strength> tau;
  EdgeSet attacks, supports;

  bool has_edge(const ArgId& u, const ArgId& v) const {
    return attacks.count({u, v}) || supports.count({u, v});
  }

  bool reaches(const ArgId& from, const ArgId& to) const {
    std::map<ArgId, std::vector<ArgId>> succ;
    for (const auto& [u, v] : attacks) succ[u].push_back(v);
    for (const auto& [u, v] : supports) succ[u].push_back(v);
    std::vector<ArgId> stack{from};
    ArgSet seen;
    while (!stack.empty()) {
      ArgId a = stack.back();
      stack.pop_back();
      if (a == to) return true;
      if (!seen.insert(a).second) continue;
      for (const auto& b : succ[a]) stack.push_back(b);
    }
    return false;
  }

  void add_edge(Rng& rng, const ArgId& u, const ArgId& v) {
    (rng.chance(0.5) ? attacks : supports).emplace(u, v);
  }

  std::vector<ArgId> ids() const {
    std::vector<ArgId> out;
    for (const auto& [a, w] : tau) out.push_back(a);
    return out;
  }
};

}  // namespace

Qbaf random_qbaf(const GenSpec& spec) {
  Rng rng(spec.seed);
  Mutable m;
  m.domain = spec.integer_strengths ? StrengthDomain::real_line() : StrengthDomain::unit_interval();
  std::vector<ArgId> rank;
  for (std::size_t i = 0; i < spec.n_args; ++i) rank.emplace_back("a" + std::to_string(i));
  for (const auto& a : rank) m.tau.emplace(a, draw_strength(rng, spec.integer_strengths));
  rng.shuffle(rank);
  const std::size_t n = rank.size();
  double p = n > 1 ? std::min(1.0, 2.0 * spec.avg_out_degree / static_cast<double>(n - 1)) : 0.0;
  // later ranks point at earlier ones only
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rng.chance(p)) m.add_edge(rng, rank[j], rank[i]);
  return build_qbaf(m.domain, m.tau, m.attacks, m.supports);
}

Qbaf random_update(const Qbaf& g, const UpdateSpec& spec) {
  Rng rng(spec.seed);
  Mutable m{g.domain(), g.tau(), g.attacks(), g.supports()};
  const bool integer = spec.integer_strengths || g.domain().kind != StrengthDomain::Kind::UnitInterval;
  const std::size_t ops =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(spec.change_fraction * g.size())));
  std::size_t fresh = 0;

  auto strength = [&]() {
    if (m.tau.empty()) return false;
    auto ids = m.ids();
    const ArgId& a = ids[rng.below(ids.size())];
    Strength old = m.tau[a], now = old;
    for (int tries = 0; tries < 16 && now == old; ++tries) now = draw_strength(rng, integer);
    m.tau[a] = now;
    return !(now == old);
  };
  auto edge_removal = [&]() {
    std::size_t total = m.attacks.size() + m.supports.size();
    if (total == 0) return false;
    std::size_t k = rng.below(total);
    EdgeSet& rel = k < m.attacks.size() ? m.attacks : m.supports;
    if (&rel == &m.supports) k -= m.attacks.size();
    rel.erase(std::next(rel.begin(), static_cast<long>(k)));
    return true;
  };
  auto edge_addition = [&]() {
    auto ids = m.ids();
    if (ids.size() < 2) return false;
    for (int tries = 0; tries < 64; ++tries) {
      const ArgId& u = ids[rng.below(ids.size())];
      const ArgId& v = ids[rng.below(ids.size())];
      if (u == v || m.has_edge(u, v) || m.has_edge(v, u) || m.reaches(v, u)) continue;
      m.add_edge(rng, u, v);
      return true;
    }
    return false;
  };
  auto arg_removal = [&]() {
    if (m.tau.size() <= 2) return false;
    auto ids = m.ids();
    ArgId a = ids[rng.below(ids.size())];
    m.tau.erase(a);
    for (auto* rel : {&m.attacks, &m.supports})
      for (auto it = rel->begin(); it != rel->end();)
        it = (it->first == a || it->second == a) ? rel->erase(it) : std::next(it);
    return true;
  };
  auto arg_addition = [&]() {
    ArgId a;
    do a = ArgId("n" + std::to_string(fresh++));
    while (m.tau.count(a) || g.contains(a));
    auto ids = m.ids();
    m.tau.emplace(a, draw_strength(rng, integer));
    if (ids.empty()) return true;
    const double k = static_cast<double>(ids.size());
    for (const auto& b : ids)
      if (rng.chance(std::min(1.0, spec.added_out_edges / k))) m.add_edge(rng, a, b);
    for (const auto& b : ids)
      if (rng.chance(std::min(1.0, spec.added_in_edges / k)) && !m.has_edge(a, b) && !m.reaches(a, b))
        m.add_edge(rng, b, a);
    return true;
  };

  double total = 0;
  for (double w : spec.mix) total += w;
  for (std::size_t op = 0; op < ops; ++op) {
    double r = rng.unit() * total;
    std::size_t kind = 0;
    while (kind + 1 < spec.mix.size() && (r -= spec.mix[kind]) >= 0) ++kind;
    // fall back to the other operation kinds when this one is impossible
    for (std::size_t step = 0; step < spec.mix.size(); ++step) {
      std::size_t k = (kind + step) % spec.mix.size();
      if (spec.mix[k] <= 0 && step > 0) continue;
      bool done = false;
      switch (static_cast<UpdateOp>(k)) {
        case UpdateOp::Strength: done = strength(); break;
        case UpdateOp::EdgeRemoval: done = edge_removal(); break;
        case UpdateOp::EdgeAddition: done = edge_addition(); break;
        case UpdateOp::ArgRemoval: done = arg_removal(); break;
        case UpdateOp::ArgAddition: done = arg_addition(); break;
      }
      if (done) break;
    }
  }
  return build_qbaf(m.domain, m.tau, m.attacks, m.supports);
}

std::optional<Scenario> random_scenario(const ScenarioSpec& spec, const SemanticsSpec& sem,
                                        QbafClass qbaf_class, ConsistencyMode mode) {
  Qbaf g = random_qbaf({spec.n_args, spec.degree, spec.seed, spec.integer_strengths});
  UpdateSpec up;
  up.change_fraction = spec.change_fraction;
  up.seed = spec.seed * 0x9E3779B97F4A7C15ULL + 1;
  up.integer_strengths = spec.integer_strengths;
  Qbaf g2 = random_update(g, up);
  std::vector<ArgId> common;
  for (const auto& a : g.args())
    if (g2.contains(a)) common.push_back(a);
  if (common.size() < 2) return std::nullopt;
  Rng rng(up.seed + 1);
  rng.shuffle(common);
  return Scenario(g, g2, common[0], common[1], sem, qbaf_class, mode);
}

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_of(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BenchRow summarise(std::size_t size, std::string kind, std::vector<double> times) {
  BenchRow row;
  row.size = size;
  row.kind = std::move(kind);
  row.samples = times.size();
  if (times.empty()) return row;
  double sum = 0;
  for (double t : times) sum += t;
  row.mean_s = sum / static_cast<double>(times.size());
  row.max_s = *std::max_element(times.begin(), times.end());
  std::sort(times.begin(), times.end());
  std::size_t mid = times.size() / 2;
  row.median_s = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
  return row;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& config) {
  BenchReport rep;
  const SemanticsSpec sem = SemanticsSpec::quadratic_energy();

  for (std::size_t n : config.eval_sizes) {
    std::vector<double> times;
    // warm-up, not recorded
    evaluate(random_qbaf({n, config.eval_degree, config.seed}), sem);
    for (std::size_t k = 0; k < config.eval_samples; ++k) {
      Qbaf g = random_qbaf({n, config.eval_degree, config.seed + 7919 * n + k});
      times.push_back(time_of([&] { evaluate(g, sem); }));
    }
    rep.rows.push_back(summarise(n, "eval", std::move(times)));
  }

  const ExplanationKind kinds[] = {ExplanationKind::SSI, ExplanationKind::CSI, ExplanationKind::NSI};
  for (std::size_t n : config.explain_sizes) {
    std::vector<double> times[3];
    for (std::uint64_t k = 0, made = 0; made < config.explain_samples && k < 100 * (config.explain_samples + 1); ++k) {
      auto sc = random_scenario({n, config.explain_degree, config.change_fraction,
                                 config.seed + 104729 * n + k, false},
                                sem, QbafClass::Acyclic);
      if (!sc || (config.inconsistent_only && strength_consistent(*sc))) continue;
      ++made;
      for (int i = 0; i < 3; ++i) {
        ExplanationSet r;
        times[i].push_back(time_of([&] { r = explain(*sc, kinds[i]); }));
        rep.candidates_checked += r.stats.candidates_checked;
        rep.cyclic_rejections += r.stats.cyclic_rejections;
      }
    }
    for (int i = 0; i < 3; ++i)
      rep.rows.push_back(summarise(n, std::string(kind_name(kinds[i])), std::move(times[i])));
  }
  return rep;
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << "size,kind,samples,mean_s,max_s\n";
  for (const auto& r : report.rows)
    out << r.size << ',' << r.kind << ',' << r.samples << ',' << r.mean_s << ',' << r.max_s << '\n';
}

void write_svg(const BenchReport& report, std::ostream& out) {
  const double w = 640, h = 400, pad = 50;
  double max_size = 1, max_t = 1e-9;
  std::map<std::string, std::vector<const BenchRow*>> series;
  for (const auto& r : report.rows) {
    series[r.kind].push_back(&r);
    max_size = std::max(max_size, static_cast<double>(r.size));
    max_t = std::max(max_t, r.mean_s);
  }
  const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\""
      << h - pad << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"" << h - 10 << "\">arguments</text>\n";
  out << "<text x=\"5\" y=\"" << pad - 10 << "\">mean seconds (max " << max_t << ")</text>\n";
  int c = 0;
  for (const auto& [kind, rows] : series) {
    out << "<polyline fill=\"none\" stroke=\"" << colours[c % 4] << "\" points=\"";
    for (const auto* r : rows) {
      double x = pad + (w - 2 * pad) * static_cast<double>(r->size) / max_size;
      double y = h - pad - (h - 2 * pad) * r->mean_s / max_t;
      out << x << ',' << y << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << w - pad + 5 << "\" y=\"" << pad + 15 * c << "\" fill=\"" << colours[c % 4]
        << "\">" << kind << "</text>\n";
    ++c;
  }
  out << "</svg>\n";
}

}  // namespace qbafx
