#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbafx/search.hpp"

namespace qbafx {

struct GenSpec {
  std::size_t n_args = 10;
  double avg_out_degree = 3.0;
  std::uint64_t seed = 0;
  bool integer_strengths = false;  // draw tau from {0,...,5} instead of [0,1]
};

enum class UpdateOp { Strength, EdgeRemoval, EdgeAddition, ArgRemoval, ArgAddition };

struct UpdateSpec {
  double change_fraction = 0.2;
  std::uint64_t seed = 0;
  std::array<double, 5> mix{0.2, 0.2, 0.2, 0.2, 0.2};  // indexed by UpdateOp
  double added_out_edges = 2.0;
  double added_in_edges = 1.0;
  bool integer_strengths = false;
};

Qbaf random_qbaf(const GenSpec& spec);
Qbaf random_update(const Qbaf& g, const UpdateSpec& spec);

struct ScenarioSpec {
  std::size_t n_args = 8;
  double degree = 1.1;
  double change_fraction = 0.2;
  std::uint64_t seed = 0;
  bool integer_strengths = false;
};

// Random update of a random graph, topics drawn from the common arguments.
// Empty when fewer than two arguments survive the update.
std::optional<Scenario> random_scenario(const ScenarioSpec& spec, const SemanticsSpec& sem,
                                        QbafClass qbaf_class = QbafClass::Acyclic,
                                        ConsistencyMode mode = ConsistencyMode::Strict);

struct BenchConfig {
  std::vector<std::size_t> eval_sizes;
  std::vector<std::size_t> explain_sizes;
  std::size_t eval_samples = 50;
  std::size_t explain_samples = 10;
  double eval_degree = 3.0;
  double explain_degree = 1.1;
  double change_fraction = 0.2;
  std::uint64_t seed = 1;
  bool inconsistent_only = false;  // redraw explanation scenarios until the topics disagree
};

struct BenchRow {
  std::size_t size = 0;
  std::string kind;  // eval, ssi, csi, nsi
  std::size_t samples = 0;
  double mean_s = 0;
  double median_s = 0;
  double max_s = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t candidates_checked = 0;
  std::size_t cyclic_rejections = 0;

  double cyclic_fraction() const {
    return candidates_checked == 0 ? 0.0
                                   : static_cast<double>(cyclic_rejections) /
                                         static_cast<double>(candidates_checked);
  }
};

BenchReport run_benchmark(const BenchConfig& config);
void write_csv(const BenchReport& report, std::ostream& out);
void write_svg(const BenchReport& report, std::ostream& out);

}  // namespace qbafx
