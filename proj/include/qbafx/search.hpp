#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qbafx/change.hpp"

namespace qbafx {

enum class ExplanationKind { SSI, CSI, NSI };

std::string_view kind_name(ExplanationKind kind);

struct SearchStats {
  std::size_t candidates_checked = 0;
  std::size_t supersets_skipped = 0;
  std::size_t cyclic_rejections = 0;  // candidates refused because a needed reversal was cyclic
};

struct ExplanationSet {
  ExplanationKind kind = ExplanationKind::SSI;
  bool minimal_only = true;
  bool scenario_consistent = false;
  std::vector<ArgSet> sets;  // by cardinality, then lexicographic
  SearchStats stats;
};

// Where minimal NSI candidates are drawn from.
enum class NsiCandidates {
  Base,             // every changed argument that can reach a topic
  MinimalSsiUnion,  // only members of some minimal SSI
};

struct SearchOptions {
  unsigned threads = 1;
  std::size_t chunk = 4096;  // candidates materialised at a time
  NsiCandidates nsi_candidates = NsiCandidates::Base;
};

struct CandidateSpace {
  ArgSet base;

  // Subsets of base, smallest first, ties lexicographic.
  std::vector<ArgSet> ordering() const;
};

bool is_ssi(const Scenario& s, const ArgSet& S);
bool is_csi(const Scenario& s, const ArgSet& C);

CandidateSpace candidate_space(const Scenario& s);

ExplanationSet minimal_sx_cx(const Scenario& s, ExplanationKind kind,
                             const SearchOptions& opt = {});
ExplanationSet minimal_nx(const Scenario& s, const SearchOptions& opt = {});
ExplanationSet explain(const Scenario& s, ExplanationKind kind, const SearchOptions& opt = {});

inline constexpr std::size_t kOracleCap = 14;

// Brute force over every subset of the union of arguments, no pruning.
ExplanationSet oracle(const Scenario& s, ExplanationKind kind, bool minimal_only,
                      std::size_t cap = kOracleCap);

void sort_family(std::vector<ArgSet>& family);
std::vector<ArgSet> minimal_members(std::vector<ArgSet> family);

}  // namespace qbafx
