#ifndef LCRF_EVAL_HPP
#define LCRF_EVAL_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lcrf/conll.hpp"
#include "lcrf/crf.hpp"
#include "lcrf/lifelong.hpp"

namespace lcrf {

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long tp = 0;
  long fp = 0;
  long fn = 0;

  // Empty-denominator convention: P (resp. R) is 1 when tp+fp (resp.
  // tp+fn) is zero; F1 is 0 when P+R is zero.
  static EvalReport from_counts(long tp, long fp, long fn);
};

// Occurrence-level exact span match: a predicted (sentence, start, end,
// type) counts as a true positive iff an identical gold span exists;
// each gold span matches at most once.
EvalReport evaluate(const std::vector<std::vector<std::string>>& gold,
                    const std::vector<std::vector<std::string>>& pred);

// The dictionary baseline: every maximal token subsequence equal
// (case-insensitive) to a reliable phrase and not overlapping an
// existing predicted span is added as an ASP span.
std::vector<std::vector<std::string>> crf_plus_r(
    const std::vector<std::vector<std::string>>& pred,
    const std::set<std::string>& reliable,
    std::span<const ParsedSentence> test);

enum class Protocol { CrossDomain, InDomain };

struct ExperimentConfig {
  TrainConfig train;
  int lambda = 2;
  int lifelong_max_iters = 10;
  int split = 200;          // per-domain train/test sentence counts
  std::uint64_t seed = 42;  // drives the split shuffle
};

struct FoldReport {
  std::string name;
  EvalReport crf;
  EvalReport crf_r;
  EvalReport lcrf;
};

struct SystemAverage {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ExperimentReport {
  Protocol protocol = Protocol::CrossDomain;
  std::uint64_t seed = 0;
  int lambda = 2;
  std::vector<FoldReport> folds;
  SystemAverage avg_crf;
  SystemAverage avg_crf_r;
  SystemAverage avg_lcrf;
};

// One fold per domain. Cross-domain: train on all other domains, test on
// the held-out one. In-domain: train and test on the same non-held-out
// domains. Each fold trains a CRF (knowledge = the fold's training
// aspects) and scores CRF, CRF+R, and L-CRF on the fold's test set.
ExperimentReport run_experiment(std::span<const Corpus> domains,
                                const AspectStore& store, Protocol protocol,
                                const ExperimentConfig& config);

// Aligned human-readable table.
std::string render_text(const ExperimentReport& report);
// Machine-readable lines: fold,system,precision,recall,f1
std::string render_delimited(const ExperimentReport& report);

}  // namespace lcrf

#endif  // LCRF_EVAL_HPP
