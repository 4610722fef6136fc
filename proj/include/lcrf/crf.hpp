#ifndef LCRF_CRF_HPP
#define LCRF_CRF_HPP

#include <span>
#include <vector>

#include "lcrf/feature_index.hpp"
#include "lcrf/feature_vector.hpp"
#include "lcrf/labels.hpp"

namespace lcrf {

struct TrainConfig {
  double l2 = 1.0;        // L2 coefficient; objective adds (l2/2) * ||theta||^2
  double tol = 1e-4;      // convergence: gradient infinity-norm
  int max_iters = 300;

  bool operator==(const TrainConfig&) const = default;
};

// A trained linear-chain CRF. Immutable after training; safe to share
// across threads for decoding.
struct CrfModel {
  LabelSet labels;
  FeatureIndex index;
  std::vector<double> weights;  // length index.size()
  TrainConfig config;
};

struct TrainStats {
  int iterations = 0;
  double nll = 0.0;
  double grad_inf_norm = 0.0;
  bool converged = false;
};

// Unnormalized log score of one label sequence. Position 0 contributes
// observation features only; there is no begin-of-sequence label.
double score_sequence(const CrfModel& model, const FeaturizedSentence& sent,
                      std::span<const int> y);

// log sum over all label sequences of exp(score_sequence), via the
// forward recursion in log space.
double log_partition(const CrfModel& model, const FeaturizedSentence& sent);

struct Marginals {
  int length = 0;
  int num_labels = 0;
  double log_z = 0.0;
  std::vector<double> node;  // length * Y, row-major
  std::vector<double> edge;  // (length-1) * Y * Y; block l-1 holds position l

  double node_at(int l, int i) const {
    return node[static_cast<std::size_t>(l * num_labels + i)];
  }
  // P(y_l = cur, y_{l-1} = prev | x); l >= 1.
  double edge_at(int l, int cur, int prev) const {
    return edge[static_cast<std::size_t>(((l - 1) * num_labels + cur) * num_labels + prev)];
  }
};

Marginals marginals(const CrfModel& model, const FeaturizedSentence& sent);

// Highest-scoring label sequence; ties break toward the lower label
// index at every backtrack step.
std::vector<int> viterbi_decode(const CrfModel& model, const FeaturizedSentence& sent);

// Negative log-likelihood of the batch plus (l2/2)*||theta||^2, and its
// exact gradient (expected minus empirical feature counts, plus l2*theta).
// Every sentence must carry gold labels. grad must have model.index.size()
// elements; it is overwritten.
double nll_and_gradient(const CrfModel& model,
                        std::span<const FeaturizedSentence> batch, double l2,
                        std::span<double> grad);

// Maximum-likelihood training: L-BFGS with backtracking line search,
// theta initialized to zero. Deterministic for a fixed corpus order.
CrfModel train(std::span<const FeaturizedSentence> corpus, const LabelSet& labels,
               const TrainConfig& config, TrainStats* stats = nullptr);

// Same optimizer with an explicit starting point; exposed so callers can
// check that the strictly convex objective reaches the same optimum from
// different initializations.
std::vector<double> minimize_nll(const FeatureIndex& index,
                                 std::span<const FeaturizedSentence> corpus,
                                 const TrainConfig& config,
                                 std::vector<double> theta0,
                                 TrainStats* stats = nullptr);

}  // namespace lcrf

#endif  // LCRF_CRF_HPP
