// Brute-force reference implementations the fast inference code is
// checked against. These deliberately re-derive everything by direct
// enumeration over all |Y|^L label sequences instead of sharing the
// forward/backward/Viterbi recursions.

#ifndef LCRF_TESTS_ORACLES_HPP
#define LCRF_TESTS_ORACLES_HPP

#include <cmath>
#include <span>
#include <vector>

#include "lcrf/crf.hpp"

namespace oracle {

// Plain triple sum over positions and active features.
inline double sequence_score(const lcrf::CrfModel& model,
                             const lcrf::FeaturizedSentence& sent,
                             std::span<const int> y) {
  double score = 0.0;
  for (int l = 0; l < sent.length(); ++l) {
    if (l > 0) {
      score += model.weights[static_cast<std::size_t>(
          model.index.ll_slot(y[static_cast<std::size_t>(l)], y[static_cast<std::size_t>(l - 1)]))];
    }
    for (const auto& feature : sent.tokens[static_cast<std::size_t>(l)].active()) {
      if (auto slot = model.index.lw_slot(y[static_cast<std::size_t>(l)], feature.tpl, feature.value)) {
        score += model.weights[static_cast<std::size_t>(*slot)];
      }
    }
  }
  return score;
}

template <typename Fn>
void for_each_sequence(int length, int num_labels, Fn&& fn) {
  std::vector<int> y(static_cast<std::size_t>(length), 0);
  while (true) {
    fn(std::span<const int>(y));
    int l = 0;
    while (l < length) {
      if (++y[static_cast<std::size_t>(l)] < num_labels) break;
      y[static_cast<std::size_t>(l)] = 0;
      ++l;
    }
    if (l == length) return;
  }
}

inline double log_partition(const lcrf::CrfModel& model,
                            const lcrf::FeaturizedSentence& sent) {
  std::vector<double> scores;
  for_each_sequence(sent.length(), model.labels.size(), [&](std::span<const int> y) {
    scores.push_back(sequence_score(model, sent, y));
  });
  double m = scores[0];
  for (double s : scores) m = std::max(m, s);
  double sum = 0.0;
  for (double s : scores) sum += std::exp(s - m);
  return m + std::log(sum);
}

struct BestSequence {
  double score = 0.0;
  std::vector<int> labels;
};

inline BestSequence viterbi(const lcrf::CrfModel& model,
                            const lcrf::FeaturizedSentence& sent) {
  BestSequence best;
  bool first = true;
  for_each_sequence(sent.length(), model.labels.size(), [&](std::span<const int> y) {
    double score = sequence_score(model, sent, y);
    if (first || score > best.score) {
      best.score = score;
      best.labels.assign(y.begin(), y.end());
      first = false;
    }
  });
  return best;
}

struct Posteriors {
  std::vector<double> node;  // L * Y
  std::vector<double> edge;  // (L-1) * Y * Y, edge((l-1), cur, prev)
};

inline Posteriors posteriors(const lcrf::CrfModel& model,
                             const lcrf::FeaturizedSentence& sent) {
  const int L = sent.length();
  const int Y = model.labels.size();
  const double log_z = oracle::log_partition(model, sent);

  Posteriors post;
  post.node.assign(static_cast<std::size_t>(L) * Y, 0.0);
  post.edge.assign(static_cast<std::size_t>(L > 1 ? (L - 1) * Y * Y : 0), 0.0);
  for_each_sequence(L, Y, [&](std::span<const int> y) {
    double p = std::exp(sequence_score(model, sent, y) - log_z);
    for (int l = 0; l < L; ++l) {
      post.node[static_cast<std::size_t>(l * Y + y[static_cast<std::size_t>(l)])] += p;
      if (l > 0) {
        post.edge[static_cast<std::size_t>(
            ((l - 1) * Y + y[static_cast<std::size_t>(l)]) * Y +
            y[static_cast<std::size_t>(l - 1)])] += p;
      }
    }
  });
  return post;
}

// Central finite differences of the regularized NLL.
inline std::vector<double> numeric_gradient(const lcrf::CrfModel& model,
                                            std::span<const lcrf::FeaturizedSentence> batch,
                                            double l2, double eps = 1e-5) {
  std::vector<double> grad(model.weights.size());
  std::vector<double> scratch(model.weights.size());
  lcrf::CrfModel probe = model;
  for (std::size_t h = 0; h < model.weights.size(); ++h) {
    probe.weights[h] = model.weights[h] + eps;
    double plus = lcrf::nll_and_gradient(probe, batch, l2, scratch);
    probe.weights[h] = model.weights[h] - eps;
    double minus = lcrf::nll_and_gradient(probe, batch, l2, scratch);
    probe.weights[h] = model.weights[h];
    grad[h] = (plus - minus) / (2.0 * eps);
  }
  return grad;
}

inline double relative_error(double a, double b) {
  double denom = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / denom;
}

}  // namespace oracle

#endif  // LCRF_TESTS_ORACLES_HPP
