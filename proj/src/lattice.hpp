#ifndef LCRF_SRC_LATTICE_HPP
#define LCRF_SRC_LATTICE_HPP

#include <cmath>
#include <span>
#include <vector>

#include "lcrf/feature_index.hpp"
#include "lcrf/feature_vector.hpp"

namespace lcrf::detail {

// Per-sentence score tables resolved against one weight vector. Unseen
// feature values simply do not resolve, so they contribute nothing.
struct Lattice {
  int length = 0;
  int num_labels = 0;
  std::vector<double> node;             // length * Y: observation score per (l, label)
  std::vector<double> trans;            // Y * Y: trans[cur * Y + prev]
  std::vector<std::vector<int>> pairs;  // resolved pair ids per position

  double node_at(int l, int i) const { return node[static_cast<std::size_t>(l * num_labels + i)]; }
  double trans_at(int cur, int prev) const { return trans[static_cast<std::size_t>(cur * num_labels + prev)]; }
};

Lattice build_lattice(const FeatureIndex& index, std::span<const double> weights,
                      const FeaturizedSentence& sent);

// Forward (alpha) and backward (beta) log-space tables, both length * Y.
struct ForwardBackward {
  std::vector<double> alpha;
  std::vector<double> beta;
  double log_z = 0.0;
};

ForwardBackward forward_backward(const Lattice& lat);

inline double log_sum_exp(std::span<const double> xs) {
  double m = xs[0];
  for (double x : xs) m = std::max(m, x);
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - m);
  return m + std::log(sum);
}

}  // namespace lcrf::detail

#endif  // LCRF_SRC_LATTICE_HPP
