#include <algorithm>
#include <cmath>

#include "lcrf/crf.hpp"
#include "lcrf/errors.hpp"
#include "lattice.hpp"

namespace lcrf {

namespace detail {

Lattice build_lattice(const FeatureIndex& index, std::span<const double> weights,
                      const FeaturizedSentence& sent) {
  const int L = sent.length();
  const int Y = index.num_labels();
  Lattice lat;
  lat.length = L;
  lat.num_labels = Y;
  lat.node.assign(static_cast<std::size_t>(L) * Y, 0.0);
  lat.trans.resize(static_cast<std::size_t>(Y) * Y);
  lat.pairs.resize(static_cast<std::size_t>(L));

  for (int i = 0; i < Y; ++i) {
    for (int j = 0; j < Y; ++j) {
      lat.trans[static_cast<std::size_t>(i * Y + j)] = weights[static_cast<std::size_t>(index.ll_slot(i, j))];
    }
  }
  for (int l = 0; l < L; ++l) {
    auto& resolved = lat.pairs[static_cast<std::size_t>(l)];
    for (const auto& feature : sent.tokens[static_cast<std::size_t>(l)].active()) {
      if (auto p = index.pair_id(feature.tpl, feature.value)) {
        resolved.push_back(*p);
      }
    }
    for (int i = 0; i < Y; ++i) {
      double score = 0.0;
      for (int p : resolved) {
        score += weights[static_cast<std::size_t>(index.lw_slot_for_pair(i, p))];
      }
      lat.node[static_cast<std::size_t>(l * Y + i)] = score;
    }
  }
  return lat;
}

ForwardBackward forward_backward(const Lattice& lat) {
  const int L = lat.length;
  const int Y = lat.num_labels;
  ForwardBackward fb;
  fb.alpha.assign(static_cast<std::size_t>(L) * Y, 0.0);
  fb.beta.assign(static_cast<std::size_t>(L) * Y, 0.0);

  std::vector<double> acc(static_cast<std::size_t>(Y));
  for (int i = 0; i < Y; ++i) {
    fb.alpha[static_cast<std::size_t>(i)] = lat.node_at(0, i);
  }
  for (int l = 1; l < L; ++l) {
    for (int i = 0; i < Y; ++i) {
      for (int j = 0; j < Y; ++j) {
        acc[static_cast<std::size_t>(j)] =
            fb.alpha[static_cast<std::size_t>((l - 1) * Y + j)] + lat.trans_at(i, j);
      }
      fb.alpha[static_cast<std::size_t>(l * Y + i)] = lat.node_at(l, i) + log_sum_exp(acc);
    }
  }
  // beta[L-1][*] = 0
  for (int l = L - 2; l >= 0; --l) {
    for (int j = 0; j < Y; ++j) {
      for (int i = 0; i < Y; ++i) {
        acc[static_cast<std::size_t>(i)] = lat.trans_at(i, j) + lat.node_at(l + 1, i) +
                                           fb.beta[static_cast<std::size_t>((l + 1) * Y + i)];
      }
      fb.beta[static_cast<std::size_t>(l * Y + j)] = log_sum_exp(acc);
    }
  }
  for (int i = 0; i < Y; ++i) {
    acc[static_cast<std::size_t>(i)] = fb.alpha[static_cast<std::size_t>((L - 1) * Y + i)];
  }
  fb.log_z = log_sum_exp(acc);
  return fb;
}

}  // namespace detail

namespace {

void check_non_empty(const FeaturizedSentence& sent) {
  if (sent.length() < 1) {
    throw ContractViolation("sentence must have at least one token");
  }
}

}  // namespace

double score_sequence(const CrfModel& model, const FeaturizedSentence& sent,
                      std::span<const int> y) {
  check_non_empty(sent);
  if (static_cast<int>(y.size()) != sent.length()) {
    throw ContractViolation("label sequence length does not match sentence length");
  }
  const auto lat = detail::build_lattice(model.index, model.weights, sent);
  double score = lat.node_at(0, y[0]);
  for (int l = 1; l < lat.length; ++l) {
    score += lat.trans_at(y[static_cast<std::size_t>(l)], y[static_cast<std::size_t>(l - 1)]);
    score += lat.node_at(l, y[static_cast<std::size_t>(l)]);
  }
  return score;
}

double log_partition(const CrfModel& model, const FeaturizedSentence& sent) {
  check_non_empty(sent);
  const auto lat = detail::build_lattice(model.index, model.weights, sent);
  return detail::forward_backward(lat).log_z;
}

Marginals marginals(const CrfModel& model, const FeaturizedSentence& sent) {
  check_non_empty(sent);
  const auto lat = detail::build_lattice(model.index, model.weights, sent);
  const auto fb = detail::forward_backward(lat);
  const int L = lat.length;
  const int Y = lat.num_labels;

  Marginals m;
  m.length = L;
  m.num_labels = Y;
  m.log_z = fb.log_z;
  m.node.resize(static_cast<std::size_t>(L) * Y);
  m.edge.assign(static_cast<std::size_t>(std::max(0, L - 1)) * Y * Y, 0.0);

  for (int l = 0; l < L; ++l) {
    for (int i = 0; i < Y; ++i) {
      m.node[static_cast<std::size_t>(l * Y + i)] =
          std::exp(fb.alpha[static_cast<std::size_t>(l * Y + i)] +
                   fb.beta[static_cast<std::size_t>(l * Y + i)] - fb.log_z);
    }
  }
  for (int l = 1; l < L; ++l) {
    for (int i = 0; i < Y; ++i) {
      for (int j = 0; j < Y; ++j) {
        double log_p = fb.alpha[static_cast<std::size_t>((l - 1) * Y + j)] + lat.trans_at(i, j) +
                       lat.node_at(l, i) + fb.beta[static_cast<std::size_t>(l * Y + i)] - fb.log_z;
        m.edge[static_cast<std::size_t>(((l - 1) * Y + i) * Y + j)] = std::exp(log_p);
      }
    }
  }
  return m;
}

std::vector<int> viterbi_decode(const CrfModel& model, const FeaturizedSentence& sent) {
  check_non_empty(sent);
  const auto lat = detail::build_lattice(model.index, model.weights, sent);
  const int L = lat.length;
  const int Y = lat.num_labels;

  std::vector<double> delta(static_cast<std::size_t>(L) * Y);
  std::vector<int> back(static_cast<std::size_t>(L) * Y, 0);

  for (int i = 0; i < Y; ++i) {
    delta[static_cast<std::size_t>(i)] = lat.node_at(0, i);
  }
  for (int l = 1; l < L; ++l) {
    for (int i = 0; i < Y; ++i) {
      // strict > keeps the lowest previous label on ties
      int best_j = 0;
      double best = delta[static_cast<std::size_t>((l - 1) * Y)] + lat.trans_at(i, 0);
      for (int j = 1; j < Y; ++j) {
        double cand = delta[static_cast<std::size_t>((l - 1) * Y + j)] + lat.trans_at(i, j);
        if (cand > best) {
          best = cand;
          best_j = j;
        }
      }
      delta[static_cast<std::size_t>(l * Y + i)] = best + lat.node_at(l, i);
      back[static_cast<std::size_t>(l * Y + i)] = best_j;
    }
  }

  int best_i = 0;
  double best = delta[static_cast<std::size_t>((L - 1) * Y)];
  for (int i = 1; i < Y; ++i) {
    if (delta[static_cast<std::size_t>((L - 1) * Y + i)] > best) {
      best = delta[static_cast<std::size_t>((L - 1) * Y + i)];
      best_i = i;
    }
  }

  std::vector<int> path(static_cast<std::size_t>(L));
  path[static_cast<std::size_t>(L - 1)] = best_i;
  for (int l = L - 1; l > 0; --l) {
    path[static_cast<std::size_t>(l - 1)] =
        back[static_cast<std::size_t>(l * Y + path[static_cast<std::size_t>(l)])];
  }
  return path;
}

}  // namespace lcrf
