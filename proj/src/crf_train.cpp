#include <cmath>
#include <deque>
#include <numeric>

#include "lcrf/crf.hpp"
#include "lcrf/errors.hpp"
#include "lattice.hpp"

namespace lcrf {

namespace {

void check_gold(const FeaturizedSentence& sent, const FeatureIndex& index) {
  if (!sent.gold) {
    throw ContractViolation("training sentence is missing gold labels");
  }
  if (static_cast<int>(sent.gold->size()) != sent.length()) {
    throw ContractViolation("gold label sequence length does not match sentence length");
  }
  for (int y : *sent.gold) {
    if (y < 0 || y >= index.num_labels()) {
      throw ContractViolation("gold label index out of range");
    }
  }
}

// NLL of the batch plus (l2/2)*||theta||^2 at an arbitrary theta. grad is
// overwritten with the exact gradient.
double objective(const FeatureIndex& index, std::span<const FeaturizedSentence> batch,
                 double l2, std::span<const double> theta, std::span<double> grad) {
  const int Y = index.num_labels();
  std::fill(grad.begin(), grad.end(), 0.0);
  double nll = 0.0;

  for (const auto& sent : batch) {
    check_gold(sent, index);
    const auto lat = detail::build_lattice(index, theta, sent);
    const auto fb = detail::forward_backward(lat);
    const auto& gold = *sent.gold;
    const int L = lat.length;

    double gold_score = lat.node_at(0, gold[0]);
    for (int l = 1; l < L; ++l) {
      gold_score += lat.trans_at(gold[static_cast<std::size_t>(l)], gold[static_cast<std::size_t>(l - 1)]);
      gold_score += lat.node_at(l, gold[static_cast<std::size_t>(l)]);
    }
    nll += fb.log_z - gold_score;

    // expected counts
    for (int l = 0; l < L; ++l) {
      for (int i = 0; i < Y; ++i) {
        double p = std::exp(fb.alpha[static_cast<std::size_t>(l * Y + i)] +
                            fb.beta[static_cast<std::size_t>(l * Y + i)] - fb.log_z);
        for (int pid : lat.pairs[static_cast<std::size_t>(l)]) {
          grad[static_cast<std::size_t>(index.lw_slot_for_pair(i, pid))] += p;
        }
      }
    }
    for (int l = 1; l < L; ++l) {
      for (int i = 0; i < Y; ++i) {
        for (int j = 0; j < Y; ++j) {
          double p = std::exp(fb.alpha[static_cast<std::size_t>((l - 1) * Y + j)] +
                              lat.trans_at(i, j) + lat.node_at(l, i) +
                              fb.beta[static_cast<std::size_t>(l * Y + i)] - fb.log_z);
          grad[static_cast<std::size_t>(index.ll_slot(i, j))] += p;
        }
      }
    }
    // empirical counts
    for (int l = 0; l < L; ++l) {
      for (int pid : lat.pairs[static_cast<std::size_t>(l)]) {
        grad[static_cast<std::size_t>(index.lw_slot_for_pair(gold[static_cast<std::size_t>(l)], pid))] -= 1.0;
      }
    }
    for (int l = 1; l < L; ++l) {
      grad[static_cast<std::size_t>(index.ll_slot(gold[static_cast<std::size_t>(l)],
                                                  gold[static_cast<std::size_t>(l - 1)]))] -= 1.0;
    }
  }

  if (l2 > 0.0) {
    double sq = 0.0;
    for (std::size_t h = 0; h < theta.size(); ++h) {
      sq += theta[h] * theta[h];
      grad[h] += l2 * theta[h];
    }
    nll += 0.5 * l2 * sq;
  }
  return nll;
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

double nll_and_gradient(const CrfModel& model,
                        std::span<const FeaturizedSentence> batch, double l2,
                        std::span<double> grad) {
  if (grad.size() != model.weights.size()) {
    throw ContractViolation("gradient buffer size does not match weight count");
  }
  return objective(model.index, batch, l2, model.weights, grad);
}

std::vector<double> minimize_nll(const FeatureIndex& index,
                                 std::span<const FeaturizedSentence> corpus,
                                 const TrainConfig& config,
                                 std::vector<double> theta0, TrainStats* stats) {
  constexpr int kMemory = 10;
  constexpr double kArmijoC1 = 1e-4;
  constexpr double kMinStep = 1e-20;

  const std::size_t dim = static_cast<std::size_t>(index.size());
  if (theta0.size() != dim) {
    throw ContractViolation("starting point size does not match slot count");
  }

  std::vector<double> theta = std::move(theta0);
  std::vector<double> grad(dim), new_grad(dim), direction(dim), trial(dim);
  std::deque<std::pair<std::vector<double>, std::vector<double>>> history;  // (s, y)

  double f = objective(index, corpus, config.l2, theta, grad);
  if (!std::isfinite(f) || !all_finite(grad)) {
    throw TrainingDivergenceError(0, "non-finite objective at the starting point");
  }

  int iter = 0;
  bool converged = inf_norm(grad) <= config.tol;
  while (!converged && iter < config.max_iters) {
    ++iter;

    // two-loop recursion for the L-BFGS direction
    for (std::size_t h = 0; h < dim; ++h) direction[h] = -grad[h];
    std::vector<double> alphas(history.size());
    for (std::size_t k = history.size(); k-- > 0;) {
      const auto& [s, y] = history[k];
      double rho = 1.0 / dot(y, s);
      alphas[k] = rho * dot(s, direction);
      for (std::size_t h = 0; h < dim; ++h) direction[h] -= alphas[k] * y[h];
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      double gamma = dot(s, y) / dot(y, y);
      for (std::size_t h = 0; h < dim; ++h) direction[h] *= gamma;
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const auto& [s, y] = history[k];
      double rho = 1.0 / dot(y, s);
      double beta = rho * dot(y, direction);
      for (std::size_t h = 0; h < dim; ++h) direction[h] += (alphas[k] - beta) * s[h];
    }

    double dg = dot(grad, direction);
    if (dg >= 0.0) {
      // not a descent direction (numerical noise); fall back to steepest descent
      for (std::size_t h = 0; h < dim; ++h) direction[h] = -grad[h];
      dg = dot(grad, direction);
      history.clear();
    }

    // backtracking line search (Armijo)
    double step = history.empty() ? 1.0 / std::max(1.0, inf_norm(grad)) : 1.0;
    double new_f = 0.0;
    bool accepted = false;
    while (step >= kMinStep) {
      for (std::size_t h = 0; h < dim; ++h) trial[h] = theta[h] + step * direction[h];
      new_f = objective(index, corpus, config.l2, trial, new_grad);
      if (!std::isfinite(new_f) || !all_finite(new_grad)) {
        throw TrainingDivergenceError(iter, "non-finite objective or gradient");
      }
      if (new_f <= f + kArmijoC1 * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no progress possible at machine precision

    std::vector<double> s(dim), y(dim);
    for (std::size_t h = 0; h < dim; ++h) {
      s[h] = trial[h] - theta[h];
      y[h] = new_grad[h] - grad[h];
    }
    if (dot(s, y) > 1e-12) {
      history.emplace_back(std::move(s), std::move(y));
      if (static_cast<int>(history.size()) > kMemory) history.pop_front();
    }

    theta.swap(trial);
    grad.swap(new_grad);
    f = new_f;
    converged = inf_norm(grad) <= config.tol;
  }

  if (stats) {
    stats->iterations = iter;
    stats->nll = f;
    stats->grad_inf_norm = inf_norm(grad);
    stats->converged = converged;
  }
  return theta;
}

CrfModel train(std::span<const FeaturizedSentence> corpus, const LabelSet& labels,
               const TrainConfig& config, TrainStats* stats) {
  if (corpus.empty()) {
    throw ConfigError("training corpus must not be empty");
  }
  FeatureIndex index = FeatureIndex::build(corpus, labels);
  std::vector<double> theta0(static_cast<std::size_t>(index.size()), 0.0);
  std::vector<double> theta = minimize_nll(index, corpus, config, std::move(theta0), stats);
  return CrfModel{labels, std::move(index), std::move(theta), config};
}

}  // namespace lcrf
