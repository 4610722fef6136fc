// lcrf: train, apply, and evaluate a lifelong sequence labeler for
// aspect extraction. See README.md for the file formats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcrf/conll.hpp"
#include "lcrf/crf.hpp"
#include "lcrf/errors.hpp"
#include "lcrf/eval.hpp"
#include "lcrf/feature_gen.hpp"
#include "lcrf/lifelong.hpp"
#include "lcrf/model_io.hpp"
#include "lcrf/store_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct TrainArgs {
  std::string corpus_path;
  std::string model_out;
  lcrf::TrainConfig config;
};

int cmd_train(const TrainArgs& args) {
  lcrf::Corpus corpus = lcrf::read_conll(args.corpus_path, /*expect_labels=*/true);
  lcrf::LabelSet labels = lcrf::LabelSet::default_bio();

  std::set<std::string> train_aspects = lcrf::extract_training_aspects(corpus);
  lcrf::KnowledgeBase kb = lcrf::tokens_of_aspects(train_aspects);
  auto featurized = lcrf::featurize_corpus(corpus.sentences, kb, labels);

  lcrf::TrainStats stats;
  lcrf::CrfModel model = lcrf::train(featurized, labels, args.config, &stats);

  lcrf::save_model_file(model, args.model_out);
  lcrf::save_aspects(train_aspects, args.model_out + ".aspects");

  std::cout << "features: " << model.index.size() << "\n"
            << "iterations: " << stats.iterations << "\n"
            << "final nll: " << stats.nll << "\n"
            << "model: " << args.model_out << "\n"
            << "training aspects: " << args.model_out << ".aspects (" << train_aspects.size()
            << " phrases)\n";
  return kExitOk;
}

struct ExtractArgs {
  std::string domain_path;
  std::string model_path;
  std::string aspects_path;
};

std::set<std::string> load_train_aspects(const std::string& model_path, const std::string& aspects_path) {
  return lcrf::load_aspects(aspects_path.empty() ? model_path + ".aspects" : aspects_path);
}

int cmd_extract(const ExtractArgs& args) {
  lcrf::CrfModel model = lcrf::load_model_file(args.model_path);
  std::set<std::string> train_aspects = load_train_aspects(args.model_path, args.aspects_path);
  lcrf::Corpus domain = lcrf::read_conll(args.domain_path, /*expect_labels=*/false);

  auto aspects =
      lcrf::extract_aspects(model, domain.sentences, lcrf::tokens_of_aspects(train_aspects));
  for (const auto& aspect : aspects) std::cout << aspect << "\n";
  return kExitOk;
}

struct LifelongArgs {
  std::string domain_path;
  std::string model_path;
  std::string aspects_path;
  std::string store_path;
  std::string domain_id;
  lcrf::LifelongConfig config;
};

int cmd_lifelong(const LifelongArgs& args) {
  lcrf::CrfModel model = lcrf::load_model_file(args.model_path);
  std::set<std::string> train_aspects = load_train_aspects(args.model_path, args.aspects_path);
  lcrf::Corpus domain = lcrf::read_conll(args.domain_path, /*expect_labels=*/false,
                                         args.domain_id);

  lcrf::AspectStore store;
  if (std::filesystem::exists(args.store_path)) {
    store = lcrf::load_store_file(args.store_path);
  }

  lcrf::LifelongResult result = lcrf::lifelong_extract(
      model, domain.sentences, domain.domain_id, store, train_aspects, args.config);
  lcrf::save_store_file(store, args.store_path);

  for (std::size_t i = 0; i < result.k_history.size(); ++i) {
    std::cout << "iteration " << (i + 1) << ": reliable aspects = "
              << result.k_history[i].size() << "\n";
  }
  std::cout << "converged: " << (result.converged ? "yes" : "no") << "\n";
  for (const auto& aspect : result.aspects) std::cout << aspect << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::string gold_path;
  std::string pred_path;
};

int cmd_eval(const EvalArgs& args) {
  lcrf::Corpus gold = lcrf::read_conll(args.gold_path, /*expect_labels=*/true);
  lcrf::Corpus pred = lcrf::read_conll(args.pred_path, /*expect_labels=*/true);
  if (gold.sentences.size() != pred.sentences.size()) {
    throw lcrf::DataError("gold and prediction corpora differ in sentence count");
  }
  std::vector<std::vector<std::string>> gold_tags, pred_tags;
  for (const auto& sent : gold.sentences) gold_tags.push_back(*sent.gold_tags);
  for (const auto& sent : pred.sentences) pred_tags.push_back(*sent.gold_tags);

  lcrf::EvalReport report = [&] {
    try {
      return lcrf::evaluate(gold_tags, pred_tags);
    } catch (const lcrf::ContractViolation& e) {
      throw lcrf::DataError(e.what());
    }
  }();
  std::cout << "precision: " << report.precision << " (" << report.tp << "/"
            << (report.tp + report.fp) << ")\n"
            << "recall: " << report.recall << " (" << report.tp << "/"
            << (report.tp + report.fn) << ")\n"
            << "f1: " << report.f1 << "\n";
  return kExitOk;
}

struct ExperimentArgs {
  std::vector<std::string> domain_paths;
  std::string store_path;
  std::string report_out;
  std::string protocol = "cross";
  lcrf::ExperimentConfig config;
};

int cmd_experiment(const ExperimentArgs& args) {
  std::vector<lcrf::Corpus> domains;
  domains.reserve(args.domain_paths.size());
  for (const auto& path : args.domain_paths) {
    domains.push_back(lcrf::read_conll(path, /*expect_labels=*/true));
  }
  lcrf::AspectStore store;
  if (!args.store_path.empty()) {
    store = lcrf::load_store_file(args.store_path);
  }
  lcrf::Protocol protocol = args.protocol == "in" ? lcrf::Protocol::InDomain
                                                  : lcrf::Protocol::CrossDomain;
  lcrf::ExperimentReport report =
      lcrf::run_experiment(domains, store, protocol, args.config);

  std::cout << lcrf::render_text(report);
  if (!args.report_out.empty()) {
    std::ofstream out(args.report_out);
    if (!out) {
      throw lcrf::DataError("cannot write report file: " + args.report_out);
    }
    out << lcrf::render_delimited(report);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lcrf: lifelong CRF sequence labeler for opinion-aspect extraction"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "train a model on a labeled corpus");
  train->add_option("corpus", train_args.corpus_path, "labeled corpus file")->required();
  train->add_option("--model", train_args.model_out, "output model path")->required();
  train->add_option("--l2", train_args.config.l2, "L2 regularization coefficient")
      ->check(CLI::NonNegativeNumber);
  train->add_option("--tol", train_args.config.tol, "gradient tolerance")
      ->check(CLI::PositiveNumber);
  train->add_option("--max-iters", train_args.config.max_iters, "optimizer iteration cap")
      ->check(CLI::PositiveNumber);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "extract aspects with a trained model");
  extract->add_option("domain", extract_args.domain_path, "unlabeled corpus file")->required();
  extract->add_option("--model", extract_args.model_path, "model path")->required();
  extract->add_option("--aspects", extract_args.aspects_path, "training-aspect sidecar (default <model>.aspects)");

  LifelongArgs lifelong_args;
  auto* lifelong = app.add_subcommand(
      "lifelong", "extract with knowledge mined from past domains, updating the store");
  lifelong->add_option("domain", lifelong_args.domain_path, "unlabeled corpus file")->required();
  lifelong->add_option("--model", lifelong_args.model_path, "model path")->required();
  lifelong->add_option("--aspects", lifelong_args.aspects_path, "training-aspect sidecar (default <model>.aspects)");
  lifelong->add_option("--store", lifelong_args.store_path, "aspect store path (created if missing)")
      ->required();
  lifelong->add_option("--domain-id", lifelong_args.domain_id, "store id (default: file stem)");
  lifelong->add_option("--lambda", lifelong_args.config.lambda, "reliability threshold")
      ->check(CLI::PositiveNumber);
  lifelong->add_option("--max-iters", lifelong_args.config.max_iters, "extraction loop cap")
      ->check(CLI::PositiveNumber);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "score predicted tags against gold tags");
  eval->add_option("gold", eval_args.gold_path, "gold corpus file")->required();
  eval->add_option("pred", eval_args.pred_path, "predicted corpus file")->required();

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand(
      "experiment", "cross-domain / in-domain comparison of CRF, CRF+R, and L-CRF");
  experiment->add_option("domains", exp_args.domain_paths, "labeled corpus files")
      ->required()
      ->expected(-2);
  experiment->add_option("--protocol", exp_args.protocol, "cross or in")
      ->check(CLI::IsMember({"cross", "in"}));
  experiment->add_option("--store", exp_args.store_path, "aspect store of past domains");
  experiment->add_option("--report-out", exp_args.report_out, "delimited report path");
  experiment->add_option("--lambda", exp_args.config.lambda, "reliability threshold")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--l2", exp_args.config.train.l2, "L2 regularization coefficient")
      ->check(CLI::NonNegativeNumber);
  experiment->add_option("--tol", exp_args.config.train.tol, "gradient tolerance")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--max-iters", exp_args.config.train.max_iters, "optimizer iteration cap")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--split", exp_args.config.split, "train/test sentences per domain")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp_args.config.seed, "split shuffle seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train) return cmd_train(train_args);
    if (*extract) return cmd_extract(extract_args);
    if (*lifelong) return cmd_lifelong(lifelong_args);
    if (*eval) return cmd_eval(eval_args);
    if (*experiment) return cmd_experiment(exp_args);
  } catch (const lcrf::TrainingDivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const lcrf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lcrf::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const lcrf::ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const lcrf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
