#include "lcrf/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "lcrf/errors.hpp"
#include "lcrf/feature_gen.hpp"
#include "lcrf/spans.hpp"
#include "lcrf/util.hpp"

namespace lcrf {

EvalReport EvalReport::from_counts(long tp, long fp, long fn) {
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = (tp + fp == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall = (tp + fn == 0) ? 1.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f1 = (r.precision + r.recall > 0.0)
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

EvalReport evaluate(const std::vector<std::vector<std::string>>& gold,
                    const std::vector<std::vector<std::string>>& pred) {
  if (gold.size() != pred.size()) {
    throw ContractViolation("gold and predicted corpora differ in sentence count");
  }
  long tp = 0, fp = 0, fn = 0;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size()) {
      throw ContractViolation("gold and predicted tag sequences differ in length at sentence " +
                              std::to_string(s));
    }
    auto gold_spans = spans_from_tags(gold[s]);
    auto pred_spans = spans_from_tags(pred[s]);
    std::vector<bool> used(gold_spans.size(), false);
    for (const auto& span : pred_spans) {
      bool matched = false;
      for (std::size_t g = 0; g < gold_spans.size(); ++g) {
        if (!used[g] && gold_spans[g] == span) {
          used[g] = true;
          matched = true;
          break;
        }
      }
      matched ? ++tp : ++fp;
    }
    for (bool u : used) {
      if (!u) ++fn;
    }
  }
  return EvalReport::from_counts(tp, fp, fn);
}

std::vector<std::vector<std::string>> crf_plus_r(
    const std::vector<std::vector<std::string>>& pred,
    const std::set<std::string>& reliable,
    std::span<const ParsedSentence> test) {
  if (pred.size() != test.size()) {
    throw ContractViolation("prediction count does not match test sentence count");
  }

  // reliable phrases as lowercase token sequences, longest first per start
  std::vector<std::vector<std::string>> phrases;
  for (const auto& phrase : reliable) {
    auto tokens = split_whitespace(to_lower(phrase));
    if (!tokens.empty()) phrases.push_back(std::move(tokens));
  }
  std::size_t max_len = 0;
  for (const auto& p : phrases) max_len = std::max(max_len, p.size());

  auto augmented = pred;
  for (std::size_t s = 0; s < test.size(); ++s) {
    const auto& sent = test[s];
    auto& tags = augmented[s];
    if (tags.size() != sent.tokens.size()) {
      throw ContractViolation("tag sequence length does not match sentence " +
                              std::to_string(s));
    }
    const int L = sent.length();

    std::vector<bool> covered(static_cast<std::size_t>(L), false);
    for (const auto& span : spans_from_tags(tags)) {
      for (int l = span.start; l < span.end; ++l) covered[static_cast<std::size_t>(l)] = true;
    }
    std::vector<std::string> lowered(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) lowered[static_cast<std::size_t>(l)] = to_lower(sent.tokens[static_cast<std::size_t>(l)].word);

    for (int start = 0; start < L;) {
      int matched_len = 0;
      // longest reliable phrase starting here whose window is free
      for (int len = static_cast<int>(std::min<std::size_t>(max_len, static_cast<std::size_t>(L - start)));
           len >= 1 && matched_len == 0; --len) {
        bool free_window = true;
        for (int l = start; l < start + len; ++l) {
          if (covered[static_cast<std::size_t>(l)]) {
            free_window = false;
            break;
          }
        }
        if (!free_window) continue;
        for (const auto& phrase : phrases) {
          if (static_cast<int>(phrase.size()) != len) continue;
          bool equal = true;
          for (int l = 0; l < len; ++l) {
            if (lowered[static_cast<std::size_t>(start + l)] != phrase[static_cast<std::size_t>(l)]) {
              equal = false;
              break;
            }
          }
          if (equal) {
            matched_len = len;
            break;
          }
        }
      }
      if (matched_len == 0) {
        ++start;
        continue;
      }
      tags[static_cast<std::size_t>(start)] = "B-ASP";
      for (int l = start + 1; l < start + matched_len; ++l) {
        tags[static_cast<std::size_t>(l)] = "I-ASP";
      }
      for (int l = start; l < start + matched_len; ++l) {
        covered[static_cast<std::size_t>(l)] = true;
      }
      // An existing span may begin with an orphan I right after the added
      // span; promote it to B so the two spans do not merge.
      const int next = start + matched_len;
      if (next < L && tags[static_cast<std::size_t>(next)].starts_with("I-")) {
        tags[static_cast<std::size_t>(next)][0] = 'B';
      }
      start += matched_len;
    }
  }
  return augmented;
}

namespace {

struct FoldData {
  std::string name;
  std::vector<ParsedSentence> train;
  std::vector<ParsedSentence> test;
  std::string test_domain_id;
};

struct DomainSplit {
  std::vector<ParsedSentence> train;
  std::vector<ParsedSentence> test;
};

DomainSplit split_domain(const Corpus& domain, int split, std::uint64_t seed) {
  const auto& sents = domain.sentences;
  DomainSplit out;
  if (static_cast<int>(sents.size()) >= 2 * split) {
    std::vector<std::size_t> order(sents.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    deterministic_shuffle(order, seed ^ fnv1a(domain.domain_id));
    for (int i = 0; i < split; ++i) out.train.push_back(sents[order[static_cast<std::size_t>(i)]]);
    for (int i = split; i < 2 * split; ++i) out.test.push_back(sents[order[static_cast<std::size_t>(i)]]);
  } else {
    // too small to split: use everything on both sides
    out.train = sents;
    out.test = sents;
  }
  return out;
}

std::vector<std::vector<std::string>> gold_tags_of(std::span<const ParsedSentence> sents) {
  std::vector<std::vector<std::string>> gold;
  gold.reserve(sents.size());
  for (const auto& sent : sents) {
    if (!sent.gold_tags) {
      throw ContractViolation("experiment test sentence is missing gold tags");
    }
    gold.push_back(*sent.gold_tags);
  }
  return gold;
}

std::set<std::string> training_aspects(std::span<const ParsedSentence> sents) {
  std::set<std::string> aspects;
  for (const auto& sent : sents) {
    std::vector<std::string> words;
    words.reserve(sent.tokens.size());
    for (const auto& token : sent.tokens) words.push_back(token.word);
    auto phrases = aspect_phrases(words, *sent.gold_tags);
    aspects.merge(phrases);
  }
  return aspects;
}

SystemAverage average_of(const std::vector<FoldReport>& folds,
                         EvalReport FoldReport::* member) {
  SystemAverage avg;
  if (folds.empty()) return avg;
  for (const auto& fold : folds) {
    avg.precision += (fold.*member).precision;
    avg.recall += (fold.*member).recall;
    avg.f1 += (fold.*member).f1;
  }
  const double n = static_cast<double>(folds.size());
  avg.precision /= n;
  avg.recall /= n;
  avg.f1 /= n;
  return avg;
}

}  // namespace

ExperimentReport run_experiment(std::span<const Corpus> domains,
                                const AspectStore& store, Protocol protocol,
                                const ExperimentConfig& config) {
  if (domains.size() < 2) {
    throw ConfigError("experiments need at least 2 domains");
  }
  for (const auto& domain : domains) {
    if (!domain.labeled) {
      throw ContractViolation("experiment domain '" + domain.domain_id +
                              "' is not fully labeled");
    }
  }

  const LabelSet labels = LabelSet::default_bio();

  std::vector<DomainSplit> splits;
  splits.reserve(domains.size());
  for (const auto& domain : domains) {
    splits.push_back(split_domain(domain, config.split, config.seed));
  }

  ExperimentReport report;
  report.protocol = protocol;
  report.seed = config.seed;
  report.lambda = config.lambda;

  for (std::size_t held_out = 0; held_out < domains.size(); ++held_out) {
    FoldData fold;
    for (std::size_t d = 0; d < domains.size(); ++d) {
      if (d == held_out) continue;
      fold.train.insert(fold.train.end(), splits[d].train.begin(), splits[d].train.end());
      if (protocol == Protocol::InDomain) {
        fold.test.insert(fold.test.end(), splits[d].test.begin(), splits[d].test.end());
      }
    }
    if (protocol == Protocol::CrossDomain) {
      fold.test = splits[held_out].test;
      fold.name = domains[held_out].domain_id;
    } else {
      fold.name = "-" + domains[held_out].domain_id;
    }

    // Train with the fold's own annotated aspects as knowledge.
    std::set<std::string> train_aspects = training_aspects(fold.train);
    KnowledgeBase train_aspect_tokens = tokens_of_aspects(train_aspects);
    auto featurized = featurize_corpus(fold.train, train_aspect_tokens, labels);
    CrfModel model = train(featurized, labels, config.train);

    auto gold = gold_tags_of(fold.test);

    // CRF: decode with training knowledge only.
    auto crf_tags = decode_domain(model, fold.test, train_aspect_tokens);

    // CRF+R: append reliable aspects found verbatim in the test text.
    std::set<std::string> reliable = mine_frequent_aspects(store, config.lambda);
    reliable.insert(train_aspects.begin(), train_aspects.end());
    auto crf_r_tags = crf_plus_r(crf_tags, reliable, fold.test);

    // L-CRF: iterate extraction against a private copy of the store.
    AspectStore fold_store = store;
    LifelongConfig ll_config{config.lambda, config.lifelong_max_iters};
    auto run = lifelong_extract_detailed(model, fold.test, "fold:" + fold.name,
                                         fold_store, train_aspects, ll_config);

    FoldReport fr;
    fr.name = fold.name;
    fr.crf = evaluate(gold, crf_tags);
    fr.crf_r = evaluate(gold, crf_r_tags);
    fr.lcrf = evaluate(gold, run.final_tags);
    report.folds.push_back(std::move(fr));
  }

  report.avg_crf = average_of(report.folds, &FoldReport::crf);
  report.avg_crf_r = average_of(report.folds, &FoldReport::crf_r);
  report.avg_lcrf = average_of(report.folds, &FoldReport::lcrf);
  return report;
}

namespace {

std::string fmt(double v, const char* format = "%.4f") {
  char buf[32];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void text_row(std::ostringstream& out, const std::string& fold, const char* system,
              double p, double r, double f1) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16s %-8s %8.4f %8.4f %8.4f\n", fold.c_str(),
                system, p, r, f1);
  out << buf;
}

}  // namespace

std::string render_text(const ExperimentReport& report) {
  std::ostringstream out;
  out << "protocol: "
      << (report.protocol == Protocol::CrossDomain ? "cross-domain" : "in-domain")
      << "  seed: " << report.seed << "  lambda: " << report.lambda << "\n";
  char header[160];
  std::snprintf(header, sizeof(header), "%-16s %-8s %8s %8s %8s\n", "fold", "system",
                "P", "R", "F1");
  out << header;
  for (const auto& fold : report.folds) {
    text_row(out, fold.name, "CRF", fold.crf.precision, fold.crf.recall, fold.crf.f1);
    text_row(out, fold.name, "CRF+R", fold.crf_r.precision, fold.crf_r.recall, fold.crf_r.f1);
    text_row(out, fold.name, "L-CRF", fold.lcrf.precision, fold.lcrf.recall, fold.lcrf.f1);
  }
  text_row(out, "average", "CRF", report.avg_crf.precision, report.avg_crf.recall,
           report.avg_crf.f1);
  text_row(out, "average", "CRF+R", report.avg_crf_r.precision, report.avg_crf_r.recall,
           report.avg_crf_r.f1);
  text_row(out, "average", "L-CRF", report.avg_lcrf.precision, report.avg_lcrf.recall,
           report.avg_lcrf.f1);
  return out.str();
}

std::string render_delimited(const ExperimentReport& report) {
  std::ostringstream out;
  out << "fold,system,precision,recall,f1\n";
  auto row = [&out](const std::string& fold, const char* system, double p, double r,
                    double f1) {
    out << fold << ',' << system << ',' << fmt(p, "%.6f") << ',' << fmt(r, "%.6f")
        << ',' << fmt(f1, "%.6f") << '\n';
  };
  for (const auto& fold : report.folds) {
    row(fold.name, "CRF", fold.crf.precision, fold.crf.recall, fold.crf.f1);
    row(fold.name, "CRF+R", fold.crf_r.precision, fold.crf_r.recall, fold.crf_r.f1);
    row(fold.name, "L-CRF", fold.lcrf.precision, fold.lcrf.recall, fold.lcrf.f1);
  }
  row("average", "CRF", report.avg_crf.precision, report.avg_crf.recall, report.avg_crf.f1);
  row("average", "CRF+R", report.avg_crf_r.precision, report.avg_crf_r.recall,
      report.avg_crf_r.f1);
  row("average", "L-CRF", report.avg_lcrf.precision, report.avg_lcrf.recall,
      report.avg_lcrf.f1);
  return out.str();
}

}  // namespace lcrf
