#include "lcrf/lifelong.hpp"

#include <algorithm>
#include <map>

#include "lcrf/errors.hpp"
#include "lcrf/feature_gen.hpp"
#include "lcrf/spans.hpp"

namespace lcrf {

bool AspectStore::contains(std::string_view domain_id) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.domain_id == domain_id; });
}

void AspectStore::add(std::string domain_id, std::set<std::string> aspects) {
  if (contains(domain_id)) {
    throw ContractViolation("store already contains domain '" + domain_id + "'");
  }
  entries_.push_back(Entry{std::move(domain_id), std::move(aspects)});
}

void AspectStore::remove(std::string_view domain_id) {
  std::erase_if(entries_, [&](const Entry& e) { return e.domain_id == domain_id; });
}

std::set<std::string> mine_frequent_aspects(const AspectStore& store, int lambda) {
  if (lambda < 1) {
    throw ContractViolation("frequency threshold must be >= 1");
  }
  std::map<std::string, int> domain_counts;
  for (const auto& entry : store.entries()) {
    for (const auto& aspect : entry.aspects) {
      ++domain_counts[aspect];  // aspects is a set, so one count per domain
    }
  }
  std::set<std::string> frequent;
  for (const auto& [aspect, count] : domain_counts) {
    if (count >= lambda) frequent.insert(aspect);
  }
  return frequent;
}

std::vector<std::vector<std::string>> decode_domain(const CrfModel& model,
                                                    std::span<const ParsedSentence> domain,
                                                    const KnowledgeBase& kb) {
  std::vector<std::vector<std::string>> all_tags;
  all_tags.reserve(domain.size());
  for (const auto& sent : domain) {
    FeaturizedSentence featurized = featurize(sent, kb, model.labels);
    std::vector<int> path = viterbi_decode(model, featurized);
    std::vector<std::string> tags;
    tags.reserve(path.size());
    for (int y : path) tags.push_back(model.labels.name(y));
    all_tags.push_back(std::move(tags));
  }
  return all_tags;
}

namespace {

std::set<std::string> phrases_of(std::span<const ParsedSentence> domain,
                                 const std::vector<std::vector<std::string>>& tags) {
  std::set<std::string> aspects;
  for (std::size_t s = 0; s < domain.size(); ++s) {
    std::vector<std::string> words;
    words.reserve(domain[s].tokens.size());
    for (const auto& token : domain[s].tokens) words.push_back(token.word);
    auto sent_phrases = aspect_phrases(words, tags[s]);
    aspects.merge(sent_phrases);
  }
  return aspects;
}

KnowledgeBase knowledge_for(const std::set<std::string>& train_aspects,
                            const std::set<std::string>& mined) {
  KnowledgeBase kb = tokens_of_aspects(train_aspects);
  KnowledgeBase extra = tokens_of_aspects(mined);
  for (const auto& term : extra.terms()) kb.insert_token(term);
  return kb;
}

}  // namespace

std::set<std::string> extract_aspects(const CrfModel& model,
                                      std::span<const ParsedSentence> domain,
                                      const KnowledgeBase& kb) {
  if (domain.empty()) {
    throw ContractViolation("domain must contain at least one sentence");
  }
  return phrases_of(domain, decode_domain(model, domain, kb));
}

LifelongRun lifelong_extract_detailed(const CrfModel& model,
                                      std::span<const ParsedSentence> domain,
                                      std::string_view domain_id, AspectStore& store,
                                      const std::set<std::string>& train_aspects,
                                      const LifelongConfig& config) {
  if (config.lambda < 1) {
    throw ContractViolation("lambda must be >= 1");
  }
  if (config.max_iters < 1) {
    throw ContractViolation("max_iters must be >= 1");
  }
  if (store.contains(domain_id)) {
    throw ContractViolation("store already contains domain '" + std::string(domain_id) + "'");
  }
  if (domain.empty()) {
    throw ContractViolation("domain must contain at least one sentence");
  }

  LifelongRun run;
  auto& result = run.result;
  std::set<std::string> previous;

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    KnowledgeBase kb = knowledge_for(train_aspects, previous);
    run.final_tags = decode_domain(model, domain, kb);
    result.aspects = phrases_of(domain, run.final_tags);
    result.iterations = iter;

    store.add(std::string(domain_id), result.aspects);
    std::set<std::string> mined = mine_frequent_aspects(store, config.lambda);

    if (mined == previous) {
      result.k_history.push_back(std::move(mined));
      result.converged = true;
      break;  // fixpoint; this extraction stays in the store
    }
    // A repeat of a non-adjacent earlier reliable set means the loop is
    // oscillating, not converging.
    bool cycle = std::find(result.k_history.begin(), result.k_history.end(), mined) !=
                 result.k_history.end();
    result.k_history.push_back(mined);
    if (cycle || iter == config.max_iters) {
      result.converged = false;
      break;  // keep the last extraction in the store
    }

    previous = std::move(mined);
    store.remove(domain_id);
  }
  return run;
}

LifelongResult lifelong_extract(const CrfModel& model,
                                std::span<const ParsedSentence> domain,
                                std::string_view domain_id, AspectStore& store,
                                const std::set<std::string>& train_aspects,
                                const LifelongConfig& config) {
  return lifelong_extract_detailed(model, domain, domain_id, store, train_aspects, config)
      .result;
}

}  // namespace lcrf
