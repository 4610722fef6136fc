#include "lcrf/feature_gen.hpp"

#include "lcrf/errors.hpp"
#include "lcrf/util.hpp"

namespace lcrf {

void KnowledgeBase::insert_token(std::string token) {
  if (token.empty()) {
    throw ContractViolation("knowledge-base tokens must not be empty");
  }
  if (contains_whitespace(token)) {
    throw ContractViolation("knowledge-base tokens must not contain whitespace: " + token);
  }
  terms_.insert(to_lower(token));
}

bool KnowledgeBase::contains(std::string_view lowercased_word) const {
  return terms_.find(std::string(lowercased_word)) != terms_.end();
}

KnowledgeBase tokens_of_aspects(const std::set<std::string>& aspects) {
  KnowledgeBase kb;
  for (const auto& phrase : aspects) {
    for (auto& token : split_whitespace(phrase)) {
      kb.insert_token(std::move(token));
    }
  }
  return kb;
}

std::string DependencyPattern::to_string() const {
  auto slot_text = [](const Slot& s) -> std::string {
    if (s.wildcard) return "*";
    std::string out(1, static_cast<char>(s.label));
    out += '/';
    out += s.pos;
    return out;
  };
  return rel_type + "(" + slot_text(gov) + "," + slot_text(dep) + ")";
}

FeatureVector basic_features(const ParsedSentence& sent, int l) {
  const int L = sent.length();
  if (l < 0 || l >= L) {
    throw ContractViolation("token position out of range");
  }
  const auto& tokens = sent.tokens;
  FeatureVector fv;
  fv.add(Template::Word, to_lower(tokens[static_cast<std::size_t>(l)].word));
  fv.add(Template::Pos, tokens[static_cast<std::size_t>(l)].pos);
  if (l == 0) {
    fv.add(Template::PrevWord, std::string(kBosSentinel));
    fv.add(Template::PrevPos, std::string(kBosSentinel));
  } else {
    fv.add(Template::PrevWord, to_lower(tokens[static_cast<std::size_t>(l - 1)].word));
    fv.add(Template::PrevPos, tokens[static_cast<std::size_t>(l - 1)].pos);
  }
  if (l == L - 1) {
    fv.add(Template::NextWord, std::string(kEosSentinel));
    fv.add(Template::NextPos, std::string(kEosSentinel));
  } else {
    fv.add(Template::NextWord, to_lower(tokens[static_cast<std::size_t>(l + 1)].word));
    fv.add(Template::NextPos, tokens[static_cast<std::size_t>(l + 1)].pos);
  }
  return fv;
}

DependencyPattern generalize_relation(const DependencyRelation& rel,
                                      std::string_view current_word,
                                      const KnowledgeBase& kb) {
  const std::string current = to_lower(current_word);
  const bool on_gov = to_lower(rel.gov_word) == current;
  const bool on_dep = to_lower(rel.dep_word) == current;
  if (!on_gov && !on_dep) {
    throw ContractViolation("current word '" + std::string(current_word) +
                            "' is on neither side of relation " + rel.rel_type);
  }

  DependencyPattern pattern;
  pattern.rel_type = rel.rel_type;
  // Self-loops wildcard the governor side.
  if (on_gov) {
    pattern.gov.wildcard = true;
    pattern.dep.label = kb.contains(to_lower(rel.dep_word)) ? KnowledgeLabel::Aspect
                                                            : KnowledgeLabel::Other;
    pattern.dep.pos = rel.dep_pos;
  } else {
    pattern.dep.wildcard = true;
    pattern.gov.label = kb.contains(to_lower(rel.gov_word)) ? KnowledgeLabel::Aspect
                                                            : KnowledgeLabel::Other;
    pattern.gov.pos = rel.gov_pos;
  }
  return pattern;
}

FeaturizedSentence featurize(const ParsedSentence& sent, const KnowledgeBase& kb,
                             const LabelSet& labels) {
  if (sent.length() < 1) {
    throw ContractViolation("cannot featurize an empty sentence");
  }
  FeaturizedSentence out;
  out.tokens.reserve(sent.tokens.size());
  for (int l = 0; l < sent.length(); ++l) {
    FeatureVector fv = basic_features(sent, l);
    const auto& token = sent.tokens[static_cast<std::size_t>(l)];
    for (const auto& rel : token.relations) {
      fv.add(Template::DepPattern, generalize_relation(rel, token.word, kb).to_string());
    }
    out.tokens.push_back(std::move(fv));
  }
  if (sent.gold_tags) {
    if (sent.gold_tags->size() != sent.tokens.size()) {
      throw ContractViolation("gold tag sequence length does not match sentence length");
    }
    std::vector<int> gold;
    gold.reserve(sent.gold_tags->size());
    for (const auto& tag : *sent.gold_tags) {
      int idx = labels.index_of(tag);
      if (idx < 0) {
        throw DataError("gold tag '" + tag + "' is not in the label set");
      }
      gold.push_back(idx);
    }
    out.gold = std::move(gold);
  }
  return out;
}

std::vector<FeaturizedSentence> featurize_corpus(std::span<const ParsedSentence> sents,
                                                 const KnowledgeBase& kb,
                                                 const LabelSet& labels) {
  std::vector<FeaturizedSentence> out;
  out.reserve(sents.size());
  for (const auto& sent : sents) {
    out.push_back(featurize(sent, kb, labels));
  }
  return out;
}

}  // namespace lcrf
