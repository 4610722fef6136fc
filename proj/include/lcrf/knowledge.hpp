#ifndef LCRF_KNOWLEDGE_HPP
#define LCRF_KNOWLEDGE_HPP

#include <set>
#include <string>
#include <string_view>

namespace lcrf {

// The reliable-aspect vocabulary used to assign knowledge labels during
// featurization. Entries are lowercase single tokens; aspect phrases are
// exploded into their tokens at this boundary so a phrase like
// "battery life" marks both "battery" and "life".
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  void insert_token(std::string token);
  bool contains(std::string_view lowercased_word) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<std::string>& terms() const { return terms_; }

 private:
  std::set<std::string> terms_;
};

// Whitespace-split every aspect phrase into lowercase tokens.
KnowledgeBase tokens_of_aspects(const std::set<std::string>& aspects);

}  // namespace lcrf

#endif  // LCRF_KNOWLEDGE_HPP
