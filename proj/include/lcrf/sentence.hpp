#ifndef LCRF_SENTENCE_HPP
#define LCRF_SENTENCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace lcrf {

// A typed arc between a governor and a dependent word. Word positions
// are deliberately absent: patterns generalize across sentences.
struct DependencyRelation {
  std::string rel_type;
  std::string gov_word;
  std::string gov_pos;
  std::string dep_word;
  std::string dep_pos;

  bool operator==(const DependencyRelation&) const = default;
};

struct ParsedToken {
  std::string word;
  std::string pos;
  // Every arc this token participates in, as governor or dependent.
  std::vector<DependencyRelation> relations;

  bool operator==(const ParsedToken&) const = default;
};

struct ParsedSentence {
  std::vector<ParsedToken> tokens;
  std::optional<std::vector<std::string>> gold_tags;  // same length when present

  int length() const { return static_cast<int>(tokens.size()); }
  bool operator==(const ParsedSentence&) const = default;
};

}  // namespace lcrf

#endif  // LCRF_SENTENCE_HPP
