#ifndef LCRF_FEATURE_GEN_HPP
#define LCRF_FEATURE_GEN_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcrf/feature_vector.hpp"
#include "lcrf/knowledge.hpp"
#include "lcrf/labels.hpp"
#include "lcrf/sentence.hpp"

namespace lcrf {

inline constexpr std::string_view kBosSentinel = "<BOS>";
inline constexpr std::string_view kEosSentinel = "<EOS>";

enum class KnowledgeLabel : char { Aspect = 'A', Other = 'O' };

// A dependency relation with the current word's side replaced by a
// wildcard and the context word replaced by its knowledge label.
// Serializes as `type(govslot,depslot)`, e.g. `nmod(*,A/NN)`.
struct DependencyPattern {
  struct Slot {
    bool wildcard = false;
    KnowledgeLabel label = KnowledgeLabel::Other;
    std::string pos;  // empty when wildcard

    bool operator==(const Slot&) const = default;
  };

  std::string rel_type;
  Slot gov;
  Slot dep;

  std::string to_string() const;
  bool operator==(const DependencyPattern&) const = default;
};

// Word/POS templates of the token at position l: lowercased words, POS
// kept verbatim, <BOS>/<EOS> sentinels at the boundaries. No G entries.
FeatureVector basic_features(const ParsedSentence& sent, int l);

// Wildcard the side matching current_word (case-insensitive; governor
// side on a self-loop) and knowledge-label the other side: Aspect if the
// context word is in kb, Other if not.
DependencyPattern generalize_relation(const DependencyRelation& rel,
                                      std::string_view current_word,
                                      const KnowledgeBase& kb);

// Basic templates plus one G entry per relation of each token. Gold tags
// are mapped to label indices.
FeaturizedSentence featurize(const ParsedSentence& sent, const KnowledgeBase& kb,
                             const LabelSet& labels);

std::vector<FeaturizedSentence> featurize_corpus(std::span<const ParsedSentence> sents,
                                                 const KnowledgeBase& kb,
                                                 const LabelSet& labels);

}  // namespace lcrf

#endif  // LCRF_FEATURE_GEN_HPP
