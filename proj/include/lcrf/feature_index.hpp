#ifndef LCRF_FEATURE_INDEX_HPP
#define LCRF_FEATURE_INDEX_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lcrf/feature_vector.hpp"
#include "lcrf/labels.hpp"

namespace lcrf {

// Dense weight-slot numbering for the two feature-function families:
//
//   label-label     slot(i, j)        = i * Y + j           (all Y^2 pairs)
//   label-value     slot(label, pair) = Y^2 + pair * Y + label
//
// where `pair` indexes the (template, value) pairs observed in the build
// corpus, in first-occurrence order. The index is frozen once built:
// lookups of unseen values report absence instead of allocating, so
// decoding new data can never grow a model.
class FeatureIndex {
 public:
  static FeatureIndex build(std::span<const FeaturizedSentence> corpus,
                            const LabelSet& labels);

  // Rebuild from an explicit pair list (model deserialization); the pair
  // order must be the original build order for slot numbers to match.
  static FeatureIndex from_pairs(std::vector<Feature> pairs, int num_labels);

  int num_labels() const { return num_labels_; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }

  // Total slot count H.
  int size() const { return num_labels_ * num_labels_ + num_labels_ * num_pairs(); }

  // cur = label at position l, prev = label at position l-1.
  int ll_slot(int cur, int prev) const { return cur * num_labels_ + prev; }

  std::optional<int> pair_id(Template tpl, std::string_view value) const;

  int lw_slot_for_pair(int label, int pair) const {
    return num_labels_ * num_labels_ + pair * num_labels_ + label;
  }

  std::optional<int> lw_slot(int label, Template tpl, std::string_view value) const {
    auto p = pair_id(tpl, value);
    if (!p) return std::nullopt;
    return lw_slot_for_pair(label, *p);
  }

  const Feature& pair(int id) const { return pairs_[static_cast<std::size_t>(id)]; }

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using ValueMap = std::unordered_map<std::string, int, StringHash, std::equal_to<>>;

  FeatureIndex() = default;
  void insert_pair(Template tpl, const std::string& value);

  int num_labels_ = 0;
  std::vector<Feature> pairs_;                       // pair id -> (template, value)
  std::array<ValueMap, kTemplateCount> by_value_;    // per-template value -> pair id
};

}  // namespace lcrf

#endif  // LCRF_FEATURE_INDEX_HPP
