#include "lcrf/feature_index.hpp"

#include "lcrf/errors.hpp"

namespace lcrf {

void FeatureIndex::insert_pair(Template tpl, const std::string& value) {
  auto& map = by_value_[static_cast<std::size_t>(tpl)];
  if (map.find(value) != map.end()) return;
  int id = static_cast<int>(pairs_.size());
  pairs_.push_back(Feature{tpl, value});
  map.emplace(value, id);
}

FeatureIndex FeatureIndex::build(std::span<const FeaturizedSentence> corpus,
                                 const LabelSet& labels) {
  if (corpus.empty()) {
    throw ConfigError("cannot build a feature index from an empty corpus");
  }
  FeatureIndex index;
  index.num_labels_ = labels.size();
  for (const auto& sent : corpus) {
    for (const auto& token : sent.tokens) {
      for (const auto& feature : token.active()) {
        index.insert_pair(feature.tpl, feature.value);
      }
    }
  }
  return index;
}

FeatureIndex FeatureIndex::from_pairs(std::vector<Feature> pairs, int num_labels) {
  FeatureIndex index;
  index.num_labels_ = num_labels;
  for (auto& pair : pairs) {
    auto& map = index.by_value_[static_cast<std::size_t>(pair.tpl)];
    int id = static_cast<int>(index.pairs_.size());
    if (!map.emplace(pair.value, id).second) {
      throw LoadError("duplicate feature record: " +
                      std::string(template_name(pair.tpl)) + " " + pair.value);
    }
    index.pairs_.push_back(std::move(pair));
  }
  return index;
}

std::optional<int> FeatureIndex::pair_id(Template tpl, std::string_view value) const {
  const auto& map = by_value_[static_cast<std::size_t>(tpl)];
  auto it = map.find(value);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace lcrf
