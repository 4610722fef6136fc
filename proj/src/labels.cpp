#include "lcrf/labels.hpp"

#include <unordered_set>

#include "lcrf/errors.hpp"

namespace lcrf {

LabelSet::LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw ConfigError("label set must not be empty");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw ConfigError("label names must not be empty");
    }
    if (!seen.insert(name).second) {
      throw ConfigError("duplicate label name: " + name);
    }
  }
}

LabelSet LabelSet::default_bio() {
  return LabelSet({"B-ASP", "I-ASP", "O"});
}

int LabelSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace lcrf
