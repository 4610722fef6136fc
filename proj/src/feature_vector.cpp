#include "lcrf/feature_vector.hpp"

#include <algorithm>

namespace lcrf {

namespace {
constexpr std::array<std::string_view, kTemplateCount> kTemplateNames = {
    "W", "-1W", "+1W", "P", "-1P", "+1P", "G"};
}

std::string_view template_name(Template t) {
  return kTemplateNames[static_cast<std::size_t>(t)];
}

std::optional<Template> template_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTemplateNames.size(); ++i) {
    if (kTemplateNames[i] == name) return static_cast<Template>(i);
  }
  return std::nullopt;
}

void FeatureVector::add(Template tpl, std::string value) {
  Feature f{tpl, std::move(value)};
  auto pos = std::lower_bound(active_.begin(), active_.end(), f);
  if (pos != active_.end() && *pos == f) return;  // set semantics
  active_.insert(pos, std::move(f));
}

}  // namespace lcrf
