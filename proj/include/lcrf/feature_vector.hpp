#ifndef LCRF_FEATURE_VECTOR_HPP
#define LCRF_FEATURE_VECTOR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcrf {

// The observation templates of one token: the word and POS of the token
// itself and of its neighbours, plus the generalized dependency pattern.
// All but DepPattern carry at most one value per token; DepPattern is
// multi-valued.
enum class Template : std::uint8_t {
  Word,
  PrevWord,
  NextWord,
  Pos,
  PrevPos,
  NextPos,
  DepPattern,
};

inline constexpr int kTemplateCount = 7;

std::string_view template_name(Template t);
std::optional<Template> template_from_name(std::string_view name);

struct Feature {
  Template tpl;
  std::string value;

  auto operator<=>(const Feature&) const = default;
};

// Set of active (template, value) pairs at one token position, kept
// sorted so downstream iteration is deterministic.
class FeatureVector {
 public:
  void add(Template tpl, std::string value);
  const std::vector<Feature>& active() const { return active_; }
  bool empty() const { return active_.empty(); }

  bool operator==(const FeatureVector&) const = default;

 private:
  std::vector<Feature> active_;
};

struct FeaturizedSentence {
  std::vector<FeatureVector> tokens;
  std::optional<std::vector<int>> gold;  // label indices, same length

  int length() const { return static_cast<int>(tokens.size()); }
};

}  // namespace lcrf

#endif  // LCRF_FEATURE_VECTOR_HPP
