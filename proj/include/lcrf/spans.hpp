#ifndef LCRF_SPANS_HPP
#define LCRF_SPANS_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

namespace lcrf {

// Half-open token span [start, end) with its BIO type (e.g. "ASP").
struct Span {
  int start = 0;
  int end = 0;
  std::string type;

  auto operator<=>(const Span&) const = default;
};

// Decode BIO tags into spans. "B-X" opens a span, "I-X" extends a span
// of the same type; an I without a matching open span starts a new one
// (orphan repair). Anything else closes.
std::vector<Span> spans_from_tags(std::span<const std::string> tags);

// Lowercase phrases covered by the spans of a tag sequence.
std::set<std::string> aspect_phrases(std::span<const std::string> words,
                                     std::span<const std::string> tags);

}  // namespace lcrf

#endif  // LCRF_SPANS_HPP
