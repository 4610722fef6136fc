#include "lcrf/spans.hpp"

#include "lcrf/util.hpp"

namespace lcrf {

std::vector<Span> spans_from_tags(std::span<const std::string> tags) {
  std::vector<Span> spans;
  Span open;
  bool in_span = false;

  auto close = [&]() {
    if (in_span) {
      spans.push_back(open);
      in_span = false;
    }
  };

  for (int l = 0; l < static_cast<int>(tags.size()); ++l) {
    const std::string& tag = tags[static_cast<std::size_t>(l)];
    if (tag.size() > 2 && tag[1] == '-' && (tag[0] == 'B' || tag[0] == 'I')) {
      std::string type = tag.substr(2);
      bool continues = tag[0] == 'I' && in_span && open.type == type && open.end == l;
      if (continues) {
        open.end = l + 1;
      } else {
        close();
        open = Span{l, l + 1, std::move(type)};
        in_span = true;
      }
    } else {
      close();
    }
  }
  close();
  return spans;
}

std::set<std::string> aspect_phrases(std::span<const std::string> words,
                                     std::span<const std::string> tags) {
  std::set<std::string> phrases;
  for (const auto& span : spans_from_tags(tags)) {
    std::string phrase;
    for (int l = span.start; l < span.end; ++l) {
      if (!phrase.empty()) phrase += ' ';
      phrase += to_lower(words[static_cast<std::size_t>(l)]);
    }
    phrases.insert(std::move(phrase));
  }
  return phrases;
}

}  // namespace lcrf
