#ifndef LCRF_CONLL_HPP
#define LCRF_CONLL_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lcrf/sentence.hpp"

namespace lcrf {

// One token line of the tab-separated input format:
//   index  word  pos  head  deprel  [tag]
// index is 1-based and contiguous within a sentence; head is a 1-based
// token reference with 0 meaning the root.
struct ConllRecord {
  int index = 0;
  std::string word;
  std::string pos;
  int head = 0;
  std::string deprel;
  std::optional<std::string> tag;

  bool operator==(const ConllRecord&) const = default;
};

using ConllSentence = std::vector<ConllRecord>;

struct Corpus {
  std::vector<ParsedSentence> sentences;
  bool labeled = false;  // true iff every sentence carries gold tags
  std::string domain_id;
};

std::vector<ConllSentence> parse_conll(std::istream& in, const std::string& path,
                                       bool expect_labels);
std::vector<ConllSentence> parse_conll_file(const std::filesystem::path& path,
                                            bool expect_labels);

// Reconstruct per-token dependency relations from the head/deprel
// columns: each arc is attached to both endpoints; the root arc is
// attached to the root token only, with governor word ROOT and the
// governor POS copied from the root token itself.
Corpus records_to_corpus(std::span<const ConllSentence> records,
                         std::string domain_id);

// Parse + reconstruct. domain_id defaults to the file stem.
Corpus read_conll(const std::filesystem::path& path, bool expect_labels,
                  std::string domain_id = "");

void write_conll(std::span<const ConllSentence> records, std::ostream& out);
void write_conll_file(std::span<const ConllSentence> records,
                      const std::filesystem::path& path);

// Lowercase aspect phrases of the gold BIO spans, deduplicated.
std::set<std::string> extract_training_aspects(const Corpus& corpus);

}  // namespace lcrf

#endif  // LCRF_CONLL_HPP
