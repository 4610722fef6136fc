#include "lcrf/conll.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lcrf/errors.hpp"
#include "lcrf/feature_gen.hpp"
#include "lcrf/spans.hpp"
#include "lcrf/util.hpp"

namespace lcrf {

namespace {

int parse_int(const std::string& field, const std::string& path, long line,
              const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(path, line, std::string("invalid ") + what + ": '" + field + "'");
  }
  return value;
}

void check_field_text(const std::string& field, const std::string& path, long line,
                      const char* what) {
  if (field.empty()) {
    throw ParseError(path, line, std::string("empty ") + what + " field");
  }
  if (field == kBosSentinel || field == kEosSentinel) {
    throw ParseError(path, line,
                     std::string(what) + " uses the reserved sentinel '" + field + "'");
  }
}

// Tokens of one sentence sit on consecutive lines, so the record at
// offset i was read from first_line + i.
void finish_sentence(std::vector<ConllSentence>& sentences, ConllSentence& current,
                     const std::string& path, long first_line) {
  if (current.empty()) return;
  const int n = static_cast<int>(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) {
    const auto& rec = current[i];
    const long line = first_line + static_cast<long>(i);
    if (rec.head < 0 || rec.head > n) {
      throw ParseError(path, line, "head " + std::to_string(rec.head) +
                                       " out of range for a " + std::to_string(n) +
                                       "-token sentence");
    }
    if (rec.head == rec.index) {
      throw ParseError(path, line, "token " + std::to_string(rec.index) +
                                       " cannot be its own head");
    }
  }
  sentences.push_back(std::move(current));
  current.clear();
}

}  // namespace

std::vector<ConllSentence> parse_conll(std::istream& in, const std::string& path,
                                       bool expect_labels) {
  std::vector<ConllSentence> sentences;
  ConllSentence current;
  std::string line;
  long line_no = 0;
  long sentence_start = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(sentences, current, path, sentence_start);
      continue;
    }
    if (current.empty()) sentence_start = line_no;

    auto fields = split_on(line, '\t');
    if (fields.size() != 5 && fields.size() != 6) {
      throw ParseError(path, line_no,
                       "expected 5 or 6 tab-separated columns, got " +
                           std::to_string(fields.size()));
    }
    if (expect_labels && fields.size() != 6) {
      throw ParseError(path, line_no, "missing gold tags in a labeled corpus");
    }
    if (!current.empty() && (current[0].tag.has_value() != (fields.size() == 6))) {
      throw ParseError(path, line_no,
                       "tag column must be present on every token of a sentence or none");
    }

    ConllRecord rec;
    rec.index = parse_int(fields[0], path, line_no, "token index");
    rec.word = fields[1];
    rec.pos = fields[2];
    rec.head = parse_int(fields[3], path, line_no, "head index");
    rec.deprel = fields[4];
    check_field_text(rec.word, path, line_no, "word");
    check_field_text(rec.pos, path, line_no, "POS");
    check_field_text(rec.deprel, path, line_no, "deprel");
    if (fields.size() == 6) {
      check_field_text(fields[5], path, line_no, "tag");
      rec.tag = fields[5];
    }
    if (rec.index != static_cast<int>(current.size()) + 1) {
      throw ParseError(path, line_no,
                       "non-contiguous token index " + std::to_string(rec.index) +
                           " (expected " + std::to_string(current.size() + 1) + ")");
    }
    current.push_back(std::move(rec));
  }
  finish_sentence(sentences, current, path, sentence_start);
  return sentences;
}

std::vector<ConllSentence> parse_conll_file(const std::filesystem::path& path,
                                            bool expect_labels) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open corpus file: " + path.string());
  }
  return parse_conll(in, path.string(), expect_labels);
}

Corpus records_to_corpus(std::span<const ConllSentence> records,
                         std::string domain_id) {
  Corpus corpus;
  corpus.domain_id = std::move(domain_id);
  corpus.labeled = !records.empty();

  for (const auto& record_sent : records) {
    ParsedSentence sent;
    sent.tokens.reserve(record_sent.size());
    bool has_tags = true;
    for (const auto& rec : record_sent) {
      sent.tokens.push_back(ParsedToken{rec.word, rec.pos, {}});
      has_tags = has_tags && rec.tag.has_value();
    }
    // Attach every arc to both endpoints; root arcs only to the root
    // token, with the token's own POS as the governor POS.
    for (const auto& rec : record_sent) {
      const std::size_t dep_idx = static_cast<std::size_t>(rec.index - 1);
      if (rec.head == 0) {
        sent.tokens[dep_idx].relations.push_back(DependencyRelation{
            rec.deprel, "ROOT", rec.pos, rec.word, rec.pos});
      } else {
        const std::size_t gov_idx = static_cast<std::size_t>(rec.head - 1);
        DependencyRelation rel{rec.deprel, record_sent[gov_idx].word,
                               record_sent[gov_idx].pos, rec.word, rec.pos};
        sent.tokens[gov_idx].relations.push_back(rel);
        if (dep_idx != gov_idx) {
          sent.tokens[dep_idx].relations.push_back(std::move(rel));
        }
      }
    }
    if (has_tags) {
      std::vector<std::string> tags;
      tags.reserve(record_sent.size());
      for (const auto& rec : record_sent) tags.push_back(*rec.tag);
      sent.gold_tags = std::move(tags);
    } else {
      corpus.labeled = false;
    }
    corpus.sentences.push_back(std::move(sent));
  }
  return corpus;
}

Corpus read_conll(const std::filesystem::path& path, bool expect_labels,
                  std::string domain_id) {
  auto records = parse_conll_file(path, expect_labels);
  if (domain_id.empty()) domain_id = path.stem().string();
  return records_to_corpus(records, std::move(domain_id));
}

void write_conll(std::span<const ConllSentence> records, std::ostream& out) {
  bool first = true;
  for (const auto& sent : records) {
    if (!first) out << '\n';
    first = false;
    for (const auto& rec : sent) {
      out << rec.index << '\t' << rec.word << '\t' << rec.pos << '\t' << rec.head
          << '\t' << rec.deprel;
      if (rec.tag) out << '\t' << *rec.tag;
      out << '\n';
    }
  }
}

void write_conll_file(std::span<const ConllSentence> records,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write corpus file: " + path.string());
  }
  write_conll(records, out);
}

std::set<std::string> extract_training_aspects(const Corpus& corpus) {
  if (!corpus.labeled) {
    throw ContractViolation("cannot extract training aspects from an unlabeled corpus");
  }
  std::set<std::string> aspects;
  for (const auto& sent : corpus.sentences) {
    std::vector<std::string> words;
    words.reserve(sent.tokens.size());
    for (const auto& token : sent.tokens) words.push_back(token.word);
    auto sent_phrases = aspect_phrases(words, *sent.gold_tags);
    aspects.merge(sent_phrases);
  }
  return aspects;
}

}  // namespace lcrf
