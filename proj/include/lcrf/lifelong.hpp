#ifndef LCRF_LIFELONG_HPP
#define LCRF_LIFELONG_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcrf/crf.hpp"
#include "lcrf/knowledge.hpp"
#include "lcrf/sentence.hpp"

namespace lcrf {

// Per-domain extraction results retained from previously processed
// domains. Order is the order domains were processed in.
class AspectStore {
 public:
  struct Entry {
    std::string domain_id;
    std::set<std::string> aspects;  // lowercase phrases

    bool operator==(const Entry&) const = default;
  };

  bool contains(std::string_view domain_id) const;
  void add(std::string domain_id, std::set<std::string> aspects);
  void remove(std::string_view domain_id);

  const std::vector<Entry>& entries() const { return entries_; }
  bool operator==(const AspectStore&) const = default;

 private:
  std::vector<Entry> entries_;
};

struct LifelongConfig {
  int lambda = 2;     // aspect is reliable when it appears in >= lambda domains
  int max_iters = 10; // safety cap on the fixpoint loop
};

struct LifelongResult {
  std::set<std::string> aspects;                   // final extraction
  int iterations = 0;
  std::vector<std::set<std::string>> k_history;    // mined reliable set per iteration
  bool converged = false;
};

// Aspect phrases appearing in at least lambda distinct store entries;
// multiplicity within one domain does not count.
std::set<std::string> mine_frequent_aspects(const AspectStore& store, int lambda);

// Featurize with kb, Viterbi-decode, and collect the extracted phrases.
std::set<std::string> extract_aspects(const CrfModel& model,
                                      std::span<const ParsedSentence> domain,
                                      const KnowledgeBase& kb);

// The lifelong extraction loop: extract, retain, mine, re-featurize, until
// the mined reliable set reaches a fixpoint (or a cycle / the iteration cap
// ends the loop with converged=false). On return the store holds exactly
// one entry for domain_id: the last extraction.
LifelongResult lifelong_extract(const CrfModel& model,
                                std::span<const ParsedSentence> domain,
                                std::string_view domain_id, AspectStore& store,
                                const std::set<std::string>& train_aspects,
                                const LifelongConfig& config);

// Same loop, additionally reporting the decoded tags of the final
// iteration (what the final aspects were read off of).
struct LifelongRun {
  LifelongResult result;
  std::vector<std::vector<std::string>> final_tags;
};

LifelongRun lifelong_extract_detailed(const CrfModel& model,
                                      std::span<const ParsedSentence> domain,
                                      std::string_view domain_id, AspectStore& store,
                                      const std::set<std::string>& train_aspects,
                                      const LifelongConfig& config);

// One decoding pass over a domain with a fixed knowledge base.
std::vector<std::vector<std::string>> decode_domain(const CrfModel& model,
                                                    std::span<const ParsedSentence> domain,
                                                    const KnowledgeBase& kb);

}  // namespace lcrf

#endif  // LCRF_LIFELONG_HPP
