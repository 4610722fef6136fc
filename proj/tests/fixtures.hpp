// Shared corpus builders for the unit and acceptance suites.

#ifndef LCRF_TESTS_FIXTURES_HPP
#define LCRF_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lcrf/conll.hpp"
#include "lcrf/crf.hpp"
#include "lcrf/lifelong.hpp"

namespace fixtures {

// "The battery of this camera is great", parsed. Token 2 (battery)
// participates in exactly three arcs: nsubj, det, nmod.
std::vector<lcrf::ConllSentence> table1_sentence();

// A corpus whose token labels are uniquely determined by the word
// itself: training should drive it to 100% token accuracy.
std::vector<lcrf::ConllSentence> separable_corpus(int n_sentences, std::uint64_t seed);

// Training data plus a disjoint-vocabulary new domain where the two gold
// aspects (battery, camera) can only be recognized through an
// aspect-labeled nmod pattern, and a store of two past domains that both
// contain them.
struct LifelongFixture {
  std::vector<lcrf::ConllSentence> training;
  std::vector<lcrf::ConllSentence> new_domain;  // labeled for evaluation
  lcrf::AspectStore store;
};
LifelongFixture lifelong_fixture();

// Random but valid record corpora for round-trip checks.
std::vector<lcrf::ConllSentence> random_records(std::mt19937_64& rng, int n_sentences,
                                                bool with_tags);

// A random small model over a bounded feature-value pool, with sentences
// drawn from the same pool (plus room for unseen values in callers).
struct RandomInstance {
  lcrf::CrfModel model;
  std::vector<lcrf::FeaturizedSentence> sentences;
};
RandomInstance random_instance(std::mt19937_64& rng, int num_sentences, int max_len,
                               int max_values, bool with_gold);

std::vector<lcrf::ParsedSentence> random_parsed_sentences(std::mt19937_64& rng,
                                                          int n_sentences);

// featurize + train with the corpus's own gold aspects as knowledge,
// mirroring the training phase of the tool.
lcrf::CrfModel train_on_records(const std::vector<lcrf::ConllSentence>& records,
                                const lcrf::TrainConfig& config,
                                std::set<std::string>* train_aspects_out = nullptr);

std::vector<lcrf::ConllSentence> strip_tags(std::vector<lcrf::ConllSentence> records);

}  // namespace fixtures

#endif  // LCRF_TESTS_FIXTURES_HPP
