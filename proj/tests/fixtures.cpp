#include "fixtures.hpp"

#include <string>

#include "lcrf/feature_gen.hpp"
#include "lcrf/labels.hpp"

namespace fixtures {

namespace {

lcrf::ConllRecord rec(int index, std::string word, std::string pos, int head,
                      std::string deprel, std::string tag = "") {
  lcrf::ConllRecord r;
  r.index = index;
  r.word = std::move(word);
  r.pos = std::move(pos);
  r.head = head;
  r.deprel = std::move(deprel);
  if (!tag.empty()) r.tag = tag;
  return r;
}

}  // namespace

std::vector<lcrf::ConllSentence> table1_sentence() {
  lcrf::ConllSentence sent{
      rec(1, "The", "DT", 2, "det", "O"),
      rec(2, "battery", "NN", 7, "nsubj", "B-ASP"),
      rec(3, "of", "IN", 5, "case", "O"),
      rec(4, "this", "DT", 5, "det", "O"),
      rec(5, "camera", "NN", 2, "nmod", "B-ASP"),
      rec(6, "is", "VBZ", 7, "cop", "O"),
      rec(7, "great", "JJ", 0, "root", "O"),
  };
  return {sent};
}

std::vector<lcrf::ConllSentence> separable_corpus(int n_sentences, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> begin_words = {"aspect0", "aspect1", "aspect2",
                                                "aspect3", "aspect4"};
  const std::vector<std::string> inside_words = {"inside0", "inside1", "inside2"};
  const std::vector<std::string> other_words = {"the",  "works", "well",  "very",
                                                "fine", "it",    "runs",  "and",
                                                "then", "stops", "often", "badly"};
  auto pos_of = [](const std::string& w) {
    return w.starts_with("aspect") || w.starts_with("inside") ? std::string("NN")
                                                              : std::string("XX");
  };

  std::vector<lcrf::ConllSentence> corpus;
  corpus.reserve(static_cast<std::size_t>(n_sentences));
  for (int s = 0; s < n_sentences; ++s) {
    lcrf::ConllSentence sent;
    const int length = 4 + static_cast<int>(rng() % 5);
    int i = 1;
    while (i <= length) {
      bool want_aspect = (rng() % 10) < 3 || (i == 2 && sent.size() == 1 && s % 3 == 0);
      if (want_aspect && i < length) {
        const auto& bw = begin_words[rng() % begin_words.size()];
        sent.push_back(rec(i, bw, pos_of(bw), i == 1 ? 0 : i - 1, i == 1 ? "root" : "dep",
                           "B-ASP"));
        ++i;
        if (rng() % 5 < 2 && i <= length) {
          const auto& iw = inside_words[rng() % inside_words.size()];
          sent.push_back(rec(i, iw, pos_of(iw), i - 1, "dep", "I-ASP"));
          ++i;
        }
      } else {
        const auto& ow = other_words[rng() % other_words.size()];
        sent.push_back(rec(i, ow, pos_of(ow), i == 1 ? 0 : i - 1, i == 1 ? "root" : "dep",
                           "O"));
        ++i;
      }
    }
    corpus.push_back(std::move(sent));
  }
  return corpus;
}

LifelongFixture lifelong_fixture() {
  LifelongFixture fixture;

  // Aspect sentences and non-aspect sentences share every surface detail
  // except the head word, the context word, and the knowledge label their
  // nmod pattern ends up with.
  const std::vector<std::string> fillers = {"one", "two", "three", "four"};
  const int n = 12;
  for (int j = 0; j < n; ++j) {
    const std::string& fill = fillers[static_cast<std::size_t>(j) % fillers.size()];
    lcrf::ConllSentence with_aspects{
        rec(1, fill, "NN", 2, "dep", "O"),
        rec(2, "part" + std::to_string(j), "NN", 0, "root", "B-ASP"),
        rec(3, "of", "IN", 4, "case", "O"),
        rec(4, "piece" + std::to_string(j), "NN", 2, "nmod", "B-ASP"),
    };
    lcrf::ConllSentence without_aspects{
        rec(1, fill, "NN", 2, "dep", "O"),
        rec(2, "stuff" + std::to_string(j), "NN", 0, "root", "O"),
        rec(3, "of", "IN", 4, "case", "O"),
        rec(4, "thing" + std::to_string(j), "NN", 2, "nmod", "O"),
    };
    fixture.training.push_back(std::move(with_aspects));
    fixture.training.push_back(std::move(without_aspects));
  }

  fixture.new_domain.push_back(lcrf::ConllSentence{
      rec(1, "fresh0", "NN", 2, "dep", "O"),
      rec(2, "battery", "NN", 0, "root", "B-ASP"),
      rec(3, "of", "IN", 4, "case", "O"),
      rec(4, "camera", "NN", 2, "nmod", "B-ASP"),
  });
  fixture.new_domain.push_back(lcrf::ConllSentence{
      rec(1, "fresh1", "NN", 2, "dep", "O"),
      rec(2, "gizmo", "NN", 0, "root", "O"),
      rec(3, "of", "IN", 4, "case", "O"),
      rec(4, "doodad", "NN", 2, "nmod", "O"),
  });

  fixture.store.add("past-phones", {"battery", "camera", "antenna"});
  fixture.store.add("past-laptops", {"battery", "camera", "keyboard"});
  return fixture;
}

std::vector<lcrf::ConllSentence> random_records(std::mt19937_64& rng, int n_sentences,
                                                bool with_tags) {
  const std::vector<std::string> words = {"alpha", "bravo", "charlie", "delta", "echo",
                                          "foxtrot", "golf", "hotel"};
  const std::vector<std::string> pos = {"NN", "JJ", "VB", "DT"};
  const std::vector<std::string> rels = {"det", "nmod", "nsubj", "case", "dep"};
  const std::vector<std::string> tags = {"B-ASP", "I-ASP", "O"};

  std::vector<lcrf::ConllSentence> corpus;
  corpus.reserve(static_cast<std::size_t>(n_sentences));
  for (int s = 0; s < n_sentences; ++s) {
    const int length = 1 + static_cast<int>(rng() % 6);
    lcrf::ConllSentence sent;
    const int root = 1 + static_cast<int>(rng() % length);
    for (int i = 1; i <= length; ++i) {
      int head;
      std::string deprel;
      if (i == root) {
        head = 0;
        deprel = "root";
      } else {
        do {
          head = 1 + static_cast<int>(rng() % length);
        } while (head == i);
        deprel = rels[rng() % rels.size()];
      }
      sent.push_back(rec(i, words[rng() % words.size()], pos[rng() % pos.size()], head,
                         deprel, with_tags ? tags[rng() % tags.size()] : ""));
    }
    corpus.push_back(std::move(sent));
  }
  return corpus;
}

RandomInstance random_instance(std::mt19937_64& rng, int num_sentences, int max_len,
                               int max_values, bool with_gold) {
  const lcrf::LabelSet labels = lcrf::LabelSet::default_bio();
  const lcrf::Template tpls[] = {lcrf::Template::Word, lcrf::Template::Pos,
                                 lcrf::Template::DepPattern};
  const int num_values = 2 + static_cast<int>(rng() % (max_values - 1));

  std::vector<lcrf::Feature> pool;
  for (int v = 0; v < num_values; ++v) {
    pool.push_back(lcrf::Feature{tpls[rng() % 3], "v" + std::to_string(v)});
  }

  std::vector<lcrf::FeaturizedSentence> sentences;
  for (int s = 0; s < num_sentences; ++s) {
    lcrf::FeaturizedSentence sent;
    const int length = 1 + static_cast<int>(rng() % max_len);
    for (int l = 0; l < length; ++l) {
      lcrf::FeatureVector fv;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int f = 0; f < k; ++f) {
        const auto& feature = pool[rng() % pool.size()];
        fv.add(feature.tpl, feature.value);
      }
      sent.tokens.push_back(std::move(fv));
    }
    if (with_gold) {
      std::vector<int> gold;
      for (int l = 0; l < length; ++l) gold.push_back(static_cast<int>(rng() % 3));
      sent.gold = std::move(gold);
    }
    sentences.push_back(std::move(sent));
  }

  lcrf::FeatureIndex index = lcrf::FeatureIndex::build(sentences, labels);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::vector<double> weights(static_cast<std::size_t>(index.size()));
  for (auto& w : weights) w = weight(rng);
  return RandomInstance{lcrf::CrfModel{labels, std::move(index), std::move(weights), {}},
                        std::move(sentences)};
}

std::vector<lcrf::ParsedSentence> random_parsed_sentences(std::mt19937_64& rng,
                                                          int n_sentences) {
  auto records = random_records(rng, n_sentences, /*with_tags=*/false);
  return lcrf::records_to_corpus(records, "random").sentences;
}

lcrf::CrfModel train_on_records(const std::vector<lcrf::ConllSentence>& records,
                                const lcrf::TrainConfig& config,
                                std::set<std::string>* train_aspects_out) {
  const lcrf::LabelSet labels = lcrf::LabelSet::default_bio();
  lcrf::Corpus corpus = lcrf::records_to_corpus(records, "train");
  std::set<std::string> train_aspects = lcrf::extract_training_aspects(corpus);
  auto featurized =
      lcrf::featurize_corpus(corpus.sentences, lcrf::tokens_of_aspects(train_aspects), labels);
  lcrf::CrfModel model = lcrf::train(featurized, labels, config);
  if (train_aspects_out) *train_aspects_out = std::move(train_aspects);
  return model;
}

std::vector<lcrf::ConllSentence> strip_tags(std::vector<lcrf::ConllSentence> records) {
  for (auto& sent : records) {
    for (auto& r : sent) r.tag.reset();
  }
  return records;
}

}  // namespace fixtures
