#include "lcrf/model_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lcrf/errors.hpp"
#include "lcrf/util.hpp"

namespace lcrf {

namespace {

constexpr std::string_view kMagic = "lcrf-model 1";

// 17 significant digits: enough for strtod to reproduce the exact double.
std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

double parse_weight(const std::string& field, const std::string& path) {
  char* end = nullptr;
  double w = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || field.empty()) {
    throw LoadError(path + ": invalid weight '" + field + "'");
  }
  return w;
}

std::string expect_line(std::istream& in, const std::string& path, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw LoadError(path + ": truncated model file (missing " + what + ")");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> expect_tagged(std::istream& in, const std::string& path,
                                       const char* tag) {
  auto fields = split_on(expect_line(in, path, tag), '\t');
  if (fields.empty() || fields[0] != tag) {
    throw LoadError(path + ": expected '" + tag + "' header line");
  }
  fields.erase(fields.begin());
  return fields;
}

}  // namespace

void save_model(const CrfModel& model, std::ostream& out) {
  const int Y = model.labels.size();
  out << kMagic << '\n';
  out << "labels";
  for (const auto& name : model.labels.names()) out << '\t' << name;
  out << '\n';
  out << "templates";
  for (int t = 0; t < kTemplateCount; ++t) {
    out << '\t' << template_name(static_cast<Template>(t));
  }
  out << '\n';
  out << "slots\t" << model.index.size() << '\n';
  out << "config\tl2=" << format_weight(model.config.l2)
      << "\ttol=" << format_weight(model.config.tol)
      << "\tmax_iters=" << model.config.max_iters << '\n';

  // one record per slot, in slot order
  for (int cur = 0; cur < Y; ++cur) {
    for (int prev = 0; prev < Y; ++prev) {
      out << "LL\t" << model.labels.name(prev) << '\t' << model.labels.name(cur)
          << '\t'
          << format_weight(model.weights[static_cast<std::size_t>(model.index.ll_slot(cur, prev))])
          << '\n';
    }
  }
  for (int p = 0; p < model.index.num_pairs(); ++p) {
    const Feature& pair = model.index.pair(p);
    for (int label = 0; label < Y; ++label) {
      out << template_name(pair.tpl) << '\t' << pair.value << '\t'
          << model.labels.name(label) << '\t'
          << format_weight(
                 model.weights[static_cast<std::size_t>(model.index.lw_slot_for_pair(label, p))])
          << '\n';
    }
  }
}

void save_model_file(const CrfModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write model file: " + path.string());
  }
  save_model(model, out);
  out.flush();
  if (!out) {
    throw DataError("failed writing model file: " + path.string());
  }
}

CrfModel load_model(std::istream& in, const std::string& path) {
  if (expect_line(in, path, "header") != kMagic) {
    throw LoadError(path + ": not a model file (bad header)");
  }

  auto label_names = expect_tagged(in, path, "labels");
  LabelSet labels = [&]() -> LabelSet {
    try {
      return LabelSet(label_names);
    } catch (const ConfigError& e) {
      throw LoadError(path + ": " + e.what());
    }
  }();
  const int Y = labels.size();

  auto templates = expect_tagged(in, path, "templates");
  if (static_cast<int>(templates.size()) != kTemplateCount) {
    throw LoadError(path + ": unexpected template list");
  }
  for (int t = 0; t < kTemplateCount; ++t) {
    if (templates[static_cast<std::size_t>(t)] != template_name(static_cast<Template>(t))) {
      throw LoadError(path + ": unexpected template '" +
                      templates[static_cast<std::size_t>(t)] + "'");
    }
  }

  auto slot_fields = expect_tagged(in, path, "slots");
  if (slot_fields.size() != 1) {
    throw LoadError(path + ": malformed slots line");
  }
  const long H = std::strtol(slot_fields[0].c_str(), nullptr, 10);
  if (H < Y * Y || (H - Y * Y) % Y != 0) {
    throw LoadError(path + ": slot count " + slot_fields[0] +
                    " is inconsistent with " + std::to_string(Y) + " labels");
  }

  auto config_fields = expect_tagged(in, path, "config");
  TrainConfig config;
  for (const auto& field : config_fields) {
    auto eq = field.find('=');
    if (eq == std::string::npos) {
      throw LoadError(path + ": malformed config entry '" + field + "'");
    }
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "l2") {
      config.l2 = parse_weight(value, path);
    } else if (key == "tol") {
      config.tol = parse_weight(value, path);
    } else if (key == "max_iters") {
      config.max_iters = static_cast<int>(std::strtol(value.c_str(), nullptr, 10));
    } else {
      throw LoadError(path + ": unknown config key '" + key + "'");
    }
  }

  std::vector<double> weights(static_cast<std::size_t>(H), 0.0);
  std::vector<Feature> pairs;

  // Y*Y transition records, in slot order.
  for (int cur = 0; cur < Y; ++cur) {
    for (int prev = 0; prev < Y; ++prev) {
      auto fields = split_on(expect_line(in, path, "LL record"), '\t');
      if (fields.size() != 4 || fields[0] != "LL" || fields[1] != labels.name(prev) ||
          fields[2] != labels.name(cur)) {
        throw LoadError(path + ": malformed or out-of-order LL record");
      }
      weights[static_cast<std::size_t>(cur * Y + prev)] = parse_weight(fields[3], path);
    }
  }
  // Observation records: Y consecutive lines per (template, value) pair.
  const long num_pairs = (H - Y * Y) / Y;
  pairs.reserve(static_cast<std::size_t>(num_pairs));
  for (long p = 0; p < num_pairs; ++p) {
    for (int label = 0; label < Y; ++label) {
      auto fields = split_on(expect_line(in, path, "feature record"), '\t');
      if (fields.size() != 4) {
        throw LoadError(path + ": malformed feature record");
      }
      auto tpl = template_from_name(fields[0]);
      if (!tpl) {
        throw LoadError(path + ": unknown template '" + fields[0] + "'");
      }
      if (labels.index_of(fields[2]) != label) {
        throw LoadError(path + ": out-of-order feature record for value '" + fields[1] + "'");
      }
      if (label == 0) {
        pairs.push_back(Feature{*tpl, fields[1]});
      } else if (pairs.back().tpl != *tpl || pairs.back().value != fields[1]) {
        throw LoadError(path + ": feature records for '" + fields[1] + "' are not grouped");
      }
      weights[static_cast<std::size_t>(Y * Y + p * Y + label)] = parse_weight(fields[3], path);
    }
  }

  std::string extra;
  if (std::getline(in, extra) && !extra.empty()) {
    throw LoadError(path + ": trailing content after the last feature record");
  }

  FeatureIndex index = FeatureIndex::from_pairs(std::move(pairs), Y);
  return CrfModel{std::move(labels), std::move(index), std::move(weights), config};
}

CrfModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open model file: " + path.string());
  }
  return load_model(in, path.string());
}

void save_aspects(const std::set<std::string>& aspects,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write aspect file: " + path.string());
  }
  for (const auto& aspect : aspects) out << aspect << '\n';
}

std::set<std::string> load_aspects(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open aspect file: " + path.string());
  }
  std::set<std::string> aspects;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) aspects.insert(to_lower(line));
  }
  return aspects;
}

}  // namespace lcrf
