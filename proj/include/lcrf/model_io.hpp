#ifndef LCRF_MODEL_IO_HPP
#define LCRF_MODEL_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

#include "lcrf/crf.hpp"

namespace lcrf {

// Self-describing flat text format: a header (label set, template list,
// slot count, training config) followed by one record per weight slot.
// Weights are written with 17 significant digits so a round trip
// reproduces decoding bit-exactly.
void save_model(const CrfModel& model, std::ostream& out);
void save_model_file(const CrfModel& model, const std::filesystem::path& path);

CrfModel load_model(std::istream& in, const std::string& path_for_errors);
CrfModel load_model_file(const std::filesystem::path& path);

// Sidecar with the training-data aspect set K^t: one phrase per line.
void save_aspects(const std::set<std::string>& aspects,
                  const std::filesystem::path& path);
std::set<std::string> load_aspects(const std::filesystem::path& path);

}  // namespace lcrf

#endif  // LCRF_MODEL_IO_HPP
