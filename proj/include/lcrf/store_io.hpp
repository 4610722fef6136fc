#ifndef LCRF_STORE_IO_HPP
#define LCRF_STORE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lcrf/lifelong.hpp"

namespace lcrf {

// One line per domain: `domain-id<TAB>aspect1<US>aspect2...` with the
// 0x1F unit separator between aspects (sorted). UTF-8 throughout.
void save_store(const AspectStore& store, std::ostream& out);
void save_store_file(const AspectStore& store, const std::filesystem::path& path);

AspectStore load_store(std::istream& in, const std::string& path_for_errors);
AspectStore load_store_file(const std::filesystem::path& path);

}  // namespace lcrf

#endif  // LCRF_STORE_IO_HPP
