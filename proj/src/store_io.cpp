#include "lcrf/store_io.hpp"

#include <fstream>
#include <ostream>

#include "lcrf/errors.hpp"
#include "lcrf/util.hpp"

namespace lcrf {

namespace {

constexpr char kUnitSeparator = '\x1f';

void check_text(const std::string& s, const char* what) {
  if (s.find('\t') != std::string::npos || s.find('\n') != std::string::npos ||
      s.find(kUnitSeparator) != std::string::npos) {
    throw ContractViolation(std::string(what) + " contains a reserved separator byte: " + s);
  }
}

}  // namespace

void save_store(const AspectStore& store, std::ostream& out) {
  for (const auto& entry : store.entries()) {
    check_text(entry.domain_id, "domain id");
    out << entry.domain_id << '\t';
    bool first = true;
    for (const auto& aspect : entry.aspects) {
      check_text(aspect, "aspect");
      if (!first) out << kUnitSeparator;
      first = false;
      out << aspect;
    }
    out << '\n';
  }
}

void save_store_file(const AspectStore& store, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot write store file: " + path.string());
  }
  save_store(store, out);
}

AspectStore load_store(std::istream& in, const std::string& path) {
  AspectStore store;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path, line_no, "store line has no tab separator");
    }
    std::string domain_id = line.substr(0, tab);
    if (domain_id.empty()) {
      throw ParseError(path, line_no, "empty domain id");
    }
    std::set<std::string> aspects;
    std::string rest = line.substr(tab + 1);
    if (!rest.empty()) {
      for (auto& aspect : split_on(rest, kUnitSeparator)) {
        if (aspect.empty()) {
          throw ParseError(path, line_no, "empty aspect entry");
        }
        aspects.insert(std::move(aspect));
      }
    }
    if (store.contains(domain_id)) {
      throw ParseError(path, line_no, "duplicate domain id '" + domain_id + "'");
    }
    store.add(std::move(domain_id), std::move(aspects));
  }
  return store;
}

AspectStore load_store_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open store file: " + path.string());
  }
  return load_store(in, path.string());
}

}  // namespace lcrf
