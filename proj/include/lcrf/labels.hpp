#ifndef LCRF_LABELS_HPP
#define LCRF_LABELS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace lcrf {

// Ordered set of tag names. The ordering is stable and doubles as the
// tie-break priority during decoding (lower index wins).
class LabelSet {
 public:
  explicit LabelSet(std::vector<std::string> names);

  // {B-ASP, I-ASP, O}
  static LabelSet default_bio();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  // -1 when absent.
  int index_of(std::string_view name) const;

  bool operator==(const LabelSet&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace lcrf

#endif  // LCRF_LABELS_HPP
