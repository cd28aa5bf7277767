#pragma once

#include "trilie/deform.hpp"
#include "trilie/errors.hpp"
#include "trilie/induce.hpp"
#include "trilie/nslie.hpp"
#include "trilie/structures.hpp"
#include "trilie/twistop.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trilie {

inline constexpr int kFormatVersion = 1;

using Object = std::variant<LieAlgebra, ThreeLieAlgebra, RepresentationLie, Representation3, TwoCocycleLie, TwoCocycle3,
                            LinearMap, TraceMap, TwistedOperator, LieTwistedOperator, ThreeNSLieAlgebra, NSLieAlgebra,
                            DeformationFamily, EquivalencePair>;

/// File-format kind tag: "lie", "3lie", "rep_lie", "rep3", "cocycle_lie",
/// "cocycle3", "linmap", "trace", "twisted_op", "twisted_op_lie", "3ns", "ns",
/// "deformation_family", "equivalence_pair".
std::string_view kind_name(const Object& object);

struct Entry {
  std::string name;
  Object value;
  /// Field -> referenced object name, kept so serialization writes references
  /// back instead of inlining. Keys are field names ("algebra", "map", ...) or
  /// "terms.<i>" for family terms.
  std::map<std::string, std::string> refs;
};

class Workspace {
 public:
  /// Throws ParseError on a duplicate name.
  void add(std::string name, Object value, std::map<std::string, std::string> refs = {});
  [[nodiscard]] bool contains(std::string_view name) const;
  /// Throws UnresolvedReference.
  [[nodiscard]] const Entry& entry(std::string_view name) const;
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  /// Throws UnresolvedReference when missing or of another kind.
  template <class T>
  [[nodiscard]] const T& get(std::string_view name) const {
    const Entry& e = entry(name);
    if (const T* p = std::get_if<T>(&e.value)) return *p;
    throw UnresolvedReference("object '" + std::string(name) + "' has kind " + std::string(kind_name(e.value)));
  }

  /// Same names, kinds and values in the same order; refs are ignored.
  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  std::vector<Entry> entries_;
};

/// Reads every file, then resolves references across all of them.
/// Throws ParseError, UnresolvedReference or ShapeMismatch.
Workspace parse_workspace(const std::vector<std::filesystem::path>& files);
/// Same for in-memory documents; `sources` name them in error locations.
Workspace parse_workspace_texts(const std::vector<std::string>& texts, const std::vector<std::string>& sources);
Workspace parse_workspace_text(const std::string& text, const std::string& source = "<input>");

/// Canonical document: nonzero entries only, fixed field order, rationals as
/// "p/q" strings.
std::string serialize_workspace(const Workspace& ws);
void write_workspace(const Workspace& ws, const std::filesystem::path& path);

}  // namespace trilie
