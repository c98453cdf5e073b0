#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "altdesc/bigint.hpp"

namespace altdesc {

enum class Family { A, B, Bminus, Bplus, P, Q, E, S };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);

/// File-backed table of computed values keyed by (family, n). Polynomial
/// families store coefficient vectors, E and S a single integer.
///
/// On disk: {"format_version":1,"entries":[{"family":"A","n":3,"values":["2","2","2"]},...]}
/// with decimal-string integers. A file with another format version is
/// ignored and rewritten on save().
class TableCache {
 public:
  static constexpr int kFormatVersion = 1;

  /// Loads `path` if it exists. Throws std::runtime_error on a malformed file.
  explicit TableCache(std::filesystem::path path);

  std::optional<std::vector<BigInt>> get(Family f, int n) const;
  void put(Family f, int n, std::vector<BigInt> values);

  /// Writes atomically (temp file + rename) while holding an exclusive
  /// "<path>.lock" file; throws std::runtime_error if another writer holds it.
  void save() const;

  std::size_t size() const;
  /// True when an existing file was discarded because of a version mismatch.
  bool invalidated() const { return invalidated_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  bool invalidated_ = false;
  mutable std::mutex mu_;
  std::map<std::pair<Family, int>, std::vector<BigInt>> entries_;
};

}  // namespace altdesc
