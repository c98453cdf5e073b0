#include "altdesc/table_cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace altdesc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::A, "A"},
    {Family::B, "B"},
    {Family::Bminus, "Bminus"},
    {Family::Bplus, "Bplus"},
    {Family::P, "P"},
    {Family::Q, "Q"},
    {Family::E, "E"},
    {Family::S, "S"},
}};

// Removes the lock file when the writer is done.
class LockFile {
 public:
  explicit LockFile(std::filesystem::path path) : path_(std::move(path)) {
    fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd_ < 0) {
      throw std::runtime_error("cannot lock table cache " + path_.string() + ": " +
                               std::strerror(errno));
    }
  }
  ~LockFile() {
    ::close(fd_);
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;

 private:
  std::filesystem::path path_;
  int fd_ = -1;
};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (const auto& [fam, name] : kNames) {
    if (name == s) return fam;
  }
  return std::nullopt;
}

TableCache::TableCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("table cache " + path_.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.value("format_version", -1) != kFormatVersion) {
    invalidated_ = true;
    return;
  }
  try {
    for (const auto& e : doc.at("entries")) {
      const auto fam = parse_family(e.at("family").get<std::string>());
      if (!fam) throw std::runtime_error("unknown family");
      std::vector<BigInt> values;
      for (const auto& v : e.at("values")) values.emplace_back(v.get<std::string>(), 10);
      entries_[{*fam, e.at("n").get<int>()}] = std::move(values);
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("table cache " + path_.string() + " is malformed: " + e.what());
  }
}

std::optional<std::vector<BigInt>> TableCache::get(Family f, int n) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find({f, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void TableCache::put(Family f, int n, std::vector<BigInt> values) {
  std::lock_guard lock(mu_);
  entries_[{f, n}] = std::move(values);
}

std::size_t TableCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

void TableCache::save() const {
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["entries"] = nlohmann::json::array();
  {
    std::lock_guard lock(mu_);
    for (const auto& [key, values] : entries_) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : values) vals.push_back(to_decimal(v));
      doc["entries"].push_back(
          {{"family", std::string(family_name(key.first))}, {"n", key.second}, {"values", vals}});
    }
  }

  LockFile lock(path_.string() + ".lock");
  const std::filesystem::path tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write table cache " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("short write on " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace altdesc
