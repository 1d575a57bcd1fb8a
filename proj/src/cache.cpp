#include "alextor/cache.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace alextor {

using nlohmann::json;

std::string InvariantCache::key(const std::string& knot, const std::string& kind,
                                const std::string& params) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(params));
  return knot + "|" + kind + "|" + buf;
}

std::optional<std::string> InvariantCache::lookup(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::store(const std::string& key, const std::string& rendered) {
  entries_[key] = rendered;
}

void InvariantCache::load() {
  if (file_.empty()) return;
  std::ifstream in(file_);
  if (!in) return;  // absent cache file is an empty cache
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    entries_.clear();  // unreadable cache is discarded, never trusted
    return;
  }
  if (j.value("version", "") != kToolVersion) return;  // stale version: ignore
  for (auto& [k, v] : j.at("entries").items()) entries_[k] = v.get<std::string>();
}

void InvariantCache::save() const {
  if (file_.empty()) return;
  json j;
  j["version"] = kToolVersion;
  j["entries"] = json::object();
  for (const auto& [k, v] : entries_) j["entries"][k] = v;
  std::ofstream out(file_);
  out << j.dump(1) << "\n";
}

void InvariantCache::clear() {
  entries_.clear();
  if (!file_.empty()) std::remove(file_.c_str());
}

std::string InvariantCache::render() const {
  std::ostringstream os;
  os << "cache version " << kToolVersion << ", " << entries_.size() << " entries\n";
  for (const auto& [k, v] : entries_) os << "  " << k << " -> " << v << "\n";
  return os.str();
}

}  // namespace alextor
