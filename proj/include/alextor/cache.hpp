#pragma once

// Invariant cache: canonical rendered results keyed by (knot, invariant
// kind, parameter hash), versioned by the tool version. Hits must byte-equal
// recomputation; check runs re-verify a deterministic sample of hits.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace alextor {

inline constexpr const char* kToolVersion = "0.1.0";

class InvariantCache {
public:
  InvariantCache() = default;
  explicit InvariantCache(std::string file) : file_(std::move(file)) { load(); }

  static std::string key(const std::string& knot, const std::string& kind,
                         const std::string& params);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& rendered);

  // fetch-or-compute; every 10th hit (deterministic by hit order) recomputes
  // and compares byte-for-byte, throwing on mismatch
  template <class F>
  std::string fetch(const std::string& k, F&& compute) {
    if (auto hit = lookup(k)) {
      ++hits_;
      if (hits_ % 10 == 0) {
        std::string fresh = compute();
        if (fresh != *hit)
          throw std::runtime_error("cache: entry for '" + k +
                                   "' disagrees with recomputation");
        ++verified_;
      }
      return *hit;
    }
    std::string fresh = compute();
    store(k, fresh);
    return fresh;
  }

  void save() const;
  void clear();
  size_t size() const { return entries_.size(); }
  size_t hits() const { return hits_; }
  size_t verified() const { return verified_; }
  std::string render() const;

private:
  void load();

  std::string file_;
  std::map<std::string, std::string> entries_;
  size_t hits_ = 0;
  size_t verified_ = 0;
};

}  // namespace alextor
