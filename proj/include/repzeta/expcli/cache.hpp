#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repzeta/error.hpp"
#include "repzeta/groups/conjugacy.hpp"

namespace repzeta::expcli {

inline constexpr std::string_view kCodeVersion = "repzeta-1.0.0";
inline constexpr const char* kCacheDirEnv = "REPZETA_CACHE_DIR";

/// FNV-1a of the canonical spec JSON and the code version.
std::uint64_t spec_hash(const groups::GroupSpec& spec, std::string_view version);

/// Binary layout, little endian:
///   "RZCD" u32 format, u64 key, str version, str spec-json,
///   u64 order, u64 #classes, u64 exponent,
///   class table (#classes x {rep, size, centralizer, inverse, element order} as u64),
///   u64 #generators, generators as u64,
///   element -> class as u32 in enumeration order,
///   u32 crc32 of everything before it.
std::vector<std::uint8_t> encode_conjugacy(const groups::ConjugacyData& data, std::string_view version);

class StaleEntry : public IoError {
 public:
  using IoError::IoError;
};

/// IoError on checksum or layout mismatch, StaleEntry when the version or spec differ.
groups::ConjugacyData decode_conjugacy(std::span<const std::uint8_t> bytes, const groups::GroupPtr& group,
                                       std::string_view version);

enum class CacheStatus { Disabled, Hit, Miss, Stale, Corrupt };
std::string to_string(CacheStatus s);

struct CacheLookup {
  CacheStatus status = CacheStatus::Miss;
  std::optional<groups::ConjugacyData> data;
  std::string detail;  // error text for Stale / Corrupt
};

class ConjugacyCache {
 public:
  explicit ConjugacyCache(std::filesystem::path dir, std::string version = std::string(kCodeVersion));

  /// Cache rooted at $REPZETA_CACHE_DIR, or nullopt when unset or empty.
  static std::optional<ConjugacyCache> from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  const std::string& version() const { return version_; }
  std::filesystem::path path_for(const groups::GroupSpec& spec) const;

  /// Bad files are reported through the status, never thrown.
  CacheLookup load(const groups::GroupPtr& group) const;
  /// Atomic write via rename. IoError when the directory is not writable.
  void store(const groups::ConjugacyData& data) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

/// Loads from the cache, or computes and stores. Without a cache this is conjugacy_classes.
/// `detail` receives the reason for a Stale or Corrupt entry.
groups::ConjugacyData load_or_compute(const ConjugacyCache* cache, const groups::GroupPtr& group,
                                      const groups::ConjugacyOptions& options, CacheStatus* status = nullptr,
                                      std::string* detail = nullptr);

/// Store then reload. IoError unless the reload is a hit.
groups::ConjugacyData cache_roundtrip(const groups::ConjugacyData& data, const ConjugacyCache& cache);

}  // namespace repzeta::expcli
