#include "repzeta/expcli/cache.hpp"

#include <zlib.h>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "repzeta/error.hpp"

namespace repzeta::expcli {

using groups::ConjugacyClass;
using groups::ConjugacyData;
using groups::GroupPtr;
using groups::GroupSpec;

namespace {

constexpr char kMagic[4] = {'R', 'Z', 'C', 'D'};
constexpr std::uint32_t kFormat = 1;

std::string canonical_spec(const GroupSpec& spec) { return nlohmann::json(spec).dump(); }

class Writer {
 public:
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out.insert(out.end(), s.begin(), s.end());
  }
  std::vector<std::uint8_t> out;

 private:
  void put(std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::string str() {
    const std::uint32_t n = u32();
    need(n);
    std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw IoError("cache file truncated");
  }
  std::uint64_t get(int bytes) {
    need(bytes);
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    pos_ += bytes;
    return v;
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::uint32_t crc_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths
  std::size_t done = 0;
  while (done < bytes.size()) {
    const std::size_t chunk = std::min<std::size_t>(bytes.size() - done, 1u << 30);
    crc = crc32(crc, bytes.data() + done, static_cast<uInt>(chunk));
    done += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::uint64_t spec_hash(const GroupSpec& spec, std::string_view version) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  mix(canonical_spec(spec));
  mix(std::string_view("\0", 1));
  mix(version);
  return h;
}

std::vector<std::uint8_t> encode_conjugacy(const ConjugacyData& data, std::string_view version) {
  const GroupSpec& spec = data.group()->spec();
  Writer w;
  w.out.insert(w.out.end(), std::begin(kMagic), std::end(kMagic));
  w.u32(kFormat);
  w.u64(spec_hash(spec, version));
  w.str(version);
  w.str(canonical_spec(spec));
  w.u64(data.order());
  w.u64(data.num_classes());
  w.u64(data.exponent());
  for (const auto& c : data.classes()) {
    w.u64(c.representative);
    w.u64(c.size);
    w.u64(c.centralizer_order);
    w.u64(c.inverse_class);
    w.u64(c.element_order);
  }
  w.u64(data.generators().size());
  for (auto g : data.generators()) w.u64(g);
  for (auto c : data.class_of_element()) w.u32(c);
  w.u32(crc_of(w.out));
  return std::move(w.out);
}

ConjugacyData decode_conjugacy(std::span<const std::uint8_t> bytes, const GroupPtr& group, std::string_view version) {
  if (bytes.size() < sizeof(kMagic) + 8) throw IoError("cache file truncated");
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) throw IoError("cache file has a bad magic number");
  const auto body = bytes.first(bytes.size() - 4);
  Reader tail(bytes.last(4));
  if (tail.u32() != crc_of(body)) throw IoError("cache checksum mismatch");

  Reader r(body.subspan(sizeof(kMagic)));
  if (r.u32() != kFormat) throw StaleEntry("cache format differs");
  const std::uint64_t key = r.u64();
  const std::string stored_version = r.str();
  const std::string stored_spec = r.str();
  const GroupSpec& spec = group->spec();
  if (stored_version != version || stored_spec != canonical_spec(spec) || key != spec_hash(spec, version)) {
    throw StaleEntry("cache entry was written for " + stored_version);
  }
  const std::uint64_t order = r.u64();
  const std::uint64_t nclasses = r.u64();
  const std::uint64_t exponent = r.u64();
  if (order != group->order()) throw IoError("cached order differs from the enumerated group");
  if (nclasses == 0 || nclasses > order || r.remaining() < nclasses * 40) throw IoError("cache class table truncated");
  std::vector<ConjugacyClass> classes(nclasses);
  for (auto& c : classes) {
    c.representative = r.u64();
    c.size = r.u64();
    c.centralizer_order = r.u64();
    c.inverse_class = r.u64();
    c.element_order = r.u64();
    if (c.representative >= order || c.inverse_class >= nclasses) throw IoError("cache class table out of range");
  }
  const std::uint64_t ngens = r.u64();
  if (ngens > order || r.remaining() < ngens * 8) throw IoError("cache generator list truncated");
  std::vector<std::size_t> gens(ngens);
  for (auto& g : gens) {
    g = r.u64();
    if (g >= order) throw IoError("cache generator out of range");
  }
  if (r.remaining() != order * 4) throw IoError("cache element table has the wrong length");
  std::vector<std::uint32_t> class_of(order);
  for (auto& c : class_of) {
    c = r.u32();
    if (c >= nclasses) throw IoError("cache element table out of range");
  }
  ConjugacyData data(group, std::move(class_of), std::move(classes), std::move(gens));
  if (data.exponent() != exponent) throw IoError("cached exponent inconsistent with class table");
  try {
    data.check_invariants();
  } catch (const MathError& e) {
    throw IoError(std::string("cached class data inconsistent: ") + e.what());
  }
  return data;
}

std::string to_string(CacheStatus s) {
  switch (s) {
    case CacheStatus::Disabled: return "disabled";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Stale: return "stale";
    case CacheStatus::Corrupt: return "corrupt";
  }
  return "?";
}

ConjugacyCache::ConjugacyCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {}

std::optional<ConjugacyCache> ConjugacyCache::from_environment() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ConjugacyCache(dir);
}

std::filesystem::path ConjugacyCache::path_for(const GroupSpec& spec) const {
  std::ostringstream name;
  name << std::hex;
  name.width(16);
  name.fill('0');
  name << spec_hash(spec, version_);
  return dir_ / (name.str() + ".rzc");
}

CacheLookup ConjugacyCache::load(const GroupPtr& group) const {
  CacheLookup out;
  const auto path = path_for(group->spec());
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    out.data.emplace(decode_conjugacy(bytes, group, version_));
    out.status = CacheStatus::Hit;
  } catch (const StaleEntry& e) {
    out.status = CacheStatus::Stale;
    out.detail = e.what();
  } catch (const IoError& e) {
    out.status = CacheStatus::Corrupt;
    out.detail = e.what();
  }
  return out;
}

void ConjugacyCache::store(const ConjugacyData& data) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto path = path_for(data.group()->spec());
  auto tmp = path;
  tmp += ".tmp";
  const auto bytes = encode_conjugacy(data, version_);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move cache file into place: " + ec.message());
}

ConjugacyData load_or_compute(const ConjugacyCache* cache, const GroupPtr& group,
                              const groups::ConjugacyOptions& options, CacheStatus* status, std::string* detail) {
  auto set = [&](CacheStatus s) {
    if (status) *status = s;
  };
  if (!cache) {
    set(CacheStatus::Disabled);
    return groups::conjugacy_classes(group, options);
  }
  CacheLookup hit = cache->load(group);
  set(hit.status);
  if (detail) *detail = hit.detail;
  if (hit.data) return std::move(*hit.data);
  ConjugacyData data = groups::conjugacy_classes(group, options);
  cache->store(data);
  return data;
}

ConjugacyData cache_roundtrip(const ConjugacyData& data, const ConjugacyCache& cache) {
  cache.store(data);
  CacheLookup back = cache.load(data.group());
  if (!back.data) throw IoError("cache reload failed (" + to_string(back.status) + "): " + back.detail);
  return std::move(*back.data);
}

}  // namespace repzeta::expcli
