#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "homalg/groups.hpp"
#include "homalg/int_matrix.hpp"
#include "homalg/smith.hpp"

namespace homalg {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view data);
  std::string hex_digest();

 private:
  void* ctx_;
};

/// Content-addressed store of text payloads.
///
/// An entry lives in `<dir>/<sha256(key)>.entry` and starts with a header
/// line carrying the key digest and a digest of the payload.  Entries whose
/// header or digest does not match are deleted with a warning and
/// reported as misses.  Writes go through a temporary file and a rename.
class DiskCache {
 public:
  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t discarded = 0;
    std::size_t stores = 0;
  };

  /// Warnings go to `warnings`, std::cerr when null.
  explicit DiskCache(std::filesystem::path directory, std::ostream* warnings = nullptr);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path entry_path(std::string_view key) const;

  std::optional<std::string> lookup(std::string_view key);
  void store(std::string_view key, std::string_view payload);
  /// Called when a payload passed its checksum but could not be decoded.
  void discard(std::string_view key, std::string_view reason);

  Stats stats() const;

 private:
  std::ostream& warn() const;

  std::filesystem::path directory_;
  std::ostream* warnings_;
  mutable std::mutex mutex_;
  Stats stats_;
};

/// $HOMALG_CACHE_DIR, else $XDG_CACHE_HOME/homalg, else ~/.cache/homalg.
std::filesystem::path default_cache_dir();

/// Process-wide cache consulted by smith_decompose_cached and bar_complex.
/// Null (the default) disables caching.
void set_active_cache(std::shared_ptr<DiskCache> cache);
std::shared_ptr<DiskCache> active_cache();

/// Text encodings used for cache payloads.
void write_matrix(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix(std::istream& in);
std::string encode_smith(const SmithDecomposition& d);
SmithDecomposition decode_smith(std::string_view text);

/// Digest of a group's multiplication table.
std::string group_fingerprint(const FiniteGroup& g);

/// smith_decompose through the active cache.
SmithDecomposition smith_decompose_cached(const IntMatrix& m, const SmithOptions& options);

}  // namespace homalg
