#include "homalg/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

constexpr std::string_view kMagic = "homalg-cache 1";

std::mutex active_mutex;
std::shared_ptr<DiskCache> active;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect(std::istream& in, std::string_view tag) {
  std::string word;
  if (!(in >> word) || word != tag) throw ParseError("cache payload: expected " + std::string(tag));
}

std::string to_hex(const unsigned char* digest, unsigned int len) {
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  return to_hex(digest, len);
}

Sha256::Sha256() : ctx_(EVP_MD_CTX_new()) {
  if (!ctx_ || EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 init failed");
  }
}

Sha256::~Sha256() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_)); }

void Sha256::update(std::string_view data) {
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size());
}

std::string Sha256::hex_digest() {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), digest, &len);
  return to_hex(digest, len);
}

std::string group_fingerprint(const FiniteGroup& g) {
  Sha256 h;
  const std::string head = "group " + std::to_string(g.order()) + "\n";
  h.update(head);
  std::string row;
  for (std::size_t a = 0; a < g.order(); ++a) {
    row.clear();
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Element c = g.multiply(static_cast<Element>(a), static_cast<Element>(b));
      row.push_back(static_cast<char>(c & 0xff));
      row.push_back(static_cast<char>(c >> 8));
    }
    h.update(row);
  }
  return h.hex_digest();
}

DiskCache::DiskCache(std::filesystem::path directory, std::ostream* warnings)
    : directory_(std::move(directory)), warnings_(warnings) {
  std::filesystem::create_directories(directory_);
}

std::ostream& DiskCache::warn() const { return warnings_ ? *warnings_ : std::cerr; }

std::filesystem::path DiskCache::entry_path(std::string_view key) const {
  return directory_ / (sha256_hex(key) + ".entry");
}

std::optional<std::string> DiskCache::lookup(std::string_view key) {
  const std::string key_digest = sha256_hex(key);
  const auto path = directory_ / (key_digest + ".entry");
  std::lock_guard lock(mutex_);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    ++stats_.misses;
    return std::nullopt;
  }
  const std::string raw = read_file(path);
  const auto eol = raw.find('\n');
  const std::string expected_header = std::string(kMagic) + " " + key_digest + " ";
  bool ok = eol != std::string::npos && raw.compare(0, expected_header.size(), expected_header) == 0;
  std::string payload;
  if (ok) {
    const std::string payload_digest = raw.substr(expected_header.size(), eol - expected_header.size());
    payload = raw.substr(eol + 1);
    ok = sha256_hex(payload) == payload_digest;
  }
  if (!ok) {
    warn() << "homalg: warning: discarding corrupt cache entry " << path.string() << "\n";
    std::filesystem::remove(path, ec);
    ++stats_.discarded;
    ++stats_.misses;
    return std::nullopt;
  }
  ++stats_.hits;
  return payload;
}

void DiskCache::store(std::string_view key, std::string_view payload) {
  static std::atomic<unsigned long> counter{0};
  const std::string key_digest = sha256_hex(key);
  const auto path = directory_ / (key_digest + ".entry");
  const auto tmp = directory_ / (key_digest + ".tmp." + std::to_string(::getpid()) + "." +
                                 std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << kMagic << ' ' << key_digest << ' ' << sha256_hex(payload) << '\n' << payload;
    if (!out) {
      warn() << "homalg: warning: could not write cache entry " << tmp.string() << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return;
  }
  std::lock_guard lock(mutex_);
  ++stats_.stores;
}

void DiskCache::discard(std::string_view key, std::string_view reason) {
  const auto path = entry_path(key);
  warn() << "homalg: warning: discarding unreadable cache entry " << path.string() << " ("
            << reason << ")\n";
  std::error_code ec;
  std::filesystem::remove(path, ec);
  std::lock_guard lock(mutex_);
  ++stats_.discarded;
  --stats_.hits;
  ++stats_.misses;
}

DiskCache::Stats DiskCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("HOMALG_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "homalg";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "homalg";
  }
  return std::filesystem::temp_directory_path() / "homalg-cache";
}

void set_active_cache(std::shared_ptr<DiskCache> cache) {
  std::lock_guard lock(active_mutex);
  active = std::move(cache);
}

std::shared_ptr<DiskCache> active_cache() {
  std::lock_guard lock(active_mutex);
  return active;
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    out << row.size();
    for (const auto& e : row) out << ' ' << e.col << ' ' << e.value.get_str();
    out << '\n';
  }
}

IntMatrix read_matrix(std::istream& in) {
  expect(in, "matrix");
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols)) throw ParseError("cache payload: matrix shape");
  std::vector<SparseRow> data(rows);
  for (auto& row : data) {
    std::size_t k = 0;
    if (!(in >> k) || k > cols) throw ParseError("cache payload: row length");
    row.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t c = 0;
      std::string v;
      if (!(in >> c >> v) || c >= cols) throw ParseError("cache payload: entry");
      if (!row.empty() && c <= row.back().col) throw ParseError("cache payload: unsorted row");
      Integer value;
      if (value.set_str(v, 10) != 0 || value == 0) throw ParseError("cache payload: value");
      row.push_back(Entry{c, value});
    }
  }
  return IntMatrix::from_rows(rows, cols, std::move(data));
}

std::string encode_smith(const SmithDecomposition& d) {
  std::ostringstream out;
  out << "smith " << d.rows << ' ' << d.cols << ' ' << d.diagonal.size();
  for (const auto& v : d.diagonal) out << ' ' << v.get_str();
  out << '\n';
  for (const auto* t : {&d.left, &d.left_inverse, &d.right, &d.right_inverse}) {
    out << (t->has_value() ? 1 : 0) << '\n';
    if (t->has_value()) write_matrix(out, **t);
  }
  return out.str();
}

SmithDecomposition decode_smith(std::string_view text) {
  std::istringstream in{std::string(text)};
  SmithDecomposition d;
  expect(in, "smith");
  std::size_t rank = 0;
  if (!(in >> d.rows >> d.cols >> rank) || rank > std::min(d.rows, d.cols)) {
    throw ParseError("cache payload: smith header");
  }
  d.diagonal.resize(rank);
  for (auto& v : d.diagonal) {
    std::string s;
    if (!(in >> s) || v.set_str(s, 10) != 0) throw ParseError("cache payload: diagonal");
  }
  for (auto* t : {&d.left, &d.left_inverse, &d.right, &d.right_inverse}) {
    int present = 0;
    if (!(in >> present)) throw ParseError("cache payload: transform flag");
    if (present) *t = read_matrix(in);
  }
  return d;
}

SmithDecomposition smith_decompose_cached(const IntMatrix& m, const SmithOptions& options) {
  auto cache = active_cache();
  if (!cache) return smith_decompose(m, options);
  std::ostringstream key;
  key << "smith-key 1 " << options.left << options.left_inverse << options.right
      << options.right_inverse << '\n';
  write_matrix(key, m);
  const std::string key_text = key.str();
  if (auto hit = cache->lookup(key_text)) {
    try {
      SmithDecomposition d = decode_smith(*hit);
      if (d.rows == m.rows() && d.cols == m.cols() && d.left.has_value() == options.left &&
          d.left_inverse.has_value() == options.left_inverse &&
          d.right.has_value() == options.right &&
          d.right_inverse.has_value() == options.right_inverse) {
        return d;
      }
      cache->discard(key_text, "shape mismatch");
    } catch (const ParseError& e) {
      cache->discard(key_text, e.what());
    }
  }
  SmithDecomposition d = smith_decompose(m, options);
  cache->store(key_text, encode_smith(d));
  return d;
}

}  // namespace homalg
