#include "homalg/bar.hpp"

#include <cctype>
#include <sstream>

#include "homalg/cache.hpp"
#include "homalg/errors.hpp"

namespace homalg {

namespace {

bool normalized(const BarChain::Symbol& s) {
  for (Element e : s) {
    if (e == 0) return false;
  }
  return true;
}

const Integer& sign(std::size_t i) {
  static const Integer plus(1);
  static const Integer minus(-1);
  return i % 2 == 0 ? plus : minus;
}

}  // namespace

BarChain::BarChain(FiniteGroup group, std::size_t degree) : group_(std::move(group)), degree_(degree) {}

BarChain BarChain::symbol(FiniteGroup group, Symbol s, const Integer& coefficient) {
  BarChain z(std::move(group), s.size());
  z.add(s, coefficient);
  return z;
}

Integer BarChain::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

void BarChain::add(const Symbol& s, const Integer& c) {
  if (s.size() != degree_) {
    throw DimensionMismatch("symbol of length " + std::to_string(s.size()) + " in a degree " +
                            std::to_string(degree_) + " chain");
  }
  if (c == 0 || !normalized(s)) return;
  for (Element e : s) {
    if (e >= group_.order()) throw InvalidGroup("element index outside the group");
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BarChain::require_compatible(const BarChain& rhs) const {
  if (!group_.same_as(rhs.group_)) throw GroupMismatch("chains over different groups");
  if (degree_ != rhs.degree_) {
    throw DimensionMismatch("chains of degree " + std::to_string(degree_) + " and " +
                            std::to_string(rhs.degree_));
  }
}

BarChain& BarChain::operator+=(const BarChain& rhs) {
  require_compatible(rhs);
  for (const auto& [s, c] : rhs.terms_) add(s, c);
  return *this;
}

BarChain& BarChain::operator-=(const BarChain& rhs) {
  require_compatible(rhs);
  for (const auto& [s, c] : rhs.terms_) add(s, -c);
  return *this;
}

BarChain BarChain::operator+(const BarChain& rhs) const {
  BarChain out(*this);
  out += rhs;
  return out;
}

BarChain BarChain::operator-(const BarChain& rhs) const {
  BarChain out(*this);
  out -= rhs;
  return out;
}

BarChain BarChain::operator-() const { return scaled(-1); }

BarChain BarChain::scaled(const Integer& k) const {
  BarChain out(group_, degree_);
  if (k == 0) return out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, c * k);
  return out;
}

bool BarChain::operator==(const BarChain& rhs) const {
  return group_.same_as(rhs.group_) && degree_ == rhs.degree_ && terms_ == rhs.terms_;
}

std::string BarChain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += ' ';
    out += c > 0 ? "+" + homalg::to_string(c) : homalg::to_string(c);
    out += " [";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += '|';
      out += group_.label(s[i]);
    }
    out += ']';
  }
  return out;
}

BarChain BarChain::parse(const FiniteGroup& group, std::string_view text,
                         std::optional<std::size_t> degree) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("chain literal, offset " + std::to_string(pos) + ": " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };

  skip_space();
  if (trim(text.substr(pos)) == "0") {
    if (!degree) throw fail("degree of the zero chain is not determined");
    return BarChain(group, *degree);
  }

  std::vector<std::pair<Symbol, Integer>> parsed;
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    Integer coefficient = 1;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_space();
    }
    std::size_t digits = pos;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
    if (digits > pos) {
      coefficient = Integer(std::string(text.substr(pos, digits - pos)));
      pos = digits;
      skip_space();
    }
    if (negative) coefficient = -coefficient;
    if (pos == text.size() || text[pos] != '[') throw fail("expected '['");
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw fail("missing ']'");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    Symbol s;
    if (!trim(body).empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t bar = body.find('|', start);
        std::string_view label = trim(body.substr(start, bar == std::string_view::npos ? bar : bar - start));
        auto e = group.find(std::string(label));
        if (!e) throw fail("unknown element '" + std::string(label) + "'");
        s.push_back(*e);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
    }
    parsed.emplace_back(std::move(s), std::move(coefficient));
    pos = close + 1;
  }
  if (parsed.empty()) throw fail("empty chain literal");
  const std::size_t n = degree.value_or(parsed.front().first.size());
  BarChain z(group, n);
  for (const auto& [s, c] : parsed) {
    if (s.size() != n) throw fail("symbols of different lengths");
    z.add(s, c);
  }
  return z;
}

BarChain boundary(const BarChain& z) {
  const std::size_t n = z.degree();
  if (n == 0) throw DegreeOutOfRange("boundary of a degree-0 chain");
  const FiniteGroup& g = z.group();
  BarChain out(g, n - 1);
  if (n == 1) return out;
  BarChain::Symbol face(n - 1);
  for (const auto& [s, c] : z.terms()) {
    std::copy(s.begin() + 1, s.end(), face.begin());
    out.add(face, c);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i - 1) {
          face[k++] = g.multiply(s[j], s[j + 1]);
          ++j;
        } else {
          face[k++] = s[j];
        }
      }
      out.add(face, sign(i) * c);
    }
    std::copy(s.begin(), s.end() - 1, face.begin());
    out.add(face, sign(n) * c);
  }
  return out;
}

namespace {

void require_same(const GroupElement& g, const BarChain& z) {
  if (!g.group.same_as(z.group())) throw GroupMismatch("element and chain live in different groups");
}

}  // namespace

BarChain homotopy_rho(const GroupElement& g, const BarChain& z) {
  require_same(g, z);
  const FiniteGroup& group = z.group();
  const std::size_t n = z.degree();
  const Element inv = group.inverse(g.index);
  BarChain out(group, n + 1);
  BarChain::Symbol t(n + 1);
  for (const auto& [s, c] : z.terms()) {
    BarChain::Symbol conj(n);
    for (std::size_t i = 0; i < n; ++i) conj[i] = group.conjugate(g.index, s[i]);
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) t[i] = s[i];
      t[j] = inv;
      for (std::size_t i = j; i < n; ++i) t[i + 1] = conj[i];
      out.add(t, sign(j) * c);
    }
  }
  return out;
}

BarChain conjugate_chain(const GroupElement& g, const BarChain& z) {
  require_same(g, z);
  const FiniteGroup& group = z.group();
  BarChain out(group, z.degree());
  for (const auto& [s, c] : z.terms()) {
    BarChain::Symbol t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = group.conjugate(g.index, s[i]);
    out.add(t, c);
  }
  return out;
}

BarChain map_chain(const GroupHom& f, const BarChain& z) {
  if (!f.source.same_as(z.group())) throw GroupMismatch("chain is not over the source group");
  BarChain out(f.target, z.degree());
  for (const auto& [s, c] : z.terms()) {
    BarChain::Symbol t(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) t[i] = f(s[i]);
    out.add(t, c);
  }
  return out;
}

std::uint64_t bar_rank(const FiniteGroup& g, std::size_t n) {
  const std::uint64_t base = g.order() - 1;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

std::size_t bar_index(const FiniteGroup& g, const BarChain::Symbol& s) {
  const std::size_t base = g.order() - 1;
  std::size_t index = 0;
  for (Element e : s) {
    if (e == 0) throw InvalidGroup("identity in a normalized bar symbol");
    index = index * base + (e - 1);
  }
  return index;
}

BarChain::Symbol bar_symbol(const FiniteGroup& g, std::size_t n, std::size_t index) {
  const std::size_t base = g.order() - 1;
  BarChain::Symbol s(n);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<Element>(index % base + 1);
    index /= base;
  }
  return s;
}

IntVector to_coordinates(const BarChain& z) {
  IntVector x(bar_rank(z.group(), z.degree()));
  for (const auto& [s, c] : z.terms()) x[bar_index(z.group(), s)] = c;
  return x;
}

BarChain from_coordinates(const FiniteGroup& g, std::size_t degree, std::span<const Integer> x) {
  if (x.size() != bar_rank(g, degree)) throw DimensionMismatch("coordinate vector length");
  BarChain z(g, degree);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) z.add(bar_symbol(g, degree, i), x[i]);
  }
  return z;
}

namespace {

ChainComplex build_bar_complex(const FiniteGroup& g, std::size_t top) {
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= top; ++n) ranks.push_back(bar_rank(g, n));
  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    if (n == 1) {
      boundaries.emplace_back(ranks[0], ranks[1]);
      continue;
    }
    std::vector<Triplet> triplets;
    triplets.reserve(ranks[n] * (n + 1));
    for (std::size_t col = 0; col < ranks[n]; ++col) {
      BarChain d = boundary(BarChain::symbol(g, bar_symbol(g, n, col)));
      for (const auto& [s, c] : d.terms()) triplets.push_back(Triplet{bar_index(g, s), col, c});
    }
    boundaries.push_back(IntMatrix::from_triplets(ranks[n - 1], ranks[n], std::move(triplets)));
  }
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

std::string encode_complex(const ChainComplex& c) {
  std::ostringstream out;
  out << "complex " << c.highest_degree() << '\n';
  for (int n = 1; n <= c.highest_degree(); ++n) write_matrix(out, c.boundary(n));
  return out.str();
}

ChainComplex decode_complex(const std::string& text, std::size_t top) {
  std::istringstream in(text);
  std::string tag;
  std::size_t stored_top = 0;
  if (!(in >> tag >> stored_top) || tag != "complex" || stored_top != top) {
    throw ParseError("cache payload: complex header");
  }
  std::vector<IntMatrix> boundaries;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 1; n <= top; ++n) {
    boundaries.push_back(read_matrix(in));
    if (n == 1) ranks.push_back(boundaries.back().rows());
    ranks.push_back(boundaries.back().cols());
  }
  if (top == 0) ranks.push_back(1);
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

}  // namespace

ChainComplex bar_complex(const FiniteGroup& g, std::size_t top, std::uint64_t budget) {
  const std::uint64_t size = bar_rank(g, top);
  if (size > budget) throw BudgetExceeded("bar complex of " + g.name() + " through degree " +
                                          std::to_string(top), size, budget);
  auto cache = active_cache();
  if (!cache || top < 2) return build_bar_complex(g, top);
  const std::string key = "bar-key 1 " + group_fingerprint(g) + " " + std::to_string(top);
  if (auto hit = cache->lookup(key)) {
    try {
      ChainComplex c = decode_complex(*hit, top);
      bool shapes_ok = true;
      for (std::size_t n = 0; n <= top; ++n) shapes_ok = shapes_ok && c.rank(static_cast<int>(n)) == bar_rank(g, n);
      if (shapes_ok) return c;
      cache->discard(key, "shape mismatch");
    } catch (const Error& e) {
      cache->discard(key, e.what());
    }
  }
  ChainComplex c = build_bar_complex(g, top);
  cache->store(key, encode_complex(c));
  return c;
}

FgAbelianGroup group_homology(const FiniteGroup& g, std::size_t n, std::uint64_t budget) {
  return homology(bar_complex(g, n + 1, budget), static_cast<int>(n));
}

}  // namespace homalg
