#include "homalg/groups.hpp"

#include <numeric>
#include <random>
#include <unordered_map>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

constexpr std::size_t kTableLimit = 1024;
constexpr std::size_t kExhaustiveLimit = 256;
constexpr std::size_t kLightLimit = 2048;
constexpr std::size_t kSampledTriples = 1 << 20;

}  // namespace

struct FiniteGroup::Impl {
  std::size_t order = 1;
  std::string name;
  std::vector<Element> table;  // empty when multiplication is by rule
  Law law;
  std::vector<Element> inverses;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> by_label;

  Element mul(Element a, Element b) const {
    return table.empty() ? law(a, b) : table[static_cast<std::size_t>(a) * order + b];
  }
};

FiniteGroup::FiniteGroup() : FiniteGroup(cyclic(1)) {}

namespace {

// Closure of a set under multiplication; returns a generating set found greedily.
std::vector<Element> greedy_generators(std::size_t order, const std::function<Element(Element, Element)>& mul) {
  std::vector<char> reached(order, 0);
  std::vector<Element> members{0};
  reached[0] = 1;
  std::vector<Element> gens;
  for (std::size_t cand = 1; cand < order; ++cand) {
    if (reached[cand]) continue;
    gens.push_back(static_cast<Element>(cand));
    // extend closure: multiply everything reached by every generator until stable
    std::vector<Element> frontier(members);
    frontier.push_back(static_cast<Element>(cand));
    if (!reached[cand]) {
      reached[cand] = 1;
      members.push_back(static_cast<Element>(cand));
    }
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element x : frontier) {
        for (Element g : gens) {
          for (Element y : {mul(x, g), mul(g, x)}) {
            if (!reached[y]) {
              reached[y] = 1;
              members.push_back(y);
              next.push_back(y);
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

bool generates(std::size_t order, const std::vector<Element>& gens,
               const std::function<Element(Element, Element)>& mul) {
  std::vector<char> reached(order, 0);
  std::vector<Element> frontier{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element g : gens) {
        if (g >= order) return false;
        const Element y = mul(x, g);
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return count == order;
}

}  // namespace

FiniteGroup FiniteGroup::build(std::size_t order, Law law, std::vector<std::string> labels,
                               std::string name, std::vector<Element> generators) {
  if (order == 0) throw InvalidGroup("group order must be positive");
  if (order > kMaxGroupOrder) {
    throw InvalidGroup("group order " + std::to_string(order) + " exceeds limit " +
                       std::to_string(kMaxGroupOrder));
  }
  auto impl = std::make_shared<Impl>();
  impl->order = order;
  impl->name = std::move(name);
  impl->law = std::move(law);
  if (order <= kTableLimit) {
    impl->table.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        Element c = impl->law(static_cast<Element>(a), static_cast<Element>(b));
        if (c >= order) throw InvalidGroup("product outside the element range");
        impl->table[a * order + b] = c;
      }
    }
  }
  auto mul = [&](Element a, Element b) { return impl->mul(a, b); };

  // identity; the inverse of a is a^(k-1) where a^k = 1
  impl->inverses.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    const auto x = static_cast<Element>(a);
    if (mul(0, x) != x || mul(x, 0) != x) throw InvalidGroup("element 0 is not the identity");
    Element prev = 0;
    Element power = x;
    for (std::size_t steps = 0; power != 0; ++steps) {
      if (steps > order) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
      prev = power;
      power = mul(power, x);
    }
    if (mul(prev, x) != 0 || mul(x, prev) != 0) {
      throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
    }
    impl->inverses[a] = prev;
  }

  // associativity
  if (order <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        const Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
        for (std::size_t c = 0; c < order; ++c) {
          if (mul(ab, static_cast<Element>(c)) !=
              mul(static_cast<Element>(a), mul(static_cast<Element>(b), static_cast<Element>(c)))) {
            throw InvalidGroup("multiplication is not associative");
          }
        }
      }
    }
  } else if (order <= kLightLimit) {
    if (generators.empty()) {
      generators = greedy_generators(order, mul);
    } else if (!generates(order, generators, mul)) {
      throw InvalidGroup("supplied elements do not generate the group");
    }
    // Light's test: (a g) b = a (g b) for generators g suffices.
    std::vector<Element> left(order), right(order);
    for (Element g : generators) {
      for (std::size_t a = 0; a < order; ++a) {
        left[a] = mul(static_cast<Element>(a), g);
        right[a] = mul(g, static_cast<Element>(a));
      }
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (mul(left[a], static_cast<Element>(b)) != mul(static_cast<Element>(a), right[b])) {
            throw InvalidGroup("multiplication is not associative");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(order);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t t = 0; t < kSampledTriples; ++t) {
      const auto a = static_cast<Element>(pick(rng));
      const auto b = static_cast<Element>(pick(rng));
      const auto c = static_cast<Element>(pick(rng));
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidGroup("multiplication is not associative");
    }
  }

  if (labels.empty()) {
    for (std::size_t a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != order) throw InvalidGroup("label count does not match order");
  impl->labels = std::move(labels);
  for (std::size_t a = 0; a < order; ++a) {
    if (!impl->by_label.emplace(impl->labels[a], static_cast<Element>(a)).second) {
      throw InvalidGroup("duplicate element label " + impl->labels[a]);
    }
  }
  return FiniteGroup(std::shared_ptr<const Impl>(std::move(impl)));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroup("multiplication table is not square");
  }
  auto copy = std::make_shared<std::vector<std::vector<Element>>>(table);
  return build(n, [copy](Element a, Element b) { return (*copy)[a][b]; }, std::move(labels),
               std::move(name), {});
}

FiniteGroup FiniteGroup::from_law(std::size_t order, Law law, std::vector<std::string> labels,
                                  std::string name, std::vector<Element> generators) {
  return build(order, std::move(law), std::move(labels), std::move(name), std::move(generators));
}

std::size_t FiniteGroup::order() const { return impl_->order; }
const std::string& FiniteGroup::name() const { return impl_->name; }

Element FiniteGroup::multiply(Element a, Element b) const { return impl_->mul(a, b); }
Element FiniteGroup::inverse(Element a) const { return impl_->inverses[a]; }

Element FiniteGroup::power(Element a, long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

Element FiniteGroup::conjugate(Element g, Element x) const {
  return multiply(multiply(g, x), inverse(g));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (multiply(static_cast<Element>(a), static_cast<Element>(b)) !=
          multiply(static_cast<Element>(b), static_cast<Element>(a))) {
        return false;
      }
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(static_cast<Element>(a)));
  return e;
}

const std::string& FiniteGroup::label(Element a) const { return impl_->labels.at(a); }

std::optional<Element> FiniteGroup::find(const std::string& label) const {
  auto it = impl_->by_label.find(label);
  if (it == impl_->by_label.end()) return std::nullopt;
  return it->second;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (!group.same_as(rhs.group)) throw GroupMismatch("product of elements from different groups");
  return {group, group.multiply(index, rhs.index)};
}

GroupElement GroupElement::inverse() const { return {group, group.inverse(index)}; }

bool GroupElement::operator==(const GroupElement& rhs) const {
  return group.same_as(rhs.group) && index == rhs.index;
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) {
  if (!g.group.same_as(x.group)) throw GroupMismatch("conjugation across different groups");
  return {g.group, g.group.conjugate(g.index, x.index)};
}

bool GroupHom::is_homomorphism() const {
  if (images.size() != source.order()) return false;
  for (std::size_t a = 0; a < source.order(); ++a) {
    if (images[a] >= target.order()) return false;
    for (std::size_t b = 0; b < source.order(); ++b) {
      const auto x = static_cast<Element>(a);
      const auto y = static_cast<Element>(b);
      if (images[source.multiply(x, y)] != target.multiply(images[x], images[y])) return false;
    }
  }
  return true;
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(target.order(), 0);
  for (Element y : images) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group of order 0");
  return FiniteGroup::from_law(
      n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); }, {},
      "Z/" + std::to_string(n));
}

FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t order = g.order() * m;
  if (order > kMaxGroupOrder) throw InvalidGroup("product order exceeds limit");
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      labels.push_back("(" + g.label(static_cast<Element>(a)) + "," + h.label(static_cast<Element>(b)) + ")");
    }
  }
  auto law = [g, h, m](Element x, Element y) {
    const Element a = g.multiply(static_cast<Element>(x / m), static_cast<Element>(y / m));
    const Element b = h.multiply(static_cast<Element>(x % m), static_cast<Element>(y % m));
    return static_cast<Element>(a * m + b);
  };
  return FiniteGroup::from_law(order, law, std::move(labels), g.name() + " x " + h.name());
}

Element MonomialGroup::torus_element(long a, long b) const { return element(a, b, false); }

Element MonomialGroup::element(long a, long b, bool swapped) const {
  const long m = static_cast<long>(n);
  a = ((a % m) + m) % m;
  b = ((b % m) + m) % m;
  return static_cast<Element>((swapped ? n * n : 0) + static_cast<std::size_t>(a) * n +
                              static_cast<std::size_t>(b));
}

MonomialGroup gm2(std::size_t n) {
  if (n == 0) throw InvalidGroup("monomial group needs n >= 1");
  const std::size_t nn = n * n;
  if (2 * nn > kMaxGroupOrder) throw InvalidGroup("monomial group order exceeds limit");
  std::vector<std::string> labels;
  labels.reserve(2 * nn);
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ";" + (e ? "s" : "e") + ")");
      }
    }
  }
  // (t, e)(t', e') = (t + e(t'), e e')
  auto law = [n, nn](Element x, Element y) {
    const std::size_t e1 = x / nn, a1 = (x % nn) / n, b1 = x % n;
    const std::size_t e2 = y / nn, a2 = (y % nn) / n, b2 = y % n;
    const std::size_t a = (a1 + (e1 ? b2 : a2)) % n;
    const std::size_t b = (b1 + (e1 ? a2 : b2)) % n;
    return static_cast<Element>(((e1 ^ e2) * nn) + a * n + b);
  };
  MonomialGroup out;
  out.n = n;
  // (0,1;e) and the swap generate.
  std::vector<Element> gens{static_cast<Element>(n > 1 ? 1 : 0), static_cast<Element>(nn)};
  out.group = FiniteGroup::from_law(2 * nn, law, std::move(labels), "GM2(" + std::to_string(n) + ")",
                                    std::move(gens));
  out.torus = product(cyclic(n), cyclic(n));
  out.swap_group = cyclic(2);
  std::vector<Element> torus_images(nn);
  std::iota(torus_images.begin(), torus_images.end(), Element{0});
  out.torus_embedding = GroupHom{out.torus, out.group, std::move(torus_images)};
  out.swap_embedding = GroupHom{out.swap_group, out.group, {0, static_cast<Element>(nn)}};
  out.s = GroupElement{out.group, static_cast<Element>(nn)};
  return out;
}

}  // namespace homalg
