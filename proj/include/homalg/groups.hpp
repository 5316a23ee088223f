#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homalg {

/// Index of a group element.  Index 0 is always the identity.
using Element = std::uint16_t;

/// Largest supported group order.
inline constexpr std::size_t kMaxGroupOrder = 8192;

/// A finite group on elements 0..order-1 with element 0 the identity.
///
/// Groups up to order 1024 keep a full multiplication table; larger groups
/// evaluate their multiplication rule on demand.  Group axioms are checked on
/// construction: exhaustively up to order 256, by Light's test over a
/// generating set up to order 2048, and on a fixed pseudo-random sample of
/// triples above that (identity and inverses are always checked in full).
class FiniteGroup {
 public:
  using Law = std::function<Element(Element, Element)>;

  FiniteGroup();

  /// table[a][b] = a*b.  Throws InvalidGroup if the table is not a group
  /// with identity 0.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> labels = {}, std::string name = "");
  /// Group given by a multiplication rule on 0..order-1 (checked like a
  /// table).  A known generating set speeds up the associativity check; it is
  /// itself checked to generate.
  static FiniteGroup from_law(std::size_t order, Law law, std::vector<std::string> labels,
                              std::string name, std::vector<Element> generators = {});

  std::size_t order() const;
  const std::string& name() const;

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, long k) const;
  /// g x g^-1
  Element conjugate(Element g, Element x) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  std::size_t exponent() const;

  const std::string& label(Element a) const;
  std::optional<Element> find(const std::string& label) const;

  /// Same underlying group object (not merely isomorphic).
  bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static FiniteGroup build(std::size_t order, Law law, std::vector<std::string> labels,
                           std::string name, std::vector<Element> generators);

  std::shared_ptr<const Impl> impl_;
};

/// An element together with the group it belongs to.
struct GroupElement {
  FiniteGroup group;
  Element index = 0;

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& rhs) const;
  std::string to_string() const { return group.label(index); }
};

/// g x g^-1; throws GroupMismatch across groups.
GroupElement conjugate(const GroupElement& g, const GroupElement& x);

/// Map of finite groups given by the images of all elements.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_injective() const;
};

/// Z/n with elements labelled 0..n-1.  Throws InvalidGroup for n = 0.
FiniteGroup cyclic(std::size_t n);
/// G x H with (a, b) at index a*|H| + b, labelled "(a,b)".
FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

/// The monomial group (Z/n x Z/n) x| Z/2, the swap acting on the torus.
///
/// (a, b; e) sits at index e*n^2 + a*n + b and is labelled "(a,b;e)" or
/// "(a,b;s)".  Exponents a, b are taken with respect to a fixed generator of
/// the cyclic group of order n.
struct MonomialGroup {
  std::size_t n = 0;
  FiniteGroup group;
  FiniteGroup torus;        // product(cyclic(n), cyclic(n))
  FiniteGroup swap_group;   // cyclic(2)
  GroupHom torus_embedding;
  GroupHom swap_embedding;
  GroupElement s;           // the swap

  Element torus_element(long a, long b) const;
  Element element(long a, long b, bool swapped) const;
};

MonomialGroup gm2(std::size_t n);

}  // namespace homalg
