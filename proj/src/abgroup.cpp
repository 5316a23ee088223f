#include "homalg/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "homalg/errors.hpp"
#include "homalg/smith.hpp"

namespace homalg {

struct FgAbelianGroup::State {
  IntMatrix relations;
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  std::vector<Integer> moduli;
  IntMatrix to_canonical;
  IntMatrix canonical_generators;
};

namespace {

bool columns_vanish(const FgAbelianGroup& target, const IntMatrix& columns) {
  IntMatrix canonical = target.to_canonical() * columns;
  const auto& moduli = target.moduli();
  for (std::size_t i = 0; i < canonical.rows(); ++i) {
    for (const auto& e : canonical.row(i)) {
      if (!divides(moduli[i], e.value)) return false;
    }
  }
  return true;
}

// Generators of {x : F x lies in the relation lattice of the target}.
IntMatrix preimage_generators(const AbHom& f) {
  const std::size_t n = f.source().generator_count();
  IntMatrix stacked = f.matrix().hstack(f.target().relations().scaled(Integer(-1)));
  IntMatrix kernel = kernel_basis(stacked);
  return kernel.row_range(0, n);
}

}  // namespace

std::shared_ptr<const FgAbelianGroup::State> FgAbelianGroup::build_state(IntMatrix relations) {
  auto state = std::make_shared<State>();
  const std::size_t n = relations.rows();
  SmithDecomposition d = smith_decompose(relations, SmithOptions{true, true, false, false});
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (d.diagonal[i] != 1) {
      rows.push_back(i);
      state->invariant_factors.push_back(d.diagonal[i]);
      state->moduli.push_back(d.diagonal[i]);
    }
  }
  for (std::size_t i = d.rank(); i < n; ++i) {
    rows.push_back(i);
    state->moduli.push_back(Integer(0));
  }
  state->free_rank = n - d.rank();
  state->to_canonical = d.left->select_rows(rows);
  state->canonical_generators = d.left_inverse->select_cols(rows);
  state->relations = std::move(relations);
  return state;
}

FgAbelianGroup::FgAbelianGroup() : state_(build_state(IntMatrix(0, 0))) {}

FgAbelianGroup::FgAbelianGroup(IntMatrix relations) : state_(build_state(std::move(relations))) {}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& n) {
  if (n == 0) return free(1);
  IntMatrix rel(1, 1);
  rel.set(0, 0, abs(n));
  return FgAbelianGroup(std::move(rel));
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) { return FgAbelianGroup(IntMatrix(rank, 0)); }

FgAbelianGroup FgAbelianGroup::from_invariants(std::span<const Integer> factors,
                                               std::size_t free_rank) {
  const std::size_t n = factors.size() + free_rank;
  return FgAbelianGroup(IntMatrix::diagonal(factors, n, factors.size()));
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const IntMatrix& ra = a.relations();
  const IntMatrix& rb = b.relations();
  IntMatrix top = ra.hstack(IntMatrix(ra.rows(), rb.cols()));
  IntMatrix bottom = IntMatrix(rb.rows(), ra.cols()).hstack(rb);
  return FgAbelianGroup(top.vstack(bottom));
}

FgAbelianGroup FgAbelianGroup::power(const FgAbelianGroup& a, std::size_t k) {
  return FgAbelianGroup(a.relations().block_repeat(k));
}

std::size_t FgAbelianGroup::generator_count() const { return state_->relations.rows(); }
const IntMatrix& FgAbelianGroup::relations() const { return state_->relations; }
const std::vector<Integer>& FgAbelianGroup::invariant_factors() const {
  return state_->invariant_factors;
}
std::size_t FgAbelianGroup::free_rank() const { return state_->free_rank; }
std::size_t FgAbelianGroup::canonical_rank() const { return state_->moduli.size(); }
const std::vector<Integer>& FgAbelianGroup::moduli() const { return state_->moduli; }
const IntMatrix& FgAbelianGroup::to_canonical() const { return state_->to_canonical; }
const IntMatrix& FgAbelianGroup::canonical_generators() const {
  return state_->canonical_generators;
}

Integer FgAbelianGroup::order() const {
  if (!is_finite()) throw InfiniteGroup("order of an infinite group " + to_string());
  Integer n = 1;
  for (const auto& d : invariant_factors()) n *= d;
  return n;
}

Integer FgAbelianGroup::exponent() const {
  if (!is_finite()) return Integer(0);
  return invariant_factors().empty() ? Integer(1) : invariant_factors().back();
}

IntVector FgAbelianGroup::coordinates(std::span<const Integer> x) const {
  if (x.size() != generator_count()) throw DimensionMismatch("element length mismatch");
  IntVector y = to_canonical().apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (moduli()[i] != 0) y[i] = mod_nonneg(y[i], moduli()[i]);
  }
  return y;
}

bool FgAbelianGroup::is_zero_element(std::span<const Integer> x) const {
  auto c = coordinates(x);
  return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
}

bool FgAbelianGroup::equal_elements(std::span<const Integer> x, std::span<const Integer> y) const {
  return coordinates(x) == coordinates(y);
}

IntVector FgAbelianGroup::lift(std::span<const Integer> canonical) const {
  if (canonical.size() != canonical_rank()) throw DimensionMismatch("canonical length mismatch");
  return canonical_generators().apply(canonical);
}

Integer FgAbelianGroup::element_order(std::span<const Integer> x) const {
  auto c = coordinates(x);
  Integer order = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (moduli()[i] == 0) return Integer(0);
    order = lcm(order, moduli()[i] / gcd(c[i], moduli()[i]));
  }
  return order;
}

std::vector<IntVector> FgAbelianGroup::elements(std::size_t budget) const {
  Integer total = order();
  if (total > Integer(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("element enumeration of " + to_string(), total.get_ui(), budget);
  }
  std::vector<IntVector> out;
  IntVector current(canonical_rank(), Integer(0));
  const auto& m = moduli();
  for (;;) {
    out.push_back(current);
    std::size_t pos = current.size();
    while (pos > 0) {
      --pos;
      current[pos] += 1;
      if (current[pos] < m[pos]) break;
      current[pos] = 0;
      if (pos == 0) return out;
    }
    if (current.empty()) return out;
  }
}

bool FgAbelianGroup::isomorphic_to(const FgAbelianGroup& other) const {
  return invariant_factors() == other.invariant_factors() && free_rank() == other.free_rank();
}

bool FgAbelianGroup::same_presentation(const FgAbelianGroup& other) const {
  return state_ == other.state_ || relations() == other.relations();
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& d : invariant_factors()) {
    out << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank() > 0) {
    out << (first ? "" : " + ") << "Z";
    if (free_rank() > 1) out << "^" << free_rank();
  }
  return out.str();
}

AbHom::AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count()) {
    throw DimensionMismatch("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", expected " +
                            std::to_string(target_.generator_count()) + "x" +
                            std::to_string(source_.generator_count()));
  }
  if (!columns_vanish(target_, matrix_ * source_.relations())) {
    throw IllDefinedHomomorphism("matrix does not respect the source relations");
  }
}

AbHom AbHom::identity(const FgAbelianGroup& a) {
  return AbHom(a, a, IntMatrix::identity(a.generator_count()));
}

AbHom AbHom::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return AbHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

bool AbHom::is_zero() const { return columns_vanish(target_, matrix_); }

AbHom AbHom::after(const AbHom& first) const {
  if (!first.target().same_presentation(source_)) {
    throw DimensionMismatch("composition of homomorphisms with mismatched groups");
  }
  return AbHom(first.source(), target_, matrix_ * first.matrix());
}

Subgroup kernel(const AbHom& f) {
  const FgAbelianGroup& a = f.source();
  LatticeBasis lattice(preimage_generators(f));
  FgAbelianGroup group(lattice.coordinates_of_columns(a.relations()));
  AbHom inclusion(group, a, lattice.basis());
  return Subgroup{std::move(group), std::move(inclusion)};
}

Subgroup image(const AbHom& f) {
  FgAbelianGroup group(preimage_generators(f));
  AbHom inclusion(group, f.target(), f.matrix());
  return Subgroup{std::move(group), std::move(inclusion)};
}

Quotient cokernel(const AbHom& f) {
  const FgAbelianGroup& b = f.target();
  FgAbelianGroup group(b.relations().hstack(f.matrix()));
  AbHom projection(b, group, IntMatrix::identity(b.generator_count()));
  return Quotient{std::move(group), std::move(projection)};
}

FgAbelianGroup homology_at(const AbHom& g, const AbHom& f) {
  if (!g.target().same_presentation(f.source())) {
    throw DimensionMismatch("homology_at: maps do not compose");
  }
  if (!f.after(g).is_zero()) throw Error("homology_at: composite is not zero");
  LatticeBasis lattice(preimage_generators(f));
  IntMatrix relations = f.source().relations().hstack(g.matrix());
  return FgAbelianGroup(lattice.coordinates_of_columns(relations));
}

bool is_injective(const AbHom& f) { return kernel(f).group.is_trivial(); }

bool is_surjective(const AbHom& f) { return cokernel(f).group.is_trivial(); }

FreeResolution free_resolution(const FgAbelianGroup& a) {
  LatticeBasis lattice(a.relations());
  return FreeResolution{a.generator_count(), lattice.basis()};
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const std::size_t nb = b.generator_count();
  const std::size_t na = a.generator_count();
  IntMatrix rel = a.relations().kron_identity(nb).hstack(b.relations().block_repeat(na));
  return FgAbelianGroup(std::move(rel));
}

namespace {

// For 0 -> Z^k --alpha--> Z^n -> A -> 0, the maps
// B^k -> B^n (alpha (x) 1) and B^n -> B^k (alpha^T (x) 1).
struct ResolutionMaps {
  AbHom forward;
  AbHom backward;
};

ResolutionMaps resolution_maps(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  FreeResolution res = free_resolution(a);
  const std::size_t k = res.relations.cols();
  const std::size_t nb = b.generator_count();
  FgAbelianGroup bk = FgAbelianGroup::power(b, k);
  FgAbelianGroup bn = FgAbelianGroup::power(b, res.generators);
  AbHom forward(bk, bn, res.relations.kron_identity(nb));
  AbHom backward(bn, bk, res.relations.transpose().kron_identity(nb));
  return ResolutionMaps{std::move(forward), std::move(backward)};
}

}  // namespace

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return kernel(resolution_maps(a, b).forward).group;
}

FgAbelianGroup hom(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return kernel(resolution_maps(a, b).backward).group;
}

FgAbelianGroup ext(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return cokernel(resolution_maps(a, b).backward).group;
}

PrimaryParts primary_parts(const FgAbelianGroup& a) {
  std::vector<Integer> two;
  std::vector<Integer> odd;
  for (const auto& d : a.invariant_factors()) {
    Integer power = 1;
    Integer rest = d;
    while (divides(Integer(2), rest)) {
      rest /= 2;
      power *= 2;
    }
    if (power > 1) two.push_back(power);
    if (rest > 1) odd.push_back(rest);
  }
  return PrimaryParts{FgAbelianGroup::from_invariants(two, 0),
                      FgAbelianGroup::from_invariants(odd, 0), a.free_rank()};
}

FgAbelianGroup tensor_square(const FgAbelianGroup& a) { return tensor(a, a); }

Quotient tensor_sigma(const FgAbelianGroup& a) {
  FgAbelianGroup square = tensor_square(a);
  const std::size_t n = a.generator_count();
  std::vector<Triplet> sym;
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      sym.push_back(Triplet{i * n + j, col, Integer(1)});
      sym.push_back(Triplet{j * n + i, col, Integer(1)});
      ++col;
    }
  }
  IntMatrix symmetrizers = IntMatrix::from_triplets(n * n, col, std::move(sym));
  FgAbelianGroup quotient(square.relations().hstack(symmetrizers));
  AbHom projection(square, quotient, IntMatrix::identity(n * n));
  return Quotient{std::move(quotient), std::move(projection)};
}

bool ExtensionDatum::is_exact() const {
  return is_injective(inclusion) && is_surjective(projection) &&
         homology_at(inclusion, projection).is_trivial();
}

bool ExtensionDatum::has_section() const {
  if (!quotient.is_finite() || !total.is_finite()) {
    throw InfiniteGroup("section search needs finite groups");
  }
  const auto total_elements = total.elements();
  std::vector<IntVector> images;
  images.reserve(total_elements.size());
  for (const auto& coords : total_elements) {
    images.push_back(quotient.coordinates(projection.apply(total.lift(coords))));
  }
  const auto& total_moduli = total.moduli();
  for (std::size_t t = 0; t < quotient.canonical_rank(); ++t) {
    const Integer& d = quotient.moduli()[t];
    IntVector unit(quotient.canonical_rank(), Integer(0));
    unit[t] = 1;
    bool found = false;
    for (std::size_t e = 0; e < total_elements.size() && !found; ++e) {
      if (images[e] != unit) continue;
      bool killed = true;
      for (std::size_t i = 0; i < total_moduli.size() && killed; ++i) {
        killed = divides(total_moduli[i], d * total_elements[e][i]);
      }
      found = killed;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<ExtensionClass> classify_extensions(const FgAbelianGroup& kernel_group,
                                                const FgAbelianGroup& quotient) {
  if (!kernel_group.is_finite() || !quotient.is_finite()) {
    throw InfiniteGroup("classify_extensions needs finite kernel and quotient");
  }
  FreeResolution res = free_resolution(quotient);
  const std::size_t k = res.relations.cols();
  const std::size_t nq = res.generators;
  const std::size_t nk = kernel_group.generator_count();

  FgAbelianGroup kn = FgAbelianGroup::power(kernel_group, nq);
  FgAbelianGroup kk = FgAbelianGroup::power(kernel_group, k);
  AbHom restrict(kn, kk, res.relations.transpose().kron_identity(nk));
  Quotient ext_group = cokernel(restrict);

  // Block rows of the total presentation: kernel generators, then quotient generators.
  IntMatrix kernel_rel = kernel_group.relations().vstack(IntMatrix(nq, kernel_group.relations().cols()));
  const IntMatrix neg_alpha_t = res.relations.scaled(Integer(-1)).transpose();

  std::vector<ExtensionClass> classes;
  for (const auto& coords : ext_group.group.elements()) {
    IntVector cocycle = ext_group.group.lift(coords);  // in kernel^k generator coordinates
    std::vector<Triplet> cols;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < nk; ++l) {
        const Integer& v = cocycle[j * nk + l];
        if (v != 0) cols.push_back(Triplet{l, j, v});
      }
      for (const auto& e : neg_alpha_t.row(j)) {
        cols.push_back(Triplet{nk + e.col, j, e.value});
      }
    }
    IntMatrix glue = IntMatrix::from_triplets(nk + nq, k, std::move(cols));
    FgAbelianGroup total(kernel_rel.hstack(glue));

    IntMatrix incl = IntMatrix::identity(nk).vstack(IntMatrix(nq, nk));
    IntMatrix proj = IntMatrix(nq, nk).hstack(IntMatrix::identity(nq));
    ExtensionDatum datum{kernel_group, total, quotient, AbHom(kernel_group, total, incl),
                         AbHom(total, quotient, proj)};
    const bool split = datum.has_section();
    classes.push_back(ExtensionClass{std::move(datum), split, coords});
  }
  return classes;
}

}  // namespace homalg
