#include "homalg/chain_complex.hpp"

#include <map>
#include <mutex>

#include "homalg/cache.hpp"
#include "homalg/errors.hpp"
#include "homalg/smith.hpp"

namespace homalg {

namespace {

struct BoundarySolver {
  IntMatrix left;                  // U
  std::vector<Integer> diagonal;
  IntMatrix right_head;            // first rank columns of V
};

}  // namespace

struct ChainComplex::State {
  int lowest = 0;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;  // d_lowest .. d_{highest+1}

  std::mutex mutex;
  std::map<int, std::unique_ptr<HomologyGroup>> homology;
  std::map<int, std::unique_ptr<BoundarySolver>> solvers;
};

ChainComplex::ChainComplex() : ChainComplex(0, {0}, {}) {}

ChainComplex::ChainComplex(int lowest, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries)
    : state_(std::make_shared<State>()) {
  if (ranks.empty()) throw DimensionMismatch("chain complex needs at least one degree");
  if (boundaries.size() + 1 != ranks.size()) {
    throw DimensionMismatch("chain complex: expected " + std::to_string(ranks.size() - 1) +
                            " boundary matrices, got " + std::to_string(boundaries.size()));
  }
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (boundaries[i].rows() != ranks[i] || boundaries[i].cols() != ranks[i + 1]) {
      throw DimensionMismatch("boundary of degree " + std::to_string(lowest + static_cast<int>(i) + 1) +
                              " has shape " + std::to_string(boundaries[i].rows()) + "x" +
                              std::to_string(boundaries[i].cols()));
    }
  }
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (!(boundaries[i] * boundaries[i + 1]).is_zero()) {
      throw NotAComplex("d o d != 0 at degree " + std::to_string(lowest + static_cast<int>(i) + 2));
    }
  }
  state_->lowest = lowest;
  state_->boundaries.reserve(ranks.size() + 1);
  state_->boundaries.emplace_back(0, ranks.front());
  for (auto& b : boundaries) state_->boundaries.push_back(std::move(b));
  state_->boundaries.emplace_back(ranks.back(), 0);
  state_->ranks = std::move(ranks);
}

int ChainComplex::lowest_degree() const { return state_->lowest; }

int ChainComplex::highest_degree() const {
  return state_->lowest + static_cast<int>(state_->ranks.size()) - 1;
}

std::size_t ChainComplex::rank(int n) const {
  return in_range(n) ? state_->ranks[static_cast<std::size_t>(n - lowest_degree())] : 0;
}

const IntMatrix& ChainComplex::boundary(int n) const {
  if (n < lowest_degree() || n > highest_degree() + 1) {
    throw DegreeOutOfRange("no boundary matrix stored for degree " + std::to_string(n));
  }
  return state_->boundaries[static_cast<std::size_t>(n - lowest_degree())];
}

const HomologyGroup& ChainComplex::homology_data(int n) const {
  if (!in_range(n)) {
    throw DegreeOutOfRange("degree " + std::to_string(n) + " outside [" +
                           std::to_string(lowest_degree()) + ", " +
                           std::to_string(highest_degree()) + "]");
  }
  std::lock_guard lock(state_->mutex);
  auto& slot = state_->homology[n];
  if (slot) return *slot;

  auto h = std::unique_ptr<HomologyGroup>(new HomologyGroup());
  h->degree_ = n;
  h->outgoing_ = boundary(n);
  const IntMatrix& incoming = boundary(n + 1);
  const std::size_t m = rank(n);

  SmithOptions opts;
  opts.left = opts.left_inverse = true;
  SmithDecomposition dec = smith_decompose_cached(incoming, opts);
  h->left_ = std::move(*dec.left);
  const IntMatrix& left_inverse = *dec.left_inverse;
  h->rank_ = dec.rank();
  for (std::size_t i = 0; i < dec.rank(); ++i) {
    if (!is_unit(dec.diagonal[i])) {
      h->torsion_.push_back(dec.diagonal[i]);
      h->torsion_index_.push_back(i);
    }
  }

  // Cycles among the trailing basis vectors: kernel of d_n restricted there.
  IntMatrix trailing = left_inverse.col_range(h->rank_, m);
  IntMatrix cycle_basis = kernel_basis(h->outgoing_ * trailing);
  h->free_cycles_ = LatticeBasis(cycle_basis);
  const std::size_t free_rank = cycle_basis.cols();

  h->group_ = FgAbelianGroup::from_invariants(h->torsion_, free_rank);

  IntMatrix raw_generators =
      left_inverse.select_cols(h->torsion_index_).hstack(trailing * h->free_cycles_.basis());
  h->generator_cycles_ = raw_generators * h->group_.canonical_generators();

  slot = std::move(h);
  return *slot;
}

IntVector HomologyGroup::class_coordinates(std::span<const Integer> z) const {
  if (z.size() != outgoing_.cols()) {
    throw DimensionMismatch("chain has " + std::to_string(z.size()) + " coordinates, degree " +
                            std::to_string(degree_) + " has rank " + std::to_string(outgoing_.cols()));
  }
  IntVector dz = outgoing_.apply(z);
  for (const auto& v : dz) {
    if (v != 0) throw NotACycle("chain of degree " + std::to_string(degree_) + " is not a cycle");
  }
  IntVector y = left_.apply(z);
  IntVector raw;
  raw.reserve(torsion_.size() + free_cycles_.rank());
  for (std::size_t t = 0; t < torsion_.size(); ++t) raw.push_back(y[torsion_index_[t]]);
  auto free = free_cycles_.coordinates(std::span<const Integer>(y).subspan(rank_));
  if (!free) throw Error("cycle outside the computed cycle lattice");
  raw.insert(raw.end(), free->begin(), free->end());
  return group_.coordinates(raw);
}

std::optional<IntVector> ChainComplex::solve_boundary(int n, std::span<const Integer> z) const {
  if (!in_range(n)) throw DegreeOutOfRange("degree " + std::to_string(n) + " out of range");
  if (z.size() != rank(n)) throw DimensionMismatch("chain length does not match rank");
  const BoundarySolver* solver = nullptr;
  {
    std::lock_guard lock(state_->mutex);
    auto& slot = state_->solvers[n];
    if (!slot) {
      SmithOptions opts;
      opts.left = opts.right = true;
      SmithDecomposition dec = smith_decompose_cached(boundary(n + 1), opts);
      slot = std::make_unique<BoundarySolver>();
      slot->left = std::move(*dec.left);
      slot->right_head = dec.right->col_range(0, dec.rank());
      slot->diagonal = std::move(dec.diagonal);
    }
    solver = slot.get();
  }
  IntVector y = solver->left.apply(z);
  const std::size_t r = solver->diagonal.size();
  IntVector w(r);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!divides(solver->diagonal[i], y[i])) return std::nullopt;
      w[i] = y[i] / solver->diagonal[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return solver->right_head.apply(w);
}

FgAbelianGroup homology(const ChainComplex& c, int n) { return c.homology_data(n).group(); }

bool is_cycle(const ChainComplex& c, int n, std::span<const Integer> z) {
  if (!c.in_range(n)) throw DegreeOutOfRange("degree " + std::to_string(n) + " out of range");
  if (z.size() != c.rank(n)) throw DimensionMismatch("chain length does not match rank");
  for (const auto& v : c.boundary(n).apply(z)) {
    if (v != 0) return false;
  }
  return true;
}

std::optional<IntVector> boundary_witness(const ChainComplex& c, int n, std::span<const Integer> z) {
  return c.solve_boundary(n, z);
}

bool is_boundary(const ChainComplex& c, int n, std::span<const Integer> z) {
  return c.solve_boundary(n, z).has_value();
}

namespace {

Integer class_order(const IntVector& coords, const std::vector<Integer>& moduli) {
  Integer order = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (moduli[i] == 0) return 0;
    order = lcm(order, moduli[i] / gcd(moduli[i], coords[i]));
  }
  return order;
}

CycleClass make_class(int degree, IntVector coords, std::vector<Integer> moduli) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli[i] != 0) coords[i] = mod_nonneg(coords[i], moduli[i]);
  }
  Integer order = class_order(coords, moduli);
  return CycleClass{degree, std::move(coords), std::move(moduli), std::move(order)};
}

void require_compatible(const CycleClass& a, const CycleClass& b) {
  if (a.degree != b.degree || a.moduli != b.moduli) {
    throw GroupMismatch("cycle classes live in different homology groups");
  }
}

}  // namespace

bool CycleClass::is_zero() const {
  for (const auto& c : coordinates) {
    if (c != 0) return false;
  }
  return true;
}

CycleClass CycleClass::operator+(const CycleClass& rhs) const {
  require_compatible(*this, rhs);
  IntVector sum(coordinates.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = coordinates[i] + rhs.coordinates[i];
  return make_class(degree, std::move(sum), moduli);
}

CycleClass CycleClass::operator-(const CycleClass& rhs) const { return *this + rhs.scaled(-1); }

CycleClass CycleClass::scaled(const Integer& k) const {
  IntVector out(coordinates.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coordinates[i] * k;
  return make_class(degree, std::move(out), moduli);
}

bool CycleClass::operator==(const CycleClass& rhs) const {
  return degree == rhs.degree && moduli == rhs.moduli && coordinates == rhs.coordinates;
}

std::string CycleClass::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (i) s += ", ";
    s += homalg::to_string(coordinates[i]);
    s += moduli[i] == 0 ? std::string(" in Z") : " mod " + homalg::to_string(moduli[i]);
  }
  return s + ")";
}

CycleClass cycle_class(const ChainComplex& c, int n, std::span<const Integer> z) {
  const HomologyGroup& h = c.homology_data(n);
  return make_class(n, h.class_coordinates(z), h.group().moduli());
}

}  // namespace homalg
