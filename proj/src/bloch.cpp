#include "homalg/bloch.hpp"

#include "homalg/errors.hpp"

namespace homalg {

namespace {

Integer log_of(const FiniteField& f, FieldElement a) { return Integer(static_cast<unsigned long>(f.log(a))); }

// coordinate of a (x) (1 - a) in F* (x) F*
Integer steinberg(const FiniteField& f, FieldElement a) {
  return log_of(f, a) * log_of(f, f.sub(1, a));
}

std::array<FieldElement, 5> relator_terms(const FiniteField& f, FieldElement a, FieldElement b) {
  const FieldElement one = 1;
  return {a, b, f.div(b, a), f.div(f.sub(one, f.inv(a)), f.sub(one, f.inv(b))),
          f.div(f.sub(one, a), f.sub(one, b))};
}

constexpr std::array<int, 5> kRelatorSigns{1, -1, 1, -1, 1};

FgAbelianGroup z_mod(std::uint32_t n) { return FgAbelianGroup::cyclic(Integer(static_cast<unsigned long>(n))); }

}  // namespace

std::size_t PreBlochPresentation::generator_index(FieldElement a) const { return a - 2; }

bool is_admissible(const FiniteField& f, FieldElement a, FieldElement b) {
  return a < f.q() && b < f.q() && a > 1 && b > 1 && a != b;
}

PreBlochPresentation pre_bloch_presentation(const FiniteField& f, std::uint64_t budget) {
  PreBlochPresentation pres;
  const std::uint32_t q = f.q();
  for (FieldElement a = 2; a < q; ++a) pres.generators.push_back(a);
  const std::uint64_t relators = q > 3 ? static_cast<std::uint64_t>(q - 2) * (q - 3) : 0;
  if (relators > budget) {
    throw BudgetExceeded("five-term relators over F_" + std::to_string(q), relators, budget);
  }
  std::vector<Triplet> t;
  t.reserve(relators * 5);
  std::size_t col = 0;
  for (FieldElement a = 2; a < q; ++a) {
    for (FieldElement b = 2; b < q; ++b) {
      if (a == b) continue;
      auto terms = relator_terms(f, a, b);
      for (std::size_t i = 0; i < 5; ++i) {
        if (terms[i] < 2) throw Error("five-term relator references an invalid symbol");
        t.push_back({pres.generator_index(terms[i]), col, Integer(kRelatorSigns[i])});
      }
      pres.pairs.emplace_back(a, b);
      ++col;
    }
  }
  pres.relators = IntMatrix::from_triplets(pres.generators.size(), col, std::move(t));
  return pres;
}

PreBloch pre_bloch(const FiniteField& f, std::uint64_t budget) {
  PreBlochPresentation pres = pre_bloch_presentation(f, budget);
  FgAbelianGroup g(pres.relators);
  return PreBloch{std::move(g), std::move(pres)};
}

FgAbelianGroup unit_tensor_square(const FiniteField& f) { return tensor_square(z_mod(f.q() - 1)); }

Quotient unit_tensor_sigma(const FiniteField& f) { return tensor_sigma(z_mod(f.q() - 1)); }

AbHom lambda_map(const FiniteField& f, const PreBloch& p) {
  Quotient sigma = unit_tensor_sigma(f);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < p.presentation.generators.size(); ++i) {
    t.push_back({0, i, steinberg(f, p.presentation.generators[i])});
  }
  IntMatrix lifted = IntMatrix::from_triplets(1, p.presentation.generators.size(), std::move(t));
  try {
    return AbHom(p.group, sigma.group, sigma.projection.matrix() * lifted);
  } catch (const IllDefinedHomomorphism& e) {
    throw WellDefinednessFailure(std::string("lambda does not kill the five-term relators: ") + e.what());
  }
}

FgAbelianGroup bloch_group(const FiniteField& f, const PreBloch& p) {
  return kernel(lambda_map(f, p)).group;
}

bool lambda_prime_relator_check(const FiniteField& f, FieldElement a, FieldElement b) {
  if (!is_admissible(f, a, b)) {
    throw InadmissiblePair("(" + f.to_string(a) + ", " + f.to_string(b) + ") is not admissible");
  }
  const Integer m(static_cast<unsigned long>(f.q() - 1));
  auto terms = relator_terms(f, a, b);
  Integer lhs = 0;
  for (std::size_t i = 0; i < 5; ++i) lhs += kRelatorSigns[i] * steinberg(f, terms[i]);
  const Integer rhs = 2 * log_of(f, a) * log_of(f, terms[4]);
  return mod_nonneg(lhs - rhs, m) == 0;
}

MilnorK2 milnor_k2(const FiniteField& f) {
  FgAbelianGroup square = unit_tensor_square(f);
  Quotient sigma = unit_tensor_sigma(f);
  std::vector<Triplet> t;
  std::size_t col = 0;
  for (FieldElement a = 2; a < f.q(); ++a) t.push_back({0, col++, steinberg(f, a)});
  IntMatrix symbols = IntMatrix::from_triplets(1, col, std::move(t));
  FgAbelianGroup free_symbols = FgAbelianGroup::free(col);

  MilnorK2 k{cokernel(AbHom(free_symbols, square, symbols)),
             cokernel(AbHom(free_symbols, sigma.group, sigma.projection.matrix() * symbols))};
  if (!k.from_tensor.group.isomorphic_to(k.from_sigma.group)) {
    throw PresentationMismatch("K2 presentations disagree over F_" + std::to_string(f.q()) + ": " +
                               k.from_tensor.group.to_string() + " vs " + k.from_sigma.group.to_string());
  }
  return k;
}

FourTermReport verify_four_term(const FiniteField& f, std::uint64_t budget) {
  PreBloch p = pre_bloch(f, budget);
  AbHom lambda = lambda_map(f, p);
  Subgroup b = kernel(lambda);
  MilnorK2 k = milnor_k2(f);
  Quotient sigma = unit_tensor_sigma(f);

  // (F*(x)F*)_sigma -> F*(x)F* / <Steinberg>, induced by the identity on
  // g (x) g; its well-definedness is antisymmetry of symbols.
  AbHom to_k2(sigma.group, k.from_tensor.group, k.from_tensor.projection.matrix());
  FourTermReport r;
  r.pre_bloch = p.group;
  r.bloch = b.group;
  r.tensor_sigma = sigma.group;
  r.lambda_image = image(lambda).group;
  r.k2 = k.from_tensor.group;
  const FgAbelianGroup zero;
  r.exact[0] = homology_at(AbHom::zero(zero, b.group), b.inclusion).is_trivial();
  r.exact[1] = homology_at(b.inclusion, lambda).is_trivial();
  r.exact[2] = homology_at(lambda, to_k2).is_trivial();
  r.exact[3] = homology_at(to_k2, AbHom::zero(r.k2, zero)).is_trivial();
  return r;
}

TorTilde tor_tilde(const FiniteField& f) {
  const FgAbelianGroup mu = z_mod(f.q() - 1);
  TorTilde out;
  out.tor = tor(mu, mu);
  if (f.characteristic() == 2) {
    out.group = out.tor;
    return out;
  }
  std::vector<ExtensionClass> classes = classify_extensions(z_mod(2), out.tor);
  const ExtensionClass* nonsplit = nullptr;
  for (const auto& c : classes) {
    if (c.split) continue;
    if (nonsplit) throw Error("more than one non-split extension of Tor by Z/2");
    nonsplit = &c;
  }
  if (!nonsplit) throw Error("no non-split extension of Tor by Z/2");
  out.group = nonsplit->datum.total;
  out.extension = nonsplit->datum;
  return out;
}

}  // namespace homalg
