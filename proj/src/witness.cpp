#include "homalg/witness.hpp"

#include <array>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

using Term = std::pair<int, BarChain::Symbol>;

BarChain make_chain(const FiniteGroup& g, std::size_t degree, const std::vector<Term>& terms) {
  BarChain z(g, degree);
  for (const auto& [c, s] : terms) z.add(s, c);
  return z;
}

// One summand of the splitting pattern, with xi^i replaced by xi^y.
void six_terms(const CyclotomicContext& ctx, long y, std::vector<Term>& out) {
  const Element x1 = ctx.torus_element(1, 0);
  const Element x2 = ctx.torus_element(0, 1);
  const Element right = ctx.torus_element(0, y);
  const Element left = ctx.torus_element(y, 0);
  out.push_back({1, {x1, x2, right}});
  out.push_back({-1, {x2, x1, right}});
  out.push_back({1, {x2, right, x1}});
  out.push_back({1, {x1, left, x2}});
  out.push_back({-1, {x1, x2, left}});
  out.push_back({1, {x2, x1, left}});
}

IdentityCheck check(std::string name, std::string statement, const BarChain& lhs, const BarChain& rhs) {
  IdentityCheck out{std::move(name), std::move(statement), false, lhs - rhs};
  out.holds = out.residual.is_zero();
  return out;
}

}  // namespace

CyclotomicContext::CyclotomicContext(std::size_t n) : n_(n), gm2_(gm2(n)) {
  std::vector<Element> images(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) images[a * n + b] = static_cast<Element>(b * n + a);
  }
  swap_ = GroupHom{gm2_.torus, gm2_.torus, std::move(images)};
}

std::size_t CyclotomicContext::half() const {
  if (!even()) throw OddOrder("-1 is not a power of xi for odd n = " + std::to_string(n_));
  return n_ / 2;
}

Element CyclotomicContext::torus_element(long a, long b) const {
  const long n = static_cast<long>(n_);
  const long ar = ((a % n) + n) % n;
  const long br = ((b % n) + n) % n;
  return static_cast<Element>(ar * n + br);
}

BarChain CyclotomicContext::to_monomial(const BarChain& torus_chain) const {
  return map_chain(gm2_.torus_embedding, torus_chain);
}

std::string CyclotomicContext::tor_label() const { return "<xi," + std::to_string(n_) + ",xi>"; }

BarChain chain_h(const CyclotomicContext& ctx) {
  const long m = static_cast<long>(ctx.half());
  const Element minus = ctx.torus_element(m, 0);
  const Element x2 = ctx.torus_element(0, 1);
  return make_chain(ctx.torus(), 2, {{1, {minus, x2}}, {-1, {x2, minus}}});
}

BarChain chain_chi_range(const CyclotomicContext& ctx, long first, long last) {
  std::vector<Term> terms;
  for (long i = first; i <= last; ++i) six_terms(ctx, i, terms);
  return make_chain(ctx.torus(), 3, terms);
}

BarChain chain_chi(const CyclotomicContext& ctx) {
  return chain_chi_range(ctx, 1, static_cast<long>(ctx.n()));
}

BarChain chain_chi_k(const CyclotomicContext& ctx, int k, MiddleTermForm form) {
  const long m = static_cast<long>(ctx.half());
  const Element x1 = ctx.torus_element(1, 0);
  const Element x2 = ctx.torus_element(0, 1);
  const Element minus_right = ctx.torus_element(0, m);  // (1,-1)
  const Element minus_left = ctx.torus_element(m, 0);   // (-1,1)
  std::vector<Term> terms;
  switch (k) {
    case 1:
      for (long i = 1; i <= m - 1; ++i) six_terms(ctx, i, terms);
      break;
    case 2:
      // -xi^i = xi^(m+i)
      for (long i = 1; i <= m - 1; ++i) six_terms(ctx, m + i, terms);
      break;
    case 3:
      terms = {{1, {minus_right, minus_right, x1}},
               {-1, {minus_right, x1, minus_right}},
               {1, {x1, minus_right, minus_right}}};
      break;
    case 4:
      terms = {{1, {minus_left, minus_left, x2}},
               {-1, {minus_left, x2, minus_left}},
               {1, {x2, minus_left, minus_left}}};
      break;
    case 5:
      terms = {{1, {x1, x2, minus_right}},
               {-1, {x2, x1, minus_right}},
               {1, {form == MiddleTermForm::middle_summand ? x2 : x1, minus_right, x1}}};
      break;
    case 6:
      terms = {{1, {x1, minus_left, x2}}, {-1, {x1, x2, minus_left}}, {1, {x2, x1, minus_left}}};
      break;
    default:
      throw DegreeOutOfRange("correction term index " + std::to_string(k) + " outside 1..6");
  }
  return make_chain(ctx.torus(), 3, terms);
}

BarChain chain_b(const CyclotomicContext& ctx) { return chain_chi_k(ctx, 1) + chain_chi_k(ctx, 3); }

BarChain chain_eta(const CyclotomicContext& ctx) {
  const long m = static_cast<long>(ctx.half());
  const Element s = ctx.monomial().s.index;
  const Element x1 = ctx.torus_element(1, 0);
  const Element x2 = ctx.torus_element(0, 1);
  const Element mr = ctx.torus_element(0, m);
  const Element ml = ctx.torus_element(m, 0);
  return make_chain(ctx.group(), 4,
                    {{1, {s, mr, mr, x1}},
                     {-1, {s, mr, x1, mr}},
                     {1, {ml, s, x1, mr}},
                     {-1, {ml, x2, s, mr}},
                     {1, {ml, x2, ml, s}},
                     {-1, {x2, s, mr, mr}},
                     {1, {s, x1, mr, mr}},
                     {-1, {ml, s, mr, x1}},
                     {1, {x2, ml, s, mr}},
                     {-1, {x2, ml, ml, s}},
                     {1, {ml, ml, s, x1}},
                     {-1, {ml, ml, x2, s}}});
}

BarChain chain_upsilon(const CyclotomicContext& ctx) {
  const long m = static_cast<long>(ctx.half());
  const Element x1 = ctx.torus_element(1, 0);
  const Element x2 = ctx.torus_element(0, 1);
  const Element mr = ctx.torus_element(0, m);
  const Element ml = ctx.torus_element(m, 0);
  std::vector<Term> terms;
  for (long i = 0; i <= m - 1; ++i) {
    const Element right = ctx.torus_element(0, i);
    const Element left = ctx.torus_element(i, 0);
    terms.push_back({1, {x1, x2, right, mr}});
    terms.push_back({-1, {x2, x1, right, mr}});
    terms.push_back({-1, {x2, right, mr, x1}});
    terms.push_back({1, {x2, right, x1, mr}});
    terms.push_back({1, {x2, x1, left, ml}});
    terms.push_back({-1, {x1, x2, left, ml}});
    terms.push_back({-1, {x1, left, ml, x2}});
    terms.push_back({1, {x1, left, x2, ml}});
  }
  return make_chain(ctx.torus(), 4, terms);
}

BarChain chain_omega(const CyclotomicContext& ctx) {
  return ctx.to_monomial(chain_b(ctx)) - homotopy_rho(ctx.monomial().s, ctx.to_monomial(chain_h(ctx)));
}

bool WitnessReport::all_hold() const {
  for (const auto& c : identities) {
    if (!c.holds) return false;
  }
  return decomposition.holds && omega_is_cycle;
}

WitnessReport verify_identities(const CyclotomicContext& ctx, MiddleTermForm form) {
  ctx.half();
  WitnessReport out;
  out.n = ctx.n();

  std::array<BarChain, 7> chi_k{BarChain(ctx.torus(), 3), BarChain(ctx.torus(), 3),
                                BarChain(ctx.torus(), 3), BarChain(ctx.torus(), 3),
                                BarChain(ctx.torus(), 3), BarChain(ctx.torus(), 3),
                                BarChain(ctx.torus(), 3)};
  for (int k = 1; k <= 6; ++k) chi_k[k] = chain_chi_k(ctx, k, form);

  const BarChain h = chain_h(ctx);
  const BarChain b = chi_k[1] + chi_k[3];
  out.identities.push_back(check("boundary_b", "d(b) = tau(h) - h", boundary(b),
                                 map_chain(ctx.torus_swap(), h) - h));

  auto up = [&](const BarChain& z) { return ctx.to_monomial(z); };
  const BarChain rho_h = homotopy_rho(ctx.monomial().s, up(h));
  const BarChain eta = chain_eta(ctx);
  out.identities.push_back(check("boundary_eta", "d(eta) = -2 rho_s(h) + chi_3 - chi_4", boundary(eta),
                                 rho_h.scaled(-2) + up(chi_k[3]) - up(chi_k[4])));

  const BarChain upsilon = up(chain_upsilon(ctx));
  out.identities.push_back(
      check("boundary_upsilon", "d(upsilon) = chi_1 - chi_2 + chi_3 - chi_5 - chi_6 + chi_4",
            boundary(upsilon),
            up(chi_k[1] - chi_k[2] + chi_k[3] - chi_k[5] - chi_k[6] + chi_k[4])));

  const BarChain omega = up(b) - rho_h;
  const BarChain chi = chain_chi(ctx);
  out.identities.push_back(check("two_omega", "2 omega - chi = d(eta + upsilon)",
                                 omega.scaled(2) - up(chi), boundary(eta + upsilon)));

  out.decomposition = check("chi_decomposition", "chi = chi_1 + chi_5 + chi_6 + chi_2", chi,
                            chi_k[1] + chi_k[5] + chi_k[6] + chi_k[2]);
  out.omega_is_cycle = boundary(omega).is_zero();
  return out;
}

ResolvedClasses resolve_classes(const CyclotomicContext& ctx, std::uint64_t budget) {
  ctx.half();
  const std::uint64_t needed = bar_rank(ctx.group(), 4);
  if (needed > budget) {
    throw BudgetExceeded("degree-4 bar basis of " + ctx.group().name(), needed, budget);
  }
  const ChainComplex monomial = bar_complex(ctx.group(), 4, budget);
  const ChainComplex torus = bar_complex(ctx.torus(), 4, budget);

  ResolvedClasses out;
  out.n = ctx.n();
  const BarChain chi_torus = chain_chi(ctx);
  const IntVector omega_coords = to_coordinates(chain_omega(ctx));
  const IntVector chi_coords = to_coordinates(ctx.to_monomial(chi_torus));
  const IntVector chi_torus_coords = to_coordinates(chi_torus);
  out.omega = cycle_class(monomial, 3, omega_coords);
  out.chi = cycle_class(monomial, 3, chi_coords);
  out.chi_torus = cycle_class(torus, 3, chi_torus_coords);
  out.h3_monomial = homology(monomial, 3);
  out.h3_torus = homology(torus, 3);
  out.twice_omega_is_chi = out.omega.scaled(2) == out.chi;
  out.chi_nonzero_in_monomial = !out.chi.is_zero();
  return out;
}

}  // namespace homalg
