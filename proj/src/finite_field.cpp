#include "homalg/finite_field.hpp"

#include <stdexcept>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g (g nonzero) over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  std::uint32_t lead_inv = 1;
  while (lead_inv * g.back() % p != 1) ++lead_inv;
  while (f.size() > dg) {
    const std::uint32_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  // no monic factor of degree 1..k/2
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2 || q > (1u << 14)) throw InvalidField("field size " + std::to_string(q) + " outside [2, 2^14]");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  for (std::uint32_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw InvalidField(std::to_string(q) + " is not a prime power");
    ++k;
  }
  p_ = p;
  k_ = k;

  // smallest monic irreducible modulus of degree k
  std::uint32_t count = q;  // p^k choices of lower coefficients
  for (std::uint32_t code = 0; code < count; ++code) {
    Poly f(k + 1);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (k == 1 || is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.begin() + k);
      break;
    }
  }

  // multiplication without tables, used to build them
  auto slow_mul = [this](FieldElement a, FieldElement b) {
    Poly x(k_), y(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      x[i] = a % p_;
      a /= p_;
      y[i] = b % p_;
      b /= p_;
    }
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    Poly f(modulus_);
    f.push_back(1);
    Poly r = poly_mod(prod, f, p_);
    FieldElement out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
  };

  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  for (FieldElement g = 1; g < q; ++g) {
    // order of g
    FieldElement x = g;
    std::uint32_t order = 1;
    while (x != 1) {
      x = slow_mul(x, g);
      ++order;
    }
    if (order == q - 1) {
      generator_ = g;
      break;
    }
  }
  FieldElement x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (k_ == 1) return (a + b) % p_;
  FieldElement out = 0;
  FieldElement place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const {
  if (k_ == 1) return (a + p_ - b) % p_;
  FieldElement out = 0;
  FieldElement place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + p_ - b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const {
  if (b == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + (q_ - 1) - log_[b]) % (q_ - 1)];
}

FieldElement FiniteField::pow(FieldElement a, long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  const long m = static_cast<long>(q_ - 1);
  long l = (static_cast<long>(log_[a]) * (e % m)) % m;
  if (l < 0) l += m;
  return exp_[static_cast<std::size_t>(l)];
}

std::uint32_t FiniteField::log(FieldElement a) const {
  if (a == 0 || a >= q_) throw std::domain_error("discrete log of a non-unit");
  return log_[a];
}

std::string FiniteField::to_string(FieldElement a) const { return std::to_string(a); }

}  // namespace homalg
