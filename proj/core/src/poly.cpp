#include "signdet/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace signdet {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& a : p.coeffs_) a = -a;
  return p;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rat> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly sub(const Poly& p, const Poly& q) { return p - q; }
Poly neg(const Poly& p) { return -p; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<Rat> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.degree() < q.degree()) return {Poly{}, p};

  std::vector<Rat> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  std::vector<Rat> quot(r.size() - dq);
  const Rat inv_lead = 1 / q.lead();
  for (std::size_t k = r.size(); k-- > dq;) {
    if (r[k] == 0) continue;
    const Rat f = r[k] * inv_lead;
    quot[k - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) r[k - dq + j] -= f * q.coeffs()[j];
  }
  r.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly rem(const Poly& p, const Poly& q) { return divmod(p, q).second; }

Poly exact_div(const Poly& p, const Poly& q) {
  auto [quot, r] = divmod(p, q);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return quot;
}

Poly mod_reduce(const Poly& p, const Poly& p0) { return rem(p, p0); }

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a * (1 / a.lead());
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  Poly s = exact_div(p, gcd(p, derivative(p)));
  return s * (1 / s.lead());
}

std::pair<Poly, Rat> primitive_part(const Poly& p) {
  if (p.is_zero()) return {p, Rat(1)};
  Int den_lcm = 1;
  Int num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  return {p * factor, factor};
}

Rat eval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

Sign sign_at(const Poly& p, const Rat& x) { return sign_of(sgn(eval(p, x))); }

Sign sign_at_inf(const Poly& p, Infinity end) {
  if (p.is_zero()) return Sign::Zero;
  const Sign lead = sign_of(sgn(p.lead()));
  if (end == Infinity::Plus || p.degree() % 2 == 0) return lead;
  return lead * Sign::Neg;
}

std::string to_coeff_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ',';
    out += to_string(p.coeffs()[k]);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rat& c = p.coeffs()[k];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << "X";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace signdet
