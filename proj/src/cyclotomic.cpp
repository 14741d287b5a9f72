#include "cartanlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "cartanlab/error.hpp"

namespace cartanlab {

namespace {

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint32_t, std::vector<std::int64_t>>& phi_cache() {
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  return cache;
}

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint32_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    const std::size_t deg = poly.size() - 1;
    std::vector<std::int64_t> quotient(deg - dd + 1, 0);
    for (std::size_t i = deg + 1; i-- > dd;) {
      std::int64_t c = poly[i];
      if (c == 0) continue;
      quotient[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

std::string root_name(std::uint32_t n, std::uint64_t k) {
  std::uint64_t g = std::gcd<std::uint64_t>(k, n);
  std::uint64_t m = n / g;
  std::uint64_t e = k / g;
  std::string s = "z" + std::to_string(m);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw ValidationError("cyclotomic conductor must be positive");
  {
    std::lock_guard lock(phi_mutex());
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  auto poly = compute_cyclotomic_polynomial(n);
  std::lock_guard lock(phi_mutex());
  // std::map never invalidates references to existing nodes
  return phi_cache().emplace(n, std::move(poly)).first->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(std::uint32_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw ValidationError("cyclotomic conductor must be positive");
  coeffs_.assign(conductor, Rational(0));
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, std::uint32_t conductor) {
  Cyclotomic x(conductor);
  x.coeffs_[0] = q;
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
  Cyclotomic x(n);
  std::int64_t e = k % static_cast<std::int64_t>(n);
  if (e < 0) e += n;
  x.coeffs_[static_cast<std::size_t>(e)] = 1;
  x.reduce();
  return x;
}

Cyclotomic Cyclotomic::from_coefficients(std::uint32_t conductor, std::vector<Rational> coeffs) {
  Cyclotomic x(conductor);
  for (std::size_t i = 0; i < coeffs.size(); ++i) x.coeffs_[i % conductor] += coeffs[i];
  x.reduce();
  return x;
}

void Cyclotomic::reduce() {
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = conductor_; i-- > deg;) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) coeffs_[i - deg + j] -= c * phi[j];
  }
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const { return is_rational() && is_integral(coeffs_[0]); }

Cyclotomic Cyclotomic::embed(std::uint32_t m) const {
  if (m % conductor_ != 0)
    throw ValidationError("cannot embed Q(z" + std::to_string(conductor_) + ") into Q(z" +
                          std::to_string(m) + ")");
  if (m == conductor_) return *this;
  const std::uint32_t step = m / conductor_;
  Cyclotomic x(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i * step] = coeffs_[i];
  x.reduce();
  return x;
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1); }

Cyclotomic Cyclotomic::galois(std::uint64_t a) const {
  if (std::gcd<std::uint64_t>(a, conductor_) != 1)
    throw ValidationError("Galois exponent must be coprime to the conductor");
  Cyclotomic x(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) x.coeffs_[(i * a) % conductor_] += coeffs_[i];
  x.reduce();
  return x;
}

std::uint64_t Cyclotomic::reduce_mod(std::uint64_t p, std::uint64_t root) const {
  std::uint64_t acc = 0;
  std::uint64_t power = 1;
  for (const auto& c : coeffs_) {
    if (c != 0) {
      Integer num = numerator(c) % p;
      if (num < 0) num += p;
      Integer den = denominator(c) % p;
      if (den == 0) throw ValidationError("coefficient denominator divisible by the modulus");
      std::uint64_t v = num.convert_to<std::uint64_t>() * inv_mod(den.convert_to<std::uint64_t>(), p) % p;
      acc = (acc + v * power) % p;
    }
    power = power * root % p;
  }
  return acc;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

static void require_same_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor())
    throw ValidationError("cyclotomic conductor mismatch: " + std::to_string(a.conductor()) +
                          " vs " + std::to_string(b.conductor()));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  Cyclotomic x = *this;
  x += rhs;
  return x;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  require_same_conductor(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  require_same_conductor(*this, rhs);
  Cyclotomic x = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] -= rhs.coeffs_[i];
  return x;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  require_same_conductor(*this, rhs);
  Cyclotomic x(conductor_);
  const std::size_t n = conductor_;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      x.coeffs_[(i + j) % n] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  x.reduce();
  return x;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic x = *this;
  for (auto& c : x.coeffs_) c *= q;
  return x;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (auto q = to_rational()) return cartanlab::to_string(*q);
  for (std::uint32_t k = 1; k < conductor_; ++k) {
    Cyclotomic r = root_of_unity(conductor_, k);
    if (r == *this) return root_name(conductor_, k);
    if (-r == *this) return "-" + root_name(conductor_, k);
  }
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += cartanlab::to_string(mag);
    } else {
      if (mag != 1) out += cartanlab::to_string(mag) + "*";
      out += root_name(conductor_, k);
    }
  }
  return out;
}

std::pair<Cyclotomic, Cyclotomic> embed_common(const Cyclotomic& a, const Cyclotomic& b) {
  auto m = static_cast<std::uint32_t>(lcm_u64(a.conductor(), b.conductor()));
  return {a.embed(m), b.embed(m)};
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace cartanlab
