#include "mtv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "mtv/error.hpp"

namespace mtv {

namespace {

using Poly = std::vector<mpz_class>;  // little-endian, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, used only when the division is
// known to be exact (building Phi_n from x^n - 1).
Poly exact_div(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class lead = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    trim(num);
  }
  return q;
}

// Cyclotomic polynomials: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
const Poly& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::function<const Poly&(int)> get = [&](int m) -> const Poly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;  // x^m - 1
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) p = exact_div(std::move(p), get(d));
    }
    return cache.emplace(m, std::move(p)).first->second;
  };
  return get(n);
}

}  // namespace

int Cyclotomic::field_degree(int conductor) {
  if (conductor < 1) fail(ErrorKind::SchemaError, "conductor must be positive");
  return static_cast<int>(cyclotomic_poly(conductor).size()) - 1;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_)
    fail(ErrorKind::SchemaError, "scalar conductor mismatch",
         {{"lhs", conductor_}, {"rhs", o.conductor_}});
}

Cyclotomic Cyclotomic::zero(int conductor) {
  return Cyclotomic(conductor, std::vector<mpq_class>(field_degree(conductor), 0));
}

Cyclotomic Cyclotomic::one(int conductor) { return integer(conductor, 1); }

Cyclotomic Cyclotomic::integer(int conductor, long v) {
  auto c = std::vector<mpq_class>(field_degree(conductor), 0);
  c[0] = v;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::rational(int conductor, long num, long den) {
  if (den == 0) fail(ErrorKind::SchemaError, "zero denominator");
  auto c = std::vector<mpq_class>(field_degree(conductor), 0);
  c[0] = mpq_class(num, den);
  c[0].canonicalize();
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::zeta(int conductor) {
  std::vector<mpq_class> c(std::max(field_degree(conductor), 2), 0);
  c[1] = 1;
  return from_coeffs(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(int conductor, std::vector<mpq_class> c) {
  const Poly& phi = cyclotomic_poly(conductor);
  const std::size_t deg = phi.size() - 1;
  // reduce mod Phi_n (monic), from the top down
  for (std::size_t i = c.size(); i-- > deg;) {
    mpq_class lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) c[i - deg + j] -= lead * phi[j];
  }
  c.resize(deg, 0);
  for (auto& q : c) q.canonicalize();
  return Cyclotomic(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const mpq_class& q) { return q == 0; });
}

bool Cyclotomic::is_one() const {
  if (coeff_[0] != 1) return false;
  for (std::size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = coeff_;
  for (auto& q : c) q = -q;
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(o);
  auto c = coeff_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeff_[i];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same(o);
  auto c = coeff_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeff_[i];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(o);
  std::vector<mpq_class> prod(2 * coeff_.size(), 0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeff_.size(); ++j) {
      if (o.coeff_[j] == 0) continue;
      prod[i + j] += coeff_[i] * o.coeff_[j];
    }
  }
  return from_coeffs(conductor_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::SchemaError, "division by zero scalar");
  // extended Euclid in Q[x] against Phi_n (irreducible over Q)
  using QPoly = std::vector<mpq_class>;
  const Poly& phi = cyclotomic_poly(conductor_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1(coeff_.begin(), coeff_.end());
  auto qtrim = [](QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  qtrim(r1);
  QPoly s0{}, s1{mpq_class(1)};  // coefficients of *this in the combination
  while (true) {
    qtrim(r1);
    if (r1.empty()) fail(ErrorKind::SchemaError, "inverse failed");  // unreachable
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    QPoly q(r0.size() - r1.size() + 1, 0);
    QPoly r2 = r0;
    while (r2.size() >= r1.size()) {
      mpq_class lead = r2.back() / r1.back();
      std::size_t shift = r2.size() - r1.size();
      q[shift] = lead;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= lead * r1[i];
      qtrim(r2);
      if (r2.empty()) break;
    }
    QPoly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    qtrim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  mpq_class unit = r1[0];
  std::vector<mpq_class> inv(s1.begin(), s1.end());
  for (auto& c : inv) c /= unit;
  return from_coeffs(conductor_, std::move(inv));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  return *this * o.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic acc = one(conductor_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::scaled(const mpq_class& q) const {
  auto c = coeff_;
  for (auto& x : c) x *= q;
  return Cyclotomic(conductor_, std::move(c));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  check_same(o);
  return coeff_ == o.coeff_;
}

std::complex<double> Cyclotomic::approx() const {
  const double tau = 2.0 * std::numbers::pi / conductor_;
  std::complex<double> z(std::cos(tau), std::sin(tau));
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = coeff_.size(); i-- > 0;)
    acc = acc * z + coeff_[i].get_d();
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeff_[i].get_str();
    if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

nlohmann::json Cyclotomic::to_json() const {
  mpz_class den = 1;
  for (const auto& q : coeff_) den = lcm(den, q.get_den());
  nlohmann::json num = nlohmann::json::array();
  for (const auto& q : coeff_) {
    mpz_class n = q.get_num() * (den / q.get_den());
    if (!n.fits_slong_p())
      fail(ErrorKind::SchemaError, "scalar too large to serialize");
    num.push_back(n.get_si());
  }
  if (den == 1) {
    bool scalar = true;
    for (std::size_t i = 1; i < coeff_.size(); ++i)
      if (coeff_[i] != 0) scalar = false;
    if (scalar) return num[0];
    return num;
  }
  if (!den.fits_slong_p())
    fail(ErrorKind::SchemaError, "scalar too large to serialize");
  return nlohmann::json{{"num", num}, {"den", den.get_si()}};
}

Cyclotomic Cyclotomic::from_json(int conductor, const nlohmann::json& j) {
  auto coeff_list = [&](const nlohmann::json& a) {
    std::vector<mpq_class> c;
    for (const auto& x : a) {
      if (!x.is_number_integer())
        fail(ErrorKind::SchemaError, "scalar coefficients must be integers");
      c.emplace_back(static_cast<long>(x.get<long long>()));
    }
    return c;
  };
  if (j.is_number_integer())
    return integer(conductor, static_cast<long>(j.get<long long>()));
  if (j.is_array()) return from_coeffs(conductor, coeff_list(j));
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    auto c = coeff_list(j.at("num"));
    long den = j.at("den").get<long>();
    if (den == 0) fail(ErrorKind::SchemaError, "scalar with zero denominator");
    for (auto& q : c) {
      q /= den;
      q.canonicalize();
    }
    return from_coeffs(conductor, std::move(c));
  }
  fail(ErrorKind::SchemaError, "unrecognized scalar encoding", {{"value", j}});
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>{}(conductor_);
  for (const auto& q : coeff_) {
    h ^= std::hash<std::string>{}(q.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace mtv
