#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mtv {

// Exact element of the cyclotomic field Q(zeta_n), stored as a rational
// polynomial in zeta_n reduced modulo the n-th cyclotomic polynomial.
// Conductor n is fixed per value; mixing conductors is an error.
// Equality is decidable and exact; there is no rounding anywhere.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeff_(1, 0) {}

  static Cyclotomic zero(int conductor);
  static Cyclotomic one(int conductor);
  static Cyclotomic integer(int conductor, long v);
  static Cyclotomic rational(int conductor, long num, long den);
  static Cyclotomic zeta(int conductor);  // the chosen primitive root
  // Coefficients in the power basis 1, zeta, ..., zeta^{deg-1}; longer
  // inputs are reduced mod Phi_n.
  static Cyclotomic from_coeffs(int conductor, std::vector<mpq_class> c);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(coeff_.size()); }
  const std::vector<mpq_class>& coeffs() const { return coeff_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // division-by-zero reported as SchemaError? no: std
  Cyclotomic pow(long e) const;
  Cyclotomic scaled(const mpq_class& q) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Display helpers; never used in comparisons.
  std::complex<double> approx() const;
  std::string to_string() const;

  // JSON forms: integer, [c0,c1,...] (integer coefficients), or
  // {"num": [...], "den": d}.  Parsing accepts all three.
  nlohmann::json to_json() const;
  static Cyclotomic from_json(int conductor, const nlohmann::json& j);

  std::size_t hash() const;

  // Degree of Phi_n (Euler phi of n).
  static int field_degree(int conductor);

 private:
  Cyclotomic(int conductor, std::vector<mpq_class> c)
      : conductor_(conductor), coeff_(std::move(c)) {}
  void check_same(const Cyclotomic& o) const;

  int conductor_;
  std::vector<mpq_class> coeff_;
};

}  // namespace mtv
