#ifndef ICETAB_LAURENT_HPP
#define ICETAB_LAURENT_HPP

#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace icetab {

using BigInt = boost::multiprecision::cpp_int;
// Reduced fraction with positive denominator; used to evaluate the closed
// product formulas exactly.
using BigRational = boost::multiprecision::cpp_rational;

// Exact Laurent polynomial in x_1..x_n (integer exponents) and t
// (non-negative exponents) over BigInt coefficients.
//
// Terms live in an ordered map keyed by the exponent vector
// (e_1, ..., e_n, e_t); zero coefficients are never stored, so two equal
// polynomials have identical term maps and equality is structural. All
// arithmetic is exact.
class LaurentPoly {
 public:
  using Exps = std::vector<int>;  // size rank()+1, last slot is the t exponent
  using TermMap = std::map<Exps, BigInt>;

  explicit LaurentPoly(int rank = 0) : rank_(check_rank(rank)) {}

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, BigInt c);
  static LaurentPoly one(int rank) { return constant(rank, 1); }
  // xexp has one exponent per variable; texp >= 0
  static LaurentPoly monomial(int rank, const std::vector<int>& xexp, int texp,
                              BigInt coeff = 1);
  static LaurentPoly x(int rank, int k, int power = 1);  // k is 1-based
  static LaurentPoly t(int rank, int power = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(int e) const;  // e >= 0

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Sets every x_k := 1; the result is a polynomial in t alone (same rank,
  // all x exponents zero).
  LaurentPoly collapse_x() const;

  // Full exact substitution; xs must have rank() values, none zero.
  BigRational evaluate(const std::vector<BigRational>& xs,
                       const BigRational& tval) const;
  // evaluate() when the result is known to be an integer (throws otherwise)
  BigInt evaluate_int(const std::vector<BigRational>& xs,
                      const BigRational& tval) const;
  // substitution x = (1,...,1), t = 1: the sum of all coefficients
  BigInt at_ones() const;

  struct TermDiff {
    Exps exps;
    BigInt lhs, rhs;  // coefficients on each side (0 when absent)
  };
  // First exponent vector at which the two polynomials disagree.
  static std::optional<TermDiff> first_difference(const LaurentPoly& a,
                                                  const LaurentPoly& b);

 private:
  static int check_rank(int rank);
  void check_same_rank(const LaurentPoly& o) const;
  void add_term(const Exps& e, const BigInt& c);

  int rank_;
  TermMap terms_;
};

}  // namespace icetab

#endif
