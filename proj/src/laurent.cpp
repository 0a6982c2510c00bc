#include "icetab/laurent.hpp"

#include "icetab/errors.hpp"

namespace icetab {

int LaurentPoly::check_rank(int rank) {
  if (rank < 0) throw InvalidInput("polynomial rank must be non-negative");
  return rank;
}

void LaurentPoly::check_same_rank(const LaurentPoly& o) const {
  if (rank_ != o.rank_)
    throw InvalidInput("polynomial rank mismatch: " + std::to_string(rank_) +
                       " vs " + std::to_string(o.rank_));
}

void LaurentPoly::add_term(const Exps& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::constant(int rank, BigInt c) {
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace(Exps(rank + 1, 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const std::vector<int>& xexp,
                                  int texp, BigInt coeff) {
  if (static_cast<int>(xexp.size()) != rank)
    throw InvalidInput("monomial exponent vector does not match rank");
  if (texp < 0) throw InvalidInput("t exponent must be non-negative");
  LaurentPoly p(rank);
  if (coeff != 0) {
    Exps e(xexp);
    e.push_back(texp);
    p.terms_.emplace(std::move(e), std::move(coeff));
  }
  return p;
}

LaurentPoly LaurentPoly::x(int rank, int k, int power) {
  if (k < 1 || k > rank) throw InvalidInput("variable index out of range");
  std::vector<int> xe(rank, 0);
  xe[k - 1] = power;
  return monomial(rank, xe, 0);
}

LaurentPoly LaurentPoly::t(int rank, int power) {
  return monomial(rank, std::vector<int>(rank, 0), power);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_rank(b);
  LaurentPoly r(a.rank_);
  LaurentPoly::Exps e(a.rank_ + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i <= a.rank_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw InvalidInput("polynomial exponent must be non-negative");
  LaurentPoly result = one(rank_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::collapse_x() const {
  LaurentPoly r(rank_);
  Exps e(rank_ + 1, 0);
  for (const auto& [exps, c] : terms_) {
    e.back() = exps.back();
    r.add_term(e, c);
  }
  return r;
}

BigRational LaurentPoly::evaluate(const std::vector<BigRational>& xs,
                                  const BigRational& tval) const {
  if (static_cast<int>(xs.size()) != rank_)
    throw InvalidInput("evaluate: wrong number of values");
  for (const auto& v : xs)
    if (v == 0) throw InvalidInput("evaluate: x values must be non-zero");
  auto ipow = [](const BigRational& v, int e) {
    BigRational r = 1;
    BigRational b = e < 0 ? BigRational(1) / v : v;
    for (int i = 0, k = e < 0 ? -e : e; i < k; ++i) r *= b;
    return r;
  };
  BigRational sum = 0;
  for (const auto& [exps, c] : terms_) {
    BigRational term(c);
    for (int i = 0; i < rank_; ++i) term *= ipow(xs[i], exps[i]);
    term *= ipow(tval, exps.back());
    sum += term;
  }
  return sum;
}

BigInt LaurentPoly::evaluate_int(const std::vector<BigRational>& xs,
                                 const BigRational& tval) const {
  BigRational v = evaluate(xs, tval);
  if (denominator(v) != 1)
    throw InvalidInput("evaluate_int: value is not an integer");
  return numerator(v);
}

BigInt LaurentPoly::at_ones() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::optional<LaurentPoly::TermDiff> LaurentPoly::first_difference(
    const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_rank(b);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() ||
        (ia != a.terms_.end() && ia->first < ib->first)) {
      return TermDiff{ia->first, ia->second, 0};
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return TermDiff{ib->first, 0, ib->second};
    }
    if (ia->second != ib->second)
      return TermDiff{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace icetab
