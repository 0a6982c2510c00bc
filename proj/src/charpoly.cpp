#include "icetab/charpoly.hpp"

#include <vector>

#include "icetab/bijection.hpp"
#include "icetab/ice.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/threads.hpp"
#include "icetab/uasm.hpp"

namespace icetab {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt rational_to_integer(const BigRational& v, const char* what) {
  if (denominator(v) != 1)
    throw InvariantViolation(std::string(what) + " did not reduce to an integer");
  return numerator(v);
}

// Exact ordered reduction of per-item polynomial terms; the addition is
// commutative and exact, so any thread count yields the same map.
template <class Item, class Term>
LaurentPoly weighted_sum(const std::vector<Item>& items, int rank, int threads,
                         Term term) {
  threads = resolve_threads(threads);
  if (threads <= 1 || items.size() < 2) {
    LaurentPoly sum(rank);
    for (const auto& it : items) sum += term(it);
    return sum;
  }
  std::vector<LaurentPoly> partial(threads, LaurentPoly(rank));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 16)
    for (std::size_t i = 0; i < items.size(); ++i) partial[tid] += term(items[i]);
  }
#else
  for (const auto& it : items) partial[0] += term(it);
#endif
  LaurentPoly sum(rank);
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

LaurentPoly weyl_denominator(int n) {
  if (n < 1) throw InvalidInput("rank must be positive");
  std::vector<int> lead(n);
  for (int i = 1; i <= n; ++i) lead[i - 1] = n - i + 1;
  LaurentPoly d = LaurentPoly::monomial(n, lead, 0);
  const LaurentPoly one = LaurentPoly::one(n);
  for (int i = 1; i <= n; ++i)
    d *= one + LaurentPoly::t(n) * LaurentPoly::x(n, i, -2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      d *= one + LaurentPoly::t(n) * LaurentPoly::x(n, i, -1) * LaurentPoly::x(n, j, 1);
      d *= one + LaurentPoly::t(n) * LaurentPoly::x(n, i, -1) * LaurentPoly::x(n, j, -1);
    }
  return d;
}

LaurentPoly sp_character(const Partition& lam, int n, int threads) {
  std::vector<OrdinaryTableau> tableaux = generate_ordinary(lam, n, threads);
  return weighted_sum(tableaux, n, threads, [n](const OrdinaryTableau& t) {
    TableauStats s = ordinary_stats(t);
    return LaurentPoly::t(n, 2 * s.bar) * x_weight_ordinary(t);
  });
}

BigInt sp_dimension(const Partition& lam, int n) {
  if (n < 1) throw InvalidInput("rank must be positive");
  if (lam.length() > n) throw InvalidInput("partition longer than the rank");
  BigRational dim = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      dim *= BigRational(lam.part(i - 1) - lam.part(j - 1) + j - i, j - i);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      dim *= BigRational(
          lam.part(i - 1) + lam.part(j - 1) + 2 * n + 2 - i - j,
          2 * n + 2 - i - j);
  return rational_to_integer(dim, "symplectic dimension");
}

BigInt asm_count(int n) {
  if (n < 1) throw InvalidInput("matrix size must be positive");
  BigRational count = 1;
  for (int j = 0; j < n; ++j)
    count *= BigRational(factorial(3 * j + 1), factorial(n + j));
  return rational_to_integer(count, "alternating-sign-matrix count");
}

BigInt uasm_count_product(int n) {
  if (n < 1) throw InvalidInput("rank must be positive");
  BigRational count = BigInt(1) << n;  // 2^n
  BigInt sign_base = -3;
  BigRational pow3 = 1;
  for (int i = 0; i < n * n; ++i) pow3 *= sign_base;
  count *= pow3;
  for (int i = 1; i <= 2 * n + 1; ++i)
    for (int k = 1; k <= n; ++k)
      count *= BigRational(1 + 6 * k - 3 * i, 2 * n + 1 + 2 * k - i);
  BigInt value = rational_to_integer(count, "U-turn matrix count");
  if (value <= 0)
    throw InvariantViolation("U-turn matrix count must be positive");
  return value;
}

BigInt uasm_count_recurrence(int n) {
  if (n < 1) throw InvalidInput("rank must be positive");
  BigRational count = 2;
  for (int k = 2; k <= n; ++k)
    count *= BigRational(binomial(6 * k - 2, 2 * k), binomial(4 * k - 1, 2 * k));
  return rational_to_integer(count, "U-turn matrix count");
}

VerifyReport verify_identity(const Partition& lam, int n, int threads) {
  VerifyReport rep;
  rep.lambda = lam;
  rep.n = n;
  rep.mu = add_staircase(lam, n);

  LaurentPoly character = sp_character(lam, n, threads);
  rep.product = weyl_denominator(n) * character;

  std::vector<ShiftedTableau> tableaux = generate_shifted(rep.mu, n, threads);
  const LaurentPoly one_plus_t = LaurentPoly::one(n) + LaurentPoly::t(n);
  rep.tableau_sum =
      weighted_sum(tableaux, n, threads, [&](const ShiftedTableau& st) {
        TableauStats s = shifted_stats(st);
        return LaurentPoly::t(n, s.var + s.bar) * one_plus_t.pow(s.str - n) *
               x_weight_shifted(st);
      });

  std::vector<MuUASM> matrices = brute_force_uasms(rep.mu, n, threads);
  rep.uasm_sum = weighted_sum(matrices, n, threads, [&](const MuUASM& ua) {
    return t_weight_uasm(ua) * x_weight_uasm(ua);
  });
  rep.config_sum = weighted_sum(matrices, n, threads, [&](const MuUASM& ua) {
    auto [xw, tw] = ice_weights(to_config(ua));
    return xw * tw;
  });

  rep.two_pow_neg_sum = 0;
  for (const MuUASM& ua : matrices)
    rep.two_pow_neg_sum += BigInt(1) << uasm_stats(ua).neg;

  rep.polynomials_equal = rep.product == rep.tableau_sum &&
                          rep.product == rep.uasm_sum &&
                          rep.product == rep.config_sum;
  if (!rep.polynomials_equal) {
    for (const LaurentPoly* other :
         {&rep.tableau_sum, &rep.uasm_sum, &rep.config_sum}) {
      rep.first_difference = LaurentPoly::first_difference(rep.product, *other);
      if (rep.first_difference) break;
    }
  }

  LaurentPoly x1_target = one_plus_t.pow(n * n) * character.collapse_x();
  rep.x1_equal = rep.product.collapse_x() == x1_target &&
                 rep.tableau_sum.collapse_x() == x1_target &&
                 rep.uasm_sum.collapse_x() == x1_target &&
                 rep.config_sum.collapse_x() == x1_target;

  rep.t1_expected = (BigInt(1) << (n * n)) * sp_dimension(lam, n);
  rep.t1_value = rep.product.at_ones();
  rep.t1_equal = rep.t1_value == rep.t1_expected &&
                 rep.tableau_sum.at_ones() == rep.t1_expected &&
                 rep.uasm_sum.at_ones() == rep.t1_expected &&
                 rep.config_sum.at_ones() == rep.t1_expected &&
                 rep.two_pow_neg_sum == rep.t1_expected;
  return rep;
}

}  // namespace icetab
