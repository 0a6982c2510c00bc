#include "icetab/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "icetab/threads.hpp"

namespace icetab {

std::vector<Entry> ShiftedTableau::profile() const {
  std::vector<Entry> a;
  a.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) a.push_back(rows[i].front());
  return a;
}

bool RibbonStrip::distinct_diagonals() const {
  std::set<int> diags;
  for (const Box& b : boxes) diags.insert(b.col - b.row);
  return diags.size() == boxes.size();
}

bool RibbonStrip::touches_main_diagonal(std::size_t component) const {
  for (const Box& b : components[component])
    if (b.row == b.col) return true;
  return false;
}

// --- validation ------------------------------------------------------

namespace {

bool check_shifted_structure(const ShiftedTableau& st, ValidationReport& r) {
  if (st.n < 0 || st.shape.n() != st.n) {
    r.add(ViolationKind::structure, "structure", 0, 0,
          "shape length " + std::to_string(st.shape.n()) +
              " does not equal rank " + std::to_string(st.n));
    return false;
  }
  if (static_cast<int>(st.rows.size()) != st.shape.n()) {
    r.add(ViolationKind::structure, "structure", 0, 0,
          "row count does not match shape");
    return false;
  }
  for (int i = 1; i <= st.shape.n(); ++i) {
    if (static_cast<int>(st.rows[i - 1].size()) != st.shape.part(i - 1)) {
      r.add(ViolationKind::structure, "structure", i, 0,
            "row length does not match shape part");
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_shifted(const ShiftedTableau& st) {
  ValidationReport r;
  if (!check_shifted_structure(st, r)) return r;
  const int ell = st.shape.n();
  for (int i = 1; i <= ell; ++i) {
    for (int j = i; j <= st.shape.part(i - 1) + i - 1; ++j) {
      Entry e = st.at(i, j);
      if (e.level() > st.n)
        r.add(ViolationKind::rule, "alphabet", i, j,
              "entry " + e.str() + " exceeds rank " + std::to_string(st.n));
      if (j == i && e.level() != i)
        r.add(ViolationKind::rule, "profile", i, j,
              "main-diagonal entry " + e.str() + " is not " +
                  std::to_string(i) + " or " + std::to_string(i) + "'");
      if (st.has_box(i, j + 1) && !(e <= st.at(i, j + 1)))
        r.add(ViolationKind::rule, "row-weak", i, j,
              e.str() + " > " + st.at(i, j + 1).str());
      if (st.has_box(i + 1, j) && !(e <= st.at(i + 1, j)))
        r.add(ViolationKind::rule, "column-weak", i, j,
              e.str() + " > " + st.at(i + 1, j).str());
      if (st.has_box(i + 1, j + 1) && !(e < st.at(i + 1, j + 1)))
        r.add(ViolationKind::rule, "diagonal-strict", i, j,
              e.str() + " >= " + st.at(i + 1, j + 1).str());
    }
  }
  return r;
}

ValidationReport validate_ordinary(const OrdinaryTableau& t) {
  ValidationReport r;
  if (t.n < 0 || t.shape.length() > t.n) {
    r.add(ViolationKind::structure, "structure", 0, 0,
          "shape longer than rank");
    return r;
  }
  if (static_cast<int>(t.rows.size()) != t.shape.length()) {
    r.add(ViolationKind::structure, "structure", 0, 0,
          "row count does not match shape");
    return r;
  }
  for (int i = 1; i <= t.shape.length(); ++i) {
    if (static_cast<int>(t.rows[i - 1].size()) != t.shape.part(i - 1)) {
      r.add(ViolationKind::structure, "structure", i, 0,
            "row length does not match shape part");
      return r;
    }
  }
  for (int i = 1; i <= t.shape.length(); ++i) {
    for (int j = 1; j <= t.shape.part(i - 1); ++j) {
      Entry e = t.at(i, j);
      if (e.level() > t.n)
        r.add(ViolationKind::rule, "alphabet", i, j,
              "entry " + e.str() + " exceeds rank " + std::to_string(t.n));
      if (e.ordinal() < 2 * i - 1)
        r.add(ViolationKind::rule, "row-start-bound", i, j,
              "entry " + e.str() + " below " + std::to_string(i) + "'");
      if (t.has_box(i, j + 1) && !(e <= t.at(i, j + 1)))
        r.add(ViolationKind::rule, "row-weak", i, j,
              e.str() + " > " + t.at(i, j + 1).str());
      if (t.has_box(i + 1, j) && !(e < t.at(i + 1, j)))
        r.add(ViolationKind::rule, "column-strict", i, j,
              e.str() + " >= " + t.at(i + 1, j).str());
    }
  }
  return r;
}

// --- exhaustive generation -------------------------------------------

namespace {

using EntryRows = std::vector<std::vector<Entry>>;

// Depth-first fill of a shifted frame in row-major order. Each box admits
// an ordinal interval derived from its left, upper and upper-left
// neighbours; main-diagonal boxes are further pinned to {i', i}. Leaf is
// called with the work buffer whenever all rows up to limit_row are
// complete.
template <class Leaf>
struct ShiftedGen {
  const StrictPartition& mu;
  int n;
  int limit_row;
  Leaf& leaf;
  EntryRows rows;

  ShiftedGen(const StrictPartition& mu_, int n_, int limit_row_, Leaf& leaf_)
      : mu(mu_), n(n_), limit_row(limit_row_), leaf(leaf_) {
    rows.resize(mu.n());
    for (int i = 0; i < mu.n(); ++i)
      rows[i].assign(mu.part(i), Entry::unbarred(1));
  }

  Entry at(int i, int j) const { return rows[i - 1][j - i]; }
  bool has_box(int i, int j) const {
    return i >= 1 && i <= mu.n() && j >= i && j <= mu.part(i - 1) + i - 1;
  }

  int lower_ordinal(int i, int j) const {
    int lo = 1;
    if (j > i) lo = std::max(lo, at(i, j - 1).ordinal());
    if (i > 1 && has_box(i - 1, j)) lo = std::max(lo, at(i - 1, j).ordinal());
    if (i > 1 && has_box(i - 1, j - 1))
      lo = std::max(lo, at(i - 1, j - 1).ordinal() + 1);
    return lo;
  }

  void fill(int i, int j) {
    if (i > mu.n() || i > limit_row) {
      leaf(rows);
      return;
    }
    if (j > mu.part(i - 1) + i - 1) {
      fill(i + 1, i + 1);
      return;
    }
    int lo = lower_ordinal(i, j);
    if (j == i) {
      for (int ord : {2 * i - 1, 2 * i}) {
        if (ord < lo || ord > 2 * n) continue;
        rows[i - 1][0] = Entry::from_ordinal(ord);
        fill(i, j + 1);
      }
    } else {
      for (int ord = lo; ord <= 2 * n; ++ord) {
        rows[i - 1][j - i] = Entry::from_ordinal(ord);
        fill(i, j + 1);
      }
    }
  }
};

// Same scheme for ordinary left-adjusted frames: rows weakly increase,
// columns strictly increase, and everything in row i sits at or above i'.
template <class Leaf>
struct OrdinaryGen {
  const Partition& lam;
  int n;
  int limit_row;
  Leaf& leaf;
  EntryRows rows;

  OrdinaryGen(const Partition& lam_, int n_, int limit_row_, Leaf& leaf_)
      : lam(lam_), n(n_), limit_row(limit_row_), leaf(leaf_) {
    rows.resize(lam.length());
    for (int i = 0; i < lam.length(); ++i)
      rows[i].assign(lam.part(i), Entry::unbarred(1));
  }

  Entry at(int i, int j) const { return rows[i - 1][j - 1]; }

  void fill(int i, int j) {
    if (i > lam.length() || i > limit_row) {
      leaf(rows);
      return;
    }
    if (j > lam.part(i - 1)) {
      fill(i + 1, 1);
      return;
    }
    int lo = 2 * i - 1;  // row floor i'
    if (j > 1) lo = std::max(lo, at(i, j - 1).ordinal());
    if (i > 1 && lam.part(i - 2) >= j)
      lo = std::max(lo, at(i - 1, j).ordinal() + 1);
    for (int ord = lo; ord <= 2 * n; ++ord) {
      rows[i - 1][j - 1] = Entry::from_ordinal(ord);
      fill(i, j + 1);
    }
  }
};

template <class Leaf>
void shifted_walk(const StrictPartition& mu, int n, int limit_row, Leaf leaf) {
  ShiftedGen<Leaf> gen(mu, n, limit_row, leaf);
  gen.fill(1, 1);
}

template <class Leaf>
void shifted_walk_from_prefix(const StrictPartition& mu, int n,
                              const std::vector<Entry>& first_row, Leaf leaf) {
  ShiftedGen<Leaf> gen(mu, n, mu.n(), leaf);
  gen.rows[0] = first_row;
  gen.fill(2, 2);
}

template <class Leaf>
void ordinary_walk(const Partition& lam, int n, int limit_row, Leaf leaf) {
  OrdinaryGen<Leaf> gen(lam, n, limit_row, leaf);
  gen.fill(1, 1);
}

template <class Leaf>
void ordinary_walk_from_prefix(const Partition& lam, int n,
                               const std::vector<Entry>& first_row, Leaf leaf) {
  OrdinaryGen<Leaf> gen(lam, n, lam.length(), leaf);
  gen.rows[0] = first_row;
  gen.fill(2, 1);
}

}  // namespace

std::vector<ShiftedTableau> generate_shifted(const StrictPartition& mu, int n,
                                             int threads) {
  if (mu.n() != n)
    throw InvalidInput("shifted shape must have exactly rank-many parts");
  std::vector<ShiftedTableau> out;
  if (n == 0) {
    out.push_back(ShiftedTableau{mu, 0, {}});
    return out;
  }
  threads = resolve_threads(threads);
  if (threads <= 1 || mu.n() == 1) {
    shifted_walk(mu, n, mu.n(), [&](const EntryRows& rows) {
      out.push_back(ShiftedTableau{mu, n, rows});
    });
    return out;
  }
  // Fan out over complete first rows; completing each prefix in row-major
  // order keeps the overall order identical to the serial walk.
  std::vector<std::vector<Entry>> prefixes;
  shifted_walk(mu, n, 1,
               [&](const EntryRows& rows) { prefixes.push_back(rows[0]); });
  std::vector<std::vector<ShiftedTableau>> results(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    std::vector<ShiftedTableau> local;
    shifted_walk_from_prefix(mu, n, prefixes[p], [&](const EntryRows& rows) {
      local.push_back(ShiftedTableau{mu, n, rows});
    });
    results[p] = std::move(local);
  }
  std::size_t total = 0;
  for (const auto& batch : results) total += batch.size();
  out.reserve(total);
  for (auto& batch : results)
    for (auto& st : batch) out.push_back(std::move(st));
  return out;
}

void for_each_shifted(const StrictPartition& mu, int n, int threads,
                      const std::function<void(const ShiftedTableau&)>& yield) {
  threads = resolve_threads(threads);
  if (threads > 1 && mu.n() > 1) {
    for (const auto& st : generate_shifted(mu, n, threads)) yield(st);
    return;
  }
  if (mu.n() != n)
    throw InvalidInput("shifted shape must have exactly rank-many parts");
  if (n == 0) {
    yield(ShiftedTableau{mu, 0, {}});
    return;
  }
  shifted_walk(mu, n, mu.n(), [&](const EntryRows& rows) {
    yield(ShiftedTableau{mu, n, rows});
  });
}

std::vector<OrdinaryTableau> generate_ordinary(const Partition& lam, int n,
                                               int threads) {
  if (lam.length() > n)
    throw InvalidInput("ordinary shape is longer than the rank");
  std::vector<OrdinaryTableau> out;
  if (lam.length() == 0) {
    out.push_back(OrdinaryTableau{lam, n, {}});
    return out;
  }
  threads = resolve_threads(threads);
  if (threads <= 1 || lam.length() == 1) {
    ordinary_walk(lam, n, lam.length(), [&](const EntryRows& rows) {
      out.push_back(OrdinaryTableau{lam, n, rows});
    });
    return out;
  }
  std::vector<std::vector<Entry>> prefixes;
  ordinary_walk(lam, n, 1,
                [&](const EntryRows& rows) { prefixes.push_back(rows[0]); });
  std::vector<std::vector<OrdinaryTableau>> results(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    std::vector<OrdinaryTableau> local;
    ordinary_walk_from_prefix(lam, n, prefixes[p], [&](const EntryRows& rows) {
      local.push_back(OrdinaryTableau{lam, n, rows});
    });
    results[p] = std::move(local);
  }
  std::size_t total = 0;
  for (const auto& batch : results) total += batch.size();
  out.reserve(total);
  for (auto& batch : results)
    for (auto& t : batch) out.push_back(std::move(t));
  return out;
}

void for_each_ordinary(
    const Partition& lam, int n, int threads,
    const std::function<void(const OrdinaryTableau&)>& yield) {
  threads = resolve_threads(threads);
  if (threads > 1 && lam.length() > 1) {
    for (const auto& t : generate_ordinary(lam, n, threads)) yield(t);
    return;
  }
  if (lam.length() > n)
    throw InvalidInput("ordinary shape is longer than the rank");
  if (lam.length() == 0) {
    yield(OrdinaryTableau{lam, n, {}});
    return;
  }
  ordinary_walk(lam, n, lam.length(), [&](const EntryRows& rows) {
    yield(OrdinaryTableau{lam, n, rows});
  });
}

// --- strips, statistics, weights -------------------------------------

RibbonStrip ribbon_strip(const ShiftedTableau& st, Entry e) {
  RibbonStrip strip;
  strip.entry = e;
  for (int i = 1; i <= st.shape.n(); ++i)
    for (int j = i; j <= st.shape.part(i - 1) + i - 1; ++j)
      if (st.at(i, j) == e) strip.boxes.push_back(Box{i, j});

  std::set<Box> unseen(strip.boxes.begin(), strip.boxes.end());
  for (const Box& seed : strip.boxes) {
    if (!unseen.count(seed)) continue;
    std::vector<Box> comp, frontier{seed};
    unseen.erase(seed);
    while (!frontier.empty()) {
      Box b = frontier.back();
      frontier.pop_back();
      comp.push_back(b);
      for (Box nb : {Box{b.row - 1, b.col}, Box{b.row + 1, b.col},
                     Box{b.row, b.col - 1}, Box{b.row, b.col + 1}}) {
        auto it = unseen.find(nb);
        if (it != unseen.end()) {
          unseen.erase(it);
          frontier.push_back(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    strip.components.push_back(std::move(comp));
  }
  return strip;
}

TableauStats shifted_stats(const ShiftedTableau& st) {
  TableauStats s;
  s.m_unbarred.assign(st.n, 0);
  s.m_barred.assign(st.n, 0);
  for (int i = 1; i <= st.shape.n(); ++i) {
    for (int j = i; j <= st.shape.part(i - 1) + i - 1; ++j) {
      Entry e = st.at(i, j);
      (e.is_barred() ? s.m_barred : s.m_unbarred)[e.level() - 1]++;
      if (!e.is_barred()) {
        if (st.has_box(i - 1, j) && st.at(i - 1, j) == e) s.var++;
      } else {
        if (st.has_box(i, j + 1) && st.at(i, j + 1) == e) s.var++;
      }
    }
  }
  for (int c : s.m_barred) s.bar += c;
  for (int ord = 1; ord <= 2 * st.n; ++ord) {
    RibbonStrip strip = ribbon_strip(st, Entry::from_ordinal(ord));
    s.str += static_cast<int>(strip.components.size());
  }
  return s;
}

TableauStats ordinary_stats(const OrdinaryTableau& t) {
  TableauStats s;
  s.m_unbarred.assign(t.n, 0);
  s.m_barred.assign(t.n, 0);
  for (const auto& row : t.rows)
    for (Entry e : row)
      (e.is_barred() ? s.m_barred : s.m_unbarred)[e.level() - 1]++;
  for (int c : s.m_barred) s.bar += c;
  return s;
}

namespace {

LaurentPoly multiplicity_monomial(int n, const std::vector<int>& m_unbarred,
                                  const std::vector<int>& m_barred) {
  std::vector<int> xe(n);
  for (int k = 0; k < n; ++k) xe[k] = m_unbarred[k] - m_barred[k];
  return LaurentPoly::monomial(n, xe, 0);
}

}  // namespace

LaurentPoly x_weight_shifted(const ShiftedTableau& st) {
  TableauStats s = shifted_stats(st);
  return multiplicity_monomial(st.n, s.m_unbarred, s.m_barred);
}

LaurentPoly x_weight_ordinary(const OrdinaryTableau& t) {
  TableauStats s = ordinary_stats(t);
  return multiplicity_monomial(t.n, s.m_unbarred, s.m_barred);
}

LaurentPoly t_weight_shifted(const ShiftedTableau& st) {
  const int n = st.n;
  int t_power = 0;
  int off_diagonal_components = 0;
  for (int i = 1; i <= st.shape.n(); ++i) {
    for (int j = i; j <= st.shape.part(i - 1) + i - 1; ++j) {
      Entry e = st.at(i, j);
      if (!e.is_barred()) {
        if (st.has_box(i - 1, j) && st.at(i - 1, j) == e) t_power += 1;
      } else {
        t_power += (st.has_box(i, j + 1) && st.at(i, j + 1) == e) ? 2 : 1;
      }
    }
  }
  for (int ord = 1; ord <= 2 * n; ++ord) {
    RibbonStrip strip = ribbon_strip(st, Entry::from_ordinal(ord));
    for (std::size_t c = 0; c < strip.components.size(); ++c)
      if (!strip.touches_main_diagonal(c)) off_diagonal_components++;
  }
  LaurentPoly one_plus_t = LaurentPoly::one(n) + LaurentPoly::t(n);
  LaurentPoly w = LaurentPoly::t(n, t_power) * one_plus_t.pow(off_diagonal_components);

  TableauStats s = shifted_stats(st);
  LaurentPoly closed =
      LaurentPoly::t(n, s.var + s.bar) * one_plus_t.pow(s.str - st.shape.n());
  if (w != closed)
    throw InvariantViolation(
        "entrywise t-weight disagrees with t^(var+bar)(1+t)^(str-n)");
  return w;
}

}  // namespace icetab
