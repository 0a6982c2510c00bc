#ifndef ICETAB_ENTRY_HPP
#define ICETAB_ENTRY_HPP

#include <cstdlib>
#include <string>

#include "icetab/errors.hpp"

namespace icetab {

// Entry of a symplectic tableau: a level k with or without a bar, encoded
// as the signed integer +k / -k. The alphabet of rank n is totally ordered
//
//   1' < 1 < 2' < 2 < ... < n' < n
//
// where k' denotes the barred letter. ordinal() maps this order onto
// 1..2n (k' -> 2k-1, k -> 2k).
class Entry {
 public:
  Entry() : code_(1) {}

  static Entry unbarred(int level) { return Entry(check_level(level)); }
  static Entry barred(int level) { return Entry(-check_level(level)); }
  static Entry from_code(int code) {
    if (code == 0) throw InvalidInput("entry code must be non-zero");
    return Entry(code);
  }
  // 1-based position in the total order
  static Entry from_ordinal(int r) {
    if (r < 1) throw InvalidInput("entry ordinal must be positive");
    int level = (r + 1) / 2;
    return (r % 2 == 1) ? barred(level) : unbarred(level);
  }

  int code() const { return code_; }
  int level() const { return code_ < 0 ? -code_ : code_; }
  bool is_barred() const { return code_ < 0; }
  int ordinal() const { return 2 * level() - (is_barred() ? 1 : 0); }

  Entry next() const { return from_ordinal(ordinal() + 1); }

  std::string str() const {
    return std::to_string(level()) + (is_barred() ? "'" : "");
  }

  friend bool operator==(Entry a, Entry b) { return a.code_ == b.code_; }
  friend bool operator!=(Entry a, Entry b) { return a.code_ != b.code_; }
  friend bool operator<(Entry a, Entry b) { return a.ordinal() < b.ordinal(); }
  friend bool operator<=(Entry a, Entry b) { return a.ordinal() <= b.ordinal(); }
  friend bool operator>(Entry a, Entry b) { return a.ordinal() > b.ordinal(); }
  friend bool operator>=(Entry a, Entry b) { return a.ordinal() >= b.ordinal(); }

 private:
  explicit Entry(int code) : code_(code) {}
  static int check_level(int level) {
    if (level < 1) throw InvalidInput("entry level must be positive");
    return level;
  }
  int code_;
};

// Row carrying entry e in the 2n-row matrices whose rows are labelled
// n, n', n-1, n-1', ..., 1, 1' from the top.
inline int row_of_entry(Entry e, int n) {
  return 2 * (n - e.level()) + (e.is_barred() ? 2 : 1);
}

// Inverse of row_of_entry for 1 <= row <= 2n.
inline Entry entry_of_row(int row, int n) {
  int level = n - (row - 1) / 2;
  return (row % 2 == 0) ? Entry::barred(level) : Entry::unbarred(level);
}

}  // namespace icetab

#endif
