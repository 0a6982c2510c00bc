#ifndef ICETAB_ICE_HPP
#define ICETAB_ICE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icetab/laurent.hpp"
#include "icetab/partition.hpp"
#include "icetab/uasm.hpp"
#include "icetab/validation.hpp"

namespace icetab {

// The six admissible vertex orientations. Each has exactly two incoming
// and two outgoing edges: WE takes both horizontal edges in, NS both
// vertical edges in, and the four corner types are named after their
// outgoing pair.
enum class VertexType : unsigned char { WE, NS, NE, SW, NW, SE };

inline constexpr std::array<VertexType, 6> kVertexTypes = {
    VertexType::WE, VertexType::NS, VertexType::NE,
    VertexType::SW, VertexType::NW, VertexType::SE};

// One flag per compass direction; true = the edge points into the vertex.
struct EdgeIn {
  bool n, e, s, w;
};

EdgeIn edges_in(VertexType v);
const char* vertex_name(VertexType v);
std::optional<VertexType> vertex_from_name(std::string_view name);

// 2n x m grid of vertex types encoding a square-ice state with the U-turn
// boundary: right-hand edges incoming, bottom edges outgoing, each
// left-hand row pair one edge in and one out, and the top edge of column
// q outgoing exactly when q is a part of mu.
struct ConfigMatrix {
  StrictPartition mu;
  int n = 0;
  std::vector<std::vector<VertexType>> cells;

  int rows() const { return static_cast<int>(cells.size()); }
  int cols() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
  VertexType at(int i, int q) const { return cells[i - 1][q - 1]; }

  friend bool operator==(const ConfigMatrix&, const ConfigMatrix&) = default;
};

struct IceStats {
  std::array<int, 6> total{};  // indexed by VertexType
  // per-type counts restricted to the rows labelled k and k'
  std::array<std::vector<int>, 6> in_unbarred_row;
  std::array<std::vector<int>, 6> in_barred_row;
  int ne_odd = 0;   // NE cells in odd rows from the top
  int se_even = 0;  // SE cells in even rows
  int wgt_even = 0; // NE + SE + WE cells in even rows
  std::vector<int> m_unbarred;  // NE+SE+WE count per unbarred row label
  std::vector<int> m_barred;

  int count(VertexType v) const { return total[static_cast<int>(v)]; }
};

// Rules: dimensions; edge-consistency (each internal edge has one tail and
// one head); right-boundary; bottom-boundary; u-turn (left boundary);
// top-boundary.
ValidationReport validate_cm(const ConfigMatrix& cm);

// WE -> 1, NS -> -1, the rest -> 0.
MuUASM to_uasm(const ConfigMatrix& cm);

// 1 -> WE, -1 -> NS; a 0 becomes NE, SW, NW or SE according as its nearest
// non-zero neighbours (right, below) are (1,1), (-1,-1), (-1,1) or
// (1,-1), where an absent neighbour counts as -1.
ConfigMatrix to_config(const MuUASM& ua);

IceStats ice_stats(const ConfigMatrix& cm);

// Cellwise t-weight of one vertex: NS weighs (1+t) in every row; NE
// weighs t in every row; in even rows WE weighs t and SE weighs t^2; all
// other weights are 1.
LaurentPoly vertex_t_weight(int rank, VertexType v, bool even_row);

// x-monomial prod x_k^(m_k - m_k') and the cellwise t-weight product,
// which always collapses to t^(ne_odd+se_even+wgt_even) (1+t)^ns and is
// re-checked on every call.
std::pair<LaurentPoly, LaurentPoly> ice_weights(const ConfigMatrix& cm);

}  // namespace icetab

#endif
