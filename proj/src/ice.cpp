#include "icetab/ice.hpp"

#include "icetab/entry.hpp"

namespace icetab {

EdgeIn edges_in(VertexType v) {
  switch (v) {
    case VertexType::WE: return {false, true, false, true};
    case VertexType::NS: return {true, false, true, false};
    case VertexType::NE: return {false, false, true, true};
    case VertexType::SW: return {true, true, false, false};
    case VertexType::NW: return {false, true, true, false};
    case VertexType::SE: return {true, false, false, true};
  }
  return {};
}

const char* vertex_name(VertexType v) {
  switch (v) {
    case VertexType::WE: return "WE";
    case VertexType::NS: return "NS";
    case VertexType::NE: return "NE";
    case VertexType::SW: return "SW";
    case VertexType::NW: return "NW";
    case VertexType::SE: return "SE";
  }
  return "?";
}

std::optional<VertexType> vertex_from_name(std::string_view name) {
  for (VertexType v : kVertexTypes)
    if (name == vertex_name(v)) return v;
  return std::nullopt;
}

ValidationReport validate_cm(const ConfigMatrix& cm) {
  ValidationReport r;
  if (cm.mu.n() != cm.n) {
    r.add(ViolationKind::structure, "dimensions", 0, 0,
          "shape length does not equal rank");
    return r;
  }
  const int rows = 2 * cm.n, cols = cm.mu.m();
  if (cm.rows() != rows) {
    r.add(ViolationKind::structure, "dimensions", 0, 0,
          "expected " + std::to_string(rows) + " rows");
    return r;
  }
  for (int i = 1; i <= rows; ++i) {
    if (static_cast<int>(cm.cells[i - 1].size()) != cols) {
      r.add(ViolationKind::structure, "dimensions", i, 0,
            "expected " + std::to_string(cols) + " columns");
      return r;
    }
  }

  // Internal edges, each checked once by the cell on its left / top.
  for (int i = 1; i <= rows; ++i) {
    for (int q = 1; q < cols; ++q) {
      if (edges_in(cm.at(i, q)).e == edges_in(cm.at(i, q + 1)).w)
        r.add(ViolationKind::rule, "edge-consistency", i, q,
              "horizontal edge between columns " + std::to_string(q) +
                  " and " + std::to_string(q + 1));
    }
  }
  for (int i = 1; i < rows; ++i) {
    for (int q = 1; q <= cols; ++q) {
      if (edges_in(cm.at(i, q)).s == edges_in(cm.at(i + 1, q)).n)
        r.add(ViolationKind::rule, "edge-consistency", i, q,
              "vertical edge between rows " + std::to_string(i) + " and " +
                  std::to_string(i + 1));
    }
  }

  for (int i = 1; i <= rows; ++i)
    if (!edges_in(cm.at(i, cols)).e)
      r.add(ViolationKind::rule, "right-boundary", i, cols,
            "right edge must be incoming");
  for (int q = 1; q <= cols; ++q)
    if (edges_in(cm.at(rows, q)).s)
      r.add(ViolationKind::rule, "bottom-boundary", rows, q,
            "bottom edge must be outgoing");
  for (int k = 1; k <= cm.n; ++k) {
    bool upper_in = edges_in(cm.at(2 * k - 1, 1)).w;
    bool lower_in = edges_in(cm.at(2 * k, 1)).w;
    if (upper_in == lower_in)
      r.add(ViolationKind::rule, "u-turn", 2 * k - 1, 1,
            "left edges of rows " + std::to_string(2 * k - 1) + "," +
                std::to_string(2 * k) + " must be one in, one out");
  }
  for (int q = 1; q <= cols; ++q) {
    bool outgoing = !edges_in(cm.at(1, q)).n;
    bool want_out = cm.mu.has_part(q);
    if (outgoing != want_out)
      r.add(ViolationKind::rule, "top-boundary", 1, q,
            std::string("top edge must be ") +
                (want_out ? "outgoing" : "incoming"));
  }
  return r;
}

MuUASM to_uasm(const ConfigMatrix& cm) {
  MuUASM ua{cm.mu, cm.n, {}};
  ua.cells.resize(cm.rows());
  for (int i = 0; i < cm.rows(); ++i) {
    ua.cells[i].resize(cm.cols());
    for (int q = 0; q < cm.cols(); ++q) {
      switch (cm.cells[i][q]) {
        case VertexType::WE: ua.cells[i][q] = 1; break;
        case VertexType::NS: ua.cells[i][q] = -1; break;
        default: ua.cells[i][q] = 0;
      }
    }
  }
  return ua;
}

ConfigMatrix to_config(const MuUASM& ua) {
  ConfigMatrix cm{ua.mu, ua.n, {}};
  const int rows = ua.rows(), cols = ua.cols();
  cm.cells.resize(rows);
  for (int i = 0; i < rows; ++i) {
    cm.cells[i].resize(cols);
    for (int q = 0; q < cols; ++q) {
      int a = ua.cells[i][q];
      if (a == 1) {
        cm.cells[i][q] = VertexType::WE;
      } else if (a == -1) {
        cm.cells[i][q] = VertexType::NS;
      } else {
        int right = 0, below = 0;
        for (int p = q + 1; p < cols && right == 0; ++p) right = ua.cells[i][p];
        for (int j = i + 1; j < rows && below == 0; ++j) below = ua.cells[j][q];
        bool rpos = right == 1, bpos = below == 1;
        cm.cells[i][q] = rpos ? (bpos ? VertexType::NE : VertexType::SE)
                              : (bpos ? VertexType::NW : VertexType::SW);
      }
    }
  }
  return cm;
}

IceStats ice_stats(const ConfigMatrix& cm) {
  IceStats s;
  for (auto& v : s.in_unbarred_row) v.assign(cm.n, 0);
  for (auto& v : s.in_barred_row) v.assign(cm.n, 0);
  s.m_unbarred.assign(cm.n, 0);
  s.m_barred.assign(cm.n, 0);
  for (int i = 1; i <= cm.rows(); ++i) {
    Entry label = entry_of_row(i, cm.n);
    auto& per_row =
        label.is_barred() ? s.in_barred_row : s.in_unbarred_row;
    for (int q = 1; q <= cm.cols(); ++q) {
      VertexType v = cm.at(i, q);
      const int vi = static_cast<int>(v);
      s.total[vi]++;
      per_row[vi][label.level() - 1]++;
    }
  }
  for (int k = 0; k < cm.n; ++k) {
    auto u = [&](VertexType v) {
      return s.in_unbarred_row[static_cast<int>(v)][k];
    };
    auto b = [&](VertexType v) {
      return s.in_barred_row[static_cast<int>(v)][k];
    };
    s.ne_odd += u(VertexType::NE);
    s.se_even += b(VertexType::SE);
    s.wgt_even += b(VertexType::NE) + b(VertexType::SE) + b(VertexType::WE);
    s.m_unbarred[k] =
        u(VertexType::NE) + u(VertexType::SE) + u(VertexType::WE);
    s.m_barred[k] = b(VertexType::NE) + b(VertexType::SE) + b(VertexType::WE);
  }
  return s;
}

LaurentPoly vertex_t_weight(int rank, VertexType v, bool even_row) {
  switch (v) {
    case VertexType::NS:
      return LaurentPoly::one(rank) + LaurentPoly::t(rank);
    case VertexType::NE:
      return LaurentPoly::t(rank);
    case VertexType::WE:
      return even_row ? LaurentPoly::t(rank) : LaurentPoly::one(rank);
    case VertexType::SE:
      return even_row ? LaurentPoly::t(rank, 2) : LaurentPoly::one(rank);
    case VertexType::SW:
    case VertexType::NW:
      return LaurentPoly::one(rank);
  }
  return LaurentPoly::one(rank);
}

std::pair<LaurentPoly, LaurentPoly> ice_weights(const ConfigMatrix& cm) {
  IceStats s = ice_stats(cm);
  std::vector<int> xe(cm.n);
  for (int k = 0; k < cm.n; ++k) xe[k] = s.m_unbarred[k] - s.m_barred[k];
  LaurentPoly xw = LaurentPoly::monomial(cm.n, xe, 0);

  LaurentPoly tw = LaurentPoly::one(cm.n);
  for (int i = 1; i <= cm.rows(); ++i)
    for (int q = 1; q <= cm.cols(); ++q)
      tw *= vertex_t_weight(cm.n, cm.at(i, q), i % 2 == 0);

  LaurentPoly one_plus_t = LaurentPoly::one(cm.n) + LaurentPoly::t(cm.n);
  LaurentPoly closed =
      LaurentPoly::t(cm.n, s.ne_odd + s.se_even + s.wgt_even) *
      one_plus_t.pow(s.count(VertexType::NS));
  if (tw != closed)
    throw InvariantViolation(
        "cellwise ice t-weight disagrees with its closed form");
  return {xw, tw};
}

}  // namespace icetab
