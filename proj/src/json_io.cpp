#include "icetab/json_io.hpp"

#include <cctype>

namespace icetab {

namespace {

std::vector<int> int_vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput(what + " must hold integers");
    v.push_back(e.get<int>());
  }
  return v;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InvalidInput(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidInput(std::string("missing array field \"") + key + "\"");
  return j[key];
}

std::vector<std::vector<Entry>> entry_rows_from_json(const Json& rows) {
  std::vector<std::vector<Entry>> out;
  for (const auto& row : rows) {
    std::vector<Entry> r;
    for (const auto& e : int_vector_from_json(row, "tableau row"))
      r.push_back(Entry::from_code(e));
    out.push_back(std::move(r));
  }
  return out;
}

Json int_matrix_json(const IntMatrix& cells) {
  Json rows = Json::array();
  for (const auto& row : cells) rows.push_back(row);
  return rows;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }
Json to_json(const StrictPartition& mu) { return Json(mu.parts()); }

Partition partition_from_json(const Json& j, const std::string& what) {
  try {
    return Partition(int_vector_from_json(j, what));
  } catch (const InvalidInput& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

StrictPartition strict_from_json(const Json& j, const std::string& what) {
  try {
    return StrictPartition(int_vector_from_json(j, what));
  } catch (const InvalidInput& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

Json to_json(const ShiftedTableau& st) {
  Json j;
  j["shape"] = to_json(st.shape);
  j["n"] = st.n;
  Json rows = Json::array();
  for (const auto& row : st.rows) {
    Json r = Json::array();
    for (Entry e : row) r.push_back(e.code());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

ShiftedTableau shifted_from_json(const Json& j) {
  ShiftedTableau st;
  st.shape = strict_from_json(array_field(j, "shape"), "shape");
  st.n = int_field(j, "n");
  st.rows = entry_rows_from_json(array_field(j, "rows"));
  return st;
}

Json to_json(const OrdinaryTableau& t) {
  Json j;
  j["shape"] = to_json(t.shape);
  j["n"] = t.n;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (Entry e : row) r.push_back(e.code());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

OrdinaryTableau ordinary_from_json(const Json& j) {
  OrdinaryTableau t;
  t.shape = partition_from_json(array_field(j, "shape"), "shape");
  t.n = int_field(j, "n");
  t.rows = entry_rows_from_json(array_field(j, "rows"));
  return t;
}

Json to_json(const MuUASM& ua) {
  Json j;
  j["mu"] = to_json(ua.mu);
  j["n"] = ua.n;
  j["cells"] = int_matrix_json(ua.cells);
  return j;
}

MuUASM uasm_from_json(const Json& j) {
  MuUASM ua;
  ua.mu = strict_from_json(array_field(j, "mu"), "mu");
  ua.n = int_field(j, "n");
  for (const auto& row : array_field(j, "cells"))
    ua.cells.push_back(int_vector_from_json(row, "cells row"));
  return ua;
}

Json to_json(const SignatureMatrix& sm) {
  Json j;
  j["mu"] = to_json(sm.mu);
  j["n"] = sm.n;
  Json rows = Json::array();
  for (const auto& row : sm.cells) {
    Json r = Json::array();
    for (Sign s : row) r.push_back(s == Sign::plus ? "+" : "-");
    rows.push_back(std::move(r));
  }
  j["cells"] = std::move(rows);
  return j;
}

Json to_json(const ConfigMatrix& cm) {
  Json j;
  j["mu"] = to_json(cm.mu);
  j["n"] = cm.n;
  Json rows = Json::array();
  for (const auto& row : cm.cells) {
    Json r = Json::array();
    for (VertexType v : row) r.push_back(vertex_name(v));
    rows.push_back(std::move(r));
  }
  j["cells"] = std::move(rows);
  return j;
}

ConfigMatrix config_from_json(const Json& j) {
  ConfigMatrix cm;
  cm.mu = strict_from_json(array_field(j, "mu"), "mu");
  cm.n = int_field(j, "n");
  for (const auto& row : array_field(j, "cells")) {
    if (!row.is_array()) throw InvalidInput("cells must be an array of arrays");
    std::vector<VertexType> r;
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw InvalidInput("vertex labels must be strings");
      auto v = vertex_from_name(cell.get<std::string>());
      if (!v) throw InvalidInput("unknown vertex label \"" +
                                 cell.get<std::string>() + "\"");
      r.push_back(*v);
    }
    cm.cells.push_back(std::move(r));
  }
  return cm;
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json term;
    term["coeff"] = coeff.str();
    term["x"] = std::vector<int>(exps.begin(), exps.end() - 1);
    term["t"] = exps.back();
    terms.push_back(std::move(term));
  }
  return terms;
}

Json shifted_stats_json(const TableauStats& s) {
  Json j;
  j["m"] = s.m_unbarred;
  j["mbar"] = s.m_barred;
  j["bar"] = s.bar;
  j["str"] = s.str;
  j["var"] = s.var;
  return j;
}

Json ordinary_stats_json(const TableauStats& s) {
  Json j;
  j["m"] = s.m_unbarred;
  j["mbar"] = s.m_barred;
  j["bar"] = s.bar;
  return j;
}

Json to_json(const UasmStats& s) {
  Json j;
  j["neg"] = s.neg;
  j["bar"] = s.bar;
  j["ssi"] = s.ssi;
  j["m"] = s.m_unbarred;
  j["mbar"] = s.m_barred;
  return j;
}

Json to_json(const IceStats& s) {
  Json j;
  for (VertexType v : kVertexTypes) {
    std::string name = vertex_name(v);
    for (char& c : name) c = static_cast<char>(std::tolower(c));
    j[name] = s.count(v);
    j[name + "_k"] = s.in_unbarred_row[static_cast<int>(v)];
    j[name + "_kbar"] = s.in_barred_row[static_cast<int>(v)];
  }
  j["ne_odd"] = s.ne_odd;
  j["se_even"] = s.se_even;
  j["wgt_even"] = s.wgt_even;
  j["m"] = s.m_unbarred;
  j["mbar"] = s.m_barred;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["lambda"] = to_json(r.lambda);
  j["n"] = r.n;
  j["mu"] = to_json(r.mu);
  j["ok"] = r.ok();
  j["polynomials_equal"] = r.polynomials_equal;
  j["x1_equal"] = r.x1_equal;
  j["t1_equal"] = r.t1_equal;
  j["t1_value"] = r.t1_value.str();
  j["t1_expected"] = r.t1_expected.str();
  j["two_pow_neg_sum"] = r.two_pow_neg_sum.str();
  j["product"] = to_json(r.product);
  j["tableau_sum"] = to_json(r.tableau_sum);
  j["uasm_sum"] = to_json(r.uasm_sum);
  j["config_sum"] = to_json(r.config_sum);
  if (r.first_difference) {
    Json d;
    d["x"] = std::vector<int>(r.first_difference->exps.begin(),
                              r.first_difference->exps.end() - 1);
    d["t"] = r.first_difference->exps.back();
    d["lhs_coeff"] = r.first_difference->lhs.str();
    d["rhs_coeff"] = r.first_difference->rhs.str();
    j["first_difference"] = std::move(d);
  } else {
    j["first_difference"] = nullptr;
  }
  return j;
}

}  // namespace icetab
