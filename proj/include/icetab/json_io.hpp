#ifndef ICETAB_JSON_IO_HPP
#define ICETAB_JSON_IO_HPP

#include <json.hpp>

#include "icetab/charpoly.hpp"
#include "icetab/ice.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/uasm.hpp"

namespace icetab {

// Insertion-ordered documents so identical inputs serialize to identical
// bytes.
using Json = nlohmann::ordered_json;

// Partitions are arrays of parts, largest first: [9,7,6,2,1].
Json to_json(const Partition& p);
Json to_json(const StrictPartition& mu);
Partition partition_from_json(const Json& j, const std::string& what = "partition");
StrictPartition strict_from_json(const Json& j, const std::string& what = "mu");

// { "shape": [...], "n": int, "rows": [[signed ints]] }; -k encodes k'.
Json to_json(const ShiftedTableau& st);
ShiftedTableau shifted_from_json(const Json& j);
Json to_json(const OrdinaryTableau& t);
OrdinaryTableau ordinary_from_json(const Json& j);

// { "mu": [...], "n": int, "cells": [[-1|0|1, ...], ...] }, top row first.
Json to_json(const MuUASM& ua);
MuUASM uasm_from_json(const Json& j);

// Cells are "+"/"-" strings.
Json to_json(const SignatureMatrix& sm);

// Cells are the two-letter vertex labels.
Json to_json(const ConfigMatrix& cm);
ConfigMatrix config_from_json(const Json& j);

// Sorted list of { "coeff": decimal string, "x": [ints], "t": int }.
Json to_json(const LaurentPoly& p);

Json shifted_stats_json(const TableauStats& s);
Json ordinary_stats_json(const TableauStats& s);
Json to_json(const UasmStats& s);
Json to_json(const IceStats& s);
Json to_json(const VerifyReport& r);

}  // namespace icetab

#endif
