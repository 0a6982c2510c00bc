// Command-line front end: exhaustive enumeration, the maps between the
// three encodings, statistics, weights, closed-form counts and the
// identity verifier, all with JSON input/output.
//
// Exit codes: 0 success, 1 invalid input, 2 infeasible size, 3 internal
// invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "icetab/bijection.hpp"
#include "icetab/charpoly.hpp"
#include "icetab/ice.hpp"
#include "icetab/json_io.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/threads.hpp"
#include "icetab/uasm.hpp"

namespace {

using namespace icetab;

std::vector<int> parse_parts(const std::string& text, const std::string& flag) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int value = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw InvalidInput(flag + ": \"" + item + "\" is not an integer");
    }
  }
  return parts;
}

StrictPartition parse_mu(const std::string& text) {
  try {
    return StrictPartition(parse_parts(text, "--mu"));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("--mu: ") + e.what());
  }
}

Partition parse_lambda(const std::string& text) {
  try {
    return Partition(parse_parts(text, "--lambda"));
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("--lambda: ") + e.what());
  }
}

Json read_payload(const std::string& input_path) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(input_path);
    if (!in) throw InvalidInput("cannot open input file " + input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("payload is not valid JSON: ") + e.what());
  }
}

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw InvalidInput("cannot open output file " + path);
      stream = &file;
    }
  }
  std::ostream& out() { return *stream; }
};

ShiftedTableau load_shifted(const Json& j) {
  ShiftedTableau st = shifted_from_json(j);
  validate_shifted(st).require("shifted tableau");
  return st;
}

MuUASM load_uasm(const Json& j) {
  MuUASM ua = uasm_from_json(j);
  validate_uasm(ua).require("U-turn matrix");
  return ua;
}

ConfigMatrix load_config(const Json& j) {
  ConfigMatrix cm = config_from_json(j);
  validate_cm(cm).require("configuration matrix");
  return cm;
}

int run_enumerate(const std::string& kind, const StrictPartition& mu, int n,
                  bool count_only, int threads, Output& output) {
  long long count = 0;
  std::ostream& out = output.out();
  if (kind == "st") {
    for_each_shifted(mu, n, threads, [&](const ShiftedTableau& st) {
      if (count_only)
        ++count;
      else
        out << to_json(st).dump() << "\n";
    });
  } else if (kind == "uasm") {
    for_each_uasm(mu, n, threads, [&](const MuUASM& ua) {
      if (count_only)
        ++count;
      else
        out << to_json(ua).dump() << "\n";
    });
  } else {
    for_each_uasm(mu, n, threads, [&](const MuUASM& ua) {
      if (count_only)
        ++count;
      else
        out << to_json(to_config(ua)).dump() << "\n";
    });
  }
  if (count_only) {
    Json j;
    j["count"] = count;
    out << j.dump() << "\n";
  }
  return 0;
}

int run_map(const std::string& from, const std::string& to, const Json& payload,
            Output& output) {
  // normalize the input to a validated U-turn matrix plus, when the
  // source is a tableau, its tableau form
  std::optional<ShiftedTableau> st;
  std::optional<MuUASM> ua;
  if (from == "st") {
    st = load_shifted(payload);
    if (to != "st" && to != "signature") ua = tableau_to_uasm(*st);
  } else if (from == "uasm") {
    ua = load_uasm(payload);
  } else {
    ua = to_uasm(load_config(payload));
    ValidationReport r = validate_uasm(*ua);
    if (!r.ok())
      throw InvariantViolation(
          "relabelled configuration failed validation: " + r.summary());
  }

  Json result;
  if (to == "st") {
    result = to_json(st ? *st : uasm_to_tableau(*ua));
  } else if (to == "signature") {
    result = to_json(st ? diagonal_signature(*st) : to_signature(*ua));
  } else if (to == "uasm") {
    result = to_json(*ua);
  } else {
    result = to_json(to_config(*ua));
  }
  output.out() << result.dump() << "\n";
  return 0;
}

int run_stats(const std::string& kind, bool weights_mode, const Json& payload,
              Output& output) {
  Json result;
  if (kind == "st") {
    ShiftedTableau st = load_shifted(payload);
    if (weights_mode) {
      result["x"] = to_json(x_weight_shifted(st));
      result["t"] = to_json(t_weight_shifted(st));
    } else {
      result = shifted_stats_json(shifted_stats(st));
    }
  } else if (kind == "uasm") {
    MuUASM ua = load_uasm(payload);
    if (weights_mode) {
      result["x"] = to_json(x_weight_uasm(ua));
      result["t"] = to_json(t_weight_uasm(ua));
    } else {
      result = to_json(uasm_stats(ua));
    }
  } else {
    ConfigMatrix cm = load_config(payload);
    if (weights_mode) {
      auto [xw, tw] = ice_weights(cm);
      result["x"] = to_json(xw);
      result["t"] = to_json(tw);
    } else {
      result = to_json(ice_stats(cm));
    }
  }
  output.out() << result.dump() << "\n";
  return 0;
}

int run_count(const std::string& formula, int n, const Partition& lambda,
              Output& output) {
  BigInt value;
  if (formula == "asm")
    value = asm_count(n);
  else if (formula == "uasm-product")
    value = uasm_count_product(n);
  else if (formula == "uasm-recurrence")
    value = uasm_count_recurrence(n);
  else
    value = sp_dimension(lambda, n);
  Json j;
  j["formula"] = formula;
  j["n"] = n;
  if (formula == "dimension") j["lambda"] = to_json(lambda);
  j["value"] = value.str();
  output.out() << j.dump() << "\n";
  return 0;
}

int error_json(const std::string& code, const std::string& message, int exit_code) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  std::cout << j.dump() << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact U-turn alternating-sign-matrix / shifted-tableau / "
               "square-ice toolkit"};
  app.require_subcommand(1);

  std::string mu_text, lambda_text, kind = "st", from, to, formula;
  std::string input_path, output_path;
  int n = 0, threads = 1;
  bool count_only = false;

  auto* enumerate = app.add_subcommand("enumerate", "stream all objects of a shape");
  enumerate->add_option("--kind", kind, "st | uasm | cm")
      ->check(CLI::IsMember({"st", "uasm", "cm"}));
  enumerate->add_option("--mu", mu_text, "strict partition, e.g. 9,7,6,2,1")
      ->required();
  enumerate->add_option("--n", n, "rank")->required();
  enumerate->add_flag("--count-only", count_only, "emit only the count");
  enumerate->add_option("--threads", threads, "worker threads (0 = all)");
  enumerate->add_option("--output", output_path, "write to file instead of stdout");

  auto* map = app.add_subcommand("map", "convert one encoding into another");
  map->add_option("--from", from, "st | uasm | cm")
      ->required()
      ->check(CLI::IsMember({"st", "uasm", "cm"}));
  map->add_option("--to", to, "st | uasm | cm | signature")
      ->required()
      ->check(CLI::IsMember({"st", "uasm", "cm", "signature"}));
  map->add_option("--input", input_path, "payload file (default stdin)");
  map->add_option("--output", output_path, "write to file instead of stdout");

  auto* stats = app.add_subcommand("stats", "statistic record of a payload");
  stats->add_option("--kind", kind, "st | uasm | cm")
      ->required()
      ->check(CLI::IsMember({"st", "uasm", "cm"}));
  stats->add_option("--input", input_path, "payload file (default stdin)");
  stats->add_option("--output", output_path, "write to file instead of stdout");

  auto* weights = app.add_subcommand("weights", "x- and t-weights of a payload");
  weights->add_option("--kind", kind, "st | uasm | cm")
      ->required()
      ->check(CLI::IsMember({"st", "uasm", "cm"}));
  weights->add_option("--input", input_path, "payload file (default stdin)");
  weights->add_option("--output", output_path, "write to file instead of stdout");

  auto* verify = app.add_subcommand(
      "verify", "check the four-fold weighted enumeration identity");
  verify->add_option("--lambda", lambda_text, "partition (default empty)");
  verify->add_option("--n", n, "rank")->required();
  verify->add_option("--threads", threads, "worker threads (0 = all)");
  verify->add_option("--output", output_path, "write to file instead of stdout");

  auto* count = app.add_subcommand("count", "closed-form counts");
  count->add_option("--formula", formula,
                    "asm | uasm-product | uasm-recurrence | dimension")
      ->required()
      ->check(CLI::IsMember(
          {"asm", "uasm-product", "uasm-recurrence", "dimension"}));
  count->add_option("--n", n, "size / rank")->required();
  count->add_option("--lambda", lambda_text, "partition (dimension only)");
  count->add_option("--output", output_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_json("invalid-input", e.what(), 1);
  }

  try {
    Output output(output_path);
    if (enumerate->parsed())
      return run_enumerate(kind, parse_mu(mu_text), n, count_only, threads,
                           output);
    if (map->parsed())
      return run_map(from, to, read_payload(input_path), output);
    if (stats->parsed())
      return run_stats(kind, false, read_payload(input_path), output);
    if (weights->parsed())
      return run_stats(kind, true, read_payload(input_path), output);
    if (verify->parsed()) {
      VerifyReport rep = verify_identity(parse_lambda(lambda_text), n, threads);
      output.out() << to_json(rep).dump() << "\n";
      if (!rep.ok())
        return error_json("invariant-violation",
                          "identity verification failed", 3);
      return 0;
    }
    if (count->parsed())
      return run_count(formula, n, parse_lambda(lambda_text), output);
  } catch (const SizeLimit& e) {
    return error_json("infeasible-size", e.what(), 2);
  } catch (const InvariantViolation& e) {
    return error_json("invariant-violation", e.what(), 3);
  } catch (const InvalidInput& e) {
    return error_json("invalid-input", e.what(), 1);
  } catch (const std::exception& e) {
    return error_json("invalid-input", e.what(), 1);
  }
  return 0;
}
