#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "icetab/ice.hpp"

using namespace icetab;
using namespace fixtures;

TEST_CASE("every vertex type has two edges in and two out") {
  for (VertexType v : kVertexTypes) {
    EdgeIn e = edges_in(v);
    CHECK(int(e.n) + int(e.e) + int(e.s) + int(e.w) == 2);
  }
  CHECK(vertex_from_name("NW") == VertexType::NW);
  CHECK(!vertex_from_name("XX").has_value());
}

TEST_CASE("the running configuration is valid") {
  CHECK(validate_cm(running_config()).ok());
}

TEST_CASE("flipping the top-left vertex breaks the top boundary") {
  ConfigMatrix cm = running_config();
  cm.cells[0][0] = VertexType::SW;  // N flips from outgoing to incoming
  ValidationReport r = validate_cm(cm);
  REQUIRE(!r.ok());
  bool top = false;
  for (const auto& v : r.violations())
    if (v.rule == "top-boundary" && v.col == 1) top = true;
  CHECK(top);
}

TEST_CASE("a 2x1 column is a valid configuration") {
  ConfigMatrix cm = make_config({1}, 1, {{"WE"}, {"SW"}});
  CHECK(validate_cm(cm).ok());
}

TEST_CASE("relabelling recovers the running matrix") {
  CHECK(to_uasm(running_config()) == running_uasm());
  CHECK(to_uasm(make_config({1}, 1, {{"WE"}, {"SW"}})) ==
        make_uasm({1}, 1, {{1}, {0}}));
}

TEST_CASE("to_config classifies zeros by nearest non-zero neighbours") {
  CHECK(to_config(running_uasm()) == running_config());
  CHECK(to_config(make_uasm({1}, 1, {{1}, {0}})) ==
        make_config({1}, 1, {{"WE"}, {"SW"}}));
  CHECK(to_config(make_uasm({1}, 1, {{0}, {1}})) ==
        make_config({1}, 1, {{"NW"}, {"WE"}}));
}

TEST_CASE("statistics of the running configuration") {
  IceStats s = ice_stats(running_config());
  CHECK(s.count(VertexType::NS) == 7);
  CHECK(s.wgt_even == 11);
  CHECK(s.ne_odd + s.se_even == 7);
  // the seven marked cells split into four odd-row NE and three even-row SE
  CHECK(s.ne_odd == 4);
  CHECK(s.se_even == 3);
  int total = 0;
  for (VertexType v : kVertexTypes) total += s.count(v);
  CHECK(total == 90);
}

TEST_CASE("statistics of a single column") {
  IceStats s = ice_stats(make_config({1}, 1, {{"WE"}, {"SW"}}));
  CHECK(s.count(VertexType::WE) == 1);
  CHECK(s.count(VertexType::SW) == 1);
  CHECK(s.count(VertexType::NS) == 0);
  CHECK(s.count(VertexType::NE) == 0);
  CHECK(s.count(VertexType::NW) == 0);
  CHECK(s.count(VertexType::SE) == 0);
}

TEST_CASE("weights of the running configuration") {
  auto [xw, tw] = ice_weights(running_config());
  CHECK(xw == LaurentPoly::x(5, 2, -1) * LaurentPoly::x(5, 4, 4));
  LaurentPoly one_plus_t = LaurentPoly::one(5) + LaurentPoly::t(5);
  CHECK(tw == LaurentPoly::t(5, 18) * one_plus_t.pow(7));
}

TEST_CASE("weights of single columns") {
  auto [xw, tw] = ice_weights(make_config({1}, 1, {{"WE"}, {"SW"}}));
  CHECK(xw == LaurentPoly::x(1, 1));
  CHECK(tw == LaurentPoly::one(1));

  auto [xw2, tw2] = ice_weights(make_config({1}, 1, {{"NW"}, {"WE"}}));
  CHECK(xw2 == LaurentPoly::x(1, 1, -1));
  CHECK(tw2 == LaurentPoly::t(1));
}

TEST_CASE("relabelling is a bijection on the desk grid") {
  for (const StrictPartition& mu : desk_grid()) {
    if (mu.m() > 3) continue;
    for (const auto& ua : brute_force_uasms(mu, mu.n())) {
      ConfigMatrix cm = to_config(ua);
      CHECK(validate_cm(cm).ok());
      CHECK(to_uasm(cm) == ua);
      CHECK(to_config(to_uasm(cm)) == cm);

      // statistic correspondences between the two encodings
      IceStats is = ice_stats(cm);
      UasmStats us = uasm_stats(ua);
      CHECK(is.count(VertexType::NS) == us.neg);
      CHECK(is.wgt_even == us.bar);
      CHECK(is.ne_odd + is.se_even == us.ssi);
      CHECK(is.m_unbarred == us.m_unbarred);
      CHECK(is.m_barred == us.m_barred);

      // cellwise product equals the closed form (rechecked internally)
      auto [xw, tw] = ice_weights(cm);
      CHECK(xw == x_weight_uasm(ua));
      CHECK(tw == t_weight_uasm(ua));
    }
  }
}
