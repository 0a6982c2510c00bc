#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "icetab/charpoly.hpp"
#include "icetab/tableaux.hpp"
#include "icetab/uasm.hpp"

// The OpenMP kernels fan the searches out over first-row branches and the
// sums over partial accumulators; every observable result must be
// identical to the serial reference, element for element.

using namespace icetab;
using namespace fixtures;

TEST_CASE("parallel shifted generation equals the serial reference") {
  for (const StrictPartition& mu :
       {StrictPartition{2, 1}, StrictPartition{4, 2, 1}, staircase(4)}) {
    auto serial = generate_shifted(mu, mu.n(), 1);
    for (int threads : {2, 4, 0})
      CHECK(generate_shifted(mu, mu.n(), threads) == serial);
  }
}

TEST_CASE("parallel ordinary generation equals the serial reference") {
  for (const Partition& lam : {Partition{2, 1}, Partition{3, 2}}) {
    auto serial = generate_ordinary(lam, 3, 1);
    for (int threads : {2, 4, 0})
      CHECK(generate_ordinary(lam, 3, threads) == serial);
  }
}

TEST_CASE("parallel brute force equals the serial reference") {
  for (const StrictPartition& mu :
       {StrictPartition{3, 1}, StrictPartition{4, 2, 1}, staircase(4)}) {
    auto serial = brute_force_uasms(mu, mu.n(), 1);
    for (int threads : {2, 4, 0})
      CHECK(brute_force_uasms(mu, mu.n(), threads) == serial);
  }
}

TEST_CASE("parallel character and identity sums equal the serial ones") {
  CHECK(sp_character(Partition{2, 1}, 3, 4) == sp_character(Partition{2, 1}, 3, 1));

  VerifyReport serial = verify_identity(Partition{1}, 2, 1);
  VerifyReport parallel = verify_identity(Partition{1}, 2, 4);
  CHECK(serial.ok());
  CHECK(parallel.ok());
  CHECK(serial.product == parallel.product);
  CHECK(serial.tableau_sum == parallel.tableau_sum);
  CHECK(serial.uasm_sum == parallel.uasm_sum);
  CHECK(serial.config_sum == parallel.config_sum);
}
