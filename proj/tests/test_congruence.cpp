#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstddef>
#include <map>
#include <vector>

#include "pf/congruence.hpp"
#include "pf/pseudofact.hpp"
#include "pf/rational.hpp"

using pf::Int;

namespace {

// Residues alpha_n mod M for M = 2..20, n = 0..25.
constexpr int kResidues[19][26] = {
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0},
    {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2,
     1, 2},
    {1, 3, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0},
    {1, 4, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0},
    {1, 5, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2, 4, 2,
     4, 2},
    {1, 6, 5, 2, 2, 2, 2, 4, 1, 6, 6, 6, 6, 5, 3, 4, 4, 4, 4, 1, 2, 5, 5, 5,
     5, 3},
    {1, 7, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0},
    {1, 8, 7, 2, 7, 5, 4, 5, 1, 8, 1, 2, 7, 2, 4, 5, 4, 8, 1, 8, 7, 2, 7, 5,
     4, 5},
    {1, 9, 8, 2, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0},
    {1, 10, 9, 2, 5, 4, 10, 6, 5, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0, 0},
    {1, 11, 10, 2, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4, 8, 4,
     8, 4, 8},
    {1, 12, 11, 2, 3, 12, 5, 0, 5, 1, 4, 2, 1, 11, 9, 4, 6, 11, 10, 0, 10, 2,
     8, 4, 2, 9},
    {1, 13, 12, 2, 2, 2, 2, 4, 8, 6, 6, 6, 6, 12, 10, 4, 4, 4, 4, 8, 2, 12,
     12, 12, 12, 10},
    {1, 14, 13, 2, 1, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10, 5, 10,
     5, 10, 5, 10, 5},
    {1, 15, 14, 2, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0, 0},
    {1, 16, 15, 2, 16, 11, 3, 3, 5, 16, 7, 12, 10, 7, 1, 10, 1, 0, 0, 0, 0,
     0, 0, 0, 0, 0},
    {1, 17, 16, 2, 16, 14, 4, 14, 10, 8, 10, 2, 16, 2, 4, 14, 4, 8, 10, 8,
     16, 2, 16, 14, 4, 14},
    {1, 18, 17, 2, 16, 17, 3, 14, 0, 17, 6, 9, 8, 3, 18, 0, 15, 8, 7, 11, 3,
     16, 14, 3, 5, 17},
    {1, 19, 18, 2, 16, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
     0, 0, 0},
};

}  // namespace

TEST_CASE("residues match the direct reduction of the exact values") {
  auto exact = pf::alpha_seq(26);
  for (unsigned long m = 2; m <= 20; ++m) {
    auto row = pf::alpha_mod(Int(m), 26);
    REQUIRE_EQ(row.size(), 26);
    for (std::size_t n = 0; n < 26; ++n) {
      Int want = exact[n] % Int(m);
      if (want < 0) want += Int(m);
      CHECK_EQ(row[n], want);
    }
  }
  CHECK_THROWS_AS(pf::alpha_mod(Int(1), 5), std::invalid_argument);
}

TEST_CASE("residue grid") {
  auto rows = pf::residue_table(20, 26);
  REQUIRE_EQ(rows.size(), 19);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t n = 0; n < 26; ++n) {
      CAPTURE(i + 2);
      CAPTURE(n);
      CHECK_EQ(rows[i][n], kResidues[i][n]);
    }
  }
}

TEST_CASE("period detection on synthetic input") {
  // 9, 9, 1, 2, 1, 2, 1, 2: preperiod 2, period 2
  std::vector<Int> v{9, 9, 1, 2, 1, 2, 1, 2};
  auto info = pf::detect_period(v);
  REQUIRE(info.has_value());
  CHECK_EQ(info->preperiod, 2);
  CHECK_EQ(info->period, 2);

  // constant sequence: purely periodic with period 1
  auto c = pf::detect_period(std::vector<Int>{5, 5, 5, 5});
  REQUIRE(c.has_value());
  CHECK_EQ(c->preperiod, 0);
  CHECK_EQ(c->period, 1);

  // too short to see two full periods
  CHECK_FALSE(pf::detect_period(std::vector<Int>{1, 2, 3, 1, 2}).has_value());
}

TEST_CASE("certified periods at horizon 500") {
  const std::map<unsigned long, pf::PeriodInfo> want{
      {2, {2, 1}},   {3, {0, 2}},   {4, {4, 1}},  {5, {5, 1}},  {6, {2, 2}},
      {7, {1, 36}},  {8, {4, 1}},   {9, {0, 18}}, {10, {5, 1}}, {11, {11, 1}},
      {12, {4, 2}},  {13, {1, 144}}, {14, {2, 36}}, {15, {5, 2}},
      {16, {6, 1}},  {17, {17, 1}}, {18, {2, 18}}, {19, {1, 108}},
      {20, {5, 1}}};
  for (const auto& [m, info] : want) {
    CAPTURE(m);
    auto got = pf::detect_period(pf::alpha_mod(Int(m), 500));
    REQUIRE(got.has_value());
    CHECK_EQ(got->preperiod, info.preperiod);
    CHECK_EQ(got->period, info.period);

    // doubling the horizon must not change a certified answer
    auto wide = pf::detect_period(pf::alpha_mod(Int(m), 1000));
    REQUIRE(wide.has_value());
    CHECK_EQ(wide->preperiod, info.preperiod);
    CHECK_EQ(wide->period, info.period);
  }
}

TEST_CASE("long periods are not certified at short horizons") {
  // mod 13 repeats with period 144, mod 19 with 108; neither fits twice
  CHECK_FALSE(pf::detect_period(pf::alpha_mod(Int(13), 100)).has_value());
  CHECK_FALSE(pf::detect_period(pf::alpha_mod(Int(19), 200)).has_value());
}

TEST_CASE("rows that die out") {
  const std::map<unsigned long, std::size_t> zero_from{
      {2, 2}, {4, 4}, {5, 5},   {8, 4},   {10, 5},
      {11, 11}, {16, 6}, {17, 17}, {20, 5}};
  for (const auto& [m, start] : zero_from) {
    CAPTURE(m);
    auto row = pf::alpha_mod(Int(m), 100);
    for (std::size_t n = start; n < row.size(); ++n) CHECK_EQ(row[n], 0);
    CHECK_NE(row[start - 1], 0);
  }
}

TEST_CASE("canonical modulus") {
  CHECK_EQ(pf::canonical_modulus(1), 3);
  CHECK_EQ(pf::canonical_modulus(2), 12);
  CHECK_EQ(pf::canonical_modulus(3), 324);
  CHECK_EQ(pf::canonical_modulus(4), 5184);
  CHECK_EQ(pf::canonical_modulus(7), Int("2057529600"));
  CHECK_THROWS_AS(pf::canonical_modulus(0), std::invalid_argument);
}

TEST_CASE("reduced convergents") {
  auto c7 = pf::modular_convergent(7, Int(7));
  CHECK_EQ(c7.p, (std::vector<Int>{1, 6, 5, 2, 2, 2, 6}));
  CHECK_EQ(c7.q, (std::vector<Int>{1, 0, 0, 0, 0, 0, 4, 0}));
  CHECK_EQ(c7.modulus, 7);

  auto c11 = pf::modular_convergent(11, Int(11));
  CHECK_EQ(c11.p, (std::vector<Int>{1, 10, 9, 2, 5, 4, 10, 6, 5, 1, 1}));
  CHECK_EQ(c11.q, (std::vector<Int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));

  // default modulus is the canonical one
  CHECK_EQ(pf::modular_convergent(3).modulus, 324);
  CHECK_THROWS_AS(pf::modular_convergent(0), std::invalid_argument);
  CHECK_THROWS_AS(pf::modular_convergent(3, Int(1)), std::invalid_argument);
}

TEST_CASE("the denominator drives a linear recurrence on the residues") {
  for (std::size_t m = 1; m <= 7; ++m) {
    CAPTURE(m);
    CHECK(pf::check_modular_recurrence(m, pf::canonical_modulus(m), 60));
  }
  // control: mod 5 is not a modulus the depth-3 recurrence respects
  CHECK_FALSE(pf::check_modular_recurrence(3, Int(5), 30));
}

TEST_CASE("series expansion of P_m/Q_m matches the sequence") {
  for (std::size_t m = 1; m <= 7; ++m) {
    CAPTURE(m);
    CHECK(pf::check_series_congruence(m, 60));
  }

  // spot check the quotient expansion itself: P_1/Q_1 = 1/(1+z) mod 3
  auto q = pf::convergent_series_mod(1, Int(3), 8);
  CHECK_EQ(q, (std::vector<Int>{1, 2, 1, 2, 1, 2, 1, 2}));
}

TEST_CASE("every term from the eleventh on is divisible by eleven") {
  auto row = pf::alpha_mod(Int(11), 200);
  for (std::size_t n = 11; n < 200; ++n) CHECK_EQ(row[n], 0);
}
