#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "nnroute/order.hpp"
#include "nnroute/schedule.hpp"

using namespace nnroute;

namespace {

QubitOrder random_order(int n, std::mt19937& rng) {
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  return QubitOrder(std::move(pos));
}

// Independent oracle: count adjacent transpositions performed by a plain
// bubble sort of b's locations viewed through a.
std::int64_t bubble_sort_oracle(const QubitOrder& a, const QubitOrder& b) {
  const int n = a.n();
  std::vector<int> v(n);
  for (int q = 0; q < n; ++q) v[a.pos[q]] = b.pos[q];
  std::int64_t swaps = 0;
  for (int pass = 0; pass < n; ++pass)
    for (int l = 0; l + 1 < n; ++l)
      if (v[l] > v[l + 1]) {
        std::swap(v[l], v[l + 1]);
        ++swaps;
      }
  return swaps;
}

}  // namespace

TEST_CASE("kendall tau basics") {
  QubitOrder id3 = QubitOrder::identity(3);
  CHECK(kendall_tau(id3, id3) == 0);
  CHECK(kendall_tau_naive(id3, id3) == 0);

  QubitOrder rev3(std::vector<int>{2, 1, 0});
  CHECK(kendall_tau(id3, rev3) == 3);  // full reversal: n(n-1)/2

  // bubble-sort oracle value for (1,2,3,4) vs (2,4,1,3)
  QubitOrder a = QubitOrder::identity(4);
  QubitOrder b(std::vector<int>{1, 3, 0, 2});
  CHECK(bubble_sort_oracle(a, b) == 3);
  CHECK(kendall_tau(a, b) == 3);

  CHECK_THROWS_AS(kendall_tau(id3, QubitOrder::identity(4)), std::invalid_argument);
}

TEST_CASE("naive and merge-sort distances agree exhaustively for small n") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> pa(n), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    do {
      std::iota(pb.begin(), pb.end(), 0);
      do {
        QubitOrder a{pa}, b{pb};
        REQUIRE(kendall_tau(a, b) == kendall_tau_naive(a, b));
      } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 2000; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6
    QubitOrder a = random_order(n, rng), b = random_order(n, rng), c = random_order(n, rng);
    auto dab = kendall_tau(a, b);
    REQUIRE(dab == kendall_tau(b, a));
    REQUIRE((dab == 0) == (a == b));
    REQUIRE(dab >= 0);
    REQUIRE(dab <= max_kendall_tau(n));
    REQUIRE(kendall_tau(a, c) <= dab + kendall_tau(b, c));
  }
}

TEST_CASE("distance is invariant under reversing the array on both sides") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);
    QubitOrder a = random_order(n, rng), b = random_order(n, rng);
    QubitOrder ra = a, rb = b;
    for (int q = 0; q < n; ++q) {
      ra.pos[q] = n - 1 - a.pos[q];
      rb.pos[q] = n - 1 - b.pos[q];
    }
    REQUIRE(kendall_tau(a, b) == kendall_tau(ra, rb));
  }
}

TEST_CASE("apply_swap") {
  QubitOrder id3 = QubitOrder::identity(3);
  QubitOrder swapped = apply_swap(id3, SwapStep{1});
  CHECK(swapped.pos == std::vector<int>{0, 2, 1});
  CHECK(apply_swap(swapped, SwapStep{1}) == id3);  // involution
  CHECK_THROWS_AS(apply_swap(id3, SwapStep{2}), std::invalid_argument);

  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);
    QubitOrder order = random_order(n, rng);
    SwapStep step{static_cast<int>(rng() % (n - 1))};
    REQUIRE(kendall_tau(order, apply_swap(order, step)) == 1);
  }
}

TEST_CASE("realize_swaps: replay correctness and minimality") {
  QubitOrder id3 = QubitOrder::identity(3);
  CHECK(realize_swaps(id3, id3).empty());

  QubitOrder target(std::vector<int>{1, 0, 2});
  auto steps = realize_swaps(id3, target);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].location == 0);

  std::mt19937 rng(4242);
  for (int iter = 0; iter < 2000; ++iter) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7
    QubitOrder a = random_order(n, rng), b = random_order(n, rng);
    auto plan = realize_swaps(a, b);
    REQUIRE(static_cast<std::int64_t>(plan.size()) == kendall_tau(a, b));
    REQUIRE(static_cast<std::int64_t>(plan.size()) == kendall_tau_naive(a, b));
    QubitOrder cur = a;
    for (SwapStep step : plan) cur = apply_swap(cur, step);
    REQUIRE(cur == b);
  }
}

TEST_CASE("verify_schedule") {
  QuantumCircuit qft3;
  qft3.n = 3;
  qft3.gates = {{0, 1}, {0, 2}, {1, 2}};

  SECTION("known optimal schedule for the 3-qubit QFT") {
    OrderSchedule schedule;
    schedule.orders = {QubitOrder{{0, 1, 2}}, QubitOrder{{0, 2, 1}}, QubitOrder{{0, 2, 1}}};
    auto report = verify_schedule(qft3, schedule);
    CHECK(report.feasible);
    CHECK(report.total_swaps == 1);
    CHECK(report.per_transition_cost == std::vector<std::int64_t>{1, 0});
  }

  SECTION("non-adjacent gate is rejected") {
    OrderSchedule schedule;
    schedule.orders = {QubitOrder{{0, 1, 2}}, QubitOrder{{0, 1, 2}}, QubitOrder{{0, 1, 2}}};
    auto report = verify_schedule(qft3, schedule);
    CHECK_FALSE(report.feasible);
    CHECK(report.per_gate_ok == std::vector<bool>{true, false, true});
  }

  SECTION("budget") {
    OrderSchedule schedule;
    schedule.orders = {QubitOrder{{0, 1, 2}}, QubitOrder{{0, 2, 1}}, QubitOrder{{0, 2, 1}}};
    CHECK(verify_schedule(qft3, schedule, 1).feasible);
    CHECK_FALSE(verify_schedule(qft3, schedule, 0).feasible);
  }

  SECTION("all-adjacent circuit with a constant schedule costs 0") {
    QuantumCircuit chain;
    chain.n = 4;
    chain.gates = {{0, 1}, {1, 2}, {2, 3}};
    OrderSchedule schedule;
    schedule.orders.assign(3, QubitOrder::identity(4));
    auto report = verify_schedule(chain, schedule);
    CHECK(report.feasible);
    CHECK(report.total_swaps == 0);
  }

  SECTION("length mismatch throws") {
    OrderSchedule schedule;
    schedule.orders = {QubitOrder::identity(3)};
    CHECK_THROWS_AS(verify_schedule(qft3, schedule), std::invalid_argument);
  }
}

TEST_CASE("schedule text round trip") {
  OrderSchedule schedule;
  schedule.orders = {QubitOrder{{0, 2, 1}}, QubitOrder{{2, 1, 0}}};
  std::string text = write_schedule(schedule);
  CHECK(text == "1 3 2\n3 2 1\n");
  OrderSchedule back = read_schedule("# comment\n" + text, 3);
  REQUIRE(back.length() == 2);
  CHECK(back.orders[0] == schedule.orders[0]);
  CHECK(back.orders[1] == schedule.orders[1]);

  CHECK_THROWS_AS(read_schedule("1 2\n", 3), std::invalid_argument);
  CHECK_THROWS_AS(read_schedule("1 1 2\n", 3), std::invalid_argument);
}
