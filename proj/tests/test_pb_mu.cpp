#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bsymb/pb_mu.hpp"

using namespace bsymb;

namespace {
CodeParams make(int p, int e, int r, u64 N = 2) { return validate_params(build_tower(p, e, r), N); }
}  // namespace

TEST_CASE("the defining powers of eta are independent over F_q") {
  for (const auto& cp : {make(3, 1, 4), make(5, 1, 4), make(3, 2, 4), make(3, 2, 2)}) {
    for (u64 b = 2; b <= static_cast<u64>(cp.tw().r()); ++b) CHECK(independence_check(cp, b));
    CHECK_THROWS_AS(independence_check(cp, 1), BOutOfRange);
    CHECK_THROWS_AS(independence_check(cp, cp.tw().r() + 1), BOutOfRange);
  }
}

TEST_CASE("P(b) has the projective size and distinct elements") {
  for (const auto& cp : {make(3, 1, 4), make(5, 1, 2), make(3, 2, 2)}) {
    const u64 q = cp.tw().q();
    for (u64 b = 2; b <= static_cast<u64>(cp.tw().r()); ++b) {
      const auto pb = build_pb(cp, b);
      u64 expected = 0, acc = 1;
      for (u64 j = 0; j < b; ++j) {
        expected += acc;
        acc *= q;
      }
      CHECK(pb.logs.size() == expected);  // (q^b - 1)/(q - 1)
      CHECK(std::set<u64>(pb.logs.begin(), pb.logs.end()).size() == pb.logs.size());
      CHECK(pb.is_square.size() == pb.logs.size());
    }
  }
}

TEST_CASE("at b = r the F_q^* cosets of P(r) tile the multiplicative group") {
  for (const auto& cp : {make(3, 1, 4), make(3, 2, 2), make(5, 1, 2)}) {
    const Tower& tw = cp.tw();
    const u64 M = tw.order();
    const u64 step = M / (tw.q() - 1);
    const auto pb = build_pb(cp, tw.r());
    std::set<u64> covered;
    for (u64 lx : pb.logs)
      for (u64 k = 0; k < tw.q() - 1; ++k) covered.insert((lx + k * step) % M);
    CHECK(covered.size() == M);  // disjoint union over all of F_(q^r)^*
  }
}

TEST_CASE("mu values for the small parameter sets") {
  CHECK(mu(make(3, 1, 2), 2) == 2);
  const auto cp34 = make(3, 1, 4);
  CHECK(mu(cp34, 2) == 3);
  CHECK(mu(cp34, 3) == 8);
  CHECK(mu(cp34, 4) == 20);
  CHECK(mu(make(5, 1, 2), 2) == 3);
  const auto cp54 = make(5, 1, 4);
  CHECK(mu(cp54, 2) == 4);
  CHECK(mu(cp54, 3) == 18);
  CHECK(mu(cp54, 4) == 78);
  CHECK(mu(make(3, 2, 2), 2) == 5);
  const auto cp94 = make(3, 2, 4);
  CHECK(mu(cp94, 2) == 4);
  CHECK(mu(cp94, 3) == 50);
  CHECK(mu(cp94, 4) == 410);
}

TEST_CASE("mu(r) equals its closed form") {
  for (const auto& cp : {make(3, 1, 2), make(3, 1, 4), make(5, 1, 2), make(5, 1, 4),
                         make(3, 2, 2), make(3, 2, 4)}) {
    const Tower& tw = cp.tw();
    const u64 closed = tw.order() / (2 * (tw.q() - 1));
    CHECK(mu_closed_r(cp) == closed);
    CHECK(mu(cp, tw.r()) == closed);
  }
}

TEST_CASE("b range validation for P(b)") {
  const auto cp = make(3, 1, 4);
  CHECK_THROWS_AS(build_pb(cp, 1), BOutOfRange);
  CHECK_THROWS_AS(build_pb(cp, 5), BOutOfRange);
  CHECK_THROWS_AS(build_pb_with_eta(cp, 2, 2), Error);  // gcd(2, 80) != 1
}

TEST_CASE("mu_report carries size and midpoint distance") {
  const auto rep = mu_report(make(3, 1, 4), 3);
  CHECK(rep.b == 3);
  CHECK(rep.mu == 8);
  CHECK(rep.pb_size == 13);
  CHECK(rep.midpoint_distance == "3/2");  // |8 - 13/2|
  CHECK(rep.modulus == "2,0,0,2,1");
  CHECK(rep.eta == "0,1,0,0");

  const auto rep2 = mu_report(make(3, 1, 4), 4);
  CHECK(rep2.mu == 20);
  CHECK(rep2.midpoint_distance == "0");  // b = r sits exactly on the midpoint
}

TEST_CASE("exhaustive eta scans reproduce the frozen distributions") {
  const auto cp32 = make(3, 1, 2);
  const auto s32 = mu_scan(cp32, 2, 0, 0);
  CHECK(s32.primitive_count == 4);
  CHECK_FALSE(s32.sampled);
  CHECK(s32.distribution == std::map<u64, u64>{{2, 4}});

  const auto cp34 = make(3, 1, 4);
  const auto s34b2 = mu_scan(cp34, 2, 0, 0, 2);
  CHECK(s34b2.primitive_count == 32);
  CHECK(s34b2.distribution == std::map<u64, u64>{{3, 32}});
  const auto s34b3 = mu_scan(cp34, 3, 0, 0, 2);
  CHECK(s34b3.distribution == std::map<u64, u64>{{8, 32}});

  const auto s52 = mu_scan(make(5, 1, 2), 2, 0, 0);
  CHECK(s52.distribution == std::map<u64, u64>{{3, 8}});

  const auto s92 = mu_scan(make(3, 2, 2), 2, 0, 0, 2);
  CHECK(s92.distribution == std::map<u64, u64>{{5, 32}});
}

TEST_CASE("at b = r the scan concentrates on the closed form") {
  for (const auto& cp : {make(3, 1, 2), make(3, 1, 4), make(5, 1, 2)}) {
    const auto scan = mu_scan(cp, cp.tw().r(), 0, 0, 2);
    CHECK(scan.mu_min == scan.mu_max);
    CHECK(scan.mu_min == mu_closed_r(cp));
  }
}

TEST_CASE("sampled scans are seed-deterministic") {
  const auto cp = make(3, 1, 4);
  const auto a = mu_scan(cp, 2, 10, 42);
  const auto b = mu_scan(cp, 2, 10, 42, 3);
  CHECK(a.sampled);
  CHECK(a.scanned == 10);
  CHECK(a.seed == 42);
  CHECK(a.distribution == b.distribution);
  // a different seed picks different eta but (here) the same constant value
  const auto c = mu_scan(cp, 2, 10, 43);
  CHECK(c.distribution == std::map<u64, u64>{{3, 10}});
}

TEST_CASE("P(b) squareness flags match the log parity") {
  const auto cp = make(3, 2, 2);
  const auto pb = build_pb(cp, 2);
  u64 squares = 0;
  for (size_t i = 0; i < pb.logs.size(); ++i) {
    CHECK(pb.is_square[i] == (pb.logs[i] % 2 == 0));
    squares += pb.is_square[i];
  }
  CHECK(squares == pb.mu);
  CHECK(pb.mu == 5);
}

TEST_CASE("scan budget larger than the population is exhaustive") {
  const auto cp = make(3, 1, 2);
  const auto scan = mu_scan(cp, 2, 100, 7);
  CHECK_FALSE(scan.sampled);
  CHECK(scan.scanned == 4);
}
