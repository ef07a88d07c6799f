#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "bsymb/tower.hpp"

using namespace bsymb;

TEST_CASE("tower construction and basic parameters") {
  auto tw = build_tower(3, 1, 4);
  CHECK(tw->p() == 3);
  CHECK(tw->e() == 1);
  CHECK(tw->r() == 4);
  CHECK(tw->q() == 3);
  CHECK(tw->Q() == 81);
  CHECK(tw->order() == 80);
  CHECK(tw->degree() == 4);
  CHECK(tw->modulus_string() == "2,0,0,2,1");  // canonical polynomial, constant first
  CHECK(tw->eta_string() == "0,1,0,0");        // x itself is primitive

  auto tw9 = build_tower(3, 2, 2);
  CHECK(tw9->q() == 9);
  CHECK(tw9->Q() == 81);
  CHECK(tw9->degree() == 4);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(build_tower(2, 1, 2), EvenCharacteristic);
  CHECK_THROWS_AS(build_tower(9, 1, 2), NonPrime);
  CHECK_THROWS_AS(build_tower(15, 1, 2), NonPrime);
  CHECK_THROWS_AS(build_tower(3, 1, 3), OddExtension);
  CHECK_THROWS_AS(build_tower(3, 1, 1), OddExtension);
  CHECK_THROWS_AS(build_tower(3, 1, 26), ResourceLimit);  // degree cap
  CHECK_THROWS_AS(build_tower(3, 2, 12), ResourceLimit);  // 3^24 elements
  CHECK_THROWS_AS(build_tower(3, 0, 2), Error);
}

TEST_CASE("explicit modulus path") {
  // passing the canonical polynomial reproduces the default tower
  auto tw = build_tower(3, 1, 4, std::vector<int>{2, 0, 0, 2, 1});
  CHECK(tw->modulus_string() == "2,0,0,2,1");
  CHECK(tw->eta_string() == "0,1,0,0");

  // x^4 + 1 = (x^2+x+2)(x^2+2x+2) over F_3 is reducible
  CHECK_THROWS_AS(build_tower(3, 1, 4, std::vector<int>{1, 0, 0, 0, 1}), ReducibleModulus);
  // wrong degree
  CHECK_THROWS_AS(build_tower(3, 1, 4, std::vector<int>{1, 1}), Error);

  // an irreducible but non-primitive modulus still yields a primitive eta;
  // x^2 + 1 over F_3 has x of order 4, not 8
  auto tw2 = build_tower(3, 1, 2, std::vector<int>{1, 0, 1});
  CHECK(tw2->order() == 8);
  u64 seen = 0;
  std::set<u64> codes;
  for (u64 m = 0; m < 8; ++m) codes.insert(tw2->exp_code(m)), ++seen;
  CHECK(codes.size() == 8);  // eta really has order 8
}

TEST_CASE("exp/log tables are inverse bijections") {
  for (auto tw : {build_tower(3, 1, 4), build_tower(3, 2, 2), build_tower(5, 1, 2)}) {
    const u64 M = tw->order();
    std::set<u64> seen;
    for (u64 m = 0; m < M; ++m) {
      const u64 c = tw->exp_code(m);
      CHECK(tw->log_code(c) == m);
      seen.insert(c);
    }
    CHECK(seen.size() == M);
    CHECK(seen.count(0) == 0);
  }
}

TEST_CASE("field arithmetic identities") {
  auto tw = build_tower(3, 1, 4);
  const u64 M = tw->order();
  const FieldElement one = tw->element(tw->exp_code(0));
  for (u64 m = 0; m < M; ++m) {
    const FieldElement x = tw->element(tw->exp_code(m));
    CHECK(tw->mul(x, tw->inverse(x)) == one);
    CHECK(tw->pow(x, static_cast<i64>(M)) == one);
    CHECK(tw->add(x, tw->neg(x)).is_zero());
    CHECK(tw->sub(x, x).is_zero());
  }
  // distributivity on a sample
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> pick(0, M - 1);
  for (int i = 0; i < 200; ++i) {
    const auto a = tw->element(tw->exp_code(pick(rng)));
    const auto b = tw->element(tw->exp_code(pick(rng)));
    const auto c = tw->element(tw->exp_code(pick(rng)));
    CHECK(tw->mul(a, tw->add(b, c)) == tw->add(tw->mul(a, b), tw->mul(a, c)));
  }
}

TEST_CASE("zero element edge cases") {
  auto tw = build_tower(3, 1, 2);
  const FieldElement zero = tw->element(0);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(tw->log_of(zero), ZeroInput);
  CHECK_THROWS_AS(tw->inverse(zero), DivisionByZero);
  CHECK_THROWS_AS(tw->is_square(zero), ZeroInput);
  CHECK_THROWS_AS(tw->pow(zero, -1), DivisionByZero);
  CHECK(tw->pow(zero, 0) == tw->element(tw->exp_code(0)));  // 0^0 = 1 by convention
  CHECK(tw->pow(zero, 5).is_zero());
  const FieldElement x = tw->element(tw->exp_code(3));
  CHECK(tw->mul(zero, x).is_zero());
  CHECK_THROWS_AS(tw->div(x, zero), DivisionByZero);
}

TEST_CASE("negative and large exponents") {
  auto tw = build_tower(5, 1, 2);
  const u64 M = tw->order();
  const FieldElement x = tw->element(tw->exp_code(7));
  CHECK(tw->pow(x, -1) == tw->inverse(x));
  CHECK(tw->pow(x, static_cast<i64>(M) + 3) == tw->pow(x, 3));
  CHECK(tw->pow(x, -static_cast<i64>(M)) == tw->element(tw->exp_code(0)));
}

TEST_CASE("trace maps: ranges, surjectivity, transitivity") {
  auto tw = build_tower(3, 2, 2);  // F_3 in F_9 in F_81
  const u64 M = tw->order();
  std::set<u64> q_values, p_values;
  for (u64 m = 0; m < M; ++m) {
    const FieldElement x = tw->element(tw->exp_code(m));
    const FieldElement tq = tw->trace(x, Subfield::q);
    CHECK(tw->in_fq(tq));
    q_values.insert(tw->code(tq));
    const FieldElement tp = tw->trace(x, Subfield::p);
    // absolute trace lands in the prime field: a constant coordinate vector
    CHECK(tw->code(tp) < static_cast<u64>(tw->p()));
    p_values.insert(tw->code(tp));
    // transitivity: Tr_p = Tr_(q->p) of Tr_(q^r->q), with independently built tables
    CHECK(tw->code(tw->trace_qp(tq)) == tw->code(tp));
  }
  CHECK(q_values.size() == static_cast<size_t>(tw->q()));  // surjective onto F_q
  CHECK(p_values.size() == static_cast<size_t>(tw->p()));
}

TEST_CASE("relative trace is F_q-linear") {
  auto tw = build_tower(3, 2, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<u64> pick(0, tw->order() - 1);
  const auto fq = tw->fq_codes();
  std::uniform_int_distribution<size_t> pickq(0, fq.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto x = tw->element(tw->exp_code(pick(rng)));
    const auto y = tw->element(tw->exp_code(pick(rng)));
    const auto lam = tw->element(fq[pickq(rng)]);
    const auto lhs = tw->trace(tw->add(tw->mul(lam, x), y), Subfield::q);
    const auto rhs = tw->add(tw->mul(lam, tw->trace(x, Subfield::q)), tw->trace(y, Subfield::q));
    CHECK(tw->code(lhs) == tw->code(rhs));
  }
}

TEST_CASE("trace_qp rejects elements outside F_q") {
  auto tw = build_tower(3, 2, 2);
  // eta itself generates the big field, so it is not in F_9
  CHECK_THROWS_AS(tw->trace_qp(tw->element(tw->exp_code(1))), NotInSubfield);
  CHECK_NOTHROW(tw->trace_qp(tw->element(0)));
}

TEST_CASE("squares are the even powers of eta") {
  for (auto tw : {build_tower(3, 1, 4), build_tower(5, 1, 2), build_tower(3, 2, 2)}) {
    const u64 M = tw->order();
    u64 squares = 0;
    for (u64 m = 0; m < M; ++m) {
      const bool sq = tw->is_square(tw->element(tw->exp_code(m)));
      CHECK(sq == (m % 2 == 0));
      squares += sq;
    }
    CHECK(squares == M / 2);
    // closure: square * square = square, nonsquare * nonsquare = square
    CHECK(tw->is_square_log(2 + 4));
    CHECK(tw->is_square_log((1 + 3) % M));
  }
}

TEST_CASE("every element of F_q^* is a square in the extension") {
  // r even makes q - 1 divide (q^r - 1)/2
  for (auto tw : {build_tower(3, 1, 4), build_tower(3, 2, 2), build_tower(5, 1, 4)}) {
    for (u64 c : tw->fq_codes()) {
      if (c == 0) continue;
      CHECK(tw->is_square(tw->element(c)));
    }
  }
}

TEST_CASE("the F_q subfield is the Frobenius-fixed set") {
  auto tw = build_tower(3, 2, 2);
  const auto fq = tw->fq_codes();
  CHECK(fq.size() == static_cast<size_t>(tw->q()));
  CHECK(std::is_sorted(fq.begin(), fq.end()));
  std::set<u64> fqset(fq.begin(), fq.end());
  // x in F_q iff x^q = x; check over the whole field
  CHECK(fqset.count(0) == 1);
  for (u64 m = 0; m < tw->order(); ++m) {
    const FieldElement x = tw->element(tw->exp_code(m));
    const bool fixed = tw->pow(x, static_cast<i64>(tw->q())) == x;
    CHECK(fixed == (fqset.count(tw->exp_code(m)) == 1));
    CHECK(fixed == tw->in_fq(x));
  }
  // F_q is multiplicatively and additively closed
  for (u64 a : fq)
    for (u64 b : fq) {
      CHECK(fqset.count(tw->code(tw->mul(tw->element(a), tw->element(b)))) == 1);
      CHECK(fqset.count(tw->code(tw->add(tw->element(a), tw->element(b)))) == 1);
    }
}

TEST_CASE("subfield_elements by tag") {
  auto tw = build_tower(3, 2, 2);
  CHECK(tw->subfield_elements(Subfield::q).size() == 9);
  CHECK(tw->subfield_elements(Subfield::p).size() == 3);
  for (const auto& x : tw->subfield_elements(Subfield::p)) CHECK(tw->code(x) < 3);
}

TEST_CASE("element/code packing round-trips") {
  auto tw = build_tower(5, 1, 2);
  for (u64 c = 0; c < tw->Q(); ++c) CHECK(tw->code(tw->element(c)) == c);
}

TEST_CASE("coefficient string parsing") {
  CHECK(Tower::parse_coeffs("2,0,0,2,1", 3) == std::vector<int>{2, 0, 0, 2, 1});
  CHECK(Tower::format_coeffs(std::vector<int>{1, 2, 3}) == "1,2,3");
  CHECK_THROWS_AS(Tower::parse_coeffs("2,x,1", 3), Error);
  CHECK_THROWS_AS(Tower::parse_coeffs("", 3), Error);
}

TEST_CASE("q-1 prime factorisation helper") {
  auto tw = build_tower(3, 1, 4);  // order 80 = 2^4 * 5
  const auto f = tw->q1_prime_factors();
  CHECK(f == std::vector<u64>{2, 5});
}
