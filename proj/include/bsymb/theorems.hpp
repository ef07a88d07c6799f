#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsymb/code.hpp"
#include "bsymb/pb_mu.hpp"

namespace bsymb {

enum class QuadraticClass { square, nonsquare };

inline QuadraticClass classify(const Tower& tw, const FieldElement& a) {
  return tw.is_square(a) ? QuadraticClass::square : QuadraticClass::nonsquare;
}

// s = 1 when p = 1 (mod 4), else (-1)^(er/2). The per-class sign is sigma = s
// on squares and -s on non-squares.
inline int sign_s(const Tower& tw) {
  if (tw.p() % 4 == 1) return 1;
  return (static_cast<u64>(tw.e()) * tw.r() / 2) % 2 == 0 ? 1 : -1;
}

inline int sigma_of(const Tower& tw, QuadraticClass cls) {
  const int s = sign_s(tw);
  return cls == QuadraticClass::square ? s : -s;
}

// q^(r/2) etc. as exact integers.
namespace detail {

inline cpp_int ipow(u64 base, u64 exp) {
  cpp_int out = 1, b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

}  // namespace detail

struct ClosedFormWeight {
  cpp_rational value;
  std::optional<u64> as_integer;  // set when the rational is a whole number
  QuadraticClass cls = QuadraticClass::square;
  std::string case_tag;  // "p1_square", "p1_nonsquare", "p3_square", "p3_nonsquare"
};

// Two-valued b-symbol weight for 2 <= b < r:
//   w_b = (q^b-1)/(N(q-1)q^(b-1)) * (q^r - (q^r + sigma (q-1) q^(r/2))/q)
//         + 2 mu(b) sigma (q-1) q^(r/2) / (N q^b)
// evaluated in exact rational arithmetic. mu may be passed as any rational
// (useful for probing the formula's structure); the integrality check only
// runs through theorem31().
inline cpp_rational theorem31_value(const CodeParams& cp, u64 b, QuadraticClass cls,
                                    const cpp_rational& mu_b) {
  const Tower& tw = cp.tw();
  if (b < 2 || b >= static_cast<u64>(tw.r())) throw BOutOfRange("closed form needs 2 <= b < r");
  const u64 q = tw.q();
  const int sigma = sigma_of(tw, cls);
  const cpp_int qb = detail::ipow(q, b);
  const cpp_int qr = detail::ipow(q, tw.r());
  const cpp_int qr2 = detail::ipow(q, static_cast<u64>(tw.r()) / 2);
  const cpp_int qm1 = q - 1;
  const cpp_rational inner = cpp_rational(qr) - cpp_rational(qr + sigma * qm1 * qr2, q);
  const cpp_rational term1 = cpp_rational(qb - 1, cpp_int(cp.N) * qm1 * (qb / q)) * inner;
  const cpp_rational term2 = cpp_rational(2 * sigma * qm1 * qr2, cpp_int(cp.N) * qb) * mu_b;
  return term1 + term2;
}

inline ClosedFormWeight theorem31(const CodeParams& cp, u64 b, QuadraticClass cls, u64 mu_b) {
  ClosedFormWeight out;
  out.cls = cls;
  out.value = theorem31_value(cp, b, cls, cpp_rational(mu_b));
  out.case_tag = std::string(cp.tw().p() % 4 == 1 ? "p1" : "p3") +
                 (cls == QuadraticClass::square ? "_square" : "_nonsquare");
  if (boost::multiprecision::denominator(out.value) == 1) {
    const cpp_int num = boost::multiprecision::numerator(out.value);
    if (num >= 0 && num <= cpp_int(cp.n)) out.as_integer = static_cast<u64>(num);
  }
  if (!out.as_integer)
    throw NonIntegralResult("closed form gave " + out.value.str() + ", not a weight in [0, n]");
  return out;
}

// Z(a) = (q^r - sigma (q-1) q^(r/2)) / q: the number of y in F_(q^r) at which
// the quadratic-twisted trace form attached to a vanishes. Operationally
// Z(a) = N*(n - w_1(c(a))) + 1, and the extended word satisfies
// w(chat(a)) = q^r - Z(a); w_1(c(a)) = (q^r - Z(a))/N.
inline u64 z_closed_form(const CodeParams& cp, QuadraticClass cls) {
  const Tower& tw = cp.tw();
  const cpp_int qr = detail::ipow(tw.q(), tw.r());
  const cpp_int qr2 = detail::ipow(tw.q(), static_cast<u64>(tw.r()) / 2);
  const cpp_int num = qr - cpp_int(sigma_of(tw, cls)) * (tw.q() - 1) * qr2;
  if (num % tw.q() != 0) throw NonIntegralResult("Z(a) closed form not integral");
  return static_cast<u64>(num / tw.q());
}

struct ZReport {
  u64 z_square = 0, z_nonsquare = 0;            // measured on representatives
  u64 closed_square = 0, closed_nonsquare = 0;  // closed form
  u64 w1_square = 0, w1_nonsquare = 0;          // honest single-symbol weights
  u64 checked = 0;                              // how many a were verified individually
  bool exhaustive = false;
  u64 seed = 0;
  bool pass = false;
};

// Measure Z(a) and w_1(c(a)) for every a (or a seeded sample when q^r - 1
// exceeds max_checks) and compare against the closed forms per class.
inline ZReport z_report(const CodeParams& cp, u64 max_checks, u64 seed) {
  const Tower& tw = cp.tw();
  const u64 M = tw.order();
  const auto nz = detail::nonzero_trace_mask(cp);
  auto w1_of = [&](u64 la) { return detail::strided_b_weight(nz, M, la, cp.N, cp.n, 1); };
  ZReport rep;
  rep.seed = seed;
  rep.w1_square = w1_of(0);
  rep.w1_nonsquare = w1_of(1);
  rep.z_square = cp.N * (cp.n - rep.w1_square) + 1;
  rep.z_nonsquare = cp.N * (cp.n - rep.w1_nonsquare) + 1;
  rep.closed_square = z_closed_form(cp, QuadraticClass::square);
  rep.closed_nonsquare = z_closed_form(cp, QuadraticClass::nonsquare);
  rep.pass = rep.z_square == rep.closed_square && rep.z_nonsquare == rep.closed_nonsquare;
  // per-element verification: w_1 (hence Z) must be constant on each class
  std::vector<u64> las;
  if (M <= max_checks) {
    rep.exhaustive = true;
    las.resize(M);
    for (u64 m = 0; m < M; ++m) las[m] = m;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> pick(0, M - 1);
    las.resize(max_checks);
    for (auto& m : las) m = pick(rng);
  }
  for (u64 la : las) {
    const u64 expect = la % 2 == 0 ? rep.w1_square : rep.w1_nonsquare;
    if (w1_of(la) != expect) {
      rep.pass = false;
      break;
    }
    ++rep.checked;
  }
  return rep;
}

struct GaussReport {
  QuadraticClass cls = QuadraticClass::square;
  std::vector<u64> fiber_counts;  // index t in F_p: #{x in class : Tr_p(x) = t}
  bool constancy_ok = false;      // fibers over t != 0 all equal
  i64 sum_value = 0;              // N_0 - N_1
  i64 expected = 0;               // squares: (-s q^(r/2) - 1)/2; non-squares: (s q^(r/2) - 1)/2
  bool pass = false;
};

// Fiber counts of the absolute trace restricted to one quadratic class. The
// class character sum collapses to N_0 - N_t for any t != 0 once the nonzero
// fibers are constant, and has a closed form in terms of s and q^(r/2).
inline GaussReport gauss_counts(const Tower& tw, QuadraticClass cls) {
  GaussReport rep;
  rep.cls = cls;
  rep.fiber_counts.assign(tw.p(), 0);
  const u64 M = tw.order();
  const u64 start = cls == QuadraticClass::square ? 0 : 1;
  for (u64 m = start; m < M; m += 2) ++rep.fiber_counts[tw.trace_p_code(tw.exp_code(m))];
  rep.constancy_ok = true;
  for (int t = 2; t < tw.p(); ++t)
    if (rep.fiber_counts[t] != rep.fiber_counts[1]) rep.constancy_ok = false;
  rep.sum_value = static_cast<i64>(rep.fiber_counts[0]) - static_cast<i64>(rep.fiber_counts[1]);
  const i64 s = sign_s(tw);
  const cpp_int qr2 = detail::ipow(tw.q(), static_cast<u64>(tw.r()) / 2);
  const cpp_int expect2 = cls == QuadraticClass::square ? -s * qr2 - 1 : s * qr2 - 1;
  rep.expected = static_cast<i64>(expect2 / 2);
  rep.pass = rep.constancy_ok && rep.sum_value == rep.expected;
  return rep;
}

// For r <= b <= n-1 every nonzero codeword has full b-symbol weight n; at
// b = r that meets the Singleton-type bound with equality.
inline u64 theorem33_weight(const CodeParams& cp, u64 b) {
  const Tower& tw = cp.tw();
  if (b < static_cast<u64>(tw.r()) || b > cp.n - 1)
    throw BOutOfRange("constant-weight range is r <= b <= n-1");
  return cp.n;
}

// Predicted weight enumerator: two-valued for 2 <= b <= r-1 (closed form plus
// mu(b)), constant n for r <= b <= n-2.
inline WeightEnumerator corollary_enumerator(const CodeParams& cp, u64 b, u64 mu_b) {
  const Tower& tw = cp.tw();
  WeightEnumerator we;
  we.b = b;
  we.total = tw.Q();
  we.counts[0] = 1;
  const u64 half = tw.order() / 2;
  if (b >= 2 && b + 1 <= static_cast<u64>(tw.r())) {
    const u64 u_sq = *theorem31(cp, b, QuadraticClass::square, mu_b).as_integer;
    const u64 u_ns = *theorem31(cp, b, QuadraticClass::nonsquare, mu_b).as_integer;
    we.counts[u_sq] += half;
    we.counts[u_ns] += half;
  } else if (b >= static_cast<u64>(tw.r()) && b <= cp.n - 2) {
    we.counts[cp.n] += 2 * half;
  } else {
    throw BOutOfRange("enumerator prediction covers 2 <= b <= n-2");
  }
  return we;
}

// Single-symbol weights per quadratic class, from honest scans of c(1) and
// c(eta). Because c(eta^N a) is a cyclic shift of c(a), w_1 only depends on
// log(a) mod N, i.e. on the class when N = 2.
struct W1ClassCache {
  u64 w1[2] = {0, 0};  // index: log(a) mod 2
};

inline W1ClassCache w1_class_cache(const CodeParams& cp) {
  const Tower& tw = cp.tw();
  const auto nz = detail::nonzero_trace_mask(cp);
  W1ClassCache cache;
  cache.w1[0] = detail::strided_b_weight(nz, tw.order(), 0, cp.N, cp.n, 1);
  cache.w1[1] = detail::strided_b_weight(nz, tw.order(), 1, cp.N, cp.n, 1);
  return cache;
}

struct DecompositionCheck {
  bool ok = false;
  u64 lhs = 0;  // q^(b-1) * w_b(c(a))
  u64 rhs = 0;  // sum over theta in P(b) of w_1(c(theta a))
};

// q^(b-1) w_b(c(a)) = sum_{theta in P(b)} w_1(c(theta a)). The right side
// only needs the class of each theta*a, so with the w_1 cache it reduces to
// counting squares among the shifted logs.
inline DecompositionCheck verify_decomposition(const CodeParams& cp, u64 b, const FieldElement& a,
                                               const PbSet* pb = nullptr,
                                               const W1ClassCache* cache = nullptr) {
  const Tower& tw = cp.tw();
  if (a.is_zero()) throw ZeroInput("decomposition needs a != 0");
  if (b < 2 || b > static_cast<u64>(tw.r())) throw BOutOfRange("decomposition checked for 2 <= b <= r");
  const u64 M = tw.order();
  PbSet local_pb;
  if (!pb) {
    local_pb = build_pb(cp, b);
    pb = &local_pb;
  }
  W1ClassCache local_cache;
  if (!cache) {
    local_cache = w1_class_cache(cp);
    cache = &local_cache;
  }
  const auto nz = detail::nonzero_trace_mask(cp);
  const u64 la = tw.log_of(a);
  DecompositionCheck chk;
  const u64 wb = detail::strided_b_weight(nz, M, la, cp.N, cp.n, b);
  cpp_int lhs = detail::ipow(tw.q(), b - 1) * wb;
  chk.lhs = static_cast<u64>(lhs);
  const u64 size = pb->logs.size();
  const u64 squares_among_shifted = la % 2 == 0 ? pb->mu : size - pb->mu;
  chk.rhs = squares_among_shifted * cache->w1[0] + (size - squares_among_shifted) * cache->w1[1];
  chk.ok = chk.lhs == chk.rhs;
  return chk;
}

struct KernelReport {
  u64 kernel_size = 0;  // honest count of H intersect F_q^*
  u64 expected = 0;     // 2(q-1)/N
  u64 gcd_value = 0;    // gcd(q-1, (q^r-1)/N), must equal expected
  bool pass = false;
};

// The combining map F_q^* x H -> F_q^* H (H the order-n subgroup generated by
// eta^N) has kernel of size |F_q^* intersect H| = gcd(q-1, n) = 2(q-1)/N.
inline KernelReport verify_lemma41(const CodeParams& cp) {
  const Tower& tw = cp.tw();
  const u64 M = tw.order();
  const u64 fq_step = M / (tw.q() - 1);
  KernelReport rep;
  for (u64 j = 0; j < cp.n; ++j)
    if ((j * cp.N) % fq_step == 0) ++rep.kernel_size;
  rep.expected = 2 * (tw.q() - 1) / cp.N;
  rep.gcd_value = std::gcd<u64>(tw.q() - 1, cp.n);
  rep.pass = rep.kernel_size == rep.expected && rep.gcd_value == rep.expected;
  return rep;
}

struct Lemma42Report {
  u64 multiplicity = 0;    // expected copies: 2(q-1)/N
  u64 covered = 0;         // distinct elements hit
  u64 expected_cover = 0;  // (q^r-1)/2, one whole quadratic class
  bool same_class = false; // every hit lands in the class of a
  bool pass = false;
};

// {a y z : y in F_q^*, z in H} covers exactly the quadratic class of a, each
// element 2(q-1)/N times. Verified by direct log-space counting.
inline Lemma42Report verify_lemma42(const CodeParams& cp, const FieldElement& a) {
  const Tower& tw = cp.tw();
  if (a.is_zero()) throw ZeroInput("coset multiset check needs a != 0");
  const u64 M = tw.order();
  const u64 fq_step = M / (tw.q() - 1);
  const u64 la = tw.log_of(a);
  std::vector<u32> hits(M, 0);
  for (u64 y = 0; y < tw.q() - 1; ++y)
    for (u64 j = 0; j < cp.n; ++j) hits[(la + y * fq_step + j * cp.N) % M]++;
  Lemma42Report rep;
  rep.multiplicity = 2 * (tw.q() - 1) / cp.N;
  rep.expected_cover = M / 2;
  rep.same_class = true;
  bool uniform = true;
  for (u64 m = 0; m < M; ++m) {
    if (hits[m] == 0) continue;
    ++rep.covered;
    if (m % 2 != la % 2) rep.same_class = false;
    if (hits[m] != rep.multiplicity) uniform = false;
  }
  rep.pass = rep.same_class && uniform && rep.covered == rep.expected_cover;
  return rep;
}

}  // namespace bsymb
