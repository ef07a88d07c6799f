#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "bsymb/parallel.hpp"
#include "bsymb/tower.hpp"

namespace bsymb {

using boost::multiprecision::cpp_int;

// Validated parameters of the irreducible cyclic code: length n = (q^r-1)/N
// with gcd((q^r-1)/(q-1), N) = 2.
struct CodeParams {
  std::shared_ptr<const Tower> tower;
  u64 N = 0;
  u64 n = 0;
  FieldElement etaN;  // eta^N, the code zero
  u64 b_min = 2, b_max = 0;  // admissible b range [2, n-1]

  const Tower& tw() const { return *tower; }
};

inline CodeParams validate_params(std::shared_ptr<const Tower> tower, u64 N) {
  const u64 M = tower->order();
  if (N == 0 || M % N != 0) throw NotDivisor("N must divide q^r - 1");
  const u64 ratio = M / (tower->q() - 1);  // (q^r-1)/(q-1)
  const u64 g = std::gcd(ratio, N);
  if (g != 2) throw GcdNotTwo("gcd((q^r-1)/(q-1), N) = " + std::to_string(g) + ", expected 2", g);
  CodeParams cp;
  cp.tower = std::move(tower);
  cp.N = N;
  cp.n = M / N;
  if (cp.n < 3) throw LengthTooShort("code length n < 3");
  cp.etaN = cp.tower->power_of_eta(N);
  cp.b_max = cp.n - 1;
  return cp;
}

struct Codeword {
  std::vector<u32> entries;  // packed codes of F_q elements
  FieldElement source_a;
};

struct ExtendedCodeword {
  std::vector<u32> entries;  // length q^r - 1; the N-fold periodic lift
  FieldElement source_a;
};

// c(a)_j = Tr(a * eta^(jN)) for 0 <= j < n.
inline Codeword codeword(const CodeParams& cp, const FieldElement& a) {
  const Tower& tw = cp.tw();
  Codeword c;
  c.source_a = a;
  c.entries.assign(cp.n, 0);
  if (a.is_zero()) return c;
  const u64 M = tw.order(), la = tw.log_of(a);
  u64 idx = la;
  for (u64 j = 0; j < cp.n; ++j) {
    c.entries[j] = tw.trace_q_code(tw.exp_code(idx));
    idx += cp.N;
    if (idx >= M) idx -= M;
  }
  return c;
}

// The length-(q^r - 1) word with entries Tr(a * eta^(jN)); as eta^(nN) = 1 it
// is the n-periodic repetition of c(a), N times.
inline ExtendedCodeword extended_codeword(const CodeParams& cp, const FieldElement& a) {
  const Tower& tw = cp.tw();
  ExtendedCodeword c;
  c.source_a = a;
  const u64 M = tw.order();
  c.entries.assign(M, 0);
  if (a.is_zero()) return c;
  const u64 la = tw.log_of(a);
  u64 idx = la;
  for (u64 j = 0; j < M; ++j) {
    c.entries[j] = tw.trace_q_code(tw.exp_code(idx));
    idx += cp.N;
    if (idx >= M) idx -= M;
  }
  return c;
}

struct BSymbolImage {
  std::vector<std::vector<u32>> windows;  // windows[i] = (x_i, ..., x_{i+b-1 mod n})
  u64 b = 0;
};

inline void check_b_range(u64 b, u64 n) {
  if (b < 1 || b > n - 1) throw BOutOfRange("b must satisfy 1 <= b <= n-1, got " + std::to_string(b));
}

inline BSymbolImage pi_b(const std::vector<u32>& x, u64 b) {
  const u64 n = x.size();
  check_b_range(b, n);
  BSymbolImage img;
  img.b = b;
  img.windows.assign(n, {});
  for (u64 i = 0; i < n; ++i) {
    img.windows[i].reserve(b);
    for (u64 t = 0; t < b; ++t) img.windows[i].push_back(x[(i + t) % n]);
  }
  return img;
}

namespace detail {

// b-symbol weight of a cyclic word given a nonzero-test accessor. A window is
// zero iff the cyclic zero-run starting at its position has length >= b, and
// a maximal zero-run of length L contains max(0, L-b+1) such positions.
template <class At>
u64 cyclic_b_weight(u64 n, u64 b, At&& nonzero_at) {
  u64 j0 = n;
  for (u64 j = 0; j < n; ++j)
    if (nonzero_at(j)) {
      j0 = j;
      break;
    }
  if (j0 == n) return 0;  // zero word
  u64 zero_windows = 0, run = 0;
  for (u64 s = 1; s <= n; ++s) {
    u64 j = j0 + s;
    if (j >= n) j -= n;
    if (nonzero_at(j)) {
      if (run >= b) zero_windows += run - b + 1;
      run = 0;
    } else {
      ++run;
    }
  }
  return n - zero_windows;
}

}  // namespace detail

// Hamming weight of pi_b(x): the number of cyclic length-b windows that are
// not all-zero. Computed by a zero-run scan, O(n) regardless of b.
inline u64 b_weight(const std::vector<u32>& x, u64 b) {
  check_b_range(b, x.size());
  return detail::cyclic_b_weight(x.size(), b, [&](u64 j) { return x[j] != 0; });
}

inline u64 b_distance(const Tower& tw, const std::vector<u32>& x, const std::vector<u32>& y, u64 b) {
  if (x.size() != y.size()) throw LengthMismatch("b_distance requires equal lengths");
  check_b_range(b, x.size());
  std::vector<u32> diff(x.size());
  for (size_t j = 0; j < x.size(); ++j)
    diff[j] = static_cast<u32>(tw.code(tw.sub(tw.element(x[j]), tw.element(y[j]))));
  return b_weight(diff, b);
}

struct WeightEnumerator {
  u64 b = 0;
  std::map<u64, u64> counts;  // b-symbol weight -> number of codewords
  u64 total = 0;              // q^r
};

enum class EnumMode { full, by_class };

namespace detail {

// Per-codeword weight straight off the log tables: the word of a = eta^la is
// j -> Tr(eta^(la + jN)), so only the stride through the nonzero-trace mask
// matters. Stepping by N wraps cleanly because nN = q^r - 1.
inline u64 strided_b_weight(const std::vector<u8>& nz_mask, u64 M, u64 la, u64 N, u64 n, u64 b) {
  u64 j0 = n, idx = la;
  for (u64 j = 0; j < n; ++j) {
    if (nz_mask[idx]) {
      j0 = j;
      break;
    }
    idx += N;
    if (idx >= M) idx -= M;
  }
  if (j0 == n) return 0;
  u64 zero_windows = 0, run = 0;
  for (u64 s = 1; s <= n; ++s) {
    idx += N;
    if (idx >= M) idx -= M;
    if (nz_mask[idx]) {
      if (run >= b) zero_windows += run - b + 1;
      run = 0;
    } else {
      ++run;
    }
  }
  return n - zero_windows;
}

inline std::vector<u8> nonzero_trace_mask(const CodeParams& cp) {
  const Tower& tw = cp.tw();
  const u64 M = tw.order();
  std::vector<u8> nz(M);
  for (u64 m = 0; m < M; ++m) nz[m] = tw.trace_q_code(tw.exp_code(m)) != 0;
  return nz;
}

}  // namespace detail

// Weight distribution over all q^r codewords. `full` walks every a; `by_class`
// computes one square and one non-square representative and assigns each class
// multiplicity (q^r-1)/2 — use it only after the modes have been shown to
// agree on a smaller instance with the same (p, e).
inline WeightEnumerator enumerator(const CodeParams& cp, u64 b, EnumMode mode, unsigned threads = 1) {
  check_b_range(b, cp.n);
  const Tower& tw = cp.tw();
  const u64 M = tw.order();
  const auto nz = detail::nonzero_trace_mask(cp);
  WeightEnumerator we;
  we.b = b;
  we.total = tw.Q();
  we.counts[0] = 1;  // the zero codeword, and only it
  if (mode == EnumMode::by_class) {
    const u64 w_sq = detail::strided_b_weight(nz, M, 0, cp.N, cp.n, b);
    const u64 w_ns = detail::strided_b_weight(nz, M, 1, cp.N, cp.n, b);
    we.counts[w_sq] += M / 2;
    we.counts[w_ns] += M / 2;
    return we;
  }
  std::vector<std::map<u64, u64>> partial(threads ? threads : 1);
  parallel_chunks(M, threads, [&](unsigned chunk, u64 begin, u64 end) {
    auto& local = partial[chunk];
    for (u64 la = begin; la < end; ++la)
      ++local[detail::strided_b_weight(nz, M, la, cp.N, cp.n, b)];
  });
  for (const auto& part : partial)
    for (auto [w, c] : part) we.counts[w] += c;
  return we;
}

struct MdsReport {
  u64 b = 0;
  u64 d_b = 0;            // minimum nonzero b-symbol weight
  cpp_int M;              // q^r codewords
  cpp_int singleton_rhs;  // q^(n - d_b + b)
  bool is_mds = false;
};

// Singleton-type check: M <= q^(n - d_b + b), equality iff MDS. d_b comes from
// the enumerator (the code has at most two nonzero weights).
inline MdsReport mds_check(const CodeParams& cp, u64 b, EnumMode mode = EnumMode::full,
                           unsigned threads = 1) {
  if (b < 2) throw BOutOfRange("mds_check requires 2 <= b <= n-1");
  const auto we = enumerator(cp, b, mode, threads);
  MdsReport rep;
  rep.b = b;
  for (const auto& [w, c] : we.counts)
    if (w != 0) {
      rep.d_b = w;
      break;
    }
  rep.M = cpp_int(cp.tw().Q());
  const u64 exponent = cp.n - rep.d_b + b;
  rep.singleton_rhs = boost::multiprecision::pow(cpp_int(cp.tw().q()), static_cast<unsigned>(exponent));
  rep.is_mds = (rep.M == rep.singleton_rhs);
  return rep;
}

}  // namespace bsymb
