#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bsymb/code.hpp"

namespace bsymb {

using boost::multiprecision::cpp_rational;

namespace detail {

// Rank over F_p of a list of tower elements written in coordinates.
inline u64 fp_rank(const Tower& tw, std::vector<FieldElement> rows) {
  const int p = tw.p(), deg = tw.degree();
  u64 rank = 0;
  for (int col = 0; col < deg && rank < rows.size(); ++col) {
    size_t pivot = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i].coeffs[col] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    // normalize pivot row
    int inv = 1;
    for (int v = 1; v < p; ++v)
      if (v * rows[rank].coeffs[col] % p == 1) {
        inv = v;
        break;
      }
    for (int c = 0; c < deg; ++c) rows[rank].coeffs[c] = static_cast<u8>(rows[rank].coeffs[c] * inv % p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      const int f = rows[i].coeffs[col];
      if (f == 0) continue;
      for (int c = 0; c < deg; ++c)
        rows[i].coeffs[c] = static_cast<u8>(((rows[i].coeffs[c] - f * rows[rank].coeffs[c]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// eta^0, eta^N, ..., eta^((b-1)N) must be linearly independent over F_q for
// 2 <= b <= r. Checked as an F_p rank computation: F_q-independence of the set
// {x_j} is equivalent to F_p-independence of {zeta^t x_j} for an F_p-basis
// {zeta^t} of F_q, with zeta a generator of the order-(q-1) subgroup.
inline bool independence_check(const CodeParams& cp, u64 b) {
  const Tower& tw = cp.tw();
  if (b < 2 || b > static_cast<u64>(tw.r())) throw BOutOfRange("independence_check needs 2 <= b <= r");
  const u64 M = tw.order();
  const u64 zeta_step = M / (tw.q() - 1);
  std::vector<FieldElement> rows;
  for (u64 j = 0; j < b; ++j)
    for (int t = 0; t < tw.e(); ++t)
      rows.push_back(tw.element(tw.exp_code((j * cp.N + static_cast<u64>(t) * zeta_step) % M)));
  return detail::fp_rank(tw, std::move(rows)) == b * static_cast<u64>(tw.e());
}

// The projective-style representative set
//   P(b) = U_{j=1}^{b-1} { eta^((j-1)N) + sum_{t=1}^{b-j} x_t eta^((j-1+t)N) : x_t in F_q }
//          U { eta^((b-1)N) },
// of size (q^b - 1)/(q - 1). Stored as discrete logs; every member is nonzero
// because the powers eta^(jN), j < b <= r, are linearly independent.
struct PbSet {
  u64 b = 0;
  std::vector<u64> logs;
  std::vector<u8> is_square;  // parallel to logs
  u64 mu = 0;                 // number of squares
};

// Build P(b) for the primitive element eta' = eta^k (k coprime to q^r - 1);
// eta_log_k = 1 gives the tower's own eta.
inline PbSet build_pb_with_eta(const CodeParams& cp, u64 b, u64 eta_log_k) {
  const Tower& tw = cp.tw();
  if (b < 2 || b > static_cast<u64>(tw.r())) throw BOutOfRange("P(b) needs 2 <= b <= r");
  const u64 M = tw.order();
  if (std::gcd(eta_log_k, M) != 1) throw Error("eta exponent must be coprime to q^r - 1");
  // power_log[j] = log of eta'^(jN)
  std::vector<u64> power_log(b);
  for (u64 j = 0; j < b; ++j)
    power_log[j] = static_cast<u64>((static_cast<unsigned __int128>(eta_log_k) * (j * cp.N)) % M);
  const auto fq = tw.fq_codes();  // includes 0
  std::vector<FieldElement> fq_elems;
  fq_elems.reserve(fq.size());
  for (u64 c : fq) fq_elems.push_back(tw.element(c));

  PbSet pb;
  pb.b = b;
  const u64 q = tw.q();
  u64 expected = 0;  // (q^b - 1)/(q - 1)
  {
    u64 acc = 1;
    for (u64 j = 0; j < b; ++j) {
      expected += acc;
      acc *= q;
    }
  }
  pb.logs.reserve(expected);

  auto push = [&](const FieldElement& x) {
    const u64 lg = tw.log_of(x);  // throws ZeroInput if a combination vanished
    pb.logs.push_back(lg);
    pb.is_square.push_back(lg % 2 == 0);
  };

  for (u64 j = 1; j < b; ++j) {
    const u64 m = b - j;  // number of free coordinates
    std::vector<u64> odo(m, 0);
    const FieldElement lead = tw.element(tw.exp_code(power_log[j - 1]));
    while (true) {
      FieldElement x = lead;
      for (u64 t = 0; t < m; ++t) {
        if (odo[t] == 0) continue;  // x_t = 0 contributes nothing
        const FieldElement term =
            tw.mul(fq_elems[odo[t]], tw.element(tw.exp_code(power_log[j - 1 + t + 1])));
        x = tw.add(x, term);
      }
      push(x);
      // advance odometer
      u64 t = 0;
      while (t < m && ++odo[t] == fq.size()) odo[t++] = 0;
      if (t == m) break;
    }
  }
  push(tw.element(tw.exp_code(power_log[b - 1])));
  if (pb.logs.size() != expected) throw Error("P(b) size mismatch");
  for (u8 f : pb.is_square) pb.mu += f;
  return pb;
}

inline PbSet build_pb(const CodeParams& cp, u64 b) { return build_pb_with_eta(cp, b, 1); }

inline u64 mu(const CodeParams& cp, u64 b) { return build_pb(cp, b).mu; }

// mu(r) = (q^r - 1) / (2(q - 1)), independent of eta.
inline u64 mu_closed_r(const CodeParams& cp) {
  const Tower& tw = cp.tw();
  return tw.order() / (2 * (tw.q() - 1));
}

struct MuReport {
  u64 b = 0;
  u64 mu = 0;
  u64 pb_size = 0;
  std::string modulus;
  std::string eta;
  std::string midpoint_distance;  // |mu - (q^b-1)/(2(q-1))| as an exact rational
};

inline MuReport mu_report(const CodeParams& cp, u64 b) {
  const Tower& tw = cp.tw();
  const PbSet pb = build_pb(cp, b);
  MuReport rep;
  rep.b = b;
  rep.mu = pb.mu;
  rep.pb_size = pb.logs.size();
  rep.modulus = tw.modulus_string();
  rep.eta = tw.eta_string();
  const cpp_rational mid = cpp_rational(pb.logs.size(), 2);
  cpp_rational dist = cpp_rational(pb.mu) - mid;
  if (dist < 0) dist = -dist;
  rep.midpoint_distance = dist.str();
  return rep;
}

// Distribution of mu(b) as eta ranges over primitive elements eta^k,
// gcd(k, q^r - 1) = 1. Exhaustive when the number of primitive elements is at
// most max_samples (or max_samples == 0); otherwise a seeded random sample of
// distinct k.
struct MuScan {
  u64 b = 0;
  std::map<u64, u64> distribution;  // mu value -> how many eta gave it
  u64 scanned = 0;
  u64 primitive_count = 0;
  bool sampled = false;
  u64 seed = 0;
  u64 mu_min = 0, mu_max = 0;
};

inline MuScan mu_scan(const CodeParams& cp, u64 b, u64 max_samples, u64 seed, unsigned threads = 1) {
  const Tower& tw = cp.tw();
  const u64 M = tw.order();
  std::vector<u64> ks;
  for (u64 k = 1; k < M; ++k)
    if (std::gcd(k, M) == 1) ks.push_back(k);
  MuScan scan;
  scan.b = b;
  scan.primitive_count = ks.size();
  scan.seed = seed;
  if (max_samples != 0 && ks.size() > max_samples) {
    scan.sampled = true;
    std::mt19937_64 rng(seed);
    std::set<u64> chosen;
    std::uniform_int_distribution<size_t> pick(0, ks.size() - 1);
    while (chosen.size() < max_samples) chosen.insert(ks[pick(rng)]);
    ks.assign(chosen.begin(), chosen.end());
  }
  scan.scanned = ks.size();
  std::vector<u64> mus(ks.size());
  parallel_chunks(ks.size(), threads, [&](unsigned, u64 begin, u64 end) {
    for (u64 i = begin; i < end; ++i) mus[i] = build_pb_with_eta(cp, b, ks[i]).mu;
  });
  for (u64 m : mus) ++scan.distribution[m];
  scan.mu_min = scan.distribution.begin()->first;
  scan.mu_max = scan.distribution.rbegin()->first;
  return scan;
}

}  // namespace bsymb
