#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bsymb/conway.hpp"
#include "bsymb/errors.hpp"

namespace bsymb {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Largest supported extension degree e*r and field order q^r. The order cap
// keeps the exp/log/trace tables (a few machine words per element) cheap.
inline constexpr int kMaxDegree = 24;
inline constexpr u64 kMaxOrder = u64{1} << 23;

inline constexpr u32 kNoLog = 0xffffffffu;

// An element of F_{p^(e*r)} in polynomial-basis coordinates, constant term
// first. Plain value type; all arithmetic lives in Tower.
struct FieldElement {
  std::array<u8, kMaxDegree> coeffs{};
  u8 degree = 0;  // e*r of the owning tower; trailing slots stay zero

  bool is_zero() const {
    for (u8 c : coeffs)
      if (c) return false;
    return true;
  }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

enum class Subfield { q, p };

namespace detail {

inline bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline std::vector<u64> distinct_prime_factors(u64 m) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Dense polynomials over F_p, coefficient vectors with constant term first.
using Poly = std::vector<int>;

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;  // f monic of degree d
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int i = static_cast<int>(prod.size()) - 1; i >= d; --i) {
    int c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < d; ++j) prod[i - d + j] = ((prod[i - d + j] - c * f[j]) % p + p * p) % p;
  }
  prod.resize(d);
  return prod;
}

inline Poly poly_powmod(Poly base, u64 k, const Poly& f, int p) {
  Poly result{1};
  result.resize(f.size() - 1, 0);
  base.resize(f.size() - 1, 0);
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

inline bool poly_is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

inline bool poly_equal_x(const Poly& a) {
  if (a.size() < 2 || a[0] != 0 || a[1] != 1) return false;
  for (size_t i = 2; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

// Frobenius-based irreducibility test for a monic degree-d polynomial:
// x^(p^d) == x mod f, and x^(p^(d/l)) != x for every prime l | d.
inline bool poly_is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  Poly x{0, 1};
  Poly xp = x;
  std::vector<Poly> frob(d + 1);  // frob[i] = x^(p^i) mod f
  frob[0] = x;
  frob[0].resize(d, 0);
  for (int i = 1; i <= d; ++i) frob[i] = poly_powmod(frob[i - 1], static_cast<u64>(p), f, p);
  if (!poly_equal_x(frob[d])) return false;
  for (u64 l : distinct_prime_factors(static_cast<u64>(d)))
    if (poly_equal_x(frob[d / l])) return false;
  return true;
}

}  // namespace detail

// The field chain F_p < F_q = F_{p^e} < F_{q^r}, realized as one flat
// degree-(e*r) extension of F_p; F_q is the Frobenius^e-fixed subfield.
// Immutable after construction and safely shareable across threads.
class Tower {
 public:
  int p() const { return p_; }
  int e() const { return e_; }
  int r() const { return r_; }
  int degree() const { return deg_; }
  u64 q() const { return q_; }
  u64 Q() const { return Q_; }
  u64 order() const { return M_; }  // Q - 1

  const std::vector<int>& modulus() const { return modulus_; }
  FieldElement eta() const { return element(exp_[1]); }
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }

  // ---- packed-code view (code = sum coeffs[i] p^i) ----
  FieldElement element(u64 code) const {
    FieldElement x;
    x.degree = static_cast<u8>(deg_);
    for (int i = 0; i < deg_ && code; ++i) {
      x.coeffs[i] = static_cast<u8>(code % p_);
      code /= p_;
    }
    return x;
  }
  u64 code(const FieldElement& x) const {
    u64 c = 0;
    for (int i = deg_ - 1; i >= 0; --i) c = c * p_ + x.coeffs[i];
    return c;
  }

  // ---- discrete-log tables (eta is the table generator) ----
  u32 exp_code(u64 k) const { return exp_[k % M_]; }
  u32 log_code(u32 code) const { return log_[code]; }  // kNoLog for 0
  u64 log_of(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroInput("log of zero");
    return log_[code(x)];
  }
  FieldElement power_of_eta(u64 k) const { return element(exp_code(k)); }

  // ---- arithmetic ----
  FieldElement add(const FieldElement& x, const FieldElement& y) const {
    FieldElement z;
    z.degree = static_cast<u8>(deg_);
    for (int i = 0; i < deg_; ++i) {
      int s = x.coeffs[i] + y.coeffs[i];
      z.coeffs[i] = static_cast<u8>(s >= p_ ? s - p_ : s);
    }
    return z;
  }
  FieldElement neg(const FieldElement& x) const {
    FieldElement z;
    z.degree = static_cast<u8>(deg_);
    for (int i = 0; i < deg_; ++i) z.coeffs[i] = static_cast<u8>(x.coeffs[i] ? p_ - x.coeffs[i] : 0);
    return z;
  }
  FieldElement sub(const FieldElement& x, const FieldElement& y) const { return add(x, neg(y)); }
  FieldElement mul(const FieldElement& x, const FieldElement& y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    u64 k = static_cast<u64>(log_[code(x)]) + log_[code(y)];
    return element(exp_[k % M_]);
  }
  FieldElement inverse(const FieldElement& x) const {
    if (x.is_zero()) throw DivisionByZero("inverse of zero");
    return element(exp_[(M_ - log_[code(x)]) % M_]);
  }
  FieldElement div(const FieldElement& x, const FieldElement& y) const {
    if (y.is_zero()) throw DivisionByZero("division by zero");
    if (x.is_zero()) return zero();
    u64 k = M_ + log_[code(x)] - log_[code(y)];
    return element(exp_[k % M_]);
  }
  // Exponent is reduced mod Q-1 for a nonzero base.
  FieldElement pow(const FieldElement& x, i64 k) const {
    if (x.is_zero()) {
      if (k > 0) return zero();
      if (k == 0) return one();
      throw DivisionByZero("negative power of zero");
    }
    i64 km = k % static_cast<i64>(M_);
    if (km < 0) km += static_cast<i64>(M_);
    u64 idx = (static_cast<u64>(log_[code(x)]) * static_cast<u64>(km)) % M_;
    return element(exp_[idx]);
  }

  // ---- traces ----
  u32 trace_q_code(u32 c) const { return trq_[c]; }
  u8 trace_p_code(u32 c) const { return trp_[c]; }

  // Tr_{q^r/q}: x + x^q + ... + x^(q^(r-1)), lands in F_q.
  FieldElement trace_rq(const FieldElement& x) const { return element(trq_[code(x)]); }
  // Tr_{q/p} on F_q; rejects inputs outside F_q.
  FieldElement trace_qp(const FieldElement& x) const {
    if (!in_fq(x)) throw NotInSubfield("trace to F_p requested of an element outside F_q");
    if (x.is_zero()) return zero();
    u64 lx = log_[code(x)];
    FieldElement acc = zero();
    u64 pe = 1;
    for (int i = 0; i < e_; ++i) {
      acc = add(acc, element(exp_[(lx * pe) % M_]));
      pe = (pe * static_cast<u64>(p_)) % M_;
    }
    return acc;
  }
  // Absolute trace Tr_{q^r/p}, tabulated independently of trace_rq/trace_qp
  // so their transitivity stays a testable property.
  FieldElement trace_rp(const FieldElement& x) const { return element(trp_[code(x)]); }

  FieldElement trace(const FieldElement& x, Subfield sub) const {
    return sub == Subfield::q ? trace_rq(x) : trace_rp(x);
  }

  // ---- squareness ----
  bool is_square(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroInput("squareness of zero is undefined");
    return (log_[code(x)] & 1) == 0;  // Q-1 is even, eta generates
  }
  bool is_square_log(u64 lx) const { return (lx & 1) == 0; }

  // ---- subfields ----
  bool in_fq(const FieldElement& x) const {
    if (x.is_zero()) return true;
    return log_[code(x)] % fq_step_ == 0;
  }
  const std::vector<u32>& fq_codes() const { return fq_; }
  std::vector<FieldElement> subfield_elements(Subfield sub) const {
    std::vector<FieldElement> out;
    if (sub == Subfield::p) {
      out.reserve(p_);
      for (int c = 0; c < p_; ++c) out.push_back(element(static_cast<u64>(c)));
    } else {
      out.reserve(fq_.size());
      for (u32 c : fq_) out.push_back(element(c));
    }
    return out;
  }

  const std::vector<u64>& q1_prime_factors() const { return q1_primes_; }

  // ---- formatting ----
  static std::string format_coeffs(const std::vector<int>& cs) {
    std::ostringstream os;
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) os << ',';
      os << cs[i];
    }
    return os.str();
  }
  static std::vector<int> parse_coeffs(const std::string& s, int p) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != tok.size()) throw Error("bad coefficient '" + tok + "'");
      v %= p;
      if (v < 0) v += p;
      out.push_back(v);
    }
    if (out.empty()) throw Error("empty coefficient list");
    return out;
  }
  std::string modulus_string() const { return format_coeffs(modulus_); }
  std::string coeffs_string(const FieldElement& x) const {
    std::vector<int> cs(deg_);
    for (int i = 0; i < deg_; ++i) cs[i] = x.coeffs[i];
    return format_coeffs(cs);
  }
  std::string eta_string() const { return coeffs_string(eta()); }

  friend std::shared_ptr<const Tower> build_tower(int, int, int, std::optional<std::vector<int>>);

 private:
  Tower() = default;

  int p_ = 0, e_ = 0, r_ = 0, deg_ = 0;
  u64 q_ = 0, Q_ = 0, M_ = 0, fq_step_ = 0;
  std::vector<int> modulus_;
  std::vector<u32> exp_, log_, trq_, fq_;
  std::vector<u8> trp_;
  std::vector<u64> q1_primes_;
};

// Builds the tower; with no modulus a canonical one is chosen (Conway
// polynomial when tabulated, else the smallest-code monic polynomial with a
// primitive root x), so runs are reproducible. The table generator eta is the
// smallest-code primitive element, which is x itself for such moduli.
inline std::shared_ptr<const Tower> build_tower(int p, int e, int r,
                                                std::optional<std::vector<int>> modulus = std::nullopt) {
  if (p == 2) throw EvenCharacteristic("p must be odd");
  if (!detail::is_prime(static_cast<u64>(p < 0 ? 0 : p))) throw NonPrime("p must be an odd prime");
  if (e < 1) throw Error("e must be a positive integer");
  if (r < 2 || r % 2 != 0) throw OddExtension("r must be an even integer >= 2");

  auto t = std::shared_ptr<Tower>(new Tower());
  t->p_ = p;
  t->e_ = e;
  t->r_ = r;
  t->deg_ = e * r;
  if (t->deg_ > kMaxDegree) throw ResourceLimit("extension degree too large");
  u64 Q = 1;
  for (int i = 0; i < t->deg_; ++i) {
    Q *= static_cast<u64>(p);
    if (Q > kMaxOrder) throw ResourceLimit("field order exceeds supported table size");
  }
  t->Q_ = Q;
  t->M_ = Q - 1;
  t->q_ = 1;
  for (int i = 0; i < e; ++i) t->q_ *= static_cast<u64>(p);
  t->fq_step_ = t->M_ / (t->q_ - 1);

  // ---- choose / validate the modulus ----
  const int d = t->deg_;
  if (modulus) {
    std::vector<int> f = *modulus;
    if (static_cast<int>(f.size()) != d + 1) throw Error("modulus must have degree e*r");
    for (int& c : f) {
      c %= p;
      if (c < 0) c += p;
    }
    if (f[d] == 0) throw Error("modulus leading coefficient is zero");
    if (f[d] != 1) {  // normalize monic: same quotient ring
      int inv = 1;
      while ((inv * f[d]) % p != 1) ++inv;
      for (int& c : f) c = (c * inv) % p;
    }
    if (!detail::poly_is_irreducible(f, p)) throw ReducibleModulus("modulus is reducible over F_p");
    t->modulus_ = f;
  } else if (auto cw = conway::lookup(p, d)) {
    t->modulus_ = *cw;
  } else {
    // smallest-code monic polynomial for which x is primitive
    std::vector<int> f(d + 1, 0);
    f[d] = 1;
    auto q1 = detail::distinct_prime_factors(t->M_);
    bool found = false;
    for (u64 tail = 1; tail < Q && !found; ++tail) {
      u64 c = tail;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      if (f[0] == 0) continue;  // x | f
      if (!detail::poly_is_irreducible(f, p)) continue;
      detail::Poly x{0, 1};
      bool primitive = true;
      for (u64 l : q1)
        if (detail::poly_is_one(detail::poly_powmod(x, t->M_ / l, f, p))) {
          primitive = false;
          break;
        }
      found = primitive;
    }
    if (!found) throw Error("no primitive polynomial found");  // unreachable
    t->modulus_ = f;
  }

  t->q1_primes_ = detail::distinct_prime_factors(t->M_);

  // ---- pick the generator: smallest code with multiplicative order Q-1 ----
  const auto& f = t->modulus_;
  detail::Poly gen;
  u64 gen_code = 0;
  for (u64 c = 2; c < Q; ++c) {
    detail::Poly g(d, 0);
    u64 cc = c;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<int>(cc % p);
      cc /= p;
    }
    bool primitive = true;
    for (u64 l : t->q1_primes_)
      if (detail::poly_is_one(detail::poly_powmod(g, t->M_ / l, f, p))) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      gen_code = c;
      break;
    }
  }
  if (gen.empty()) throw Error("no primitive element found");  // impossible in a field

  // ---- exp/log walk ----
  const u64 M = t->M_;
  t->exp_.assign(M, 0);
  t->log_.assign(Q, kNoLog);
  const bool gen_is_x = (gen_code == static_cast<u64>(p));
  std::vector<int> cur(d, 0);
  cur[0] = 1;
  for (u64 k = 0; k < M; ++k) {
    u64 code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * p + cur[i];
    t->exp_[k] = static_cast<u32>(code);
    if (t->log_[code] != kNoLog) throw Error("generator order check failed");  // unreachable
    t->log_[code] = static_cast<u32>(k);
    if (gen_is_x) {
      int carry = cur[d - 1];
      for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (carry)
        for (int i = 0; i < d; ++i) cur[i] = ((cur[i] - carry * f[i]) % p + p * p) % p;
    } else {
      cur = detail::poly_mulmod(cur, gen, f, p);
    }
  }
  {
    u64 code = 0;
    for (int i = d - 1; i >= 0; --i) code = code * p + cur[i];
    if (code != 1) throw Error("generator walk did not close");  // unreachable
  }

  // ---- trace tables ----
  auto add_codes = [&](u64 a, u64 b) {
    u64 out = 0, pw = 1;
    for (int i = 0; i < d; ++i) {
      u64 s = (a % p + b % p) % p;
      out += s * pw;
      a /= p;
      b /= p;
      pw *= p;
    }
    return out;
  };
  t->trq_.assign(Q, 0);
  t->trp_.assign(Q, 0);
  for (u64 m = 0; m < M; ++m) {
    const u64 x = t->exp_[m];
    u64 tq = 0, cj = m;
    for (int i = 0; i < r; ++i) {
      tq = add_codes(tq, t->exp_[cj]);
      cj = (cj * t->q_) % M;
    }
    t->trq_[x] = static_cast<u32>(tq);
    u64 tp = 0;
    cj = m;
    for (int i = 0; i < d; ++i) {
      tp = add_codes(tp, t->exp_[cj]);
      cj = (cj * static_cast<u64>(p)) % M;
    }
    t->trp_[x] = static_cast<u8>(tp);  // a constant polynomial: code < p
  }

  // ---- F_q as the subgroup of index (q-1) plus zero, codes ascending ----
  t->fq_.clear();
  t->fq_.reserve(t->q_);
  t->fq_.push_back(0);
  for (u64 k = 0; k < t->q_ - 1; ++k) t->fq_.push_back(t->exp_[k * t->fq_step_]);
  std::sort(t->fq_.begin(), t->fq_.end());

  return t;
}

}  // namespace bsymb
