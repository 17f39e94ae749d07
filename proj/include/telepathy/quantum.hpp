#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "game.hpp"
#include "word.hpp"

namespace telepathy {

enum class Party { alice, bob };

// Two n-qubit registers with exact integer amplitudes; the physical amplitude
// of (i, j) is amp(i, j) / sqrt(2^exponent).
struct JointState {
  unsigned n = 0;
  unsigned exponent = 0;
  std::vector<std::int64_t> amp;  // row-major, index i * 2^n + j

  std::size_t dim() const { return std::size_t{1} << n; }
  std::int64_t at(std::size_t i, std::size_t j) const { return amp[i * dim() + j]; }
  std::int64_t& at(std::size_t i, std::size_t j) { return amp[i * dim() + j]; }

  std::uint64_t norm() const {
    std::uint64_t s = 0;
    for (auto a : amp) s += static_cast<std::uint64_t>(a * a);
    return s;
  }
  bool normalized() const { return exponent < 64 && norm() == (std::uint64_t{1} << exponent); }
  friend bool operator==(const JointState&, const JointState&) = default;
};

// n shared EPR pairs: sum_i |i>|i> / sqrt(2^n).
inline JointState prepare_epr(unsigned n) {
  if (n < 1 || n > 5) throw usage_error("prepare_epr supports n in [1, 5]");
  JointState st;
  st.n = n;
  st.exponent = n;
  st.amp.assign(st.dim() * st.dim(), 0);
  for (std::size_t i = 0; i < st.dim(); ++i) st.at(i, i) = 1;
  return st;
}

// Multiplies amplitude (i, j) by (-1)^{x_i} (alice) or (-1)^{x_j} (bob).
inline JointState apply_phase(JointState st, Party party, Word x) {
  if (x.length() != st.dim()) throw usage_error("phase word must have 2^n bits");
  for (std::size_t i = 0; i < st.dim(); ++i)
    for (std::size_t j = 0; j < st.dim(); ++j)
      if (x.test(static_cast<unsigned>(party == Party::alice ? i : j))) st.at(i, j) = -st.at(i, j);
  return st;
}

// Unnormalized n-fold Hadamard on one register, kernel (-1)^{popcount(i & a)}.
inline JointState apply_hadamard(JointState st, Party party) {
  const std::size_t d = st.dim();
  for (std::size_t fixed = 0; fixed < d; ++fixed) {
    auto ref = [&](std::size_t k) -> std::int64_t& { return party == Party::alice ? st.at(k, fixed) : st.at(fixed, k); };
    for (std::size_t len = 1; len < d; len <<= 1)
      for (std::size_t base = 0; base < d; base += 2 * len)
        for (std::size_t k = base; k < base + len; ++k) {
          std::int64_t a = ref(k), b = ref(k + len);
          ref(k) = a + b;
          ref(k + len) = a - b;
        }
  }
  st.exponent += st.n;
  return st;
}

// Outcome probabilities numer[ya * 2^n + yb] / 2^exponent.
struct OutcomeDistribution {
  unsigned n = 0;
  unsigned exponent = 0;
  std::vector<std::uint64_t> numer;

  std::size_t dim() const { return std::size_t{1} << n; }
  Fraction probability(std::size_t ya, std::size_t yb) const {
    return Fraction::reduced(numer[ya * dim() + yb], std::uint64_t{1} << exponent);
  }
  Fraction p_equal() const {
    std::uint64_t s = 0;
    for (std::size_t y = 0; y < dim(); ++y) s += numer[y * dim() + y];
    return Fraction::reduced(s, std::uint64_t{1} << exponent);
  }
  Fraction total() const {
    std::uint64_t s = 0;
    for (auto v : numer) s += v;
    return Fraction::reduced(s, std::uint64_t{1} << exponent);
  }
};

inline OutcomeDistribution outcome_distribution(const JointState& st) {
  if (!st.normalized()) throw invariant_error("joint state is not normalized");
  OutcomeDistribution d{st.n, st.exponent, {}};
  d.numer.reserve(st.amp.size());
  for (auto a : st.amp) d.numer.push_back(static_cast<std::uint64_t>(a * a));
  return d;
}

// Each party phases by its own question, applies Hadamards, and measures.
inline JointState run_protocol(unsigned n, Word xa, Word xb) {
  auto st = prepare_epr(n);
  st = apply_phase(std::move(st), Party::alice, xa);
  st = apply_phase(std::move(st), Party::bob, xb);
  st = apply_hadamard(std::move(st), Party::alice);
  return apply_hadamard(std::move(st), Party::bob);
}

struct ClassResult {
  Word z;
  Fraction p_equal;
  bool pass = false;
};

struct ProtocolReport {
  unsigned n = 0;
  std::vector<ClassResult> classes;
  std::size_t failures = 0;
  bool invariance_ok = true;  // (x_A, x_A xor z) and (0, z) give the same post-phase state
  bool referee_ok = true;     // every outcome with nonzero probability wins

  bool pass() const { return failures == 0 && invariance_ok && referee_ok; }
};

inline ProtocolReport verify_protocol(unsigned n, std::uint64_t seed = 0) {
  if (n < 1 || n > 4) throw usage_error("verify_protocol supports n in [1, 4]");
  const unsigned N = 1U << n;
  ProtocolReport rep;
  rep.n = n;
  std::mt19937_64 rng(seed);
  const Word zero(0, N);
  for (Word z : promise_classes(N)) {
    auto st = run_protocol(n, zero, z);
    auto dist = outcome_distribution(st);
    ClassResult cr{z, dist.p_equal(), false};
    cr.pass = z.bits() == 0 ? cr.p_equal == Fraction{1, 1} : cr.p_equal == Fraction{0, 1};
    if (!cr.pass) ++rep.failures;

    Word xa(static_cast<bits_t>(rng()) & low_mask(N), N);
    Word xb(xa.bits() ^ z.bits(), N);
    auto shifted = apply_phase(apply_phase(prepare_epr(n), Party::alice, xa), Party::bob, xb);
    auto base = apply_phase(apply_phase(prepare_epr(n), Party::alice, zero), Party::bob, z);
    if (!(shifted == base)) rep.invariance_ok = false;

    for (std::size_t ya = 0; ya < dist.dim(); ++ya)
      for (std::size_t yb = 0; yb < dist.dim(); ++yb)
        if (dist.numer[ya * dist.dim() + yb] != 0 &&
            referee(xa, xb, static_cast<unsigned>(ya), static_cast<unsigned>(yb), n) != Verdict::win)
          rep.referee_ok = false;
    rep.classes.push_back(cr);
  }
  return rep;
}

}  // namespace telepathy
