#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primewave {

inline constexpr const char* kVersion = "1.0.0";

enum class ErrorCode {
  domain = 1,
  resolution = 2,
  consistency = 3,
  insufficient_table = 4,
  divergence = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Compensated accumulator: the rounding error of each addition is carried
// into the next one.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// ---------------------------------------------------------------------------
// Phase reduction. Series terms exp(2*pi*i*w*t) are evaluated as
// unit_cycles(frac_cycles(w, t)): the fractional part of w*t is recovered
// from the exact two-product so that large w*t does not wash out the phase.
// ---------------------------------------------------------------------------

struct DD {
  double hi, lo;
};

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline double wrap_unit(double f) {
  f -= std::floor(f);
  return (f >= 1.0) ? 0.0 : f;
}

// frac(w*t) in [0,1)
inline double frac_cycles(double w, double t) {
  DD p = two_prod(w, t);
  // beyond 2^53 every double is an integer, the fraction lives in the tail
  double base = (std::abs(p.hi) < 0x1p53) ? (p.hi - std::floor(p.hi)) : 0.0;
  return wrap_unit(base + (p.lo - std::floor(p.lo)));
}

// frac(a*t) for exact integer a, split so values beyond 2^53 stay exact
inline double frac_cycles_u64(uint64_t a, double t) {
  if (a <= (uint64_t(1) << 53)) return frac_cycles(double(a), t);
  double hi = double(a >> 32);
  double lo = double(a & 0xffffffffu);
  return wrap_unit(frac_cycles(hi, t * 0x1p32) + frac_cycles(lo, t));
}

inline std::complex<double> unit_cycles(double f) {
  double a = kTwoPi * f;
  return {std::cos(a), std::sin(a)};
}

// x/(2*pi) in double-double, for series whose phases are stated in radians
inline DD div_two_pi(double x) {
  constexpr double hi = 6.283185307179586;       // head of 2*pi
  constexpr double lo = 2.4492935982947064e-16;  // tail of 2*pi
  double q0 = x / hi;
  double r = std::fma(-q0, hi, x) - q0 * lo;
  return {q0, r / hi};
}

// frac(w*x / 2pi): reduces the radian phase w*x modulo 2*pi into cycle units
inline double frac_cycles_rad(double w, double x) {
  DD tau = div_two_pi(x);
  double extra = w * tau.lo;
  return wrap_unit(frac_cycles(w, tau.hi) + (extra - std::floor(extra)));
}

}  // namespace primewave
