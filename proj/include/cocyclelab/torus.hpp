#ifndef COCYCLELAB_TORUS_HPP
#define COCYCLELAB_TORUS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cocyclelab {

/// e(x) = exp(2*pi*i*x).
std::complex<double> unit_phase(double x);

/// Reduced fraction in [0,1). Exact arithmetic on the circle, so that orbits
/// of the q-times map and degenerate geometric-series branches can be decided
/// without floating drift.
class UnitRational {
 public:
  UnitRational() : num_(0), den_(1) {}

  /// num/den reduced into [0,1). den must be nonzero.
  static UnitRational reduced(std::int64_t num, std::uint64_t den);

  /// Accepts "0.375", ".5", "3/8", "1/3" or a plain integer (which wraps to 0).
  static UnitRational parse(std::string_view text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Fractional part of k*this, exactly.
  UnitRational times(std::uint64_t k) const;
  /// Fractional part of base^exp * this, exactly.
  UnitRational times_pow(std::uint64_t base, unsigned exp) const;
  /// frac(k*this) as a double (one rounding at the end).
  double phase_times(std::uint64_t k) const { return times(k).value(); }

  bool operator==(const UnitRational&) const = default;

 private:
  std::uint64_t num_;  // 0 <= num < den
  std::uint64_t den_;  // >= 1
};

/// A point moving along an orbit of the q-times map w -> q*w (mod 1).
///
/// Two backings: an exact rational (periodic orbits stay periodic, dyadic
/// points genuinely collapse to 0 when they should), or a sliding window over
/// an i.i.d. base-q digit stream. The latter is the orbit of a Lebesgue-random
/// point: doubling a 53-bit double in floating point hits exact zero after at
/// most ~1075 steps, which would bias every long Monte Carlo run.
class OrbitPoint {
 public:
  static OrbitPoint rational(UnitRational w, unsigned base);
  /// Random Lebesgue-typical point; the digit stream is derived from
  /// (seed, stream) so sweeps are reproducible sample by sample.
  static OrbitPoint random_stream(unsigned base, std::uint64_t seed, std::uint64_t stream);

  double value() const;
  void advance();
  unsigned base() const { return base_; }
  /// Exact value when rationally backed.
  std::optional<UnitRational> exact() const;

 private:
  OrbitPoint() = default;

  unsigned base_ = 2;
  bool is_rational_ = false;
  UnitRational rat_;
  // digit-stream state
  std::mt19937_64 rng_;
  std::uint64_t window_ = 0;      // next `win_len_` digits, most significant first
  std::uint64_t win_pow_ = 1;     // base^win_len_
  std::uint64_t win_pow_lo_ = 1;  // base^(win_len_-1)
  std::uint64_t next_digit();
};

/// Point on the m-torus; the spectral cocycle lives over these.
struct TorusPoint {
  Eigen::VectorXd xi;

  static TorusPoint diagonal(double omega, unsigned m);
  static TorusPoint of(std::vector<double> coords);
  unsigned dimension() const { return static_cast<unsigned>(xi.size()); }
};

}  // namespace cocyclelab

#endif
