#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polycode/decoder.hpp"
#include "polycode/pauli.hpp"
#include "polycode/stabcode.hpp"

namespace polycode {

/// i.i.d. single-qubit depolarizing noise: each qubit independently suffers
/// X, Y or Z with probability p/3 each.
struct NoiseModel {
  double p = 0.0;

  /// Throws Error unless 0 ≤ p ≤ 1.
  void validate() const;
};

/// Counter-based stream for one shot: a splitmix64 sequence whose starting
/// state is mix64(mix64(seed) xor shot). Shot i draws the same numbers no
/// matter which worker runs it.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint64_t shot);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// One uniform draw u per qubit: X if u < p/3, Y if u < 2p/3, Z if u < p.
PauliOperator sample_error(const NoiseModel& model, std::size_t n, ShotRng& rng);

struct SimReport {
  double p = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t failures = 0;
  double ler = 0.0;
  /// 95% Wilson score interval.
  double lo = 0.0;
  double hi = 0.0;
  std::uint64_t seed = 0;
};

/// Wilson score interval for `failures` out of `shots` at normal quantile z.
std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t shots,
                                          double z = 1.959963984540054);

/// Code-capacity Monte Carlo: sample, look up the correction, count logical
/// failures. The result depends only on (seed, shots, p). `threads` = 0
/// picks hardware concurrency.
SimReport run(const StabilizerCode& code, const DecoderTable& table, const NoiseModel& model,
              std::uint64_t shots, std::uint64_t seed, unsigned threads = 0);

/// Injects the identity and every weight-1 error once and counts logical
/// failures after decoding.
std::size_t exhaustive_weight_one_failures(const StabilizerCode& code, const DecoderTable& table);

/// Least-squares slope of log(ler) against log(p). Points with ler = 0 are
/// rejected.
double loglog_slope(const std::vector<SimReport>& reports);

/// "p shots failures ler lo hi seed"
std::string format_report_line(const SimReport& r);
/// Human-readable table with a header row.
std::string format_report_table(const std::vector<SimReport>& reports);

}  // namespace polycode
