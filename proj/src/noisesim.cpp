#include "polycode/noisesim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <span>
#include <thread>

#include "polycode/error.hpp"

namespace polycode {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

using Words = std::vector<BitVec::Word>;

struct PackedPauli {
  Words x;
  Words z;
};

PackedPauli pack(const PauliOperator& p) {
  return {Words(p.x_bits().words().begin(), p.x_bits().words().end()),
          Words(p.z_bits().words().begin(), p.z_bits().words().end())};
}

bool anticommute(const Words& ax, const Words& az, const Words& bx, const Words& bz) {
  BitVec::Word acc = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
  return std::popcount(acc) & 1;
}

/// Word-level view of a code and its table for the per-shot loop. A residual
/// with trivial syndrome is a stabilizer iff it commutes with every logical
/// representative, since those span the normalizer modulo the stabilizers.
struct PackedCode {
  std::size_t n = 0;
  std::vector<PackedPauli> checks;
  std::vector<PackedPauli> logicals;
  std::vector<PackedPauli> table;

  PackedCode(const StabilizerCode& code, const DecoderTable& t) : n(code.n()) {
    for (std::size_t i = 0; i < code.rank(); ++i) checks.push_back(pack(code.independent_check(i)));
    for (const auto& p : code.logical_x()) logicals.push_back(pack(p));
    for (const auto& p : code.logical_z()) logicals.push_back(pack(p));
    for (std::uint64_t s = 0; s < t.size(); ++s) table.push_back(pack(t.entry(s)));
  }

  bool fails(Words& x, Words& z) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (anticommute(x, z, checks[i].x, checks[i].z)) s |= std::uint64_t{1} << i;
    }
    const PackedPauli& c = table[s];
    for (std::size_t w = 0; w < x.size(); ++w) {
      x[w] ^= c.x[w];
      z[w] ^= c.z[w];
    }
    return std::any_of(logicals.begin(), logicals.end(),
                       [&](const PackedPauli& l) { return anticommute(x, z, l.x, l.z); });
  }
};

void draw(double p, std::size_t n, ShotRng& rng, Words& x, Words& z) {
  std::fill(x.begin(), x.end(), 0);
  std::fill(z.begin(), z.end(), 0);
  const double third = p / 3.0;
  const double two_thirds = 2.0 * p / 3.0;
  for (std::size_t q = 0; q < n; ++q) {
    const double u = rng.uniform();
    if (u >= p) continue;
    const BitVec::Word bit = BitVec::Word{1} << (q % BitVec::kWordBits);
    const std::size_t w = q / BitVec::kWordBits;
    if (u < third) {
      x[w] |= bit;
    } else if (u < two_thirds) {
      x[w] |= bit;
      z[w] |= bit;
    } else {
      z[w] |= bit;
    }
  }
}

}  // namespace

void NoiseModel::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("depolarizing probability must lie in [0, 1]");
}

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t shot) : state_(mix64(mix64(seed) ^ shot)) {}

std::uint64_t ShotRng::next() {
  state_ += kGamma;
  return mix64(state_);
}

PauliOperator sample_error(const NoiseModel& model, std::size_t n, ShotRng& rng) {
  model.validate();
  BitVec x(n);
  BitVec z(n);
  Words xw(x.words().size());
  Words zw(z.words().size());
  draw(model.p, n, rng, xw, zw);
  std::copy(xw.begin(), xw.end(), x.words().begin());
  std::copy(zw.begin(), zw.end(), z.words().begin());
  return PauliOperator(x, z, static_cast<unsigned>((x & z).popcount()));
}

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t shots, double z) {
  if (shots == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(shots);
  const double phat = static_cast<double>(failures) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (phat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
  const double lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = failures == shots ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

SimReport run(const StabilizerCode& code, const DecoderTable& table, const NoiseModel& model,
              std::uint64_t shots, std::uint64_t seed, unsigned threads) {
  model.validate();
  if (shots == 0) throw Error("shots must be positive");
  if (table.num_checks() != code.rank()) throw Error("decoder table was built for a different code");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const PackedCode packed(code, table);
  const std::size_t nwords = BitVec::num_words(code.n());
  constexpr std::uint64_t kBlock = 1 << 14;
  const std::uint64_t blocks = (shots + kBlock - 1) / kBlock;
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> failures{0};

  auto worker = [&] {
    Words x(nwords);
    Words z(nwords);
    std::uint64_t local = 0;
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) {
      const std::uint64_t end = std::min(shots, (b + 1) * kBlock);
      for (std::uint64_t shot = b * kBlock; shot < end; ++shot) {
        ShotRng rng(seed, shot);
        draw(model.p, packed.n, rng, x, z);
        if (packed.fails(x, z)) ++local;
      }
    }
    failures += local;
  };
  const auto nthreads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  }

  SimReport report;
  report.p = model.p;
  report.shots = shots;
  report.failures = failures.load();
  report.ler = static_cast<double>(report.failures) / static_cast<double>(shots);
  std::tie(report.lo, report.hi) = wilson_interval(report.failures, shots);
  report.seed = seed;
  return report;
}

std::size_t exhaustive_weight_one_failures(const StabilizerCode& code, const DecoderTable& table) {
  std::size_t failures = 0;
  auto check = [&](const PauliOperator& e) {
    const PauliOperator c = decode(table, syndrome_of(code, e));
    if (classify_residual(code, e, c).outcome != DecodeOutcome::success) ++failures;
  };
  check(PauliOperator(code.n()));
  for (std::size_t q = 0; q < code.n(); ++q) {
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
      check(PauliOperator::single(code.n(), q, l));
    }
  }
  return failures;
}

double loglog_slope(const std::vector<SimReport>& reports) {
  if (reports.size() < 2) throw Error("slope needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : reports) {
    if (r.ler <= 0.0 || r.p <= 0.0) throw Error("log-log slope needs positive p and ler");
    const double lx = std::log(r.p);
    const double ly = std::log(r.ler);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(reports.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::string format_report_line(const SimReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.6g %llu %llu %.6e %.6e %.6e %llu", r.p,
                static_cast<unsigned long long>(r.shots), static_cast<unsigned long long>(r.failures), r.ler,
                r.lo, r.hi, static_cast<unsigned long long>(r.seed));
  return buf;
}

std::string format_report_table(const std::vector<SimReport>& reports) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %12s %12s %12s %8s\n", "p", "shots", "failures", "ler",
                "wilson_lo", "wilson_hi", "seed");
  out += buf;
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%-10.6g %10llu %10llu %12.4e %12.4e %12.4e %8llu\n", r.p,
                  static_cast<unsigned long long>(r.shots), static_cast<unsigned long long>(r.failures),
                  r.ler, r.lo, r.hi, static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

}  // namespace polycode
