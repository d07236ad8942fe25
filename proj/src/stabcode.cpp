#include "polycode/stabcode.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "polycode/enumerate.hpp"
#include "polycode/error.hpp"

namespace polycode {

namespace {

BitMatrix row_matrix(std::size_t n, const std::vector<PauliOperator>& ops) {
  BitMatrix m(2 * n);
  for (const PauliOperator& p : ops) m.add_row(p.symplectic_row());
  return m;
}

void require_qubits(const PauliOperator& p, std::size_t n) {
  if (p.num_qubits() != n) {
    throw LengthMismatch("operator on " + std::to_string(p.num_qubits()) + " qubits, code has " +
                         std::to_string(n));
  }
}

}  // namespace

StabilizerCode::StabilizerCode(std::size_t n, std::vector<PauliOperator> checks)
    : n_(n), checks_(std::move(checks)), span_(2 * n) {}

StabilizerCode StabilizerCode::build(std::size_t n, std::vector<PauliOperator> checks) {
  for (const PauliOperator& c : checks) require_qubits(c, n);
  StabilizerCode code(n, std::move(checks));
  const SymplecticBasis basis = symplectic_gram_schmidt(row_matrix(n, code.checks_));
  code.independent_ = basis.independent_rows;
  code.independent_rows_ = basis.independent_checks;
  for (const BitVec& row : basis.independent_checks.rows()) code.span_.insert(row);
  for (const auto& [xbar, zbar] : basis.logical_pairs) {
    code.logical_x_.push_back(PauliOperator::from_symplectic_row(xbar));
    code.logical_z_.push_back(PauliOperator::from_symplectic_row(zbar));
  }
  return code;
}

StabilizerCode StabilizerCode::build(std::vector<PauliOperator> checks) {
  if (checks.empty()) throw Error("cannot infer qubit count from an empty check list");
  const std::size_t n = checks.front().num_qubits();
  return build(n, std::move(checks));
}

bool StabilizerCode::in_stabilizer_span(const PauliOperator& p) const {
  require_qubits(p, n_);
  return span_.contains(p.symplectic_row());
}

bool StabilizerCode::commutes_with_checks(const PauliOperator& p) const {
  require_qubits(p, n_);
  return std::none_of(checks_.begin(), checks_.end(),
                      [&](const PauliOperator& c) { return symplectic_product(c, p); });
}

bool StabilizerCode::commutes_with_checks(const BitVec& x, const BitVec& z) const {
  for (std::size_t i : independent_) {
    const PauliOperator& c = checks_[i];
    if (c.x_bits().dot(z) != c.z_bits().dot(x)) return false;
  }
  return true;
}

std::uint64_t StabilizerCode::syndrome_index(const BitVec& x, const BitVec& z) const {
  if (rank() > 64) throw Error("syndrome_index needs at most 64 independent checks");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < independent_.size(); ++i) {
    const PauliOperator& c = checks_[independent_[i]];
    if (c.x_bits().dot(z) != c.z_bits().dot(x)) s |= std::uint64_t{1} << i;
  }
  return s;
}

StabilizerCode StabilizerCode::with_logicals(std::vector<PauliOperator> xs,
                                             std::vector<PauliOperator> zs) const {
  if (xs.size() != k() || zs.size() != k()) {
    throw Error("logical basis needs exactly k = " + std::to_string(k()) + " pairs");
  }
  const LogicalReport report = verify_golden_logicals(*this, xs, zs);
  if (!report.all_passed()) {
    for (const auto& item : report.items) {
      // Disjoint z̄ supports are not required of a general basis.
      if (!item.passed && item.name != "zbar_supports_disjoint") {
        throw Error("invalid logical basis: " + item.name + ": " + item.detail);
      }
    }
  }
  StabilizerCode out = *this;
  out.logical_x_ = std::move(xs);
  out.logical_z_ = std::move(zs);
  return out;
}

StabilizerCode StabilizerCode::with_reduced_logicals() const {
  StabilizerCode out = *this;
  auto reduce = [&](PauliOperator& p) {
    p = PauliOperator::from_symplectic_row(reduce_weight_greedy(p.symplectic_row(), independent_rows_));
  };
  for (auto& p : out.logical_x_) reduce(p);
  for (auto& p : out.logical_z_) reduce(p);
  return out;
}

std::uint64_t distance_scan_cost(std::size_t n, std::size_t max_weight) {
  std::uint64_t total = 0;
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    const std::uint64_t c = count_paulis(n, w);
    total = (total > UINT64_MAX - c) ? UINT64_MAX : total + c;
  }
  return total;
}

DistanceResult distance(const StabilizerCode& code, std::size_t max_weight, unsigned threads) {
  if (code.k() == 0) throw Error("distance is undefined for a code with k = 0");
  const std::size_t n = code.n();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  DistanceResult result;
  result.max_weight = max_weight;
  for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
    // One task per lowest support qubit; tasks are ordered like the serial
    // enumeration, so the lowest task with a hit holds the first witness.
    const std::size_t tasks = n - w + 1;
    std::vector<std::optional<PauliOperator>> hits(tasks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{tasks};

    auto worker = [&] {
      for (std::size_t t = next++; t < tasks; t = next++) {
        if (t > best.load()) break;
        for_each_pauli_with_first(n, w, t, [&](const BitVec& x, const BitVec& z) {
          if (!code.commutes_with_checks(x, z)) return true;
          PauliOperator p = pauli_from_bits(x, z);
          if (code.in_stabilizer_span(p)) return true;
          hits[t] = std::move(p);
          return false;
        });
        if (hits[t]) {
          std::size_t cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
        }
      }
    };
    const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    }
    for (std::size_t t = 0; t < tasks; ++t) {
      if (hits[t]) {
        result.d = w;
        result.witness = std::move(hits[t]);
        return result;
      }
    }
  }
  return result;
}

WeightScanReport weight_two_scan(const StabilizerCode& code) {
  WeightScanReport report;
  for (std::size_t w = 1; w <= 2; ++w) {
    for_each_pauli(code.n(), w, [&](const BitVec& x, const BitVec& z) {
      ++report.checked;
      if (!report.undetected && code.commutes_with_checks(x, z)) {
        report.all_detected = false;
        report.undetected = pauli_from_bits(x, z);
      }
      return true;
    });
  }
  return report;
}

bool LogicalReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.passed; });
}

LogicalReport verify_golden_logicals(const StabilizerCode& code, const std::vector<PauliOperator>& xbars,
                                     const std::vector<PauliOperator>& zbars) {
  LogicalReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.items.push_back({std::move(name), passed, std::move(detail)});
  };

  for (const auto& p : xbars) require_qubits(p, code.n());
  for (const auto& p : zbars) require_qubits(p, code.n());

  add("count_matches_k", xbars.size() == code.k() && zbars.size() == code.k(),
      std::to_string(xbars.size()) + " xbar, " + std::to_string(zbars.size()) + " zbar, k = " +
          std::to_string(code.k()));

  {
    std::string detail;
    auto scan = [&](const std::vector<PauliOperator>& ops, const char* label) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t c = 0; c < code.checks().size(); ++c) {
          if (symplectic_product(ops[i], code.checks()[c])) {
            detail += std::string(detail.empty() ? "" : "; ") + label + std::to_string(i + 1) +
                      " anticommutes with check " + std::to_string(c + 1);
          }
        }
      }
    };
    scan(xbars, "xbar");
    scan(zbars, "zbar");
    add("commute_with_checks", detail.empty(), detail.empty() ? "all commute" : detail);
  }

  {
    const std::size_t m = std::min(xbars.size(), zbars.size());
    bool identity = xbars.size() == zbars.size();
    std::string matrix;
    for (std::size_t i = 0; i < m; ++i) {
      if (i) matrix += "/";
      for (std::size_t j = 0; j < m; ++j) {
        const bool v = symplectic_product(xbars[i], zbars[j]);
        matrix += v ? '1' : '0';
        if (v != (i == j)) identity = false;
      }
    }
    add("pairing_identity", identity, "pairing matrix " + matrix);
  }

  auto family_commutes = [&](const std::vector<PauliOperator>& ops, const char* name) {
    std::string detail;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (symplectic_product(ops[i], ops[j])) {
          detail += (detail.empty() ? "" : "; ") + std::to_string(i + 1) + "," + std::to_string(j + 1);
        }
      }
    }
    add(name, detail.empty(), detail.empty() ? "pairwise commuting" : "anticommuting pairs " + detail);
  };
  family_commutes(xbars, "xbars_commute");
  family_commutes(zbars, "zbars_commute");

  {
    std::string detail;
    auto scan = [&](const std::vector<PauliOperator>& ops, const char* label) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (code.in_stabilizer_span(ops[i])) {
          detail += std::string(detail.empty() ? "" : "; ") + label + std::to_string(i + 1) +
                    " is a product of checks";
        }
      }
    };
    scan(xbars, "xbar");
    scan(zbars, "zbar");
    add("outside_check_span", detail.empty(), detail.empty() ? "none in span" : detail);
  }

  {
    BitVec seen(code.n());
    bool disjoint = true;
    for (const auto& z : zbars) {
      const BitVec support = z.x_bits() | z.z_bits();
      if ((seen & support).any()) disjoint = false;
      seen |= support;
    }
    add("zbar_supports_disjoint", disjoint, disjoint ? "disjoint" : "supports overlap");
  }
  return report;
}

std::string CodeParams::str() const {
  std::string out = "[[" + std::to_string(n) + "," + std::to_string(k);
  if (d) {
    out += "," + std::to_string(*d);
  } else if (d_exceeds) {
    out += ",>" + std::to_string(*d_exceeds);
  }
  return out + "]]";
}

CodeParams params(const StabilizerCode& code, std::size_t max_weight, unsigned threads) {
  CodeParams out;
  out.n = code.n();
  out.k = code.k();
  if (out.k == 0) return out;
  const DistanceResult dr = distance(code, max_weight, threads);
  if (dr.d) {
    out.d = dr.d;
  } else {
    out.d_exceeds = max_weight;
  }
  return out;
}

}  // namespace polycode
