#include "polycode/decoder.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "polycode/enumerate.hpp"
#include "polycode/error.hpp"

namespace polycode {

std::uint64_t Syndrome::index() const {
  if (bits.size() > 64) throw Error("syndrome longer than 64 bits has no integer index");
  return bits.empty() ? 0 : bits.words()[0];
}

Syndrome Syndrome::from_index(std::size_t num_checks, std::uint64_t index) {
  Syndrome s{BitVec(num_checks)};
  for (std::size_t i = 0; i < num_checks && i < 64; ++i) {
    if ((index >> i) & 1u) s.bits.set(i);
  }
  return s;
}

Syndrome syndrome_of(const StabilizerCode& code, const PauliOperator& error) {
  if (error.num_qubits() != code.n()) {
    throw LengthMismatch("error acts on " + std::to_string(error.num_qubits()) + " qubits, code has " +
                         std::to_string(code.n()));
  }
  Syndrome s{BitVec(code.rank())};
  for (std::size_t i = 0; i < code.rank(); ++i) {
    if (symplectic_product(code.independent_check(i), error)) s.bits.set(i);
  }
  return s;
}

std::size_t DecoderTable::max_weight() const {
  std::size_t w = 0;
  for (const auto& e : entries_) w = std::max(w, e.weight());
  return w;
}

void DecoderTable::write(std::ostream& out) const {
  for (std::uint64_t s = 0; s < entries_.size(); ++s) {
    out << Syndrome::from_index(num_checks_, s).str() << ' ' << entries_[s].str() << '\n';
  }
}

DecoderTable build_table(const StabilizerCode& code, std::size_t max_checks) {
  const std::size_t r = code.rank();
  if (r > max_checks) {
    throw Error("decoder table for " + std::to_string(r) + " independent checks needs 2^" +
                std::to_string(r) + " entries; limit is 2^" + std::to_string(max_checks));
  }
  const std::uint64_t total = std::uint64_t{1} << r;
  std::vector<std::optional<PauliOperator>> slots(total);
  slots[0] = PauliOperator(code.n());
  std::uint64_t filled = 1;

  for (std::size_t w = 1; w <= code.n() && filled < total; ++w) {
    for_each_pauli(code.n(), w, [&](const BitVec& x, const BitVec& z) {
      const std::uint64_t s = code.syndrome_index(x, z);
      if (!slots[s]) {
        slots[s] = pauli_from_bits(x, z);
        ++filled;
      }
      return filled < total;
    });
  }
  if (filled < total) throw Error("decoder table incomplete: some syndromes are unreachable");

  DecoderTable table;
  table.num_checks_ = r;
  table.entries_.reserve(total);
  for (auto& slot : slots) table.entries_.push_back(std::move(*slot));
  return table;
}

PauliOperator decode(const DecoderTable& table, const Syndrome& s) {
  if (s.bits.size() != table.num_checks()) {
    throw LengthMismatch("syndrome has " + std::to_string(s.bits.size()) + " bits, table expects " +
                         std::to_string(table.num_checks()));
  }
  return table.entry(s.index());
}

const char* to_string(DecodeOutcome outcome) {
  return outcome == DecodeOutcome::success ? "success" : "logical_failure";
}

ResidualReport classify_residual(const StabilizerCode& code, const PauliOperator& error,
                                 const PauliOperator& correction) {
  if (syndrome_of(code, error) != syndrome_of(code, correction)) {
    throw Error("correction " + correction.str() + " does not match the syndrome of error " + error.str());
  }
  ResidualReport report;
  report.residual = error * correction;
  if (code.in_stabilizer_span(report.residual)) return report;
  report.outcome = DecodeOutcome::logical_failure;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (symplectic_product(report.residual, code.logical_x()[i])) report.detected_by_xbar.push_back(i);
    if (symplectic_product(report.residual, code.logical_z()[i])) report.detected_by_zbar.push_back(i);
  }
  return report;
}

}  // namespace polycode
