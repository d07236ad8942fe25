#include "polycode/pauli.hpp"

#include <vector>

#include "polycode/error.hpp"

namespace polycode {

namespace {

void require_same_length(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw LengthMismatch("Pauli length mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
}

std::size_t count_y(const BitVec& x, const BitVec& z) { return (x & z).popcount(); }

}  // namespace

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

PauliOperator::PauliOperator(BitVec x, BitVec z, unsigned phase)
    : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3u) {
  if (x_.size() != z_.size()) throw LengthMismatch("x and z parts must have equal length");
}

PauliOperator PauliOperator::from_letters(std::span<const PauliLetter> letters) {
  PauliOperator out(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case PauliLetter::I:
        break;
      case PauliLetter::X:
        out.x_.set(q);
        break;
      case PauliLetter::Z:
        out.z_.set(q);
        break;
      case PauliLetter::Y:
        out.x_.set(q);
        out.z_.set(q);
        ++out.phase_;
        break;
    }
  }
  out.phase_ &= 3u;
  return out;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, PauliLetter letter) {
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  letters.at(qubit) = letter;
  return from_letters(letters);
}

PauliOperator PauliOperator::from_symplectic_row(const BitVec& row) {
  if (row.size() % 2 != 0) throw LengthMismatch("symplectic row must have even length");
  const std::size_t n = row.size() / 2;
  BitVec x = row.slice(0, n);
  BitVec z = row.slice(n, n);
  const auto ny = static_cast<unsigned>(count_y(x, z));
  return PauliOperator(std::move(x), std::move(z), ny);
}

PauliLetter PauliOperator::letter(std::size_t qubit) const {
  const bool x = x_.get(qubit);
  const bool z = z_.get(qubit);
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

std::size_t PauliOperator::weight() const { return (x_ | z_).popcount(); }

PauliOperator PauliOperator::operator*(const PauliOperator& rhs) const {
  require_same_length(*this, rhs);
  // X^a Z^b · X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d} per qubit.
  const auto swaps = static_cast<unsigned>((z_ & rhs.x_).popcount());
  return PauliOperator(x_ ^ rhs.x_, z_ ^ rhs.z_, phase_ + rhs.phase_ + 2 * swaps);
}

std::string PauliOperator::str() const {
  const auto ny = static_cast<unsigned>(count_y(x_, z_));
  std::string out;
  switch ((phase_ + 4 - (ny & 3u)) & 3u) {
    case 1:
      out = "+i";
      break;
    case 2:
      out = "-";
      break;
    case 3:
      out = "-i";
      break;
    default:
      break;
  }
  out.reserve(out.size() + num_qubits());
  for (std::size_t q = 0; q < num_qubits(); ++q) out.push_back(to_char(letter(q)));
  return out;
}

PauliOperator parse_pauli(std::string_view text) {
  if (text.empty()) throw ParseError("Pauli string is empty", 1);
  unsigned sign = 0;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0] == '-' ? 2 : 0;
    pos = 1;
    if (pos < text.size() && text[pos] == 'i') {
      sign += 1;
      pos = 2;
    }
  }
  if (pos == text.size()) throw ParseError("Pauli string has a sign but no letters", pos + 1);

  std::vector<PauliLetter> letters;
  letters.reserve(text.size() - pos);
  for (std::size_t i = pos; i < text.size(); ++i) {
    switch (text[i]) {
      case 'I':
        letters.push_back(PauliLetter::I);
        break;
      case 'X':
        letters.push_back(PauliLetter::X);
        break;
      case 'Y':
        letters.push_back(PauliLetter::Y);
        break;
      case 'Z':
        letters.push_back(PauliLetter::Z);
        break;
      default:
        throw ParseError("Pauli string: unexpected character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i + 1),
                         i + 1);
    }
  }
  PauliOperator base = PauliOperator::from_letters(letters);
  return PauliOperator(base.x_bits(), base.z_bits(), base.phase() + sign);
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }

bool symplectic_product(const PauliOperator& a, const PauliOperator& b) {
  require_same_length(a, b);
  return a.x_bits().dot(b.z_bits()) != a.z_bits().dot(b.x_bits());
}

bool symplectic_form(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) {
    throw LengthMismatch("symplectic rows must have equal even length");
  }
  const std::size_t n = a.size() / 2;
  return a.slice(0, n).dot(b.slice(n, n)) != a.slice(n, n).dot(b.slice(0, n));
}

std::size_t symplectic_weight(const BitVec& row) {
  const std::size_t n = row.size() / 2;
  return (row.slice(0, n) | row.slice(n, n)).popcount();
}

}  // namespace polycode
