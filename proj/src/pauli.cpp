// Copyright 2026 The embedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "embedsim/pauli.hpp"

#include <algorithm>

#include "embedsim/state.hpp"

namespace embedsim {

char to_char(Pauli p) {
  static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw InvalidArgument(std::string("invalid Pauli symbol '") + c + "'");
  }
}

PauliString::PauliString(std::string_view symbols) {
  if (symbols.empty()) throw InvalidArgument("Pauli string must act on at least one qubit");
  symbols_.reserve(symbols.size());
  for (char c : symbols) symbols_.push_back(pauli_from_char(c));
}

PauliString::PauliString(std::vector<Pauli> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("Pauli string must act on at least one qubit");
}

PauliString PauliString::identity(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("qubit count must be positive");
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(num_qubits), Pauli::I));
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Pauli p : symbols_) out.push_back(to_char(p));
  return out;
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(),
                                        [](Pauli p) { return p != Pauli::I; }));
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), Pauli::Y));
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t mask = 0;
  const int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    const Pauli p = symbols_[static_cast<std::size_t>(q)];
    if (p == Pauli::X || p == Pauli::Y) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t mask = 0;
  const int n = num_qubits();
  for (int q = 0; q < n; ++q) {
    const Pauli p = symbols_[static_cast<std::size_t>(q)];
    if (p == Pauli::Z || p == Pauli::Y) mask |= std::uint64_t{1} << (n - 1 - q);
  }
  return mask;
}

PauliString tensor(Pauli head, const PauliString& tail) {
  std::vector<Pauli> symbols;
  symbols.reserve(tail.symbols().size() + 1);
  symbols.push_back(head);
  symbols.insert(symbols.end(), tail.symbols().begin(), tail.symbols().end());
  return PauliString(std::move(symbols));
}

Parity y_parity(const PauliString& p) { return p.y_count() % 2 == 0 ? Parity::Even : Parity::Odd; }

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("qubit count must be positive");
}

PauliSum::PauliSum(int num_qubits, std::vector<PauliTerm> terms) : PauliSum(num_qubits) {
  for (const auto& t : terms) add_term(t.coeff, t.pauli);
  std::erase_if(terms_, [](const PauliTerm& t) { return t.coeff == 0.0; });
}

PauliSum::PauliSum(double coeff, PauliString pauli) : PauliSum(pauli.num_qubits()) {
  if (coeff != 0.0) terms_.push_back({coeff, std::move(pauli)});
}

void PauliSum::add_term(double coeff, const PauliString& pauli) {
  if (pauli.num_qubits() != num_qubits_) {
    throw InvalidArgument("Pauli string '" + pauli.str() + "' does not act on " +
                          std::to_string(num_qubits_) + " qubits");
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const PauliTerm& t) { return t.pauli == pauli; });
  if (it != terms_.end()) {
    it->coeff += coeff;
  } else {
    terms_.push_back({coeff, pauli});
  }
}

double PauliSum::l1_norm() const {
  double total = 0.0;
  for (const auto& t : terms_) total += std::abs(t.coeff);
  return total;
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (other.num_qubits_ != num_qubits_) throw InvalidArgument("qubit count mismatch in PauliSum addition");
  std::vector<PauliTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return PauliSum(num_qubits_, std::move(all));
}

PauliSum PauliSum::operator*(double scale) const {
  std::vector<PauliTerm> scaled = terms_;
  for (auto& t : scaled) t.coeff *= scale;
  return PauliSum(num_qubits_, std::move(scaled));
}

bool PauliSum::operator==(const PauliSum& other) const {
  if (num_qubits_ != other.num_qubits_ || terms_.size() != other.terms_.size()) return false;
  return std::all_of(terms_.begin(), terms_.end(), [&](const PauliTerm& t) {
    return std::find(other.terms_.begin(), other.terms_.end(), t) != other.terms_.end();
  });
}

namespace {

void require_dense(int num_qubits) {
  if (num_qubits > kDenseQubitCap) {
    throw CapacityError("dense materialization limited to " + std::to_string(kDenseQubitCap) +
                        " qubits, requested " + std::to_string(num_qubits));
  }
}

}  // namespace

Eigen::Matrix2cd single_qubit_matrix(Pauli p) {
  const Complex i(0, 1);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  require_dense(p.num_qubits());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  // Build right to left so each new factor lands on the more significant qubit.
  for (auto it = p.symbols().rbegin(); it != p.symbols().rend(); ++it) {
    const Eigen::Matrix2cd factor = single_qubit_matrix(*it);
    const Eigen::Index d = out.rows();
    Eigen::MatrixXcd next(2 * d, 2 * d);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next.block(r * d, c * d, d, d) = factor(r, c) * out;
    }
    out = std::move(next);
  }
  return out;
}

Eigen::MatrixXcd dense_matrix(const PauliSum& h) {
  require_dense(h.num_qubits());
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) out += t.coeff * dense_matrix(t.pauli);
  return out;
}

double expectation(const Eigen::VectorXcd& s, const Eigen::MatrixXcd& o) {
  if (o.rows() != o.cols() || o.rows() != s.size()) throw InvalidArgument("operator/state dimension mismatch");
  if ((o - o.adjoint()).cwiseAbs().maxCoeff() > kHermiticityTolerance) {
    throw InvalidArgument("observable is not Hermitian");
  }
  return s.dot(o * s).real();
}

}  // namespace embedsim
