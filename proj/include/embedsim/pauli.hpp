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

#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <bit>
#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "embedsim/errors.hpp"

namespace embedsim {

using Complex = std::complex<double>;

/// Single-qubit Pauli symbol, indexed like sigma_mu (I = 0, X = 1, Y = 2, Z = 3).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

enum class Parity { Even, Odd };

/// Tensor product of single-qubit Paulis. Symbol 0 acts on qubit 0, the
/// most significant bit of the amplitude index. Phases are carried by the
/// owning PauliSum, never by the string.
class PauliString {
 public:
  explicit PauliString(std::string_view symbols);
  explicit PauliString(std::vector<Pauli> symbols);

  static PauliString identity(int num_qubits);

  int num_qubits() const { return static_cast<int>(symbols_.size()); }
  Pauli operator[](int qubit) const { return symbols_[static_cast<std::size_t>(qubit)]; }
  const std::vector<Pauli>& symbols() const { return symbols_; }

  std::string str() const;
  /// Number of non-identity factors.
  int weight() const;
  int y_count() const;
  bool is_identity() const { return weight() == 0; }

  // Bit masks over the amplitude index (qubit q <-> bit N-1-q). Only
  // valid for N <= 63.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> symbols_;
};

/// Returns `head` ⊗ `tail`, with `head` on the new most significant qubit.
PauliString tensor(Pauli head, const PauliString& tail);

Parity y_parity(const PauliString& p);

struct PauliTerm {
  double coeff;
  PauliString pauli;

  bool operator==(const PauliTerm&) const = default;
};

/// Real linear combination of Pauli strings over a fixed qubit count.
/// Duplicates are merged in first-appearance order and exact zeros are
/// dropped, so the dense form is always Hermitian.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits);
  PauliSum(int num_qubits, std::vector<PauliTerm> terms);
  PauliSum(double coeff, PauliString pauli);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Sum of |coeff|; bounds the spectral norm.
  double l1_norm() const;

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator*(double scale) const;

  /// Order-insensitive exact comparison of the term sets.
  bool operator==(const PauliSum& other) const;

 private:
  void add_term(double coeff, const PauliString& pauli);

  int num_qubits_;
  std::vector<PauliTerm> terms_;
};

Eigen::Matrix2cd single_qubit_matrix(Pauli p);

/// Kronecker product of the single-qubit factors, qubit 0 leftmost.
Eigen::MatrixXcd dense_matrix(const PauliString& p);
Eigen::MatrixXcd dense_matrix(const PauliSum& h);

namespace detail {

inline std::size_t checked_dimension(int num_qubits, Eigen::Index size) {
  if (num_qubits > 62) throw CapacityError("too many qubits for bitmask indexing");
  const auto dim = std::size_t{1} << num_qubits;
  if (static_cast<std::size_t>(size) != dim) {
    throw InvalidArgument("state dimension " + std::to_string(size) +
                          " does not match " + std::to_string(num_qubits) +
                          "-qubit operator");
  }
  return dim;
}

// Accumulates coeff * P * s into out.
template <typename Derived>
void accumulate_pauli(const PauliString& p, double coeff,
                      const Eigen::MatrixBase<Derived>& s, Eigen::VectorXcd& out) {
  static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::size_t dim = checked_dimension(p.num_qubits(), s.size());
  const std::uint64_t xm = p.x_mask();
  const std::uint64_t zm = p.z_mask();
  const Complex base = coeff * kIPowers[p.y_count() % 4];
  for (std::size_t b = 0; b < dim; ++b) {
    const double sign = (std::popcount(b & zm) & 1U) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(b ^ xm)] +=
        base * sign * Complex(s[static_cast<Eigen::Index>(b)]);
  }
}

}  // namespace detail

/// H·s evaluated term by term on the amplitude bits; H is never
/// materialized. Accepts real or complex vectors.
template <typename Derived>
Eigen::VectorXcd apply_pauli_sum(const PauliSum& h, const Eigen::MatrixBase<Derived>& s) {
  detail::checked_dimension(h.num_qubits(), s.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
  for (const auto& term : h.terms()) detail::accumulate_pauli(term.pauli, term.coeff, s, out);
  return out;
}

template <typename Derived>
Eigen::VectorXcd apply_pauli_string(const PauliString& p, const Eigen::MatrixBase<Derived>& s) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.size());
  detail::accumulate_pauli(p, 1.0, s, out);
  return out;
}

/// <s|O|s> for Hermitian O. The imaginary part of the quadratic form must be
/// roundoff (at most 1e-12 relative to the operator's l1 norm).
template <typename Derived>
double expectation(const Eigen::MatrixBase<Derived>& s, const PauliSum& o) {
  const Eigen::VectorXcd os = apply_pauli_sum(o, s);
  const Complex value = s.template cast<Complex>().dot(os);
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, o.l1_norm())) {
    throw NumericalIntegrityError("expectation value has non-negligible imaginary part");
  }
  return value.real();
}

/// Dense-operator variant; rejects non-Hermitian O.
double expectation(const Eigen::VectorXcd& s, const Eigen::MatrixXcd& o);

}  // namespace embedsim
