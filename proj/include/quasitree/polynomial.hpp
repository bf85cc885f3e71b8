#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasitree {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in N variables with exact integer coefficients.
///
/// Exponents are signed so that Laurent intermediates (e.g. a substitution
/// Z -> t*Y^-2) can be represented; zero coefficients are never stored.
template <std::size_t N>
class SparsePoly {
 public:
  using Exponents = std::array<int, N>;
  using Terms = std::map<Exponents, BigInt>;

  SparsePoly() = default;

  static SparsePoly constant(const BigInt& c) {
    SparsePoly p;
    p.add_term(Exponents{}, c);
    return p;
  }

  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  BigInt coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  bool has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
      for (int v : e)
        if (v < 0) return true;
    return false;
  }

  /// Evaluation at integer points; requires nonnegative exponents.
  BigInt evaluate(const std::array<BigInt, N>& at) const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
      BigInt term = c;
      for (std::size_t i = 0; i < N; ++i) term *= boost::multiprecision::pow(at[i], e[i]);
      sum += term;
    }
    return sum;
  }

  SparsePoly& operator+=(const SparsePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Ascending canonical order, e.g. `1 + Y*Z - 2*X^2`.
  std::string to_text(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      const BigInt mag = negative ? BigInt(-c) : c;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out << mag;
      else if (mag == 1)
        out << mono;
      else
        out << mag << '*' << mono;
    }
    return out.str();
  }

 private:
  Terms terms_;
};

/// C(X, Y, Z).
using TriVarPoly = SparsePoly<3>;
/// q(t, Y), exponents ordered (t, Y).
using BiVarPoly = SparsePoly<2>;

/// q(t) = sum_j a_j t^j with a_j the number of genus-j quasi-trees.
class QuasiTreePoly {
 public:
  QuasiTreePoly() = default;
  explicit QuasiTreePoly(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt evaluate(const BigInt& t) const;
  BigInt total() const { return evaluate(1); }

  /// `21 + 6t`, `3`, `5 + 3t^2`.
  std::string to_text() const;

  friend bool operator==(const QuasiTreePoly&, const QuasiTreePoly&) = default;

 private:
  std::vector<BigInt> coeffs_;  // trailing zeros trimmed
};

}  // namespace quasitree
