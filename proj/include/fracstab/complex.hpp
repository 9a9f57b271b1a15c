#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracstab {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Sized for the small systems this library
/// linearizes (n <= 16 in practice).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexVector operator*(const ComplexVector& x) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

double norm2(const ComplexVector& x);

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` (also accepts `j` for the unit).
/// Returns nullopt on malformed input.
std::optional<Complex> parse_complex(std::string_view text);

/// Comma-separated list of complex literals.
std::optional<ComplexVector> parse_complex_list(std::string_view text);

/// Round-trippable `%.17g` decimal.
std::string format_real(double value);

/// `a+bi` with 17 significant digits in each part.
std::string format_complex(Complex z);

}  // namespace fracstab
