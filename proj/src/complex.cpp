#include "fracstab/complex.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fracstab/errors.hpp"

namespace fracstab {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexVector ComplexMatrix::operator*(const ComplexVector& x) const {
  if (x.size() != cols_) throw DimensionError("ComplexMatrix: vector size mismatch");
  ComplexVector y(rows_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("ComplexMatrix: shape mismatch");
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
  return m;
}

double norm2(const ComplexVector& x) {
  double s = 0.0;
  for (const auto& c : x) s += std::norm(c);
  return std::sqrt(s);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

// Imaginary part literal without the trailing unit: "", "+", "-" mean +-1.
std::optional<double> parse_imag_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s);
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;
  const char last = s.back();
  if (last != 'i' && last != 'j' && last != 'I' && last != 'J') {
    const auto re = parse_real(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  s.remove_suffix(1);
  // Split at the last sign that is not the leading sign and not part of an
  // exponent such as 1e-3.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_imag_coefficient(s);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = parse_real(s.substr(0, split));
  const auto im = parse_imag_coefficient(s.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::optional<ComplexVector> parse_complex_list(std::string_view text) {
  ComplexVector out;
  while (true) {
    const auto comma = text.find(',');
    const auto value = parse_complex(text.substr(0, comma));
    if (!value) return std::nullopt;
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_complex(Complex z) {
  std::string s = format_real(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    s += '-';
    s += format_real(-im);
  } else {
    s += '+';
    s += format_real(im);
  }
  s += 'i';
  return s;
}

}  // namespace fracstab
