#pragma once

namespace superkit {

/// Z_2 grading: 0 = even (bosonic, commuting), 1 = odd (fermionic, anticommuting).
enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return Parity((static_cast<unsigned>(a) ^ static_cast<unsigned>(b)) & 1u);
}

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }

constexpr const char* to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

}  // namespace superkit
