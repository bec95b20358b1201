#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paratop/space.hpp"

namespace paratop {

/// One letter x^{+1} or x^{-1} of a free-group word.
struct Letter {
  PointIndex point = 0;
  std::int8_t sign = 1;

  constexpr Letter inverse() const { return Letter{point, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter other) const { return point == other.point && sign == -other.sign; }
  auto operator<=>(const Letter&) const = default;
};

/// Element of the abstract free group over the point alphabet, always held
/// as a reduced word. The empty word is the identity e.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(std::span<const Letter> letters);
  FreeWord(std::initializer_list<Letter> letters)
      : FreeWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  static FreeWord generator(PointIndex x) { return FreeWord{Letter{x, 1}}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// First `n` letters, already reduced.
  FreeWord prefix(std::size_t n) const;

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return concat(u, v); }

/// g u g^-1.
FreeWord conjugate(const FreeWord& g, const FreeWord& u);

/// Image under the homomorphism sending each generator x to image[x].
FreeWord map_letters(const FreeWord& u, std::span<const PointIndex> image);

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const noexcept;
};

/// Element of the free abelian group over the points: a finite-support
/// integer vector with no stored zeros. The empty map is 0_A.
class AbelianVector {
 public:
  AbelianVector() = default;

  static AbelianVector unit(PointIndex p, std::int64_t coeff = 1);
  /// e_to - e_from, the abelian image of the generator from^-1 to.
  static AbelianVector difference(PointIndex to, PointIndex from);

  std::int64_t coeff(PointIndex p) const;
  void add(PointIndex p, std::int64_t delta);
  const std::map<PointIndex, std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// l1 norm.
  std::int64_t norm() const;

  AbelianVector& operator+=(const AbelianVector& other);
  AbelianVector& operator-=(const AbelianVector& other);
  AbelianVector operator-() const;
  friend AbelianVector operator+(AbelianVector a, const AbelianVector& b) { return a += b; }
  friend AbelianVector operator-(AbelianVector a, const AbelianVector& b) { return a -= b; }
  friend AbelianVector operator*(std::int64_t k, const AbelianVector& v);

  auto operator<=>(const AbelianVector&) const = default;

 private:
  std::map<PointIndex, std::int64_t> coeffs_;
};

/// Canonical homomorphism F_a(X) -> A_a(X): signed letter counts.
AbelianVector abelianize(const FreeWord& u);

/// u lies in Z_k(X) iff this returns k.
std::int64_t exponent_sum(const FreeWord& u);
std::int64_t exponent_sum_abelian(const AbelianVector& v);

/// Whitespace-separated atoms `p`, `p^-1` or `p^k`; powers expand to
/// repeated letters and the result is reduced. Empty text is e.
FreeWord parse_word(std::string_view text, const FiniteSpace& space);
/// Inverse of parse_word on reduced words; e formats as "".
std::string format_word(const FreeWord& u, const FiniteSpace& space);

/// Signed sum such as "b - a", "2*b - 3*a + c" or "-a"; empty text is 0_A.
AbelianVector parse_abelian(std::string_view text, const FiniteSpace& space);
/// Canonical sum in point order; 0_A formats as "0".
std::string format_abelian(const AbelianVector& v, const FiniteSpace& space);

}  // namespace paratop
