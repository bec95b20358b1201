#include "paratop/words.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace paratop {

FreeWord::FreeWord(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter l : letters) {
    if (l.sign != 1 && l.sign != -1) throw Error(ErrorCode::InvalidArgument, "letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::prefix(std::size_t n) const {
  FreeWord out;
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, letters_.size())));
  return out;
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t cut = 0;
  while (cut < a.size() && cut < b.size() && a[a.size() - 1 - cut].cancels(b[cut])) ++cut;
  std::vector<Letter> joined(a.begin(), a.end() - static_cast<std::ptrdiff_t>(cut));
  joined.insert(joined.end(), b.begin() + static_cast<std::ptrdiff_t>(cut), b.end());
  // Both halves are reduced and the seam is clean, so this does no work.
  return FreeWord(joined);
}

FreeWord invert(const FreeWord& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back(it->inverse());
  return FreeWord(out);
}

FreeWord conjugate(const FreeWord& g, const FreeWord& u) { return concat(concat(g, u), invert(g)); }

FreeWord map_letters(const FreeWord& u, std::span<const PointIndex> image) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (const Letter l : u.letters()) out.push_back(Letter{image[l.point], l.sign});
  return FreeWord(out);
}

std::size_t FreeWordHash::operator()(const FreeWord& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const Letter l : w.letters()) {
    h ^= (static_cast<std::size_t>(l.point) << 1) | (l.sign > 0 ? 1U : 0U);
    h *= 1099511628211ULL;
  }
  return h;
}

AbelianVector AbelianVector::unit(PointIndex p, std::int64_t coeff) {
  AbelianVector v;
  v.add(p, coeff);
  return v;
}

AbelianVector AbelianVector::difference(PointIndex to, PointIndex from) {
  AbelianVector v;
  v.add(to, 1);
  v.add(from, -1);
  return v;
}

std::int64_t AbelianVector::coeff(PointIndex p) const {
  const auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void AbelianVector::add(PointIndex p, std::int64_t delta) {
  if (delta == 0) return;
  const auto [it, inserted] = coeffs_.try_emplace(p, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t AbelianVector::norm() const {
  std::int64_t n = 0;
  for (const auto& [p, c] : coeffs_) n += std::abs(c);
  return n;
}

AbelianVector& AbelianVector::operator+=(const AbelianVector& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, c);
  return *this;
}

AbelianVector& AbelianVector::operator-=(const AbelianVector& other) {
  for (const auto& [p, c] : other.coeffs_) add(p, -c);
  return *this;
}

AbelianVector AbelianVector::operator-() const {
  AbelianVector out;
  for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p, -c);
  return out;
}

AbelianVector operator*(std::int64_t k, const AbelianVector& v) {
  AbelianVector out;
  if (k == 0) return out;
  for (const auto& [p, c] : v.coeffs_) out.coeffs_.emplace(p, k * c);
  return out;
}

AbelianVector abelianize(const FreeWord& u) {
  AbelianVector v;
  for (const Letter l : u.letters()) v.add(l.point, l.sign);
  return v;
}

std::int64_t exponent_sum(const FreeWord& u) {
  std::int64_t s = 0;
  for (const Letter l : u.letters()) s += l.sign;
  return s;
}

std::int64_t exponent_sum_abelian(const AbelianVector& v) {
  std::int64_t s = 0;
  for (const auto& [p, c] : v.coeffs()) s += c;
  return s;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::int64_t parse_int(std::string_view text, std::size_t position) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw SyntaxError(position, "expected an integer, found '" + std::string(text) + "'");
  }
  return value;
}

PointIndex lookup(const FiniteSpace& space, std::string_view name, std::size_t position) {
  if (name.empty()) throw SyntaxError(position, "expected a point name");
  try {
    return space.index_of(name);
  } catch (const Error&) {
    throw Error(ErrorCode::UnknownPoint,
                "unknown point '" + std::string(name) + "' at position " + std::to_string(position));
  }
}

}  // namespace

FreeWord parse_word(std::string_view text, const FiniteSpace& space) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    const std::string_view atom = text.substr(start, i - start);
    const std::size_t caret = atom.find('^');
    const PointIndex p = lookup(space, atom.substr(0, caret), start);
    std::int64_t power = 1;
    if (caret != std::string_view::npos) power = parse_int(atom.substr(caret + 1), start + caret + 1);
    const auto sign = static_cast<std::int8_t>(power < 0 ? -1 : 1);
    for (std::int64_t k = 0; k < std::abs(power); ++k) letters.push_back(Letter{p, sign});
  }
  return FreeWord(letters);
}

std::string format_word(const FreeWord& u, const FiniteSpace& space) {
  std::string out;
  for (const Letter l : u.letters()) {
    if (!out.empty()) out += ' ';
    out += space.point(l.point).label();
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

AbelianVector parse_abelian(std::string_view text, const FiniteSpace& space) {
  AbelianVector v;
  const auto b = text.find_first_not_of(" \t\r\n");
  const auto e = text.find_last_not_of(" \t\r\n");
  if (b != std::string_view::npos && text.substr(b, e - b + 1) == "0") {
    // format_abelian's spelling of the zero vector, unless "0" names a point.
    bool named = false;
    for (const auto& p : space.points()) named = named || p.label() == "0";
    if (!named) return v;
  }
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  auto token = [&] {
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != '+' && text[i] != '-' && text[i] != '*') ++i;
    return text.substr(start, i - start);
  };

  bool first = true;
  skip();
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw SyntaxError(i, "expected '+' or '-'");
    }
    const std::size_t start = i;
    std::string_view name = token();
    std::int64_t coeff = 1;
    skip();
    if (i < text.size() && text[i] == '*') {
      coeff = parse_int(name, start);
      ++i;
      skip();
      const std::size_t name_start = i;
      name = token();
      v.add(lookup(space, name, name_start), sign * coeff);
    } else {
      v.add(lookup(space, name, start), sign);
    }
    first = false;
    skip();
  }
  return v;
}

std::string format_abelian(const AbelianVector& v, const FiniteSpace& space) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : v.coeffs()) {
    const std::int64_t mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += space.point(p).label();
  }
  return out;
}

}  // namespace paratop
