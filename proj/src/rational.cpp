#include "liehom/rational.hpp"

#include <cctype>

namespace liehom {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t num_begin = 0;
  if (!text.empty() && text[0] == '-') num_begin = 1;
  const std::size_t slash = text.find('/');
  const std::size_t num_end = (slash == std::string::npos) ? text.size() : slash;
  if (!all_digits(text, num_begin, num_end)) return std::nullopt;
  if (slash != std::string::npos && !all_digits(text, slash + 1, text.size()))
    return std::nullopt;

  Rational value;
  if (mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) return std::nullopt;
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace liehom
