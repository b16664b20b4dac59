#include "glab/rational.hpp"

#include <stdexcept>

namespace glab {

Rational frac(long a, long b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view s) {
  std::string buf;
  buf.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      buf.push_back('-');
      i += 2;
    } else if (c != ' ' && c != '+') {
      buf.push_back(static_cast<char>(c));
    }
  }
  if (buf.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(buf, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational: " + std::string(s));
  q.canonicalize();
  return q;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace glab
