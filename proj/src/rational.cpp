#include "operalg/rational.hpp"

#include <cctype>

namespace operalg {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  // mpq_class accepts whitespace and some exotic bases; be stricter.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t j = digits(i);
  if (j == i) throw InputError("bad rational literal: " + s);
  if (j < s.size()) {
    if (s[j] != '/') throw InputError("bad rational literal: " + s);
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size())
      throw InputError("bad rational literal: " + s);
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("bad rational literal: " + s);
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw InputError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& r, long n) {
  if (n == 0) return Rat(1);
  if (r == 0) {
    if (n < 0) throw InputError("negative power of zero");
    return Rat(0);
  }
  Rat base = n > 0 ? r : Rat(1) / r;
  unsigned long e = n > 0 ? static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(-n);
  Rat out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace operalg
