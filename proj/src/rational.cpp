#include "treecones/rational.hpp"

#include "treecones/errors.hpp"

namespace treecones {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidInputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw FormatError("empty rational");
  const std::string s(text);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw FormatError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
  if (sgn(q.get_den()) < 0) {
    // set_str accepts "1/-2"; normalize the sign into the numerator.
    q = mpq_class(-q.get_num(), -q.get_den());
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace treecones
