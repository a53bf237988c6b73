#ifndef KSTAR_RATIONAL_HPP
#define KSTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kstar {

// Exact rational scalar. All coefficients in this project are mpq_class;
// nothing is ever rounded.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
  try {
    Rational r(text, 10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace kstar

#endif
