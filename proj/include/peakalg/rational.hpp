#ifndef PEAKALG_RATIONAL_HPP
#define PEAKALG_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace peakalg {

/// Exact rational scalar used by every linear-algebra routine in the library.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" into a canonicalised rational.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace peakalg

#endif
