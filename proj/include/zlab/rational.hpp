#ifndef ZLAB_RATIONAL_HPP
#define ZLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace zlab {

// Exact rational coefficient type. All arithmetic in the library is exact;
// equality of values is equality of canonical fractions.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace zlab

#endif
