#ifndef OPAIR_RATIONAL_HPP
#define OPAIR_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace opair {

/// Exact rational scalar. Canonical form is maintained by GMP: lowest terms,
/// positive denominator. All arithmetic in the library is exact; there is no
/// floating point anywhere.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat rat_parse(const std::string& s);

/// Lowest-terms string form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& x);

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }

}  // namespace opair

#endif
