#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latcut {

// All geometry in this library is exact. Scalars are arbitrary-precision
// integers and canonical rationals (reduced, positive denominator, 0/1 zero)
// backed by GMP.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p/q in canonical form. Throws on q == 0.
Rat make_rat(const Int& p, const Int& q);
inline Rat make_rat(long p, long q) { return make_rat(Int(p), Int(q)); }

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
bool is_integer(const Rat& r);

// Nearest integer, ties toward +infinity: floor(r + 1/2).
Int round_rat(const Rat& r);

// "p/q", or "p" when q == 1.
std::string rat_to_string(const Rat& r);
std::string int_to_string(const Int& v);

// Parses "p" or "p/q". Throws Error on malformed input or zero denominator.
Rat rat_from_string(std::string_view s);
Int int_from_string(std::string_view s);

std::string qvec_to_string(const QVec& v);
std::string intvec_to_string(const IntVec& v);

QVec to_qvec(const IntVec& v);

// Conversion for loop bounds; throws if the value does not fit.
long to_long(const Int& v);

}  // namespace latcut
