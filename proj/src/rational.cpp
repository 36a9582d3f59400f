#include "latcut/rational.hpp"

#include <sstream>

namespace latcut {

Rat make_rat(const Int& p, const Int& q) {
  if (q == 0) throw Error("rational: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int round_rat(const Rat& r) { return floor_rat(r + make_rat(1, 2)); }

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string int_to_string(const Int& v) { return v.get_str(); }

Rat rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  Int p = int_from_string(slash == std::string_view::npos ? s : s.substr(0, slash));
  Int q = slash == std::string_view::npos ? Int(1) : int_from_string(s.substr(slash + 1));
  if (q == 0) throw Error("rational: zero denominator in \"" + std::string(s) + "\"");
  return make_rat(p, q);
}

Int int_from_string(std::string_view s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), std::string(s).c_str(), 10) != 0)
    throw Error("integer: malformed value \"" + std::string(s) + "\"");
  return v;
}

std::string qvec_to_string(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << rat_to_string(v[i]);
  os << ")";
  return os.str();
}

std::string intvec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

QVec to_qvec(const IntVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error("integer too large for enumeration bound: " + v.get_str());
  return v.get_si();
}

}  // namespace latcut
