#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace sw {

using Rat = mpq_class;
using Int = mpz_class;

// accepts "p", "-p", "p/q"; result is canonical
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline int sign(const Rat& r) { return sgn(r); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int squarefree_part(const Int& n);  // sign kept, square factors removed
std::map<Int, int> factor_integer(const Int& n);  // |n|, n != 0

}  // namespace sw
