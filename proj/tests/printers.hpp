#pragma once

#include <ostream>

#include "qtpieri/render.hpp"
#include "qtpieri/symfunc.hpp"

namespace qtpieri {

inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << to_text(p); }
inline void PrintTo(const RatFun& r, std::ostream* os) { *os << to_text(r); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << "(" << p.str() << ")"; }
inline void PrintTo(const SymFunc& f, std::ostream* os) { *os << to_text(f); }

}  // namespace qtpieri
