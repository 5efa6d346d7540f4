#ifndef CUPMOD_CHECK_HPP
#define CUPMOD_CHECK_HPP

#include <stdexcept>
#include <string>

namespace cupmod {

// Internal invariant check that stays on in release builds. A failure
// means the computation itself went wrong, so it throws instead of
// returning a poisoned result.
inline void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

} // namespace cupmod

#endif
