#pragma once

#include <stdexcept>
#include <string>

namespace nlcodim {

/// Witness generation ran out of resampling attempts without producing a
/// certified regular sequence. Reported distinctly from invariant failures.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical postcondition failed (e.g. a residual class identity, or a
/// quotient that is not Gorenstein of the expected socle degree). This is the
/// interesting outcome: it means an invariant was violated on a live instance.
class check_error : public std::runtime_error {
public:
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nlcodim
