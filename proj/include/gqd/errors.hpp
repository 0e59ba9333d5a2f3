#pragma once

#include <stdexcept>
#include <string>

namespace gqd {

enum class Errc {
    NotHermitian,
    TraceNotOne,
    NotPositive,
    NotXShape,
    NotSymmetricX,
    SupportLeak,
    NoConvergence,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::TraceNotOne: return "TraceNotOne";
        case Errc::NotPositive: return "NotPositive";
        case Errc::NotXShape: return "NotXShape";
        case Errc::NotSymmetricX: return "NotSymmetricX";
        case Errc::SupportLeak: return "SupportLeak";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Library error; carries the magnitude of the violated constraint where one
/// is meaningful (e.g. the most negative eigenvalue, the largest off-pattern
/// entry, the leaked weight).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, double magnitude = 0.0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code),
          magnitude_(magnitude) {}

    Errc code() const { return code_; }
    double magnitude() const { return magnitude_; }

private:
    Errc code_;
    double magnitude_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg, double magnitude = 0.0) {
    throw Error(c, msg, magnitude);
}

}  // namespace gqd
