#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "commprob/errors.hpp"

namespace commprob {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. All probabilities and thresholds in the exact
// paths are Ratios; floating point never enters a lemma check.
using Ratio = boost::multiprecision::cpp_rational;

inline Ratio make_ratio(long long num, long long den) {
    if (den == 0) throw PreconditionError("ratio with zero denominator");
    return Ratio(num, den);
}

inline std::string to_string(const Ratio& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p" or "p/q". Decimal notation is rejected: exact paths must not
// silently round.
inline Ratio parse_ratio(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    if (text.find('.') != std::string::npos)
        throw ParseError("decimal notation rejected for exact rational: '" + text + "'");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Ratio(BigInt(text));
        const std::string p = text.substr(0, slash);
        const std::string q = text.substr(slash + 1);
        BigInt den(q);
        if (den <= 0) throw ParseError("denominator must be positive in '" + text + "'");
        return Ratio(BigInt(p), den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

inline double to_double(const Ratio& r) {
    return static_cast<double>(r);
}

}  // namespace commprob
