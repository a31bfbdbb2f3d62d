#pragma once

#include "simplicia/complex_json.hpp"

#include <json.hpp>

#include <string>

namespace testing {

/// Complex from inline JSON text, closed under faces.
inline simplicia::GeometricComplex complex_of(const std::string& text, bool close = true)
{
    return simplicia::complex_from_json(nlohmann::json::parse(text), close);
}

/// n/d in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and arithmetic on unreduced values is undefined.
inline simplicia::Rational q(long n, long d)
{
    simplicia::Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string fixture_path(const std::string& name)
{
    return std::string(SIMPLICIA_SOURCE_DIR) + "/fixtures/" + name;
}

}  // namespace testing
