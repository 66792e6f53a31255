#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

// Exact arbitrary-precision rational. GMP keeps values canonical:
// reduced, denominator > 0, so operator== is structural equality.
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accepts "p", "-p/q" and tolerates surrounding spaces.
inline Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
    try {
        return Rat(t);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

using QVec = std::vector<Rat>;

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline QVec& add_scaled(QVec& dst, const Rat& c, const QVec& src) {
    if (c == 0) return dst;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (src[i] != 0) dst[i] += c * src[i];
    return dst;
}

inline QVec scaled(const QVec& v, const Rat& c) {
    QVec r(v.size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r[i] = c * v[i];
    return r;
}

}  // namespace axial
