#include "sadic/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sadic {

std::string decimal_string(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

std::string decimal_string(const Rat& x, int significant) {
    return decimal_string(to_double(x), significant);
}

std::string rational_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (r.set_str(text, 10) != 0)
            throw std::invalid_argument("malformed rational: " + text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    if (text.find_first_of(".eE") == std::string::npos) {
        try {
            return Rat(Int(text));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed integer: " + text);
        }
    }
    // Decimal literal: go through double, then take the exact binary value.
    size_t pos = 0;
    double d = 0;
    try {
        d = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number: " + text);
    }
    if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite number: " + text);
    return Rat(d);
}

double to_double(const Rat& x) { return x.get_d(); }

Rat l1_norm(const RatVec& v) {
    Rat s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

Rat vec_sum(const RatVec& v) {
    Rat s = 0;
    for (const auto& x : v) s += x;
    return s;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<double> to_double_vec(const RatVec& v) {
    std::vector<double> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
    return r;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
    return s;
}

} // namespace sadic
