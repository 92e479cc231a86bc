#include "adele/bigint.hpp"

#include <stdexcept>

namespace adele {

Rat parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty decimal");
    std::string digits;
    digits.reserve(s.size());
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    long frac_digits = -1;
    bool any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("two decimal points: " + s);
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
            any = true;
        } else if (c == '/') {
            // also accept exact fractions a/b
            Rat r(s);
            r.canonicalize();
            return r;
        } else {
            throw std::invalid_argument("bad decimal: " + s);
        }
    }
    if (!any) throw std::invalid_argument("bad decimal: " + s);
    Rat r(parse_int(digits.empty() ? "0" : digits)); // explicit base 10: "007" stays decimal
    if (frac_digits > 0) r /= Rat(int_pow(10ul, (unsigned long)frac_digits));
    if (neg) r = -r;
    r.canonicalize();
    return r;
}

} // namespace adele
