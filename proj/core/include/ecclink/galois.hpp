#pragma once

#include <cstdint>
#include <vector>

namespace ecclink {

using Symbol = std::uint16_t;

// Arithmetic over GF(2^m) built from a primitive polynomial, m in [2, 12].
// Elements are polynomial bit patterns in [0, 2^m); alpha = x generates the
// multiplicative group, and exp/log tables back mul and div.
class GaloisField {
public:
    // primitive_poly includes the leading x^m term (0b1011 selects x^3+x+1).
    // Pass 0 to use a standard polynomial for the field size.
    explicit GaloisField(unsigned symbol_bits, unsigned primitive_poly = 0);

    unsigned symbol_bits() const { return m_; }
    unsigned order() const { return q_; }
    unsigned primitive_poly() const { return poly_; }

    static unsigned default_primitive_poly(unsigned symbol_bits);

    Symbol add(Symbol a, Symbol b) const { return static_cast<Symbol>(a ^ b); }

    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Symbol div(Symbol a, Symbol b) const;
    Symbol inv(Symbol a) const;

    // alpha^e for any integer exponent, reduced mod (order - 1)
    Symbol pow_alpha(long long e) const;

    // discrete log base alpha; a must be nonzero
    unsigned log_alpha(Symbol a) const;

private:
    unsigned m_ = 0;
    unsigned q_ = 0;
    unsigned poly_ = 0;
    std::vector<Symbol> exp_;    // 2*(q-1) entries so mul never reduces mod q-1
    std::vector<unsigned> log_;  // q entries, index 0 unused
};

}  // namespace ecclink
