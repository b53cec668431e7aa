#include "ecclink/galois.hpp"

#include <stdexcept>
#include <string>

namespace ecclink {

unsigned GaloisField::default_primitive_poly(unsigned symbol_bits) {
    switch (symbol_bits) {
        case 2: return 0b111;              // x^2 + x + 1
        case 3: return 0b1011;             // x^3 + x + 1
        case 4: return 0b10011;            // x^4 + x + 1
        case 5: return 0b100101;           // x^5 + x^2 + 1
        case 6: return 0b1000011;          // x^6 + x + 1
        case 7: return 0b10001001;         // x^7 + x^3 + 1
        case 8: return 0b100011101;        // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0b1000010001;       // x^9 + x^4 + 1
        case 10: return 0b10000001001;     // x^10 + x^3 + 1
        case 11: return 0b100000000101;    // x^11 + x^2 + 1
        case 12: return 0b1000001010011;   // x^12 + x^6 + x^4 + x + 1
        default: return 0;
    }
}

GaloisField::GaloisField(unsigned symbol_bits, unsigned primitive_poly) : m_(symbol_bits) {
    if (m_ < 2 || m_ > 12)
        throw std::invalid_argument("GaloisField: symbol_bits must be in [2, 12], got " +
                                    std::to_string(m_));
    q_ = 1u << m_;
    poly_ = primitive_poly == 0 ? default_primitive_poly(m_) : primitive_poly;
    if ((poly_ >> m_) != 1u)
        throw std::invalid_argument("GaloisField: primitive polynomial degree must equal symbol_bits");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);

    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<Symbol>(x);
        log_[x] = i;
        x <<= 1;
        if (x & q_) x ^= poly_;
    }
    if (x != 1)
        throw std::invalid_argument("GaloisField: polynomial is not primitive");
    // A shorter-than-full cycle leaves some elements unvisited; catch it.
    for (unsigned a = 1; a < q_; ++a) {
        if (exp_[log_[a]] != a)
            throw std::invalid_argument("GaloisField: polynomial is not primitive");
    }
    for (unsigned i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
}

Symbol GaloisField::div(Symbol a, Symbol b) const {
    if (b == 0) throw std::domain_error("GaloisField: division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + (q_ - 1) - log_[b]];
}

Symbol GaloisField::inv(Symbol a) const {
    if (a == 0) throw std::domain_error("GaloisField: zero has no inverse");
    return exp_[(q_ - 1) - log_[a]];
}

Symbol GaloisField::pow_alpha(long long e) const {
    const long long n = static_cast<long long>(q_) - 1;
    long long r = e % n;
    if (r < 0) r += n;
    return exp_[static_cast<std::size_t>(r)];
}

unsigned GaloisField::log_alpha(Symbol a) const {
    if (a == 0) throw std::domain_error("GaloisField: log of zero");
    if (a >= q_) throw std::domain_error("GaloisField: element out of range");
    return log_[a];
}

}  // namespace ecclink
