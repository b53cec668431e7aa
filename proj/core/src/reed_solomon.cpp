#include "ecclink/reed_solomon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecclink {

void RsSpec::validate() const {
    if (symbol_bits < 2 || symbol_bits > 12)
        throw std::invalid_argument("RsSpec: symbol_bits must be in [2, 12]");
    const unsigned q = 1u << symbol_bits;
    if (n < 3 || n > q - 1)
        throw std::invalid_argument("RsSpec: n must be in [3, 2^symbol_bits - 1], got " +
                                    std::to_string(n));
    if (k < 1 || k >= n)
        throw std::invalid_argument("RsSpec: k must be in [1, n - 1], got " + std::to_string(k));
    if (t() < 1)
        throw std::invalid_argument("RsSpec: n - k must leave room for at least one correctable error");
    if (first_root >= q - 1)
        throw std::invalid_argument("RsSpec: first_root must be below the group order");
}

GaloisField ReedSolomon::make_field(const RsSpec& spec) {
    spec.validate();
    return GaloisField(spec.symbol_bits, spec.field_polynomial);
}

ReedSolomon::ReedSolomon(const RsSpec& spec) : spec_(spec), gf_(make_field(spec)) {
    // g(x) = prod_{j=0}^{n-k-1} (x + alpha^(first_root + j)), ascending coefficients
    gen_.assign(1, 1);
    const unsigned nroots = spec_.n - spec_.k;
    for (unsigned j = 0; j < nroots; ++j) {
        const Symbol root = gf_.pow_alpha(static_cast<long long>(spec_.first_root) + j);
        std::vector<Symbol> next(gen_.size() + 1, 0);
        for (std::size_t i = 0; i < gen_.size(); ++i) {
            next[i + 1] = gf_.add(next[i + 1], gen_[i]);
            next[i] = gf_.add(next[i], gf_.mul(root, gen_[i]));
        }
        gen_ = std::move(next);
    }
}

std::vector<Symbol> ReedSolomon::encode(const std::vector<Symbol>& message) const {
    const unsigned n = spec_.n, k = spec_.k, nroots = n - k;
    if (message.size() != k)
        throw std::invalid_argument("ReedSolomon::encode: message must hold exactly k symbols");
    for (Symbol s : message) {
        if (s >= gf_.order())
            throw std::invalid_argument("ReedSolomon::encode: symbol exceeds field order");
    }

    // parity = remainder of message(x) * x^(n-k) divided by g(x);
    // parity[0] is the first parity symbol on the wire (highest power)
    std::vector<Symbol> parity(nroots, 0);
    for (Symbol s : message) {
        const Symbol fb = gf_.add(s, parity.front());
        for (unsigned j = 0; j + 1 < nroots; ++j)
            parity[j] = gf_.add(parity[j + 1], gf_.mul(fb, gen_[nroots - 1 - j]));
        parity[nroots - 1] = gf_.mul(fb, gen_[0]);
    }

    std::vector<Symbol> codeword;
    codeword.reserve(n);
    codeword.insert(codeword.end(), message.begin(), message.end());
    codeword.insert(codeword.end(), parity.begin(), parity.end());
    return codeword;
}

std::optional<std::vector<Symbol>> ReedSolomon::decode(const std::vector<Symbol>& received) const {
    const unsigned n = spec_.n, k = spec_.k, nroots = n - k, t = spec_.t();
    if (received.size() != n)
        throw std::invalid_argument("ReedSolomon::decode: word must hold exactly n symbols");
    for (Symbol s : received) {
        if (s >= gf_.order())
            throw std::invalid_argument("ReedSolomon::decode: symbol exceeds field order");
    }

    // Position i on the wire is the coefficient of x^(n-1-i); syndromes are
    // the received polynomial evaluated at the generator roots.
    std::vector<Symbol> synd(nroots, 0);
    bool clean = true;
    for (unsigned j = 0; j < nroots; ++j) {
        const Symbol a = gf_.pow_alpha(static_cast<long long>(spec_.first_root) + j);
        Symbol acc = 0;
        for (unsigned i = 0; i < n; ++i) acc = gf_.add(gf_.mul(acc, a), received[i]);
        synd[j] = acc;
        clean = clean && acc == 0;
    }
    if (clean) return std::vector<Symbol>(received.begin(), received.begin() + k);

    // Berlekamp-Massey: smallest LFSR generating the syndrome sequence.
    std::vector<Symbol> lambda{1}, prev{1};
    unsigned L = 0, shift = 1;
    Symbol prev_delta = 1;
    for (unsigned ni = 0; ni < nroots; ++ni) {
        Symbol delta = synd[ni];
        for (unsigned i = 1; i < lambda.size() && i <= ni; ++i)
            delta = gf_.add(delta, gf_.mul(lambda[i], synd[ni - i]));
        if (delta == 0) {
            ++shift;
            continue;
        }
        std::vector<Symbol> saved = lambda;
        const Symbol coef = gf_.div(delta, prev_delta);
        if (lambda.size() < prev.size() + shift) lambda.resize(prev.size() + shift, 0);
        for (std::size_t i = 0; i < prev.size(); ++i)
            lambda[i + shift] = gf_.add(lambda[i + shift], gf_.mul(coef, prev[i]));
        if (2 * L <= ni) {
            L = ni + 1 - L;
            prev = std::move(saved);
            prev_delta = delta;
            shift = 1;
        } else {
            ++shift;
        }
    }
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    const unsigned deg = static_cast<unsigned>(lambda.size()) - 1;
    if (L > t || deg != L) return std::nullopt;

    // Chien search over valid positions; root alpha^-j marks an error at
    // wire position n-1-j.
    std::vector<unsigned> loc_exp;  // exponents j of the error locators alpha^j
    for (unsigned j = 0; j < n; ++j) {
        const Symbol x = gf_.pow_alpha(-static_cast<long long>(j));
        Symbol acc = 0;
        for (auto it = lambda.rbegin(); it != lambda.rend(); ++it)
            acc = gf_.add(gf_.mul(acc, x), *it);
        if (acc == 0) loc_exp.push_back(j);
    }
    if (loc_exp.size() != L) return std::nullopt;

    // Forney: omega = synd * lambda mod x^(n-k), then
    // e_j = X^(1-first_root) * omega(1/X) / lambda'(1/X)
    std::vector<Symbol> omega(nroots, 0);
    for (unsigned i = 0; i < nroots; ++i) {
        Symbol acc = 0;
        for (std::size_t j = 0; j < lambda.size() && j <= i; ++j)
            acc = gf_.add(acc, gf_.mul(synd[i - j], lambda[j]));
        omega[i] = acc;
    }

    std::vector<Symbol> corrected = received;
    for (unsigned j : loc_exp) {
        const Symbol x_inv = gf_.pow_alpha(-static_cast<long long>(j));
        Symbol num = 0;
        for (auto it = omega.rbegin(); it != omega.rend(); ++it)
            num = gf_.add(gf_.mul(num, x_inv), *it);
        Symbol den = 0;
        // formal derivative keeps the odd-power terms only
        Symbol xpow = 1;  // (1/X)^(i-1) for i = 1
        for (std::size_t i = 1; i < lambda.size(); i += 2) {
            den = gf_.add(den, gf_.mul(lambda[i], xpow));
            xpow = gf_.mul(xpow, gf_.mul(x_inv, x_inv));
        }
        if (den == 0) return std::nullopt;
        Symbol mag = gf_.div(num, den);
        const long long fr = static_cast<long long>(spec_.first_root);
        mag = gf_.mul(mag, gf_.pow_alpha((1 - fr) * static_cast<long long>(j)));
        corrected[n - 1 - j] = gf_.add(corrected[n - 1 - j], mag);
    }

    // Accept only words that re-check cleanly.
    for (unsigned j = 0; j < nroots; ++j) {
        const Symbol a = gf_.pow_alpha(static_cast<long long>(spec_.first_root) + j);
        Symbol acc = 0;
        for (unsigned i = 0; i < n; ++i) acc = gf_.add(gf_.mul(acc, a), corrected[i]);
        if (acc != 0) return std::nullopt;
    }
    return std::vector<Symbol>(corrected.begin(), corrected.begin() + k);
}

std::vector<Symbol> bits_to_symbols(const Bits& bits, unsigned symbol_bits) {
    if (symbol_bits == 0 || bits.size() % symbol_bits != 0)
        throw std::invalid_argument("bits_to_symbols: bit count must be a multiple of symbol_bits");
    std::vector<Symbol> out(bits.size() / symbol_bits, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Symbol s = 0;
        for (unsigned b = 0; b < symbol_bits; ++b)
            s = static_cast<Symbol>((s << 1) | (bits[i * symbol_bits + b] & 1u));
        out[i] = s;
    }
    return out;
}

Bits symbols_to_bits(const std::vector<Symbol>& symbols, unsigned symbol_bits) {
    Bits out(symbols.size() * symbol_bits, 0);
    for (std::size_t i = 0; i < symbols.size(); ++i)
        for (unsigned b = 0; b < symbol_bits; ++b)
            out[i * symbol_bits + b] = static_cast<std::uint8_t>((symbols[i] >> (symbol_bits - 1 - b)) & 1u);
    return out;
}

}  // namespace ecclink
