#pragma once

#include <optional>
#include <vector>

#include "ecclink/bits.hpp"
#include "ecclink/galois.hpp"

namespace ecclink {

struct RsSpec {
    unsigned symbol_bits = 5;
    unsigned n = 31;
    unsigned k = 21;
    unsigned field_polynomial = 0;  // 0 selects the standard polynomial
    unsigned first_root = 1;        // exponent of the first generator root

    unsigned t() const { return (n - k) / 2; }
    double code_rate() const { return static_cast<double>(k) / static_cast<double>(n); }

    void validate() const;  // throws std::invalid_argument naming the field
};

// Systematic Reed-Solomon codec over GF(2^symbol_bits). Codewords carry the
// message symbols first, then n-k parity symbols. Decoding runs syndromes,
// Berlekamp-Massey, Chien search and Forney; up to t symbol errors are
// corrected. An uncorrectable word yields an empty optional, never a throw
// (beyond-capacity patterns may also miscorrect, as for any bounded-distance
// decoder).
class ReedSolomon {
public:
    explicit ReedSolomon(const RsSpec& spec);

    const RsSpec& spec() const { return spec_; }
    const GaloisField& field() const { return gf_; }

    // generator polynomial, ascending powers, degree n-k, monic
    const std::vector<Symbol>& generator() const { return gen_; }

    std::vector<Symbol> encode(const std::vector<Symbol>& message) const;
    std::optional<std::vector<Symbol>> decode(const std::vector<Symbol>& received) const;

private:
    static GaloisField make_field(const RsSpec& spec);

    RsSpec spec_;
    GaloisField gf_;
    std::vector<Symbol> gen_;
};

// s-bit symbols packed from/to bits, MSB of each symbol first
std::vector<Symbol> bits_to_symbols(const Bits& bits, unsigned symbol_bits);
Bits symbols_to_bits(const std::vector<Symbol>& symbols, unsigned symbol_bits);

}  // namespace ecclink
