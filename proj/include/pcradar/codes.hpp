#pragma once

#include <vector>

namespace pcradar {

// A ±1 code; the symbol content of the transmit waveform.
struct BipolarSequence {
    std::vector<int> symbols;

    int length() const { return static_cast<int>(symbols.size()); }
};

// A {-1,0,+1} code with all zeros confined to leading/trailing pads.
struct PaddedCode {
    std::vector<int> symbols;
    int pad_front = 0;
    int pad_back = 0;

    int length() const { return static_cast<int>(symbols.size()); }
    int core_length() const { return length() - pad_front - pad_back; }
};

// Standard Barker sequence of length n; n must be one of {2,3,4,5,7,11,13}.
BipolarSequence barker(int n);

// Block j of the result is outer.symbols[j] * inner.
BipolarSequence kronecker_product(const BipolarSequence& outer, const BipolarSequence& inner);

// The length-128 reference code: 3 zeros, Barker-11 x Barker-11, 4 zeros.
PaddedCode build_pnc128();

// Duplicates every symbol `factor` consecutive times (samples-per-symbol expansion).
PaddedCode repeat_symbols(const PaddedCode& code, int factor);

} // namespace pcradar
