#include "pcradar/codes.hpp"

#include <stdexcept>
#include <string>

namespace pcradar {

BipolarSequence barker(int n) {
    switch (n) {
    case 2:
        return {{+1, -1}};
    case 3:
        return {{+1, +1, -1}};
    case 4:
        return {{+1, +1, +1, -1}};
    case 5:
        return {{+1, +1, +1, -1, +1}};
    case 7:
        return {{+1, +1, +1, -1, -1, +1, -1}};
    case 11:
        return {{+1, +1, +1, -1, -1, -1, +1, -1, -1, +1, -1}};
    case 13:
        return {{+1, +1, +1, +1, +1, -1, -1, +1, +1, -1, +1, -1, +1}};
    default:
        throw std::invalid_argument("no Barker sequence of length " + std::to_string(n) +
                                    "; supported lengths are 2, 3, 4, 5, 7, 11, 13");
    }
}

BipolarSequence kronecker_product(const BipolarSequence& outer, const BipolarSequence& inner) {
    if (outer.symbols.empty() || inner.symbols.empty()) {
        throw std::invalid_argument("kronecker_product requires non-empty sequences");
    }
    BipolarSequence out;
    out.symbols.reserve(outer.symbols.size() * inner.symbols.size());
    for (int s : outer.symbols) {
        for (int t : inner.symbols) {
            out.symbols.push_back(s * t);
        }
    }
    return out;
}

PaddedCode build_pnc128() {
    const BipolarSequence b11 = barker(11);
    const BipolarSequence core = kronecker_product(b11, b11);
    PaddedCode code;
    code.pad_front = 3;
    code.pad_back = 4;
    code.symbols.reserve(128);
    code.symbols.insert(code.symbols.end(), code.pad_front, 0);
    code.symbols.insert(code.symbols.end(), core.symbols.begin(), core.symbols.end());
    code.symbols.insert(code.symbols.end(), code.pad_back, 0);
    return code;
}

PaddedCode repeat_symbols(const PaddedCode& code, int factor) {
    if (factor < 1) {
        throw std::invalid_argument("repeat factor must be >= 1, got " + std::to_string(factor));
    }
    PaddedCode out;
    out.pad_front = code.pad_front * factor;
    out.pad_back = code.pad_back * factor;
    out.symbols.reserve(code.symbols.size() * static_cast<std::size_t>(factor));
    for (int s : code.symbols) {
        out.symbols.insert(out.symbols.end(), factor, s);
    }
    return out;
}

} // namespace pcradar
