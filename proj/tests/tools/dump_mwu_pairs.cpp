// Prints the seeded binary sample pairs, one line per sample:
//   <index> a|b <values...>
#include <iostream>

#include "mwu_pairs.hpp"

int main() {
    for (int i = 0; i < artmod::testing::kMwuPairs; ++i) {
        const auto [a, b] = artmod::testing::binary_pair(i);
        std::cout << i << " a";
        for (double x : a) std::cout << ' ' << x;
        std::cout << '\n' << i << " b";
        for (double x : b) std::cout << ' ' << x;
        std::cout << '\n';
    }
}
