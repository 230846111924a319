#include "triplesym/ints.hpp"

namespace triplesym {

Int icbrt(const Int& n) {
    if (n < 0) return -icbrt(-n);
    if (n == 0) return 0;
    // Newton iteration from an over-estimate; monotone decreasing to the floor.
    unsigned bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << (bits / 3 + 2);
    while (true) {
        Int y = (2 * x + n / (x * x)) / 3;
        if (y >= x) break;
        x = y;
    }
    while (x * x * x > n) --x;
    while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool perfect_cube_root(const Int& n, Int& root) {
    Int c = icbrt(n);
    if (c * c * c == n) { root = c; return true; }
    return false;
}

std::vector<Int> primes_below(unsigned long bound) {
    std::vector<Int> out;
    if (bound <= 2) return out;
    std::vector<bool> composite(bound, false);
    for (unsigned long i = 2; i < bound; ++i) {
        if (composite[i]) continue;
        out.emplace_back(i);
        for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace triplesym
