#ifndef TRIPLESYM_INTS_HPP
#define TRIPLESYM_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace triplesym {

using Int = boost::multiprecision::cpp_int;

// Base error carrying a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// a mod m in [0, m); m > 0.
inline Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Truncated integer square root.
inline Int isqrt(const Int& n) {
    if (n < 0) throw Error("NegativeSqrt", "isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

// Truncated integer cube root; accepts negative input.
Int icbrt(const Int& n);

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// n == c^3 for some integer c; returns c via out parameter.
bool perfect_cube_root(const Int& n, Int& root);

// Primes below `bound` (exclusive), ascending. bound fits in size_t territory.
std::vector<Int> primes_below(unsigned long bound);

}  // namespace triplesym

#endif
