#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace lecycles {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; this does.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return Int(r.get_num()); }
inline Int rat_den(const Rat& r) { return Int(r.get_den()); }

// "3", "-5", "2/7"
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Deterministic 64-bit generator (splitmix64); used everywhere a seeded
// stream of small coefficients is needed, so results are reproducible
// across platforms (std:: distributions are not).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // nonzero integer in [-mag, mag]
    long nonzero(long mag) {
        long v = range(1, mag);
        return (next() & 1) ? v : -v;
    }

    // derive an independent stream (for per-task splitting)
    SplitMix64 split(std::uint64_t salt) {
        SplitMix64 child(state_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

}  // namespace lecycles
