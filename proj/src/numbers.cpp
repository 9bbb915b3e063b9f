#include "stripcount/numbers.hpp"

#include <mutex>
#include <vector>

namespace stripcount {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

BigInt fibonacci(long i) {
    static std::mutex mutex;
    static std::vector<BigInt> cache = {0_mpz, 1_mpz};

    std::lock_guard lock(mutex);
    while (static_cast<long>(cache.size()) <= i) {
        size_t m = cache.size();
        cache.push_back(cache[m - 1] + cache[m - 2]);
    }
    return cache.at(i);
}

std::string decimal_string(const BigRat& value, int digits) {
    BigRat v = value;
    v.canonicalize();
    bool negative = sgn(v) < 0;
    if (negative) v = -v;

    BigInt integral = v.get_num() / v.get_den();
    BigRat frac = v - BigRat(integral);

    std::string out = negative ? "-" : "";
    out += integral.get_str();
    if (digits > 0) {
        out += '.';
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        // truncated, not rounded
        BigInt scaled = frac.get_num() * scale / frac.get_den();
        std::string tail = scaled.get_str();
        out += std::string(digits - tail.size(), '0') + tail;
    }
    return out;
}

}  // namespace stripcount
