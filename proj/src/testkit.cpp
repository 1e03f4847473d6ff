#include "maxlin/testkit.hpp"

#include "maxlin/errors.hpp"

#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace maxlin {

std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

// In-place Walsh-Hadamard transform: out[t] = sum_s in[s] * (-1)^popcount(s&t).
template <typename Int>
void walsh_hadamard(std::vector<Int>& data) {
    for (std::size_t len = 1; len < data.size(); len <<= 1) {
        for (std::size_t block = 0; block < data.size(); block += len << 1) {
            for (std::size_t i = block; i < block + len; ++i) {
                Int a = data[i];
                Int b = data[i + len];
                data[i] = a + b;
                data[i + len] = a - b;
            }
        }
    }
}

// Lexicographic key with x1 most significant and +1 preferred: the bit
// reversal of the negative-assignment mask.
std::uint64_t lex_key(std::uint64_t mask, std::size_t n) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) key |= std::uint64_t{1} << (n - 1 - i);
    return key;
}

template <typename Int>
std::pair<std::uint64_t, Int> best_assignment(std::vector<Int>& table, std::size_t n) {
    walsh_hadamard(table);
    std::uint64_t best_mask = 0;
    std::uint64_t best_key = lex_key(0, n);
    Int best = table[0];
    for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
        if (table[mask] < best) continue;
        const std::uint64_t key = lex_key(mask, n);
        if (table[mask] > best || key < best_key) {
            best = table[mask];
            best_mask = mask;
            best_key = key;
        }
    }
    return {best_mask, best};
}

} // namespace

std::pair<Rational, Assignment> brute_force_max_excess(const LinearSystem& s) {
    const std::size_t n = s.n_vars();
    if (n > 24) throw PreconditionError("brute force limited to n <= 24");

    // Scale all signed weights to integers by the common denominator.
    BigInt denom(1);
    for (const auto& e : s.equations())
        denom = boost::multiprecision::lcm(denom, denominator(e.weight));

    std::vector<BigInt> coef(std::size_t{1} << n, BigInt(0));
    BigInt magnitude(0);
    for (const auto& e : s.equations()) {
        const BigInt c = BigInt(e.rhs) * numerator(e.weight) * (denom / denominator(e.weight));
        coef[e.lhs.low_word()] += c;
        magnitude += abs(c);
    }

    std::uint64_t best_mask = 0;
    BigInt best_scaled;
    if (magnitude <= BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
        std::vector<std::int64_t> table(coef.size());
        for (std::size_t i = 0; i < coef.size(); ++i)
            table[i] = static_cast<std::int64_t>(coef[i]);
        auto [mask, value] = best_assignment(table, n);
        best_mask = mask;
        best_scaled = value;
    } else {
        auto [mask, value] = best_assignment(coef, n);
        best_mask = mask;
        best_scaled = value;
    }

    Assignment x = Assignment::all_plus(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((best_mask >> i) & 1) x.values[i] = -1;
    return {Rational(best_scaled, denom), std::move(x)};
}

LinearSystem tight_instance(int kappa, int r) {
    if (kappa < 2) throw PreconditionError("kappa must be at least 2");
    if (r < 1) throw PreconditionError("r must be at least 1");
    if (r > 62) throw PreconditionError("tight instance blocks limited to r <= 62");
    const std::size_t n = static_cast<std::size_t>(r) * (kappa - 1);
    LinearSystem s(n);
    for (int block = 0; block < kappa - 1; ++block) {
        const int base = block * r; // variables base+1 .. base+r
        for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << r); ++subset) {
            BitVector lhs(n);
            for (int bit = 0; bit < r; ++bit)
                if ((subset >> bit) & 1) lhs.set_var(base + bit + 1);
            s.add(std::move(lhs), -1, Rational(1));
        }
    }
    return s;
}

LinearSystem random_instance(const RandomSpec& spec) {
    const std::size_t n = spec.n_vars;
    const std::size_t r = spec.max_arity;
    if (n < 1 || r < 1 || r > n) throw PreconditionError("need 1 <= r <= n");
    if (spec.max_weight < 1) throw PreconditionError("max_weight must be at least 1");

    BigInt available(0);
    {
        BigInt binom(1);
        for (std::size_t j = 1; j <= r; ++j) {
            binom = binom * (n - j + 1) / j;
            available += binom;
        }
    }
    if (BigInt(spec.n_equations) > available)
        throw PreconditionError("more equations requested than distinct left-hand sides exist");

    LinearSystem s(n);
    std::set<BitVector> used;
    std::uint64_t counter = 0;
    auto draw = [&]() { return mix64(spec.seed, counter++); };

    while (s.size() < spec.n_equations) {
        const std::size_t arity = 1 + draw() % r;
        BitVector lhs(n);
        std::size_t placed = 0;
        while (placed < arity) {
            const std::size_t pos = draw() % n;
            if (!lhs.test(pos)) {
                lhs.set(pos);
                ++placed;
            }
        }
        if (!used.insert(lhs).second) continue;
        const int rhs = (draw() & 1) ? 1 : -1;
        const Rational weight(1 + draw() % spec.max_weight);
        s.add(std::move(lhs), rhs, weight);
    }
    return s;
}

} // namespace maxlin
