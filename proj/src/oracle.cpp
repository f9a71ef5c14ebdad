#include "hkg/oracle.hpp"

#include "hkg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hkg::oracle {

namespace {

std::vector<std::int64_t> checked(const std::vector<std::int64_t>& gens) {
    if (gens.empty()) throw EmptyGenerators();
    for (auto g : gens) {
        if (g <= 0) throw InvalidGenerators("oracle generator must be positive");
    }
    auto out = gens;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t gcd_all(const std::vector<std::int64_t>& gens) {
    std::int64_t d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    return d;
}

void enumerate(const std::vector<std::int64_t>& gens, std::size_t idx, std::int64_t value,
               std::int64_t bound, std::int64_t max_coeff, std::set<std::int64_t>& out) {
    if (idx == gens.size()) {
        out.insert(value);
        return;
    }
    std::int64_t g = gens[idx];
    for (std::int64_t c = 0; c <= max_coeff && value + c * g <= bound; ++c)
        enumerate(gens, idx + 1, value + c * g, bound, max_coeff, out);
}

}  // namespace

std::set<std::int64_t> oracle_members(const std::vector<std::int64_t>& gens, std::int64_t bound,
                                      const OracleConfig& cfg) {
    auto gs = checked(gens);
    if (bound < 0) throw NegativeInput("oracle bound is negative");
    std::set<std::int64_t> out;
    enumerate(gs, 0, 0, bound, cfg.max_coeff, out);
    return out;
}

std::vector<bool> oracle_membership(const std::vector<std::int64_t>& gens, std::int64_t bound) {
    auto gs = checked(gens);
    if (bound < 0) return {};
    std::vector<bool> mem(static_cast<std::size_t>(bound) + 1, false);
    std::vector<std::int64_t> work{0};
    mem[0] = true;
    while (!work.empty()) {
        std::int64_t x = work.back();
        work.pop_back();
        for (auto g : gs) {
            std::int64_t y = x + g;
            if (y <= bound && !mem[static_cast<std::size_t>(y)]) {
                mem[static_cast<std::size_t>(y)] = true;
                work.push_back(y);
            }
        }
    }
    return mem;
}

std::int64_t oracle_conductor(const std::vector<std::int64_t>& gens) {
    auto gs = checked(gens);
    if (gcd_all(gs) != 1) throw NonCoprimeGenerators("oracle generators have gcd > 1");
    std::int64_t a1 = gs.front();
    std::int64_t bound = std::max<std::int64_t>(64, gs.size() >= 2 ? gs[0] * gs[1] : gs[0]);
    for (;;) {
        auto mem = oracle_membership(gs, bound);
        std::int64_t run = 0;
        for (std::int64_t x = 0; x <= bound; ++x) {
            if (mem[static_cast<std::size_t>(x)]) {
                if (++run == a1) return x - a1 + 1;
            } else {
                run = 0;
            }
        }
        bound *= 2;
        if (bound > (std::int64_t{1} << 30))
            throw SieveLimitExceeded("oracle conductor search exceeded its range");
    }
}

std::vector<std::int64_t> oracle_gaps(const std::vector<std::int64_t>& gens) {
    std::int64_t c = oracle_conductor(gens);
    auto mem = oracle_membership(gens, c);
    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x < c; ++x) {
        if (!mem[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
}

std::vector<std::int64_t> oracle_minimal_generators(const std::vector<std::int64_t>& gens) {
    std::int64_t c = oracle_conductor(gens);
    auto gs = checked(gens);
    std::int64_t a1 = gs.front();
    std::int64_t limit = std::max(c - 1 + a1, a1);
    auto mem = oracle_membership(gens, limit);
    std::vector<std::int64_t> members;
    for (std::int64_t x = 1; x <= limit; ++x) {
        if (mem[static_cast<std::size_t>(x)]) members.push_back(x);
    }
    std::vector<std::int64_t> out;
    for (auto x : members) {
        bool decomposable = false;
        for (auto u : members) {
            if (u >= x) break;
            std::int64_t v = x - u;
            if (v >= 1 && v <= limit && mem[static_cast<std::size_t>(v)]) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(x);
    }
    return out;
}

bool oracle_is_symmetric(const std::vector<std::int64_t>& gens) {
    std::int64_t frob = oracle_conductor(gens) - 1;
    if (frob < 0) return true;
    auto mem = oracle_membership(gens, frob);
    for (std::int64_t x = 0; x <= frob; ++x) {
        bool gap = !mem[static_cast<std::size_t>(x)];
        bool mirror = mem[static_cast<std::size_t>(frob - x)];
        if (gap != mirror) return false;
    }
    return true;
}

}  // namespace hkg::oracle
