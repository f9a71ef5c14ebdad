#include "hkg/semigroup.hpp"

#include "hkg/errors.hpp"

#include <algorithm>

namespace hkg {

namespace {

constexpr std::int64_t kSieveCap = std::int64_t{1} << 28;

// forward DP over 0..bound, continuing from the already-filled prefix
void extend_sieve(std::vector<bool>& sieve, const std::vector<std::int64_t>& gens,
                  std::int64_t bound) {
    std::int64_t from = static_cast<std::int64_t>(sieve.size());
    sieve.resize(static_cast<std::size_t>(bound) + 1, false);
    if (from == 0) {
        sieve[0] = true;
        from = 1;
    }
    for (std::int64_t x = from; x <= bound; ++x) {
        for (std::int64_t g : gens) {
            if (g > x) break;
            if (sieve[static_cast<std::size_t>(x - g)]) {
                sieve[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }
}

// smallest start of a run of `len` consecutive members, or -1
std::int64_t find_run(const std::vector<bool>& sieve, std::int64_t len) {
    std::int64_t run = 0;
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(sieve.size()); ++x) {
        if (sieve[static_cast<std::size_t>(x)]) {
            if (++run == len) return x - len + 1;
        } else {
            run = 0;
        }
    }
    return -1;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens,
                                                       std::int64_t min_sieve_bound) {
    if (gens.empty()) throw EmptyGenerators();
    for (const Int& g : gens) {
        if (g <= 0) throw InvalidGenerators("generator " + g.str() + " is not positive");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int d = 0;
    for (const Int& g : gens) d = int_gcd(d, g);
    if (d != 1) throw NonCoprimeGenerators("gcd of generators is " + d.str());

    NumericalSemigroup s;
    s.generators_ = gens;

    // product bound of the two smallest generators; a single generator must
    // be 1 (gcd is 1) and yields the full semigroup
    Int product = gens.size() >= 2 ? gens[0] * gens[1] : gens[0];
    Int want = product;
    if (want < min_sieve_bound) want = min_sieve_bound;
    if (want < 64) want = 64;
    auto bound64 = to_int64(want);
    if (!bound64 || *bound64 > kSieveCap)
        throw SieveLimitExceeded("sieve bound " + want.str() + " exceeds the supported range");

    for (const Int& g : gens) {
        auto v = to_int64(g);
        if (v && *v <= kSieveCap) s.small_.push_back(*v);
    }

    std::int64_t a1 = s.small_.empty() ? kSieveCap : s.small_.front();
    std::int64_t bound = *bound64;
    std::int64_t run_start = -1;
    for (;;) {
        extend_sieve(s.sieve_, s.small_, bound);
        run_start = find_run(s.sieve_, a1);
        if (run_start >= 0) break;
        if (bound >= kSieveCap)
            throw SieveLimitExceeded("conductor exceeds the supported sieve range");
        bound = std::min(kSieveCap, bound * 2);
    }

    s.frobenius_ = run_start - 1;
    s.gap_count_ = 0;
    for (std::int64_t x = 0; x <= s.frobenius_; ++x) {
        if (!s.sieve_[static_cast<std::size_t>(x)]) ++s.gap_count_;
    }
    return s;
}

bool NumericalSemigroup::contains(const Int& x) const {
    if (x < 0) throw NegativeInput("membership query for negative value " + x.str());
    if (x > frobenius_) return true;
    return sieve_[static_cast<std::size_t>(x.convert_to<std::int64_t>())];
}

std::vector<Int> NumericalSemigroup::gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(gap_count_));
    for (std::int64_t x = 1; x <= frobenius_; ++x) {
        if (!sieve_[static_cast<std::size_t>(x)]) out.emplace_back(x);
    }
    return out;
}

std::vector<Int> NumericalSemigroup::minimal_generators() const {
    // every minimal generator is at most frobenius + a1: beyond that,
    // x - a1 is already a positive member
    std::int64_t a1 = small_.empty() ? 1 : small_.front();
    std::int64_t limit = std::max(frobenius_ + a1, a1);
    std::vector<std::int64_t> mingens;
    auto member = [&](std::int64_t x) {
        if (x > frobenius_) return true;
        return x >= 0 && sieve_[static_cast<std::size_t>(x)];
    };
    // x = u + v with positive members u, v can always be rewritten with u a
    // minimal generator, so testing the minimal generators found so far is enough
    for (std::int64_t x = 1; x <= limit; ++x) {
        if (!member(x)) continue;
        bool decomposable = false;
        for (std::int64_t g : mingens) {
            if (x - g >= a1 && member(x - g)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) mingens.push_back(x);
    }
    return {mingens.begin(), mingens.end()};
}

bool NumericalSemigroup::is_symmetric() const {
    for (std::int64_t x = 0; x <= frobenius_; ++x) {
        bool x_member = sieve_[static_cast<std::size_t>(x)];
        bool mirror_member = sieve_[static_cast<std::size_t>(frobenius_ - x)];
        if (x_member == mirror_member) return false;
    }
    return true;
}

std::vector<bool> NumericalSemigroup::sieve_upto(std::int64_t bound) const {
    if (bound < 0) return {};
    std::vector<bool> out(static_cast<std::size_t>(bound) + 1, true);
    std::int64_t upto = std::min<std::int64_t>(bound, frobenius_);
    for (std::int64_t x = 0; x <= upto; ++x)
        out[static_cast<std::size_t>(x)] = sieve_[static_cast<std::size_t>(x)];
    return out;
}

std::vector<Int> NumericalSemigroup::members_upto(const Int& bound) const {
    if (bound < 0) return {};
    auto b = to_int64(bound);
    if (!b || *b > kSieveCap)
        throw SieveLimitExceeded("cannot materialize members up to " + bound.str());
    std::vector<Int> out;
    for (std::int64_t x = 0; x <= *b; ++x) {
        if (x > frobenius_ || sieve_[static_cast<std::size_t>(x)]) out.emplace_back(x);
    }
    return out;
}

Int NumericalSemigroup::count_members_upto(const Int& bound) const {
    if (bound < 0) return 0;
    if (bound > frobenius_) return bound + 1 - gap_count_;
    std::int64_t b = bound.convert_to<std::int64_t>();
    Int count = 0;
    for (std::int64_t x = 0; x <= b; ++x) {
        if (sieve_[static_cast<std::size_t>(x)]) ++count;
    }
    return count;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& other) const {
    if (frobenius_ != other.frobenius_ || gap_count_ != other.gap_count_) return false;
    for (std::int64_t x = 1; x <= frobenius_; ++x) {
        if (sieve_[static_cast<std::size_t>(x)] != other.sieve_[static_cast<std::size_t>(x)])
            return false;
    }
    return true;
}

NumericalSemigroup scale_extend(const NumericalSemigroup& s, const Int& q, const Int& lam) {
    if (q <= 0 || lam <= 0)
        throw InvalidGenerators("scale_extend requires positive scale and adjoined element");
    std::vector<Int> gens;
    gens.reserve(s.generators().size() + 1);
    for (const Int& g : s.generators()) gens.push_back(g * q);
    gens.push_back(lam);
    try {
        return NumericalSemigroup::from_generators(std::move(gens));
    } catch (const NonCoprimeGenerators& e) {
        throw ResultNotNumerical(e.what());
    }
}

TelescopicChain make_telescopic_chain(const std::vector<Int>& ordered_gens) {
    if (ordered_gens.empty()) throw EmptyGenerators();
    for (const Int& g : ordered_gens) {
        if (g <= 0) throw InvalidGenerators("generator " + g.str() + " is not positive");
    }
    TelescopicChain chain;
    chain.ordered_generators = ordered_gens;
    chain.gcd_tower.reserve(ordered_gens.size());
    Int d = 0;
    for (const Int& g : ordered_gens) {
        d = int_gcd(d, g);
        chain.gcd_tower.push_back(d);
    }
    if (chain.gcd_tower.back() != 1)
        throw NonCoprimeGenerators("gcd of chain is " + chain.gcd_tower.back().str());

    chain.is_telescopic = true;
    for (std::size_t i = 1; i < ordered_gens.size(); ++i) {
        const Int& d_prev = chain.gcd_tower[i - 1];
        std::vector<Int> scaled;
        scaled.reserve(i);
        for (std::size_t j = 0; j < i; ++j) scaled.push_back(ordered_gens[j] / d_prev);
        auto prefix = NumericalSemigroup::from_generators(std::move(scaled));
        if (!prefix.contains(ordered_gens[i] / chain.gcd_tower[i])) {
            chain.is_telescopic = false;
            break;
        }
    }
    return chain;
}

std::vector<Int> unique_representation(const TelescopicChain& chain, const Int& x) {
    if (!chain.is_telescopic) throw NotTelescopic("chain is not telescopic");
    if (x < 0) throw NotAMember(x.str() + " is negative");

    const auto& a = chain.ordered_generators;
    const auto& d = chain.gcd_tower;
    std::size_t k = a.size();
    std::vector<Int> nu(k, 0);
    // peel exponents from the top: nu_j is determined modulo d_{j-1}/d_j,
    // and the remainder stays divisible by d_{j-1}
    Int rest = x;
    for (std::size_t j = k; j >= 2; --j) {
        const Int& dj = d[j - 1];
        const Int& dprev = d[j - 2];
        Int m = dprev / dj;
        if (m == 1) continue;
        Int aj = a[j - 1] / dj;
        Int r = rest / dj;
        nu[j - 1] = (r % m) * mod_inverse(aj, m) % m;
        rest -= nu[j - 1] * a[j - 1];
        if (rest < 0) throw NotAMember(x.str() + " is not a member of the chain semigroup");
    }
    if (rest % a[0] != 0) throw NotAMember(x.str() + " is not a member of the chain semigroup");
    nu[0] = rest / a[0];
    return nu;
}

}  // namespace hkg
